#include "atlas/classifier.hpp"

#include "atlas/error.hpp"

#include <algorithm>
#include <limits>

namespace atlas {

namespace {

/// Integer row echelon basis, extended one vector at a time.
class Echelon {
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    void insert(Point v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = pivots_[r];
            if (v[c] == 0) continue;
            const Integer a = rows_[r][c];
            const Integer b = v[c];
            for (std::size_t j = 0; j < dim_; ++j) v[j] = a * v[j] - b * rows_[r][j];
        }
        std::size_t pivot = 0;
        while (pivot < dim_ && v[pivot] == 0) ++pivot;
        if (pivot == dim_) return;
        Integer g = 0;
        for (const auto& x : v) g = gcd_of(g, x);
        for (auto& x : v) x /= g;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
    }

private:
    std::size_t dim_;
    std::vector<Point> rows_;
    std::vector<std::size_t> pivots_;
};

/// For each mask, whether some subset of it (including itself) is flagged.
std::vector<char> subset_closure(std::vector<char> flags, int k)
{
    for (int i = 0; i < k; ++i)
        for (std::uint32_t mask = 0; mask < flags.size(); ++mask)
            if ((mask >> i) & 1u) flags[mask] |= flags[mask & ~(1u << i)];
    return flags;
}

/// Inclusion-minimal flagged masks, in lexicographic order of index lists.
std::vector<IndexSubset> minimal_flagged(const std::vector<char>& flags, int k)
{
    std::vector<char> below = subset_closure(flags, k);
    std::vector<IndexSubset> out;
    for (std::uint32_t mask = 1; mask < flags.size(); ++mask) {
        if (!flags[mask]) continue;
        bool minimal = true;
        for (int i = 0; i < k && minimal; ++i)
            if (((mask >> i) & 1u) && below[mask & ~(1u << i)]) minimal = false;
        if (minimal) out.emplace_back(mask);
    }
    std::sort(out.begin(), out.end(), [](IndexSubset a, IndexSubset b) { return a.lex_less(b); });
    return out;
}

} // namespace

DefectTable::DefectTable(const SupportTuple& t, int max_size) : k_(t.size())
{
    if (k_ > max_size)
        fail(ErrorCode::TooLarge, "tuple has " + std::to_string(k_) + " supports; the limit is " +
                                      std::to_string(max_size));
    defects_.assign(std::size_t{1} << k_, 0);
    std::vector<std::vector<Point>> diffs;
    for (const auto& s : t.supports()) diffs.push_back(s.differences());

    // Every mask is reached once, as an increasing sequence of indices.
    auto visit = [&](auto&& self, std::uint32_t mask, int next, const Echelon& basis) -> void {
        for (int i = next; i < k_; ++i) {
            Echelon grown = basis;
            for (const auto& d : diffs[static_cast<std::size_t>(i)]) grown.insert(d);
            const std::uint32_t m = mask | (1u << i);
            defects_[m] = static_cast<int>(grown.rank()) - std::popcount(m);
            self(self, m, i + 1, grown);
        }
    };
    visit(visit, 0, 0, Echelon(t.ambient_rank()));
}

DefectScan min_defect_scan(const DefectTable& table)
{
    const int k = table.size();
    const std::uint32_t count = 1u << k;
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t mask = 1; mask < count; ++mask) best = std::min(best, table(IndexSubset(mask)));
    std::vector<char> flags(count, 0);
    for (std::uint32_t mask = 1; mask < count; ++mask) flags[mask] = table(IndexSubset(mask)) == best;
    return {best, minimal_flagged(flags, k)};
}

DefectScan min_defect_scan(const SupportTuple& t) { return min_defect_scan(DefectTable(t)); }

IndexSubset minimal_defect_subtuple(const DefectTable& table)
{
    DefectScan scan = min_defect_scan(table);
    if (scan.min_defect >= 0) fail(ErrorCode::NotLinearlyDependent, "no subtuple has negative defect");
    if (scan.minimizers.size() != 1) {
        std::string all;
        for (auto s : scan.minimizers) all += " " + s.to_string();
        fail(ErrorCode::InvariantViolation, "minimal-defect subtuple is not unique:" + all);
    }
    return scan.minimizers.front();
}

IndexSubset minimal_defect_subtuple(const SupportTuple& t) { return minimal_defect_subtuple(DefectTable(t)); }

std::vector<IndexSubset> circuits(const DefectTable& table)
{
    const int k = table.size();
    std::vector<char> negative(std::size_t{1} << k, 0);
    for (std::uint32_t mask = 1; mask < negative.size(); ++mask) negative[mask] = table(IndexSubset(mask)) < 0;
    std::vector<IndexSubset> out = minimal_flagged(negative, k);
    for (auto c : out) check_invariant(table(c) == -1, "circuit " + c.to_string() + " has defect other than -1");
    return out;
}

std::vector<IndexSubset> circuits(const SupportTuple& t) { return circuits(DefectTable(t)); }

bool is_essential(const DefectTable& table)
{
    const int k = table.size();
    const int dim = table.span_dimension(IndexSubset::full(k));
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        IndexSubset s(mask);
        if (s.size() <= dim && table(s) < 0) return false;
    }
    return true;
}

bool is_essential(const SupportTuple& t) { return is_essential(DefectTable(t)); }

std::string_view kind_name(TupleKind kind)
{
    switch (kind) {
    case TupleKind::LinearlyDependent: return "LinearlyDependent";
    case TupleKind::BK: return "BK";
    case TupleKind::Underdetermined: return "Underdetermined";
    }
    return "Unknown";
}

TupleClass classify(const SupportTuple& t, int max_size)
{
    DefectTable table(t, max_size);
    DefectScan scan = min_defect_scan(table);
    TupleClass out;
    out.min_defect = scan.min_defect;
    out.total_defect = table(t.all());
    out.essential = is_essential(table);
    if (scan.min_defect < 0) {
        out.kind = TupleKind::LinearlyDependent;
        out.minimal_subtuple = minimal_defect_subtuple(table);
        out.circuits = circuits(table);
        const IndexSubset m = *out.minimal_subtuple;
        if (m != t.all()) {
            SupportTuple rest = quotient_tuple(t, m);
            DefectTable quotient(rest, max_size);
            check_invariant(min_defect_scan(quotient).min_defect >= 0,
                            "quotient by the minimal-defect subtuple is linearly dependent");
        }
        check_invariant((out.circuits.size() >= 2) == (scan.min_defect <= -2),
                        "circuit count and minimal defect disagree");
    } else {
        out.kind = out.total_defect == 0 ? TupleKind::BK : TupleKind::Underdetermined;
    }
    return out;
}

} // namespace atlas
