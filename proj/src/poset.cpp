#include "atlas/poset.hpp"

#include "atlas/classifier.hpp"
#include "atlas/error.hpp"
#include "atlas/volume.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace atlas {

namespace {

std::vector<IndexSubset> bk_subtuples(const DefectTable& table)
{
    const int k = table.size();
    const std::uint32_t count = 1u << k;
    // has_negative[m]: some subset of m has negative defect.
    std::vector<char> has_negative(count, 0);
    for (std::uint32_t m = 1; m < count; ++m) has_negative[m] = table(IndexSubset(m)) < 0;
    for (int i = 0; i < k; ++i)
        for (std::uint32_t m = 0; m < count; ++m)
            if ((m >> i) & 1u) has_negative[m] |= has_negative[m & ~(1u << i)];

    std::vector<IndexSubset> out;
    for (std::uint32_t m = 0; m < count; ++m)
        if (!has_negative[m] && table(IndexSubset(m)) == 0) out.emplace_back(m);
    std::sort(out.begin(), out.end(), [](IndexSubset a, IndexSubset b) {
        return a.size() != b.size() ? a.size() < b.size() : a.lex_less(b);
    });
    return out;
}

SupportTuple relative_quotient(const SupportTuple& t, IndexSubset outer, IndexSubset lower)
{
    if (lower.empty()) return normalize(subtuple(t, outer)).tuple;
    return normalize(quotient_tuple(subtuple(t, outer), relative_to(outer, lower))).tuple;
}

void require_bk(const DefectTable& table)
{
    DefectScan scan = min_defect_scan(table);
    const int total = table(IndexSubset::full(table.size()));
    if (scan.min_defect < 0 || total != 0)
        fail(ErrorCode::NotBK, "tuple is not a BK-tuple (minimal defect " + std::to_string(scan.min_defect) +
                                   ", total defect " + std::to_string(total) + ")");
}

} // namespace

std::string_view class_name(IrrClass c) { return c == IrrClass::Lir ? "Lir" : "Nir"; }

bool BkPoset::less_equal(int a, int b) const
{
    return elements[static_cast<std::size_t>(a)].principal_ideal.is_subset_of(
        elements[static_cast<std::size_t>(b)].principal_ideal);
}

std::vector<int> BkPoset::maximal_elements() const
{
    std::vector<int> out;
    for (const auto& e : elements)
        if (upper_covers(e.id).empty()) out.push_back(e.id);
    return out;
}

std::vector<int> BkPoset::minimal_elements() const
{
    std::vector<int> out;
    for (const auto& e : elements)
        if (e.height == 0) out.push_back(e.id);
    return out;
}

std::vector<int> BkPoset::upper_covers(int id) const
{
    std::vector<int> out;
    for (const auto& [lo, hi] : covers)
        if (lo == id) out.push_back(hi);
    return out;
}

std::vector<int> BkPoset::order_filter(int id) const
{
    std::vector<int> out;
    for (const auto& e : elements)
        if (less_equal(id, e.id)) out.push_back(e.id);
    return out;
}

std::vector<std::vector<int>> BkPoset::components() const
{
    std::vector<int> parent(elements.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& [lo, hi] : covers) {
        int a = find(lo), b = find(hi);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (const auto& e : elements) groups[find(e.id)].push_back(e.id);
    std::vector<std::vector<int>> out;
    for (auto& [root, ids] : groups) out.push_back(std::move(ids));
    return out;
}

IndexSubset BkPoset::union_of(const std::vector<int>& ids) const
{
    IndexSubset out;
    for (int id : ids) out = out | elements[static_cast<std::size_t>(id)].block;
    return out;
}

std::vector<IndexSubset> enumerate_bk_subtuples(const SupportTuple& t)
{
    DefectTable table(t);
    require_bk(table);
    std::vector<IndexSubset> out = bk_subtuples(table);
    // Distributive lattice: closed under union and intersection.
    auto present = [&](IndexSubset s) { return std::find(out.begin(), out.end(), s) != out.end(); };
    for (auto a : out)
        for (auto b : out) {
            check_invariant(present(a | b), "BK-subtuples not closed under union");
            check_invariant(present(a & b), "BK-subtuples not closed under intersection");
        }
    return out;
}

bool is_irreducible_bk(const SupportTuple& t)
{
    DefectTable table(t);
    const IndexSubset all = t.all();
    if (table(all) != 0) return false;
    for (std::uint32_t m = 1; m < all.bits(); ++m)
        if (table(IndexSubset(m)) <= 0) return false;
    return true;
}

IrrClass irreducible_class(const SupportTuple& t)
{
    return generated_mixed_volume(t) == 1 ? IrrClass::Lir : IrrClass::Nir;
}

BkPoset build_poset(const SupportTuple& t)
{
    const std::vector<IndexSubset> lattice = enumerate_bk_subtuples(t);

    struct Raw {
        IndexSubset ideal;
        IndexSubset lower;
    };
    std::vector<Raw> raw;
    for (auto j : lattice) {
        if (j.empty()) continue;
        IndexSubset below;
        for (auto s : lattice)
            if (s != j && s.is_subset_of(j)) below = below | s;
        if (below == j) continue;  // join of smaller elements
        check_invariant(std::find(lattice.begin(), lattice.end(), below) != lattice.end(),
                        "lower cover of a join-irreducible is not a BK-subtuple");
        raw.push_back({j, below});
    }

    // Heights: longest chain below, by increasing ideal size.
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.ideal.size() < b.ideal.size(); });
    std::vector<int> height(raw.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (raw[j].ideal != raw[i].ideal && raw[j].ideal.is_subset_of(raw[i].ideal))
                height[i] = std::max(height[i], height[j] + 1);

    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int ba = raw[a].ideal.minus(raw[a].lower).min_index();
        const int bb = raw[b].ideal.minus(raw[b].lower).min_index();
        return height[a] != height[b] ? height[a] < height[b] : ba < bb;
    });

    BkPoset p;
    p.tuple_size = t.size();
    IndexSubset covered;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const Raw& r = raw[order[pos]];
        PosetElement e;
        e.id = static_cast<int>(pos);
        e.principal_ideal = r.ideal;
        e.block = r.ideal.minus(r.lower);
        e.height = height[order[pos]];
        e.quotient = relative_quotient(t, r.ideal, r.lower);
        check_invariant(is_irreducible_bk(e.quotient),
                        "quotient for block " + e.block.to_string() + " is not an irreducible BK-tuple");
        e.quotient_mixed_volume = generated_mixed_volume(e.quotient);
        e.irr_class = e.quotient_mixed_volume == 1 ? IrrClass::Lir : IrrClass::Nir;
        check_invariant((covered & e.block).empty(), "blocks overlap");
        covered = covered | e.block;
        p.elements.push_back(std::move(e));
    }
    check_invariant(covered == t.all(), "blocks do not cover the tuple");

    for (const auto& lo : p.elements)
        for (const auto& hi : p.elements) {
            if (lo.id == hi.id || !p.less_equal(lo.id, hi.id)) continue;
            bool direct = true;
            for (const auto& mid : p.elements)
                if (mid.id != lo.id && mid.id != hi.id && p.less_equal(lo.id, mid.id) && p.less_equal(mid.id, hi.id))
                    direct = false;
            if (direct) p.covers.emplace_back(lo.id, hi.id);
        }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

std::vector<int> maximal_filtration(const BkPoset& p)
{
    std::vector<int> out(p.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

std::vector<SupportTuple> filtration_quotients(const SupportTuple& t, const BkPoset& p, const std::vector<int>& order)
{
    std::vector<SupportTuple> out;
    IndexSubset prefix;
    for (int id : order) {
        IndexSubset next = prefix | p.elements[static_cast<std::size_t>(id)].block;
        check_invariant(defect(t, next) == 0, "filtration prefix " + next.to_string() + " is not a BK-subtuple");
        out.push_back(relative_quotient(t, next, prefix));
        prefix = next;
    }
    return out;
}

} // namespace atlas
