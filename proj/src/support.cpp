#include "atlas/support.hpp"

#include "atlas/error.hpp"

#include <algorithm>
#include <set>

namespace atlas {

Support::Support(std::vector<Point> points) : points_(std::move(points))
{
    if (points_.empty()) fail(ErrorCode::EmptySupport, "support has no points");
    dim_ = points_.front().size();
    for (const auto& p : points_)
        if (p.size() != dim_) fail(ErrorCode::ParseError, "support points have different dimensions");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Support::Support(std::initializer_list<std::initializer_list<long long>> points)
{
    std::vector<Point> pts;
    for (const auto& p : points) pts.push_back(make_point(p));
    *this = Support(std::move(pts));
}

Support Support::translated(const Point& shift) const
{
    check_invariant(shift.size() == dim_, "translation dimension mismatch");
    std::vector<Point> pts = points_;
    for (auto& p : pts)
        for (std::size_t i = 0; i < dim_; ++i) p[i] -= shift[i];
    return Support(std::move(pts));
}

Support Support::mapped(const IntMatrix& linear_map) const
{
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(linear_map.apply(p));
    return Support(std::move(pts));
}

std::vector<Point> Support::differences() const
{
    std::vector<Point> out;
    for (std::size_t k = 1; k < points_.size(); ++k) {
        Point d = points_[k];
        for (std::size_t i = 0; i < dim_; ++i) d[i] -= points_[0][i];
        out.push_back(std::move(d));
    }
    return out;
}

SupportTuple::SupportTuple(std::size_t ambient_rank, std::vector<Support> supports)
    : ambient_rank_(ambient_rank), supports_(std::move(supports))
{
    if (supports_.empty()) fail(ErrorCode::EmptySupport, "tuple has no supports");
    if (supports_.size() > static_cast<std::size_t>(kMaxTupleSize))
        fail(ErrorCode::TooLarge, "tuple has more than " + std::to_string(kMaxTupleSize) + " supports");
    for (const auto& s : supports_)
        if (s.dim() != ambient_rank_) fail(ErrorCode::ParseError, "support dimension differs from ambient rank");
}

std::size_t affine_dimension(const std::vector<Point>& points)
{
    if (points.size() <= 1) return 0;
    const std::size_t dim = points.front().size();
    std::vector<Point> diffs;
    for (std::size_t k = 1; k < points.size(); ++k) {
        Point d = points[k];
        for (std::size_t i = 0; i < dim; ++i) d[i] -= points[0][i];
        diffs.push_back(std::move(d));
    }
    return rank(IntMatrix::from_rows(dim, diffs));
}

namespace {

std::vector<Point> tuple_differences(const SupportTuple& t, IndexSubset s)
{
    std::vector<Point> gens;
    for (int i : s.indices()) {
        auto d = t[i].differences();
        gens.insert(gens.end(), d.begin(), d.end());
    }
    return gens;
}

} // namespace

Sublattice tuple_lattice(const SupportTuple& t, IndexSubset s)
{
    return Sublattice::generated_by(t.ambient_rank(), tuple_differences(t, s));
}

Integer saturation_index(const Sublattice& s)
{
    if (s.rank() == 0) return 1;
    SmithDecomposition snf = smith_decompose(s.basis());
    Integer index = 1;
    for (std::size_t i = 0; i < s.rank(); ++i) index *= snf.d(i, i);
    return index;
}

std::size_t span_dimension(const SupportTuple& t, IndexSubset s)
{
    auto gens = tuple_differences(t, s);
    if (gens.empty()) return 0;
    return rank(IntMatrix::from_rows(t.ambient_rank(), gens));
}

NormalizedTuple normalize(const SupportTuple& t)
{
    NormalizationRecord record;
    record.input_rank = t.ambient_rank();
    std::vector<Support> shifted;
    for (const auto& s : t.supports()) {
        record.translations.push_back(s.anchor());
        shifted.push_back(s.translated(s.anchor()));
    }
    SupportTuple origin_tuple(t.ambient_rank(), shifted);
    Sublattice span = saturate(tuple_lattice(origin_tuple, origin_tuple.all()));
    record.coordinate_map = unimodular_coordinates(span);
    std::vector<Support> mapped;
    for (const auto& s : shifted) mapped.push_back(s.mapped(record.coordinate_map));
    return {SupportTuple(span.rank(), std::move(mapped)), std::move(record)};
}

int defect(const SupportTuple& t, IndexSubset s)
{
    if (s.empty()) fail(ErrorCode::EmptySubset, "defect of the empty subtuple");
    check_invariant(s.is_subset_of(t.all()), "index subset out of range");
    return static_cast<int>(span_dimension(t, s)) - s.size();
}

SupportTuple subtuple(const SupportTuple& t, IndexSubset s)
{
    if (s.empty()) fail(ErrorCode::EmptySubset, "empty subtuple");
    check_invariant(s.is_subset_of(t.all()), "index subset out of range");
    std::vector<Support> out;
    for (int i : s.indices()) out.push_back(t[i]);
    return SupportTuple(t.ambient_rank(), std::move(out));
}

SupportTuple quotient_tuple(const SupportTuple& t, IndexSubset b)
{
    if (b.empty()) fail(ErrorCode::EmptySubset, "quotient by the empty subtuple");
    check_invariant(b.is_subset_of(t.all()), "index subset out of range");
    if (b == t.all()) fail(ErrorCode::FullSubset, "quotient by the whole tuple leaves nothing");
    IntMatrix projection = quotient_map(t.ambient_rank(), tuple_lattice(t, b));
    std::vector<Support> out;
    for (int i : t.all().minus(b).indices()) out.push_back(t[i].translated(t[i].anchor()).mapped(projection));
    return SupportTuple(projection.rows(), std::move(out));
}

Support minkowski_sum(const std::vector<Support>& supports)
{
    check_invariant(!supports.empty(), "Minkowski sum of nothing");
    const std::size_t dim = supports.front().dim();
    std::set<Point> acc(supports.front().begin(), supports.front().end());
    for (std::size_t k = 1; k < supports.size(); ++k) {
        check_invariant(supports[k].dim() == dim, "Minkowski summands differ in dimension");
        std::set<Point> next;
        for (const auto& a : acc)
            for (const auto& b : supports[k]) {
                Point s = a;
                for (std::size_t i = 0; i < dim; ++i) s[i] += b[i];
                next.insert(std::move(s));
            }
        acc = std::move(next);
    }
    return Support(std::vector<Point>(acc.begin(), acc.end()));
}

Support cayley_set(const SupportTuple& t)
{
    const std::size_t n = t.ambient_rank();
    const std::size_t k = static_cast<std::size_t>(t.size());
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& a : t[static_cast<int>(i)]) {
            Point p(n + k);
            for (std::size_t j = 0; j < n; ++j) p[j] = a[j];
            p[n + i] = 1;
            pts.push_back(std::move(p));
        }
    return Support(std::move(pts));
}

} // namespace atlas
