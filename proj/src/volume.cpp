#include "atlas/volume.hpp"

#include "atlas/error.hpp"
#include "hull.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace atlas {

namespace {

struct SpanCoordinates {
    std::vector<Point> points;  ///< in Z^d, same order as the input
    std::size_t dim = 0;
};

SpanCoordinates to_span_coordinates(const std::vector<Point>& points)
{
    const std::size_t n = points.front().size();
    std::vector<Point> diffs;
    for (const auto& p : points) {
        Point d = p;
        for (std::size_t i = 0; i < n; ++i) d[i] -= points.front()[i];
        diffs.push_back(std::move(d));
    }
    Sublattice span = saturate(Sublattice::generated_by(n, diffs));
    IntMatrix coords = unimodular_coordinates(span);
    SpanCoordinates out;
    out.dim = span.rank();
    for (const auto& d : diffs) out.points.push_back(coords.apply(d));
    return out;
}

std::vector<Point> sum_points(const std::vector<Point>& a, const std::vector<Point>& b)
{
    std::set<Point> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Point s = x;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
            out.insert(std::move(s));
        }
    return {out.begin(), out.end()};
}

struct PrunedSet {
    std::vector<Point> points;
    Integer volume;
};

PrunedSet prune(std::vector<Point> points)
{
    detail::Hull h = detail::compute_hull(points, detail::HullDetail::Vertices);
    if (!h.full_dimensional) {
        // Lower-dimensional sums still feed later sums, so reduce them in their own span.
        SpanCoordinates sc = to_span_coordinates(points);
        if (sc.dim == 0) return {{points.front()}, 0};
        detail::Hull low = detail::compute_hull(sc.points, detail::HullDetail::Vertices);
        std::vector<Point> kept;
        for (std::size_t i : low.vertices) kept.push_back(points[i]);
        return {std::move(kept), 0};
    }
    std::vector<Point> kept;
    for (std::size_t i : h.vertices) kept.push_back(points[i]);
    return {std::move(kept), h.normalized_volume};
}

} // namespace

Integer ambient_volume(const std::vector<Point>& points)
{
    check_invariant(!points.empty(), "volume of an empty set");
    if (points.front().empty()) return 1;
    return detail::compute_hull(points, detail::HullDetail::Volume).normalized_volume;
}

Integer normalized_volume(const Support& a)
{
    SpanCoordinates sc = to_span_coordinates(a.points());
    if (sc.dim == 0) return 1;
    return detail::compute_hull(sc.points, detail::HullDetail::Volume).normalized_volume;
}

Integer ambient_mixed_volume(const SupportTuple& t)
{
    const std::size_t d = t.ambient_rank();
    if (static_cast<std::size_t>(t.size()) != d)
        fail(ErrorCode::ArityMismatch, "mixed volume needs as many supports as the lattice rank");
    if (d == 0) return 1;

    const std::uint32_t count = 1u << d;
    std::vector<PrunedSet> sums(count);
    Integer total = 0;
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        const int top = 31 - std::countl_zero(mask);
        const std::uint32_t rest = mask & ~(1u << top);
        std::vector<Point> pts =
            rest == 0 ? t[top].points() : sum_points(sums[rest].points, sums[1u << top].points);
        sums[mask] = prune(std::move(pts));
        const int sz = std::popcount(mask);
        if ((d - static_cast<std::size_t>(sz)) % 2 == 0)
            total += sums[mask].volume;
        else
            total -= sums[mask].volume;
    }
    Integer scale = factorial(static_cast<unsigned>(d));
    check_invariant(total % scale == 0, "polarization sum is not integral");
    Integer mv = total / scale;
    check_invariant(mv >= 0, "negative mixed volume");
    return mv;
}

Integer mixed_volume(const SupportTuple& t)
{
    NormalizedTuple n = normalize(t);
    if (static_cast<std::size_t>(n.tuple.size()) != n.tuple.ambient_rank())
        fail(ErrorCode::ArityMismatch, std::to_string(t.size()) + " supports span a lattice of rank " +
                                           std::to_string(n.tuple.ambient_rank()));
    return ambient_mixed_volume(n.tuple);
}

Integer mixed_volume_in_span(const SupportTuple& t, IndexSubset s)
{
    if (s.empty()) return 1;
    if (defect(t, s) != 0) fail(ErrorCode::NonzeroDefect, "subtuple " + s.to_string() + " has non-zero defect");
    return mixed_volume(subtuple(t, s));
}

Integer generated_mixed_volume(const SupportTuple& t)
{
    Integer mv = mixed_volume(t);
    Integer index = saturation_index(tuple_lattice(t, t.all()));
    check_invariant(mv % index == 0, "mixed volume not divisible by the lattice index");
    return mv / index;
}

std::vector<Face> face_lattice(const Support& a)
{
    SpanCoordinates sc = to_span_coordinates(a.points());
    const std::size_t n = a.size();
    std::vector<std::size_t> everything(n);
    for (std::size_t i = 0; i < n; ++i) everything[i] = i;

    std::set<std::vector<std::size_t>> faces{everything};
    if (sc.dim > 0) {
        detail::Hull h = detail::compute_hull(sc.points, detail::HullDetail::Facets);
        check_invariant(h.full_dimensional, "span coordinates are not full-dimensional");
        std::vector<std::vector<std::size_t>> facets;
        for (const auto& f : h.facets) facets.push_back(f.points);
        std::deque<std::vector<std::size_t>> queue;
        for (const auto& f : facets)
            if (faces.insert(f).second) queue.push_back(f);
        // Every proper face is an intersection of facets.
        while (!queue.empty()) {
            std::vector<std::size_t> face = std::move(queue.front());
            queue.pop_front();
            for (const auto& f : facets) {
                std::vector<std::size_t> meet;
                std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(meet));
                if (meet.empty() || meet == face) continue;
                if (faces.insert(meet).second) queue.push_back(std::move(meet));
            }
        }
    }

    std::vector<Face> out;
    for (const auto& idx : faces) {
        std::vector<Point> pts;
        std::vector<Point> local;
        for (std::size_t i : idx) {
            pts.push_back(a[i]);
            local.push_back(sc.points[i]);
        }
        Face f;
        f.dim = affine_dimension(local);
        f.codim_in_a = sc.dim - f.dim;
        f.subset = Support(std::move(pts));
        f.point_indices = idx;
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
        return x.dim != y.dim ? x.dim < y.dim : x.point_indices < y.point_indices;
    });
    return out;
}

std::vector<std::vector<int>> integer_simplex(int k, int m)
{
    std::vector<std::vector<int>> out;
    if (k <= 0) return out;
    std::vector<int> a(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k - 1) {
            a[static_cast<std::size_t>(pos)] = left;
            out.push_back(a);
            return;
        }
        for (int v = left; v >= 0; --v) {
            a[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

Integer cayley_volume_rhs(const SupportTuple& t)
{
    NormalizedTuple n = normalize(t);
    const int d = static_cast<int>(n.tuple.ambient_rank());
    Integer total = 0;
    for (const auto& exponents : integer_simplex(t.size(), d)) {
        std::vector<Support> repeated;
        for (int i = 0; i < t.size(); ++i)
            for (int r = 0; r < exponents[static_cast<std::size_t>(i)]; ++r) repeated.push_back(n.tuple[i]);
        if (repeated.empty()) {
            total += 1;  // d == 0: the empty mixed volume
            continue;
        }
        total += ambient_mixed_volume(SupportTuple(n.tuple.ambient_rank(), std::move(repeated)));
    }
    return total;
}

} // namespace atlas
