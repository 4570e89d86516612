#include "hull.hpp"

#include "atlas/error.hpp"
#include "atlas/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace atlas::detail {

namespace {

struct Overflow {};

using Fast = long long;
constexpr Fast kFastCoordLimit = Fast(1) << 24;

inline Fast narrow(__int128 v)
{
    if (v > std::numeric_limits<Fast>::max() || v < std::numeric_limits<Fast>::min()) throw Overflow{};
    return static_cast<Fast>(v);
}

inline Fast sub(Fast a, Fast b)
{
    Fast r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline Fast add(Fast a, Fast b)
{
    Fast r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline Fast scale_sub(Fast s, Fast a, Fast b) { return narrow(static_cast<__int128>(s) * a - b); }
inline Fast mul(Fast a, Fast b) { return narrow(static_cast<__int128>(a) * b); }

inline Fast bareiss(Fast a, Fast b, Fast c, Fast d, Fast prev)
{
    return narrow((static_cast<__int128>(a) * b - static_cast<__int128>(c) * d) / prev);
}

inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer scale_sub(long long s, const Integer& a, const Integer& b) { return s * a - b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer bareiss(const Integer& a, const Integer& b, const Integer& c, const Integer& d, const Integer& prev)
{
    return (a * b - c * d) / prev;
}

inline int sign_of(Fast v) { return (v > 0) - (v < 0); }
inline int sign_of(const Integer& v) { return v.sign(); }
inline Integer to_integer(Fast v) { return Integer(v); }
inline Integer to_integer(const Integer& v) { return v; }

/// Determinant of the n x n row-major matrix `a` (destroyed).
template <class T>
T determinant(std::vector<T>& a, std::size_t n)
{
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = bareiss(a[i * n + j], a[k * n + k], a[i * n + k], a[k * n + j], prev);
            a[i * n + k] = T(0);
        }
        prev = a[k * n + k];
    }
    T r = a[n * n - 1];
    return negate ? T(-r) : r;
}

struct Simplex {
    std::vector<std::size_t> vertices;
    int orientation = 0;  ///< orientation * det(v - q) > 0  <=>  q strictly beyond
};

// det(v - q) is affine in q; the placing keeps it as constant + linear part.
template <class T>
struct AffineForm {
    T constant;
    std::vector<T> linear;
};

template <class T>
class Placing {
public:
    Placing(const std::vector<std::vector<T>>& pts, std::size_t dim) : pts_(pts), dim_(dim) {}

    bool run()
    {
        if (!initial_simplex()) return false;
        // Random insertion order; input order from Minkowski sums is very structured.
        std::vector<std::size_t> order;
        for (std::size_t p = 0; p < pts_.size(); ++p)
            if (!in_initial_[p]) order.push_back(p);
        std::mt19937 rng(0x5eed);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t p : order) place(p);
        return true;
    }

    const Integer& volume() const { return volume_; }
    const std::vector<Simplex>& boundary() const { return boundary_; }
    const std::vector<T>& interior_scaled() const { return centroid_sum_; }

private:
    // det(v_1 - q, ..., v_d - q) for the facet vertices v and point q.
    T facet_det(const std::vector<std::size_t>& facet, const std::vector<T>& q) const
    {
        std::vector<T> m(dim_ * dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) m[r * dim_ + c] = sub(pts_[facet[r]][c], q[c]);
        return determinant(m, dim_);
    }

    // Same with q the interior reference point (the centroid of the initial
    // simplex, scaled by d+1 to stay integral). Only the sign is used.
    int interior_sign(const std::vector<std::size_t>& facet) const
    {
        const long long s = static_cast<long long>(dim_ + 1);
        std::vector<T> m(dim_ * dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) m[r * dim_ + c] = scale_sub(s, pts_[facet[r]][c], centroid_sum_[c]);
        return sign_of(determinant(m, dim_));
    }

    AffineForm<T> form_of(const std::vector<std::size_t>& facet) const
    {
        std::vector<T> q(dim_, T(0));
        AffineForm<T> form{facet_det(facet, q), {}};
        for (std::size_t c = 0; c < dim_; ++c) {
            q[c] = T(1);
            form.linear.push_back(sub(facet_det(facet, q), form.constant));
            q[c] = T(0);
        }
        return form;
    }

    T evaluate(std::size_t f, const std::vector<T>& q) const
    {
        const AffineForm<T>& form = forms_[f];
        T value = form.constant;
        for (std::size_t c = 0; c < dim_; ++c) value = add(value, mul(form.linear[c], q[c]));
        return value;
    }

    void add_facet(std::vector<std::size_t> facet)
    {
        int s = interior_sign(facet);
        check_invariant(s != 0, "degenerate boundary simplex in placing triangulation");
        forms_.push_back(form_of(facet));
        boundary_.push_back({std::move(facet), -s});
    }

    bool initial_simplex()
    {
        in_initial_.assign(pts_.size(), false);
        std::vector<std::size_t> chosen{0};
        // Echelon rows of chosen differences, in exact integers.
        std::vector<std::vector<Integer>> echelon;
        std::vector<std::size_t> pivots;
        for (std::size_t p = 1; p < pts_.size() && chosen.size() < dim_ + 1; ++p) {
            std::vector<Integer> v(dim_);
            for (std::size_t c = 0; c < dim_; ++c) v[c] = to_integer(pts_[p][c]) - to_integer(pts_[0][c]);
            for (std::size_t r = 0; r < echelon.size(); ++r) {
                const std::size_t pc = pivots[r];
                if (v[pc] == 0) continue;
                Integer f = v[pc];
                Integer g = echelon[r][pc];
                for (std::size_t c = 0; c < dim_; ++c) v[c] = v[c] * g - echelon[r][c] * f;
            }
            std::size_t pc = 0;
            while (pc < dim_ && v[pc] == 0) ++pc;
            if (pc == dim_) continue;
            echelon.push_back(std::move(v));
            pivots.push_back(pc);
            chosen.push_back(p);
        }
        if (chosen.size() < dim_ + 1) return false;

        centroid_sum_.assign(dim_, T(0));
        for (std::size_t v : chosen) {
            in_initial_[v] = true;
            for (std::size_t c = 0; c < dim_; ++c) centroid_sum_[c] = add(centroid_sum_[c], pts_[v][c]);
        }
        std::vector<std::size_t> rest(chosen.begin() + 1, chosen.end());
        T det0 = facet_det(rest, pts_[chosen[0]]);
        volume_ = abs_value(to_integer(det0));
        for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
            std::vector<std::size_t> facet;
            for (std::size_t j = 0; j < chosen.size(); ++j)
                if (j != skip) facet.push_back(chosen[j]);
            add_facet(std::move(facet));
        }
        return true;
    }

    void place(std::size_t p)
    {
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < boundary_.size(); ++f) {
            T d = evaluate(f, pts_[p]);
            int s = sign_of(d) * boundary_[f].orientation;
            if (s > 0) {
                visible.push_back(f);
                volume_ += abs_value(to_integer(d));
            }
        }
        if (visible.empty()) return;

        std::map<std::vector<std::size_t>, int> ridges;
        for (std::size_t f : visible) {
            const auto& verts = boundary_[f].vertices;
            for (std::size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t j = 0; j < verts.size(); ++j)
                    if (j != skip) ridge.push_back(verts[j]);
                std::sort(ridge.begin(), ridge.end());
                ++ridges[ridge];
            }
        }
        for (auto it = visible.rbegin(); it != visible.rend(); ++it) {
            boundary_[*it] = std::move(boundary_.back());
            boundary_.pop_back();
            forms_[*it] = std::move(forms_.back());
            forms_.pop_back();
        }
        for (auto& [ridge, count] : ridges) {
            if (count != 1) continue;
            std::vector<std::size_t> facet = ridge;
            facet.push_back(p);
            add_facet(std::move(facet));
        }
    }

    const std::vector<std::vector<T>>& pts_;
    std::size_t dim_;
    std::vector<bool> in_initial_;
    std::vector<T> centroid_sum_;
    std::vector<Simplex> boundary_;
    std::vector<AffineForm<T>> forms_;
    Integer volume_ = 0;
};

// Distinct facet hyperplanes of the boundary triangulation. Only the points listed in
// `candidates` are tested for incidence.
std::vector<HullFacet> group_facets(const std::vector<Point>& points, const std::vector<Simplex>& boundary,
                                    const std::vector<Integer>& interior_scaled, std::size_t dim,
                                    const std::vector<std::size_t>& candidates)
{
    std::map<std::pair<Point, Integer>, bool> seen;
    std::vector<HullFacet> out;
    for (const auto& simplex : boundary) {
        const auto& v = simplex.vertices;
        // Normal by cofactor expansion of the (d-1) x d edge matrix.
        std::vector<Point> edges;
        for (std::size_t r = 1; r < dim; ++r) {
            Point e(dim);
            for (std::size_t c = 0; c < dim; ++c) e[c] = points[v[r]][c] - points[v[0]][c];
            edges.push_back(std::move(e));
        }
        Point normal(dim);
        for (std::size_t skip = 0; skip < dim; ++skip) {
            std::vector<Integer> m;
            for (const auto& e : edges)
                for (std::size_t c = 0; c < dim; ++c)
                    if (c != skip) m.push_back(e[c]);
            Integer minor = determinant(m, dim - 1);
            normal[skip] = (skip % 2 == 0) ? minor : Integer(-minor);
        }
        Integer g = 0;
        for (const auto& x : normal) g = gcd_of(g, x);
        check_invariant(g != 0, "zero facet normal");
        for (auto& x : normal) x /= g;
        Integer offset = 0;
        Integer inner = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            offset += normal[c] * points[v[0]][c];
            inner += normal[c] * interior_scaled[c];
        }
        // Interior is scaled by d+1; outward means interior value below offset.
        if (inner > offset * static_cast<long long>(dim + 1)) {
            for (auto& x : normal) x = -x;
            offset = -offset;
        }
        auto key = std::make_pair(normal, offset);
        if (seen.count(key)) continue;
        seen[key] = true;
        HullFacet facet{normal, offset, {}};
        for (std::size_t i : candidates) {
            Integer value = 0;
            for (std::size_t c = 0; c < dim; ++c) value += normal[c] * points[i][c];
            check_invariant(value <= offset, "point beyond a hull facet");
            if (value == offset) facet.points.push_back(i);
        }
        out.push_back(std::move(facet));
    }
    std::sort(out.begin(), out.end(), [](const HullFacet& a, const HullFacet& b) { return a.points < b.points; });
    return out;
}

// A boundary point is a vertex iff the normals of the facets through it have full rank.
std::vector<std::size_t> vertices_of(const std::vector<HullFacet>& facets, const std::vector<std::size_t>& candidates,
                                     std::size_t dim)
{
    std::map<std::size_t, std::vector<Point>> normals;
    for (const auto& f : facets)
        for (std::size_t i : f.points) normals[i].push_back(f.normal);
    std::vector<std::size_t> out;
    for (std::size_t i : candidates) {
        const auto& ns = normals[i];
        if (ns.size() < dim) continue;
        if (atlas::rank(IntMatrix::from_rows(dim, ns)) == dim) out.push_back(i);
    }
    return out;
}

template <class T>
Hull finish(const Placing<T>& placing, const std::vector<Point>& points, std::size_t dim, HullDetail detail)
{
    Hull h;
    h.full_dimensional = true;
    h.normalized_volume = placing.volume();
    std::vector<bool> mark(points.size(), false);
    for (const auto& s : placing.boundary())
        for (std::size_t v : s.vertices) mark[v] = true;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (mark[i]) h.boundary_points.push_back(i);
    if (detail == HullDetail::Volume) return h;
    std::vector<Integer> interior;
    for (const auto& x : placing.interior_scaled()) interior.push_back(to_integer(x));
    if (detail == HullDetail::Vertices) {
        std::vector<HullFacet> facets = group_facets(points, placing.boundary(), interior, dim, h.boundary_points);
        h.vertices = vertices_of(facets, h.boundary_points, dim);
        return h;
    }
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    h.facets = group_facets(points, placing.boundary(), interior, dim, all);
    h.vertices = vertices_of(h.facets, h.boundary_points, dim);
    return h;
}

} // namespace

Hull compute_hull(const std::vector<Point>& points, HullDetail detail)
{
    check_invariant(!points.empty(), "hull of no points");
    const std::size_t dim = points.front().size();
    check_invariant(dim >= 1, "hull requires positive dimension");

    bool small = true;
    for (const auto& p : points)
        for (const auto& x : p)
            if (x > kFastCoordLimit || x < -kFastCoordLimit) small = false;

    if (small) {
        std::vector<std::vector<Fast>> fast(points.size(), std::vector<Fast>(dim));
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t c = 0; c < dim; ++c) fast[i][c] = static_cast<Fast>(points[i][c]);
        try {
            Placing<Fast> placing(fast, dim);
            if (!placing.run()) return Hull{};
            return finish(placing, points, dim, detail);
        } catch (const Overflow&) {
            // fall through to arbitrary precision
        }
    }
    Placing<Integer> placing(points, dim);
    if (!placing.run()) return Hull{};
    return finish(placing, points, dim, detail);
}

} // namespace atlas::detail
