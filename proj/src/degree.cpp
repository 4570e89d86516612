#include "atlas/degree.hpp"

#include "atlas/classifier.hpp"
#include "atlas/error.hpp"

#include <algorithm>

namespace atlas {

namespace {

Support simplex_points(int delta)
{
    std::vector<Point> pts{Point(static_cast<std::size_t>(delta), Integer(0))};
    for (int i = 0; i < delta; ++i) {
        Point e(static_cast<std::size_t>(delta), Integer(0));
        e[static_cast<std::size_t>(i)] = 1;
        pts.push_back(std::move(e));
    }
    return Support(std::move(pts));
}

Support product(const Support& a, const Support& b)
{
    std::vector<Point> pts;
    for (const auto& x : a)
        for (const auto& y : b) {
            Point p = x;
            p.insert(p.end(), y.begin(), y.end());
            pts.push_back(std::move(p));
        }
    return Support(std::move(pts));
}

Point subtract(const Point& a, const Point& b)
{
    Point d = a;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return d;
}

std::string point_text(const Point& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
    return s + ")";
}

Point primitive(Point v)
{
    Integer g = 0;
    for (const auto& x : v) g = gcd_of(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

DegreeResult finish(Integer total, const std::string& what)
{
    if (total <= 0) {
        DegreeResult r{DegreeStatus::NotAHypersurface, total, what + " evaluates to " + to_string(total) +
                                                                  "; the discriminant is not of the requested codimension"};
        return r;
    }
    return DegreeResult::ok(std::move(total));
}

} // namespace

std::string_view status_name(DegreeStatus s)
{
    switch (s) {
    case DegreeStatus::Ok: return "Ok";
    case DegreeStatus::Unsupported: return "Unsupported";
    case DegreeStatus::NotAHypersurface: return "NotAHypersurface";
    }
    return "Unknown";
}

FlatTuple flat_tuple(const SupportTuple& t, IndexSubset m)
{
    const int d = defect(t, m);
    if (d >= 0) fail(ErrorCode::NonnegativeDefect, "subtuple " + m.to_string() + " has defect " + std::to_string(d));
    FlatTuple out;
    out.delta = -d;
    out.base = normalize(subtuple(t, m)).tuple;
    const Support simplex = simplex_points(out.delta);
    std::vector<Support> lifted;
    for (const auto& a : out.base.supports()) lifted.push_back(product(a, simplex));
    out.lifted = SupportTuple(out.base.ambient_rank() + static_cast<std::size_t>(out.delta), std::move(lifted));
    check_invariant(defect(out.lifted, out.lifted.all()) == 0, "lifted tuple does not have zero defect");
    check_invariant(is_irreducible_bk(out.lifted), "lifted tuple is not an irreducible BK-tuple");
    return out;
}

Integer resultant_degree(const SupportTuple& t, IndexSubset m)
{
    Integer deg = mixed_volume(flat_tuple(t, m).lifted);
    check_invariant(deg > 0, "resultant degree is not positive");
    return deg;
}

Integer circuit_mixed_degree(const SupportTuple& t, IndexSubset c)
{
    std::vector<IndexSubset> all = circuits(t);
    if (all.size() != 1 || all.front() != c)
        fail(ErrorCode::NotUniqueCircuit, c.to_string() + " is not the unique circuit (" +
                                              std::to_string(all.size()) + " circuits)");
    Integer total = 0;
    for (int i : c.indices()) total += mixed_volume_in_span(t, c.without(i));
    return total;
}

Integer essential_resultant_degree(const SupportTuple& t)
{
    DefectTable table(t);
    if (min_defect_scan(table).min_defect >= 0 || !is_essential(table))
        fail(ErrorCode::NotEssentialDependent, "tuple is not essential and linearly dependent");
    NormalizedTuple n = normalize(t);
    const int d = static_cast<int>(n.tuple.ambient_rank());
    Integer total = 0;
    for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
        IndexSubset s(mask);
        if (s.size() != d) continue;
        if (d == 0) {
            total += 1;
            continue;
        }
        total += ambient_mixed_volume(subtuple(n.tuple, s));
    }
    return total;
}

Support generated_coordinates(const Support& a)
{
    const std::size_t n = a.dim();
    std::vector<Point> diffs;
    for (const auto& p : a) diffs.push_back(subtract(p, a[0]));
    Sublattice lattice = Sublattice::generated_by(n, diffs);
    const std::size_t r = lattice.rank();
    SmithDecomposition snf = smith_decompose(lattice.basis());
    // basis * y = x  <=>  d * (v^-1 y) = u x
    std::vector<Point> out;
    for (const auto& x : diffs) {
        Point ux = snf.u.apply(x);
        Point z(r);
        for (std::size_t i = 0; i < r; ++i) {
            check_invariant(ux[i] % snf.d(i, i) == 0, "point outside the generated lattice");
            z[i] = ux[i] / snf.d(i, i);
        }
        out.push_back(snf.v.apply(z));
    }
    return Support(std::move(out));
}

std::optional<std::string> smoothness_failure(const Support& a, const std::vector<Face>& faces)
{
    const std::size_t dim = faces.back().dim;
    if (dim == 0) return std::nullopt;
    // Work in coordinates of the (saturated) span so determinants measure lattice volume.
    NormalizedTuple nt = normalize(SupportTuple(a.dim(), {a}));
    auto local = [&](const Point& p) { return nt.record.coordinate_map.apply(subtract(p, a.anchor())); };
    const Support& mapped = nt.tuple[0];
    auto in_a = [&](const Point& p) { return std::binary_search(mapped.begin(), mapped.end(), p); };

    for (const auto& vertex : faces) {
        if (vertex.dim != 0) continue;
        const Point v = local(vertex.subset[0]);
        std::vector<Point> rays;
        for (const auto& edge : faces) {
            if (edge.dim != 1) continue;
            if (!std::binary_search(edge.point_indices.begin(), edge.point_indices.end(), vertex.point_indices[0]))
                continue;
            // The far endpoint gives the direction.
            Point far = local(edge.subset[0]) == v ? local(edge.subset.points().back()) : local(edge.subset[0]);
            Point r = primitive(subtract(far, v));
            Point next = v;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] += r[i];
            if (!in_a(next))
                return "vertex " + point_text(v) + " has an edge whose first lattice point is not in the set";
            rays.push_back(std::move(r));
        }
        if (rays.size() != dim)
            return "vertex " + point_text(v) + " has " + std::to_string(rays.size()) +
                   " edges in dimension " + std::to_string(dim);
        if (abs_value(determinant(IntMatrix::from_columns(dim, rays))) != 1)
            return "vertex " + point_text(v) + " has a non-unimodular cone";
    }
    return std::nullopt;
}

std::optional<int> signed_euler_obstruction(const Support& a, const Face& f, std::string* reason)
{
    Support g = generated_coordinates(a);
    std::vector<Face> faces = face_lattice(g);
    if (auto why = smoothness_failure(g, faces)) {
        if (reason) *reason = *why;
        return std::nullopt;
    }
    return (faces.back().dim - f.dim) % 2 == 0 ? 1 : -1;
}

DegreeResult matsui_takeuchi_degree(const Support& a, int codim)
{
    check_invariant(codim >= 1, "codimension must be positive");
    Support g = generated_coordinates(a);
    std::vector<Face> faces = face_lattice(g);
    if (auto why = smoothness_failure(g, faces))
        return DegreeResult::unsupported("Euler obstruction outside the smooth case: " + *why);
    const std::size_t dim = faces.back().dim;
    const auto delta = static_cast<unsigned>(codim);
    const Integer tail = (codim % 2 == 1 ? 1 : -1) * Integer(codim + 1);
    Integer total = 0;
    for (const auto& f : faces) {
        const int sign = (dim - f.dim) % 2 == 0 ? 1 : -1;
        total += sign * (binomial(static_cast<long long>(f.dim) - 1, delta) + tail) * normalized_volume(f.subset);
    }
    return finish(std::move(total), "the face-sum formula");
}

Integer lir_degree(int c)
{
    check_invariant(c >= 1, "lir degree needs a positive cardinality");
    return Integer(c) * (c + 1) / 2;
}

DegreeResult component_degree(const SupportTuple& t, const BkPoset& p, int id)
{
    const PosetElement& e = p.elements.at(static_cast<std::size_t>(id));
    const Support cay = generated_coordinates(cayley_set(subtuple(t, e.principal_ideal)));
    std::vector<Face> faces = face_lattice(cay);
    if (auto why = smoothness_failure(cay, faces))
        return DegreeResult::unsupported("Euler obstruction outside the smooth case for the Cayley set of " +
                                         e.principal_ideal.to_string() + ": " + *why);
    const std::size_t dim = faces.back().dim;
    Integer total = 0;
    for (const auto& f : faces) {
        const int sign = (dim - f.dim) % 2 == 0 ? 1 : -1;
        const auto d = static_cast<long long>(f.dim);
        const Integer vol = normalized_volume(f.subset);
        if (e.irr_class == IrrClass::Nir)
            total += sign * (d + 1) * vol;
        else
            total += sign * (d + 1) * (d - 4) * vol;
    }
    if (e.irr_class == IrrClass::Lir) {
        check_invariant(total % 2 == 0, "odd face sum in the linear branch");
        total /= 2;
    }
    DegreeResult general = matsui_takeuchi_degree(cay, e.irr_class == IrrClass::Nir ? 1 : 2);
    check_invariant(general.value == total, "component degree disagrees with the general face-sum formula");
    return finish(std::move(total), "the component degree formula");
}

DegreeResult cayley_degree(const SupportTuple& t, const BkPoset& p)
{
    Integer total = 1;
    for (int id : p.maximal_elements()) {
        DegreeResult r = component_degree(t, p, id);
        if (!r.is_ok()) return r;
        total *= r.value;
    }
    return DegreeResult::ok(std::move(total));
}

DegreeResult cayley_degree(const SupportTuple& t) { return cayley_degree(t, build_poset(t)); }

} // namespace atlas
