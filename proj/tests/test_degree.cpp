#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/classifier.hpp"
#include "atlas/degree.hpp"
#include "atlas/error.hpp"
#include "generators.hpp"

using namespace atlas;

namespace {

Support interval(long long d)
{
    std::vector<Point> pts;
    for (long long i = 0; i <= d; ++i) pts.push_back(make_point({i}));
    return Support(pts);
}

Support standard_simplex(std::size_t n)
{
    std::vector<Point> pts{Point(n, Integer(0))};
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, Integer(0));
        e[i] = 1;
        pts.push_back(e);
    }
    return Support(pts);
}

SupportTuple segments(int k)
{
    return SupportTuple(1, std::vector<Support>(static_cast<std::size_t>(k), interval(1)));
}

SupportTuple v_tuple()
{
    return SupportTuple(3, {Support{{0, 0, 0}, {1, 0, 0}}, Support{{0, 0, 0}, {0, 1, 0}},
                            Support{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

SupportTuple split_tuple()
{
    Support a{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    Support b{{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    return SupportTuple(4, {a, a, b, b});
}

Integer value_of(const DegreeResult& r)
{
    REQUIRE(r.is_ok());
    return r.value;
}

} // namespace

TEST_CASE("flat tuple examples")
{
    FlatTuple two = flat_tuple(segments(2), {0, 1});
    CHECK(two.delta == 1);
    CHECK(two.lifted.ambient_rank() == 2);
    CHECK(two.lifted[0] == Support{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    FlatTuple rect = flat_tuple(SupportTuple(1, {interval(2), interval(3)}), {0, 1});
    CHECK(rect.lifted[0].size() == 6);
    CHECK(rect.lifted[1].size() == 8);

    FlatTuple three = flat_tuple(segments(3), {0, 1, 2});
    CHECK(three.delta == 2);
    CHECK(three.lifted.ambient_rank() == 3);
    CHECK(three.lifted[0].size() == 6);

    CHECK_THROWS_AS(flat_tuple(SupportTuple(2, {standard_simplex(2), standard_simplex(2)}), {0, 1}), AtlasError);
}

TEST_CASE("resultant degree examples")
{
    for (long long d1 = 1; d1 <= 4; ++d1)
        for (long long d2 = 1; d2 <= 4; ++d2)
            CHECK(resultant_degree(SupportTuple(1, {interval(d1), interval(d2)}), {0, 1}) == d1 + d2);
    CHECK(resultant_degree(segments(2), {0, 1}) == 2);
    CHECK(resultant_degree(segments(3), {0, 1, 2}) == 3);
}

TEST_CASE("circuit and essential degrees")
{
    CHECK(circuit_mixed_degree(segments(2), {0, 1}) == 2);
    CHECK(circuit_mixed_degree(SupportTuple(1, {interval(2), interval(3)}), {0, 1}) == 5);
    CHECK_THROWS_AS(circuit_mixed_degree(segments(3), {0, 1}), AtlasError);

    CHECK(essential_resultant_degree(segments(2)) == 2);
    CHECK(essential_resultant_degree(segments(3)) == 3);
    CHECK(essential_resultant_degree(SupportTuple(1, {interval(2), interval(3)})) == 5);
    SupportTuple not_essential(2, {Support{{0, 0}, {1, 0}}, Support{{0, 0}, {1, 0}}, Support{{0, 0}, {0, 1}}});
    CHECK_THROWS_AS(essential_resultant_degree(not_essential), AtlasError);
}

TEST_CASE("signed euler obstruction")
{
    Support a = interval(2);
    auto faces = face_lattice(a);
    CHECK(signed_euler_obstruction(a, faces[0]) == -1);
    CHECK(signed_euler_obstruction(a, faces.back()) == 1);

    Support prism = cayley_set(SupportTuple(2, {standard_simplex(2), standard_simplex(2)}));
    for (const auto& f : face_lattice(prism))
        if (f.dim == 2 && f.subset.size() == 4) CHECK(signed_euler_obstruction(prism, f) == -1);

    // A triangle with a non-unimodular corner.
    Support wide{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    std::string reason;
    CHECK_FALSE(signed_euler_obstruction(wide, face_lattice(wide).back(), &reason));
    CHECK(!reason.empty());
}

TEST_CASE("face-sum degree anchors")
{
    for (long long d = 2; d <= 6; ++d) CHECK(value_of(matsui_takeuchi_degree(interval(d), 1)) == 2 * d - 2);
    Support prism = cayley_set(SupportTuple(2, {standard_simplex(2), standard_simplex(2)}));
    CHECK(value_of(matsui_takeuchi_degree(prism, 2)) == 3);
    for (std::size_t n = 1; n <= 3; ++n) {
        DegreeResult r = matsui_takeuchi_degree(standard_simplex(n), 1);
        CHECK(r.status == DegreeStatus::NotAHypersurface);
    }
    CHECK(matsui_takeuchi_degree(Support{{0, 0}, {1, 0}, {2, 0}, {0, 1}}, 1).status == DegreeStatus::Unsupported);
}

TEST_CASE("lir degree")
{
    CHECK(lir_degree(1) == 1);
    CHECK(lir_degree(2) == 3);
    CHECK(lir_degree(3) == 6);
}

TEST_CASE("component degrees")
{
    SupportTuple tri(2, {standard_simplex(2), standard_simplex(2)});
    BkPoset p = build_poset(tri);
    CHECK(value_of(component_degree(tri, p, 0)) == 3);

    SupportTuple quad(1, {interval(2)});
    CHECK(value_of(component_degree(quad, build_poset(quad), 0)) == 2);

    SupportTuple seg(1, {interval(1)});
    CHECK(value_of(component_degree(seg, build_poset(seg), 0)) == 1);

    // Linear in the lattice it generates.
    SupportTuple wide(1, {Support{{0}, {2}}});
    CHECK(value_of(component_degree(wide, build_poset(wide), 0)) == 1);

    SupportTuple v = v_tuple();
    BkPoset vp = build_poset(v);
    CHECK(value_of(component_degree(v, vp, 0)) == 1);
    CHECK(value_of(component_degree(v, vp, 1)) == 1);
    CHECK(component_degree(v, vp, 2).status == DegreeStatus::Unsupported);
}

TEST_CASE("cayley degree examples")
{
    CHECK(value_of(cayley_degree(SupportTuple(2, {standard_simplex(2), standard_simplex(2)}))) == 3);
    CHECK(value_of(cayley_degree(split_tuple())) == 9);
    CHECK(value_of(cayley_degree(SupportTuple(1, {interval(2)}))) == 2);
    CHECK_THROWS_AS(cayley_degree(segments(2)), AtlasError);
}

TEST_CASE("linear tuples have degree c(c+1)/2")
{
    for (std::size_t c = 1; c <= 4; ++c) {
        SupportTuple t(c, std::vector<Support>(c, standard_simplex(c)));
        BkPoset p = build_poset(t);
        REQUIRE(p.size() == 1);
        CHECK(value_of(component_degree(t, p, 0)) == lir_degree(static_cast<int>(c)));
    }
}

TEST_CASE("degree triangle on random essential dependent tuples")
{
    std::mt19937_64 rng(61);
    int essential = 0, unique = 0;
    for (int trial = 0; trial < 600 && (essential < 40 || unique < 20); ++trial) {
        auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        int k = static_cast<int>(n) + static_cast<int>(testing::uniform(rng, 1, 2));
        SupportTuple t = testing::random_tuple(rng, n, k, 4, 2);
        TupleClass c = classify(t);
        if (c.kind != TupleKind::LinearlyDependent) continue;
        const IndexSubset m = *c.minimal_subtuple;
        if (c.essential) {
            ++essential;
            CHECK(m == t.all());
            CHECK(resultant_degree(t, m) == essential_resultant_degree(t));
        }
        if (c.unique_circuit()) {
            ++unique;
            CHECK(c.circuits.front() == m);
            CHECK(circuit_mixed_degree(t, m) == resultant_degree(t, m));
        }
    }
    CHECK(essential >= 40);
    CHECK(unique >= 20);
}
