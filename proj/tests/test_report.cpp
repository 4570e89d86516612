#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/corpus.hpp"
#include "atlas/report.hpp"
#include "generators.hpp"

using namespace atlas;

namespace {

InputDocument doc_of(const SupportTuple& t, bool degrees = true)
{
    InputDocument d{t, {}};
    d.options.compute_degrees = degrees;
    return d;
}

ErrorCode error_of(const std::string& text)
{
    int code = 0;
    Json input;
    try {
        input = parse_json_text(text);
    } catch (const AtlasError& e) {
        return e.code();
    }
    Json out = analyze_json(input, &code);
    REQUIRE(out.contains("error"));
    CHECK(code == 2);
    const std::string name = out["error"]["code"];
    for (ErrorCode c : {ErrorCode::ParseError, ErrorCode::EmptySupport, ErrorCode::TooLarge, ErrorCode::Underdetermined})
        if (error_name(c) == name) return c;
    FAIL("unexpected error " << name);
    return ErrorCode::InvariantViolation;
}

} // namespace

TEST_CASE("analyze examples")
{
    OutputDocument v = run_analyze(doc_of(corpus_tuple("v-shape")));
    CHECK(v.classification.kind == TupleKind::BK);
    REQUIRE(v.poset.has_value());
    CHECK(v.poset->elements.size() == 3);
    CHECK(v.a_disc.components.size() == 3);
    for (const auto& c : v.a_disc.components) CHECK(c.codim == 2);
    CHECK(v.cayley_disc.complete_intersection_codim == 2);
    CHECK(v.mixed_disc.components.at(0).codim == 2);
    REQUIRE(v.degrees.size() == 4);
    CHECK(v.degrees[0].degree == DegreeResult::ok(1));
    CHECK(v.degrees[1].degree == DegreeResult::ok(1));
    CHECK(v.degrees[3].name == "cayley");
    CHECK_FALSE(v.warnings.empty());

    OutputDocument plane = run_analyze(doc_of(corpus_tuple("sylvester-plane")));
    CHECK(plane.classification.kind == TupleKind::LinearlyDependent);
    CHECK_FALSE(plane.poset.has_value());
    CHECK(plane.a_disc.components.at(0).structure == plane.mixed_disc.components.at(0).structure);
    CHECK(plane.degrees.at(0).name == "resultant");
    CHECK(plane.degrees.at(0).degree == DegreeResult::ok(2));

    OutputDocument quad = run_analyze(doc_of(corpus_tuple("quadratic")));
    CHECK(quad.poset->elements.at(0).irr_class == IrrClass::Nir);
    CHECK(quad.a_disc.components.at(0).codim == 1);
    CHECK(quad.degrees.at(0).degree == DegreeResult::ok(2));

    OutputDocument off = run_analyze(doc_of(corpus_tuple("quadratic"), false));
    CHECK(off.degrees.empty());
    CHECK_FALSE(off.a_disc.components.at(0).degree.has_value());
}

TEST_CASE("documents round trip")
{
    for (const auto& e : builtin_corpus()) {
        CAPTURE(e.name);
        InputDocument in = doc_of(e.tuple);
        CHECK(input_from_json(to_json(in)) == in);
        if (classify(e.tuple).kind == TupleKind::Underdetermined) continue;
        OutputDocument out = run_analyze(in);
        const std::string text = to_json(out).dump(2);
        OutputDocument back = output_from_json(parse_json_text(text));
        CHECK(back == out);
        CHECK(to_json(back).dump(2) == text);
    }

    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        int k = static_cast<int>(n) + static_cast<int>(testing::uniform(rng, 0, 1));
        SupportTuple t = testing::random_tuple(rng, n, k, 4, 2);
        if (classify(t).kind == TupleKind::Underdetermined) continue;
        OutputDocument out = run_analyze(doc_of(t, false));
        CHECK(output_from_json(parse_json_text(to_json(out).dump())) == out);
    }
}

TEST_CASE("large integers travel as strings")
{
    const std::string big = "123456789012345678901234567890";
    SupportTuple t(1, {Support(std::vector<Point>{{Integer(0)}, {Integer(big)}})});
    Json j = to_json(doc_of(t));
    CHECK(j["supports"][0][1][0] == big);
    CHECK(j["supports"][0][0][0] == 0);
    CHECK(input_from_json(j).tuple == t);

    OutputDocument out = run_analyze(doc_of(t));
    CHECK(out.poset->elements.at(0).quotient_mixed_volume == 1);
    CHECK(output_from_json(to_json(out)) == out);
    CHECK_THROWS_AS(input_from_json(parse_json_text(R"({"ambient_rank":1,"supports":[[["12x"]]]})")), AtlasError);
}

TEST_CASE("structured errors")
{
    CHECK(error_of("[1,2") == ErrorCode::ParseError);
    CHECK(error_of(R"({"supports":[[[0]]]})") == ErrorCode::ParseError);
    CHECK(error_of(R"({"ambient_rank":1,"supports":[[[0],[1,2]]]})") == ErrorCode::ParseError);
    CHECK(error_of(R"({"schema_version":"2","ambient_rank":1,"supports":[[[0],[1]]]})") == ErrorCode::ParseError);
    CHECK(error_of(R"({"ambient_rank":1,"supports":[[[0],[1]], []]})") == ErrorCode::EmptySupport);
    CHECK(error_of(R"({"ambient_rank":2,"supports":[[[0,0],[1,0],[0,1]]]})") == ErrorCode::Underdetermined);
    CHECK(error_of(R"({"ambient_rank":1,"supports":[[[0],[1]],[[0],[1]]],"options":{"max_subsets":2}})") ==
          ErrorCode::TooLarge);
    CHECK(error_of(R"({"ambient_rank":1,"supports":[[[0],[1]]],"options":{"compute_degrees":"yes"}})") ==
          ErrorCode::ParseError);

    int code = -1;
    analyze_json(to_json(doc_of(corpus_tuple("chain"))), &code);
    CHECK(code == 0);
    CHECK(exit_code_for(AtlasError(ErrorCode::InvariantViolation, "x")) == 1);
}

TEST_CASE("output is deterministic")
{
    for (const auto& e : builtin_corpus()) {
        int a = 0, b = 0;
        const Json doc = to_json(doc_of(e.tuple));
        CHECK(analyze_json(doc, &a).dump() == analyze_json(doc, &b).dump());
        CHECK(a == b);
    }
}

TEST_CASE("text rendering")
{
    const std::string text = render_text(run_analyze(doc_of(corpus_tuple("nir-over-lir"))));
    CHECK(text.find("kind: BK") != std::string::npos);
    CHECK(text.find("absorbed into C{0,1}") != std::string::npos);
    CHECK(text.find("CayleyDiscOf{1}/{0}") != std::string::npos);

    const std::string dep = render_text(run_analyze(doc_of(corpus_tuple("three-segments"))));
    CHECK(dep.find("mixed discriminant: empty") != std::string::npos);
    CHECK(dep.find("circuits: {0,1} {0,2} {1,2}") != std::string::npos);
}

TEST_CASE("subset budget")
{
    CHECK(max_tuple_size(1) == 0);
    CHECK(max_tuple_size(2) == 1);
    CHECK(max_tuple_size(1023) == 9);
    CHECK(max_tuple_size(std::size_t{1} << 20) == 20);
    CHECK(max_tuple_size(std::size_t{1} << 40) == kMaxTupleSize);
}
