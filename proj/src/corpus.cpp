#include "atlas/corpus.hpp"

#include "atlas/error.hpp"

namespace atlas {

namespace {

Support interval(long long n)
{
    std::vector<Point> pts;
    for (long long i = 0; i <= n; ++i) pts.push_back({Integer(i)});
    return Support(std::move(pts));
}

std::vector<CorpusEntry> make_corpus()
{
    std::vector<CorpusEntry> c;
    c.push_back({"chain", SupportTuple(2, {Support{{0, 0}, {1, 0}}, Support{{0, 0}, {1, 0}, {0, 1}}})});
    c.push_back({"v-shape", SupportTuple(3, {Support{{0, 0, 0}, {1, 0, 0}}, Support{{0, 0, 0}, {0, 1, 0}},
                                             Support{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}})});
    c.push_back({"irreducible", SupportTuple(2, {Support{{0, 0}, {1, 0}, {0, 1}}, Support{{0, 0}, {1, 0}, {0, 1}}})});
    {
        Support a{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}};
        Support b{{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        c.push_back({"split", SupportTuple(4, {a, a, b, b})});
    }
    c.push_back({"quadratic", SupportTuple(1, {interval(2)})});
    c.push_back({"cubic", SupportTuple(1, {interval(3)})});
    c.push_back({"nir-over-lir", SupportTuple(2, {Support{{0, 0}, {1, 0}}, Support{{0, 0}, {1, 0}, {0, 1}, {0, 2}}})});
    c.push_back({"sylvester-2-3", SupportTuple(1, {interval(2), interval(3)})});
    c.push_back({"sylvester-plane", SupportTuple(2, {Support{{0, 0}, {1, 0}}, Support{{0, 0}, {1, 0}},
                                                     Support{{0, 0}, {0, 1}}})});
    c.push_back({"three-segments", SupportTuple(1, {interval(1), interval(1), interval(1)})});
    c.push_back({"separated", SupportTuple(2, {Support{{0, 0}, {2, 0}}, Support{{0, 0}, {0, 1}, {0, 2}}})});
    c.push_back({"underdetermined", SupportTuple(2, {Support{{0, 0}, {1, 0}, {0, 1}}})});
    return c;
}

} // namespace

const std::vector<CorpusEntry>& builtin_corpus()
{
    static const std::vector<CorpusEntry> corpus = make_corpus();
    return corpus;
}

const SupportTuple& corpus_tuple(const std::string& name)
{
    for (const auto& e : builtin_corpus())
        if (e.name == name) return e.tuple;
    fail(ErrorCode::ParseError, "no built-in instance named '" + name + "'");
}

} // namespace atlas
