#include "atlas/bernstein.hpp"
#include "atlas/corpus.hpp"
#include "atlas/error.hpp"
#include "atlas/poset.hpp"
#include "atlas/report.hpp"
#include "atlas/volume.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace atlas;

namespace {

std::string read_source(const std::string& source)
{
    if (source == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(source);
    if (!in) fail(ErrorCode::ParseError, "cannot read '" + source + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A file, "-", or builtin:NAME. Arrays are batches.
Json load(const std::string& source)
{
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        const std::string name = source.substr(prefix.size());
        if (name == "all") {
            Json batch = Json::array();
            for (const auto& e : builtin_corpus()) batch.push_back(to_json(InputDocument{e.tuple, {}}));
            return batch;
        }
        return to_json(InputDocument{corpus_tuple(name), {}});
    }
    return parse_json_text(read_source(source));
}

int worse(int a, int b)
{
    if (a == 1 || b == 1) return 1;
    return std::max(a, b);
}

struct Emitter {
    bool text = false;

    void json(const Json& j) const { std::cout << j.dump(2) << "\n"; }

    void error(const AtlasError& e) const
    {
        if (text)
            std::cout << "error: " << e.what() << "\n";
        else
            json(error_document(e));
    }
};

// Run `one` on every document of a batch (or the single document), keeping going on errors.
template <class F>
int for_each_document(const std::string& source, const Emitter& out, F&& one)
{
    Json input;
    try {
        input = load(source);
    } catch (const AtlasError& e) {
        out.error(e);
        return exit_code_for(e);
    }
    const bool batch = input.is_array();
    std::vector<Json> docs = batch ? input.get<std::vector<Json>>() : std::vector<Json>{input};
    int status = 0;
    Json results = Json::array();
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (out.text && batch) std::cout << "# document " << i << "\n";
        try {
            Json r = one(input_from_json(docs[i]));
            if (!out.text) results.push_back(std::move(r));
        } catch (const AtlasError& e) {
            status = worse(status, exit_code_for(e));
            if (out.text)
                out.error(e);
            else
                results.push_back(error_document(e));
        }
    }
    if (!out.text) out.json(batch ? results : results.front());
    return status;
}

long long uniform(std::mt19937_64& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

SupportTuple random_square_tuple(std::mt19937_64& rng)
{
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::vector<Support> supports;
    for (std::size_t i = 0; i < n; ++i) {
        std::set<Point> pts;
        const auto count = static_cast<std::size_t>(uniform(rng, 2, n == 1 ? 3 : 5));
        while (pts.size() < count) {
            Point p;
            for (std::size_t c = 0; c < n; ++c) p.emplace_back(uniform(rng, 0, 2));
            pts.insert(p);
        }
        supports.emplace_back(std::vector<Point>(pts.begin(), pts.end()));
    }
    return SupportTuple(n, std::move(supports));
}

int selfcheck(std::uint64_t seed, int trials)
{
    int failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok    " : "FAIL  ") << what << "\n";
        if (!ok) ++failures;
    };

    for (const auto& e : builtin_corpus()) {
        const Json doc = to_json(InputDocument{e.tuple, {}});
        int first = 0, second = 0;
        const std::string a = analyze_json(doc, &first).dump();
        const std::string b = analyze_json(doc, &second).dump();
        report(first != 1 && a == b, "analyze " + e.name + " (exit " + std::to_string(first) + ", deterministic)");
        if (first == 0) {
            OutputDocument parsed = output_from_json(parse_json_text(a));
            report(to_json(parsed).dump() == a, "round trip " + e.name);
        }
        if (classify(e.tuple).kind == TupleKind::BK && normalize(e.tuple).tuple.ambient_rank() <= 2) {
            OracleVerdict v = bernstein_oracle(e.tuple, trials, seed);
            report(v.agrees() && v.mismatches == 0,
                   "root count " + e.name + ": " + v.max_count.str() + " vs mixed volume " + v.mixed_volume.str());
        }
    }

    std::mt19937_64 rng(seed);
    int checked = 0;
    for (int attempt = 0; attempt < 50 * trials && checked < trials; ++attempt) {
        SupportTuple t = random_square_tuple(rng);
        if (classify(t).kind != TupleKind::BK) continue;
        ++checked;
        OracleVerdict v = bernstein_oracle(t, 3, seed + static_cast<std::uint64_t>(attempt));
        report(v.agrees() && v.mismatches == 0, "random tuple " + std::to_string(checked) + ": roots " +
                                                     v.max_count.str() + ", mixed volume " + v.mixed_volume.str());
    }
    std::cout << (failures == 0 ? "selfcheck passed" : "selfcheck FAILED: " + std::to_string(failures)) << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discriminant atlas for sparse polynomial systems"};
    app.require_subcommand(1);

    std::string source;
    std::string format = "json";
    std::string degrees = "on";
    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("input", source, "JSON document or batch array; '-' for stdin, builtin:NAME for the corpus")
            ->required();
        cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Full report: classification, poset, discriminants, degrees");
    add_source(analyze);
    analyze->add_option("--degrees", degrees, "on or off")->check(CLI::IsMember({"on", "off"}));

    auto* mv = app.add_subcommand("mixed-volume", "Mixed volume of a square tuple");
    add_source(mv);
    auto* decompose = app.add_subcommand("decompose", "BK poset only");
    add_source(decompose);
    auto* degree_cmd = app.add_subcommand("degrees", "Degree table only");
    add_source(degree_cmd);

    std::uint64_t seed = 1;
    int trials = 10;
    auto* check = app.add_subcommand("selfcheck", "Run the oracle suite on built-in instances");
    check->add_option("--seed", seed);
    check->add_option("--trials", trials)->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("corpus", "List the built-in instances");

    // A bare file argument means analyze.
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args[0].rfind("-", 0) != 0 && !app.get_subcommand_no_throw(args[0]))
        args.insert(args.begin(), "analyze");
    if (!args.empty() && args[0] == "-") args.insert(args.begin(), "analyze");
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Emitter out{format == "text"};
    try {
        if (*analyze) {
            return for_each_document(source, out, [&](InputDocument doc) {
                if (degrees == "off") doc.options.compute_degrees = false;
                OutputDocument r = run_analyze(doc);
                if (out.text) std::cout << render_text(r);
                return to_json(r);
            });
        }
        if (*mv) {
            return for_each_document(source, out, [&](const InputDocument& doc) {
                Integer v = mixed_volume(doc.tuple);
                if (out.text) std::cout << v << "\n";
                return Json{{"schema_version", kSchemaVersion}, {"mixed_volume", v.str()}};
            });
        }
        if (*decompose) {
            return for_each_document(source, out, [&](const InputDocument& doc) {
                BkPoset p = build_poset(doc.tuple);
                PosetSummary s = summarize(p);
                if (out.text) {
                    for (const auto& e : s.elements)
                        std::cout << e.id << "  block " << e.block.to_string() << "  " << class_name(e.irr_class)
                                  << "  height " << e.height << "\n";
                    for (const auto& [a, b] : s.covers) std::cout << a << " < " << b << "\n";
                }
                Json j{{"schema_version", kSchemaVersion}};
                j["poset"] = to_json(s);
                return j;
            });
        }
        if (*degree_cmd) {
            return for_each_document(source, out, [&](const InputDocument& doc) {
                OutputDocument r = run_analyze(doc);
                if (out.text)
                    for (const auto& row : r.degrees)
                        std::cout << row.name << "  "
                                  << (row.degree.is_ok() ? row.degree.value.str()
                                                         : std::string(status_name(row.degree.status)))
                                  << "\n";
                Json j{{"schema_version", kSchemaVersion}};
                j["degrees"] = degree_table_json(r.degrees);
                return j;
            });
        }
        if (*check) return selfcheck(seed, trials);
        if (*list) {
            for (const auto& e : builtin_corpus())
                std::cout << e.name << "  (" << e.tuple.size() << " supports in Z^" << e.tuple.ambient_rank() << ")\n";
            return 0;
        }
    } catch (const AtlasError& e) {
        out.error(e);
        return exit_code_for(e);
    }
    return 0;
}
