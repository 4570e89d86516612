#pragma once

#include "atlas/atlas.hpp"
#include "atlas/classifier.hpp"
#include "atlas/degree.hpp"
#include "atlas/error.hpp"
#include "atlas/support.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

struct InputOptions {
    std::size_t max_subsets = std::size_t{1} << 20;
    bool compute_degrees = true;

    bool operator==(const InputOptions&) const = default;
};

struct InputDocument {
    SupportTuple tuple;
    InputOptions options;

    bool operator==(const InputDocument&) const = default;
};

struct PosetSummary {
    struct Element {
        int id = 0;
        IndexSubset block;
        IndexSubset principal_ideal;
        IrrClass irr_class = IrrClass::Lir;
        int height = 0;
        Integer quotient_mixed_volume;

        bool operator==(const Element&) const = default;
    };
    std::vector<Element> elements;
    std::vector<std::pair<int, int>> covers;

    bool operator==(const PosetSummary&) const = default;
};

PosetSummary summarize(const BkPoset& p);

struct DegreeRow {
    std::string name;
    DegreeResult degree;

    bool operator==(const DegreeRow&) const = default;
};

struct OutputDocument {
    InputDocument input;
    SupportTuple normalized;
    NormalizationRecord normalization;
    TupleClass classification;
    std::optional<PosetSummary> poset;
    DiscriminantReport a_disc;
    DiscriminantReport cayley_disc;
    DiscriminantReport mixed_disc;
    std::vector<DegreeRow> degrees;
    std::vector<std::string> warnings;

    bool operator==(const OutputDocument&) const = default;
};

/// Largest tuple size whose subset enumeration stays within `max_subsets`.
int max_tuple_size(std::size_t max_subsets);

OutputDocument run_analyze(const InputDocument& doc);

Json to_json(const InputDocument& doc);
Json to_json(const OutputDocument& doc);
Json to_json(const DiscriminantReport& r);
Json to_json(const StructureNode& n);
Json to_json(const PosetSummary& p);
Json degree_table_json(const std::vector<DegreeRow>& rows);

InputDocument input_from_json(const Json& j);
OutputDocument output_from_json(const Json& j);
DiscriminantReport report_from_json(const Json& j);
StructureNode structure_from_json(const Json& j);

/// ParseError on malformed text.
Json parse_json_text(std::string_view text);

Json error_document(const AtlasError& e);
/// 2 for input errors, 1 for invariant violations.
int exit_code_for(const AtlasError& e);

/// One document in, one document out; errors become error documents.
Json analyze_json(const Json& input, int* exit_code);

std::string render_text(const OutputDocument& doc);

} // namespace atlas
