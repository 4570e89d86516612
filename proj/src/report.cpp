#include "atlas/report.hpp"

#include "atlas/poset.hpp"

#include <sstream>

namespace atlas {

namespace {

const Integer kJsonSafe = (Integer(1) << 53) - 1;

Json int_json(const Integer& x)
{
    if (abs_value(x) <= kJsonSafe) return static_cast<long long>(x);
    return x.str();
}

Integer int_from(const Json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail(ErrorCode::ParseError, "'" + s + "' is not an integer");
        return Integer(s);
    }
    fail(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

int small_int(const Json& j)
{
    if (!j.is_number_integer()) fail(ErrorCode::ParseError, "expected a small integer, got " + j.dump());
    return j.get<int>();
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

Json point_json(const Point& p)
{
    Json a = Json::array();
    for (const auto& x : p) a.push_back(int_json(x));
    return a;
}

Point point_from(const Json& j, std::size_t dim)
{
    if (!j.is_array()) fail(ErrorCode::ParseError, "a point must be an array, got " + j.dump());
    if (j.size() != dim)
        fail(ErrorCode::ParseError, "point " + j.dump() + " does not have length " + std::to_string(dim));
    Point p;
    for (const auto& x : j) p.push_back(int_from(x));
    return p;
}

Json subset_json(IndexSubset s)
{
    Json a = Json::array();
    for (int i : s.indices()) a.push_back(i);
    return a;
}

IndexSubset subset_from(const Json& j)
{
    if (!j.is_array()) fail(ErrorCode::ParseError, "an index set must be an array");
    IndexSubset s;
    for (const auto& x : j) {
        const int i = small_int(x);
        if (i < 0 || i >= kMaxTupleSize) fail(ErrorCode::ParseError, "index " + std::to_string(i) + " out of range");
        s = s.with(i);
    }
    return s;
}

Json tuple_json(const SupportTuple& t)
{
    Json supports = Json::array();
    for (const auto& a : t.supports()) {
        Json pts = Json::array();
        for (const auto& p : a) pts.push_back(point_json(p));
        supports.push_back(std::move(pts));
    }
    Json j;
    j["ambient_rank"] = t.ambient_rank();
    j["supports"] = std::move(supports);
    return j;
}

SupportTuple tuple_from(const Json& j)
{
    const Json& rank_json = field(j, "ambient_rank");
    if (!rank_json.is_number_integer() || rank_json.get<long long>() < 0)
        fail(ErrorCode::ParseError, "ambient_rank must be a non-negative integer");
    const auto rank = rank_json.get<std::size_t>();
    const Json& supports = field(j, "supports");
    if (!supports.is_array() || supports.empty()) fail(ErrorCode::ParseError, "supports must be a non-empty array");
    if (supports.size() > static_cast<std::size_t>(kMaxTupleSize))
        fail(ErrorCode::TooLarge, std::to_string(supports.size()) + " supports exceed the limit of " +
                                      std::to_string(kMaxTupleSize));
    std::vector<Support> out;
    for (const auto& s : supports) {
        if (!s.is_array()) fail(ErrorCode::ParseError, "a support must be an array of points");
        if (s.empty()) fail(ErrorCode::EmptySupport, "support " + std::to_string(out.size()) + " has no points");
        std::vector<Point> pts;
        for (const auto& p : s) pts.push_back(point_from(p, rank));
        out.emplace_back(std::move(pts));
    }
    return SupportTuple(rank, std::move(out));
}

template <class E, std::size_t N>
E enum_from(const Json& j, const E (&values)[N], std::string_view (*name)(E))
{
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        for (E v : values)
            if (name(v) == s) return v;
    }
    fail(ErrorCode::ParseError, "unknown name " + j.dump());
}

constexpr TupleKind kKinds[] = {TupleKind::LinearlyDependent, TupleKind::BK, TupleKind::Underdetermined};
constexpr IrrClass kClasses[] = {IrrClass::Lir, IrrClass::Nir};
constexpr NodeKind kNodes[] = {NodeKind::ResultantOf, NodeKind::CayleyDiscOf, NodeKind::AmbientFactor, NodeKind::BkMult,
                               NodeKind::Intersection};
constexpr DiscKind kDiscs[] = {DiscKind::ADisc, DiscKind::CayleyDisc, DiscKind::MixedDisc};
constexpr DegreeStatus kStatuses[] = {DegreeStatus::Ok, DegreeStatus::Unsupported, DegreeStatus::NotAHypersurface};

template <class T>
Json optional_json(const std::optional<T>& x)
{
    return x ? Json(*x) : Json(nullptr);
}

Json degree_json(const DegreeResult& d)
{
    Json j;
    j["status"] = status_name(d.status);
    j["value"] = int_json(d.value);
    j["reason"] = d.reason;
    return j;
}

DegreeResult degree_from(const Json& j)
{
    DegreeResult d;
    d.status = enum_from(field(j, "status"), kStatuses, status_name);
    d.value = int_from(field(j, "value"));
    d.reason = field(j, "reason").get<std::string>();
    return d;
}

Json class_json(const TupleClass& c)
{
    Json j;
    j["kind"] = kind_name(c.kind);
    j["min_defect"] = c.min_defect;
    j["total_defect"] = c.total_defect;
    j["minimal_subtuple"] = c.minimal_subtuple ? subset_json(*c.minimal_subtuple) : Json(nullptr);
    Json circuits = Json::array();
    for (auto s : c.circuits) circuits.push_back(subset_json(s));
    j["circuits"] = std::move(circuits);
    j["essential"] = c.essential;
    return j;
}

TupleClass class_from(const Json& j)
{
    TupleClass c;
    c.kind = enum_from(field(j, "kind"), kKinds, kind_name);
    c.min_defect = small_int(field(j, "min_defect"));
    c.total_defect = small_int(field(j, "total_defect"));
    if (!field(j, "minimal_subtuple").is_null()) c.minimal_subtuple = subset_from(j.at("minimal_subtuple"));
    for (const auto& s : field(j, "circuits")) c.circuits.push_back(subset_from(s));
    c.essential = field(j, "essential").get<bool>();
    return c;
}

Json normalization_json(const NormalizationRecord& r)
{
    Json j;
    j["input_rank"] = r.input_rank;
    Json tr = Json::array();
    for (const auto& p : r.translations) tr.push_back(point_json(p));
    j["translations"] = std::move(tr);
    j["rank"] = r.coordinate_map.rows();
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.coordinate_map.rows(); ++i) rows.push_back(point_json(r.coordinate_map.row(i)));
    j["coordinate_map"] = std::move(rows);
    return j;
}

NormalizationRecord normalization_from(const Json& j)
{
    NormalizationRecord r;
    r.input_rank = field(j, "input_rank").get<std::size_t>();
    for (const auto& p : field(j, "translations")) r.translations.push_back(point_from(p, r.input_rank));
    const auto rank = field(j, "rank").get<std::size_t>();
    const Json& rows = field(j, "coordinate_map");
    if (rows.size() != rank) fail(ErrorCode::ParseError, "coordinate_map has the wrong number of rows");
    r.coordinate_map = IntMatrix(rank, r.input_rank);
    for (std::size_t i = 0; i < rank; ++i) {
        Point row = point_from(rows[i], r.input_rank);
        for (std::size_t c = 0; c < r.input_rank; ++c) r.coordinate_map(i, c) = row[c];
    }
    return r;
}

PosetSummary poset_from(const Json& j)
{
    PosetSummary p;
    for (const auto& e : field(j, "elements")) {
        PosetSummary::Element x;
        x.id = small_int(field(e, "id"));
        x.block = subset_from(field(e, "block"));
        x.principal_ideal = subset_from(field(e, "principal_ideal"));
        x.irr_class = enum_from(field(e, "class"), kClasses, class_name);
        x.height = small_int(field(e, "height"));
        x.quotient_mixed_volume = int_from(field(e, "quotient_mixed_volume"));
        p.elements.push_back(std::move(x));
    }
    for (const auto& c : field(j, "covers")) p.covers.emplace_back(small_int(c.at(0)), small_int(c.at(1)));
    return p;
}

Json component_json(const Component& c)
{
    Json j;
    j["label"] = c.label;
    j["structure"] = to_json(c.structure);
    j["codim"] = optional_json(c.codim);
    j["codim_reason"] = c.codim_reason;
    j["degree"] = c.degree ? degree_json(*c.degree) : Json(nullptr);
    j["absorbed_into"] = optional_json(c.absorbed_into);
    j["poset_element"] = optional_json(c.poset_element);
    return j;
}

Component component_from(const Json& j)
{
    Component c;
    c.label = field(j, "label").get<std::string>();
    c.structure = structure_from_json(field(j, "structure"));
    if (!field(j, "codim").is_null()) c.codim = small_int(j.at("codim"));
    c.codim_reason = field(j, "codim_reason").get<std::string>();
    if (!field(j, "degree").is_null()) c.degree = degree_from(j.at("degree"));
    if (!field(j, "absorbed_into").is_null()) c.absorbed_into = j.at("absorbed_into").get<std::string>();
    if (!field(j, "poset_element").is_null()) c.poset_element = small_int(j.at("poset_element"));
    return c;
}

} // namespace

int max_tuple_size(std::size_t max_subsets)
{
    int k = 0;
    while (k < kMaxTupleSize && (std::size_t{1} << (k + 1)) <= max_subsets) ++k;
    return k;
}

PosetSummary summarize(const BkPoset& p)
{
    PosetSummary s;
    for (const auto& e : p.elements)
        s.elements.push_back({e.id, e.block, e.principal_ideal, e.irr_class, e.height, e.quotient_mixed_volume});
    s.covers = p.covers;
    return s;
}

OutputDocument run_analyze(const InputDocument& doc)
{
    const SupportTuple& t = doc.tuple;
    const int max_size = max_tuple_size(doc.options.max_subsets);
    if (t.size() > max_size)
        fail(ErrorCode::TooLarge, std::to_string(t.size()) + " supports need more than " +
                                      std::to_string(doc.options.max_subsets) + " subsets");

    OutputDocument out;
    out.input = doc;
    NormalizedTuple n = normalize(t);
    out.normalized = n.tuple;
    out.normalization = n.record;

    AtlasInput in(t, max_size);
    out.classification = in.cls;
    if (in.poset) out.poset = summarize(*in.poset);
    const AtlasOptions opt{doc.options.compute_degrees};
    out.a_disc = a_discriminant(in, opt);
    out.cayley_disc = cayley_discriminant(in, opt);
    out.mixed_disc = mixed_discriminant(in, opt);

    if (opt.degrees) {
        if (in.poset) {
            for (const auto& c : out.a_disc.components) out.degrees.push_back({c.label, *c.degree});
            out.degrees.push_back({"cayley", *out.cayley_disc.components.front().degree});
        } else {
            out.degrees.push_back({"resultant", *out.a_disc.components.front().degree});
            if (!out.mixed_disc.empty) out.degrees.push_back({"circuit", *out.mixed_disc.components.front().degree});
            if (in.cls.essential)
                out.degrees.push_back({"essential-resultant", *out.cayley_disc.components.front().degree});
        }
        for (const auto& row : out.degrees)
            if (!row.degree.is_ok())
                out.warnings.push_back("degree of " + row.name + " is " + std::string(status_name(row.degree.status)) +
                                       ": " + row.degree.reason);
    }
    // Absorption notes flag posets where the two readings of the containment rule could differ.
    for (const auto& note : out.a_disc.notes) out.warnings.push_back(note);
    return out;
}

Json to_json(const StructureNode& n)
{
    Json j;
    j["node"] = node_name(n.kind);
    if (n.kind == NodeKind::BkMult || n.kind == NodeKind::Intersection) {
        Json c = Json::array();
        for (const auto& x : n.children) c.push_back(to_json(x));
        j["children"] = std::move(c);
        return j;
    }
    j["indices"] = subset_json(n.indices);
    if (!n.quotient_by.empty()) j["quotient_by"] = subset_json(n.quotient_by);
    return j;
}

StructureNode structure_from_json(const Json& j)
{
    StructureNode n;
    n.kind = enum_from(field(j, "node"), kNodes, node_name);
    if (n.kind == NodeKind::BkMult || n.kind == NodeKind::Intersection) {
        for (const auto& c : field(j, "children")) n.children.push_back(structure_from_json(c));
        return n;
    }
    n.indices = subset_from(field(j, "indices"));
    if (j.contains("quotient_by")) n.quotient_by = subset_from(j.at("quotient_by"));
    return n;
}

Json to_json(const DiscriminantReport& r)
{
    Json j;
    j["kind"] = disc_name(r.kind);
    j["empty"] = r.empty;
    j["complete_intersection_codim"] = optional_json(r.complete_intersection_codim);
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back(component_json(c));
    j["components"] = std::move(comps);
    j["notes"] = r.notes;
    return j;
}

DiscriminantReport report_from_json(const Json& j)
{
    DiscriminantReport r;
    r.kind = enum_from(field(j, "kind"), kDiscs, disc_name);
    r.empty = field(j, "empty").get<bool>();
    if (!field(j, "complete_intersection_codim").is_null())
        r.complete_intersection_codim = small_int(j.at("complete_intersection_codim"));
    for (const auto& c : field(j, "components")) r.components.push_back(component_from(c));
    r.notes = field(j, "notes").get<std::vector<std::string>>();
    return r;
}

Json to_json(const PosetSummary& p)
{
    Json elements = Json::array();
    for (const auto& e : p.elements) {
        Json x;
        x["id"] = e.id;
        x["block"] = subset_json(e.block);
        x["principal_ideal"] = subset_json(e.principal_ideal);
        x["class"] = class_name(e.irr_class);
        x["height"] = e.height;
        x["quotient_mixed_volume"] = int_json(e.quotient_mixed_volume);
        elements.push_back(std::move(x));
    }
    Json covers = Json::array();
    for (const auto& [a, b] : p.covers) covers.push_back(Json::array({a, b}));
    Json j;
    j["elements"] = std::move(elements);
    j["covers"] = std::move(covers);
    return j;
}

Json degree_table_json(const std::vector<DegreeRow>& rows)
{
    Json a = Json::array();
    for (const auto& r : rows) {
        Json x;
        x["name"] = r.name;
        x["degree"] = degree_json(r.degree);
        a.push_back(std::move(x));
    }
    return a;
}

Json to_json(const InputDocument& doc)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json t = tuple_json(doc.tuple);
    j["ambient_rank"] = std::move(t["ambient_rank"]);
    j["supports"] = std::move(t["supports"]);
    j["options"] = {{"max_subsets", doc.options.max_subsets}, {"compute_degrees", doc.options.compute_degrees}};
    return j;
}

InputDocument input_from_json(const Json& j)
{
    try {
        if (!j.is_object()) fail(ErrorCode::ParseError, "input document must be a JSON object");
        if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion)
            fail(ErrorCode::ParseError, "unsupported schema_version " + j.at("schema_version").dump());
        InputDocument doc;
        doc.tuple = tuple_from(j);
        if (j.contains("options")) {
            const Json& o = j.at("options");
            if (!o.is_object()) fail(ErrorCode::ParseError, "options must be an object");
            if (o.contains("max_subsets")) {
                if (!o.at("max_subsets").is_number_unsigned() || o.at("max_subsets").get<std::size_t>() == 0)
                    fail(ErrorCode::ParseError, "max_subsets must be a positive integer");
                doc.options.max_subsets = o.at("max_subsets").get<std::size_t>();
            }
            if (o.contains("compute_degrees")) {
                if (!o.at("compute_degrees").is_boolean())
                    fail(ErrorCode::ParseError, "compute_degrees must be a boolean");
                doc.options.compute_degrees = o.at("compute_degrees").get<bool>();
            }
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

Json to_json(const OutputDocument& doc)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = to_json(doc.input);
    j["normalized"] = tuple_json(doc.normalized);
    j["normalization"] = normalization_json(doc.normalization);
    j["classification"] = class_json(doc.classification);
    j["poset"] = doc.poset ? to_json(*doc.poset) : Json(nullptr);
    j["reports"] = {{"a_discriminant", to_json(doc.a_disc)},
                    {"cayley_discriminant", to_json(doc.cayley_disc)},
                    {"mixed_discriminant", to_json(doc.mixed_disc)}};
    j["degrees"] = degree_table_json(doc.degrees);
    j["warnings"] = doc.warnings;
    return j;
}

OutputDocument output_from_json(const Json& j)
{
    try {
        if (field(j, "schema_version") != kSchemaVersion) fail(ErrorCode::ParseError, "unsupported schema_version");
        OutputDocument doc;
        doc.input = input_from_json(field(j, "input"));
        doc.normalized = tuple_from(field(j, "normalized"));
        doc.normalization = normalization_from(field(j, "normalization"));
        doc.classification = class_from(field(j, "classification"));
        if (!field(j, "poset").is_null()) doc.poset = poset_from(j.at("poset"));
        const Json& reports = field(j, "reports");
        doc.a_disc = report_from_json(field(reports, "a_discriminant"));
        doc.cayley_disc = report_from_json(field(reports, "cayley_discriminant"));
        doc.mixed_disc = report_from_json(field(reports, "mixed_discriminant"));
        for (const auto& row : field(j, "degrees"))
            doc.degrees.push_back({field(row, "name").get<std::string>(), degree_from(field(row, "degree"))});
        doc.warnings = field(j, "warnings").get<std::vector<std::string>>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

Json error_document(const AtlasError& e)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
    return j;
}

int exit_code_for(const AtlasError& e) { return e.code() == ErrorCode::InvariantViolation ? 1 : 2; }

Json analyze_json(const Json& input, int* exit_code)
{
    try {
        Json out = to_json(run_analyze(input_from_json(input)));
        if (exit_code) *exit_code = 0;
        return out;
    } catch (const AtlasError& e) {
        if (exit_code) *exit_code = exit_code_for(e);
        return error_document(e);
    }
}

namespace {

std::string codim_text(const Component& c) { return c.codim ? std::to_string(*c.codim) : "unknown"; }

std::string degree_text(const std::optional<DegreeResult>& d)
{
    if (!d) return "-";
    if (d->is_ok()) return d->value.str();
    return std::string(status_name(d->status)) + " (" + d->reason + ")";
}

void render_report(std::ostringstream& os, const char* title, const DiscriminantReport& r)
{
    os << title << ":";
    if (r.empty) {
        os << " empty\n";
    } else {
        os << "\n";
        for (const auto& c : r.components) {
            os << "  " << c.label << "  codim " << codim_text(c) << "  degree " << degree_text(c.degree) << "\n";
            os << "    " << c.structure.to_string() << "\n";
            if (c.absorbed()) os << "    absorbed into " << *c.absorbed_into << "\n";
            if (!c.codim) os << "    " << c.codim_reason << "\n";
        }
    }
    if (r.complete_intersection_codim)
        os << "  complete intersection of codimension " << *r.complete_intersection_codim << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

} // namespace

std::string render_text(const OutputDocument& doc)
{
    std::ostringstream os;
    const TupleClass& c = doc.classification;
    os << "tuple: " << doc.input.tuple.size() << " supports in Z^" << doc.input.tuple.ambient_rank()
       << ", span rank " << doc.normalized.ambient_rank() << "\n";
    os << "kind: " << kind_name(c.kind) << "  total defect " << c.total_defect << "  min defect " << c.min_defect
       << "\n";
    if (c.minimal_subtuple) os << "minimal subtuple: " << c.minimal_subtuple->to_string() << "\n";
    if (c.kind == TupleKind::LinearlyDependent) {
        os << "circuits:";
        for (auto s : c.circuits) os << " " << s.to_string();
        os << "\nessential: " << (c.essential ? "yes" : "no") << "\n";
    }
    if (doc.poset) {
        os << "poset:\n";
        for (const auto& e : doc.poset->elements)
            os << "  " << e.id << "  block " << e.block.to_string() << "  ideal " << e.principal_ideal.to_string()
               << "  " << class_name(e.irr_class) << "  height " << e.height << "  mv " << e.quotient_mixed_volume
               << "\n";
        os << "  covers:";
        for (const auto& [a, b] : doc.poset->covers) os << " " << a << "<" << b;
        os << "\n";
    }
    render_report(os, "A-discriminant", doc.a_disc);
    render_report(os, "Cayley discriminant", doc.cayley_disc);
    render_report(os, "mixed discriminant", doc.mixed_disc);
    if (!doc.degrees.empty()) {
        os << "degrees:\n";
        for (const auto& row : doc.degrees) os << "  " << row.name << "  " << degree_text(row.degree) << "\n";
    }
    for (const auto& w : doc.warnings) os << "warning: " << w << "\n";
    return os.str();
}

} // namespace atlas
