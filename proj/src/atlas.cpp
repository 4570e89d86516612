#include "atlas/atlas.hpp"

#include "atlas/error.hpp"

#include <algorithm>

namespace atlas {

std::string_view node_name(NodeKind k)
{
    switch (k) {
    case NodeKind::ResultantOf: return "ResultantOf";
    case NodeKind::CayleyDiscOf: return "CayleyDiscOf";
    case NodeKind::AmbientFactor: return "AmbientFactor";
    case NodeKind::BkMult: return "BkMult";
    case NodeKind::Intersection: return "Intersection";
    }
    return "Unknown";
}

std::string_view disc_name(DiscKind k)
{
    switch (k) {
    case DiscKind::ADisc: return "ADisc";
    case DiscKind::CayleyDisc: return "CayleyDisc";
    case DiscKind::MixedDisc: return "MixedDisc";
    }
    return "Unknown";
}

std::string StructureNode::to_string() const
{
    std::string s(node_name(kind));
    if (kind == NodeKind::BkMult || kind == NodeKind::Intersection) {
        s += "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) s += ", ";
            s += children[i].to_string();
        }
        return s + ")";
    }
    s += indices.to_string();
    if (!quotient_by.empty()) s += "/" + quotient_by.to_string();
    return s;
}

std::vector<const Component*> DiscriminantReport::maximal_components() const
{
    std::vector<const Component*> out;
    for (const auto& c : components)
        if (!c.absorbed()) out.push_back(&c);
    return out;
}

AtlasInput::AtlasInput(const SupportTuple& t, int max_size) : tuple(t), cls(classify(t, max_size))
{
    if (cls.kind == TupleKind::Underdetermined)
        fail(ErrorCode::Underdetermined, "tuple has positive total defect " + std::to_string(cls.total_defect));
    if (cls.kind == TupleKind::BK) poset = build_poset(t);
}

namespace {

StructureNode product(std::vector<StructureNode> factors)
{
    if (factors.size() == 1) return std::move(factors.front());
    return StructureNode::node(NodeKind::BkMult, std::move(factors));
}

int stratum_codim(const BkPoset& p, int id) { return p.is_prelinear(id) ? 2 : 1; }

std::optional<DegreeResult> maybe(bool on, auto&& compute)
{
    if (!on) return std::nullopt;
    return compute();
}

Component stratum_component(const AtlasInput& in, int id, const AtlasOptions& opt)
{
    const BkPoset& p = *in.poset;
    Component c;
    c.label = stratum_label(p, id);
    c.structure = stratum_structure(p, id);
    c.codim = stratum_codim(p, id);
    c.poset_element = id;
    c.degree = maybe(opt.degrees, [&] { return component_degree(in.tuple, p, id); });
    return c;
}

} // namespace

StructureNode stratum_structure(const BkPoset& p, int id)
{
    const PosetElement& e = p.elements[static_cast<std::size_t>(id)];
    const IndexSubset below = e.principal_ideal.minus(e.block);
    const IndexSubset outside = IndexSubset::full(p.tuple_size).minus(e.principal_ideal);
    std::vector<StructureNode> factors;
    if (!below.empty()) factors.push_back(StructureNode::leaf(NodeKind::AmbientFactor, below));
    factors.push_back(StructureNode::leaf(NodeKind::CayleyDiscOf, e.block, below));
    if (!outside.empty()) factors.push_back(StructureNode::leaf(NodeKind::AmbientFactor, outside));
    return product(std::move(factors));
}

std::string stratum_label(const BkPoset& p, int id)
{
    return "C" + p.elements[static_cast<std::size_t>(id)].principal_ideal.to_string();
}

DiscriminantReport a_discriminant(const AtlasInput& in, AtlasOptions opt)
{
    DiscriminantReport r;
    r.kind = DiscKind::ADisc;
    if (in.cls.kind == TupleKind::LinearlyDependent) {
        const IndexSubset m = *in.cls.minimal_subtuple;
        Component c;
        c.label = "R" + m.to_string();
        c.structure = StructureNode::leaf(NodeKind::ResultantOf, m);
        c.codim = -in.cls.min_defect;
        c.degree = maybe(opt.degrees, [&] { return DegreeResult::ok(resultant_degree(in.tuple, m)); });
        r.components.push_back(std::move(c));
        return r;
    }

    const BkPoset& p = *in.poset;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int id = static_cast<int>(i);
        Component c = stratum_component(in, id, opt);
        if (p.is_prelinear(id)) {
            // Absorbed into the lowest nir element above it, if there is one.
            std::vector<int> nir;
            for (int b : p.order_filter(id))
                if (!p.is_prelinear(b)) nir.push_back(b);
            std::vector<int> lowest;
            for (int b : nir) {
                bool minimal = true;
                for (int other : nir)
                    if (other != b && p.less_equal(other, b)) minimal = false;
                if (minimal) lowest.push_back(b);
            }
            if (!lowest.empty()) {
                const int target = lowest.front();
                c.absorbed_into = stratum_label(p, target);
                const auto covers = p.upper_covers(id);
                if (std::find(covers.begin(), covers.end(), target) == covers.end())
                    r.notes.push_back(c.label + " is absorbed by " + *c.absorbed_into +
                                      ", which does not cover it directly");
                if (lowest.size() > 1)
                    r.notes.push_back(c.label + " lies under " + std::to_string(lowest.size()) +
                                      " minimal nir elements; absorbed by the first");
            }
        }
        r.components.push_back(std::move(c));
    }
    return r;
}

DiscriminantReport cayley_discriminant(const AtlasInput& in, AtlasOptions opt)
{
    DiscriminantReport r;
    r.kind = DiscKind::CayleyDisc;
    const IndexSubset all = in.tuple.all();
    if (in.cls.kind == TupleKind::LinearlyDependent) {
        const IndexSubset m = *in.cls.minimal_subtuple;
        Component c;
        if (in.cls.essential) {
            check_invariant(m == all, "essential tuple whose minimal subtuple is proper");
            c.label = "R" + all.to_string();
            c.structure = StructureNode::leaf(NodeKind::ResultantOf, all);
            c.codim = -in.cls.total_defect;
            c.degree = maybe(opt.degrees, [&] { return DegreeResult::ok(essential_resultant_degree(in.tuple)); });
        } else {
            c.label = "R" + m.to_string() + "*D" + all.minus(m).to_string();
            c.structure = StructureNode::node(
                NodeKind::BkMult, {StructureNode::leaf(NodeKind::ResultantOf, m),
                                   StructureNode::leaf(NodeKind::CayleyDiscOf, all.minus(m), m)});
            c.codim_reason = "codimension of the product with the quotient Cayley discriminant is not known";
            c.degree = maybe(opt.degrees, [] { return DegreeResult::unsupported("codimension unknown"); });
        }
        r.components.push_back(std::move(c));
        return r;
    }

    const BkPoset& p = *in.poset;
    std::vector<StructureNode> factors;
    int lir = 0, nir = 0;
    for (int id : p.maximal_elements()) {
        factors.push_back(stratum_structure(p, id));
        (p.is_prelinear(id) ? lir : nir) += 1;
    }
    Component c;
    c.label = "X" + all.to_string();
    c.structure = StructureNode::node(NodeKind::Intersection, std::move(factors));
    c.codim = 2 * lir + nir;
    c.degree = maybe(opt.degrees, [&] { return cayley_degree(in.tuple, p); });
    r.complete_intersection_codim = c.codim;
    r.components.push_back(std::move(c));
    return r;
}

DiscriminantReport mixed_discriminant(const AtlasInput& in, AtlasOptions opt)
{
    DiscriminantReport r;
    r.kind = DiscKind::MixedDisc;
    if (in.cls.kind == TupleKind::LinearlyDependent) {
        if (!in.cls.unique_circuit()) {
            r.empty = true;
            r.notes.push_back(std::to_string(in.cls.circuits.size()) + " circuits");
            return r;
        }
        const IndexSubset circuit = in.cls.circuits.front();
        Component c;
        c.label = "R" + circuit.to_string();
        c.structure = StructureNode::leaf(NodeKind::ResultantOf, circuit);
        c.codim = 1;
        c.degree = maybe(opt.degrees, [&] { return DegreeResult::ok(circuit_mixed_degree(in.tuple, circuit)); });
        r.components.push_back(std::move(c));
        return r;
    }

    const BkPoset& p = *in.poset;
    const auto top = p.maximal_elements();
    if (top.size() != 1) {
        r.empty = true;
        r.notes.push_back(std::to_string(top.size()) + " maximal poset elements");
        return r;
    }
    r.components.push_back(stratum_component(in, top.front(), opt));
    return r;
}

DiscriminantReport a_discriminant(const SupportTuple& t, AtlasOptions opt) { return a_discriminant(AtlasInput(t), opt); }

DiscriminantReport cayley_discriminant(const SupportTuple& t, AtlasOptions opt)
{
    return cayley_discriminant(AtlasInput(t), opt);
}

DiscriminantReport mixed_discriminant(const SupportTuple& t, AtlasOptions opt)
{
    return mixed_discriminant(AtlasInput(t), opt);
}

} // namespace atlas
