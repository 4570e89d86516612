#pragma once

#include "atlas/classifier.hpp"
#include "atlas/degree.hpp"
#include "atlas/index_subset.hpp"
#include "atlas/poset.hpp"
#include "atlas/support.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

enum class NodeKind { ResultantOf, CayleyDiscOf, AmbientFactor, BkMult, Intersection };

std::string_view node_name(NodeKind k);

/// Symbolic structure of a component. Leaves carry index sets of the input
/// tuple; CayleyDiscOf(indices, quotient_by) is the Cayley discriminant of
/// `indices` taken modulo the span of `quotient_by`.
struct StructureNode {
    NodeKind kind = NodeKind::ResultantOf;
    IndexSubset indices;
    IndexSubset quotient_by;
    std::vector<StructureNode> children;

    static StructureNode leaf(NodeKind k, IndexSubset s, IndexSubset q = {}) { return {k, s, q, {}}; }
    static StructureNode node(NodeKind k, std::vector<StructureNode> c) { return {k, {}, {}, std::move(c)}; }

    bool operator==(const StructureNode&) const = default;
    std::string to_string() const;
};

struct Component {
    std::string label;
    StructureNode structure;
    std::optional<int> codim;
    std::string codim_reason;  ///< set when codim is missing
    std::optional<DegreeResult> degree;  ///< missing when degrees were not requested
    std::optional<std::string> absorbed_into;
    std::optional<int> poset_element;  ///< the stratum, for BK inputs

    bool absorbed() const { return absorbed_into.has_value(); }
    bool operator==(const Component&) const = default;
};

enum class DiscKind { ADisc, CayleyDisc, MixedDisc };

std::string_view disc_name(DiscKind k);

struct DiscriminantReport {
    DiscKind kind = DiscKind::ADisc;
    std::vector<Component> components;
    bool empty = false;
    std::optional<int> complete_intersection_codim;
    std::vector<std::string> notes;

    /// Components that are not absorbed into another one.
    std::vector<const Component*> maximal_components() const;
    bool operator==(const DiscriminantReport&) const = default;
};

struct AtlasOptions {
    bool degrees = true;
};

/// Everything the three reports are computed from; build once and reuse.
struct AtlasInput {
    const SupportTuple& tuple;
    TupleClass cls;
    std::optional<BkPoset> poset;

    explicit AtlasInput(const SupportTuple& t, int max_size = kMaxTupleSize);
};

/// Structure expression (BkMult of ambient factors and a Cayley discriminant) for the stratum of `id`.
StructureNode stratum_structure(const BkPoset& p, int id);
std::string stratum_label(const BkPoset& p, int id);

DiscriminantReport a_discriminant(const AtlasInput& in, AtlasOptions opt = {});
DiscriminantReport cayley_discriminant(const AtlasInput& in, AtlasOptions opt = {});
DiscriminantReport mixed_discriminant(const AtlasInput& in, AtlasOptions opt = {});

DiscriminantReport a_discriminant(const SupportTuple& t, AtlasOptions opt = {});
DiscriminantReport cayley_discriminant(const SupportTuple& t, AtlasOptions opt = {});
DiscriminantReport mixed_discriminant(const SupportTuple& t, AtlasOptions opt = {});

} // namespace atlas
