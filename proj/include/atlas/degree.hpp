#pragma once

#include "atlas/index_subset.hpp"
#include "atlas/integer.hpp"
#include "atlas/poset.hpp"
#include "atlas/support.hpp"
#include "atlas/volume.hpp"

#include <optional>
#include <string>

namespace atlas {

enum class DegreeStatus { Ok, Unsupported, NotAHypersurface };

std::string_view status_name(DegreeStatus s);

/// A degree value, or the reason it could not be produced.
struct DegreeResult {
    DegreeStatus status = DegreeStatus::Ok;
    Integer value = 0;
    std::string reason;

    static DegreeResult ok(Integer v) { return {DegreeStatus::Ok, std::move(v), {}}; }
    static DegreeResult unsupported(std::string why) { return {DegreeStatus::Unsupported, 0, std::move(why)}; }
    bool is_ok() const { return status == DegreeStatus::Ok; }
    bool operator==(const DegreeResult&) const = default;
};

struct FlatTuple {
    SupportTuple base;    ///< the subtuple in its saturated span, rank d
    int delta = 0;        ///< minus its defect
    SupportTuple lifted;  ///< A x standard simplex of dim delta, rank d + delta
};

FlatTuple flat_tuple(const SupportTuple& t, IndexSubset m);

/// Degree of the sparse resultant of the subtuple m (the minimal-defect subtuple).
Integer resultant_degree(const SupportTuple& t, IndexSubset m);

/// Sum over members C of the unique circuit c of the mixed volume of c \ C.
Integer circuit_mixed_degree(const SupportTuple& t, IndexSubset c);

/// Sum of mixed volumes over all subtuples of cardinality dim of the span.
Integer essential_resultant_degree(const SupportTuple& t);

/// The points of `a` in coordinates of the affine lattice they generate, anchored at the first point.
Support generated_coordinates(const Support& a);

/// Why the toric variety of `a` may be singular, or nullopt when every vertex
/// cone is unimodular and generated by points of `a`. `a` must generate its lattice.
std::optional<std::string> smoothness_failure(const Support& a, const std::vector<Face>& faces);

/// (-1)^(dim a - dim f) on the smooth path; nullopt with `reason` set otherwise.
std::optional<int> signed_euler_obstruction(const Support& a, const Face& f, std::string* reason = nullptr);

/// The face-sum degree formula for the discriminant of codimension `codim`.
DegreeResult matsui_takeuchi_degree(const Support& a, int codim);

Integer lir_degree(int c);

/// Degree of the stratum of a poset element, from the Cayley set of its principal ideal.
DegreeResult component_degree(const SupportTuple& t, const BkPoset& p, int id);

/// Product of component degrees over maximal poset elements.
DegreeResult cayley_degree(const SupportTuple& t, const BkPoset& p);
DegreeResult cayley_degree(const SupportTuple& t);

} // namespace atlas
