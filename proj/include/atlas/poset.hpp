#pragma once

#include "atlas/index_subset.hpp"
#include "atlas/integer.hpp"
#include "atlas/support.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace atlas {

/// Linear (unit mixed volume) or nonlinear irreducible BK-tuple.
enum class IrrClass { Lir, Nir };

std::string_view class_name(IrrClass c);

struct PosetElement {
    int id = 0;
    IndexSubset block;            ///< indices contributed by this element
    IndexSubset principal_ideal;  ///< union of blocks at or below it
    SupportTuple quotient;        ///< ideal modulo the part strictly below
    Integer quotient_mixed_volume;  ///< in the lattice generated by the quotient
    IrrClass irr_class = IrrClass::Lir;
    int height = 0;
};

/// The poset of join-irreducible BK-subtuples. Element ids are positions in
/// `elements`, numbered by (height, smallest index in the block), which is a
/// linear extension of the order.
struct BkPoset {
    int tuple_size = 0;
    std::vector<PosetElement> elements;
    std::vector<std::pair<int, int>> covers;  ///< (lower, upper), sorted

    std::size_t size() const { return elements.size(); }
    bool less_equal(int a, int b) const;
    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;
    /// Elements directly above `id`.
    std::vector<int> upper_covers(int id) const;
    bool is_simple() const { return maximal_elements().size() == 1; }
    bool is_prelinear(int id) const { return elements[static_cast<std::size_t>(id)].irr_class == IrrClass::Lir; }
    /// The principal order filter [id] = {b : id <= b}, ascending ids.
    std::vector<int> order_filter(int id) const;
    /// Connected components of the Hasse diagram, each ascending; sorted by first id.
    std::vector<std::vector<int>> components() const;
    /// Union of blocks over a set of elements.
    IndexSubset union_of(const std::vector<int>& ids) const;
};

/// All BK-subtuples (including the empty and the full one), ordered by size then lexicographically.
std::vector<IndexSubset> enumerate_bk_subtuples(const SupportTuple& t);

BkPoset build_poset(const SupportTuple& t);

/// A maximal BK-filtration, as element ids; the element order itself.
std::vector<int> maximal_filtration(const BkPoset& p);

/// Successive quotients of the prefix unions along a linear extension.
std::vector<SupportTuple> filtration_quotients(const SupportTuple& t, const BkPoset& p, const std::vector<int>& order);

/// All non-empty proper subtuples have positive defect and the whole has defect 0.
bool is_irreducible_bk(const SupportTuple& t);

/// lir/nir of an irreducible BK-tuple via the mixed volume in its generated lattice.
IrrClass irreducible_class(const SupportTuple& t);

} // namespace atlas
