#pragma once

#include "atlas/index_subset.hpp"
#include "atlas/integer.hpp"
#include "atlas/support.hpp"

#include <cstddef>
#include <vector>

namespace atlas {

/// A face of conv(A), reported as the subset of A lying on it.
struct Face {
    Support subset;
    std::vector<std::size_t> point_indices;  ///< positions in A.points()
    std::size_t dim = 0;
    std::size_t codim_in_a = 0;
};

/// d! * Euclidean volume of conv(points) in Z^d, d = coordinate dimension;
/// zero when the points do not span Z^d affinely. A single point in Z^0 has volume 1.
Integer ambient_volume(const std::vector<Point>& points);

/// Lattice-normalized volume of conv(A) inside the saturated span of A.
/// Unimodular simplices and single points have volume 1.
Integer normalized_volume(const Support& a);

/// Mixed volume by polarization in the ambient lattice of `t`, which must
/// have exactly ambient_rank supports. Deficient tuples give 0.
Integer ambient_mixed_volume(const SupportTuple& t);

/// Mixed volume in the saturated span, normalized so that standard simplices give 1.
/// Throws ArityMismatch unless #supports == dim of the span.
Integer mixed_volume(const SupportTuple& t);

/// Mixed volume of the zero-defect subtuple `s` inside the saturated span of its
/// Minkowski sum. The empty subtuple has mixed volume 1.
Integer mixed_volume_in_span(const SupportTuple& t, IndexSubset s);

/// Mixed volume in the lattice generated by the tuple itself (not its
/// saturation). Equals 1 exactly for linear tuples.
Integer generated_mixed_volume(const SupportTuple& t);

/// All faces of conv(A) including A itself, sorted by (dim, point indices).
std::vector<Face> face_lattice(const Support& a);

/// Elements of the integer simplex {a in Z_{>=0}^k : sum a = m}, lexicographically descending.
std::vector<std::vector<int>> integer_simplex(int k, int m);

/// Sum over a in integer_simplex(k, d) of the mixed volume of A_1^{a_1}...A_k^{a_k},
/// d = dim of the span of the Minkowski sum.
Integer cayley_volume_rhs(const SupportTuple& t);

} // namespace atlas
