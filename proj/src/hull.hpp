#pragma once

// Exact convex hulls of full-dimensional lattice point sets by a placing
// (beneath-beyond) triangulation. Internal to the volume engine.

#include "atlas/integer.hpp"

#include <cstddef>
#include <vector>

namespace atlas::detail {

struct HullFacet {
    Point normal;                     ///< primitive outward normal
    Integer offset;                   ///< normal . x == offset on the facet
    std::vector<std::size_t> points;  ///< every input point on the facet
};

struct Hull {
    bool full_dimensional = false;
    /// d! times the Euclidean volume (0 when not full-dimensional).
    Integer normalized_volume = 0;
    /// Points touched by the boundary triangulation; contains every vertex.
    std::vector<std::size_t> boundary_points;
    /// Only filled when requested (HullDetail::Vertices or Facets).
    std::vector<std::size_t> vertices;
    /// Only filled for HullDetail::Facets; grouped boundary simplices by hyperplane.
    std::vector<HullFacet> facets;
};

enum class HullDetail { Volume, Vertices, Facets };

/// `points` all have dimension d >= 1 (the ambient rank). A set whose affine
/// span is lower-dimensional yields full_dimensional == false.
Hull compute_hull(const std::vector<Point>& points, HullDetail detail);

} // namespace atlas::detail
