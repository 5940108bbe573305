#pragma once

// Double description for small pointed cones and exact convex-hull vertex
// detection built on it.

#include <vector>

#include "cornerpoly/exact.hpp"

namespace cornerpoly {

/// Pointed cone {x in R^dim : q_i . x >= 0 for every row q_i}.
struct ConeInequalities {
  std::size_t dim = 0;
  std::vector<IntVector> rows;

  static ConeInequalities orthant(std::size_t dim);
  bool contains(const IntVector& x) const;
};

/// Primitive integer generators of the extreme rays, sorted lexicographically.
/// Throws DimensionTooLarge when dim > 8 and ConeNotPointed when the rows do
/// not have full column rank.
std::vector<IntVector> extreme_rays(const ConeInequalities& cone);

/// Indices into `points` of the vertices of their convex hull, ascending.
/// Duplicate points count once (the first occurrence is reported).
std::vector<std::size_t> hull_vertices(const std::vector<IntVector>& points);

/// Same answer as hull_vertices, decided by one exact LP per point.
std::vector<std::size_t> hull_vertices_by_lp(const std::vector<IntVector>& points);

/// Facet inequalities (h0, h) with h0 + h.x >= 0 of the hull of full-dimensional
/// points, from the double description of the polar cone.
std::vector<IntVector> hull_facets(const std::vector<IntVector>& points);

}  // namespace cornerpoly
