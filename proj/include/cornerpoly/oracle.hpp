#pragma once

// Brute-force references. Nothing here uses the sail machinery: integer
// points are enumerated directly and hulls are taken over what was found.

#include <optional>
#include <vector>

#include "cornerpoly/exact.hpp"

namespace cornerpoly {

struct BoxSpec {
  IntVector lower;
  IntVector upper;
  unsigned growth_factor = 2;
  unsigned max_rounds = 6;
};

enum class Sense { Minimize, Maximize };

/// Integer x with Ax = b, lower <= x <= upper and x_j >= 0 where nonneg[j],
/// sorted lexicographically. The box is over all n coordinates.
std::vector<IntVector> enumerate_integer_points(const IntMatrix& a, const IntVector& b,
                                                const std::vector<bool>& nonneg, const BoxSpec& box);

struct IlpOptimum {
  Int value;
  std::vector<IntVector> argset;  // every optimal point, sorted
};

/// Throws Infeasible when the box holds no feasible point.
IlpOptimum brute_ilp_opt(const IntMatrix& a, const IntVector& b, const IntVector& c, Sense sense,
                         const BoxSpec& box);

struct StabilityCertificate {
  unsigned rounds = 0;                   // hulls computed
  std::vector<IntVector> box_uppers;     // projected upper corner per round (lower corner is 0)
  std::vector<std::size_t> points;       // lattice points per round
  std::vector<std::size_t> survivors;    // points passing the midpoint filter
  bool region_inside_box = false;        // candidate region strictly inside the first box
};

struct OracleVertices {
  IndexSet gamma;                 // projection basis used for the boxes
  std::vector<IntVector> vertices;  // full vectors, sorted lexicographically
  StabilityCertificate certificate;
};

/// Vertices of conv{x integer : Ax = b, x_j >= 0 for j outside tau}. With tau a
/// basis this is CP_gamma; with tau the support of a vertex of P(A, b) it is
/// CP_tau. Boxes live in the coordinates outside reference_basis(A, tau).
/// Throws Unstable when two consecutive rounds never agree.
OracleVertices brute_corner_vertices(const IntMatrix& a, const IntVector& b, const IndexSet& tau,
                                     std::optional<BoxSpec> box = std::nullopt);

/// Candidate-region box in projected coordinates: every vertex lies in
/// [0, upper - 1].
IntVector corner_candidate_box(const IntMatrix& a, const IntVector& b, const IndexSet& tau);

/// Vertices of conv{x >= 0 integer : a.x = b} for positive a. With
/// `prefilter`, points with a repeated subset sum are dropped before the hull
/// since they are midpoints of two feasible points.
std::vector<IntVector> integer_hull_vertices(const IntVector& a, const Int& b, bool prefilter = true);

}  // namespace cornerpoly
