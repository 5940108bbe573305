#pragma once

// Sails of projected affine lattices and the vertices of corner polyhedra.
//
// Points of a corner polyhedron are handled in the projected coordinates
// (the complement of a basis gamma); lifting recovers the full vector.

#include <vector>

#include "cornerpoly/cone.hpp"
#include "cornerpoly/lattice.hpp"

namespace cornerpoly {

struct Sail {
  AffineLattice lattice;
  ConeInequalities cone;
  std::vector<IntVector> vertices;  // sorted lexicographically
  Int candidate_bound;              // product bound prod(x_i + 1) <= candidate_bound
  std::size_t candidates = 0;       // lattice points in the cone under the bound
  std::size_t irreducible = 0;      // candidates surviving the irreducibility filter
};

struct CornerVertexSet {
  IndexSet gamma;  // basis of the projection
  IndexSet tau;    // equals gamma for CP_gamma
  Sail projected;
  std::vector<IntVector> lifted;  // lifted[i] lifts projected.vertices[i]
};

bool is_orthant(const ConeInequalities& cone);

/// No nonzero point of the direction lattice lies in (-x + C) and (x - C).
/// Throws PointOutsideCone when x is not in C.
bool is_irreducible(const IntVector& x, const AffineLattice& lattice, const ConeInequalities& cone);

/// Vertices of conv(lattice points in the cone), assuming every vertex x has
/// prod(x_i + 1) <= bound and that the recession cone is the cone itself.
/// Throws EmptySail when no lattice point of the cone is under the bound.
Sail sail_vertices(const AffineLattice& lattice, const ConeInequalities& cone, const Int& bound);

/// Orthant sail; the bound is the lattice determinant.
Sail sail_vertices(const AffineLattice& lattice);

/// Vertices of CP_gamma(A, b). Throws NoIntegerSolution.
CornerVertexSet corner_vertices(const ProjectionContext& ctx);

/// Bases of A (sorted index sets) that contain tau, in lexicographic order.
std::vector<IndexSet> bases_containing(const IntMatrix& a, const IndexSet& tau);

/// Cone of the projected coordinates cut out by x_j >= 0 for j outside gamma
/// and for j in gamma outside tau. Requires x*_j == 0 for j in gamma \ tau.
ConeInequalities basis_cone(const ProjectionContext& ctx, const IndexSet& tau);

struct BasisChoice {
  IndexSet gamma;  // basis of A containing sigma
  IndexSet sigma;  // basis of the reduced row system inside mu
  IndexSet mu;     // tau together with the support of z*
  IntMatrix reduced;  // full-row-rank integer matrix spanning the rows of A_mu
  std::size_t r = 0;  // |mu \ sigma|, the support of z* outside gamma
  /// For i in sigma \ tau: r (z_i + 1) >= sum_j |q_ij| (z_j + 1) over j in mu \ sigma,
  /// with q the reduced coefficients; vacuous when r == 0.
  bool careful_choice_holds = true;
  /// The termwise form z_i + 1 >= |q_ij| (z_j + 1) from the maximality of sigma.
  bool termwise_holds = true;
};

/// Maximizes |det A'_sigma| prod_{i in sigma \ tau}(z_i + 1) over bases sigma of the
/// reduced system A'_mu x = b' with tau inside sigma, ties to the
/// lexicographically first; gamma extends sigma greedily by the smallest
/// columns outside mu. Throws NoBasisContainsTau.
BasisChoice choose_basis_prop2(const IntMatrix& a, const IntVector& z, const IndexSet& tau);

/// Same choice with an explicit reduced row basis of A_mu (any full-row-rank
/// matrix with the same row space).
BasisChoice choose_basis_prop2(const IntMatrix& a, const IntVector& z, const IndexSet& tau,
                               const IntMatrix& reduced);

/// Basis containing tau with the largest |det A_gamma|, lexicographic ties.
IndexSet reference_basis(const IntMatrix& a, const IndexSet& tau);

/// Vertices of CP_tau(A, b) = conv{x integer : Ax = b, x_j >= 0 off tau}, where
/// tau is the support of a vertex of P(A, b). Candidates are collected from
/// every basis containing tau under that basis's product bound, then reduced
/// in the coordinates of reference_basis.
CornerVertexSet corner_tau_vertices(const IntMatrix& a, const IntVector& b, const IndexSet& tau);

}  // namespace cornerpoly
