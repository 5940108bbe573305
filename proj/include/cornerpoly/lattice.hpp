#pragma once

// Affine lattices y + B Z^l in Hermite form, the solution lattice of Ax = b,
// and its projection onto the non-basic coordinates.

#include <functional>
#include <optional>
#include <utility>

#include "cornerpoly/exact.hpp"

namespace cornerpoly {

/// For m = 1 membership reduces to sum_j weights_j p_j == residue (mod modulus).
struct Congruence {
  IntVector weights;
  Int modulus;
  Int residue;  // in [0, modulus)
};

class AffineLattice {
 public:
  AffineLattice() = default;

  /// `basis` columns must be linearly independent; it is replaced by its
  /// column Hermite form and the shift by its reduced representative.
  AffineLattice(IntVector shift, const IntMatrix& basis);

  std::size_t ambient_dim() const noexcept { return shift_.size(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  bool full_dimensional() const noexcept { return rank() == ambient_dim(); }
  const IntVector& shift() const noexcept { return shift_; }
  const IntMatrix& basis() const noexcept { return basis_; }

  /// det(B^T B); the square of the lattice determinant.
  const Int& gram() const noexcept { return gram_; }
  /// |det B|, only defined for full-dimensional lattices.
  Int determinant() const;

  bool member(const IntVector& p) const;

  /// Canonical coset representative of p modulo the direction lattice. For a
  /// full-dimensional lattice it lies in [0, h_00) x ... x [0, h_dd).
  IntVector reduce(IntVector p) const;

  /// Same lattice through the origin.
  AffineLattice direction() const;

  void set_congruence(Congruence c) { congruence_ = std::move(c); }
  const std::optional<Congruence>& congruence() const noexcept { return congruence_; }

  /// Visits lattice points of a full-dimensional lattice coordinate by
  /// coordinate; `range(k, prefix)` gives the inclusive bounds for coordinate
  /// k given coordinates 0..k-1. Returning false from `visit` stops the walk.
  using RangeFn = std::function<std::pair<Int, Int>(std::size_t, const IntVector&)>;
  void for_each_point(const RangeFn& range, const std::function<bool(const IntVector&)>& visit) const;

  friend bool operator==(const AffineLattice& a, const AffineLattice& b) {
    return a.shift_ == b.shift_ && a.basis_ == b.basis_;
  }

 private:
  std::optional<IntVector> coefficients(const IntVector& offset) const;

  IntVector shift_;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
  Int gram_ = 1;
  std::optional<Congruence> congruence_;
};

/// (A, b, gamma) with A_gamma nonsingular. Indices are 0-based and sorted.
class ProjectionContext {
 public:
  ProjectionContext(IntMatrix a, IntVector b, IndexSet gamma);

  const IntMatrix& A() const noexcept { return a_; }
  const IntVector& b() const noexcept { return b_; }
  const IndexSet& gamma() const noexcept { return gamma_; }
  const IndexSet& gamma_bar() const noexcept { return gamma_bar_; }
  std::size_t m() const noexcept { return a_.rows(); }
  std::size_t n() const noexcept { return a_.cols(); }
  std::size_t d() const noexcept { return gamma_bar_.size(); }

  /// Signed det(A_gamma) and its adjugate.
  const Int& det_gamma() const noexcept { return det_gamma_; }
  const IntMatrix& adj_gamma() const noexcept { return adj_gamma_; }

  /// A_gamma^{-1} A_gamma_bar scaled by det(A_gamma), an m x d integer matrix.
  const IntMatrix& scaled_coefficients() const noexcept { return scaled_coef_; }

  /// The vertex x* of the basis: x*_gamma = A_gamma^{-1} b, x*_gamma_bar = 0.
  RatVector basic_solution() const;

  /// Point w with A w = b and w_gamma_bar = u.
  RatVector lift(const IntVector& u) const;
  /// lift(u) when it is integral.
  std::optional<IntVector> lift_integral(const IntVector& u) const;

  IntVector restrict_to_gamma_bar(const IntVector& x) const;

 private:
  IntMatrix a_;
  IntVector b_;
  IndexSet gamma_;
  IndexSet gamma_bar_;
  Int det_gamma_;
  IntMatrix adj_gamma_;
  IntMatrix scaled_coef_;
  IntVector scaled_rhs_;  // adj(A_gamma) b
};

/// Gamma(A, b) as a sublattice of Z^n. Throws NoIntegerSolution.
AffineLattice solution_lattice(const IntMatrix& a, const IntVector& b);

/// Lambda(A, b): the projection of Gamma(A, b) onto the coordinates outside
/// gamma. Full-dimensional with determinant |det A_gamma| / gcd(A).
AffineLattice project_lattice(const ProjectionContext& ctx);

}  // namespace cornerpoly
