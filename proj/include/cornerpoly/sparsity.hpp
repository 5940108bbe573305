#pragma once

// Support bounds for optimal solutions and short kernel vectors. Every
// comparison against sqrt(det(A A^T)) / gcd(A) is done on squares.

#include <vector>

#include "cornerpoly/exact.hpp"

namespace cornerpoly {

struct SparsityReport {
  IntVector z_star;
  std::size_t s = 0;  // ||z*||_0
  std::size_t m = 0;
  Int rho;            // smallest nonzero |z_i|, 0 for z = 0
  Rat lhs;            // (rho + 1)^(s - m)
  Int det_aat;        // det(A A^T)
  Int gcd_a;
  bool holds = false;  // lhs^2 gcd(A)^2 <= det(A A^T)
  bool is_hull_vertex = false;

  // Restriction to the support with dependent rows removed.
  std::size_t reduced_m = 0;
  Int reduced_det_aat = 1;
  Int reduced_gcd = 1;
  bool reduction_monotone = false;  // reduced ratio <= full ratio
  bool reduced_holds = false;       // same inequality for the restricted system
};

/// (rho + 1)^(s - m) <= sqrt(det_aat) / gcd, trivially true when s <= m.
bool transference_sparsity_holds(std::size_t s, std::size_t m, const Int& rho, const Int& det_aat,
                                 const Int& gcd_a);

struct MinSupportResult {
  Int optimum;
  IntVector z_star;
  SparsityReport report;
  /// Every optimum of minimum support, lexicographically sorted; the first
  /// is z_star.
  std::vector<SparsityReport> minimum_support_optima;
};

/// max c.x over integer points of P(A, b) = {x >= 0 : Ax = b}. Throws
/// SearchSpaceTooLarge when some feasible point has a coordinate above
/// box_cap (including unbounded P), Infeasible when there is no integer point.
MinSupportResult min_support_optimum(const IntMatrix& a, const IntVector& b, const IntVector& c,
                                     const Int& box_cap);

/// Report for a given z, with the hull-vertex flag left false.
SparsityReport sparsity_report(const IntMatrix& a, const IntVector& z);

/// ||z||_0 <= m + log2(sqrt(det(A A^T)) / gcd(A)).
bool support_bound_check(const IntVector& z, const IntMatrix& a);

struct ShortVectors {
  std::vector<IntVector> vectors;  // n - m independent kernel vectors
  Int norm_product;                // product of infinity norms
  Int det_aat;
  Int gcd_a;
  bool bound_holds = false;        // product^2 gcd(A)^2 <= det(A A^T)
  Int shells = 0;                  // largest norm examined
};

/// Kernel vectors taken greedily by infinity norm, then lexicographically with
/// a positive leading entry. Throws SearchBudgetExceeded when the point budget
/// runs out first and DimensionTooLarge when n - m > 5.
ShortVectors bv_short_vectors(const IntMatrix& a, std::size_t point_budget = 20000000);

}  // namespace cornerpoly
