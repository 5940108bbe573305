#pragma once

// Exact checkers for the proximity/sparsity transference inequalities.
// Every comparison is between rationals; nothing is rounded.

#include <string>
#include <vector>

#include "cornerpoly/lattice.hpp"

namespace cornerpoly {

enum class Relation {
  Equal,      // r = 0: x* == z*
  AtMost,     // lhs <= rhs
  LessThan,   // lhs < rhs
};

struct TransferenceReport {
  std::string theorem_id;  // "thm1", "thm2", "thm3", "lemma4", ...
  RatVector x_star;
  IntVector z_star;
  IndexSet gamma;
  std::size_t r = 0;
  std::size_t d = 0;
  Rat delta;  // ||x* - z*||_inf
  Rat lhs;    // case-dependent left side built from delta
  Rat rhs;
  Relation relation = Relation::AtMost;
  bool holds = false;
  bool tight = false;  // lhs == rhs exactly
};

std::string to_string(Relation rel);

/// Fills relation, holds and tight from lhs and rhs.
void settle(TransferenceReport& report);

/// Case split shared by all transference bounds: r = 0 demands x* == z*,
/// r = 1 compares delta with bound - 1, r >= 2 compares delta 2^r / divisor
/// with the bound.
void apply_cases(TransferenceReport& report, const Rat& bound, const Rat& divisor, bool strict);

/// Checks z against the sign pattern of CP_gamma and A z == b; throws
/// InvalidVertex otherwise.
void require_corner_point(const ProjectionContext& ctx, const IntVector& z, ErrorKind kind = ErrorKind::InvalidVertex);

/// Case-selected bound with Sigma(A) / gcd(A) for a vertex z* of CP_gamma.
TransferenceReport check_theorem1(const ProjectionContext& ctx, const IntVector& z_star);

/// Degenerate extension: gamma from choose_basis_prop2, divisor r^{d+1}.
/// tau must equal supp(x*).
TransferenceReport check_theorem2(const IntMatrix& a, const IntVector& b, const RatVector& x_star,
                                  const IntVector& z_star, const IndexSet& tau);

struct ProductBoundReport {
  Int product;  // prod over j outside gamma of (z_j + 1)
  Rat rhs;      // |det A_gamma| / gcd(A)
  Rat slack;    // rhs - product
  bool holds = false;
};

ProductBoundReport check_product_bound(const IntVector& z_star, const ProjectionContext& ctx);

struct SumProductReport {
  Rat lhs;  // x_1 + ... + x_d
  Rat rhs;  // d (x_1 + 1) ... (x_d + 1) / 2^d
  bool holds = false;
  bool equal = false;
};

/// Throws DomainError when d < 2 or some x_i < 1.
SumProductReport sum_product_holds(const RatVector& x);

struct CramerEntry {
  std::size_t basic;     // j in gamma
  std::size_t nonbasic;  // i outside gamma
  Rat value;             // det(A_gamma with column j replaced by A_i) / det(A_gamma)
};

struct Lemma4Report {
  TransferenceReport report;  // rhs is the refined bound
  Rat product_bound;          // Sigma(A) / |det A_gamma| * prod (z_j + 1)
  std::vector<CramerEntry> cramer;
  bool cramer_matches_inverse = false;  // values equal (A_gamma^{-1} A_gamma_bar)_{j,i}
  bool cramer_reproduces_gap = false;   // x*_j - z*_j == sum_i z_i value(j, i)
};

/// Needs only A z = b and z >= 0 off gamma; throws InvalidPoint otherwise.
Lemma4Report lemma4_bound(const ProjectionContext& ctx, const IntVector& z_star);

}  // namespace cornerpoly
