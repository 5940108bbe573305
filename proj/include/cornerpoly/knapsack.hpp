#pragma once

// Knapsack specializations: one equation a.x = b with a > 0 and gcd(a) = 1.
// The privileged coordinate is the first one, gamma = {0}.

#include <optional>
#include <vector>

#include "cornerpoly/transference.hpp"

namespace cornerpoly {

/// Resource caps for the dynamic programs.
struct KnapsackLimits {
  Int max_b = 1000000;
  Int max_a1 = 10000;
};

/// Throws InvalidInstance unless n >= 2, all a_i > 0, gcd(a) = 1 and b >= 0.
void validate_knapsack(const IntVector& a, const Int& b);

struct SemigroupResult {
  bool member = false;
  std::optional<IntVector> witness;  // a.z = b, z >= 0
};

/// Shortest paths over residues mod a_1. Throws SearchSpaceTooLarge when
/// a_1 exceeds the cap.
SemigroupResult in_semigroup(const IntVector& a, const Int& b, const KnapsackLimits& limits = {});

/// Vertex of CP_{0}(a, b) inside P(a, b) with z_1 maximal, lexicographically
/// smallest on coordinates 2..n among ties. Throws NotInSemigroup.
IntVector corner_vertex_in_P(const IntVector& a, const Int& b);

/// All vertices of CP_{0}(a, b) that lie in P(a, b), sorted.
std::vector<IntVector> corner_vertices_in_P(const IntVector& a, const Int& b);

/// Report on corner_vertex_in_P with x* = (b / a_1) e_1; strict for r >= 2.
TransferenceReport check_theorem3(const IntVector& a, const Int& b);

/// Same inequality evaluated on a given z.
TransferenceReport theorem3_report(const IntVector& a, const Int& b, const IntVector& z);

/// min_i c_i b / a_i and its smallest minimizing index.
Rat lp_value(const IntVector& c, const IntVector& a, const Int& b);
std::size_t lp_vertex(const IntVector& c, const IntVector& a, const Int& b);

struct IpOptimum {
  Int value;
  IntVector argmin;  // lexicographically smallest optimal point
};

/// Exact optimum of min c.x over integer points of P(a, b). Throws
/// NotInSemigroup, or SearchSpaceTooLarge when b exceeds the cap.
IpOptimum ip_value(const IntVector& c, const IntVector& a, const Int& b, const KnapsackLimits& limits = {});

struct GapVerdict {
  IntVector z_star;  // in the renumbered coordinates
  std::size_t r = 0;
  Rat delta;
  Rat distance_bound;    // delta * sum of |c_i| over supp(x* - z*)
  Rat support_bound;     // (r + 1) delta ||c||_inf
  Rat corollary_rhs;     // 0, 2 (||a||_inf - 1) ||c||_inf, or r (r + 1) / 2^r ||a||_inf ||c||_inf
  Relation relation = Relation::AtMost;
  bool chain_holds = false;      // gap <= distance_bound <= support_bound
  bool corollary_holds = false;
  /// The strict form degenerates to 0 < 0 when c = 0; the verdict then
  /// requires gap == 0.
  bool zero_cost = false;
};

struct GapReport {
  std::vector<std::size_t> permutation;  // renumbered coordinate k is original permutation[k]
  IntVector a;                           // renumbered
  IntVector c;                           // renumbered
  Int ip;
  Rat lp;
  Rat gap;
  std::vector<GapVerdict> verdicts;  // one per vertex of CP_{0} in P
  bool all_hold = false;
};

GapReport integrality_gap_report(const IntVector& c, const IntVector& a, const Int& b,
                                 const KnapsackLimits& limits = {});

struct KnapsackWitnesses {
  IntVector proximity;   // ||x* - z||_inf <= ||a||_inf - 1
  Rat proximity_distance;
  IntVector sparse;      // 2^(||z||_0 - 1) <= min a_i
  std::size_t sparse_support = 0;
};

/// Throws NotInSemigroup, or SearchSpaceTooLarge beyond the caps.
KnapsackWitnesses aho_and_sparsity_exist(const IntVector& a, const Int& b, const KnapsackLimits& limits = {});

}  // namespace cornerpoly
