#pragma once

// Instance files and generators. Integers are stored as decimal strings and
// index sets are 1-based on disk, 0-based in memory.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cornerpoly/exact.hpp"

namespace cornerpoly {

enum class InstanceKind { General, Knapsack };

struct Instance {
  InstanceKind kind = InstanceKind::General;
  IntMatrix A;  // 1 x n for knapsacks
  IntVector b;  // length 1 for knapsacks
  std::optional<IndexSet> gamma;
  std::optional<IndexSet> tau;
  std::optional<IntVector> c;
  nlohmann::json meta = nlohmann::json::object();  // {family, seed, params}

  IntVector knapsack_a() const { return A.row(0); }
  const Int& knapsack_b() const { return b.front(); }
  std::string id() const;

  friend bool operator==(const Instance& x, const Instance& y) {
    return x.kind == y.kind && x.A == y.A && x.b == y.b && x.gamma == y.gamma && x.tau == y.tau &&
           x.c == y.c && x.meta == y.meta;
  }
};

/// Shapes, full row rank, knapsack positivity and coprimality, index ranges
/// and nonsingular A_gamma. Throws InvalidInstance or ShapeMismatch.
void validate(const Instance& inst);

nlohmann::json to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);  // validates
std::string dump(const Instance& inst);
Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);

/// a = (2^{s-1}, 2^{s-2} + t 2^{s-1}, ..., 1 + t 2^{s-1}), b = sum of a.
/// For s <= 8 the generator confirms that 1_s is a vertex of CP_{1} inside P.
/// Records delta and the ratio delta 2^{s-1} / ((s-1) ||a||_inf) in meta.
Instance gen_sharpness(unsigned s, const Int& t);
Rat sharpness_delta(unsigned s, const Int& t);
Rat sharpness_ratio(unsigned s, const Int& t);

/// a = (k, ..., k, 1) of length n and b = k - 1.
Instance gen_r1_family(const Int& k, std::size_t n);

Instance gen_paper_2x4();

enum class RandomKind {
  General,     // rank m, b = A z with z >= 0, gamma a random basis
  Knapsack,    // m = 1, positive coprime a, b = a.z <= max_rhs, nonzero c
  Degenerate,  // m = 2, b a fractional multiple of one column; tau records it
  Bounded,     // positive first row so P(A, b) is a polytope; nonzero c
};

struct RandomSpec {
  std::size_t m = 1;
  std::size_t n = 3;
  long entry_bound = 6;
  std::uint64_t seed = 1;
  RandomKind kind = RandomKind::General;
  long max_rhs = 200;  // knapsack only
  long max_z = 3;      // entries of the point used to build b
};

/// Deterministic in the spec. Throws GenerationFailed after bounded retries.
Instance gen_random(const RandomSpec& spec);

std::string to_string(RandomKind kind);
RandomKind random_kind_from_string(const std::string& name);

}  // namespace cornerpoly
