#include "doctest.h"

#include <numeric>
#include <random>

#include "cornerpoly/corner.hpp"
#include "cornerpoly/knapsack.hpp"
#include "cornerpoly/oracle.hpp"

using namespace cornerpoly;

namespace {

IntMatrix row(const IntVector& a) { return IntMatrix::from_rows({a}); }

BoxSpec feasible_box(const IntVector& a, const Int& b) {
  BoxSpec box;
  for (const auto& ai : a) {
    box.lower.push_back(0);
    box.upper.push_back(b / ai);
  }
  return box;
}

std::vector<IntVector> feasible_points(const IntVector& a, const Int& b) {
  return enumerate_integer_points(row(a), {b}, std::vector<bool>(a.size(), true), feasible_box(a, b));
}

struct RandomKnapsack {
  IntVector a;
  Int b;
  IntVector c;
};

RandomKnapsack random_knapsack(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> weight(1, 30), rhs(0, 200), cost(-5, 9);
  while (true) {
    std::size_t n = 2 + rng() % 4;
    IntVector a(n);
    Int g = 0;
    for (auto& ai : a) {
      ai = weight(rng);
      g = gcd(g, ai);
    }
    if (g != 1) continue;
    Int b = rhs(rng);
    if (feasible_points(a, b).empty()) continue;
    IntVector c(n);
    bool nonzero = false;
    for (auto& ci : c) {
      ci = cost(rng);
      nonzero = nonzero || ci != 0;
    }
    if (!nonzero) c[0] = 1;
    return {a, b, c};
  }
}

}  // namespace

TEST_CASE("semigroup membership") {
  CHECK(in_semigroup({3, 5}, 7).member == false);
  auto eight = in_semigroup({3, 5}, 8);
  REQUIRE(eight.member);
  CHECK(*eight.witness == IntVector{1, 1});
  for (long b = 0; b < 30; ++b) CHECK(in_semigroup({4, 2, 1}, b).member);
  CHECK_THROWS_AS(in_semigroup({2, 4}, 6), Error);
  CHECK_THROWS_AS(in_semigroup({3}, 6), Error);
  KnapsackLimits tight;
  tight.max_a1 = 10;
  CHECK_THROWS_AS(in_semigroup({11, 2}, 6, tight), Error);
}

TEST_CASE("semigroup membership agrees with enumeration") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> weight(2, 15);
  for (int trial = 0; trial < 60; ++trial) {
    IntVector a{weight(rng), weight(rng), weight(rng)};
    if (gcd(gcd(a[0], a[1]), a[2]) != 1) continue;
    for (long b = 0; b < 60; ++b) {
      auto res = in_semigroup(a, b);
      CHECK(res.member == !feasible_points(a, b).empty());
      if (res.member) {
        CHECK(dot(a, *res.witness) == b);
        for (const auto& z : *res.witness) CHECK(z >= 0);
      }
    }
  }
}

TEST_CASE("corner vertex inside the knapsack polytope") {
  CHECK(corner_vertex_in_P({4, 2, 1}, 7) == IntVector{1, 0, 3});
  CHECK(corner_vertex_in_P({4, 2, 1}, 4) == IntVector{1, 0, 0});
  CHECK(corner_vertex_in_P({5, 5, 1}, 4) == IntVector{0, 0, 4});
  CHECK_THROWS_AS(corner_vertex_in_P({3, 5}, 7), Error);
}

TEST_CASE("theorem three on named instances") {
  TransferenceReport alt = theorem3_report({4, 2, 1}, 7, {1, 1, 1});
  CHECK(alt.r == 2);
  CHECK(alt.delta == 1);
  CHECK(alt.lhs == 2);
  CHECK(alt.rhs == 4);
  CHECK(alt.relation == Relation::LessThan);
  CHECK(alt.holds);

  TransferenceReport r1 = check_theorem3({5, 5, 1}, 4);
  CHECK(r1.r == 1);
  CHECK(r1.delta == 4);
  CHECK(r1.rhs == 4);
  CHECK(r1.holds);
  CHECK(r1.tight);

  TransferenceReport r0 = check_theorem3({4, 2, 1}, 8);
  CHECK(r0.r == 0);
  CHECK(r0.delta == 0);
  CHECK(r0.holds);
}

TEST_CASE("linear and integer optima") {
  CHECK(lp_value({1, 1, 1}, {4, 2, 1}, 7) == Rat(7, 4));
  CHECK(lp_vertex({1, 1, 1}, {4, 2, 1}, 7) == 0);
  CHECK(lp_value({1, 1, 1}, {4, 2, 1}, 0) == 0);
  CHECK(lp_value({0, 0, 0}, {4, 2, 1}, 7) == 0);
  CHECK(lp_vertex({0, 0, 0}, {4, 2, 1}, 7) == 0);

  IpOptimum ip = ip_value({1, 1, 1}, {4, 2, 1}, 7);
  CHECK(ip.value == 3);
  CHECK(ip.argmin == IntVector{1, 1, 1});
  IpOptimum zero_cost = ip_value({0, 0, 0}, {4, 2, 1}, 7);
  CHECK(zero_cost.value == 0);
  CHECK(zero_cost.argmin == IntVector{0, 0, 7});
  IpOptimum origin = ip_value({1, 1, 1}, {4, 2, 1}, 0);
  CHECK(origin.value == 0);
  CHECK(origin.argmin == IntVector{0, 0, 0});
  CHECK_THROWS_AS(ip_value({1, 1}, {3, 5}, 7), Error);
}

TEST_CASE("integrality gap on named instances") {
  GapReport g = integrality_gap_report({1, 1, 1}, {4, 2, 1}, 7);
  CHECK(g.gap == Rat(5, 4));
  CHECK(g.permutation == std::vector<std::size_t>{0, 1, 2});
  REQUIRE(g.verdicts.size() == 2);
  CHECK(g.verdicts[1].z_star == IntVector{1, 1, 1});
  CHECK(g.verdicts[1].r == 2);
  CHECK(g.verdicts[1].corollary_rhs == 6);
  CHECK(g.all_hold);

  GapReport r1 = integrality_gap_report({0, 0, 1}, {5, 5, 1}, 4);
  CHECK(r1.gap == 4);
  REQUIRE(r1.verdicts.size() == 1);
  CHECK(r1.verdicts[0].r == 1);
  CHECK(r1.verdicts[0].corollary_rhs == 8);
  CHECK(r1.all_hold);

  GapReport r0 = integrality_gap_report({3, 1, 1}, {4, 2, 1}, 8);
  CHECK(r0.gap == 0);

  // The LP optimum sits at the third vertex; it is moved to the front.
  GapReport moved = integrality_gap_report({5, 5, 1}, {4, 2, 1}, 7);
  CHECK(moved.permutation == std::vector<std::size_t>{2, 0, 1});
  CHECK(moved.a == IntVector{1, 4, 2});
  CHECK(moved.gap == 0);
  CHECK(moved.all_hold);
}

TEST_CASE("proximity and sparsity witnesses") {
  KnapsackWitnesses w = aho_and_sparsity_exist({5, 5, 1}, 4);
  CHECK(w.proximity == IntVector{0, 0, 4});
  CHECK(w.proximity_distance == 4);
  CHECK(w.sparse == IntVector{0, 0, 4});
  CHECK(w.sparse_support == 1);

  KnapsackWitnesses k = aho_and_sparsity_exist({4, 2, 1}, 7);
  CHECK(k.sparse == IntVector{0, 0, 7});
  KnapsackWitnesses z = aho_and_sparsity_exist({4, 2, 1}, 0);
  CHECK(z.proximity == IntVector{0, 0, 0});
  CHECK(z.sparse == IntVector{0, 0, 0});
  KnapsackLimits small;
  small.max_b = 5;
  CHECK_THROWS_AS(aho_and_sparsity_exist({4, 2, 1}, 7, small), Error);
}

TEST_CASE("random knapsacks agree with enumeration") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    RandomKnapsack k = random_knapsack(rng);
    auto points = feasible_points(k.a, k.b);

    IntVector z = corner_vertex_in_P(k.a, k.b);
    for (const auto& zi : z) CHECK(zi >= 0);
    ProjectionContext ctx(row(k.a), {k.b}, {0});
    auto all = corner_vertices(ctx).lifted;
    CHECK(std::find(all.begin(), all.end(), z) != all.end());
    // z_1 is maximal over the feasible points.
    for (const auto& p : points) CHECK(p[0] <= z[0]);

    TransferenceReport t = check_theorem3(k.a, k.b);
    CHECK(t.holds);
    if (t.r >= 2) CHECK(t.lhs < t.rhs);

    IlpOptimum brute = brute_ilp_opt(row(k.a), {k.b}, k.c, Sense::Minimize, feasible_box(k.a, k.b));
    IpOptimum ip = ip_value(k.c, k.a, k.b);
    CHECK(ip.value == brute.value);
    CHECK(ip.argmin == brute.argset.front());

    GapReport g = integrality_gap_report(k.c, k.a, k.b);
    CHECK(g.gap >= 0);
    CHECK(g.all_hold);
    for (const auto& v : g.verdicts)
      if (v.r == 0) CHECK(g.gap == 0);

    KnapsackWitnesses w = aho_and_sparsity_exist(k.a, k.b);
    CHECK(dot(k.a, w.proximity) == k.b);
    CHECK(dot(k.a, w.sparse) == k.b);
    // The proximity witness is the closest feasible point up to rounding up.
    Rat closest = -1;
    for (const auto& p : points) {
      Rat d = abs(Rat(make_rat(k.b, k.a[0]) - p[0]));
      for (std::size_t i = 1; i < p.size(); ++i) d = std::max(d, Rat(p[i]));
      if (closest < 0 || d < closest) closest = d;
    }
    CHECK(w.proximity_distance >= closest);
    CHECK(w.proximity_distance <= inf_norm(k.a) - 1);
    std::size_t min_support = k.a.size();
    for (const auto& p : points) min_support = std::min(min_support, support_size(p));
    CHECK(w.sparse_support == min_support);
  }
}
