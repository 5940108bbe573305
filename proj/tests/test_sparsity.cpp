#include "doctest.h"

#include <random>

#include "cornerpoly/oracle.hpp"
#include "cornerpoly/sparsity.hpp"

using namespace cornerpoly;

namespace {

// Cauchy-Binet: det(A A^T) is the sum of the squared maximal minors.
Int cauchy_binet(const IntMatrix& a) {
  Int total = 0;
  for_each_combination(a.cols(), a.rows(), [&](const IndexSet& cols) {
    Int d = det(a.select_columns(cols));
    total += d * d;
    return true;
  });
  return total;
}

struct Bounded {
  IntMatrix a;
  IntVector b;
  IntVector c;
};

// The first row is positive, so P(A, b) is a polytope.
Bounded random_bounded(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pos(1, 6), entry(-6, 6), small(0, 3), cost(-4, 6);
  while (true) {
    std::size_t m = 1 + rng() % 2;
    std::size_t n = m + 1 + rng() % (5 - m);
    IntMatrix a(m, n);
    for (std::size_t j = 0; j < n; ++j) a(0, j) = pos(rng);
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    if (rank(a) < m) continue;
    IntVector z(n), c(n);
    for (auto& v : z) v = small(rng);
    for (auto& v : c) v = cost(rng);
    return {a, a * z, c};
  }
}

}  // namespace

TEST_CASE("minimum support optimum of the small knapsack") {
  MinSupportResult r = min_support_optimum(IntMatrix{{4, 2, 1}}, {7}, {1, 1, 1}, 10);
  CHECK(r.optimum == 7);
  CHECK(r.z_star == IntVector{0, 0, 7});
  CHECK(r.report.s == 1);
  CHECK(r.report.rho == 7);
  CHECK(r.report.lhs == 1);
  CHECK(r.report.det_aat == 21);
  CHECK(r.report.holds);
  CHECK(r.report.is_hull_vertex);

  MinSupportResult zero = min_support_optimum(IntMatrix{{4, 2, 1}}, {7}, {0, 0, 0}, 10);
  CHECK(zero.report.s == 1);
  CHECK(zero.z_star == IntVector{0, 0, 7});
}

TEST_CASE("minimum support optimum error paths") {
  CHECK_THROWS_AS(min_support_optimum(IntMatrix{{1, -1}}, {0}, {1, 1}, 50), Error);
  try {
    min_support_optimum(IntMatrix{{2, 4}}, {3}, {1, 1}, 50);
    FAIL("expected Infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
  try {
    min_support_optimum(IntMatrix{{1, 1}}, {100}, {1, 1}, 50);
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
  }
}

TEST_CASE("support bound examples") {
  CHECK(support_bound_check({0, 0, 7}, IntMatrix{{4, 2, 1}}));
  CHECK(support_bound_check({0, 0, 0}, IntMatrix{{4, 2, 1}}));
  CHECK(support_bound_check({0, 0, 4}, IntMatrix{{5, 5, 1}}));
  // Three nonzeros with det = 21 would need 2^4 <= 21.
  CHECK(support_bound_check({1, 1, 1}, IntMatrix{{4, 2, 1}}));
  CHECK_FALSE(support_bound_check({1, 1, 1}, IntMatrix{{1, 1, 1}}));
}

TEST_CASE("short kernel vectors of named matrices") {
  ShortVectors one = bv_short_vectors(IntMatrix{{1, 1}});
  CHECK(one.vectors == std::vector<IntVector>{{1, -1}});
  CHECK(one.norm_product == 1);
  CHECK(one.bound_holds);

  ShortVectors k = bv_short_vectors(IntMatrix{{4, 2, 1}});
  CHECK(k.vectors == std::vector<IntVector>{{0, 1, -2}, {1, -2, 0}});
  CHECK(k.norm_product == 4);
  CHECK(k.bound_holds);

  IntMatrix two{{2, 0, 5, 5}, {0, 4, 2, -1}};
  ShortVectors t = bv_short_vectors(two);
  CHECK(t.det_aat == 1109);
  CHECK(t.vectors.size() == 2);
  CHECK(t.bound_holds);
  for (const auto& y : t.vectors) CHECK(two * y == IntVector{0, 0});
}

TEST_CASE("random bounded instances satisfy the sparsity bounds") {
  std::mt19937_64 rng(61);
  int vertices = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Bounded inst = random_bounded(rng);
    MinSupportResult r = min_support_optimum(inst.a, inst.b, inst.c, 100);
    CHECK(r.report.det_aat == cauchy_binet(inst.a));
    CHECK(dot(inst.c, r.z_star) == r.optimum);
    CHECK(r.report.holds);
    CHECK(r.report.reduction_monotone);
    CHECK(support_bound_check(r.z_star, inst.a));

    // Brute-force reference for the optimum and the minimum support.
    BoxSpec box;
    box.lower.assign(inst.a.cols(), Int(0));
    box.upper.assign(inst.a.cols(), Int(100));
    IlpOptimum brute = brute_ilp_opt(inst.a, inst.b, inst.c, Sense::Maximize, box);
    CHECK(brute.value == r.optimum);
    std::size_t min_s = inst.a.cols();
    for (const auto& p : brute.argset) min_s = std::min(min_s, support_size(p));
    CHECK(r.report.s == min_s);

    for (const auto& rep : r.minimum_support_optima)
      if (rep.is_hull_vertex) {
        ++vertices;
        CHECK(rep.holds);
        CHECK(rep.reduced_holds);
      }

    ShortVectors sv = bv_short_vectors(inst.a);
    REQUIRE(sv.vectors.size() == inst.a.cols() - inst.a.rows());
    CHECK(rank(IntMatrix::from_rows(sv.vectors)) == sv.vectors.size());
    for (const auto& y : sv.vectors) CHECK(inst.a * y == IntVector(inst.a.rows(), Int(0)));
    CHECK(sv.bound_holds);
    CHECK(sv.det_aat == cauchy_binet(inst.a));
  }
  CHECK(vertices > 0);
}

TEST_CASE("first short vector attains the smallest kernel norm") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a(1, 3);
    for (std::size_t j = 0; j < 3; ++j) a(0, j) = entry(rng);
    if (rank(a) < 1) continue;
    ShortVectors sv = bv_short_vectors(a);
    Int best = -1;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        for (long z = -6; z <= 6; ++z) {
          IntVector v{Int(x), Int(y), Int(z)};
          if (v == IntVector(3, Int(0)) || dot(a.row(0), v) != 0) continue;
          if (best < 0 || inf_norm(v) < best) best = inf_norm(v);
        }
    CHECK(inf_norm(sv.vectors.front()) == best);
  }
}
