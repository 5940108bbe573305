#include "doctest.h"

#include <random>
#include <set>

#include "cornerpoly/lattice.hpp"

using namespace cornerpoly;

namespace {

const IntMatrix kTwoByFour{{2, 0, 5, 5}, {0, 4, 2, -1}};
const IntVector kTwoByFourRhs{20, 3};

ProjectionContext two_by_four() { return ProjectionContext(kTwoByFour, kTwoByFourRhs, {0, 1}); }
ProjectionContext knapsack_421(long b) { return ProjectionContext(IntMatrix{{4, 2, 1}}, {Int(b)}, {0}); }

AffineLattice without_congruence(const AffineLattice& l) { return AffineLattice(l.shift(), l.basis()); }

}  // namespace

TEST_CASE("projected knapsack lattice is the residue congruence") {
  AffineLattice l = project_lattice(knapsack_421(7));
  CHECK(l.determinant() == 4);
  REQUIRE(l.congruence().has_value());
  AffineLattice plain = without_congruence(l);
  for (long y2 = 0; y2 < 4; ++y2)
    for (long y3 = 0; y3 < 4; ++y3) {
      IntVector p{Int(y2), Int(y3)};
      bool expected = (2 * y2 + y3) % 4 == 3;
      CHECK(l.member(p) == expected);
      CHECK(plain.member(p) == expected);
    }
}

TEST_CASE("projected lattice of the two by four example") {
  ProjectionContext ctx = two_by_four();
  AffineLattice l = project_lattice(ctx);
  CHECK(l.determinant() == 8);
  CHECK(l.member({1, 3}));
  CHECK_FALSE(l.member({1, 0}));
  CHECK(ctx.lift({1, 0})[0] == Rat(15, 2));
}

TEST_CASE("homogeneous right side contains the origin") {
  ProjectionContext ctx(kTwoByFour, {0, 0}, {0, 1});
  AffineLattice l = project_lattice(ctx);
  CHECK(l.member({0, 0}));
  CHECK(l.shift() == IntVector{0, 0});
}

TEST_CASE("lift reproduces known points") {
  CHECK(two_by_four().lift({1, 3}) == to_rat({0, 1, 1, 3}));
  CHECK(knapsack_421(7).lift({1, 1}) == to_rat({1, 1, 1}));
  RatVector x = two_by_four().basic_solution();
  CHECK(x == RatVector{10, Rat(3, 4), 0, 0});
  CHECK_FALSE(two_by_four().lift_integral({1, 0}).has_value());
  CHECK(*two_by_four().lift_integral({1, 3}) == IntVector{0, 1, 1, 3});
}

TEST_CASE("unsolvable systems are rejected") {
  ProjectionContext ctx(IntMatrix{{2, 4, 6}}, {3}, {0});
  CHECK_THROWS_AS(project_lattice(ctx), Error);
  CHECK_THROWS_AS(ProjectionContext(IntMatrix{{1, 2}, {2, 4}}, {1, 2}, {0, 1}), Error);
}

TEST_CASE("shift is the lexicographically smallest nonnegative representative") {
  AffineLattice l = project_lattice(knapsack_421(7));
  // Brute force over the fundamental box.
  IntVector best;
  for (long y2 = 0; y2 < 4 && best.empty(); ++y2)
    for (long y3 = 0; y3 < 4 && best.empty(); ++y3)
      if ((2 * y2 + y3) % 4 == 3) best = {Int(y2), Int(y3)};
  CHECK(l.shift() == best);
}

TEST_CASE("random instances: projection, lift and membership are consistent") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-6, 6), nonneg(0, 3);
  int checked = 0;
  while (checked < 60) {
    std::size_t m = 1 + static_cast<std::size_t>(checked % 2);
    std::size_t n = m + 2 + static_cast<std::size_t>(checked % 2);
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    IndexSet gamma;
    for (std::size_t i = 0; i < m; ++i) gamma.push_back(i);
    if (det(a.select_columns(gamma)) == 0) continue;
    IntVector z(n);
    for (auto& v : z) v = nonneg(rng);
    IntVector b = a * z;
    ProjectionContext ctx(a, b, gamma);
    AffineLattice l = project_lattice(ctx);
    AffineLattice plain = without_congruence(l);
    Int gcd_a = minor_stats(a).gcd_minors;
    CHECK(l.determinant() == abs(ctx.det_gamma()) / gcd_a);

    // Projection then lift is the identity on integer solutions.
    CHECK(to_int(ctx.lift(ctx.restrict_to_gamma_bar(z))) == z);
    CHECK(l.member(ctx.restrict_to_gamma_bar(z)));

    // member <=> integral lift on a small box.
    std::vector<long> u(n - m, -5);
    while (true) {
      IntVector p(u.begin(), u.end());
      bool integral = is_integral(ctx.lift(p));
      CHECK(l.member(p) == integral);
      CHECK(plain.member(p) == integral);
      std::size_t i = 0;
      while (i < u.size() && u[i] == 5) u[i++] = -5;
      if (i == u.size()) break;
      ++u[i];
    }

    // Exactly det distinct cosets are hit from the box [0, det-1]^d.
    Int dl = l.determinant();
    if (dl <= 12) {
      std::set<IntVector> reps;
      long side = dl.get_si();
      std::vector<long> v(n - m, 0);
      while (true) {
        reps.insert(l.direction().reduce(IntVector(v.begin(), v.end())));
        std::size_t i = 0;
        while (i < v.size() && v[i] == side - 1) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
      }
      CHECK(reps.size() == dl.get_ui());
    }
    ++checked;
  }
}

TEST_CASE("point walk visits exactly the lattice points of a box") {
  AffineLattice l = project_lattice(two_by_four());
  std::set<IntVector> walked;
  l.for_each_point([](std::size_t, const IntVector&) { return std::pair<Int, Int>(-4, 6); },
                   [&](const IntVector& p) {
                     walked.insert(p);
                     return true;
                   });
  std::set<IntVector> brute;
  for (long x = -4; x <= 6; ++x)
    for (long y = -4; y <= 6; ++y)
      if (l.member({Int(x), Int(y)})) brute.insert({Int(x), Int(y)});
  CHECK(walked == brute);
  CHECK(walked.count({1, 3}) == 1);
}

TEST_CASE("solution lattice in the ambient space") {
  AffineLattice g = solution_lattice(kTwoByFour, kTwoByFourRhs);
  CHECK(g.rank() == 2);
  CHECK(g.member({0, 1, 1, 3}));
  CHECK_FALSE(g.member({0, 0, 0, 0}));
  CHECK(kTwoByFour * g.shift() == kTwoByFourRhs);
}
