#include "doctest.h"

#include <algorithm>
#include <random>

#include "cornerpoly/corner.hpp"
#include "cornerpoly/oracle.hpp"

using namespace cornerpoly;

namespace {

const IntMatrix kTwoByFour{{2, 0, 5, 5}, {0, 4, 2, -1}};
const IntVector kTwoByFourRhs{20, 3};

Int box_volume(const IntVector& x) {
  Int v = 1;
  for (const auto& xi : x) v *= xi + 1;
  return v;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Random full-row-rank instance with Gamma(A, b) nonempty and a basis among
// the first columns that are independent.
struct SmallInstance {
  IntMatrix a;
  IntVector b;
  IndexSet gamma;
};

SmallInstance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-6, 6), nonneg(0, 3);
  std::uniform_int_distribution<std::size_t> mdist(1, 2);
  while (true) {
    std::size_t m = mdist(rng);
    std::size_t n = m + 1 + (rng() % (5 - m));
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    auto bases = bases_containing(a, {});
    if (bases.empty()) continue;
    IntVector z(n);
    for (auto& v : z) v = nonneg(rng);
    return {a, a * z, bases.front()};
  }
}

}  // namespace

TEST_CASE("irreducibility in the orthant") {
  ProjectionContext ctx(IntMatrix{{4, 2, 1}}, {7}, {0});
  AffineLattice l = project_lattice(ctx);
  auto orthant = ConeInequalities::orthant(2);
  CHECK(is_irreducible({0, 0}, l, orthant));
  CHECK(is_irreducible({1, 1}, l, orthant));
  CHECK_FALSE(is_irreducible({3, 1}, l, orthant));
  CHECK_THROWS_AS(is_irreducible({-1, 0}, l, orthant), Error);
}

TEST_CASE("cone irreducibility agrees with the orthant test on the orthant") {
  ProjectionContext ctx(kTwoByFour, kTwoByFourRhs, {0, 1});
  AffineLattice l = project_lattice(ctx);
  // Adding the redundant row x1 + x2 >= 0 forces the general code path.
  ConeInequalities wide = ConeInequalities::orthant(2);
  wide.rows.push_back({1, 1});
  for (long x = 0; x < 6; ++x)
    for (long y = 0; y < 6; ++y) {
      IntVector p{Int(x), Int(y)};
      CHECK(is_irreducible(p, l, ConeInequalities::orthant(2)) == is_irreducible(p, l, wide));
    }
}

TEST_CASE("sail vertices of the named examples") {
  ProjectionContext k(IntMatrix{{4, 2, 1}}, {7}, {0});
  Sail s = sail_vertices(project_lattice(k));
  CHECK(s.vertices == std::vector<IntVector>{{0, 3}, {1, 1}});

  ProjectionContext ctx(kTwoByFour, kTwoByFourRhs, {0, 1});
  CHECK(sail_vertices(project_lattice(ctx)).vertices == std::vector<IntVector>{{1, 3}});

  // 0 in the lattice makes the origin the only vertex.
  ProjectionContext zero(kTwoByFour, {4, 8}, {0, 1});
  CHECK(sail_vertices(project_lattice(zero)).vertices == std::vector<IntVector>{{0, 0}});
}

TEST_CASE("corner vertices of the named examples") {
  CHECK(corner_vertices(ProjectionContext(kTwoByFour, kTwoByFourRhs, {0, 1})).lifted ==
        std::vector<IntVector>{{0, 1, 1, 3}});
  CHECK(corner_vertices(ProjectionContext(IntMatrix{{4, 2, 1}}, {7}, {0})).lifted ==
        std::vector<IntVector>{{1, 0, 3}, {1, 1, 1}});
  // Integral basic solution: it is the only vertex.
  CHECK(corner_vertices(ProjectionContext(IntMatrix{{4, 2, 1}}, {8}, {0})).lifted ==
        std::vector<IntVector>{{2, 0, 0}});
  CHECK_THROWS_AS(corner_vertices(ProjectionContext(IntMatrix{{2, 4, 6}}, {3}, {0})), Error);
}

TEST_CASE("oracle reproduces the named examples") {
  auto two = brute_corner_vertices(kTwoByFour, kTwoByFourRhs, {0, 1});
  CHECK(two.vertices == std::vector<IntVector>{{0, 1, 1, 3}});
  CHECK(two.certificate.rounds == 2);
  CHECK(two.certificate.region_inside_box);
  CHECK(brute_corner_vertices(IntMatrix{{4, 2, 1}}, {7}, {0}).vertices ==
        std::vector<IntVector>{{1, 0, 3}, {1, 1, 1}});
  CHECK(brute_corner_vertices(IntMatrix{{4, 2, 1}}, {8}, {0}).vertices == std::vector<IntVector>{{2, 0, 0}});
}

TEST_CASE("oracle enumeration of a knapsack") {
  BoxSpec box{{0, 0, 0}, {7, 7, 7}};
  auto pts = enumerate_integer_points(IntMatrix{{4, 2, 1}}, {7}, {true, true, true}, box);
  CHECK(pts == std::vector<IntVector>{{0, 0, 7}, {0, 1, 5}, {0, 2, 3}, {0, 3, 1}, {1, 0, 3}, {1, 1, 1}});
  CHECK(enumerate_integer_points(IntMatrix{{4, 2, 1}}, {0}, {true, true, true}, box) ==
        std::vector<IntVector>{{0, 0, 0}});
  CHECK(enumerate_integer_points(IntMatrix{{2, 4, 6}}, {3}, {true, true, true}, box).empty());
  auto opt = brute_ilp_opt(IntMatrix{{4, 2, 1}}, {7}, {1, 1, 1}, Sense::Minimize, box);
  CHECK(opt.value == 3);
  CHECK(opt.argset == std::vector<IntVector>{{1, 1, 1}});
  CHECK_THROWS_AS(brute_ilp_opt(IntMatrix{{2, 4, 6}}, {3}, {1, 1, 1}, Sense::Minimize, box), Error);
}

TEST_CASE("integer hull of small knapsacks") {
  CHECK(integer_hull_vertices({2, 1}, 3) == std::vector<IntVector>{{0, 3}, {1, 1}});
  auto v = integer_hull_vertices({4, 2, 1}, 7);
  CHECK(std::find(v.begin(), v.end(), IntVector{1, 1, 1}) != v.end());
  CHECK(integer_hull_vertices({4, 2, 1}, 0) == std::vector<IntVector>{{0, 0, 0}});
  // The subset-sum prefilter only removes non-vertices.
  for (long b = 0; b < 30; ++b) {
    if (b != 1) CHECK(integer_hull_vertices({5, 3, 2}, b) == integer_hull_vertices({5, 3, 2}, b, false));
    CHECK(integer_hull_vertices({7, 4, 3, 1}, b) == integer_hull_vertices({7, 4, 3, 1}, b, false));
  }
  CHECK_THROWS_AS(integer_hull_vertices({5, 3, 2}, 1), Error);
}

TEST_CASE("random instances: sail invariants and agreement with the oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    SmallInstance inst = random_instance(rng);
    ProjectionContext ctx(inst.a, inst.b, inst.gamma);
    CornerVertexSet cv = corner_vertices(ctx);
    const Sail& s = cv.projected;
    const Int dl = s.lattice.determinant();
    REQUIRE_FALSE(s.vertices.empty());
    CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      const IntVector& x = s.vertices[k];
      CHECK(is_irreducible(x, s.lattice, s.cone));
      CHECK(box_volume(x) <= dl);
      CHECK(inst.a * cv.lifted[k] == inst.b);
      for (std::size_t i = 0; i < x.size(); ++i) {
        IntVector moved = x;
        moved[i] += dl;
        CHECK(s.lattice.member(moved));
        CHECK(std::find(s.vertices.begin(), s.vertices.end(), moved) == s.vertices.end());
      }
    }
    CHECK(sorted(cv.lifted) == brute_corner_vertices(inst.a, inst.b, inst.gamma).vertices);
    // Determinism.
    CHECK(corner_vertices(ctx).lifted == cv.lifted);
  }
}

TEST_CASE("cone sail of a full basis equals the orthant corner") {
  CornerVertexSet tau_full = corner_tau_vertices(kTwoByFour, kTwoByFourRhs, {0, 1});
  CHECK(tau_full.lifted == std::vector<IntVector>{{0, 1, 1, 3}});
  CornerVertexSet knap = corner_tau_vertices(IntMatrix{{4, 2, 1}}, {7}, {0});
  CHECK(knap.lifted == std::vector<IntVector>{{1, 0, 3}, {1, 1, 1}});
}

TEST_CASE("basis choice on the two by four example") {
  BasisChoice c = choose_basis_prop2(kTwoByFour, {0, 1, 1, 3}, {1});
  CHECK(c.gamma == IndexSet{1, 3});
  CHECK(c.mu == IndexSet{1, 2, 3});
  CHECK(c.careful_choice_holds);
  CHECK(c.termwise_holds);
  // Direct scores over bases of A containing column 1.
  Int best = 0;
  IndexSet arg;
  for (const auto& g : bases_containing(kTwoByFour, {1})) {
    Int score = abs(det(kTwoByFour.select_columns(g)));
    for (auto i : g) score *= IntVector{0, 1, 1, 3}[i] + 1;
    if (score > best) {
      best = score;
      arg = g;
    }
  }
  CHECK(best == 160);
  CHECK(arg == c.gamma);

  CHECK(choose_basis_prop2(kTwoByFour, {0, 1, 1, 3}, {0, 1}).gamma == IndexSet{0, 1});
  CHECK(choose_basis_prop2(IntMatrix{{4, 2, 1}}, {1, 1, 1}, {0}).gamma == IndexSet{0});
  CHECK_THROWS_AS(choose_basis_prop2(IntMatrix{{1, 2, 0}, {2, 4, 0}}, {1, 0, 0}, {0, 1}), Error);
}

namespace {

// Degenerate instance: b is a fractional multiple of a column, so the vertex
// of P(A, b) has support one column while m = 2.
struct Degenerate {
  IntMatrix a;
  IntVector b;
  IndexSet tau;
};

Degenerate random_degenerate(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-6, 6), mult(1, 9);
  while (true) {
    IntMatrix a(2, n);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    if (rank(a) < 2) continue;
    std::size_t j = rng() % n;
    Int g = gcd(a(0, j), a(1, j));
    if (g < 2) continue;
    long k = mult(rng);
    if (k % g == 0) continue;
    IntVector b{k * (a(0, j) / g), k * (a(1, j) / g)};
    if (!integer_solution(a, b)) continue;
    return {a, b, {j}};
  }
}

}  // namespace

TEST_CASE("degenerate instances: cone sail agrees with the oracle") {
  std::mt19937_64 rng(77);
  int empty = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Degenerate inst = random_degenerate(rng, 4);
    OracleVertices ov = brute_corner_vertices(inst.a, inst.b, inst.tau);
    CornerVertexSet cv;
    try {
      cv = corner_tau_vertices(inst.a, inst.b, inst.tau);
    } catch (const Error& e) {
      // No candidate at all means the relaxation has no integer point.
      REQUIRE(e.kind() == ErrorKind::EmptySail);
      CHECK(ov.vertices.empty());
      ++empty;
      continue;
    }
    CHECK(sorted(cv.lifted) == ov.vertices);
    for (const auto& z : cv.lifted) {
      CHECK(inst.a * z == inst.b);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != inst.tau[0]) CHECK(z[j] >= 0);
      BasisChoice c = choose_basis_prop2(inst.a, z, inst.tau);
      CHECK(c.careful_choice_holds);
      CHECK(c.termwise_holds);
      CHECK(is_subset(inst.tau, c.gamma));
      // Another row basis of A_mu gives the same choice.
      IntMatrix alt = c.reduced;
      if (alt.rows() == 2) {
        for (std::size_t col = 0; col < alt.cols(); ++col) alt(0, col) += 3 * alt(1, col);
      }
      CHECK(choose_basis_prop2(inst.a, z, inst.tau, alt).gamma == c.gamma);
    }
  }
  CHECK(empty < 25);
}
