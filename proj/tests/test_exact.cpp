#include "doctest.h"

#include <random>

#include "cornerpoly/exact.hpp"

using namespace cornerpoly;

namespace {

// Independent reference: Laplace expansion along the first row.
Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IndexSet rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    Int minor = cofactor_det(m.select_rows(rows).select_columns(cols));
    total += (c % 2 == 0 ? 1 : -1) * m(0, c) * minor;
  }
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

const IntMatrix kTwoByFour{{2, 0, 5, 5}, {0, 4, 2, -1}};

}  // namespace

TEST_CASE("determinant of small fixed matrices") {
  CHECK(det(IntMatrix::identity(2)) == 1);
  CHECK(det(IntMatrix{{2, 0}, {0, 4}}) == 8);
  CHECK(det(IntMatrix{{0, 5}, {4, 2}}) == -20);
  CHECK(det(IntMatrix(0, 0)) == 1);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 3 + static_cast<std::size_t>(trial % 2);
    IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(det(m) == cofactor_det(m));
  }
}

TEST_CASE("minor statistics") {
  MinorStats s = minor_stats(kTwoByFour);
  CHECK(s.sigma == 20);
  CHECK(s.gcd_minors == 1);
  CHECK(s.basis_count == 6);

  MinorStats k = minor_stats(IntMatrix{{4, 2, 1}});
  CHECK(k.sigma == 4);
  CHECK(k.gcd_minors == 1);

  MinorStats d = minor_stats(IntMatrix{{2, 0, 0}, {0, 2, 0}});
  CHECK(d.sigma == 4);
  CHECK(d.gcd_minors == 4);
  CHECK(d.basis_count == 1);

  CHECK_THROWS_AS(minor_stats(IntMatrix{{1, 2, 3}, {2, 4, 6}}), Error);
}

TEST_CASE("gcd of minors divides every minor") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 5, 6);
    if (rank(a) < 2) continue;
    MinorStats s = minor_stats(a);
    for_each_combination(5, 2, [&](const IndexSet& cols) {
      Int minor = det(a.select_columns(cols));
      CHECK(minor % s.gcd_minors == 0);
      CHECK(abs(minor) <= s.sigma);
      return true;
    });
  }
}

TEST_CASE("kernel basis of a single row") {
  IntMatrix g = kernel_basis(IntMatrix{{1, 1}});
  REQUIRE(g.cols() == 1);
  CHECK(abs(g(0, 0)) == 1);
  CHECK(g(0, 0) == -g(1, 0));
}

TEST_CASE("kernel determinant on the projected coordinates") {
  IntMatrix g = kernel_basis(IntMatrix{{4, 2, 1}});
  CHECK(abs(det(g.select_rows({1, 2}))) == 4);

  IntMatrix g2 = kernel_basis(kTwoByFour);
  CHECK(kTwoByFour * g2 == IntMatrix(2, 2));
  CHECK(abs(det(g2.select_rows({2, 3}))) == 8);
}

TEST_CASE("kernel determinant matches basis minor over gcd for every basis") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t m = 1 + static_cast<std::size_t>(trial % 2);
    std::size_t n = m + 1 + static_cast<std::size_t>(trial % 3);
    IntMatrix a = random_matrix(rng, m, n, 6);
    if (rank(a) < m) continue;
    IntMatrix g = kernel_basis(a);
    CHECK(a * g == IntMatrix(m, n - m));
    Int gcd_a = minor_stats(a).gcd_minors;
    for_each_combination(n, m, [&](const IndexSet& gamma) {
      Int dg = det(a.select_columns(gamma));
      if (dg != 0) CHECK(abs(det(g.select_rows(complement(gamma, n)))) == abs(dg) / gcd_a);
      return true;
    });
  }
}

TEST_CASE("kernel basis generates every brute-force kernel vector") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = 1 + static_cast<std::size_t>(trial % 2);
    std::size_t n = m + 2;
    IntMatrix a = random_matrix(rng, m, n, 6);
    if (rank(a) < m) continue;
    IntMatrix g = kernel_basis(a);
    // A kernel vector v is generated iff g * y = v has an integer solution.
    std::vector<long> v(n, -10);
    while (true) {
      IntVector x(v.begin(), v.end());
      if (a * x == IntVector(m, Int(0))) CHECK(integer_solution(g, x).has_value());
      std::size_t i = 0;
      while (i < n && v[i] == 10) v[i++] = -10;
      if (i == n) break;
      ++v[i];
    }
  }
}

TEST_CASE("column hermite form is unimodular and echelon") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 4, 6);
    ColumnHermite ch = column_hermite(a);
    CHECK(a * ch.transform == ch.hermite);
    CHECK(abs(det(ch.transform)) == 1);
    CHECK(ch.rank == rank(a));
    for (std::size_t k = 0; k < ch.rank; ++k) {
      std::size_t i = ch.pivot_rows[k];
      CHECK(ch.hermite(i, k) > 0);
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(ch.hermite(i, j) >= 0);
        CHECK(ch.hermite(i, j) < ch.hermite(i, k));
      }
    }
  }
}

TEST_CASE("integer solvability") {
  auto x = integer_solution(kTwoByFour, {20, 3});
  REQUIRE(x.has_value());
  CHECK(kTwoByFour * *x == IntVector{20, 3});
  CHECK_FALSE(integer_solution(IntMatrix{{2, 4}}, {3}).has_value());
  CHECK(integer_solution(IntMatrix{{2, 4}}, {6}).has_value());
}

TEST_CASE("rational solve") {
  RatVector x = solve(IntMatrix{{2, 0}, {0, 4}}, {Rat(20), Rat(3)});
  CHECK(x[0] == 10);
  CHECK(x[1] == Rat(3, 4));
}

TEST_CASE("row space basis keeps the row lattice") {
  IntMatrix a{{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  IntMatrix r = row_space_basis(a);
  CHECK(r.rows() == 2);
  for (std::size_t i = 0; i < a.rows(); ++i)
    CHECK(integer_solution(r.transpose(), a.row(i)).has_value());
  CHECK(independent_rows(a) == IndexSet{0, 2});
}

TEST_CASE("combinations are lexicographic") {
  std::vector<IndexSet> seen;
  for_each_combination(4, 2, [&](const IndexSet& s) {
    seen.push_back(s);
    return true;
  });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == IndexSet{0, 1});
  CHECK(seen[1] == IndexSet{0, 2});
  CHECK(seen.back() == IndexSet{2, 3});
}
