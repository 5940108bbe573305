#pragma once

// Exact integer/rational scalars and dense integer matrices.
//
// Everything in the library is computed over Z and Q with GMP; there are no
// floating point predicates anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cornerpoly/error.hpp"

namespace cornerpoly {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Sorted, duplicate-free list of 0-based column indices.
using IndexSet = std::vector<std::size_t>;

/// Builds a canonical rational; throws DomainError on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);
Int parse_int(const std::string& text);

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);
Rat abs(const Rat& a);
Int floor_div(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long exponent);

/// Divides out the content of v and returns it (0 for the zero vector).
Int make_primitive(IntVector& v);

RatVector to_rat(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector to_int(const RatVector& v);  // throws DomainError if not integral

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const IntVector& b);
Int inf_norm(const IntVector& v);
Rat inf_norm(const RatVector& v);
std::size_t support_size(const IntVector& v);
IndexSet support(const IntVector& v);

/// Complement of `s` inside {0, ..., n-1}.
IndexSet complement(const IndexSet& s, std::size_t n);
bool is_subset(const IndexSet& small, const IndexSet& big);
IndexSet set_union(const IndexSet& a, const IndexSet& b);

/// Calls fn on every k-subset of {0..n-1} in lexicographic order; stops early
/// when fn returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const IndexSet&)>& fn);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix select_columns(const IndexSet& cols) const;
  IntMatrix select_rows(const IndexSet& rows) const;
  IntMatrix transpose() const;

  IntVector operator*(const IntVector& x) const;
  RatVector operator*(const RatVector& x) const;
  IntMatrix operator*(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Dense rational matrix, only used for small solves and LP tableaux.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RatVector row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Fraction-free Bareiss determinant. The 0x0 determinant is 1.
Int det(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

struct MinorStats {
  Int sigma;         // largest |det| over all m x m column subsets
  Int gcd_minors;    // gcd of all m x m minors
  std::size_t basis_count = 0;
};

/// Exhaustive over all C(n, m) column subsets. Throws RankDeficient when all
/// minors vanish.
MinorStats minor_stats(const IntMatrix& a);

/// Column-style Hermite reduction: a * transform == hermite, where `transform`
/// is unimodular and the first `rank` columns of `hermite` are in lower
/// echelon form with positive pivots and reduced entries left of each pivot.
/// The remaining columns are zero.
struct ColumnHermite {
  IntMatrix hermite;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of each of the first `rank` columns
};

ColumnHermite column_hermite(const IntMatrix& a);

/// n x (n - m) basis of the integer kernel lattice of a full-row-rank a.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some integer x with a * x == b, or nullopt when none exists.
std::optional<IntVector> integer_solution(const IntMatrix& a, const IntVector& b);

/// Unique rational solution of m * x == rhs for square nonsingular m.
RatVector solve(const IntMatrix& m, const RatVector& rhs);

/// Rows of a Hermite-reduced basis of the row space of a (full row rank).
IntMatrix row_space_basis(const IntMatrix& a);

/// Lexicographically first maximal set of linearly independent rows.
IndexSet independent_rows(const IntMatrix& a);

}  // namespace cornerpoly
