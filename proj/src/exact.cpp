#include "cornerpoly/exact.hpp"

#include <algorithm>
#include <utility>

namespace cornerpoly {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

Int parse_int(const std::string& text) {
  Int v;
  std::string trimmed = text;
  if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
  if (trimmed.empty() || v.set_str(trimmed, 10) != 0) {
    throw Error(ErrorKind::InvalidInstance, "not a decimal integer: '" + text + "'");
  }
  return v;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int make_primitive(IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return g;
}

RatVector to_rat(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntVector to_int(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw Error(ErrorKind::DomainError, "vector is not integral");
    out.push_back(x.get_num());
  }
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const IntVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int inf_norm(const IntVector& v) {
  Int m = 0;
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

Rat inf_norm(const RatVector& v) {
  Rat m = 0;
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

std::size_t support_size(const IntVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Int& x) { return x != 0; }));
}

IndexSet support(const IntVector& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.push_back(i);
  }
  return s;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const IndexSet&)>& fn) {
  if (k > n) return;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::ShapeMismatch, "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::select_columns(const IndexSet& cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const IndexSet& rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(rows[k], c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size");
  IntVector y(rows_, Int(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

RatVector IntMatrix::operator*(const RatVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size");
  RatVector y(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.rows_ != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix product size");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += (*this)(r, k) * other(k, c);
    }
  return p;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = m(r, c);
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

// ---------------------------------------------------------------------------

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact by Sylvester's identity
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(p, k));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Int f = a(i, c), g = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) = a(i, k) * g - a(r, k) * f;
      IntVector rowv = a.row(i);
      Int content = 0;
      for (const auto& x : rowv) content = gcd(content, x);
      if (content > 1)
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) /= content;
    }
    ++r;
  }
  return r;
}

MinorStats minor_stats(const IntMatrix& a) {
  MinorStats stats;
  stats.sigma = 0;
  stats.gcd_minors = 0;
  for_each_combination(a.cols(), a.rows(), [&](const IndexSet& cols) {
    Int d = abs(det(a.select_columns(cols)));
    if (d != 0) {
      ++stats.basis_count;
      stats.sigma = std::max(stats.sigma, d);
      stats.gcd_minors = gcd(stats.gcd_minors, d);
    }
    return true;
  });
  if (stats.sigma == 0) throw Error(ErrorKind::RankDeficient, "all maximal minors vanish");
  return stats;
}

namespace {

void column_combine(IntMatrix& m, std::size_t p, std::size_t j, const Int& s, const Int& t,
                    const Int& u, const Int& v) {
  // (col_p, col_j) <- (s col_p + t col_j, u col_p + v col_j)
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int cp = m(r, p), cj = m(r, j);
    m(r, p) = s * cp + t * cj;
    m(r, j) = u * cp + v * cj;
  }
}

void column_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  // col_dst -= q col_src
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void column_negate(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

ColumnHermite column_hermite(const IntMatrix& a) {
  ColumnHermite out;
  out.hermite = a;
  out.transform = IntMatrix::identity(a.cols());
  IntMatrix& h = out.hermite;
  IntMatrix& u = out.transform;
  std::size_t p = 0;
  for (std::size_t i = 0; i < h.rows() && p < h.cols(); ++i) {
    for (std::size_t j = p + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0) continue;
      Int x = h(i, p), y = h(i, j);
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Int uu = -y / g, vv = x / g;
      column_combine(h, p, j, s, t, uu, vv);
      column_combine(u, p, j, s, t, uu, vv);
    }
    if (h(i, p) == 0) continue;
    if (h(i, p) < 0) {
      column_negate(h, p);
      column_negate(u, p);
    }
    for (std::size_t k = 0; k < p; ++k) {
      Int q = floor_div(h(i, k), h(i, p));
      if (q != 0) {
        column_axpy(h, k, p, q);
        column_axpy(u, k, p, q);
      }
    }
    out.pivot_rows.push_back(i);
    ++p;
  }
  out.rank = p;
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  ColumnHermite ch = column_hermite(a);
  if (ch.rank < a.rows()) throw Error(ErrorKind::RankDeficient, "kernel_basis needs full row rank");
  IndexSet tail;
  for (std::size_t c = ch.rank; c < a.cols(); ++c) tail.push_back(c);
  return ch.transform.select_columns(tail);
}

std::optional<IntVector> integer_solution(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "rhs size");
  ColumnHermite ch = column_hermite(a);
  // Solve hermite * y == b by forward substitution over the pivot rows and
  // verify the remaining rows.
  IntVector y(a.cols(), Int(0));
  for (std::size_t k = 0; k < ch.rank; ++k) {
    std::size_t i = ch.pivot_rows[k];
    Int rest = b[i];
    for (std::size_t j = 0; j < k; ++j) rest -= ch.hermite(i, j) * y[j];
    if (rest % ch.hermite(i, k) != 0) return std::nullopt;
    y[k] = rest / ch.hermite(i, k);
  }
  if (ch.hermite * y != b) return std::nullopt;
  return ch.transform * y;
}

RatVector solve(const IntMatrix& m, const RatVector& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw Error(ErrorKind::ShapeMismatch, "solve shape");
  RatMatrix a(m);
  RatVector x = rhs;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::RankDeficient, "singular system");
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(p, k));
      std::swap(x[c], x[p]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
      x[i] -= f * x[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= a(i, i);
  return x;
}

IntMatrix row_space_basis(const IntMatrix& a) {
  ColumnHermite ch = column_hermite(a.transpose());
  IndexSet lead;
  for (std::size_t c = 0; c < ch.rank; ++c) lead.push_back(c);
  return ch.hermite.select_columns(lead).transpose();
}

IndexSet independent_rows(const IntMatrix& a) {
  IndexSet chosen;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    IndexSet trial = chosen;
    trial.push_back(r);
    if (rank(a.select_rows(trial)) == trial.size()) chosen = std::move(trial);
  }
  return chosen;
}

}  // namespace cornerpoly
