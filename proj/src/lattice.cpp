#include "cornerpoly/lattice.hpp"

#include <algorithm>

namespace cornerpoly {

AffineLattice::AffineLattice(IntVector shift, const IntMatrix& basis) : shift_(std::move(shift)) {
  if (basis.rows() != shift_.size()) throw Error(ErrorKind::ShapeMismatch, "lattice basis rows");
  ColumnHermite ch = column_hermite(basis);
  if (ch.rank < basis.cols()) throw Error(ErrorKind::RankDeficient, "lattice basis columns are dependent");
  IndexSet lead;
  for (std::size_t c = 0; c < ch.rank; ++c) lead.push_back(c);
  basis_ = ch.hermite.select_columns(lead);
  pivot_rows_ = ch.pivot_rows;
  gram_ = det(basis_.transpose() * basis_);
  shift_ = reduce(std::move(shift_));
}

Int AffineLattice::determinant() const {
  if (!full_dimensional()) throw Error(ErrorKind::DomainError, "determinant of a lower-dimensional lattice");
  return abs(det(basis_));
}

IntVector AffineLattice::reduce(IntVector p) const {
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t i = pivot_rows_[k];
    Int q = floor_div(p[i], basis_(i, k));
    if (q == 0) continue;
    for (std::size_t r = i; r < p.size(); ++r) p[r] -= q * basis_(r, k);
  }
  return p;
}

std::optional<IntVector> AffineLattice::coefficients(const IntVector& offset) const {
  IntVector c(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t i = pivot_rows_[k];
    Int rest = offset[i];
    for (std::size_t j = 0; j < k; ++j) rest -= basis_(i, j) * c[j];
    if (rest % basis_(i, k) != 0) return std::nullopt;
    c[k] = rest / basis_(i, k);
  }
  if (!full_dimensional() && basis_ * c != offset) return std::nullopt;
  return c;
}

bool AffineLattice::member(const IntVector& p) const {
  if (p.size() != ambient_dim()) throw Error(ErrorKind::ShapeMismatch, "point dimension");
  if (congruence_) {
    Int s = dot(congruence_->weights, p) - congruence_->residue;
    return s % congruence_->modulus == 0;
  }
  IntVector offset = p;
  for (std::size_t i = 0; i < p.size(); ++i) offset[i] -= shift_[i];
  return coefficients(offset).has_value();
}

AffineLattice AffineLattice::direction() const {
  return AffineLattice(IntVector(ambient_dim(), Int(0)), basis_);
}

void AffineLattice::for_each_point(const RangeFn& range,
                                   const std::function<bool(const IntVector&)>& visit) const {
  if (!full_dimensional()) throw Error(ErrorKind::DomainError, "point walk needs a full-dimensional lattice");
  const std::size_t d = ambient_dim();
  if (d == 0) {
    visit({});
    return;
  }
  IntVector p(d), c(d);
  // Column k has its pivot on row k, so coordinate k is fixed once c_0..c_k are.
  std::function<bool(std::size_t)> walk = [&](std::size_t k) -> bool {
    Int base = shift_[k];
    for (std::size_t j = 0; j < k; ++j) base += basis_(k, j) * c[j];
    const Int& h = basis_(k, k);
    IntVector prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    auto [lo, hi] = range(k, prefix);
    if (lo > hi) return true;
    Int ck = -floor_div(base - lo, h);  // smallest c_k with base + h c_k >= lo
    for (Int v = base + h * ck; v <= hi; v += h, ++ck) {
      p[k] = v;
      c[k] = ck;
      if (k + 1 == d) {
        if (!visit(p)) return false;
      } else if (!walk(k + 1)) {
        return false;
      }
    }
    return true;
  };
  walk(0);
}

ProjectionContext::ProjectionContext(IntMatrix a, IntVector b, IndexSet gamma)
    : a_(std::move(a)), b_(std::move(b)), gamma_(std::move(gamma)) {
  if (b_.size() != a_.rows()) throw Error(ErrorKind::ShapeMismatch, "rhs length differs from row count");
  if (gamma_.size() != a_.rows()) throw Error(ErrorKind::ShapeMismatch, "gamma must have m elements");
  if (!std::is_sorted(gamma_.begin(), gamma_.end()) ||
      std::adjacent_find(gamma_.begin(), gamma_.end()) != gamma_.end() ||
      (!gamma_.empty() && gamma_.back() >= a_.cols()))
    throw Error(ErrorKind::ShapeMismatch, "gamma must be sorted distinct column indices");
  gamma_bar_ = complement(gamma_, a_.cols());

  IntMatrix a_gamma = a_.select_columns(gamma_);
  det_gamma_ = det(a_gamma);
  if (det_gamma_ == 0) throw Error(ErrorKind::RankDeficient, "A_gamma is singular");

  const std::size_t m = a_.rows();
  adj_gamma_ = IntMatrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    RatVector e(m, Rat(0));
    e[j] = 1;
    RatVector col = solve(a_gamma, e);
    for (std::size_t i = 0; i < m; ++i) adj_gamma_(i, j) = Rat(col[i] * det_gamma_).get_num();
  }
  scaled_coef_ = adj_gamma_ * a_.select_columns(gamma_bar_);
  scaled_rhs_ = adj_gamma_ * b_;
}

RatVector ProjectionContext::basic_solution() const {
  return lift(IntVector(d(), Int(0)));
}

RatVector ProjectionContext::lift(const IntVector& u) const {
  if (u.size() != d()) throw Error(ErrorKind::ShapeMismatch, "projected point dimension");
  RatVector w(n());
  IntVector top = scaled_rhs_;
  for (std::size_t i = 0; i < m(); ++i)
    for (std::size_t j = 0; j < d(); ++j) top[i] -= scaled_coef_(i, j) * u[j];
  for (std::size_t i = 0; i < m(); ++i) w[gamma_[i]] = make_rat(top[i], det_gamma_);
  for (std::size_t j = 0; j < d(); ++j) w[gamma_bar_[j]] = u[j];
  return w;
}

std::optional<IntVector> ProjectionContext::lift_integral(const IntVector& u) const {
  if (u.size() != d()) throw Error(ErrorKind::ShapeMismatch, "projected point dimension");
  IntVector w(n());
  for (std::size_t i = 0; i < m(); ++i) {
    Int top = scaled_rhs_[i];
    for (std::size_t j = 0; j < d(); ++j) top -= scaled_coef_(i, j) * u[j];
    if (top % det_gamma_ != 0) return std::nullopt;
    w[gamma_[i]] = top / det_gamma_;
  }
  for (std::size_t j = 0; j < d(); ++j) w[gamma_bar_[j]] = u[j];
  return w;
}

IntVector ProjectionContext::restrict_to_gamma_bar(const IntVector& x) const {
  IntVector u;
  u.reserve(d());
  for (auto j : gamma_bar_) u.push_back(x[j]);
  return u;
}

AffineLattice solution_lattice(const IntMatrix& a, const IntVector& b) {
  auto x0 = integer_solution(a, b);
  if (!x0) throw Error(ErrorKind::NoIntegerSolution, "Ax = b has no integer solution");
  return AffineLattice(*x0, kernel_basis(a));
}

AffineLattice project_lattice(const ProjectionContext& ctx) {
  auto x0 = integer_solution(ctx.A(), ctx.b());
  if (!x0) throw Error(ErrorKind::NoIntegerSolution, "Ax = b has no integer solution");
  IntMatrix g = kernel_basis(ctx.A());
  AffineLattice lattice(ctx.restrict_to_gamma_bar(*x0), g.select_rows(ctx.gamma_bar()));
  if (ctx.m() == 1) {
    Congruence c;
    c.modulus = abs(ctx.A()(0, ctx.gamma()[0]));
    for (auto j : ctx.gamma_bar()) {
      Int w = ctx.A()(0, j) % c.modulus;
      if (w < 0) w += c.modulus;
      c.weights.push_back(w);
    }
    c.residue = ctx.b()[0] % c.modulus;
    if (c.residue < 0) c.residue += c.modulus;
    lattice.set_congruence(std::move(c));
  }
  return lattice;
}

}  // namespace cornerpoly
