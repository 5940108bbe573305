#include "cornerpoly/sparsity.hpp"

#include <algorithm>

#include "cornerpoly/corner.hpp"
#include "cornerpoly/lattice.hpp"
#include "cornerpoly/lp.hpp"
#include "cornerpoly/oracle.hpp"

namespace cornerpoly {

namespace {

Int gram_det(const IntMatrix& a) { return det(a * a.transpose()); }

Int minor_gcd(const IntMatrix& a) {
  if (a.rows() == 0) return 1;
  return minor_stats(a).gcd_minors;
}

// z is a vertex of conv(points) iff it is not a convex combination of the others.
bool is_vertex_of(const IntVector& z, const std::vector<IntVector>& points) {
  std::vector<IntVector> others;
  for (const auto& p : points)
    if (p != z) others.push_back(p);
  if (others.empty()) return true;
  const std::size_t n = z.size();
  IntMatrix eq(n + 1, others.size());
  for (std::size_t k = 0; k < others.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) eq(i, k) = others[k][i];
    eq(n, k) = 1;
  }
  IntVector rhs = z;
  rhs.push_back(1);
  return !lp_feasible(eq, rhs).feasible;
}

// Some point of P(A, b) has x_i >= cap + 1.
bool exceeds_cap(const IntMatrix& a, const IntVector& b, std::size_t i, const Int& cap) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix eq(m + 1, n + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j) eq(r, j) = a(r, j);
  eq(m, i) = 1;
  eq(m, n) = -1;
  IntVector rhs = b;
  rhs.push_back(cap + 1);
  return lp_feasible(eq, rhs).feasible;
}

}  // namespace

bool transference_sparsity_holds(std::size_t s, std::size_t m, const Int& rho, const Int& det_aat,
                                 const Int& gcd_a) {
  if (s <= m) return true;
  return pow(rho + 1, 2 * (s - m)) * gcd_a * gcd_a <= det_aat;
}

SparsityReport sparsity_report(const IntMatrix& a, const IntVector& z) {
  if (z.size() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "z has the wrong length");
  SparsityReport rep;
  rep.z_star = z;
  rep.m = a.rows();
  const IndexSet tau = support(z);
  rep.s = tau.size();
  rep.rho = 0;
  for (std::size_t i : tau)
    if (rep.rho == 0 || abs(z[i]) < rep.rho) rep.rho = abs(z[i]);
  if (rep.s >= rep.m)
    rep.lhs = Rat(pow(rep.rho + 1, rep.s - rep.m));
  else
    rep.lhs = make_rat(1, pow(rep.rho + 1, rep.m - rep.s));
  rep.det_aat = gram_det(a);
  rep.gcd_a = minor_gcd(a);
  rep.holds = transference_sparsity_holds(rep.s, rep.m, rep.rho, rep.det_aat, rep.gcd_a);

  IntMatrix restricted = a.select_columns(tau);
  IntMatrix reduced = restricted.select_rows(tau.empty() ? IndexSet{} : independent_rows(restricted));
  rep.reduced_m = reduced.rows();
  rep.reduced_det_aat = rep.reduced_m == 0 ? Int(1) : gram_det(reduced);
  rep.reduced_gcd = minor_gcd(reduced);
  rep.reduction_monotone =
      rep.reduced_det_aat * rep.gcd_a * rep.gcd_a <= rep.det_aat * rep.reduced_gcd * rep.reduced_gcd;
  rep.reduced_holds =
      transference_sparsity_holds(rep.s, rep.reduced_m, rep.rho, rep.reduced_det_aat, rep.reduced_gcd);
  return rep;
}

MinSupportResult min_support_optimum(const IntMatrix& a, const IntVector& b, const IntVector& c,
                                     const Int& box_cap) {
  const std::size_t n = a.cols();
  if (c.size() != n || b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "c or b has the wrong length");
  if (rank(a) < a.rows()) throw Error(ErrorKind::RankDeficient, "A must have full row rank");
  for (std::size_t i = 0; i < n; ++i)
    if (exceeds_cap(a, b, i, box_cap))
      throw Error(ErrorKind::SearchSpaceTooLarge, "P(A, b) leaves the box [0, " + to_string(box_cap) + "]^n");
  BoxSpec box;
  box.lower.assign(n, Int(0));
  box.upper.assign(n, box_cap);
  auto points = enumerate_integer_points(a, b, std::vector<bool>(n, true), box);
  if (points.empty()) throw Error(ErrorKind::Infeasible, "P(A, b) has no integer point");

  Int best = dot(c, points.front());
  for (const auto& p : points) best = std::max(best, dot(c, p));
  std::size_t min_support = n + 1;
  for (const auto& p : points)
    if (dot(c, p) == best) min_support = std::min(min_support, support_size(p));

  MinSupportResult out;
  out.optimum = best;
  for (const auto& p : points) {
    if (dot(c, p) != best || support_size(p) != min_support) continue;
    SparsityReport rep = sparsity_report(a, p);
    rep.is_hull_vertex = is_vertex_of(p, points);
    out.minimum_support_optima.push_back(rep);
  }
  out.report = out.minimum_support_optima.front();
  out.z_star = out.report.z_star;
  return out;
}

bool support_bound_check(const IntVector& z, const IntMatrix& a) {
  std::size_t s = support_size(z), m = a.rows();
  if (s <= m) return true;
  Int g = minor_gcd(a);
  return pow(Int(2), 2 * (s - m)) * g * g <= gram_det(a);
}

ShortVectors bv_short_vectors(const IntMatrix& a, std::size_t point_budget) {
  const std::size_t m = a.rows(), n = a.cols();
  if (n <= m) throw Error(ErrorKind::DomainError, "needs m < n");
  if (n - m > 5) throw Error(ErrorKind::DimensionTooLarge, "n - m exceeds 5");
  auto bases = bases_containing(a, {});
  if (bases.empty()) throw Error(ErrorKind::RankDeficient, "A must have full row rank");
  ProjectionContext ctx(a, IntVector(m, Int(0)), bases.front());
  AffineLattice kernel = project_lattice(ctx);

  ShortVectors out;
  out.det_aat = gram_det(a);
  out.gcd_a = minor_gcd(a);
  std::size_t visited = 0;
  std::vector<IntVector> chosen;
  for (Int norm = 1; chosen.size() < n - m; ++norm) {
    // Every nonzero kernel vector has norm at most the bound, and no
    // independent set can be completed past it.
    if (norm * norm * out.gcd_a * out.gcd_a > out.det_aat)
      throw Error(ErrorKind::SearchBudgetExceeded, "no independent set below the bound");
    std::vector<IntVector> shell;
    kernel.for_each_point([&](std::size_t, const IntVector&) { return std::pair<Int, Int>(-norm, norm); },
                          [&](const IntVector& p) {
                            if (++visited > point_budget) return false;
                            IntVector y = to_int(ctx.lift(p));
                            if (inf_norm(y) != norm) return true;
                            auto lead = std::find_if(y.begin(), y.end(), [](const Int& v) { return v != 0; });
                            if (*lead > 0) shell.push_back(y);
                            return true;
                          });
    if (visited > point_budget) throw Error(ErrorKind::SearchBudgetExceeded, "point budget exhausted");
    std::sort(shell.begin(), shell.end());
    for (const auto& y : shell) {
      if (chosen.size() == n - m) break;
      chosen.push_back(y);
      if (rank(IntMatrix::from_rows(chosen)) < chosen.size()) chosen.pop_back();
    }
    out.shells = norm;
  }
  out.vectors = chosen;
  out.norm_product = 1;
  for (const auto& y : chosen) out.norm_product *= inf_norm(y);
  out.bound_holds = out.norm_product * out.norm_product * out.gcd_a * out.gcd_a <= out.det_aat;
  return out;
}

}  // namespace cornerpoly
