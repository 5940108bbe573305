#include "cornerpoly/transference.hpp"

#include "cornerpoly/corner.hpp"

namespace cornerpoly {

namespace {

Rat distance(const RatVector& x, const IntVector& z) {
  Rat best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rat diff = abs(Rat(x[i] - z[i]));
    if (diff > best) best = diff;
  }
  return best;
}

std::size_t support_outside(const IntVector& z, const IndexSet& gamma_bar) {
  std::size_t r = 0;
  for (std::size_t j : gamma_bar)
    if (z[j] != 0) ++r;
  return r;
}

Rat power_of_two(std::size_t r) { return Rat(pow(Int(2), r)); }

}  // namespace

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::Equal:
      return "==";
    case Relation::AtMost:
      return "<=";
    case Relation::LessThan:
      return "<";
  }
  return "?";
}

void settle(TransferenceReport& report) {
  report.tight = report.lhs == report.rhs;
  switch (report.relation) {
    case Relation::Equal:
      report.holds = report.tight;
      break;
    case Relation::AtMost:
      report.holds = report.lhs <= report.rhs;
      break;
    case Relation::LessThan:
      report.holds = report.lhs < report.rhs;
      break;
  }
}

void apply_cases(TransferenceReport& report, const Rat& bound, const Rat& divisor, bool strict) {
  if (report.r == 0) {
    report.relation = Relation::Equal;
    report.lhs = report.delta;
    report.rhs = 0;
  } else if (report.r == 1) {
    report.relation = Relation::AtMost;
    report.lhs = report.delta;
    report.rhs = bound - 1;
  } else {
    report.relation = strict ? Relation::LessThan : Relation::AtMost;
    report.lhs = report.delta * power_of_two(report.r) / divisor;
    report.rhs = bound;
  }
  settle(report);
}

void require_corner_point(const ProjectionContext& ctx, const IntVector& z, ErrorKind kind) {
  if (z.size() != ctx.n()) throw Error(ErrorKind::ShapeMismatch, "z has the wrong length");
  if (ctx.A() * z != ctx.b()) throw Error(kind, "A z != b");
  for (std::size_t j : ctx.gamma_bar())
    if (z[j] < 0) throw Error(kind, "negative entry outside gamma");
}

TransferenceReport check_theorem1(const ProjectionContext& ctx, const IntVector& z_star) {
  require_corner_point(ctx, z_star);
  MinorStats stats = minor_stats(ctx.A());
  TransferenceReport report;
  report.theorem_id = "thm1";
  report.x_star = ctx.basic_solution();
  report.z_star = z_star;
  report.gamma = ctx.gamma();
  report.r = support_outside(z_star, ctx.gamma_bar());
  report.d = 0;
  report.delta = distance(report.x_star, z_star);
  apply_cases(report, make_rat(stats.sigma, stats.gcd_minors), Rat(report.r), false);
  return report;
}

TransferenceReport check_theorem2(const IntMatrix& a, const IntVector& b, const RatVector& x_star,
                                  const IntVector& z_star, const IndexSet& tau) {
  const std::size_t n = a.cols();
  if (x_star.size() != n || z_star.size() != n || b.size() != a.rows())
    throw Error(ErrorKind::ShapeMismatch, "vector lengths do not match A");
  if (a * x_star != to_rat(b)) throw Error(ErrorKind::InvalidVertex, "A x* != b");
  IndexSet x_support;
  for (std::size_t i = 0; i < n; ++i)
    if (x_star[i] != 0) x_support.push_back(i);
  if (x_support != tau) throw Error(ErrorKind::InvalidVertex, "tau is not the support of x*");
  if (a * z_star != b) throw Error(ErrorKind::InvalidVertex, "A z != b");
  for (std::size_t j : complement(tau, n))
    if (z_star[j] < 0) throw Error(ErrorKind::InvalidVertex, "negative entry outside tau");

  BasisChoice choice = choose_basis_prop2(a, z_star, tau);
  MinorStats stats = minor_stats(a);
  TransferenceReport report;
  report.theorem_id = "thm2";
  report.x_star = x_star;
  report.z_star = z_star;
  report.gamma = choice.gamma;
  report.r = support_outside(z_star, complement(choice.gamma, n));
  report.d = a.rows() - tau.size();
  report.delta = distance(x_star, z_star);
  Rat divisor(pow(Int(static_cast<unsigned long>(report.r)), report.d + 1));
  apply_cases(report, make_rat(stats.sigma, stats.gcd_minors), divisor, false);
  return report;
}

ProductBoundReport check_product_bound(const IntVector& z_star, const ProjectionContext& ctx) {
  require_corner_point(ctx, z_star);
  ProductBoundReport out;
  out.product = 1;
  for (std::size_t j : ctx.gamma_bar()) out.product *= z_star[j] + 1;
  out.rhs = make_rat(abs(ctx.det_gamma()), minor_stats(ctx.A()).gcd_minors);
  out.slack = out.rhs - out.product;
  out.holds = out.slack >= 0;
  return out;
}

SumProductReport sum_product_holds(const RatVector& x) {
  if (x.size() < 2) throw Error(ErrorKind::DomainError, "needs at least two entries");
  SumProductReport out;
  out.lhs = 0;
  Rat product = 1;
  for (const Rat& v : x) {
    if (v < 1) throw Error(ErrorKind::DomainError, "entries must be at least 1");
    out.lhs += v;
    product *= v + 1;
  }
  out.rhs = Rat(static_cast<long>(x.size())) * product / power_of_two(x.size());
  out.holds = out.lhs <= out.rhs;
  out.equal = out.lhs == out.rhs;
  return out;
}

Lemma4Report lemma4_bound(const ProjectionContext& ctx, const IntVector& z_star) {
  require_corner_point(ctx, z_star, ErrorKind::InvalidPoint);
  const IntMatrix& a = ctx.A();
  const Int& dg = ctx.det_gamma();
  IntMatrix a_gamma = a.select_columns(ctx.gamma());

  Lemma4Report out;
  TransferenceReport& report = out.report;
  report.theorem_id = "lemma4";
  report.x_star = ctx.basic_solution();
  report.z_star = z_star;
  report.gamma = ctx.gamma();
  report.r = support_outside(z_star, ctx.gamma_bar());
  report.delta = distance(report.x_star, z_star);

  out.cramer_matches_inverse = true;
  out.cramer_reproduces_gap = true;
  for (std::size_t p = 0; p < ctx.m(); ++p) {
    Rat gap = 0;
    for (std::size_t q = 0; q < ctx.d(); ++q) {
      std::size_t i = ctx.gamma_bar()[q];
      IntMatrix replaced = a_gamma;
      for (std::size_t row = 0; row < ctx.m(); ++row) replaced(row, p) = a(row, i);
      CramerEntry entry{ctx.gamma()[p], i, make_rat(det(replaced), dg)};
      if (entry.value != make_rat(ctx.scaled_coefficients()(p, q), dg)) out.cramer_matches_inverse = false;
      gap += entry.value * z_star[i];
      out.cramer.push_back(entry);
    }
    std::size_t j = ctx.gamma()[p];
    if (report.x_star[j] - z_star[j] != gap) out.cramer_reproduces_gap = false;
  }

  Int product = 1;
  for (std::size_t j : ctx.gamma_bar()) product *= z_star[j] + 1;
  out.product_bound = make_rat(minor_stats(a).sigma * product, abs(dg));
  apply_cases(report, out.product_bound, Rat(report.r), false);
  return out;
}

}  // namespace cornerpoly
