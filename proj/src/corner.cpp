#include "cornerpoly/corner.hpp"

#include <algorithm>
#include <set>

#include "cornerpoly/lp.hpp"

namespace cornerpoly {

namespace {

bool is_unit_row(const IntVector& q, std::size_t i) {
  for (std::size_t j = 0; j < q.size(); ++j)
    if (q[j] != (j == i ? 1 : 0)) return false;
  return true;
}

bool contains_orthant_rows(const ConeInequalities& cone) {
  for (std::size_t i = 0; i < cone.dim; ++i) {
    bool found = std::any_of(cone.rows.begin(), cone.rows.end(), [&](const IntVector& q) { return is_unit_row(q, i); });
    if (!found) return false;
  }
  return true;
}

Int box_volume(const IntVector& x) {
  Int v = 1;
  for (const auto& xi : x) v *= xi + 1;
  return v;
}

// Lattice points of the nonnegative orthant with prod(x_i + 1) <= bound.
void for_each_under_bound(const AffineLattice& lattice, const Int& bound,
                          const std::function<void(const IntVector&)>& visit) {
  lattice.for_each_point(
      [&](std::size_t, const IntVector& prefix) {
        Int budget = bound;
        for (const auto& p : prefix) budget /= p + 1;  // floor of the quotient is exact for the test
        return std::pair<Int, Int>(0, budget - 1);
      },
      [&](const IntVector& p) {
        visit(p);
        return true;
      });
}

// Orthant irreducibility: the points of [0, x] fall into distinct cosets.
bool orthant_irreducible(const IntVector& x, const AffineLattice& lattice) {
  if (box_volume(x) > lattice.determinant()) return false;  // pigeonhole on the cosets
  std::set<IntVector> reps;
  IntVector y(x.size(), Int(0));
  while (true) {
    if (!reps.insert(lattice.reduce(y)).second) return false;
    std::size_t i = 0;
    while (i < y.size() && y[i] == x[i]) y[i++] = 0;
    if (i == y.size()) return true;
    ++y[i];
  }
}

bool cone_irreducible(const IntVector& x, const AffineLattice& lattice, const ConeInequalities& cone) {
  bool found = false;
  IntVector plus(x.size()), minus(x.size());
  lattice.direction().for_each_point(
      [&](std::size_t k, const IntVector&) { return std::pair<Int, Int>(-x[k], x[k]); },
      [&](const IntVector& w) {
        if (std::all_of(w.begin(), w.end(), [](const Int& v) { return v == 0; })) return true;
        for (std::size_t i = 0; i < x.size(); ++i) {
          plus[i] = x[i] + w[i];
          minus[i] = x[i] - w[i];
        }
        if (cone.contains(plus) && cone.contains(minus)) {
          found = true;
          return false;
        }
        return true;
      });
  return !found;
}

// x is a vertex iff it is not in conv(others) + cone(rays).
bool separated(std::size_t k, const std::vector<IntVector>& pts, const std::vector<IntVector>& rays) {
  const std::size_t d = pts[k].size();
  const std::size_t vars = pts.size() - 1 + rays.size();
  if (pts.size() == 1) return true;
  RatMatrix eq(d + 1, vars);
  RatVector rhs(d + 1);
  std::size_t col = 0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == k) continue;
    for (std::size_t i = 0; i < d; ++i) eq(i, col) = pts[j][i];
    eq(d, col) = 1;
    ++col;
  }
  for (const auto& ray : rays) {
    for (std::size_t i = 0; i < d; ++i) eq(i, col) = ray[i];
    ++col;
  }
  for (std::size_t i = 0; i < d; ++i) rhs[i] = pts[k][i];
  rhs[d] = 1;
  return !lp_feasible(eq, rhs, std::vector<bool>(vars, true)).feasible;
}

Sail select_vertices(const AffineLattice& lattice, const ConeInequalities& cone, const std::set<IntVector>& candidates,
                     const Int& bound) {
  if (candidates.empty()) throw Error(ErrorKind::EmptySail, "no lattice point of the cone under the product bound");
  Sail sail;
  sail.lattice = lattice;
  sail.cone = cone;
  sail.candidate_bound = bound;
  sail.candidates = candidates.size();

  std::vector<IntVector> kept;
  for (const auto& x : candidates)
    if (is_irreducible(x, lattice, cone)) kept.push_back(x);
  sail.irreducible = kept.size();

  std::vector<IntVector> rays = extreme_rays(cone);
  for (std::size_t k = 0; k < kept.size(); ++k)
    if (separated(k, kept, rays)) sail.vertices.push_back(kept[k]);
  return sail;
}

}  // namespace

bool is_orthant(const ConeInequalities& cone) {
  return cone.rows.size() == cone.dim && contains_orthant_rows(cone);
}

bool is_irreducible(const IntVector& x, const AffineLattice& lattice, const ConeInequalities& cone) {
  if (x.size() != cone.dim || x.size() != lattice.ambient_dim())
    throw Error(ErrorKind::ShapeMismatch, "point, lattice and cone dimensions differ");
  if (!cone.contains(x)) throw Error(ErrorKind::PointOutsideCone, "point is not in the cone");
  if (is_orthant(cone)) return orthant_irreducible(x, lattice);
  if (!contains_orthant_rows(cone)) throw Error(ErrorKind::DomainError, "cone must lie in the nonnegative orthant");
  return cone_irreducible(x, lattice, cone);
}

Sail sail_vertices(const AffineLattice& lattice, const ConeInequalities& cone, const Int& bound) {
  if (!lattice.full_dimensional() || cone.dim != lattice.ambient_dim())
    throw Error(ErrorKind::ShapeMismatch, "sail needs a full-dimensional lattice of the cone's dimension");
  if (!contains_orthant_rows(cone)) throw Error(ErrorKind::DomainError, "cone must lie in the nonnegative orthant");
  std::set<IntVector> candidates;
  for_each_under_bound(lattice, bound, [&](const IntVector& p) {
    if (cone.contains(p)) candidates.insert(p);
  });
  return select_vertices(lattice, cone, candidates, bound);
}

Sail sail_vertices(const AffineLattice& lattice) {
  return sail_vertices(lattice, ConeInequalities::orthant(lattice.ambient_dim()), lattice.determinant());
}

CornerVertexSet corner_vertices(const ProjectionContext& ctx) {
  CornerVertexSet out;
  out.gamma = ctx.gamma();
  out.tau = ctx.gamma();
  out.projected = sail_vertices(project_lattice(ctx));
  for (const auto& u : out.projected.vertices) out.lifted.push_back(*ctx.lift_integral(u));
  return out;
}

std::vector<IndexSet> bases_containing(const IntMatrix& a, const IndexSet& tau) {
  std::vector<IndexSet> out;
  for_each_combination(a.cols(), a.rows(), [&](const IndexSet& g) {
    if (is_subset(tau, g) && det(a.select_columns(g)) != 0) out.push_back(g);
    return true;
  });
  return out;
}

ConeInequalities basis_cone(const ProjectionContext& ctx, const IndexSet& tau) {
  ConeInequalities cone = ConeInequalities::orthant(ctx.d());
  RatVector x = ctx.basic_solution();
  const int sign = ctx.det_gamma() > 0 ? 1 : -1;
  for (std::size_t k = 0; k < ctx.m(); ++k) {
    const std::size_t i = ctx.gamma()[k];
    if (std::binary_search(tau.begin(), tau.end(), i)) continue;
    if (x[i] != 0) throw Error(ErrorKind::DomainError, "basic solution is nonzero outside tau");
    // x_i = x*_i + q_i . y with q_i = -(A_gamma^{-1} A_gamma_bar)_i.
    IntVector q = ctx.scaled_coefficients().row(k);
    for (auto& v : q) v *= -sign;
    make_primitive(q);
    if (std::any_of(q.begin(), q.end(), [](const Int& v) { return v != 0; })) cone.rows.push_back(std::move(q));
  }
  return cone;
}

BasisChoice choose_basis_prop2(const IntMatrix& a, const IntVector& z, const IndexSet& tau) {
  IndexSet mu = set_union(tau, support(z));
  return choose_basis_prop2(a, z, tau, row_space_basis(a.select_columns(mu)));
}

BasisChoice choose_basis_prop2(const IntMatrix& a, const IntVector& z, const IndexSet& tau,
                               const IntMatrix& reduced) {
  if (z.size() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "z has the wrong length");
  BasisChoice out;
  out.mu = set_union(tau, support(z));
  out.reduced = reduced;
  const std::size_t k = reduced.rows();
  if (reduced.cols() != out.mu.size() || rank(reduced) != k || rank(a.select_columns(out.mu)) != k)
    throw Error(ErrorKind::ShapeMismatch, "reduced matrix must be a full-row-rank basis of the rows of A_mu");

  // Positions of tau inside mu.
  IndexSet tau_pos;
  for (auto t : tau) tau_pos.push_back(static_cast<std::size_t>(
      std::lower_bound(out.mu.begin(), out.mu.end(), t) - out.mu.begin()));

  Int best_score = -1;
  IndexSet best;
  for_each_combination(out.mu.size(), k, [&](const IndexSet& pos) {
    if (!is_subset(tau_pos, pos)) return true;
    Int dv = abs(det(reduced.select_columns(pos)));
    if (dv == 0) return true;
    // Factors on tau are shared by every candidate and may be nonpositive.
    Int score = dv;
    for (auto p : pos)
      if (!std::binary_search(tau_pos.begin(), tau_pos.end(), p)) score *= z[out.mu[p]] + 1;
    if (score > best_score) {
      best_score = score;
      best = pos;
    }
    return true;
  });
  if (best.empty() && k > 0) throw Error(ErrorKind::NoBasisContainsTau, "no basis of the reduced system contains tau");
  for (auto p : best) out.sigma.push_back(out.mu[p]);

  out.gamma = out.sigma;
  std::size_t current = out.gamma.size();
  for (auto j : complement(out.mu, a.cols())) {
    if (current == a.rows()) break;
    IndexSet trial = set_union(out.gamma, {j});
    if (rank(a.select_columns(trial)) > current) {
      out.gamma = std::move(trial);
      ++current;
    }
  }
  if (current < a.rows()) throw Error(ErrorKind::NoBasisContainsTau, "sigma does not extend to a basis of A");

  // Coefficients of the reduced system relative to sigma.
  IndexSet rest_pos = complement(best, out.mu.size());
  out.r = rest_pos.size();
  IntMatrix r_sigma = reduced.select_columns(best);
  for (std::size_t si = 0; si < best.size(); ++si) {
    const std::size_t i = out.mu[best[si]];
    if (std::binary_search(tau.begin(), tau.end(), i)) continue;
    Rat sum = 0;
    const Rat lhs = z[i] + 1;
    for (auto rp : rest_pos) {
      RatVector col = solve(r_sigma, to_rat(reduced.column(rp)));
      Rat term = abs(col[si]) * (z[out.mu[rp]] + 1);
      if (term > lhs) out.termwise_holds = false;
      sum += term;
    }
    if (out.r > 0 && lhs * static_cast<unsigned long>(out.r) < sum) out.careful_choice_holds = false;
  }
  return out;
}

IndexSet reference_basis(const IntMatrix& a, const IndexSet& tau) {
  IndexSet best;
  Int best_det = 0;
  for (const auto& g : bases_containing(a, tau)) {
    Int dv = abs(det(a.select_columns(g)));
    if (dv > best_det) {
      best_det = dv;
      best = g;
    }
  }
  if (best.empty()) throw Error(ErrorKind::NoBasisContainsTau, "no basis of A contains tau");
  return best;
}

CornerVertexSet corner_tau_vertices(const IntMatrix& a, const IntVector& b, const IndexSet& tau) {
  if (a.cols() <= a.rows()) throw Error(ErrorKind::ShapeMismatch, "need m < n");
  std::vector<IndexSet> bases = bases_containing(a, tau);
  if (bases.empty()) throw Error(ErrorKind::NoBasisContainsTau, "no basis of A contains tau");
  const IndexSet gamma0 = reference_basis(a, tau);
  ProjectionContext ctx0(a, b, gamma0);
  AffineLattice lattice0 = project_lattice(ctx0);
  ConeInequalities cone0 = basis_cone(ctx0, tau);

  const Int gcd_a = minor_stats(a).gcd_minors;
  const Int factor = pow(Int(a.cols() - a.rows()), static_cast<unsigned long>(a.rows() - tau.size()));
  const IndexSet tau_bar = complement(tau, a.cols());

  std::set<IntVector> candidates;
  Int max_bound = 0;
  for (const auto& g : bases) {
    ProjectionContext ctx(a, b, g);
    AffineLattice lattice = project_lattice(ctx);
    ConeInequalities cone = basis_cone(ctx, tau);
    Int bound = factor * abs(ctx.det_gamma()) / gcd_a;
    max_bound = std::max(max_bound, bound);
    for_each_under_bound(lattice, bound, [&](const IntVector& y) {
      if (!cone.contains(y)) return;
      IntVector x = *ctx.lift_integral(y);
      for (auto j : tau_bar)
        if (x[j] < 0) throw Error(ErrorKind::DomainError, "cone point lifts outside the relaxation");
      candidates.insert(ctx0.restrict_to_gamma_bar(x));
    });
  }

  CornerVertexSet out;
  out.gamma = gamma0;
  out.tau = tau;
  out.projected = select_vertices(lattice0, cone0, candidates, max_bound);
  for (const auto& u : out.projected.vertices) out.lifted.push_back(*ctx0.lift_integral(u));
  return out;
}

}  // namespace cornerpoly
