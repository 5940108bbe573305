#include "cornerpoly/oracle.hpp"

#include <algorithm>
#include <set>

#include "cornerpoly/cone.hpp"
#include "cornerpoly/corner.hpp"
#include "cornerpoly/lattice.hpp"

namespace cornerpoly {

namespace {

constexpr std::size_t kMaxOraclePoints = 4'000'000;

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

IndexSet first_basis(const IntMatrix& a) {
  IndexSet found;
  for_each_combination(a.cols(), a.rows(), [&](const IndexSet& g) {
    if (det(a.select_columns(g)) == 0) return true;
    found = g;
    return false;
  });
  if (found.empty() && a.rows() > 0) throw Error(ErrorKind::RankDeficient, "A has no basis");
  return found;
}

}  // namespace

std::vector<IntVector> enumerate_integer_points(const IntMatrix& a, const IntVector& b,
                                                const std::vector<bool>& nonneg, const BoxSpec& box) {
  const std::size_t n = a.cols(), m = a.rows();
  if (box.lower.size() != n || box.upper.size() != n || nonneg.size() != n || b.size() != m)
    throw Error(ErrorKind::ShapeMismatch, "enumerate_integer_points shape");
  IntVector lo = box.lower, hi = box.upper;
  for (std::size_t j = 0; j < n; ++j)
    if (nonneg[j] && lo[j] < 0) lo[j] = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (lo[j] > hi[j]) return {};

  // x_gamma = base - coef * x_free, solved by rational elimination.
  const IndexSet gamma = first_basis(a);
  const IndexSet free = complement(gamma, n);
  const IntMatrix a_gamma = a.select_columns(gamma);
  const RatVector base = solve(a_gamma, to_rat(b));
  std::vector<RatVector> coef(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) coef[k] = solve(a_gamma, to_rat(a.column(free[k])));

  // Interval hull of the contribution of free variables k.. to each basic one.
  std::vector<RatVector> tail_min(free.size() + 1, RatVector(m, Rat(0)));
  std::vector<RatVector> tail_max(free.size() + 1, RatVector(m, Rat(0)));
  for (std::size_t k = free.size(); k-- > 0;) {
    for (std::size_t i = 0; i < m; ++i) {
      Rat p = -coef[k][i] * lo[free[k]], q = -coef[k][i] * hi[free[k]];
      tail_min[k][i] = tail_min[k + 1][i] + std::min(p, q);
      tail_max[k][i] = tail_max[k + 1][i] + std::max(p, q);
    }
  }

  std::vector<IntVector> out;
  IntVector x(n);
  RatVector partial = base;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (partial[i] + tail_max[k][i] < lo[gamma[i]] || partial[i] + tail_min[k][i] > hi[gamma[i]]) return;
    }
    if (k == free.size()) {
      for (std::size_t i = 0; i < m; ++i) {
        if (partial[i].get_den() != 1) return;
        x[gamma[i]] = partial[i].get_num();
      }
      out.push_back(x);
      return;
    }
    const std::size_t j = free[k];
    for (Int v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      for (std::size_t i = 0; i < m; ++i) partial[i] -= coef[k][i] * v;
      walk(k + 1);
      for (std::size_t i = 0; i < m; ++i) partial[i] += coef[k][i] * v;
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

IlpOptimum brute_ilp_opt(const IntMatrix& a, const IntVector& b, const IntVector& c, Sense sense,
                         const BoxSpec& box) {
  if (c.size() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "objective length");
  auto points = enumerate_integer_points(a, b, std::vector<bool>(a.cols(), true), box);
  if (points.empty()) throw Error(ErrorKind::Infeasible, "no feasible integer point in the box");
  IlpOptimum best;
  bool first = true;
  for (const auto& p : points) {
    Int v = dot(c, p);
    bool better = first || (sense == Sense::Minimize ? v < best.value : v > best.value);
    if (better) {
      best.value = v;
      best.argset.clear();
      first = false;
    }
    if (v == best.value) best.argset.push_back(p);
  }
  return best;
}

IntVector corner_candidate_box(const IntMatrix& a, const IntVector& b, const IndexSet& tau) {
  const IndexSet gamma0 = reference_basis(a, tau);
  const IndexSet free0 = complement(gamma0, a.cols());
  const Int gcd_a = minor_stats(a).gcd_minors;
  const Int factor = pow(Int(a.cols() - a.rows()), static_cast<unsigned long>(a.rows() - tau.size()));

  IntVector reach(free0.size(), Int(0));
  for (const auto& g : bases_containing(a, tau)) {
    ProjectionContext ctx(a, b, g);
    const Int bound = factor * abs(ctx.det_gamma()) / gcd_a;
    const RatVector xs = ctx.basic_solution();
    for (std::size_t k = 0; k < free0.size(); ++k) {
      const std::size_t j = free0[k];
      Int top;
      auto pos = std::lower_bound(g.begin(), g.end(), j);
      if (pos == g.end() || *pos != j) {
        top = bound - 1;
      } else {
        // Largest value of x*_j + q_j . y over y in [0, bound - 1]^d.
        const std::size_t row = static_cast<std::size_t>(pos - g.begin());
        Rat best = xs[j];
        for (std::size_t l = 0; l < ctx.d(); ++l) {
          Rat q = make_rat(-ctx.scaled_coefficients()(row, l), ctx.det_gamma());
          if (q > 0) best += q * (bound - 1);
        }
        top = floor_rat(best);
      }
      reach[k] = std::max(reach[k], top);
    }
  }
  for (auto& v : reach) v += 1;
  return reach;
}

OracleVertices brute_corner_vertices(const IntMatrix& a, const IntVector& b, const IndexSet& tau,
                                     std::optional<BoxSpec> box) {
  OracleVertices out;
  out.gamma = reference_basis(a, tau);
  ProjectionContext ctx(a, b, out.gamma);
  const AffineLattice lattice = project_lattice(ctx);
  const Int det_lattice = lattice.determinant();
  const std::size_t d = ctx.d();

  // Rows of gamma outside tau carry the extra sign constraints x_j >= 0.
  std::vector<std::size_t> signed_rows;
  for (std::size_t k = 0; k < ctx.m(); ++k)
    if (!std::binary_search(tau.begin(), tau.end(), ctx.gamma()[k])) signed_rows.push_back(k);
  std::vector<std::vector<Rat>> abs_q(signed_rows.size(), std::vector<Rat>(d));
  for (std::size_t s = 0; s < signed_rows.size(); ++s)
    for (std::size_t l = 0; l < d; ++l)
      abs_q[s][l] = abs(make_rat(ctx.scaled_coefficients()(signed_rows[s], l), ctx.det_gamma()));

  IntVector upper0 = corner_candidate_box(a, b, tau);
  out.certificate.region_inside_box = true;
  unsigned growth = 2, max_rounds = 6;
  if (box) {
    if (box->upper.size() != d) throw Error(ErrorKind::ShapeMismatch, "oracle box must be in projected coordinates");
    for (std::size_t k = 0; k < d; ++k)
      if (box->upper[k] < upper0[k]) out.certificate.region_inside_box = false;
    upper0 = box->upper;
    growth = std::max(2u, box->growth_factor);
    max_rounds = box->max_rounds;
  }

  // Hull boxes start one growth step beyond the candidate region so that
  // truncation artifacts at the far faces fall outside it.
  std::set<IntVector> previous;
  IntVector upper = upper0;
  for (auto& u : upper) u *= growth;
  for (unsigned round = 0; round < max_rounds; ++round) {
    Int volume = 1;
    for (const auto& u : upper) volume *= u + 1;
    if (volume / det_lattice > kMaxOraclePoints)
      throw Error(ErrorKind::SearchSpaceTooLarge, "oracle box holds too many lattice points");

    std::size_t count = 0;
    std::vector<IntVector> survivors;
    lattice.for_each_point(
        [&](std::size_t k, const IntVector&) { return std::pair<Int, Int>(0, upper[k]); },
        [&](const IntVector& y) {
          IntVector x = *ctx.lift_integral(y);
          for (auto k : signed_rows)
            if (x[ctx.gamma()[k]] < 0) return true;
          ++count;
          // Midpoint filter: if a nonzero lattice vector w keeps y +- w feasible
          // and inside the box, y is not a vertex of the box hull.
          Rat t = 1;
          IntVector h(d);
          for (std::size_t l = 0; l < d; ++l) h[l] = std::min(y[l], Int(upper[l] - y[l]));
          for (std::size_t s = 0; s < signed_rows.size(); ++s) {
            Rat spread = 0;
            for (std::size_t l = 0; l < d; ++l) spread += abs_q[s][l] * h[l];
            if (spread > 0) t = std::min(t, Rat(Rat(x[ctx.gamma()[signed_rows[s]]]) / spread));
          }
          Int prod = 1;
          for (std::size_t l = 0; l < d; ++l) prod *= floor_rat(t * h[l]) + 1;
          if (prod <= det_lattice) survivors.push_back(y);
          return true;
        });

    std::set<IntVector> result;
    for (auto idx : hull_vertices(survivors)) {
      const IntVector& y = survivors[idx];
      bool inside = true;
      for (std::size_t l = 0; l < d; ++l) inside = inside && y[l] <= upper0[l];
      if (inside) result.insert(y);
    }
    out.certificate.rounds = round + 1;
    out.certificate.box_uppers.push_back(upper);
    out.certificate.points.push_back(count);
    out.certificate.survivors.push_back(survivors.size());

    if (round > 0 && result == previous) {
      for (const auto& y : result) out.vertices.push_back(*ctx.lift_integral(y));
      std::sort(out.vertices.begin(), out.vertices.end());
      return out;
    }
    previous = std::move(result);
    for (auto& u : upper) u *= growth;
  }
  throw Error(ErrorKind::Unstable, "hull vertices did not stabilize within the round limit");
}

std::vector<IntVector> integer_hull_vertices(const IntVector& a, const Int& b, bool prefilter) {
  const std::size_t n = a.size();
  if (n == 0 || b < 0 || std::any_of(a.begin(), a.end(), [](const Int& v) { return v <= 0; }))
    throw Error(ErrorKind::DomainError, "integer hull needs positive weights and b >= 0");

  std::vector<IntVector> points;
  IntVector x(n);
  const Int cap = b + 1;
  std::function<void(std::size_t, const Int&, const Int&)> walk = [&](std::size_t k, const Int& rest,
                                                                      const Int& prod) {
    // A box [0, x] with more than b + 1 points repeats a subset sum in [0, b].
    if (prefilter && prod > cap) return;
    if (k + 1 == n) {
      if (rest % a[k] != 0) return;
      x[k] = rest / a[k];
      if (prefilter && prod * (x[k] + 1) > cap) return;
      points.push_back(x);
      return;
    }
    for (Int v = 0; v * a[k] <= rest; ++v) {
      x[k] = v;
      walk(k + 1, rest - v * a[k], prod * (v + 1));
    }
  };
  walk(0, b, Int(1));

  if (prefilter) {
    std::vector<IntVector> kept;
    for (const auto& p : points) {
      std::set<Int> sums;
      IntVector y(n, Int(0));
      bool distinct = true;
      while (distinct) {
        distinct = sums.insert(dot(a, y)).second;
        std::size_t i = 0;
        while (i < n && y[i] == p[i]) y[i++] = 0;
        if (i == n) break;
        ++y[i];
      }
      if (distinct) kept.push_back(p);
    }
    points = std::move(kept);
  }
  if (points.empty()) throw Error(ErrorKind::Infeasible, "knapsack has no feasible integer point");

  std::vector<IntVector> out;
  for (auto idx : hull_vertices(points)) out.push_back(points[idx]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cornerpoly
