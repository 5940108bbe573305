#include "cornerpoly/knapsack.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "cornerpoly/corner.hpp"

namespace cornerpoly {

namespace {

constexpr long long kUnreachable = std::numeric_limits<long long>::max();

IntMatrix as_row(const IntVector& a) {
  IntMatrix m(1, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) m(0, j) = a[j];
  return m;
}

std::size_t fit_size(const Int& v, const Int& cap, const char* what) {
  if (v > cap) throw Error(ErrorKind::SearchSpaceTooLarge, std::string(what) + " exceeds the cap");
  return static_cast<std::size_t>(v.get_ui());
}

void require_member(const IntVector& a, const Int& b, const KnapsackLimits& limits) {
  if (!in_semigroup(a, b, limits).member) throw Error(ErrorKind::NotInSemigroup, "b is not in Sg(a)");
}

RatVector knapsack_vertex(const IntVector& a, const Int& b) {
  RatVector x(a.size(), Rat(0));
  x[0] = make_rat(b, a[0]);
  return x;
}

std::size_t tail_support(const IntVector& z) {
  std::size_t r = 0;
  for (std::size_t j = 1; j < z.size(); ++j)
    if (z[j] != 0) ++r;
  return r;
}

Rat distance(const RatVector& x, const IntVector& z) {
  Rat best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, abs(Rat(x[i] - z[i])));
  return best;
}

// Unbounded reachability over weights 0..limit using the listed items; the
// entry is the item that last extended the weight, or -1 for unreachable.
std::vector<long> reach_table(const IntVector& a, const IndexSet& items, std::size_t limit) {
  std::vector<long> last(limit + 1, -1);
  last[0] = static_cast<long>(a.size());
  for (std::size_t i : items) {
    std::size_t w = a[i].get_ui();
    for (std::size_t v = w; v <= limit; ++v)
      if (last[v] < 0 && last[v - w] >= 0) last[v] = static_cast<long>(i);
  }
  return last;
}

}  // namespace

void validate_knapsack(const IntVector& a, const Int& b) {
  if (a.size() < 2) throw Error(ErrorKind::InvalidInstance, "knapsack needs n >= 2");
  Int g = 0;
  for (const auto& ai : a) {
    if (ai <= 0) throw Error(ErrorKind::InvalidInstance, "knapsack weights must be positive");
    g = gcd(g, ai);
  }
  if (g != 1) throw Error(ErrorKind::InvalidInstance, "knapsack weights must be coprime");
  if (b < 0) throw Error(ErrorKind::InvalidInstance, "knapsack right side must be nonnegative");
}

SemigroupResult in_semigroup(const IntVector& a, const Int& b, const KnapsackLimits& limits) {
  validate_knapsack(a, b);
  const std::size_t a1 = fit_size(a[0], limits.max_a1, "a_1");
  // dist[r]: smallest representable value congruent to r mod a_1 that uses only
  // items 2..n; pred records the last arc.
  std::vector<std::optional<Int>> dist(a1);
  std::vector<std::pair<std::size_t, std::size_t>> pred(a1);
  using Entry = std::pair<Int, std::size_t>;
  auto later = [](const Entry& x, const Entry& y) { return x.first > y.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  dist[0] = Int(0);
  queue.push({Int(0), 0});
  std::vector<bool> done(a1, false);
  while (!queue.empty()) {
    auto [value, res] = queue.top();
    queue.pop();
    if (done[res]) continue;
    done[res] = true;
    for (std::size_t i = 1; i < a.size(); ++i) {
      Int next_value = value + a[i];
      std::size_t next = Int(next_value % a[0]).get_ui();
      if (!dist[next] || next_value < *dist[next]) {
        dist[next] = next_value;
        pred[next] = {res, i};
        queue.push({next_value, next});
      }
    }
  }
  std::size_t target = Int(b % a[0]).get_ui();
  SemigroupResult out;
  if (!dist[target] || *dist[target] > b) return out;
  out.member = true;
  IntVector z(a.size(), Int(0));
  for (std::size_t res = target; res != 0;) {
    auto [prev, item] = pred[res];
    z[item] += 1;
    res = prev;
  }
  z[0] = (b - *dist[target]) / a[0];
  out.witness = z;
  return out;
}

std::vector<IntVector> corner_vertices_in_P(const IntVector& a, const Int& b) {
  validate_knapsack(a, b);
  ProjectionContext ctx(as_row(a), {b}, {0});
  std::vector<IntVector> out;
  for (const auto& z : corner_vertices(ctx).lifted)
    if (z[0] >= 0) out.push_back(z);
  std::sort(out.begin(), out.end());
  return out;
}

IntVector corner_vertex_in_P(const IntVector& a, const Int& b) {
  require_member(a, b, {});
  auto candidates = corner_vertices_in_P(a, b);
  if (candidates.empty()) throw std::logic_error("no vertex of CP_{0}(a, b) lies in P(a, b)");
  // Sorted order makes the first maximizer of z_1 the lexicographic tie-break.
  const IntVector* best = &candidates.front();
  for (const auto& z : candidates)
    if (z[0] > (*best)[0]) best = &z;
  return *best;
}

TransferenceReport theorem3_report(const IntVector& a, const Int& b, const IntVector& z) {
  validate_knapsack(a, b);
  ProjectionContext ctx(as_row(a), {b}, {0});
  require_corner_point(ctx, z);
  TransferenceReport report;
  report.theorem_id = "thm3";
  report.x_star = knapsack_vertex(a, b);
  report.z_star = z;
  report.gamma = {0};
  report.r = tail_support(z);
  report.delta = distance(report.x_star, z);
  apply_cases(report, Rat(inf_norm(a)), Rat(report.r), true);
  return report;
}

TransferenceReport check_theorem3(const IntVector& a, const Int& b) {
  return theorem3_report(a, b, corner_vertex_in_P(a, b));
}

std::size_t lp_vertex(const IntVector& c, const IntVector& a, const Int& b) {
  if (c.size() != a.size()) throw Error(ErrorKind::ShapeMismatch, "c and a differ in length");
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (make_rat(c[i] * b, a[i]) < make_rat(c[best] * b, a[best])) best = i;
  return best;
}

Rat lp_value(const IntVector& c, const IntVector& a, const Int& b) {
  std::size_t i = lp_vertex(c, a, b);
  return make_rat(c[i] * b, a[i]);
}

IpOptimum ip_value(const IntVector& c, const IntVector& a, const Int& b, const KnapsackLimits& limits) {
  validate_knapsack(a, b);
  if (c.size() != a.size()) throw Error(ErrorKind::ShapeMismatch, "c and a differ in length");
  const std::size_t target = fit_size(b, limits.max_b, "b");
  require_member(a, b, limits);
  const Int cost_cap = Int(1) << 62;
  for (const auto& ci : c)
    if (abs(ci) * (b + 1) >= cost_cap) throw Error(ErrorKind::SearchSpaceTooLarge, "costs overflow the table");

  const std::size_t n = a.size();
  // best[i][w]: least cost of weight exactly w using items i..n-1.
  std::vector<std::vector<long long>> best(n + 1, std::vector<long long>(target + 1, kUnreachable));
  best[n][0] = 0;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t w = a[i].get_ui();
    const long long ci = c[i].get_si();
    for (std::size_t v = 0; v <= target; ++v) {
      long long value = best[i + 1][v];
      if (v >= w && best[i][v - w] != kUnreachable) value = std::min(value, best[i][v - w] + ci);
      best[i][v] = value;
    }
  }

  IpOptimum out;
  out.value = Int(static_cast<long>(best[0][target]));
  out.argmin.assign(n, Int(0));
  std::size_t rest = target;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t w = a[i].get_ui();
    const long long ci = c[i].get_si();
    for (std::size_t k = 0; k * w <= rest; ++k) {
      long long tail = best[i + 1][rest - k * w];
      if (tail != kUnreachable && tail + ci * static_cast<long long>(k) == best[i][rest]) {
        out.argmin[i] = static_cast<unsigned long>(k);
        rest -= k * w;
        break;
      }
    }
  }
  return out;
}

GapReport integrality_gap_report(const IntVector& c, const IntVector& a, const Int& b,
                                 const KnapsackLimits& limits) {
  validate_knapsack(a, b);
  std::size_t lead = lp_vertex(c, a, b);
  GapReport out;
  out.permutation.push_back(lead);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != lead) out.permutation.push_back(i);
  for (std::size_t k : out.permutation) {
    out.a.push_back(a[k]);
    out.c.push_back(c[k]);
  }
  out.ip = ip_value(out.c, out.a, b, limits).value;
  out.lp = lp_value(out.c, out.a, b);
  out.gap = out.ip - out.lp;

  const RatVector x = knapsack_vertex(out.a, b);
  const Rat a_norm(inf_norm(out.a));
  const Rat c_norm(inf_norm(out.c));
  out.all_hold = out.gap >= 0;
  for (const auto& z : corner_vertices_in_P(out.a, b)) {
    GapVerdict v;
    v.z_star = z;
    v.r = tail_support(z);
    v.delta = distance(x, z);
    Rat cost_sum = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (x[i] != z[i]) cost_sum += abs(out.c[i]);
    v.distance_bound = v.delta * cost_sum;
    v.support_bound = Rat(static_cast<long>(v.r + 1)) * v.delta * c_norm;
    v.chain_holds = out.gap <= v.distance_bound && v.distance_bound <= v.support_bound;
    v.zero_cost = c_norm == 0;
    if (v.r == 0) {
      v.relation = Relation::Equal;
      v.corollary_rhs = 0;
      v.corollary_holds = out.gap == 0;
    } else if (v.r == 1) {
      v.relation = Relation::AtMost;
      v.corollary_rhs = 2 * (a_norm - 1) * c_norm;
      v.corollary_holds = out.gap <= v.corollary_rhs;
    } else {
      v.relation = Relation::LessThan;
      Rat r(static_cast<long>(v.r));
      v.corollary_rhs = r * (r + 1) / Rat(pow(Int(2), v.r)) * a_norm * c_norm;
      v.corollary_holds = v.zero_cost ? out.gap == 0 : out.gap < v.corollary_rhs;
    }
    out.all_hold = out.all_hold && v.chain_holds && v.corollary_holds;
    out.verdicts.push_back(v);
  }
  out.all_hold = out.all_hold && !out.verdicts.empty();
  return out;
}

KnapsackWitnesses aho_and_sparsity_exist(const IntVector& a, const Int& b, const KnapsackLimits& limits) {
  validate_knapsack(a, b);
  const std::size_t target = fit_size(b, limits.max_b, "b");
  require_member(a, b, limits);
  const std::size_t n = a.size();
  const RatVector x = knapsack_vertex(a, b);
  const Int a_norm = inf_norm(a);
  const std::size_t a1 = fit_size(a[0], limits.max_a1, "a_1");

  KnapsackWitnesses out;
  // Proximity: find the smallest t such that some z has z_i <= t for i >= 2
  // and tail weight v <= min(b, t a_1) with v = b mod a_1; then delta <= t.
  bool found = false;
  for (Int t = 0; t < a_norm && !found; ++t) {
    std::size_t cap = std::min<std::size_t>(target, fit_size(t * a1, limits.max_b, "proximity table"));
    std::size_t bound = t.get_ui();
    // count[i][v]: copies of item i used on the way to v, layered per item.
    std::vector<std::vector<long>> used(n, std::vector<long>(cap + 1, -1));
    std::vector<bool> reach(cap + 1, false);
    reach[0] = true;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<bool> next(cap + 1, false);
      std::size_t w = a[i].get_ui();
      for (std::size_t v = 0; v <= cap; ++v) {
        if (!reach[v]) continue;
        for (std::size_t k = 0; k <= bound && v + k * w <= cap; ++k)
          if (!next[v + k * w]) {
            next[v + k * w] = true;
            used[i][v + k * w] = static_cast<long>(k);
          }
      }
      reach = std::move(next);
    }
    for (std::size_t v = target % a1; v <= cap; v += a1) {
      if (!reach[v]) continue;
      IntVector z(n, Int(0));
      std::size_t rest = v;
      for (std::size_t i = n; i-- > 1;) {
        z[i] = used[i][rest];
        rest -= static_cast<std::size_t>(used[i][rest]) * a[i].get_ui();
      }
      z[0] = (b - v) / a[0];
      out.proximity = z;
      out.proximity_distance = distance(x, z);
      found = true;
      break;
    }
  }
  if (!found || out.proximity_distance > a_norm - 1)
    throw std::logic_error("no integer point within ||a||_inf - 1 of x*");

  // Sparsity: smallest support over item subsets in lexicographic order.
  if (target == 0) {
    out.sparse.assign(n, Int(0));
    out.sparse_support = 0;
    return out;
  }
  for (std::size_t s = 1; s <= n && out.sparse.empty(); ++s) {
    for_each_combination(n, s, [&](const IndexSet& items) {
      auto last = reach_table(a, items, target);
      if (last[target] < 0) return true;
      IntVector z(n, Int(0));
      for (std::size_t v = target; v > 0;) {
        std::size_t i = static_cast<std::size_t>(last[v]);
        z[i] += 1;
        v -= a[i].get_ui();
      }
      out.sparse = z;
      out.sparse_support = support_size(z);
      return false;
    });
  }
  Int min_a = *std::min_element(a.begin(), a.end());
  if (out.sparse.empty() || pow(Int(2), out.sparse_support - 1) > min_a)
    throw std::logic_error("no sparse integer point within 1 + log2(min a_i)");
  return out;
}

}  // namespace cornerpoly
