#include "cornerpoly/suite.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "cornerpoly/corner.hpp"
#include "cornerpoly/instance.hpp"
#include "cornerpoly/knapsack.hpp"
#include "cornerpoly/oracle.hpp"
#include "cornerpoly/sparsity.hpp"
#include "cornerpoly/transference.hpp"

namespace cornerpoly {

namespace {

// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ - failures_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    for (const auto& m : messages_) out << "; FAIL " << m;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::string vec(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

BoxSpec nonneg_box(std::size_t n, const Int& side) {
  BoxSpec box;
  box.lower.assign(n, Int(0));
  box.upper.assign(n, side);
  return box;
}

BoxSpec knapsack_box(const IntVector& a, const Int& b) {
  BoxSpec box;
  for (const auto& ai : a) {
    box.lower.push_back(0);
    box.upper.push_back(b / ai);
  }
  return box;
}

void paper_2x4(Tally& t) {
  Instance inst = gen_paper_2x4();
  ProjectionContext ctx(inst.A, inst.b, *inst.gamma);
  CornerVertexSet cv = corner_vertices(ctx);
  t.check(cv.lifted == std::vector<IntVector>{{0, 1, 1, 3}}, "corner vertices are not {(0,1,1,3)}");
  MinorStats stats = minor_stats(inst.A);
  t.check(make_rat(stats.sigma, stats.gcd_minors) == 20, "Sigma/gcd != 20");
  TransferenceReport r = check_theorem1(ctx, {0, 1, 1, 3});
  t.check(r.r == 2, "r != 2");
  t.check(r.delta == 10, "delta != 10");
  t.check(r.rhs == 20, "rhs != 20");
  t.check(r.lhs == 20, "10 * 2^2 / 2 != 20");
  t.check(r.holds && r.tight, "not holds and tight");
  t.note("r=2 delta=10 rhs=20 tight");
}

double r1_family(Tally& t) {
  double slowest = 0;
  for (long k : {2, 5, 10})
    for (std::size_t n : {2, 3, 5}) {
      auto start = std::chrono::steady_clock::now();
      Instance inst = gen_r1_family(k, n);
      IntVector a = inst.knapsack_a();
      const Int& b = inst.knapsack_b();
      IntVector expected(n, Int(0));
      expected.back() = k - 1;
      auto points = enumerate_integer_points(inst.A, inst.b, std::vector<bool>(n, true), knapsack_box(a, b));
      std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      t.check(points == std::vector<IntVector>{expected}, tag + ": feasible set is not {(k-1)e_n}");
      TransferenceReport r = check_theorem3(a, b);
      t.check(r.z_star == expected, tag + ": corner vertex in P differs");
      t.check(r.r == 1, tag + ": r != 1");
      t.check(r.delta == k - 1 && r.delta == Rat(inf_norm(a) - 1), tag + ": delta != ||a||_inf - 1");
      t.check(r.holds && r.tight, tag + ": bound not tight");
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, secs);
    }
  std::ostringstream note;
  note << "9 instances, slowest " << std::fixed << std::setprecision(3) << slowest << " s (limit 1 s each)";
  t.note(note.str());
  t.check(slowest < 1.0, "an instance exceeded 1 s");
  return slowest;
}

void sharpness(Tally& t) {
  for (unsigned s : {3u, 4u, 5u}) {
    Rat previous = -1;
    for (long tv : {1, 10, 100}) {
      Instance inst = gen_sharpness(s, tv);
      IntVector a = inst.knapsack_a();
      const Int& b = inst.knapsack_b();
      IntVector ones(s, Int(1));
      std::string tag = "s=" + std::to_string(s) + " t=" + std::to_string(tv);
      auto vertices = corner_vertices_in_P(a, b);
      t.check(std::find(vertices.begin(), vertices.end(), ones) != vertices.end(), tag + ": 1_s not a corner vertex in P");
      TransferenceReport r = theorem3_report(a, b, ones);
      t.check(r.r == s - 1, tag + ": r != s - 1");
      t.check(r.relation == Relation::LessThan && r.holds, tag + ": strict inequality fails");
      Rat ratio = r.delta * Rat(pow(Int(2), s - 1)) / Rat(Int((s - 1) * inf_norm(a)));
      t.check(ratio == sharpness_ratio(s, tv), tag + ": ratio disagrees with the closed form");
      t.check(ratio > previous, tag + ": ratio not increasing in t");
      previous = ratio;
      if (s == 3 && tv == 100) {
        t.check(r.delta == Rat(803, 4), "delta != 200.75");
        t.check(inf_norm(a) == 402, "||a||_inf != 402");
        t.check(ratio == Rat(803, 804), "ratio != 401.5/402");
        t.check(ratio > Rat(995, 1000), "ratio <= 0.995");
        t.note("s=3 t=100 ratio " + to_string(ratio));
      }
    }
  }
}

void lemma5(Tally& t) {
  for (unsigned s = 2; s <= 8; ++s) {
    IntVector a;
    for (unsigned i = 1; i <= s; ++i) a.push_back(pow(Int(2), s - i));
    Int b = pow(Int(2), s) - 1;
    auto hull = integer_hull_vertices(a, b);
    IntVector ones(s, Int(1));
    t.check(std::find(hull.begin(), hull.end(), ones) != hull.end(),
            "s=" + std::to_string(s) + ": 1_s is not a hull vertex");
    if (s == 8) t.note("s=8 hull has " + std::to_string(hull.size()) + " vertices");
  }
}

void general_suite(Tally& t, std::uint64_t seed) {
  std::size_t vertices = 0, tight = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    RandomSpec spec;
    spec.kind = RandomKind::General;
    spec.m = 1 + i % 2;
    spec.n = spec.m + 1 + (i / 2) % (5 - spec.m);
    spec.seed = seed + i;
    Instance inst = gen_random(spec);
    std::string tag = "seed " + std::to_string(spec.seed);
    try {
      ProjectionContext ctx(inst.A, inst.b, *inst.gamma);
      CornerVertexSet cv = corner_vertices(ctx);
      OracleVertices ov = brute_corner_vertices(inst.A, inst.b, *inst.gamma);
      std::vector<IntVector> lifted = cv.lifted;
      std::sort(lifted.begin(), lifted.end());
      t.check(lifted == ov.vertices, tag + ": corner vertices differ from the oracle");
      MinorStats stats = minor_stats(inst.A);
      Rat theorem_bound = make_rat(stats.sigma, stats.gcd_minors);
      for (std::size_t k = 0; k < cv.lifted.size(); ++k) {
        ++vertices;
        const IntVector& z = cv.lifted[k];
        t.check(is_irreducible(cv.projected.vertices[k], cv.projected.lattice, cv.projected.cone),
                tag + ": vertex " + vec(z) + " is reducible");
        t.check(check_product_bound(z, ctx).holds, tag + ": product bound fails at " + vec(z));
        TransferenceReport r = check_theorem1(ctx, z);
        t.check(r.holds, tag + ": Theorem 1 fails at " + vec(z));
        if (r.tight && r.r >= 1) ++tight;
        Lemma4Report l = lemma4_bound(ctx, z);
        t.check(l.report.holds, tag + ": Lemma 4 fails at " + vec(z));
        t.check(l.cramer_matches_inverse && l.cramer_reproduces_gap, tag + ": Cramer audit fails");
        if (r.r >= 1) {
          // delta 2^r / r (or delta) <= refined bound <= Sigma / gcd bound.
          t.check(l.report.lhs <= l.report.rhs && l.report.rhs <= r.rhs, tag + ": refinement chain fails");
          t.check(r.rhs == theorem_bound - (r.r == 1 ? 1 : 0), tag + ": Theorem 1 right side mismatch");
        }
      }
    } catch (const Error& e) {
      t.check(false, tag + ": " + e.what());
    }
  }
  t.note("500 instances, " + std::to_string(vertices) + " vertices, " + std::to_string(tight) + " tight");
}

void degenerate_suite(Tally& t, std::uint64_t seed) {
  std::size_t vertices = 0, empty = 0, agree = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    RandomSpec spec;
    spec.kind = RandomKind::Degenerate;
    spec.n = 4;
    spec.seed = seed + i;
    Instance inst = gen_random(spec);
    std::string tag = "seed " + std::to_string(spec.seed);
    const IndexSet tau = *inst.tau;
    const std::size_t j = tau.front();
    RatVector x(inst.A.cols(), Rat(0));
    x[j] = inst.A(0, j) != 0 ? make_rat(inst.b[0], inst.A(0, j)) : make_rat(inst.b[1], inst.A(1, j));
    try {
      OracleVertices ov = brute_corner_vertices(inst.A, inst.b, tau);
      if (ov.vertices.empty()) ++empty;
      std::vector<IntVector> fast;
      try {
        fast = corner_tau_vertices(inst.A, inst.b, tau).lifted;
        std::sort(fast.begin(), fast.end());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptySail) throw;
      }
      if (fast == ov.vertices) ++agree;
      for (const auto& z : ov.vertices) {
        ++vertices;
        BasisChoice choice = choose_basis_prop2(inst.A, z, tau);
        t.check(choice.careful_choice_holds, tag + ": careful choice inequality fails at " + vec(z));
        TransferenceReport r = check_theorem2(inst.A, inst.b, x, z, tau);
        t.check(r.d == 1, tag + ": d != 1");
        t.check(r.holds, tag + ": Theorem 2 fails at " + vec(z));
      }
    } catch (const Error& e) {
      t.check(false, tag + ": " + e.what());
    }
  }
  t.note("100 instances, " + std::to_string(vertices) + " oracle vertices, " + std::to_string(empty) +
         " integer-empty, cone sail agrees on " + std::to_string(agree));
}

void knapsack_suite(Tally& t, std::uint64_t seed) {
  std::size_t strict = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    RandomSpec spec;
    spec.kind = RandomKind::Knapsack;
    spec.n = 2 + i % 4;
    spec.entry_bound = 30;
    spec.max_rhs = 200;
    spec.seed = seed + i;
    Instance inst = gen_random(spec);
    std::string tag = "seed " + std::to_string(spec.seed);
    IntVector a = inst.knapsack_a();
    const Int& b = inst.knapsack_b();
    const IntVector& c = *inst.c;
    try {
      TransferenceReport r = check_theorem3(a, b);
      t.check(r.holds, tag + ": Theorem 3 fails");
      if (r.r >= 2) {
        t.check(r.relation == Relation::LessThan && r.lhs < r.rhs, tag + ": not strict");
        ++strict;
      }
      IlpOptimum brute = brute_ilp_opt(inst.A, inst.b, c, Sense::Minimize, knapsack_box(a, b));
      t.check(ip_value(c, a, b).value == brute.value, tag + ": ip_value differs from enumeration");
      GapReport g = integrality_gap_report(c, a, b);
      t.check(g.gap >= 0, tag + ": negative gap");
      t.check(g.all_hold, tag + ": a Corollary 1 verdict fails");
      KnapsackWitnesses w = aho_and_sparsity_exist(a, b);
      t.check(w.proximity_distance <= inf_norm(a) - 1, tag + ": proximity witness too far");
      t.check(pow(Int(2), w.sparse_support) <= 2 * *std::min_element(a.begin(), a.end()),
              tag + ": sparse witness too large");
    } catch (const std::exception& e) {
      t.check(false, tag + ": " + e.what());
    }
  }
  t.note("500 instances, " + std::to_string(strict) + " with r >= 2");
}

void sparsity_suite(Tally& t, std::uint64_t seed) {
  std::size_t vertex_optima = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    RandomSpec spec;
    spec.kind = RandomKind::Bounded;
    spec.m = 1 + i % 2;
    spec.n = spec.m + 1 + (i / 2) % (5 - spec.m);
    spec.seed = seed + i;
    Instance inst = gen_random(spec);
    std::string tag = "seed " + std::to_string(spec.seed);
    try {
      MinSupportResult r = min_support_optimum(inst.A, inst.b, *inst.c, 100);
      t.check(r.report.holds, tag + ": Theorem 5 inequality fails at " + vec(r.z_star));
      if (r.report.is_hull_vertex) ++vertex_optima;
      t.check(support_bound_check(r.z_star, inst.A), tag + ": support bound fails");
      ShortVectors sv = bv_short_vectors(inst.A);
      const std::size_t d = inst.A.cols() - inst.A.rows();
      t.check(sv.vectors.size() == d, tag + ": wrong number of short vectors");
      t.check(rank(IntMatrix::from_rows(sv.vectors)) == d, tag + ": short vectors are dependent");
      for (const auto& y : sv.vectors)
        t.check(inst.A * y == IntVector(inst.A.rows(), Int(0)), tag + ": short vector not in the kernel");
      t.check(sv.bound_holds, tag + ": short vector product bound fails");
    } catch (const Error& e) {
      t.check(false, tag + ": " + e.what());
    }
  }
  t.note("200 instances, " + std::to_string(vertex_optima) + " selected optima are hull vertices");
}

void lemma3(Tally& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den_dist(1, 20);
  for (int i = 0; i < 1000; ++i) {
    std::size_t d = 2 + i % 5;
    RatVector x;
    for (std::size_t k = 0; k < d; ++k) {
      long den = den_dist(rng);
      long num = std::uniform_int_distribution<long>(den, 20 * den)(rng);
      x.push_back(make_rat(num, den));
    }
    SumProductReport r = sum_product_holds(x);
    t.check(r.holds, "tuple " + std::to_string(i) + " violates the inequality");
  }
  for (std::size_t d = 2; d <= 6; ++d) {
    SumProductReport r = sum_product_holds(RatVector(d, Rat(1)));
    t.check(r.equal, "no equality at all-ones for d=" + std::to_string(d));
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<void(Tally&, std::uint64_t)> body;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            const std::function<void(const CriterionResult&)>& progress) {
  const std::vector<Criterion> criteria = {
      {1, "two by four example", 1.0, [](Tally& t, std::uint64_t) { paper_2x4(t); }},
      {2, "r = 1 family", 9.0, [](Tally& t, std::uint64_t) { r1_family(t); }},
      {3, "sharpness family", 5.0, [](Tally& t, std::uint64_t) { sharpness(t); }},
      {4, "1_s is an integer hull vertex", 30.0, [](Tally& t, std::uint64_t) { lemma5(t); }},
      {5, "general property suite", 120.0, [](Tally& t, std::uint64_t s) { general_suite(t, s); }},
      {6, "degenerate property suite", 120.0, [](Tally& t, std::uint64_t s) { degenerate_suite(t, s + 100000); }},
      {7, "knapsack suite", 120.0, [](Tally& t, std::uint64_t s) { knapsack_suite(t, s + 200000); }},
      {8, "sparsity suite", 60.0, [](Tally& t, std::uint64_t s) { sparsity_suite(t, s + 300000); }},
      {9, "sum against product", 5.0, [](Tally& t, std::uint64_t s) { lemma3(t, s + 400000); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally, options.seed);
    } catch (const std::exception& e) {
      tally.check(false, std::string("uncaught: ") + e.what());
    }
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit_seconds = c.limit;
    r.checks_passed = tally.ok();
    r.detail = tally.summary();
    if (progress) progress(r);
    results.push_back(r);
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << "  [" << std::fixed
      << std::setprecision(2) << r.seconds << " s, limit " << std::setprecision(0) << r.limit_seconds << " s]  "
      << r.detail;
  if (r.checks_passed && !r.passed()) out << "; runtime limit exceeded";
  return out.str();
}

}  // namespace cornerpoly
