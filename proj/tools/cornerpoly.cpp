// Command line front end. Exit codes: 0 every check holds, 1 a check failed
// or the input was invalid, 2 usage error, 3 a resource cap was hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cornerpoly/corner.hpp"
#include "cornerpoly/instance.hpp"
#include "cornerpoly/knapsack.hpp"
#include "cornerpoly/sparsity.hpp"
#include "cornerpoly/suite.hpp"
#include "cornerpoly/transference.hpp"

using namespace cornerpoly;
using nlohmann::json;

namespace {

struct Options {
  std::string instance;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t count = 1;
  long box_cap = 100;
  bool quiet = false;
};

// One verify row; the CSV columns are fixed.
struct Row {
  std::string theorem;
  std::size_t r = 0;
  std::size_t d = 0;
  Rat delta;
  Rat rhs;
  bool holds = false;
  bool tight = false;
  json extra = json::object();
};

json rat_json(const Rat& v) { return to_string(v); }

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json index_json(const IndexSet& s) {
  json out = json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

Row row_from(const TransferenceReport& t) {
  Row row{t.theorem_id, t.r, t.d, t.delta, t.rhs, t.holds, t.tight};
  row.extra = {{"x_star", vector_json(t.x_star)}, {"z_star", vector_json(t.z_star)},
               {"gamma", index_json(t.gamma)},    {"lhs", rat_json(t.lhs)},
               {"relation", to_string(t.relation)}};
  return row;
}

class Output {
 public:
  explicit Output(const Options& opt) : opt_(opt) {
    if (!opt.out.empty()) {
      file_.open(opt.out);
      if (!file_) throw Error(ErrorKind::InvalidInstance, "cannot write " + opt.out);
    }
  }
  std::ostream& stream() { return opt_.out.empty() ? std::cout : file_; }
  void emit(const json& j) {
    if (!opt_.quiet || !opt_.out.empty()) stream() << j.dump(2) << "\n";
  }

 private:
  const Options& opt_;
  std::ofstream file_;
};

Instance load(const Options& opt) {
  if (opt.instance.empty()) throw CLI::ValidationError("--instance", "an instance is required");
  if (opt.instance == "paper2x4") return gen_paper_2x4();
  return read_instance(opt.instance);
}

IndexSet basis_of(const Instance& inst) {
  if (inst.gamma) return *inst.gamma;
  return reference_basis(inst.A, {});
}

// x* and its support for the degenerate entry points: the basic solution of a
// basis containing tau must vanish off tau.
RatVector vertex_for_tau(const Instance& inst, const IndexSet& tau) {
  ProjectionContext ctx(inst.A, inst.b, reference_basis(inst.A, tau));
  RatVector x = ctx.basic_solution();
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0 && !std::binary_search(tau.begin(), tau.end(), j))
      throw Error(ErrorKind::InvalidVertex, "tau is not the support of a vertex of P(A, b)");
  for (std::size_t j : tau)
    if (x[j] <= 0) throw Error(ErrorKind::InvalidVertex, "tau is not the support of a vertex of P(A, b)");
  return x;
}

int emit_rows(const Options& opt, const Instance& inst, const std::vector<Row>& rows) {
  Output out(opt);
  bool all = true;
  for (const auto& r : rows) all = all && r.holds;
  if (opt.format == "csv") {
    std::ostringstream text;
    text << "instance_id,theorem,r,d,delta_num,delta_den,rhs_num,rhs_den,holds,tight\n";
    for (const auto& r : rows)
      text << inst.id() << "," << r.theorem << "," << r.r << "," << r.d << "," << to_string(r.delta.get_num())
           << "," << to_string(r.delta.get_den()) << "," << to_string(r.rhs.get_num()) << ","
           << to_string(r.rhs.get_den()) << "," << (r.holds ? "true" : "false") << ","
           << (r.tight ? "true" : "false") << "\n";
    if (!opt.quiet || !opt.out.empty()) out.stream() << text.str();
  } else {
    json reports = json::array();
    for (const auto& r : rows) {
      json j = {{"theorem", r.theorem}, {"r", r.r},         {"d", r.d},          {"delta", rat_json(r.delta)},
                {"rhs", rat_json(r.rhs)}, {"holds", r.holds}, {"tight", r.tight}};
      j.update(r.extra);
      reports.push_back(j);
    }
    out.emit({{"instance_id", inst.id()}, {"all_hold", all}, {"reports", reports}});
  }
  return all ? 0 : 1;
}

std::vector<IntVector> gamma_corner_vertices(const ProjectionContext& ctx) { return corner_vertices(ctx).lifted; }

std::vector<Row> verify_rows(const std::string& which, const Instance& inst, const Options& opt) {
  std::vector<Row> rows;
  if (which == "thm1" || which == "thm6" || which == "lemma4") {
    ProjectionContext ctx(inst.A, inst.b, basis_of(inst));
    for (const auto& z : gamma_corner_vertices(ctx)) {
      if (which == "thm1") {
        rows.push_back(row_from(check_theorem1(ctx, z)));
      } else if (which == "lemma4") {
        Lemma4Report l = lemma4_bound(ctx, z);
        Row row = row_from(l.report);
        row.extra["product_bound"] = rat_json(l.product_bound);
        row.extra["cramer_matches_inverse"] = l.cramer_matches_inverse;
        rows.push_back(row);
      } else {
        ProductBoundReport p = check_product_bound(z, ctx);
        std::size_t r = 0;
        for (std::size_t j : ctx.gamma_bar()) r += z[j] != 0;
        Row row{"thm6", r, 0, Rat(p.product), p.rhs, p.holds, p.slack == 0};
        row.extra = {{"z_star", vector_json(z)}, {"slack", rat_json(p.slack)}, {"gamma", index_json(ctx.gamma())}};
        rows.push_back(row);
      }
    }
  } else if (which == "thm2") {
    IndexSet tau;
    RatVector x;
    if (inst.tau) {
      tau = *inst.tau;
      x = vertex_for_tau(inst, tau);
    } else {
      x = ProjectionContext(inst.A, inst.b, basis_of(inst)).basic_solution();
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) tau.push_back(j);
    }
    std::vector<IntVector> vertices;
    try {
      vertices = corner_tau_vertices(inst.A, inst.b, tau).lifted;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptySail) throw;
    }
    for (const auto& z : vertices) rows.push_back(row_from(check_theorem2(inst.A, inst.b, x, z, tau)));
  } else if (which == "thm3") {
    if (inst.kind != InstanceKind::Knapsack) throw Error(ErrorKind::InvalidInstance, "thm3 needs a knapsack");
    rows.push_back(row_from(check_theorem3(inst.knapsack_a(), inst.knapsack_b())));
  } else if (which == "cor1") {
    if (inst.kind != InstanceKind::Knapsack) throw Error(ErrorKind::InvalidInstance, "cor1 needs a knapsack");
    IntVector c = inst.c ? *inst.c : IntVector(inst.A.cols(), Int(1));
    GapReport g = integrality_gap_report(c, inst.knapsack_a(), inst.knapsack_b());
    for (const auto& v : g.verdicts) {
      Row row{"cor1", v.r, 0, g.gap, v.corollary_rhs, v.corollary_holds && v.chain_holds && g.gap >= 0,
              g.gap == v.corollary_rhs};
      row.extra = {{"z_star", vector_json(v.z_star)},
                   {"relation", to_string(v.relation)},
                   {"distance_bound", rat_json(v.distance_bound)},
                   {"permutation", index_json(g.permutation)}};
      rows.push_back(row);
    }
  } else if (which == "thm5") {
    IntVector c = inst.c ? *inst.c : IntVector(inst.A.cols(), Int(0));
    MinSupportResult res = min_support_optimum(inst.A, inst.b, c, opt.box_cap);
    const SparsityReport& s = res.report;
    // Squared comparison: delta = lhs^2 gcd(A)^2, rhs = det(A A^T).
    Rat lhs_sq = s.lhs * s.lhs * Rat(s.gcd_a * s.gcd_a);
    Row row{"thm5", s.s, s.m, lhs_sq, Rat(s.det_aat), s.holds, lhs_sq == Rat(s.det_aat)};
    row.extra = {{"z_star", vector_json(s.z_star)}, {"rho", to_string(s.rho)},
                 {"lhs", rat_json(s.lhs)},          {"is_hull_vertex", s.is_hull_vertex},
                 {"optimum", to_string(res.optimum)}};
    rows.push_back(row);
  } else {
    throw CLI::ValidationError("verify", "unknown check " + which);
  }
  return rows;
}

RatVector parse_values(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rat v;
    if (v.set_str(item, 10) != 0) throw Error(ErrorKind::DomainError, "bad rational " + item);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

int run_gen(const std::string& family, const Options& opt, unsigned s, const std::string& t, long k, std::size_t n,
            std::size_t m, long bound, const std::string& kind) {
  std::vector<Instance> made;
  if (family == "sharpness") {
    made.push_back(gen_sharpness(s, parse_int(t)));
  } else if (family == "r1") {
    made.push_back(gen_r1_family(k, n));
  } else if (family == "paper2x4") {
    made.push_back(gen_paper_2x4());
  } else {
    for (std::size_t i = 0; i < opt.count; ++i) {
      RandomSpec spec;
      spec.m = m;
      spec.n = n;
      spec.entry_bound = bound;
      spec.seed = opt.seed + i;
      spec.kind = random_kind_from_string(kind);
      made.push_back(gen_random(spec));
    }
  }
  Output out(opt);
  if (made.size() == 1) {
    out.emit(to_json(made.front()));
  } else {
    json all = json::array();
    for (const auto& inst : made) all.push_back(to_json(inst));
    out.emit(all);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact corner polyhedra, sails and transference bounds"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", opt.instance, "instance JSON path, or paper2x4");
    sub->add_option("--out", opt.out, "write the result here instead of stdout");
    sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--count", opt.count, "number of generated instances");
    sub->add_option("--box-cap", opt.box_cap, "coordinate cap for enumeration");
    sub->add_flag("--quiet", opt.quiet, "suppress stdout output");
  };

  auto* sail = app.add_subcommand("sail", "sail vertices of the projected lattice in the orthant");
  auto* corner = app.add_subcommand("corner", "vertices of CP_gamma, or CP_tau when the instance has tau");
  auto* verify = app.add_subcommand("verify", "check a bound on an instance");
  std::string which;
  std::string values;
  verify->add_option("check", which, "thm1|thm2|thm3|thm5|thm6|cor1|lemma3|lemma4")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm5", "thm6", "cor1", "lemma3", "lemma4"}));
  verify->add_option("--values", values, "comma-separated rationals for lemma3");
  auto* gap = app.add_subcommand("gap", "integrality gap report for a knapsack");
  auto* sparsity = app.add_subcommand("sparsity", "minimum-support optimum and its bound");
  auto* bv = app.add_subcommand("bv", "short kernel vectors");
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string family;
  unsigned s = 3;
  std::string t = "1";
  long k = 5;
  std::size_t n = 3, m = 1;
  long bound = 6;
  std::string kind = "general";
  gen->add_option("family", family, "sharpness|r1|paper2x4|random")
      ->required()
      ->check(CLI::IsMember({"sharpness", "r1", "paper2x4", "random"}));
  gen->add_option("--s", s, "sharpness: s");
  gen->add_option("--t", t, "sharpness: t");
  gen->add_option("--k", k, "r1: k");
  gen->add_option("--n", n, "r1/random: n");
  gen->add_option("--m", m, "random: m");
  gen->add_option("--bound", bound, "random: entry bound");
  gen->add_option("--kind", kind, "random: general|knapsack|degenerate|bounded");
  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  std::vector<int> only;
  suite->add_option("--only", only, "criteria to run")->delimiter(',');
  for (auto* sub : {sail, corner, verify, gap, sparsity, bv, gen, suite}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sail->parsed()) {
      Instance inst = load(opt);
      ProjectionContext ctx(inst.A, inst.b, basis_of(inst));
      AffineLattice lattice = project_lattice(ctx);
      Sail sl = sail_vertices(lattice);
      json verts = json::array();
      for (const auto& v : sl.vertices) verts.push_back(vector_json(v));
      Output(opt).emit({{"instance_id", inst.id()},
                        {"gamma", index_json(ctx.gamma())},
                        {"lattice_determinant", to_string(lattice.determinant())},
                        {"shift", vector_json(lattice.shift())},
                        {"candidate_bound", to_string(sl.candidate_bound)},
                        {"candidates", sl.candidates},
                        {"irreducible", sl.irreducible},
                        {"vertices", verts}});
      return 0;
    }
    if (corner->parsed()) {
      Instance inst = load(opt);
      CornerVertexSet cv;
      if (inst.tau) {
        cv = corner_tau_vertices(inst.A, inst.b, *inst.tau);
      } else {
        cv = corner_vertices(ProjectionContext(inst.A, inst.b, basis_of(inst)));
      }
      json verts = json::array();
      for (const auto& v : cv.lifted) verts.push_back(vector_json(v));
      Output(opt).emit({{"instance_id", inst.id()},
                        {"gamma", index_json(cv.gamma)},
                        {"tau", index_json(cv.tau)},
                        {"vertices", verts}});
      return 0;
    }
    if (verify->parsed()) {
      if (which == "lemma3") {
        RatVector x = parse_values(values);
        SumProductReport r = sum_product_holds(x);
        Instance dummy;
        dummy.meta = {{"family", "lemma3"}};
        Row row{"lemma3", 0, x.size(), r.lhs, r.rhs, r.holds, r.equal};
        return emit_rows(opt, dummy, {row});
      }
      Instance inst = load(opt);
      return emit_rows(opt, inst, verify_rows(which, inst, opt));
    }
    if (gap->parsed()) {
      Instance inst = load(opt);
      if (inst.kind != InstanceKind::Knapsack) throw Error(ErrorKind::InvalidInstance, "gap needs a knapsack");
      IntVector c = inst.c ? *inst.c : IntVector(inst.A.cols(), Int(1));
      GapReport g = integrality_gap_report(c, inst.knapsack_a(), inst.knapsack_b());
      json verdicts = json::array();
      for (const auto& v : g.verdicts)
        verdicts.push_back({{"z_star", vector_json(v.z_star)},
                            {"r", v.r},
                            {"delta", rat_json(v.delta)},
                            {"distance_bound", rat_json(v.distance_bound)},
                            {"support_bound", rat_json(v.support_bound)},
                            {"corollary_rhs", rat_json(v.corollary_rhs)},
                            {"relation", to_string(v.relation)},
                            {"chain_holds", v.chain_holds},
                            {"corollary_holds", v.corollary_holds},
                            {"zero_cost", v.zero_cost}});
      Output(opt).emit({{"instance_id", inst.id()},
                        {"permutation", index_json(g.permutation)},
                        {"ip", to_string(g.ip)},
                        {"lp", rat_json(g.lp)},
                        {"gap", rat_json(g.gap)},
                        {"all_hold", g.all_hold},
                        {"verdicts", verdicts}});
      return g.all_hold ? 0 : 1;
    }
    if (sparsity->parsed()) {
      Instance inst = load(opt);
      IntVector c = inst.c ? *inst.c : IntVector(inst.A.cols(), Int(0));
      MinSupportResult res = min_support_optimum(inst.A, inst.b, c, opt.box_cap);
      json optima = json::array();
      bool ok = res.report.holds && support_bound_check(res.z_star, inst.A);
      for (const auto& rep : res.minimum_support_optima)
        optima.push_back({{"z_star", vector_json(rep.z_star)},
                          {"s", rep.s},
                          {"rho", to_string(rep.rho)},
                          {"lhs", rat_json(rep.lhs)},
                          {"holds", rep.holds},
                          {"is_hull_vertex", rep.is_hull_vertex},
                          {"reduced_m", rep.reduced_m},
                          {"reduction_monotone", rep.reduction_monotone},
                          {"reduced_holds", rep.reduced_holds}});
      Output(opt).emit({{"instance_id", inst.id()},
                        {"optimum", to_string(res.optimum)},
                        {"z_star", vector_json(res.z_star)},
                        {"det_aat", to_string(res.report.det_aat)},
                        {"gcd", to_string(res.report.gcd_a)},
                        {"holds", res.report.holds},
                        {"support_bound_holds", support_bound_check(res.z_star, inst.A)},
                        {"minimum_support_optima", optima}});
      return ok ? 0 : 1;
    }
    if (bv->parsed()) {
      Instance inst = load(opt);
      ShortVectors sv = bv_short_vectors(inst.A);
      json vecs = json::array();
      for (const auto& y : sv.vectors) vecs.push_back(vector_json(y));
      Output(opt).emit({{"instance_id", inst.id()},
                        {"vectors", vecs},
                        {"norm_product", to_string(sv.norm_product)},
                        {"det_aat", to_string(sv.det_aat)},
                        {"gcd", to_string(sv.gcd_a)},
                        {"bound_holds", sv.bound_holds}});
      return sv.bound_holds ? 0 : 1;
    }
    if (gen->parsed()) return run_gen(family, opt, s, t, k, n, m, bound, kind);
    if (suite->parsed()) {
      SuiteOptions so;
      so.only = only;
      so.seed = suite->count("--seed") ? opt.seed : so.seed;
      bool all = true;
      Output out(opt);
      run_acceptance(so, [&](const CriterionResult& r) {
        if (!opt.quiet || !opt.out.empty()) out.stream() << format_result(r) << std::endl;
        all = all && r.passed();
      });
      return all ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_resource_error(e.kind()) ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
