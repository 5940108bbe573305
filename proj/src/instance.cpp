#include "cornerpoly/instance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cornerpoly/corner.hpp"
#include "cornerpoly/knapsack.hpp"

namespace cornerpoly {

using nlohmann::json;

namespace {

constexpr int kMaxRetries = 10000;

json int_vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long>());
  throw Error(ErrorKind::InvalidInstance, "integers must be decimal strings");
}

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInstance, "expected an array of integers");
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

json index_json(const IndexSet& s) {
  json out = json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

IndexSet index_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInstance, "index sets are arrays");
  IndexSet out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 1) throw Error(ErrorKind::InvalidInstance, "indices are 1-based");
    out.push_back(static_cast<std::size_t>(x.get<long>() - 1));
  }
  return out;
}

IntMatrix row_matrix(const IntVector& a) { return IntMatrix::from_rows({a}); }

Instance make_knapsack(const IntVector& a, const Int& b, const std::string& family) {
  Instance inst;
  inst.kind = InstanceKind::Knapsack;
  inst.A = row_matrix(a);
  inst.b = {b};
  inst.gamma = IndexSet{0};
  inst.meta = {{"family", family}, {"seed", nullptr}, {"params", json::object()}};
  return inst;
}

}  // namespace

std::string Instance::id() const {
  std::string family = meta.value("family", std::string("instance"));
  std::ostringstream out;
  out << family;
  if (meta.contains("seed") && !meta["seed"].is_null()) out << "-" << meta["seed"].dump();
  if (meta.contains("params"))
    for (const auto& [key, value] : meta["params"].items())
      if (key == "s" || key == "t" || key == "k" || key == "n" || key == "index")
        out << "-" << key << (value.is_string() ? value.get<std::string>() : value.dump());
  return out.str();
}

void validate(const Instance& inst) {
  const std::size_t m = inst.A.rows(), n = inst.A.cols();
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidInstance, "empty constraint matrix");
  if (inst.b.size() != m) throw Error(ErrorKind::ShapeMismatch, "b does not match the rows of A");
  if (m >= n) throw Error(ErrorKind::InvalidInstance, "needs m < n");
  if (rank(inst.A) < m) throw Error(ErrorKind::InvalidInstance, "A must have full row rank");
  if (inst.kind == InstanceKind::Knapsack) {
    if (m != 1) throw Error(ErrorKind::InvalidInstance, "a knapsack has one row");
    validate_knapsack(inst.knapsack_a(), inst.knapsack_b());
  }
  auto check_indices = [&](const IndexSet& s, const char* name) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] >= n) throw Error(ErrorKind::InvalidInstance, std::string(name) + " index out of range");
      if (k > 0 && s[k] <= s[k - 1])
        throw Error(ErrorKind::InvalidInstance, std::string(name) + " must be sorted without repeats");
    }
  };
  if (inst.gamma) {
    check_indices(*inst.gamma, "gamma");
    if (inst.gamma->size() != m || det(inst.A.select_columns(*inst.gamma)) == 0)
      throw Error(ErrorKind::InvalidInstance, "A_gamma must be square and nonsingular");
  }
  if (inst.tau) {
    check_indices(*inst.tau, "tau");
    if (inst.tau->size() > m) throw Error(ErrorKind::InvalidInstance, "tau has more than m columns");
  }
  if (inst.c && inst.c->size() != n) throw Error(ErrorKind::ShapeMismatch, "c does not match the columns of A");
}

json to_json(const Instance& inst) {
  json j;
  if (inst.kind == InstanceKind::Knapsack) {
    j["kind"] = "knapsack";
    j["a"] = int_vector_json(inst.knapsack_a());
    j["b"] = to_string(inst.knapsack_b());
  } else {
    j["kind"] = "general";
    json rows = json::array();
    for (std::size_t i = 0; i < inst.A.rows(); ++i) rows.push_back(int_vector_json(inst.A.row(i)));
    j["A"] = rows;
    j["b"] = int_vector_json(inst.b);
  }
  if (inst.gamma) j["gamma"] = index_json(*inst.gamma);
  if (inst.tau) j["tau"] = index_json(*inst.tau);
  if (inst.c) j["c"] = int_vector_json(*inst.c);
  j["meta"] = inst.meta;
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInstance, "instance must be a JSON object");
  Instance inst;
  std::string kind = j.value("kind", std::string("general"));
  if (kind == "knapsack") {
    inst.kind = InstanceKind::Knapsack;
    if (j.contains("a")) {
      inst.A = row_matrix(int_vector_from_json(j.at("a")));
    } else if (j.contains("A") && j["A"].size() == 1) {
      inst.A = row_matrix(int_vector_from_json(j["A"][0]));
    } else {
      throw Error(ErrorKind::InvalidInstance, "knapsack needs field a");
    }
    if (!j.contains("b")) throw Error(ErrorKind::InvalidInstance, "missing field b");
    inst.b = j["b"].is_array() ? int_vector_from_json(j["b"]) : IntVector{int_from_json(j["b"])};
  } else if (kind == "general") {
    if (!j.contains("A") || !j["A"].is_array() || !j.contains("b"))
      throw Error(ErrorKind::InvalidInstance, "general instance needs A and b");
    std::vector<IntVector> rows;
    for (const auto& r : j["A"]) rows.push_back(int_vector_from_json(r));
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) throw Error(ErrorKind::ShapeMismatch, "ragged rows in A");
    inst.A = IntMatrix::from_rows(rows);
    inst.b = int_vector_from_json(j["b"]);
  } else {
    throw Error(ErrorKind::InvalidInstance, "unknown kind " + kind);
  }
  if (j.contains("gamma")) inst.gamma = index_from_json(j["gamma"]);
  if (j.contains("tau")) inst.tau = index_from_json(j["tau"]);
  if (j.contains("c")) inst.c = int_vector_from_json(j["c"]);
  if (j.contains("meta")) inst.meta = j["meta"];
  validate(inst);
  return inst;
}

std::string dump(const Instance& inst) { return to_json(inst).dump(2); }

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInstance, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInstance, std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInstance, "cannot write " + path);
  out << dump(inst) << "\n";
}

Rat sharpness_delta(unsigned s, const Int& t) {
  Int a1 = pow(Int(2), s - 1);
  Int b = a1;
  for (unsigned i = 2; i <= s; ++i) b += pow(Int(2), s - i) + t * a1;
  Rat x1 = make_rat(b, a1);
  return std::max(abs(Rat(x1 - 1)), Rat(1));
}

Rat sharpness_ratio(unsigned s, const Int& t) {
  Int a_norm = pow(Int(2), s - 2) + t * pow(Int(2), s - 1);
  return sharpness_delta(s, t) * Rat(pow(Int(2), s - 1)) / Rat(Int((s - 1) * a_norm));
}

Instance gen_sharpness(unsigned s, const Int& t) {
  if (s < 3 || s > 30) throw Error(ErrorKind::DomainError, "sharpness family needs 3 <= s <= 30");
  if (t < 0) throw Error(ErrorKind::DomainError, "sharpness family needs t >= 0");
  IntVector a{pow(Int(2), s - 1)};
  for (unsigned i = 2; i <= s; ++i) a.push_back(pow(Int(2), s - i) + t * pow(Int(2), s - 1));
  Int b = 0;
  for (const auto& ai : a) b += ai;
  Instance inst = make_knapsack(a, b, "sharpness");
  bool checked = false;
  if (s <= 8) {
    auto vertices = corner_vertices_in_P(a, b);
    IntVector ones(s, Int(1));
    if (std::find(vertices.begin(), vertices.end(), ones) == vertices.end())
      throw Error(ErrorKind::GenerationFailed, "1_s is not a corner vertex");
    checked = true;
  }
  inst.meta["params"] = {{"s", s},
                         {"t", to_string(t)},
                         {"delta", to_string(sharpness_delta(s, t))},
                         {"ratio", to_string(sharpness_ratio(s, t))},
                         {"vertex_checked", checked}};
  return inst;
}

Instance gen_r1_family(const Int& k, std::size_t n) {
  if (k < 2 || n < 2) throw Error(ErrorKind::DomainError, "r = 1 family needs k >= 2 and n >= 2");
  IntVector a(n, k);
  a.back() = 1;
  Instance inst = make_knapsack(a, k - 1, "r1");
  inst.meta["params"] = {{"k", to_string(k)}, {"n", n}};
  return inst;
}

Instance gen_paper_2x4() {
  Instance inst;
  inst.kind = InstanceKind::General;
  inst.A = IntMatrix{{2, 0, 5, 5}, {0, 4, 2, -1}};
  inst.b = {20, 3};
  inst.gamma = IndexSet{0, 1};
  inst.meta = {{"family", "paper2x4"}, {"seed", nullptr}, {"params", json::object()}};
  return inst;
}

std::string to_string(RandomKind kind) {
  switch (kind) {
    case RandomKind::General:
      return "general";
    case RandomKind::Knapsack:
      return "knapsack";
    case RandomKind::Degenerate:
      return "degenerate";
    case RandomKind::Bounded:
      return "bounded";
  }
  return "general";
}

RandomKind random_kind_from_string(const std::string& name) {
  for (RandomKind k : {RandomKind::General, RandomKind::Knapsack, RandomKind::Degenerate, RandomKind::Bounded})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::InvalidInstance, "unknown random kind " + name);
}

Instance gen_random(const RandomSpec& spec) {
  std::size_t m = spec.kind == RandomKind::Knapsack ? 1 : spec.kind == RandomKind::Degenerate ? 2 : spec.m;
  const std::size_t n = spec.n;
  if (m == 0 || m >= n) throw Error(ErrorKind::DomainError, "needs 0 < m < n");
  if (spec.entry_bound < 1) throw Error(ErrorKind::DomainError, "entry bound must be positive");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> entry(-spec.entry_bound, spec.entry_bound);
  std::uniform_int_distribution<long> positive(1, spec.entry_bound);
  std::uniform_int_distribution<long> point(0, spec.max_z);

  auto random_cost = [&](std::size_t len) {
    IntVector c(len);
    bool nonzero = false;
    while (!nonzero)
      for (auto& ci : c) {
        ci = entry(rng);
        nonzero = nonzero || ci != 0;
      }
    return c;
  };

  Instance inst;
  bool done = false;
  for (int attempt = 0; attempt < kMaxRetries && !done; ++attempt) {
    if (spec.kind == RandomKind::Knapsack) {
      IntVector a(n);
      Int g = 0;
      for (auto& ai : a) {
        ai = positive(rng);
        g = gcd(g, ai);
      }
      if (g != 1) continue;
      IntVector z(n);
      for (auto& zi : z) zi = point(rng);
      Int b = dot(a, z);
      if (b > spec.max_rhs) continue;
      inst = make_knapsack(a, b, "random");
      inst.c = random_cost(n);
      done = true;
      continue;
    }
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = (spec.kind == RandomKind::Bounded && i == 0) ? Int(positive(rng)) : Int(entry(rng));
    if (rank(a) < m) continue;
    inst = Instance{};
    inst.A = a;
    if (spec.kind == RandomKind::Degenerate) {
      std::size_t j = rng() % n;
      Int g = gcd(a(0, j), a(1, j));
      long k = std::uniform_int_distribution<long>(1, 9)(rng);
      if (g < 2 || k % g == 0) continue;
      IntVector b{k * (a(0, j) / g), k * (a(1, j) / g)};
      if (!integer_solution(a, b)) continue;
      inst.b = b;
      inst.tau = IndexSet{j};
    } else {
      IntVector z(n);
      for (auto& zi : z) zi = point(rng);
      inst.b = a * z;
      auto bases = bases_containing(a, {});
      inst.gamma = bases[rng() % bases.size()];
      if (spec.kind == RandomKind::Bounded) inst.c = random_cost(n);
    }
    done = true;
  }
  if (!done) throw Error(ErrorKind::GenerationFailed, "no valid instance after bounded retries");
  inst.meta = {{"family", "random-" + to_string(spec.kind)},
               {"seed", spec.seed},
               {"params",
                {{"m", m}, {"n", n}, {"entry_bound", spec.entry_bound}, {"max_rhs", spec.max_rhs},
                 {"max_z", spec.max_z}}}};
  validate(inst);
  return inst;
}

}  // namespace cornerpoly
