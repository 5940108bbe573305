#include "cornerpoly/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "cornerpoly/lp.hpp"

namespace cornerpoly {

ConeInequalities ConeInequalities::orthant(std::size_t dim) {
  ConeInequalities c;
  c.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Int(0));
    e[i] = 1;
    c.rows.push_back(std::move(e));
  }
  return c;
}

bool ConeInequalities::contains(const IntVector& x) const {
  return std::all_of(rows.begin(), rows.end(), [&](const IntVector& q) { return dot(q, x) >= 0; });
}

namespace {

class ZeroSet {
 public:
  explicit ZeroSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }

  bool contains(const ZeroSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((o.words_[w] & ~words_[w]) != 0) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  ZeroSet zeros;
};

// Double description over the rows of a matrix of full column rank. Adjacency
// is combinatorial: two rays are adjacent iff their common zero set has at
// least dim-2 elements and no third ray vanishes on all of it.
std::vector<IntVector> double_description(const std::vector<IntVector>& rows, std::size_t dim) {
  IntMatrix q = IntMatrix::from_rows(rows);
  if (rows.empty() || rank(q) < dim) throw Error(ErrorKind::ConeNotPointed, "inequalities have a lineality space");

  IndexSet first;
  for (std::size_t r = 0; r < rows.size() && first.size() < dim; ++r) {
    IndexSet trial = first;
    trial.push_back(r);
    if (rank(q.select_rows(trial)) == trial.size()) first = std::move(trial);
  }
  IntMatrix m0 = q.select_rows(first);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVector e(dim, Rat(0));
    e[j] = 1;
    RatVector col = solve(m0, e);
    Int lcm_den = 1;
    for (const auto& x : col) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rat(col[i] * lcm_den).get_num();
    make_primitive(v);
    Ray ray{std::move(v), ZeroSet(rows.size())};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) ray.zeros.set(first[k]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(rows.size(), false);
  for (auto r : first) done[r] = true;

  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (done[c]) continue;
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rows[c], rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      else if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] == 0) rays[k].zeros.set(c);
      done[c] = true;
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        ZeroSet common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k != p && k != n && rays[k].zeros.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = val[p] * rays[n].v[i] - val[n] * rays[p].v[i];
        make_primitive(v);
        common.set(c);
        next.push_back(Ray{std::move(v), std::move(common)});
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] > 0) {
        next.push_back(std::move(rays[k]));
      } else if (val[k] == 0) {
        rays[k].zeros.set(c);
        next.push_back(std::move(rays[k]));
      }
    }
    rays = std::move(next);
    done[c] = true;
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

struct AffineChart {
  std::vector<std::size_t> unique;  // index of the first occurrence of each distinct point
  std::vector<IntVector> coords;    // projection of each distinct point to independent coordinates
  std::size_t dim = 0;
};

AffineChart make_chart(const std::vector<IntVector>& points) {
  AffineChart chart;
  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (seen.emplace(points[i], i).second) chart.unique.push_back(i);
  if (chart.unique.size() <= 1) return chart;

  const IntVector& base = points[chart.unique.front()];
  std::vector<IntVector> diffs;
  for (std::size_t k = 1; k < chart.unique.size(); ++k) {
    IntVector d = points[chart.unique[k]];
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= base[i];
    diffs.push_back(std::move(d));
  }
  IndexSet coords = independent_rows(IntMatrix::from_rows(diffs).transpose());
  chart.dim = coords.size();
  for (auto idx : chart.unique) {
    IntVector p;
    for (auto c : coords) p.push_back(points[idx][c]);
    chart.coords.push_back(std::move(p));
  }
  return chart;
}

}  // namespace

std::vector<IntVector> extreme_rays(const ConeInequalities& cone) {
  if (cone.dim > 8) throw Error(ErrorKind::DimensionTooLarge, "extreme_rays supports dimension <= 8");
  for (const auto& q : cone.rows)
    if (q.size() != cone.dim) throw Error(ErrorKind::ShapeMismatch, "cone inequality length");
  return double_description(cone.rows, cone.dim);
}

std::vector<IntVector> hull_facets(const std::vector<IntVector>& points) {
  if (points.empty()) return {};
  const std::size_t dim = points.front().size();
  std::vector<IntVector> rows;
  for (const auto& p : points) {
    IntVector h{Int(1)};
    h.insert(h.end(), p.begin(), p.end());
    rows.push_back(std::move(h));
  }
  return double_description(rows, dim + 1);
}

std::vector<std::size_t> hull_vertices(const std::vector<IntVector>& points) {
  AffineChart chart = make_chart(points);
  if (chart.unique.size() <= 1) return chart.unique;

  std::vector<IntVector> facets = hull_facets(chart.coords);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < chart.unique.size(); ++k) {
    IntVector h{Int(1)};
    h.insert(h.end(), chart.coords[k].begin(), chart.coords[k].end());
    std::vector<IntVector> tight;
    for (const auto& f : facets) {
      if (dot(f, h) == 0) tight.emplace_back(f.begin() + 1, f.end());
    }
    if (!tight.empty() && rank(IntMatrix::from_rows(tight)) == chart.dim) out.push_back(chart.unique[k]);
  }
  return out;
}

std::vector<std::size_t> hull_vertices_by_lp(const std::vector<IntVector>& points) {
  AffineChart chart = make_chart(points);
  if (chart.unique.size() <= 1) return chart.unique;

  const std::size_t count = chart.unique.size();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < count; ++k) {
    // sum_j lambda_j p_j = p_k, sum_j lambda_j = 1 over the other points.
    RatMatrix eq(chart.dim + 1, count - 1);
    RatVector rhs(chart.dim + 1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == k) continue;
      for (std::size_t i = 0; i < chart.dim; ++i) eq(i, col) = chart.coords[j][i];
      eq(chart.dim, col) = 1;
      ++col;
    }
    for (std::size_t i = 0; i < chart.dim; ++i) rhs[i] = chart.coords[k][i];
    rhs[chart.dim] = 1;
    if (!lp_feasible(eq, rhs, std::vector<bool>(count - 1, true)).feasible) out.push_back(chart.unique[k]);
  }
  return out;
}

}  // namespace cornerpoly
