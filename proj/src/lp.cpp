#include "cornerpoly/lp.hpp"

#include <optional>

namespace cornerpoly {

namespace {

// Phase-one tableau: columns [structural | artificial | rhs], one row per
// equation plus the objective row at index `m`. The objective is the sum of
// artificials, minimized. Bland's rule on both the entering and the leaving
// choice, so cycling cannot happen.
class PhaseOne {
 public:
  PhaseOne(const RatMatrix& eq, const RatVector& rhs)
      : m_(eq.rows()), n_(eq.cols()), t_(m_ + 1, n_ + m_ + 1), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = rhs[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? Rat(-eq(i, j)) : eq(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs_col()) = flip ? Rat(-rhs[i]) : rhs[i];
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < m_; ++i) s += t_(i, j);
      t_(m_, j) = -s;
    }
    Rat s = 0;
    for (std::size_t i = 0; i < m_; ++i) s += t_(i, rhs_col());
    t_(m_, rhs_col()) = -s;
  }

  std::optional<RatVector> run() {
    while (t_(m_, rhs_col()) != 0) {
      std::size_t enter = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (t_(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_ + m_) return std::nullopt;  // optimal with positive artificial sum

      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rat ratio = t_(i, rhs_col()) / t_(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      pivot(leave, enter);
    }
    RatVector x(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_(i, rhs_col());
    return x;
  }

 private:
  std::size_t rhs_col() const { return n_ + m_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = t_(r, c);
    for (std::size_t j = 0; j <= rhs_col(); ++j) t_(r, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rat f = t_(i, c);
      for (std::size_t j = 0; j <= rhs_col(); ++j) {
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
      }
    }
    basis_[r] = c;
  }

  std::size_t m_, n_;
  RatMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_feasible(const RatMatrix& eq, const RatVector& rhs, const std::vector<bool>& nonneg) {
  if (rhs.size() != eq.rows() || nonneg.size() != eq.cols())
    throw Error(ErrorKind::ShapeMismatch, "lp_feasible shape");

  // Free variables are split as x = x+ - x-; the split columns come last.
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < eq.cols(); ++j)
    if (!nonneg[j]) free_vars.push_back(j);
  RatMatrix std_eq(eq.rows(), eq.cols() + free_vars.size());
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    for (std::size_t j = 0; j < eq.cols(); ++j) std_eq(i, j) = eq(i, j);
    for (std::size_t k = 0; k < free_vars.size(); ++k) std_eq(i, eq.cols() + k) = -eq(i, free_vars[k]);
  }

  LpResult result;
  auto x = PhaseOne(std_eq, rhs).run();
  if (!x) return result;
  result.feasible = true;
  result.witness.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(eq.cols()));
  for (std::size_t k = 0; k < free_vars.size(); ++k) result.witness[free_vars[k]] -= (*x)[eq.cols() + k];
  return result;
}

LpResult lp_feasible(const IntMatrix& eq, const IntVector& rhs) {
  return lp_feasible(RatMatrix(eq), to_rat(rhs), std::vector<bool>(eq.cols(), true));
}

}  // namespace cornerpoly
