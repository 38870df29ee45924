#pragma once

// Exact phase-1 simplex for feasibility of { A x = b, x >= 0 }.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "halfint/rational.hpp"

namespace halfint {

/// Standard-form system A x = b, x >= 0.
struct LinearSystem {
  RatMatrix a;
  std::vector<Rational> b;
};

struct LpResult {
  bool feasible = false;
  std::optional<std::vector<Rational>> witness;  // set iff feasible
};

namespace detail {

/// Dense simplex tableau. Row `m` is the phase-1 objective row.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n) : m_(m), width_(n + m + 1), cells_((m + 1) * width_) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  std::size_t rhs_col() const { return width_ - 1; }

  void pivot(std::size_t pr, std::size_t pc, std::vector<std::size_t>& nonzero) {
    const Rational inv = at(pr, pc).inverse();
    nonzero.clear();
    for (std::size_t c = 0; c < width_; ++c) {
      if (at(pr, c).is_zero()) continue;
      at(pr, c) *= inv;
      nonzero.push_back(c);
    }
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr || at(r, pc).is_zero()) continue;
      const Rational factor = at(r, pc);
      for (const std::size_t c : nonzero) at(r, c).sub_mul(factor, at(pr, c));
    }
  }

 private:
  std::size_t m_;
  std::size_t width_;
  std::vector<Rational> cells_;
};

}  // namespace detail

/// Decides feasibility of A x = b, x >= 0 by phase-1 simplex with Bland's
/// rule. On success the witness satisfies every constraint exactly.
inline LpResult lp_feasible(const LinearSystem& sys) {
  const std::size_t m = sys.a.rows();
  const std::size_t n = sys.a.cols();
  if (sys.b.size() != m) throw UsageError("right-hand side length does not match row count");
  if (m == 0) return {true, std::vector<Rational>(n)};

  // Columns: x_0..x_{n-1}, artificials a_0..a_{m-1}, rhs.
  detail::Tableau t(m, n);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sys.b[r].sign() < 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!sys.a(r, c).is_zero()) t.at(r, c) = flip ? -sys.a(r, c) : sys.a(r, c);
    }
    t.at(r, n + r) = 1;
    t.at(r, t.rhs_col()) = flip ? -sys.b[r] : sys.b[r];
    basis[r] = n + r;
  }
  // Reduced costs of the phase-1 objective sum(artificials); the objective
  // row holds -(current objective) in the rhs column.
  for (std::size_t c = 0; c < n; ++c) {
    Rational s;
    for (std::size_t r = 0; r < m; ++r) s -= t.at(r, c);
    t.at(m, c) = s;
  }
  {
    Rational s;
    for (std::size_t r = 0; r < m; ++r) s -= t.at(r, t.rhs_col());
    t.at(m, t.rhs_col()) = s;
  }

  std::vector<std::size_t> scratch;
  for (;;) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = n + m;
    for (std::size_t c = 0; c < n + m; ++c) {
      if (t.at(m, c).sign() < 0) {
        enter = c;
        break;
      }
    }
    if (enter == n + m) break;

    // Minimum ratio; ties go to the lowest basic variable index.
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.at(r, enter).sign() <= 0) continue;
      Rational ratio = t.at(r, t.rhs_col()) / t.at(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = std::move(ratio);
        leave = r;
      }
    }
    if (leave == m) break;  // unreachable: phase-1 objective is bounded below
    t.pivot(leave, enter, scratch);
    basis[leave] = enter;
  }

  if (!t.at(m, t.rhs_col()).is_zero()) return {false, std::nullopt};

  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) x[basis[r]] = t.at(r, t.rhs_col());
  }
  return {true, std::move(x)};
}

/// True iff x >= 0 and A x = b hold exactly.
inline bool satisfies(const LinearSystem& sys, std::span<const Rational> x) {
  if (x.size() != sys.a.cols()) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (std::size_t r = 0; r < sys.a.rows(); ++r) {
    Rational s;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (!sys.a(r, c).is_zero() && !x[c].is_zero()) s += sys.a(r, c) * x[c];
    }
    if (s != sys.b[r]) return false;
  }
  return true;
}

/// Convex-combination system: weights w >= 0 over `points` with
/// sum w = 1 and sum w_k points[k] = target.
inline LinearSystem convex_combination_system(const RatPoint& target,
                                              std::span<const RatPoint> points) {
  const std::size_t d = target.dim();
  LinearSystem sys{RatMatrix(d + 1, points.size()), std::vector<Rational>(d + 1)};
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].dim() != d) throw UsageError("dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) sys.a(i, k) = points[k][i];
    sys.a(d, k) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) sys.b[i] = target[i];
  sys.b[d] = 1;
  return sys;
}

/// Whether target lies in conv(points).
inline bool in_convex_hull(const RatPoint& target, std::span<const RatPoint> points) {
  if (points.empty()) return false;
  return lp_feasible(convex_combination_system(target, points)).feasible;
}

}  // namespace halfint
