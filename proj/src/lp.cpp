#include "lp.hpp"

#include <cstddef>
#include <optional>

namespace growthlab::lp {

namespace {

struct Tableau {
  // rows_[i] holds the constraint row followed by its rhs in the last slot.
  RatMatrix rows;
  RatVec objective;  // reduced costs, last slot = -(objective value)
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // number of structural + artificial columns

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = 0; k <= cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    if (objective[c] != 0) {
      Rational f = objective[c];
      for (std::size_t k = 0; k <= cols; ++k) objective[k] -= f * rows[r][k];
    }
    basis[r] = c;
  }

  // Runs simplex iterations on columns [0, allowed); Bland's rule.
  bool optimize(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (objective[c] < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][*enter] <= 0) continue;
        Rational ratio = rows[r][cols] / rows[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;  // unbounded
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

Result minimize(const RatMatrix& rows, const RatVec& rhs, const RatVec& cost) {
  const std::size_t m = rows.size();
  const std::size_t n = cost.size();
  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, zeros(t.cols + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-rows[i][j]) : rows[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.cols] = flip ? Rational(-rhs[i]) : rhs[i];
    t.basis[i] = n + i;
  }
  // Phase 1: minimise the sum of artificials.
  t.objective = zeros(t.cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.objective[j] -= t.rows[i][j];
    t.objective[t.cols] -= t.rows[i][t.cols];
  }
  t.optimize(n);
  Result result;
  if (t.objective[t.cols] != 0) {
    result.status = Status::Infeasible;
    return result;
  }
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < n; ++c) {
      if (t.rows[r][c] != 0) {
        col = c;
        break;
      }
    }
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }
  // Phase 2.
  t.objective = zeros(t.cols + 1);
  for (std::size_t j = 0; j < n; ++j) t.objective[j] = cost[j];
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Rational cb = cost[t.basis[r]];
    if (cb == 0) continue;
    for (std::size_t k = 0; k <= t.cols; ++k) t.objective[k] -= cb * t.rows[r][k];
  }
  if (!t.optimize(n)) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.value = -t.objective[t.cols];
  result.solution = zeros(n);
  for (std::size_t r = 0; r < t.rows.size(); ++r) result.solution[t.basis[r]] = t.rows[r][t.cols];
  return result;
}

Result lower_envelope(const std::vector<RatVec>& points, const RatVec& weights, const RatVec& y) {
  const std::size_t dim = y.size();
  RatMatrix rows(dim + 1, zeros(points.size()));
  RatVec rhs(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) rows[i][j] = points[j][i];
    rhs[i] = y[i];
  }
  for (std::size_t j = 0; j < points.size(); ++j) rows[dim][j] = 1;
  rhs[dim] = 1;
  return minimize(rows, rhs, weights);
}

}  // namespace growthlab::lp
