#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csl/rational.hpp"

namespace csl {

// Maximization problem over rationals. Variables listed in nonneg_vars are
// constrained to be >= 0; the rest are free. upper_bounds adds x_i <= b.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::pair<std::vector<Rational>, Rational>> eq_constraints;
  std::vector<std::size_t> nonneg_vars;
  std::map<std::size_t, Rational> upper_bounds;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  std::optional<Rational> value;
  std::optional<std::vector<Rational>> point;
};

namespace detail {

// Dense two-phase simplex with Bland's pivot rule, exact rational pivots.
// Standard form: all variables >= 0, equality rows with nonnegative rhs.
class SimplexTableau {
public:
  SimplexTableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                 std::size_t num_structural)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), n_(num_structural) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rhs_[i] < Rational(0)) {
        for (auto& a : rows_[i]) a = -a;
        rhs_[i] = -rhs_[i];
      }
    }
  }

  // Returns false when the program is infeasible.
  bool phase_one() {
    const std::size_t m = rows_.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) rows_[i].push_back(Rational(i == k ? 1 : 0));
      basis_.push_back(n_ + i);
    }
    // Maximize -(sum of artificials); reduced costs relative to the
    // all-artificial basis.
    cbar_.assign(n_ + m, Rational(0));
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < m; ++i) cbar_[j] += rows_[i][j];
    while (true) {
      const auto enter = entering_column(n_);  // artificials never re-enter
      if (!enter) break;
      pivot(leaving_row(*enter), *enter);
    }
    Rational residual(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] >= n_) residual += rhs_[i];
    if (!residual.is_zero()) return false;
    drive_out_artificials();
    return true;
  }

  // Maximizes obj (length = num_structural). Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& obj) {
    cbar_.assign(n_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      Rational c = obj[j];
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (basis_[i] < n_) c -= obj[basis_[i]] * rows_[i][j];
      cbar_[j] = c;
    }
    while (true) {
      const auto enter = entering_column(n_);
      if (!enter) return true;
      bool has_positive = false;
      for (std::size_t i = 0; i < rows_.size() && !has_positive; ++i)
        if (rows_[i][*enter] > Rational(0)) has_positive = true;
      if (!has_positive) return false;
      pivot(leaving_row(*enter), *enter);
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
  }

private:
  std::optional<std::size_t> entering_column(std::size_t limit) const {
    for (std::size_t j = 0; j < limit; ++j)
      if (cbar_[j] > Rational(0)) return j;  // Bland: smallest improving index
    return std::nullopt;
  }

  std::size_t leaving_row(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!(rows_[i][col] > Rational(0))) continue;
      const Rational ratio = rhs_[i] / rows_[i][col];
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    if (!best) throw std::logic_error("simplex: ratio test found no pivot row");
    return *best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = rows_[row][col].reciprocal();
    for (auto& a : rows_[row]) a *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row || rows_[i][col].is_zero()) continue;
      const Rational f = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        rows_[i][j] -= f * rows_[row][j];
      rhs_[i] -= f * rhs_[row];
    }
    if (!cbar_[col].is_zero()) {
      const Rational f = cbar_[col];
      for (std::size_t j = 0; j < cbar_.size(); ++j) cbar_[j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ && !col; ++j)
        if (!rows_[i][j].is_zero()) col = j;
      if (col) {
        pivot(i, *col);
        ++i;
      } else {  // redundant row
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& row : rows_) row.resize(n_);
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cbar_;
  std::size_t n_;
};

}  // namespace detail

inline LpOutcome lp_solve(const LinearProgram& prog) {
  if (prog.num_vars == 0) throw std::invalid_argument("lp_solve: no variables");
  if (prog.objective.size() != prog.num_vars)
    throw std::invalid_argument("lp_solve: objective length mismatch");
  for (const auto& [row, rhs] : prog.eq_constraints) {
    (void)rhs;
    if (row.size() != prog.num_vars)
      throw std::invalid_argument("lp_solve: constraint row length mismatch");
  }
  for (const auto& [idx, bound] : prog.upper_bounds) {
    (void)bound;
    if (idx >= prog.num_vars) throw std::invalid_argument("lp_solve: bound index out of range");
  }

  std::vector<bool> nonneg(prog.num_vars, false);
  for (std::size_t idx : prog.nonneg_vars) {
    if (idx >= prog.num_vars) throw std::invalid_argument("lp_solve: nonneg index out of range");
    nonneg[idx] = true;
  }

  // Standard form: split free variables, add a slack per upper bound.
  std::vector<std::size_t> pos_col(prog.num_vars), neg_col(prog.num_vars, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < prog.num_vars; ++i) {
    pos_col[i] = ncols++;
    if (!nonneg[i]) neg_col[i] = ncols++;
  }
  const std::size_t first_slack = ncols;
  ncols += prog.upper_bounds.size();

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto expand = [&](const std::vector<Rational>& row) {
    std::vector<Rational> out(ncols, Rational(0));
    for (std::size_t i = 0; i < prog.num_vars; ++i) {
      out[pos_col[i]] = row[i];
      if (neg_col[i] != SIZE_MAX) out[neg_col[i]] = -row[i];
    }
    return out;
  };
  for (const auto& [row, b] : prog.eq_constraints) {
    rows.push_back(expand(row));
    rhs.push_back(b);
  }
  std::size_t slack = first_slack;
  for (const auto& [idx, bound] : prog.upper_bounds) {
    std::vector<Rational> out(ncols, Rational(0));
    out[pos_col[idx]] = Rational(1);
    if (neg_col[idx] != SIZE_MAX) out[neg_col[idx]] = Rational(-1);
    out[slack++] = Rational(1);
    rows.push_back(std::move(out));
    rhs.push_back(bound);
  }

  std::vector<Rational> obj(ncols, Rational(0));
  for (std::size_t i = 0; i < prog.num_vars; ++i) {
    obj[pos_col[i]] = prog.objective[i];
    if (neg_col[i] != SIZE_MAX) obj[neg_col[i]] = -prog.objective[i];
  }

  detail::SimplexTableau tab(std::move(rows), std::move(rhs), ncols);
  if (!tab.phase_one()) return {LpStatus::infeasible, std::nullopt, std::nullopt};
  if (!tab.phase_two(obj)) return {LpStatus::unbounded, std::nullopt, std::nullopt};

  const auto std_point = tab.solution();
  std::vector<Rational> point;
  point.reserve(prog.num_vars);
  Rational value(0);
  for (std::size_t i = 0; i < prog.num_vars; ++i) {
    Rational x = std_point[pos_col[i]];
    if (neg_col[i] != SIZE_MAX) x -= std_point[neg_col[i]];
    value += prog.objective[i] * x;
    point.push_back(std::move(x));
  }
  return {LpStatus::optimal, value, point};
}

}  // namespace csl
