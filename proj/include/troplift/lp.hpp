#pragma once

#include "troplift/eps_scalar.hpp"
#include "troplift/errors.hpp"
#include "troplift/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace troplift {

// <normal, x> <= offset (or == offset for equality rows)
template <class F> struct LinearRow {
  std::vector<F> normal;
  F offset;
};

template <class F> struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearRow<F>> ineqs;
  std::vector<LinearRow<F>> eqs;
  std::optional<std::vector<F>> maximize;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

template <class F> struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  // A feasible point for Feasible and Unbounded; optimal when an objective was given.
  std::vector<F> point;
  std::optional<F> value;

  bool feasible() const { return status != LpStatus::Infeasible; }
};

namespace detail {

// Dense tableau simplex with Bland's rule. Columns: x+ (n), x- (n), slacks
// (one per inequality), artificials. All arithmetic is exact in F.
template <class F> class Simplex {
public:
  explicit Simplex(const LinearProgram<F> &lp) : lp_(lp) {}

  LpResult<F> run() {
    const std::size_t n = lp_.num_vars;
    const std::size_t mi = lp_.ineqs.size(), me = lp_.eqs.size();
    for (const auto &row : lp_.ineqs) check_row(row);
    for (const auto &row : lp_.eqs) check_row(row);

    slack0_ = 2 * n;
    art0_ = slack0_ + mi;
    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < mi; ++i)
      if (sign(lp_.ineqs[i].offset) < 0) art_rows.push_back(i);
    for (std::size_t i = 0; i < me; ++i) art_rows.push_back(mi + i);
    ncols_ = art0_ + art_rows.size();

    rows_.assign(mi + me, std::vector<F>(ncols_ + 1, F(0)));
    basis_.assign(mi + me, 0);
    for (std::size_t i = 0; i < mi + me; ++i) {
      const auto &row = i < mi ? lp_.ineqs[i] : lp_.eqs[i - mi];
      auto &t = rows_[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(row.normal[j])) continue;
        t[j] = row.normal[j];
        t[n + j] = -row.normal[j];
      }
      if (i < mi) t[slack0_ + i] = F(1);
      t[ncols_] = row.offset;
      if (sign(row.offset) < 0)
        for (auto &x : t) x = -x;
    }
    std::size_t a = 0;
    for (std::size_t i = 0; i < mi + me; ++i) {
      if (a < art_rows.size() && art_rows[a] == i) {
        rows_[i][art0_ + a] = F(1);
        basis_[i] = art0_ + a;
        ++a;
      } else {
        basis_[i] = slack0_ + i;
      }
    }

    if (!art_rows.empty()) {
      std::vector<F> cost(ncols_, F(0));
      for (std::size_t j = art0_; j < ncols_; ++j) cost[j] = F(-1);
      optimize(cost, ncols_);
      if (sign(objective_value(cost)) < 0) return {LpStatus::Infeasible, {}, std::nullopt};
      drive_out_artificials();
    }
    // artificial columns never re-enter
    const std::size_t usable = art0_;

    LpResult<F> res;
    if (!lp_.maximize) {
      res.status = LpStatus::Feasible;
      res.point = extract();
      return res;
    }
    std::vector<F> cost(ncols_, F(0));
    for (std::size_t j = 0; j < n; ++j) {
      cost[j] = (*lp_.maximize)[j];
      cost[n + j] = -(*lp_.maximize)[j];
    }
    bool bounded = optimize(cost, usable);
    res.point = extract();
    if (!bounded) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    res.status = LpStatus::Feasible;
    F v(0);
    for (std::size_t j = 0; j < n; ++j) v += (*lp_.maximize)[j] * res.point[j];
    res.value = v;
    return res;
  }

private:
  void check_row(const LinearRow<F> &row) const {
    if (row.normal.size() != lp_.num_vars)
      throw Error(ErrorKind::DimensionMismatch, "LP row has wrong number of coefficients");
  }

  F objective_value(const std::vector<F> &cost) const {
    F v(0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!is_zero(cost[basis_[i]])) v += cost[basis_[i]] * rows_[i][ncols_];
    return v;
  }

  void pivot(std::size_t r, std::size_t c) {
    auto &pr = rows_[r];
    F inv = F(1) / pr[c];
    for (auto &x : pr)
      if (!is_zero(x)) x = x * inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || is_zero(rows_[i][c])) continue;
      F f = rows_[i][c];
      auto &ri = rows_[i];
      for (std::size_t j = 0; j <= ncols_; ++j)
        if (!is_zero(pr[j])) ri[j] = ri[j] - f * pr[j];
    }
    basis_[r] = c;
  }

  // Maximize cost over columns [0, usable). Returns false when unbounded.
  bool optimize(const std::vector<F> &cost, std::size_t usable) {
    std::vector<char> in_basis(ncols_, 0);
    for (;;) {
      std::fill(in_basis.begin(), in_basis.end(), 0);
      for (auto b : basis_) in_basis[b] = 1;
      // Bland: lowest-index column with positive reduced cost enters
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < usable && enter == ncols_; ++j) {
        if (in_basis[j]) continue;
        F red = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (!is_zero(rows_[i][j]) && !is_zero(cost[basis_[i]]))
            red -= cost[basis_[i]] * rows_[i][j];
        if (sign(red) > 0) enter = j;
      }
      if (enter == ncols_) return true;
      std::size_t leave = rows_.size();
      F best(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sign(rows_[i][enter]) <= 0) continue;
        F ratio = rows_[i][ncols_] / rows_[i][enter];
        if (leave == rows_.size()) {
          leave = i;
          best = ratio;
          continue;
        }
        int c = sign(ratio - best);
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < art0_) {
        ++i;
        continue;
      }
      std::size_t c = 0;
      while (c < art0_ && is_zero(rows_[i][c])) ++c;
      if (c < art0_) {
        pivot(i, c);
        ++i;
      } else {
        // redundant equality
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<F> extract() const {
    const std::size_t n = lp_.num_vars;
    std::vector<F> x(n, F(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t b = basis_[i];
      if (b < n) x[b] += rows_[i][ncols_];
      else if (b < 2 * n) x[b - n] -= rows_[i][ncols_];
    }
    return x;
  }

  const LinearProgram<F> &lp_;
  std::size_t slack0_ = 0, art0_ = 0, ncols_ = 0;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> basis_;
};

} // namespace detail

// Exact LP over an ordered field. With no constraints and no objective the
// origin is returned as the feasible witness.
template <class F> LpResult<F> lp_solve(const LinearProgram<F> &lp) {
  return detail::Simplex<F>(lp).run();
}

extern template class detail::Simplex<Scalar>;
extern template class detail::Simplex<EpsScalar>;

} // namespace troplift
