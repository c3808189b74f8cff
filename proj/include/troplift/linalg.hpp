#pragma once

#include "troplift/eps_scalar.hpp"
#include "troplift/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace troplift {

template <class F> using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form in place; returns the pivot columns.
template <class F> std::vector<std::size_t> rref(Matrix<F> &m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j)
        if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class F> std::size_t rank_of(Matrix<F> m, std::size_t ncols) { return rref(m, ncols).size(); }

inline std::size_t rank_of(const std::vector<Vec> &rows) {
  if (rows.empty()) return 0;
  return rank_of<Scalar>(rows, rows.front().size());
}

// Basis of {x : m x = 0} over the field.
template <class F> std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t ncols) {
  std::vector<std::size_t> piv = rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_piv[free]) continue;
    std::vector<F> v(ncols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m x = rhs, or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F> &m, const std::vector<F> &rhs,
                                           std::size_t ncols) {
  Matrix<F> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  std::vector<std::size_t> piv = rref(aug, ncols + 1);
  std::vector<F> x(ncols, F(0));
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == ncols) return std::nullopt;
    x[piv[i]] = aug[i][ncols];
  }
  return x;
}

// Row basis of the rational span of the given vectors (rref rows).
std::vector<Vec> span_basis(std::size_t n, const std::vector<Vec> &vs);
// Basis of the orthogonal complement of span(vs) in Q^n.
std::vector<Vec> orthogonal_complement(std::size_t n, const std::vector<Vec> &vs);
bool in_span(const std::vector<Vec> &basis, const Vec &v);

} // namespace troplift
