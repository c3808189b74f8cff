#include "troplift/lattice.hpp"

#include "troplift/errors.hpp"

#include <algorithm>
#include <utility>

namespace troplift {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch, "IntMatrix entry count does not match shape");
}

namespace {

Integer as_integer(const Scalar &x) {
  if (x.get_den() != 1) throw Error(ErrorKind::DimensionMismatch, "non-integral lattice vector");
  return x.get_num();
}

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_i -= q * row_k
void row_axpy(IntMatrix &m, std::size_t i, std::size_t k, const Integer &q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(k, j) != 0) m(i, j) -= q * m(k, j);
}

void col_axpy(IntMatrix &m, std::size_t j, std::size_t k, const Integer &q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, k) != 0) m(i, j) -= q * m(i, k);
}

Integer tdiv(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

IntMatrix IntMatrix::from_columns(std::size_t n, const std::vector<Vec> &cols) {
  IntMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = as_integer(cols[j][i]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t n, const std::vector<Vec> &rows) {
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = as_integer(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec IntMatrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = Scalar((*this)(i, j));
  return v;
}

Vec IntMatrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = Scalar((*this)(i, j));
  return v;
}

std::vector<Vec> IntMatrix::column_vectors() const {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

std::vector<Vec> IntMatrix::row_vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Integer> snf(const IntMatrix &input) {
  IntMatrix a = input;
  const std::size_t r = a.rows(), c = a.cols(), k = std::min(r, c);
  std::vector<Integer> d;
  for (std::size_t t = 0; t < k; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    auto bring_min_to_pivot = [&]() {
      bool found = false;
      std::size_t bi = t, bj = t;
      Integer best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (!found || abs(a(i, j)) < best)) {
            found = true;
            best = abs(a(i, j));
            bi = i;
            bj = j;
          }
      if (found) {
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
      }
      return found;
    };
    if (!bring_min_to_pivot()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        row_axpy(a, i, t, tdiv(a(i, t), a(t, t)));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        col_axpy(a, j, t, tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // a smaller remainder now sits in row/column t; pivot on it
        bring_min_to_pivot();
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t jj = 0; jj < c; ++jj) a(t, jj) += a(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
    d.push_back(abs(a(t, t)));
  }
  while (d.size() < k) d.emplace_back(0);
  return d;
}

IntMatrix row_hnf(const IntMatrix &input) {
  IntMatrix a = input;
  const std::size_t r = a.rows(), c = a.cols();
  std::size_t p = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t j = 0; j < c && p < r; ++j) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (a(i, j) != 0 && (best == r || abs(a(i, j)) < abs(a(best, j)))) best = i;
      if (best == r) break;
      swap_rows(a, p, best);
      bool clean = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (a(i, j) == 0) continue;
        row_axpy(a, i, p, tdiv(a(i, j), a(p, j)));
        if (a(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (p < r && a(p, j) != 0) {
      if (a(p, j) < 0)
        for (std::size_t jj = 0; jj < c; ++jj) a(p, jj) = -a(p, jj);
      for (std::size_t i = 0; i < p; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(p, j).get_mpz_t());
        if (q != 0) row_axpy(a, i, p, q);
      }
      pivot_cols.push_back(j);
      ++p;
    }
  }
  IntMatrix h(p, c);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < c; ++j) h(i, j) = a(i, j);
  return h;
}

IntMatrix integer_kernel(const IntMatrix &m) {
  const std::size_t r = m.rows(), n = m.cols();
  // [m; I] under column operations; columns whose top part vanishes span the kernel
  IntMatrix b(r + n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = m(i, j);
  for (std::size_t j = 0; j < n; ++j) b(r + j, j) = 1;
  std::size_t p = 0;
  for (std::size_t i = 0; i < r && p < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = p; j < n; ++j)
        if (b(i, j) != 0 && (best == n || abs(b(i, j)) < abs(b(i, best)))) best = j;
      if (best == n) break;
      swap_cols(b, p, best);
      bool clean = true;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (b(i, j) == 0) continue;
        col_axpy(b, j, p, tdiv(b(i, j), b(i, p)));
        if (b(i, j) != 0) clean = false;
      }
      if (clean) {
        ++p;
        break;
      }
    }
  }
  IntMatrix kt(n - p, n);
  for (std::size_t j = p; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) kt(j - p, i) = b(r + i, j);
  return row_hnf(kt).transposed();
}

std::vector<Vec> orthogonal_lattice_basis(std::size_t n, const std::vector<Vec> &vs) {
  std::vector<Vec> rows;
  for (const auto &v : vs) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
    if (!is_zero(v)) rows.push_back(primitive(v));
  }
  return integer_kernel(IntMatrix::from_rows(n, rows)).column_vectors();
}

std::vector<Vec> saturated_basis(std::size_t n, const std::vector<Vec> &vs) {
  std::vector<Vec> perp = orthogonal_lattice_basis(n, vs);
  return integer_kernel(IntMatrix::from_rows(n, perp)).column_vectors();
}

std::optional<Integer> lattice_index(const IntMatrix &gens_a, const IntMatrix &gens_b,
                                     std::size_t ambient_rank) {
  auto check = [&](const IntMatrix &g) {
    if (g.cols() > 0 && g.rows() != ambient_rank)
      throw Error(ErrorKind::DimensionMismatch, "generators do not live in Z^" +
                                                    std::to_string(ambient_rank));
  };
  check(gens_a);
  check(gens_b);
  IntMatrix joint(ambient_rank, gens_a.cols() + gens_b.cols());
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    for (std::size_t j = 0; j < gens_a.cols(); ++j) joint(i, j) = gens_a(i, j);
    for (std::size_t j = 0; j < gens_b.cols(); ++j) joint(i, gens_a.cols() + j) = gens_b(i, j);
  }
  if (ambient_rank == 0) return Integer(1);
  if (joint.cols() < ambient_rank) return std::nullopt;
  std::vector<Integer> d = snf(joint);
  Integer index = 1;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (d[i] == 0) return std::nullopt;
    index *= d[i];
  }
  return index;
}

} // namespace troplift
