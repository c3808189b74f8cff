#pragma once

#include "troplift/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace troplift {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  // Matrix whose columns are the given integral vectors (all of length n).
  static IntMatrix from_columns(std::size_t n, const std::vector<Vec> &cols);
  static IntMatrix from_rows(std::size_t n, const std::vector<Vec> &rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  std::vector<Vec> column_vectors() const;
  std::vector<Vec> row_vectors() const;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

// Invariant factors d_1 | d_2 | ... of m, nonnegative, padded with zeros to
// min(rows, cols).
std::vector<Integer> snf(const IntMatrix &m);

// Row Hermite normal form of the row lattice of m, with zero rows dropped:
// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix row_hnf(const IntMatrix &m);

// Basis (as columns) of the integer kernel {x in Z^cols : m x = 0}, returned
// in row-HNF order of its transpose so the result is canonical.
IntMatrix integer_kernel(const IntMatrix &m);

// Canonical basis (rows, row HNF) of the saturated lattice span(vs) ∩ Z^n.
std::vector<Vec> saturated_basis(std::size_t n, const std::vector<Vec> &vs);

// Canonical basis (rows) of span(vs)^⊥ ∩ Z^n. These rows are the coordinate
// functionals of the quotient lattice Z^n / (span(vs) ∩ Z^n).
std::vector<Vec> orthogonal_lattice_basis(std::size_t n, const std::vector<Vec> &vs);

// Index of the lattice generated by all columns of a and b inside Z^n;
// nullopt stands for an infinite index (joint rank below n).
std::optional<Integer> lattice_index(const IntMatrix &gens_a, const IntMatrix &gens_b,
                                     std::size_t ambient_rank);

} // namespace troplift
