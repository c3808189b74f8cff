#include "troplift/linalg.hpp"

#include "troplift/lp.hpp"

namespace troplift {

template class detail::Simplex<Scalar>;
template class detail::Simplex<EpsScalar>;

std::vector<Vec> span_basis(std::size_t n, const std::vector<Vec> &vs) {
  Matrix<Scalar> m(vs.begin(), vs.end());
  rref(m, n);
  return m;
}

std::vector<Vec> orthogonal_complement(std::size_t n, const std::vector<Vec> &vs) {
  return nullspace<Scalar>(Matrix<Scalar>(vs.begin(), vs.end()), n);
}

bool in_span(const std::vector<Vec> &basis, const Vec &v) {
  if (basis.empty()) return is_zero(v);
  std::size_t r = rank_of(basis);
  std::vector<Vec> ext = basis;
  ext.push_back(v);
  return rank_of(ext) == r;
}

} // namespace troplift
