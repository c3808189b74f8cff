#include "troplift/eps_scalar.hpp"

#include "troplift/errors.hpp"

#include <utility>

namespace troplift {

EpsPoly::EpsPoly(Scalar c) {
  if (sgn(c) != 0) c_.push_back(std::move(c));
}

EpsPoly::EpsPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void EpsPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int EpsPoly::germ_sign() const {
  for (const auto &x : c_)
    if (sgn(x) != 0) return sgn(x);
  return 0;
}

Scalar EpsPoly::eval(const Scalar &x) const {
  Scalar r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

EpsPoly operator+(const EpsPoly &a, const EpsPoly &b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return EpsPoly(std::move(c));
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly r = *this;
  for (auto &x : r.c_) x = -x;
  return r;
}

EpsPoly operator-(const EpsPoly &a, const EpsPoly &b) { return a + (-b); }

EpsPoly operator*(const EpsPoly &a, const EpsPoly &b) {
  if (a.is_zero() || b.is_zero()) return EpsPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return EpsPoly(std::move(c));
}

EpsPoly EpsPoly::scaled(const Scalar &s) const {
  std::vector<Scalar> c = c_;
  for (auto &x : c) x *= s;
  return EpsPoly(std::move(c));
}

void EpsPoly::divmod(const EpsPoly &a, const EpsPoly &b, EpsPoly &q, EpsPoly &r) {
  if (b.is_zero()) throw Error(ErrorKind::InternalCheck, "polynomial division by zero");
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Scalar(0));
  Scalar lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Scalar f = rem[k] / lead;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  q = EpsPoly(std::move(quo));
  r = EpsPoly(std::move(rem));
}

EpsPoly EpsPoly::gcd(EpsPoly a, EpsPoly b) {
  while (!b.is_zero()) {
    EpsPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Scalar(1) / a.leading());
}

EpsScalar::EpsScalar(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InternalCheck, "EpsScalar with zero denominator");
  normalize();
}

void EpsScalar::normalize() {
  if (num_.is_zero()) {
    den_ = EpsPoly(Scalar(1));
    return;
  }
  if (den_.degree() > 0) {
    EpsPoly g = EpsPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      EpsPoly q, r;
      EpsPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      EpsPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  Scalar lead = den_.leading();
  if (lead != 1) {
    Scalar inv = Scalar(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

EpsScalar EpsScalar::epsilon() {
  return EpsScalar(EpsPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}), EpsPoly(Scalar(1)));
}

EpsScalar EpsScalar::affine(const Scalar &a, const Scalar &b) {
  return EpsScalar(EpsPoly(std::vector<Scalar>{a, b}), EpsPoly(Scalar(1)));
}

Scalar EpsScalar::limit() const {
  Scalar d = den_.coeff(0);
  if (sgn(d) == 0) throw Error(ErrorKind::InternalCheck, "EpsScalar has a pole at eps = 0");
  return num_.coeff(0) / d;
}

Scalar EpsScalar::eval(const Scalar &e) const {
  Scalar d = den_.eval(e);
  if (sgn(d) == 0) throw Error(ErrorKind::InternalCheck, "EpsScalar denominator vanishes");
  return num_.eval(e) / d;
}

std::string EpsScalar::str() const {
  auto poly_str = [](const EpsPoly &p) {
    if (p.is_zero()) return std::string("0");
    std::string s;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (sgn(p.coeffs()[k]) == 0) continue;
      if (!s.empty()) s += " + ";
      s += to_string(p.coeffs()[k]);
      if (k == 1) s += "*e";
      if (k > 1) s += "*e^" + std::to_string(k);
    }
    return s;
  };
  if (is_polynomial()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

EpsScalar operator+(const EpsScalar &a, const EpsScalar &b) {
  if (a.is_polynomial() && b.is_polynomial()) return EpsScalar(a.num_ + b.num_, EpsPoly(Scalar(1)));
  return EpsScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsScalar EpsScalar::operator-() const {
  EpsScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

EpsScalar operator-(const EpsScalar &a, const EpsScalar &b) { return a + (-b); }

EpsScalar operator*(const EpsScalar &a, const EpsScalar &b) {
  if (a.is_polynomial() && b.is_polynomial()) return EpsScalar(a.num_ * b.num_, EpsPoly(Scalar(1)));
  return EpsScalar(a.num_ * b.num_, a.den_ * b.den_);
}

EpsScalar operator/(const EpsScalar &a, const EpsScalar &b) {
  if (b.is_zero()) throw Error(ErrorKind::InternalCheck, "EpsScalar division by zero");
  if (b.is_constant()) return EpsScalar(a.num_.scaled(Scalar(1) / b.num_.coeff(0)), a.den_);
  return EpsScalar(a.num_ * b.den_, a.den_ * b.num_);
}

} // namespace troplift
