#pragma once

#include "troplift/scalar.hpp"

#include <string>
#include <vector>

namespace troplift {

// Univariate polynomial in the infinitesimal, coefficients low degree first,
// with no trailing zero coefficients.
class EpsPoly {
public:
  EpsPoly() = default;
  explicit EpsPoly(Scalar c);
  explicit EpsPoly(std::vector<Scalar> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar> &coeffs() const { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  // Sign as eps -> 0+, i.e. sign of the lowest nonzero coefficient.
  int germ_sign() const;
  Scalar eval(const Scalar &x) const;

  friend EpsPoly operator+(const EpsPoly &a, const EpsPoly &b);
  friend EpsPoly operator-(const EpsPoly &a, const EpsPoly &b);
  friend EpsPoly operator*(const EpsPoly &a, const EpsPoly &b);
  EpsPoly operator-() const;
  EpsPoly scaled(const Scalar &s) const;
  friend bool operator==(const EpsPoly &a, const EpsPoly &b) { return a.c_ == b.c_; }

  // Euclidean division over Q; b must be nonzero.
  static void divmod(const EpsPoly &a, const EpsPoly &b, EpsPoly &q, EpsPoly &r);
  // Monic gcd (zero when both are zero).
  static EpsPoly gcd(EpsPoly a, EpsPoly b);

private:
  void trim();
  std::vector<Scalar> c_;
};

// Element of Q(eps), eps a positive infinitesimal. Stored as num/den in
// lowest terms with den monic, so equality is structural and the sign is read
// off the lowest-order coefficients.
class EpsScalar {
public:
  EpsScalar() : num_(), den_(Scalar(1)) {}
  EpsScalar(const Scalar &c) : num_(c), den_(Scalar(1)) {} // NOLINT: embedding
  EpsScalar(int c) : EpsScalar(Scalar(c)) {}                // NOLINT
  EpsScalar(EpsPoly num, EpsPoly den);

  static EpsScalar epsilon();
  // a + b*eps
  static EpsScalar affine(const Scalar &a, const Scalar &b);

  const EpsPoly &num() const { return num_; }
  const EpsPoly &den() const { return den_; }

  int sign() const { return num_.germ_sign() * den_.germ_sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  // Value of the germ at eps = 0; requires den(0) != 0.
  Scalar limit() const;
  // Substitute a concrete positive rational for eps; den must not vanish.
  Scalar eval(const Scalar &e) const;
  std::string str() const;

  friend EpsScalar operator+(const EpsScalar &a, const EpsScalar &b);
  friend EpsScalar operator-(const EpsScalar &a, const EpsScalar &b);
  friend EpsScalar operator*(const EpsScalar &a, const EpsScalar &b);
  friend EpsScalar operator/(const EpsScalar &a, const EpsScalar &b);
  EpsScalar operator-() const;
  EpsScalar &operator+=(const EpsScalar &o) { return *this = *this + o; }
  EpsScalar &operator-=(const EpsScalar &o) { return *this = *this - o; }
  EpsScalar &operator*=(const EpsScalar &o) { return *this = *this * o; }
  EpsScalar &operator/=(const EpsScalar &o) { return *this = *this / o; }

  friend bool operator==(const EpsScalar &a, const EpsScalar &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const EpsScalar &a, const EpsScalar &b) { return (a - b).sign() < 0; }
  friend bool operator>(const EpsScalar &a, const EpsScalar &b) { return b < a; }
  friend bool operator<=(const EpsScalar &a, const EpsScalar &b) { return !(b < a); }
  friend bool operator>=(const EpsScalar &a, const EpsScalar &b) { return !(a < b); }

private:
  void normalize();
  EpsPoly num_;
  EpsPoly den_;
};

inline int sign(const EpsScalar &x) { return x.sign(); }
inline bool is_zero(const EpsScalar &x) { return x.is_zero(); }

using EpsVec = std::vector<EpsScalar>;

} // namespace troplift
