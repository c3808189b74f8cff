#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace troplift {

using Integer = mpz_class;
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Sign of an ordered-field element. Overloaded for EpsScalar in eps_scalar.hpp
// so that generic pivoting code can be written once.
inline int sign(const Scalar &x) { return sgn(x); }
inline bool is_zero(const Scalar &x) { return sgn(x) == 0; }

// "p/q", or "p" when q == 1.
std::string to_string(const Scalar &x);
std::string to_string(const Integer &x);
std::string to_string(const Vec &v);

// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25". Throws
// troplift::Error(ErrorKind::Parse) on malformed input.
Scalar parse_scalar(std::string_view text);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Scalar dot(const Vec &a, const Vec &b);
Vec add(const Vec &a, const Vec &b);
Vec sub(const Vec &a, const Vec &b);
Vec scaled(const Vec &a, const Scalar &s);
Vec negated(const Vec &a);
bool is_zero(const Vec &v);
bool is_integral(const Vec &v);

// Positive multiple of v with coprime integer entries. Zero maps to zero.
Vec primitive(const Vec &v);
// Positive factor f such that f * v is primitive integral (1 for zero v).
Scalar primitive_factor(const Vec &v);

Scalar squared_norm(const Vec &v);

// Lexicographic order on equal-length vectors; used for deterministic maps.
struct VecLess {
  bool operator()(const Vec &a, const Vec &b) const;
};

} // namespace troplift
