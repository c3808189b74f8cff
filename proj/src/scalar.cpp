#include "troplift/scalar.hpp"

#include "troplift/errors.hpp"

#include <cctype>

namespace troplift {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::EmptyInput: return "EmptyInput";
  case ErrorKind::NotPointed: return "NotPointed";
  case ErrorKind::NotCompactifying: return "NotCompactifying";
  case ErrorKind::NonPositiveEps: return "NonPositiveEps";
  case ErrorKind::DegenerateInput: return "DegenerateInput";
  case ErrorKind::NotTransverse: return "NotTransverse";
  case ErrorKind::NotAdmissible: return "NotAdmissible";
  case ErrorKind::FanMismatch: return "FanMismatch";
  case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
  case ErrorKind::InternalCheck: return "InternalCheck";
  }
  return "Unknown";
}

std::string to_string(const Integer &x) { return x.get_str(); }

std::string to_string(const Scalar &x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Vec &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(s.substr(0, slash), text);
    std::string_view qs = s.substr(slash + 1);
    if (!all_digits(qs))
      throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");
    Integer q(std::string(qs), 10);
    if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Scalar r(p, q);
    r.canonicalize();
    return r;
  }
  if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot_pos);
    std::string_view fp = s.substr(dot_pos + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");
    Integer whole = ip.empty() ? Integer(0) : Integer(std::string(ip), 10);
    Integer frac = fp.empty() ? Integer(0) : Integer(std::string(fp), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Scalar r(whole * den + frac, den);
    r.canonicalize();
    return neg ? Scalar(-r) : r;
  }
  return Scalar(parse_integer(s, text));
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

Scalar dot(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "dot of vectors of different length");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vec add(const Vec &a, const Vec &b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec &a, const Vec &b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec &a, const Scalar &s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec negated(const Vec &a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const Vec &v) {
  for (const auto &x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_integral(const Vec &v) {
  for (const auto &x : v)
    if (x.get_den() != 1) return false;
  return true;
}

Scalar primitive_factor(const Vec &v) {
  Integer l = 1;
  for (const auto &x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto &x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return Scalar(1);
  Scalar f(l, g);
  f.canonicalize();
  return f;
}

Vec primitive(const Vec &v) { return scaled(v, primitive_factor(v)); }

Scalar squared_norm(const Vec &v) { return dot(v, v); }

bool VecLess::operator()(const Vec &a, const Vec &b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

} // namespace troplift
