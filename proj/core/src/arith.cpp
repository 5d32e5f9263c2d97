#include "toricd/arith.hpp"

#include <algorithm>

#include "toricd/errors.hpp"

namespace toricd {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotSublattice: return "NotSublattice";
    case ErrorKind::InfiniteIndex: return "InfiniteIndex";
    case ErrorKind::NotFullLattice: return "NotFullLattice";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector make_rat_vector(std::initializer_list<long> values) {
  RatVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

IntVector to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw ToricError(ErrorKind::PreconditionViolated, "vector is not integral");
    r[i] = v[i].get_num();
  }
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(const Integer& c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector add(const RatVector& a, const IntVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + Rational(b[i]);
  return r;
}

RatVector sub(const RatVector& a, const IntVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - Rational(b[i]);
  return r;
}

RatVector scale(const Rational& c, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer l1_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs_of(x);
  return s;
}

Rational l1_norm(const RatVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

IntVector primitive_integer(const IntVector& v) {
  Integer g = gcd_of(v);
  if (g == 0) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * Rational(l);
    r[i] = s.get_num();
  }
  return primitive_integer(r);
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_point(const RatVector& v) {
  if (is_zero(v)) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

std::string format_point(const IntVector& v) { return format_point(to_rational(v)); }

std::string format_tuple(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw ToricError(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  Integer r(std::string(s), 10);
  return neg ? Integer(-r) : r;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!is_digits(den_text)) throw ToricError(ErrorKind::InvalidInput, "bad denominator in '" + std::string(text) + "'");
  Integer den(std::string(den_text), 10);
  if (den == 0) throw ToricError(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool norm_lex_less(const IntVector& a, const IntVector& b) {
  Integer na = l1_norm(a), nb = l1_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

bool norm_lex_less(const RatVector& a, const RatVector& b) {
  Rational na = l1_norm(a), nb = l1_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

namespace {

std::size_t mix(std::size_t h, std::size_t x) {
  return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_mpz(const Integer& x) {
  return static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())) ^ (static_cast<std::size_t>(mpz_sizeinbase(x.get_mpz_t(), 2)) << 48);
}

}  // namespace

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) h = mix(h, hash_mpz(x));
  return h;
}

std::size_t RatVectorHash::operator()(const RatVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) {
    h = mix(h, hash_mpz(x.get_num()));
    h = mix(h, hash_mpz(x.get_den()));
  }
  return h;
}

}  // namespace toricd
