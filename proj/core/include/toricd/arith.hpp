#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace toricd {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
RatVector make_rat_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);
bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);
// Requires is_integral(v).
IntVector to_integer(const RatVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational frac_of(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);
Integer abs_of(const Integer& a);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& a);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const IntVector& b);
RatVector sub(const RatVector& a, const IntVector& b);
RatVector scale(const Rational& c, const RatVector& a);

Integer gcd_of(const IntVector& v);
Integer l1_norm(const IntVector& v);
Rational l1_norm(const RatVector& v);

// Smallest positive multiple that is an integer vector with coprime entries.
IntVector primitive_integer(const RatVector& v);
IntVector primitive_integer(const IntVector& v);

// "p/q" in lowest terms, sign on the numerator, integers without "/1".
std::string format_rational(const Rational& q);
// "0" for the zero vector, "(a,b,...)" otherwise.
std::string format_point(const RatVector& v);
std::string format_point(const IntVector& v);
std::string format_tuple(const IntVector& v);

// Accepts "7", "-3/4", "+2". Throws ToricError(InvalidInput).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// (L1 norm, lexicographic) order on integer and rational vectors.
bool norm_lex_less(const IntVector& a, const IntVector& b);
bool norm_lex_less(const RatVector& a, const RatVector& b);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};
struct RatVectorHash {
  std::size_t operator()(const RatVector& v) const noexcept;
};

}  // namespace toricd
