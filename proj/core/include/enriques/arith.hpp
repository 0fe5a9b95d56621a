#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace enriques {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// gcd of the absolute values; 0 for the zero vector.
Integer content(const IntVector& v);

bool is_zero(const IntVector& v);

// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

Integer floor_div(const Integer& a, const Integer& b);

// Fractional part in [0, 1).
Rational frac(const Rational& q);
Integer floor(const Rational& q);
bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);

RatVector to_rational(const IntVector& v);
// Requires every entry to be integral.
IntVector to_integer(const RatVector& v);
// Smallest positive integer multiple of `v` with integral entries.
IntVector clear_denominators(const RatVector& v);

// Divides by the content; the zero vector is returned unchanged.
IntVector primitive_part(const IntVector& v);

std::int64_t to_int64(const Integer& n);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& k, const IntVector& v);

}  // namespace enriques
