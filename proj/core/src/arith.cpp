#include "enriques/arith.hpp"

#include <limits>
#include <sstream>

#include "enriques/errors.hpp"

namespace enriques {

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw InternalError("non-integral entry " + to_string(x));
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    const Integer d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  return out;
}

IntVector primitive_part(const IntVector& v) {
  const Integer g = content(v);
  if (g <= 1) return v;
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer " + to_string(n) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(n);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  const Integer d = boost::multiprecision::denominator(q);
  if (d == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + d.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

IntVector scale(const Integer& k, const IntVector& v) {
  IntVector out(v);
  for (auto& x : out) x *= k;
  return out;
}

}  // namespace enriques
