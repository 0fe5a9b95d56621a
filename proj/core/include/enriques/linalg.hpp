#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "enriques/matrix.hpp"

namespace enriques {

// Fraction-free (Bareiss) elimination with row pivoting.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix a, std::vector<std::size_t>* pivots = nullptr);

// Basis of the right kernel over Q.
std::vector<RatVector> kernel(const RatMatrix& a);

// Some solution of a x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

RatMatrix inverse(const RatMatrix& a);

// a * u = h with u unimodular, h in column echelon form: the first `rank`
// columns are nonzero with strictly increasing pivot rows, the rest vanish.
struct ColumnHermite {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
ColumnHermite column_hermite(const IntMatrix& a);

// u * a * v = d, d diagonal with d(i,i) | d(i+1,i+1), entries nonnegative.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};
SmithForm smith_form(const IntMatrix& a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia of a symmetric matrix by rational congruence reduction.
Inertia inertia(const IntMatrix& symmetric);

// Basis of Z^n ∩ ker(a), as the columns of the returned matrix.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace enriques
