#include "enriques/linalg.hpp"

#include <utility>

#include "enriques/errors.hpp"

namespace enriques {
namespace {

struct ExtendedGcd {
  Integer g, s, t;  // g = s*x + t*y, g >= 0
};

ExtendedGcd extended_gcd(const Integer& x, const Integer& y) {
  Integer old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

template <typename T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <typename T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += k * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& input) {
  if (!input.is_square()) throw StructuralError("determinant of a non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(a, k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix rref(RatMatrix a, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

std::size_t rank(const RatMatrix& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

std::vector<RatVector> kernel(const RatMatrix& a) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw StructuralError("solve: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw StructuralError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

ColumnHermite column_hermite(const IntMatrix& a) {
  ColumnHermite out{a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t n = a.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      const Integer x = h(i, c), y = h(i, j);
      const auto [g, s, t] = extended_gcd(x, y);
      const Integer p = -y / g, q = x / g;
      for (IntMatrix* m : {&h, &u}) {
        for (std::size_t r = 0; r < m->rows(); ++r) {
          const Integer vc = (*m)(r, c), vj = (*m)(r, j);
          (*m)(r, c) = s * vc + t * vj;
          (*m)(r, j) = p * vc + q * vj;
        }
      }
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, c) = -h(r, c);
      for (std::size_t r = 0; r < u.rows(); ++r) u(r, c) = -u(r, c);
    }
    // Keep earlier pivot columns small.
    for (std::size_t k = 0; k < c; ++k) {
      const Integer f = floor_div(h(i, k), h(i, c));
      if (f != 0) {
        add_col(h, k, c, -f);
        add_col(u, k, c, -f);
      }
    }
    ++c;
  }
  out.rank = c;
  return out;
}

SmithForm smith_form(const IntMatrix& a) {
  SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = out.d;
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t bp = m, bq = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (bp == m || abs(d(i, j)) < abs(d(bp, bq)))) {
            bp = i;
            bq = j;
          }
      if (bp == m) return out;
      swap_rows(d, t, bp);
      swap_rows(out.u, t, bp);
      swap_cols(d, t, bq);
      swap_cols(out.v, t, bq);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const Integer q = floor_div(d(i, t), d(t, t));
        if (q != 0) {
          add_row(d, i, t, -q);
          add_row(out.u, i, t, -q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const Integer q = floor_div(d(t, j), d(t, t));
        if (q != 0) {
          add_col(d, j, t, -q);
          add_col(out.v, j, t, -q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(out.u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) out.u(t, j) = -out.u(t, j);
    }
  }
  return out;
}

Inertia inertia(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw StructuralError("inertia of a non-symmetric matrix");
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Inertia out;
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (active[i] && a(i, i) != 0) piv = i;
    if (piv == n) {
      // Zero diagonal: replace e_i by e_i + e_j for some a(i,j) != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (active[i] && active[j] && a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      piv = pi;
    }
    const Rational p = a(piv, piv);
    (p > 0 ? out.positive : out.negative) += 1;
    active[piv] = false;
    --remaining;
    for (std::size_t j = 0; j < n; ++j) {
      if (!active[j] || a(j, piv) == 0) continue;
      const Rational f = a(j, piv) / p;
      for (std::size_t k = 0; k < n; ++k)
        if (active[k]) a(j, k) -= f * a(piv, k);
    }
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const ColumnHermite ch = column_hermite(a);
  IntMatrix k(a.cols(), a.cols() - ch.rank);
  for (std::size_t j = ch.rank; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - ch.rank) = ch.u(i, j);
  return k;
}

}  // namespace enriques
