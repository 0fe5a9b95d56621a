#pragma once

// Brute-force reference computations used to cross-check the core library.
// They work on plain int64 Gram matrices and share no code with enriques_core.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

// Laplace expansion along the first row; n <= 8.
std::int64_t cofactor_determinant(const Mat& m);

// Fraction-free elimination in 128-bit integers; entries must stay small.
std::int64_t bareiss_determinant(const Mat& m);

// Isotropic nef classes with nonnegative vertex coefficients <= bound, up to
// scaling, grouped into fibrations by pairwise pairing 0.
struct FibrationCount {
  std::size_t rays = 0;        // distinct primitive isotropic nef classes
  std::size_t fibrations = 0;  // classes of rays under pairing 0
  std::vector<Vec> ray_representatives;
};
FibrationCount count_fibrations(const Mat& vertex_gram, std::int64_t bound = 12);

// Root system of a positive definite even lattice by short-vector
// enumeration, identified component by component from (rank, #roots).
// Returns names such as "A1+E7" (sorted), or "" when the lattice is not
// positive definite.
std::string root_system_name(const Mat& positive_gram);

// Number of nonzero a in {0,1}^n with G a = 0 mod 2 and a^T G a = 0 mod 8:
// the index-2 even overlattices of the lattice with Gram G.
std::size_t count_index2_even_glue(const Mat& gram);

// Smallest nonzero |det| over all k-subsets of vertices, with the subset.
struct BasisChoice {
  std::int64_t abs_det = 0;
  std::vector<std::size_t> vertices;
};
BasisChoice smallest_basis(const Mat& vertex_gram, std::size_t k);

Mat submatrix(const Mat& m, const std::vector<std::size_t>& idx);

}  // namespace oracle
