#pragma once

#include <memory>
#include <string>
#include <vector>

#include "enriques/arith.hpp"
#include "enriques/matrix.hpp"

namespace enriques {

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Symmetric integral bilinear form given by its Gram matrix in a fixed basis.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  // Throws StructuralError for non-square or non-symmetric input, or when the
  // label count does not match. Empty labels are replaced by e1, e2, ...
  explicit IntegralLattice(IntMatrix gram, std::vector<std::string> labels = {});

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dimension() const { return gram_.rows(); }
  std::size_t rank() const;
  bool is_even() const;

  Integer pairing(const IntVector& u, const IntVector& v) const;
  Rational pairing(const RatVector& u, const RatVector& v) const;
  // Pairings of v with each basis vector.
  IntVector pairings_with_basis(const IntVector& v) const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

// A class in the lattice, coordinates in the lattice basis.
struct LatticeVector {
  IntVector coords;
  std::shared_ptr<const IntegralLattice> lattice;

  LatticeVector(IntVector c, std::shared_ptr<const IntegralLattice> l);
  Integer pairing(const LatticeVector& other) const;
  Integer square() const { return pairing(*this); }
};

Integer determinant_exact(const IntegralLattice& lattice);
Signature signature(const IntegralLattice& lattice);

// Throws DomainError for the zero vector.
bool is_primitive(const LatticeVector& v);
bool is_primitive(const IntVector& coords);

// sqrt(|det(sub)| / |full_det|); InconsistencyError when this is not an integer.
Integer sublattice_index(const IntegralLattice& sub, const Integer& full_det);

// An overlattice described inside the rational span of `sublattice`.
struct OverlatticeEmbedding {
  IntegralLattice sublattice;
  Integer index = 1;
  // Coordinates in the sublattice basis; every denominator divides `index`.
  std::vector<RatVector> glue_generators;
  // Columns: a basis of the overlattice in sublattice coordinates.
  RatMatrix basis;
  RatMatrix inverse_basis;
  IntegralLattice overlattice;

  bool contains(const RatVector& sub_coords) const;
  // Sublattice coordinates to overlattice coordinates (rational in general).
  RatVector to_overlattice(const RatVector& sub_coords) const;
  IntVector to_overlattice(const IntVector& sub_coords) const;
};

// The overlattice generated by `sub` and the given rational vectors. Throws
// DomainError when the result is not integral.
OverlatticeEmbedding extend_lattice(const IntegralLattice& sub, const std::vector<RatVector>& glue);

// The discriminant group A = sub^* / sub of a nondegenerate lattice, each
// element represented by its coordinates reduced into [0,1).
struct DiscriminantGroup {
  std::vector<Integer> invariants;   // elementary divisors > 1
  std::vector<RatVector> generators; // one per invariant, order = invariant
  std::vector<RatVector> elements;   // all elements, sorted
};
DiscriminantGroup discriminant_group(const IntegralLattice& sub);

// Every even unimodular overlattice of an even nondegenerate lattice, one per
// isotropic subgroup of order sqrt(|det|). Sorted by glue.
std::vector<OverlatticeEmbedding> unimodular_overlattices(const IntegralLattice& sub);

// The unique even unimodular overlattice. NoOverlatticeError when none
// exists; AmbiguityError (listing the glue of every candidate) when several do.
OverlatticeEmbedding unimodular_overlattice(const IntegralLattice& sub);

// The lattice generated by `lattice` and v/2. DomainError when v/2 does not
// pair integrally with the lattice and itself.
OverlatticeEmbedding adjoin_half_class(const IntegralLattice& lattice, const IntVector& v);

std::string describe_glue(const std::vector<RatVector>& glue);

}  // namespace enriques
