#include "enriques/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "enriques/errors.hpp"
#include "enriques/linalg.hpp"

namespace enriques {
namespace {

constexpr std::size_t kMaxDiscriminantOrder = 1u << 16;

RatVector reduce_mod_one(RatVector v) {
  for (auto& x : v) x = frac(x);
  return v;
}

RatVector add_mod_one(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = frac(a[i] + b[i]);
  return out;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

using ElementSet = std::set<RatVector>;

ElementSet closure_with(const ElementSet& group, const RatVector& x) {
  ElementSet out = group;
  RatVector multiple = x;
  while (!is_zero(multiple)) {
    for (const auto& h : group) out.insert(add_mod_one(h, multiple));
    multiple = add_mod_one(multiple, x);
  }
  return out;
}

std::vector<RatVector> generating_set(const ElementSet& group, std::size_t dim) {
  std::vector<RatVector> gens;
  ElementSet span{RatVector(dim, Rational(0))};
  for (const auto& x : group) {
    if (span.count(x)) continue;
    gens.push_back(x);
    span = closure_with(span, x);
    if (span.size() == group.size()) break;
  }
  return gens;
}

}  // namespace

IntegralLattice::IntegralLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_square()) throw StructuralError("Gram matrix is not square");
  if (!gram_.is_symmetric()) throw StructuralError("Gram matrix is not symmetric");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("e" + std::to_string(i + 1));
  } else if (labels_.size() != gram_.rows()) {
    throw StructuralError("basis label count does not match the Gram matrix");
  }
}

std::size_t IntegralLattice::rank() const { return enriques::rank(gram_); }

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Integer IntegralLattice::pairing(const IntVector& u, const IntVector& v) const {
  if (u.size() != dimension() || v.size() != dimension())
    throw DomainError("vector length does not match the lattice dimension");
  return bilinear(gram_, u, v);
}

Rational IntegralLattice::pairing(const RatVector& u, const RatVector& v) const {
  if (u.size() != dimension() || v.size() != dimension())
    throw DomainError("vector length does not match the lattice dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (u[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < dimension(); ++j)
      if (v[j] != 0) row += Rational(gram_(i, j)) * v[j];
    s += u[i] * row;
  }
  return s;
}

IntVector IntegralLattice::pairings_with_basis(const IntVector& v) const {
  if (v.size() != dimension()) throw DomainError("vector length does not match the lattice dimension");
  return gram_ * v;
}

LatticeVector::LatticeVector(IntVector c, std::shared_ptr<const IntegralLattice> l)
    : coords(std::move(c)), lattice(std::move(l)) {
  if (!lattice) throw DomainError("lattice vector without a lattice");
  if (coords.size() != lattice->dimension())
    throw DomainError("coordinate count does not match the lattice dimension");
}

Integer LatticeVector::pairing(const LatticeVector& other) const {
  if (lattice != other.lattice && !(*lattice == *other.lattice))
    throw DomainError("pairing of vectors from different lattices");
  return lattice->pairing(coords, other.coords);
}

Integer determinant_exact(const IntegralLattice& lattice) { return determinant(lattice.gram()); }

Signature signature(const IntegralLattice& lattice) {
  const Inertia in = inertia(lattice.gram());
  return {in.positive, in.negative, in.zero};
}

bool is_primitive(const IntVector& coords) {
  if (is_zero(coords)) throw DomainError("primitivity of the zero vector");
  return content(coords) == 1;
}

bool is_primitive(const LatticeVector& v) { return is_primitive(v.coords); }

Integer sublattice_index(const IntegralLattice& sub, const Integer& full_det) {
  const Integer d = abs(determinant_exact(sub));
  const Integer f = abs(full_det);
  if (d == 0) throw DomainError("sublattice is degenerate");
  if (f == 0) throw DomainError("ambient determinant is zero");
  if (d % f != 0)
    throw InconsistencyError("|det(sub)| = " + to_string(d) + " is not divisible by " + to_string(f));
  const Integer q = d / f;
  if (!is_perfect_square(q))
    throw InconsistencyError("|det(sub)| / |det(full)| = " + to_string(q) + " is not a perfect square");
  return isqrt(q);
}

bool OverlatticeEmbedding::contains(const RatVector& sub_coords) const {
  return is_integral(to_overlattice(sub_coords));
}

RatVector OverlatticeEmbedding::to_overlattice(const RatVector& sub_coords) const {
  return inverse_basis * sub_coords;
}

IntVector OverlatticeEmbedding::to_overlattice(const IntVector& sub_coords) const {
  return to_integer(to_overlattice(to_rational(sub_coords)));
}

OverlatticeEmbedding extend_lattice(const IntegralLattice& sub, const std::vector<RatVector>& glue) {
  const std::size_t r = sub.dimension();
  Integer denom = 1;
  std::vector<RatVector> reduced;
  for (const auto& g : glue) {
    if (g.size() != r) throw DomainError("glue vector has the wrong length");
    RatVector red = reduce_mod_one(g);
    if (is_zero(red)) continue;
    for (const auto& x : red) {
      const Integer d = boost::multiprecision::denominator(x);
      denom = denom / boost::multiprecision::gcd(denom, d) * d;
    }
    reduced.push_back(std::move(red));
  }
  IntMatrix gens(r, r + reduced.size());
  for (std::size_t i = 0; i < r; ++i) gens(i, i) = denom;
  for (std::size_t k = 0; k < reduced.size(); ++k)
    for (std::size_t i = 0; i < r; ++i)
      gens(i, r + k) = boost::multiprecision::numerator(reduced[k][i] * Rational(denom));
  const ColumnHermite ch = column_hermite(gens);
  OverlatticeEmbedding out;
  out.sublattice = sub;
  out.glue_generators = reduced;
  out.basis = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.basis(i, j) = Rational(ch.h(i, j), denom);
  out.inverse_basis = inverse(out.basis);
  const RatMatrix g = out.basis.transposed() * to_rational(sub.gram()) * out.basis;
  IntMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_integral(g(i, j))) throw DomainError("adjoined vectors do not pair integrally");
      gram(i, j) = boost::multiprecision::numerator(g(i, j));
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("b" + std::to_string(i + 1));
  out.overlattice = IntegralLattice(std::move(gram), std::move(labels));
  const Rational det_basis = abs(determinant(out.basis));
  out.index = boost::multiprecision::denominator(det_basis);
  if (boost::multiprecision::numerator(det_basis) != 1) throw InternalError("overlattice basis index is not integral");
  return out;
}

DiscriminantGroup discriminant_group(const IntegralLattice& sub) {
  const std::size_t r = sub.dimension();
  const SmithForm sf = smith_form(sub.gram());
  DiscriminantGroup out;
  Integer order = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const Integer d = sf.d(i, i);
    if (d == 0) throw DomainError("discriminant group of a degenerate lattice");
    if (d == 1) continue;
    order *= d;
    RatVector g(r);
    for (std::size_t k = 0; k < r; ++k) g[k] = frac(Rational(sf.v(k, i), d));
    out.invariants.push_back(d);
    out.generators.push_back(std::move(g));
  }
  if (order > kMaxDiscriminantOrder) throw UnsupportedError("discriminant group of order " + to_string(order) + " is too large to enumerate");
  std::vector<RatVector> elements{RatVector(r, Rational(0))};
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    std::vector<RatVector> next;
    for (const auto& e : elements) {
      RatVector m = e;
      for (Integer a = 0; a < out.invariants[i]; ++a) {
        next.push_back(m);
        m = add_mod_one(m, out.generators[i]);
      }
    }
    elements = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  out.elements = std::move(elements);
  return out;
}

std::vector<OverlatticeEmbedding> unimodular_overlattices(const IntegralLattice& sub) {
  if (!sub.is_even()) throw DomainError("overlattice search requires an even lattice");
  const Integer det = abs(determinant_exact(sub));
  if (det == 0) throw DomainError("overlattice search requires a nondegenerate lattice");
  if (!is_perfect_square(det))
    throw NoOverlatticeError("|det| = " + to_string(det) + " is not a perfect square; no unimodular overlattice");
  const Integer index = isqrt(det);
  if (index == 1) return {extend_lattice(sub, {})};

  const DiscriminantGroup disc = discriminant_group(sub);
  const std::size_t r = sub.dimension();
  auto is_even_class = [&](const RatVector& x) {
    const Rational q = sub.pairing(x, x);
    return is_integral(q) && boost::multiprecision::numerator(q) % 2 == 0;
  };
  std::vector<RatVector> isotropic;
  for (const auto& x : disc.elements)
    if (!is_zero(x) && is_even_class(x)) isotropic.push_back(x);

  const std::size_t target = static_cast<std::size_t>(index);
  std::set<ElementSet> seen;
  std::vector<ElementSet> frontier{ElementSet{RatVector(r, Rational(0))}};
  std::vector<ElementSet> found;
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& h : frontier) {
      for (const auto& x : isotropic) {
        if (h.count(x)) continue;
        ElementSet g = closure_with(h, x);
        if (g.size() > target || target % g.size() != 0) continue;
        if (!seen.insert(g).second) continue;
        if (!std::all_of(g.begin(), g.end(), is_even_class)) continue;
        if (g.size() == target)
          found.push_back(g);
        else
          next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::vector<OverlatticeEmbedding> out;
  for (const auto& g : found) out.push_back(extend_lattice(sub, generating_set(g, r)));
  std::sort(out.begin(), out.end(), [](const OverlatticeEmbedding& a, const OverlatticeEmbedding& b) {
    return a.glue_generators < b.glue_generators;
  });
  return out;
}

OverlatticeEmbedding unimodular_overlattice(const IntegralLattice& sub) {
  auto all = unimodular_overlattices(sub);
  if (all.empty()) throw NoOverlatticeError("no isotropic subgroup of the required order in the discriminant group");
  if (all.size() > 1) {
    std::vector<std::string> candidates;
    for (const auto& c : all) candidates.push_back(describe_glue(c.glue_generators));
    throw AmbiguityError(std::to_string(all.size()) + " even unimodular overlattices", std::move(candidates));
  }
  return std::move(all.front());
}

OverlatticeEmbedding adjoin_half_class(const IntegralLattice& lattice, const IntVector& v) {
  if (v.size() != lattice.dimension()) throw DomainError("vector length does not match the lattice dimension");
  RatVector half(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) half[i] = Rational(v[i], 2);
  const RatVector p = to_rational(lattice.gram()) * half;
  if (!is_integral(p) || !is_integral(lattice.pairing(half, half)))
    throw DomainError("v/2 does not pair integrally with the lattice");
  return extend_lattice(lattice, {half});
}

std::string describe_glue(const std::vector<RatVector>& glue) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < glue.size(); ++k) {
    os << (k ? ", " : "") << '(';
    for (std::size_t i = 0; i < glue[k].size(); ++i) os << (i ? "," : "") << to_string(glue[k][i]);
    os << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace enriques
