#include "enriques/graph_lattice.hpp"

#include <algorithm>

#include "enriques/errors.hpp"
#include "enriques/fiber_types.hpp"
#include "enriques/linalg.hpp"

namespace enriques {
namespace {

std::vector<std::size_t> support_from_annotation(const CurveGraph& g, const nlohmann::json& item) {
  if (!item.is_array()) throw StructuralError("fiber annotations must be lists of vertex labels");
  std::vector<std::size_t> out;
  for (const auto& label : item) {
    if (!label.is_string()) throw StructuralError("fiber annotations must be lists of vertex labels");
    out.push_back(g.index_of(label.get<std::string>()));
  }
  return out;
}

// Multiplier k with null class = k * primitive, computed in `emb`.
Integer divisibility_in(const OverlatticeEmbedding& emb, const IntVector& span_coords) {
  return content(emb.to_overlattice(span_coords));
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!enriques::is_integral(m(i, j))) return false;
  return true;
}

// Linear map on M induced by a vertex permutation.
RatMatrix induced_map(const IntMatrix& c, const std::vector<std::size_t>& pivots,
                      const std::vector<std::size_t>& perm) {
  const std::size_t r = c.rows();
  RatMatrix src(r, r), dst(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i) {
      src(i, k) = Rational(c(i, pivots[k]));
      dst(i, k) = Rational(c(i, perm[pivots[k]]));
    }
  return dst * inverse(src);
}

}  // namespace

IntVector GraphLattice::to_ambient(const IntVector& vertex_combination) const {
  if (vertex_combination.size() != graph.size()) throw DomainError("combination length does not match the vertex count");
  if (!full_rank) return vertex_combination;
  const IntVector m = vertex_to_span * vertex_combination;
  return saturation ? saturation->to_overlattice(m) : m;
}

LatticeVector GraphLattice::vector(IntVector ambient_coords) const {
  return LatticeVector(std::move(ambient_coords), ambient);
}

GraphLattice analyze_graph_lattice(const CurveGraph& g) {
  GraphLattice out;
  out.graph = g;
  out.vertex_lattice = gram_from_graph(g);
  out.vertex_signature = signature(out.vertex_lattice);
  const std::size_t n = g.size();
  out.span_rank = out.vertex_signature.plus + out.vertex_signature.minus;
  out.full_rank = out.span_rank == 10 && out.vertex_signature.plus == 1;

  if (!out.full_rank) {
    out.warnings.push_back("partial rank: vertex Gram has signature (" + std::to_string(out.vertex_signature.plus) +
                           "," + std::to_string(out.vertex_signature.minus) + "," +
                           std::to_string(out.vertex_signature.zero) +
                           "), not a rank-10 hyperbolic span; classes are computed in the free lattice on the vertices");
    out.span = out.vertex_lattice;
    out.vertex_to_span = IntMatrix::identity(n);
    out.ambient = std::make_shared<const IntegralLattice>(out.vertex_lattice);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, Integer(0));
      e[i] = 1;
      out.roots.push_back(std::move(e));
    }
    return out;
  }

  // G U = H with U unimodular: the trailing columns of U span the integral
  // radical, the leading ones a complement, and U^{-1} gives coordinates.
  const IntMatrix& gram = out.vertex_lattice.gram();
  const ColumnHermite ch = column_hermite(gram);
  const std::size_t r = ch.rank;
  const IntMatrix u_inv = [&] {
    const RatMatrix inv = inverse(to_rational(ch.u));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = boost::multiprecision::numerator(inv(i, j));
    return m;
  }();
  out.vertex_to_span = IntMatrix(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out.vertex_to_span(i, j) = u_inv(i, j);
  IntMatrix ur(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) ur(i, j) = ch.u(i, j);
  std::vector<std::string> span_labels;
  for (std::size_t i = 0; i < r; ++i) span_labels.push_back("m" + std::to_string(i + 1));
  out.span = IntegralLattice(ur.transposed() * gram * ur, span_labels);

  std::vector<OverlatticeEmbedding> candidates;
  try {
    candidates = unimodular_overlattices(out.span);
  } catch (const NoOverlatticeError& e) {
    out.warnings.push_back(std::string("no even unimodular overlattice: ") + e.what());
  }

  if (candidates.size() > 1) {
    // Keep candidates compatible with annotated half and simple fibers.
    const auto& ann = g.annotations();
    for (const auto& [key, want] : {std::pair<const char*, int>{"half_fibers", 1}, {"simple_fibers", 2}}) {
      if (!ann.contains(key)) continue;
      for (const auto& item : ann.at(key)) {
        const AffineDiagram d = make_affine_diagram(g, support_from_annotation(g, item));
        const IntVector m = out.vertex_to_span * d.null_class(n);
        std::erase_if(candidates, [&](const OverlatticeEmbedding& c) { return divisibility_in(c, m) != want; });
      }
    }
    if (candidates.empty())
      throw InconsistencyError("fiber annotations are incompatible with every unimodular overlattice");
  }

  if (candidates.size() > 1) {
    std::vector<std::size_t> pivots;
    rref(to_rational(out.vertex_to_span), &pivots);
    const auto autos = graph_automorphisms(g);
    const OverlatticeEmbedding& first = candidates.front();
    bool one_orbit = true;
    for (std::size_t k = 1; k < candidates.size() && one_orbit; ++k) {
      bool hit = false;
      for (const auto& perm : autos) {
        const RatMatrix a = induced_map(out.vertex_to_span, pivots, perm);
        if (is_integral(candidates[k].inverse_basis * a * first.basis)) {
          hit = true;
          break;
        }
      }
      one_orbit = hit;
    }
    if (!one_orbit) {
      std::vector<std::string> glue;
      for (const auto& c : candidates) glue.push_back(describe_glue(c.glue_generators));
      throw AmbiguityError("graph '" + g.name() + "' admits " + std::to_string(candidates.size()) +
                               " inequivalent unimodular overlattices; annotate half_fibers or simple_fibers",
                           std::move(glue));
    }
    out.saturation_note = std::to_string(candidates.size()) +
                          " unimodular overlattices, all related by graph automorphisms; using the first";
    candidates.resize(1);
  }

  if (candidates.size() == 1) {
    out.saturation = std::move(candidates.front());
    out.ambient = std::make_shared<const IntegralLattice>(out.saturation->overlattice);
  } else {
    out.ambient = std::make_shared<const IntegralLattice>(out.span);
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    out.roots.push_back(out.to_ambient(e));
  }
  return out;
}

}  // namespace enriques
