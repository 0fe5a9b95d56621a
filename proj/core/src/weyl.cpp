#include "enriques/weyl.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "enriques/errors.hpp"
#include "enriques/linalg.hpp"

namespace enriques {
namespace {

Rational pair(const RatMatrix& q, const RatVector& a, const RatVector& b) { return bilinear(q, a, b); }

// Some vector of positive square in the span of `basis`, or nullopt.
std::optional<RatVector> positive_vector(const RatMatrix& q, const std::vector<RatVector>& basis) {
  for (const auto& b : basis)
    if (pair(q, b, b) > 0) return b;
  // Orthogonalize; a positive direction shows up as a positive pivot.
  std::vector<RatVector> done;
  for (RatVector x : basis) {
    for (const auto& y : done) {
      const Rational yy = pair(q, y, y);
      const Rational c = pair(q, x, y) / yy;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * y[i];
    }
    const Rational xx = pair(q, x, x);
    if (xx > 0) return x;
    if (xx != 0) {
      done.push_back(x);
      continue;
    }
    // Isotropic x: combine with a vector it pairs with.
    for (const auto& b : basis) {
      const Rational xb = pair(q, x, b);
      if (xb == 0) continue;
      const Rational bb = pair(q, b, b);
      // (b + t x)^2 = bb + 2 t xb > 0 for suitable t.
      const Rational t = (Rational(1) - bb) / (2 * xb);
      RatVector z = b;
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += t * x[i];
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(ReflectionOrder o) {
  switch (o) {
    case ReflectionOrder::SmallestIndex: return "smallest-index";
    case ReflectionOrder::LargestIndex: return "largest-index";
    case ReflectionOrder::MostNegative: return "most-negative";
  }
  return "?";
}

IntVector reflect(const IntegralLattice& lattice, const IntVector& v, const IntVector& root) {
  if (v.size() != lattice.dimension() || root.size() != lattice.dimension())
    throw DomainError("vector length does not match the lattice dimension");
  const Integer rr = lattice.pairing(root, root);
  if (rr != -2) throw DomainError("reflection needs a root of square -2, got square " + to_string(rr));
  return add(v, scale(lattice.pairing(v, root), root));
}

LatticeVector reflect(const LatticeVector& v, const LatticeVector& root) {
  if (!v.lattice || !root.lattice || !(*v.lattice == *root.lattice))
    throw DomainError("vectors belong to different lattices");
  return LatticeVector(reflect(*v.lattice, v.coords, root.coords), v.lattice);
}

namespace {

// Reflects a positive vector into the chamber cut out by the roots, then moves
// it off the walls it lies on. nullopt when the reflections do not terminate
// or the walls do not form a definite system.
std::optional<IntVector> chamber_vector(const IntegralLattice& lattice, const std::vector<IntVector>& roots,
                                        const IntVector& orient) {
  const std::size_t d = lattice.dimension();
  const RatMatrix q = to_rational(lattice.gram());
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector x(d, Rational(0));
    x[i] = 1;
    basis.push_back(x);
  }
  const auto p = positive_vector(q, basis);
  if (!p) return std::nullopt;
  IntVector h = primitive_part(clear_denominators(*p));
  if (lattice.pairing(orient, orient) >= 0 && lattice.pairing(h, orient) < 0) h = scale(Integer(-1), h);

  for (std::size_t step = 0;; ++step) {
    if (step > 100'000) return std::nullopt;
    auto it = std::find_if(roots.begin(), roots.end(), [&](const IntVector& r) { return lattice.pairing(h, r) < 0; });
    if (it == roots.end()) break;
    h = reflect(lattice, h, *it);
  }

  // Walls through h are orthogonal to h^2 > 0, so they span a negative
  // definite space; x in their span with x.r = 1 on each of them.
  std::vector<std::size_t> walls;
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (lattice.pairing(h, roots[i]) != 0) continue;
    rows.push_back(to_rational(roots[i]));
    if (rank(RatMatrix::from_rows(rows)) == rows.size()) {
      walls.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  IntVector x(d, Integer(0));
  if (!walls.empty()) {
    RatMatrix g(walls.size(), walls.size());
    for (std::size_t a = 0; a < walls.size(); ++a)
      for (std::size_t b = 0; b < walls.size(); ++b) g(a, b) = Rational(lattice.pairing(roots[walls[a]], roots[walls[b]]));
    const auto c = solve(g, RatVector(walls.size(), Rational(1)));
    if (!c) return std::nullopt;
    RatVector xr(d, Rational(0));
    for (std::size_t a = 0; a < walls.size(); ++a)
      for (std::size_t i = 0; i < d; ++i) xr[i] += (*c)[a] * Rational(roots[walls[a]][i]);
    x = clear_denominators(xr);
  }
  for (Integer n = 1; n < Integer(1) << 64; n *= 2) {
    const IntVector y = add(scale(n, h), x);
    if (lattice.pairing(y, y) <= 0) continue;
    if (std::all_of(roots.begin(), roots.end(), [&](const IntVector& r) { return lattice.pairing(y, r) > 0; }))
      return primitive_part(y);
  }
  return std::nullopt;
}

}  // namespace

IntVector interior_vector(const IntegralLattice& lattice, const std::vector<IntVector>& roots,
                          const IntVector& orient) {
  const std::size_t d = lattice.dimension();
  const RatMatrix q = to_rational(lattice.gram());
  if (orient.size() != d) throw DomainError("orientation vector has the wrong length");

  // Maximal independent set of root functionals x -> r.x.
  std::vector<RatVector> rows;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != d) throw DomainError("root has the wrong length");
    RatVector a = q * to_rational(roots[i]);
    rows.push_back(a);
    if (rank(RatMatrix::from_rows(rows)) == rows.size()) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  const std::size_t s = chosen.size();
  RatMatrix a(s, d);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t j = 0; j < d; ++j) a(k, j) = rows[k][j];
  const std::vector<RatVector> perp = s == 0 ? [&] {
    std::vector<RatVector> e;
    for (std::size_t i = 0; i < d; ++i) {
      RatVector x(d, Rational(0));
      x[i] = 1;
      e.push_back(x);
    }
    return e;
  }() : kernel(a);

  std::optional<RatVector> p;
  if (!perp.empty()) {
    p = positive_vector(q, perp);
    if (!p) throw DomainError("no interior vector: the orthogonal complement of the roots has no positive vector");
    const Rational o = pair(q, *p, to_rational(orient));
    if (o < 0)
      for (auto& x : *p) x = -x;
  }

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> weight(1, 9);
  const RatVector orient_q = to_rational(orient);
  for (int trial = 0; trial < 200; ++trial) {
    RatVector t(s);
    for (std::size_t k = 0; k < s; ++k) t[k] = trial == 0 ? 1 : weight(rng);
    RatVector h(d, Rational(0));
    if (s > 0) {
      auto sol = solve(a, t);
      if (!sol) continue;
      h = *sol;
    }
    if (p) {
      // h + lambda p: roots are orthogonal to p, so only the square changes.
      Rational lambda = 1;
      for (int it = 0; it < 200; ++it, lambda *= 2) {
        RatVector x = h;
        for (std::size_t i = 0; i < d; ++i) x[i] += lambda * (*p)[i];
        if (pair(q, x, x) > 0 && pair(q, x, orient_q) >= 0) {
          h = x;
          break;
        }
      }
    }
    if (pair(q, h, h) <= 0) continue;
    bool ok = true;
    for (const auto& r : roots)
      if (pair(q, h, to_rational(r)) <= 0) ok = false;
    if (!ok) continue;
    return primitive_part(clear_denominators(h));
  }
  if (auto h = chamber_vector(lattice, roots, orient)) return *h;
  throw DomainError("no interior vector found for the given roots; supply one explicitly");
}

ReductionTrace nef_reduce(const IntegralLattice& lattice, const std::vector<IntVector>& roots, const IntVector& v,
                          const ReduceOptions& options) {
  const std::size_t d = lattice.dimension();
  if (v.size() != d) throw DomainError("vector length does not match the lattice dimension");
  for (const auto& r : roots) {
    if (r.size() != d) throw DomainError("root length does not match the lattice dimension");
    if (lattice.pairing(r, r) != -2) throw DomainError("every root must have square -2");
  }
  const Integer vv = lattice.pairing(v, v);
  if (vv < 0) throw DomainError("nef reduction needs v^2 >= 0, got " + to_string(vv));

  ReductionTrace trace;
  trace.input = v;
  trace.nef_rep = v;
  trace.root_sum.assign(roots.size(), Integer(0));

  auto pairings = [&](const IntVector& x) {
    std::vector<Integer> out;
    for (const auto& r : roots) out.push_back(lattice.pairing(x, r));
    return out;
  };
  auto pick = [&](const std::vector<Integer>& p) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= 0) continue;
      switch (options.order) {
        case ReflectionOrder::SmallestIndex:
          return i;
        case ReflectionOrder::LargestIndex:
          best = i;
          break;
        case ReflectionOrder::MostNegative:
          if (!best || p[i] < p[*best]) best = i;
          break;
      }
    }
    return best;
  };

  auto first = pick(pairings(v));
  if (!first) return trace;
  const IntVector h = options.interior ? *options.interior : interior_vector(lattice, roots, v);
  if (lattice.pairing(h, v) < 0) throw DomainError("v lies on the negative side of the interior vector");

  IntVector cur = v;
  while (true) {
    const auto p = pairings(cur);
    const auto i = pick(p);
    if (!i) break;
    if (trace.steps.size() >= options.max_steps)
      throw InternalError("nef reduction exceeded " + std::to_string(options.max_steps) + " steps");
    const Integer a = -p[*i];
    cur = add(cur, scale(p[*i], roots[*i]));
    trace.root_sum[*i] += a;
    trace.steps.push_back(*i);
  }
  trace.nef_rep = std::move(cur);
  return trace;
}

ReductionTrace nef_reduce(const GraphLattice& gl, const IntVector& v, const ReduceOptions& options) {
  return nef_reduce(*gl.ambient, gl.roots, v, options);
}

ReductionTrace nef_reduce(const LatticeVector& v, const CurveGraph& g, const ReduceOptions& options) {
  const GraphLattice gl = analyze_graph_lattice(g);
  if (!v.lattice || !(*v.lattice == *gl.ambient)) throw DomainError("vector does not live in the graph's lattice");
  return nef_reduce(gl, v.coords, options);
}

VinbergEvidence vinberg_finite_index(const CurveGraph& g) {
  VinbergEvidence ev;
  const IntegralLattice lat = gram_from_graph(g);
  ev.signature = signature(lat);
  ev.span_rank = ev.signature.plus + ev.signature.minus;
  if (ev.span_rank < 10) {
    ev.reason = "vertex span has rank " + std::to_string(ev.span_rank) + " < 10";
    return ev;
  }
  if (ev.span_rank != 10 || ev.signature.plus != 1)
    throw DomainError("vertex span has signature (" + std::to_string(ev.signature.plus) + "," +
                      std::to_string(ev.signature.minus) + "), not (1,9)");

  ev.parabolics = find_parabolic_subdiagrams(g);
  const std::size_t k = ev.parabolics.size();
  std::vector<std::vector<bool>> compatible(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) {
        compatible[i][j] = false;
        continue;
      }
      for (std::size_t v : ev.parabolics[i].vertices)
        for (std::size_t w : ev.parabolics[j].vertices)
          if (v == w || g.multiplicity(v, w) != 0) compatible[i][j] = false;
    }

  ev.completions.assign(k, {});
  bool all = true;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> cur{i};
    std::vector<std::size_t> best;
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t r) {
      if (r == 8) {
        best = cur;
        return true;
      }
      for (std::size_t j = start; j < k; ++j) {
        if (r + ev.parabolics[j].rank() > 8) continue;
        if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return compatible[c][j]; })) continue;
        cur.push_back(j);
        if (search(j + 1, r + ev.parabolics[j].rank())) return true;
        cur.pop_back();
      }
      return false;
    };
    if (ev.parabolics[i].rank() <= 8 && search(0, ev.parabolics[i].rank())) {
      std::sort(best.begin(), best.end());
      ev.completions[i] = best;
    } else {
      all = false;
      if (ev.reason.empty())
        ev.reason = "parabolic subdiagram " + ev.parabolics[i].base.name() + " on vertices {" + [&] {
          std::string s;
          for (std::size_t v : ev.parabolics[i].vertices) s += (s.empty() ? "" : ",") + g.vertices()[v];
          return s;
        }() + "} lies in no parabolic subdiagram of rank 8";
    }
  }
  if (k == 0) {
    all = false;
    ev.reason = "no parabolic subdiagram";
  }
  ev.finite_index = all;
  if (all) ev.reason = "every connected parabolic subdiagram lies in one of rank 8";
  return ev;
}

CompletenessReport curve_completeness_check(const CurveGraph& g) {
  CompletenessReport out;
  out.graph = g.name();
  out.evidence = vinberg_finite_index(g);
  if (!out.evidence.finite_index)
    throw RefusalError("cannot certify completeness of '" + g.name() + "': " + out.evidence.reason);
  out.statement = "the reflections in the " + std::to_string(g.size()) +
                  " vertex classes generate a finite-index subgroup of the orthogonal group, so a surface "
                  "containing this configuration has no further (-2)-curves";
  return out;
}

}  // namespace enriques
