#include "enriques/fibrations.hpp"

#include <algorithm>
#include <numeric>

#include "enriques/catalog.hpp"
#include "enriques/errors.hpp"

namespace enriques {
namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Integer divisibility(const IntVector& v, const std::string& what) {
  const Integer c = content(v);
  if (c != 1 && c != 2)
    throw InconsistencyError(what + " is " + to_string(c) + " times a primitive class, expected 1 or 2");
  return c;
}

}  // namespace

std::size_t FibrationClass::half_fiber_count() const {
  return static_cast<std::size_t>(std::count(half_fiber_flags.begin(), half_fiber_flags.end(), true));
}

std::size_t FibrationClass::curve_count() const {
  std::size_t n = 0;
  for (const auto& f : fibers) n += f.vertices.size();
  return n;
}

bool half_fiber_test(const OverlatticeEmbedding& emb, const IntVector& span_null_class) {
  return divisibility(emb.to_overlattice(span_null_class), "null class") == 1;
}

bool half_fiber_test(const GraphLattice& gl, const AffineDiagram& fiber) {
  return divisibility(gl.to_ambient(fiber.null_class(gl.graph.size())), "null class") == 1;
}

std::vector<FibrationClass> enumerate_fibrations(const GraphLattice& gl) {
  const auto diagrams = find_parabolic_subdiagrams(gl.graph);
  const std::size_t k = diagrams.size();
  const std::size_t n = gl.graph.size();
  std::vector<IntVector> nulls;
  for (const auto& d : diagrams) nulls.push_back(gl.to_ambient(d.null_class(n)));

  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Integer p = gl.ambient->pairing(nulls[i], nulls[j]);
      if (p < 0)
        throw InconsistencyError("parabolic subdiagrams " + to_string(IntVector(diagrams[i].vertices.begin(), diagrams[i].vertices.end())) +
                                 " and " + to_string(IntVector(diagrams[j].vertices.begin(), diagrams[j].vertices.end())) +
                                 " have null classes with negative pairing");
      if (p == 0) parent[find_root(parent, i)] = find_root(parent, j);
    }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t r = find_root(parent, i);
    if (group_of[r] == k) {
      group_of[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(i);
  }

  std::vector<FibrationClass> out;
  for (const auto& members : groups) {
    FibrationClass f;
    f.isotropic_class = primitive_part(nulls[members.front()]);
    for (std::size_t a = 0; a < members.size(); ++a) {
      const AffineDiagram& d = diagrams[members[a]];
      if (primitive_part(nulls[members[a]]) != f.isotropic_class) {
        if (gl.full_rank)
          throw InconsistencyError("fibers of one fibration have non-proportional null classes");
        f.warnings.push_back("fiber null classes are not proportional in the free vertex lattice");
      }
      for (std::size_t b = 0; b < a; ++b) {
        const AffineDiagram& e = diagrams[members[b]];
        for (std::size_t v : d.vertices)
          for (std::size_t w : e.vertices)
            if (v == w || gl.graph.multiplicity(v, w) != 0)
              throw InconsistencyError("fibers of one fibration share or join vertices");
      }
      f.fibers.push_back(d);
      f.labels.push_back(kodaira_label(d));
      f.half_fiber_flags.push_back(half_fiber_test(gl, d));
    }
    if (!gl.saturated()) f.warnings.push_back("half-fiber flags computed without a unimodular saturation");
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const FibrationClass& a, const FibrationClass& b) {
    return a.fibers.front().vertices < b.fibers.front().vertices;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
  return out;
}

std::vector<FibrationClass> enumerate_fibrations(const CurveGraph& g) {
  return enumerate_fibrations(analyze_graph_lattice(g));
}

ShiodaTateReport shioda_tate_check(const std::vector<AffineDiagram>& fibers) {
  const std::size_t s_max = fibers.size();
  if (s_max > 20) throw UnsupportedError("too many fibers for the subset check");
  ShiodaTateReport report;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s_max); ++mask) {
    std::size_t curves = 0, s = 0;
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < s_max; ++i)
      if (mask >> i & 1U) {
        curves += fibers[i].vertices.size();
        ++s;
        set.push_back(i);
      }
    if (curves > 8 + s) {
      std::string names;
      for (std::size_t i : set) names += (names.empty() ? "" : ", ") + fibers[i].base.name();
      throw BoundViolation("fibers {" + names + "} contain " + std::to_string(curves) + " curves, more than 8 + " +
                           std::to_string(s));
    }
    if (curves == 8 + s) report.tight.push_back(std::move(set));
  }
  return report;
}

ShiodaTateReport shioda_tate_check(const FibrationClass& f) { return shioda_tate_check(f.fibers); }

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Classical: return "classical";
    case SurfaceClass::Ordinary: return "ordinary";
    case SurfaceClass::Supersingular: return "supersingular";
    case SurfaceClass::Unspecified: return "unspecified";
  }
  return "?";
}

SurfaceClass surface_class_from_string(const std::string& s) {
  for (auto c : {SurfaceClass::Classical, SurfaceClass::Ordinary, SurfaceClass::Supersingular, SurfaceClass::Unspecified})
    if (to_string(c) == s) return c;
  throw DomainError("unknown surface class '" + s + "'");
}

void SurfaceContext::validate() const {
  if (characteristic != 0 && !is_prime(characteristic))
    throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  if ((surface_class == SurfaceClass::Ordinary || surface_class == SurfaceClass::Supersingular) && characteristic != 2)
    throw DomainError(to_string(surface_class) + " surfaces exist only in characteristic 2");
}

std::string SurfaceContext::str() const {
  return "p=" + std::to_string(characteristic) + " " + to_string(surface_class);
}

std::vector<RuleViolation> characteristic_rules_check(const SurfaceContext& ctx, const FibrationClass& f,
                                                      bool quasi_elliptic) {
  ctx.validate();
  if (ctx.characteristic == 2 && ctx.surface_class == SurfaceClass::Unspecified) {
    std::vector<RuleViolation> all;
    for (auto c : {SurfaceClass::Classical, SurfaceClass::Ordinary, SurfaceClass::Supersingular}) {
      auto v = characteristic_rules_check({2, c}, f, quasi_elliptic);
      if (v.empty()) return {};
      for (auto& x : v) x.message = to_string(c) + ": " + x.message;
      all.insert(all.end(), v.begin(), v.end());
    }
    return all;
  }

  std::vector<RuleViolation> out;
  const bool p2 = ctx.characteristic == 2;
  const bool forbid_quasi = !p2 || ctx.surface_class == SurfaceClass::Ordinary;
  const bool forbid_additive = !p2 || ctx.surface_class == SurfaceClass::Ordinary;
  const bool forbid_multiplicative = p2 && (ctx.surface_class == SurfaceClass::Classical ||
                                            ctx.surface_class == SurfaceClass::Supersingular);
  const bool single_half_fiber = p2 && (ctx.surface_class == SurfaceClass::Ordinary ||
                                        ctx.surface_class == SurfaceClass::Supersingular);

  if (quasi_elliptic && forbid_quasi)
    out.push_back({"quasi-elliptic", "quasi-elliptic fibration not possible for " + ctx.str()});
  for (std::size_t i = 0; i < f.fibers.size(); ++i) {
    if (!f.half_fiber_flags[i]) continue;
    const KodairaLabel& l = f.labels[i];
    if (forbid_additive && !l.may_be_multiplicative())
      out.push_back({"additive-half-fiber", "half-fiber " + l.str() + " is additive, not possible for " + ctx.str()});
    if (forbid_multiplicative && !l.may_be_additive())
      out.push_back({"multiplicative-half-fiber",
                     "half-fiber " + l.str() + " is multiplicative, not possible for " + ctx.str()});
  }
  if (single_half_fiber && f.half_fiber_count() > 1)
    out.push_back({"half-fiber-count", std::to_string(f.half_fiber_count()) +
                                           " reducible half-fibers, but " + ctx.str() + " allows only one"});
  return out;
}

ExtraSpecialConstraints extra_special_constraints(const CurveGraph& g) {
  if (!is_extra_special_name(g.name()))
    throw LookupError("'" + g.name() + "' is not an extra-special catalog graph");
  const auto fibrations = enumerate_fibrations(g);
  ExtraSpecialConstraints out;
  out.graph = g.name();
  const SurfaceContext rows[] = {{0, SurfaceClass::Classical},
                                 {2, SurfaceClass::Classical},
                                 {2, SurfaceClass::Ordinary},
                                 {2, SurfaceClass::Supersingular}};
  for (const auto& ctx : rows) {
    ConstraintRow row;
    row.context = ctx;
    for (const auto& f : fibrations)
      for (auto& v : characteristic_rules_check(ctx, f, false)) row.violations.emplace_back(f.id, std::move(v));
    row.allowed = row.violations.empty();
    if (row.allowed && ctx.characteristic == 2) out.allowed_classes.push_back(ctx.surface_class);
    out.rows.push_back(std::move(row));
  }
  out.requires_characteristic_2 = !out.rows.front().allowed;
  return out;
}

}  // namespace enriques
