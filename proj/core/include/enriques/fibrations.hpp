#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "enriques/fiber_types.hpp"
#include "enriques/graph_lattice.hpp"

namespace enriques {

// A genus one fibration seen through its reducible fibers.
struct FibrationClass {
  std::size_t id = 0;
  IntVector isotropic_class;             // primitive, ambient coordinates
  std::vector<AffineDiagram> fibers;     // sorted by vertex list
  std::vector<KodairaLabel> labels;      // parallel to fibers
  std::vector<bool> half_fiber_flags;    // parallel to fibers
  std::vector<std::string> warnings;

  std::size_t half_fiber_count() const;
  std::size_t curve_count() const;
};

// Groups the parabolic subdiagrams of the graph by "null classes pair to 0".
// Sorted by the vertex list of the first fiber; ids are positions.
std::vector<FibrationClass> enumerate_fibrations(const GraphLattice& gl);
std::vector<FibrationClass> enumerate_fibrations(const CurveGraph& g);

// True iff the fiber's null class is primitive in the ambient lattice, false
// iff it is twice a primitive class; InconsistencyError otherwise.
bool half_fiber_test(const GraphLattice& gl, const AffineDiagram& fiber);
// Same test against an explicit saturation of the span lattice.
bool half_fiber_test(const OverlatticeEmbedding& emb, const IntVector& span_null_class);

struct ShiodaTateReport {
  bool pass = true;
  // Fiber index sets with curve count exactly 8 + s.
  std::vector<std::vector<std::size_t>> tight;
};

// Every set of s fibers contains at most 8 + s curves. BoundViolation names
// the first offending set.
ShiodaTateReport shioda_tate_check(const std::vector<AffineDiagram>& fibers);
ShiodaTateReport shioda_tate_check(const FibrationClass& f);

enum class SurfaceClass { Classical, Ordinary, Supersingular, Unspecified };

struct SurfaceContext {
  unsigned characteristic = 0;  // 0 or a prime
  SurfaceClass surface_class = SurfaceClass::Unspecified;

  // DomainError for a non-prime positive characteristic, or ordinary /
  // supersingular away from characteristic 2.
  void validate() const;
  std::string str() const;
};

struct RuleViolation {
  std::string rule;     // short identifier, e.g. "additive-half-fiber"
  std::string message;
};

std::vector<RuleViolation> characteristic_rules_check(const SurfaceContext& ctx, const FibrationClass& f,
                                                      bool quasi_elliptic);

struct ConstraintRow {
  SurfaceContext context;
  bool allowed = true;
  std::vector<std::pair<std::size_t, RuleViolation>> violations;  // (fibration id, violation)
};

struct ExtraSpecialConstraints {
  std::string graph;
  std::vector<ConstraintRow> rows;
  bool requires_characteristic_2 = false;
  std::vector<SurfaceClass> allowed_classes;  // among characteristic-2 rows
};

// Runs the rules over the rows {p != 2 classical, p = 2 classical, ordinary,
// supersingular}. LookupError unless g is one of the extra-special graphs.
ExtraSpecialConstraints extra_special_constraints(const CurveGraph& g);

std::string to_string(SurfaceClass c);
SurfaceClass surface_class_from_string(const std::string& s);

}  // namespace enriques
