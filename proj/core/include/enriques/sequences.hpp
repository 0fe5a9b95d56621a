#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "enriques/fibrations.hpp"
#include "enriques/graph_lattice.hpp"

namespace enriques {

inline constexpr std::size_t kNoFibration = std::numeric_limits<std::size_t>::max();

// Half-fiber classes F_1..F_c in ambient coordinates. `fibrations[i]` records
// which enumerated fibration F_i came from (kNoFibration when unknown).
struct IsotropicSequence {
  std::vector<IntVector> half_fibers;
  std::vector<std::size_t> fibrations;

  std::size_t size() const { return half_fibers.size(); }
  // Sorted by coordinates, provenance kept in step.
  IsotropicSequence canonical() const;
  friend bool operator==(const IsotropicSequence& a, const IsotropicSequence& b) {
    return a.half_fibers == b.half_fibers;
  }
};

// One block F_i, F_i + R_{i,1}, ..., F_i + R_{i,1} + ... + R_{i,m}.
struct SequenceBlock {
  IntVector half_fiber;
  std::size_t fibration = kNoFibration;
  std::vector<std::size_t> chain;  // graph vertices R_{i,1..m}
  friend bool operator==(const SequenceBlock& a, const SequenceBlock& b) {
    return a.half_fiber == b.half_fiber && a.chain == b.chain;
  }
};

struct DegenerateSequence {
  std::vector<SequenceBlock> blocks;

  std::size_t c() const { return blocks.size(); }
  std::size_t n() const;
  // The n divisor classes in order, ambient coordinates.
  std::vector<IntVector> members(const GraphLattice& gl) const;
  DegenerateSequence canonical() const;
  static DegenerateSequence from(const IsotropicSequence& s);
  friend bool operator==(const DegenerateSequence& a, const DegenerateSequence& b) { return a.blocks == b.blocks; }
};

struct SequenceViolation {
  int axiom = 0;  // 1-4 for the sequence axioms, 0 for class conditions
  std::string message;
};

// Empty iff valid. DomainError when a vector does not live in gl's ambient
// lattice or a chain names an unknown vertex.
std::vector<SequenceViolation> validate_sequence(const GraphLattice& gl, const IsotropicSequence& s);
std::vector<SequenceViolation> validate_sequence(const GraphLattice& gl, const DegenerateSequence& s);

// Distinct half-fiber classes of the enumerated fibrations, one per fibration.
IsotropicSequence half_fiber_candidates(const std::vector<FibrationClass>& fibrations);

// All c-sequences with 1 <= c <= c_max built from the candidates, each in
// canonical order, sorted by length then coordinates. DomainError unless
// 1 <= c_max <= 10.
std::vector<IsotropicSequence> find_sequences(const GraphLattice& gl, const std::vector<FibrationClass>& fibrations,
                                              std::size_t c_max);
std::vector<IsotropicSequence> find_sequences(const CurveGraph& g, std::size_t c_max);

struct CandidateCheck {
  std::size_t fibration = kNoFibration;
  IntVector half_fiber;
  std::vector<Integer> pairings;  // with each member of the sequence
  bool extends = false;
};

struct ExtensionResult {
  std::vector<IsotropicSequence> extensions;  // canonical, sorted
  std::vector<CandidateCheck> certificate;    // every candidate, in fibration order
  bool extendable() const { return !extensions.empty(); }
};

// DomainError when s is not a valid sequence on gl.
ExtensionResult extend_sequence(const GraphLattice& gl, const std::vector<FibrationClass>& fibrations,
                                const IsotropicSequence& s);

// Degenerate n_target-sequences whose half-fibers contain those of s, using
// further candidate half-fibers and chains of graph vertices. Canonical and
// sorted. UnsupportedError for n_target = 9; DomainError outside 1..10 or
// when n_target < s.size(). `limit` > 0 stops after that many results.
std::vector<DegenerateSequence> degenerate_closure(const GraphLattice& gl,
                                                   const std::vector<FibrationClass>& fibrations,
                                                   const IsotropicSequence& s, std::size_t n_target,
                                                   std::size_t limit = 0);

IntegralLattice sequence_gram(const GraphLattice& gl, const DegenerateSequence& s);
IntegralLattice sequence_gram(const GraphLattice& gl, const IsotropicSequence& s);
// Gram of an abstract c-sequence: 0 on the diagonal, 1 elsewhere.
IntegralLattice sequence_gram(std::size_t c);

}  // namespace enriques
