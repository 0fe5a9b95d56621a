#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "enriques/errors.hpp"
#include "enriques/sequences.hpp"
#include "support.hpp"

using namespace enriques;
using namespace testing_support;

namespace {

std::vector<IsotropicSequence> of_length(const std::vector<IsotropicSequence>& all, std::size_t c) {
  std::vector<IsotropicSequence> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [c](const auto& s) { return s.size() == c; });
  return out;
}

using LabelMap = std::map<std::string, std::string>;

// Kodaira-labelled fiber supports of a fibration, independent of vertex order.
// `rename` applies a graph automorphism to the labels.
std::string fibration_signature(const Surface& s, std::size_t id, const LabelMap& rename) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < s.fibrations[id].fibers.size(); ++k) {
    std::vector<std::string> labels;
    for (auto v : s.fibrations[id].fibers[k].vertices) labels.push_back(rename.at(s.entry.graph.vertices()[v]));
    std::sort(labels.begin(), labels.end());
    std::string p = s.fibrations[id].labels[k].str();
    for (const auto& l : labels) p += " " + l;
    parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + ";";
  return out;
}

LabelMap identity_labels(const CurveGraph& g) {
  LabelMap m;
  for (const auto& v : g.vertices()) m[v] = v;
  return m;
}

std::multiset<std::multiset<std::string>> sequence_signatures(const Surface& s, const std::vector<IsotropicSequence>& seqs,
                                                               const LabelMap& rename) {
  std::multiset<std::multiset<std::string>> out;
  for (const auto& q : seqs) {
    std::multiset<std::string> m;
    for (auto f : q.fibrations) m.insert(fibration_signature(s, f, rename));
    out.insert(m);
  }
  return out;
}

Surface analyze_permuted(const std::string& name, std::mt19937_64& rng) {
  const CurveGraph g = catalog(name).graph;
  std::vector<std::size_t> perm(g.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) labels[perm[i]] = g.vertices()[i];
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.multiplicity});
  Surface s;
  s.entry.graph = CurveGraph(g.name(), labels, edges, g.annotations());
  s.lattice = analyze_graph_lattice(s.entry.graph);
  s.fibrations = enumerate_fibrations(s.lattice);
  return s;
}

}  // namespace

TEST(ValidateSequence, OneSequenceFromAHalfFiber) {
  const auto& s = surface(kE8ExtraSpecial);
  const IsotropicSequence one = half_fiber_candidates(s.fibrations);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(validate_sequence(s.lattice, one).empty());
}

TEST(ValidateSequence, PairingTwoViolatesAxiomOne) {
  const auto& s = surface(kD8ExtraSpecial);
  const IsotropicSequence c = half_fiber_candidates(s.fibrations);
  ASSERT_GE(c.size(), 2u);
  IsotropicSequence bad;
  bad.half_fibers = {c.half_fibers[0], scale(2, c.half_fibers[1])};
  const auto v = validate_sequence(s.lattice, bad);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const auto& x) { return x.axiom == 1 || x.axiom == 0; }));

  // the same class twice pairs 0, not 1
  IsotropicSequence twice;
  twice.half_fibers = {c.half_fibers[0], c.half_fibers[0]};
  EXPECT_FALSE(validate_sequence(s.lattice, twice).empty());
}

TEST(ValidateSequence, BrokenChainViolatesAxiomTwo) {
  const auto& s = surface(kD8ExtraSpecial);
  const auto seqs = of_length(find_sequences(s.lattice, s.fibrations, 2), 2);
  ASSERT_FALSE(seqs.empty());
  const auto closure = degenerate_closure(s.lattice, s.fibrations, seqs.front(), 10, 1);
  ASSERT_EQ(closure.size(), 1u);
  DegenerateSequence d = closure.front();
  ASSERT_TRUE(validate_sequence(s.lattice, d).empty());
  // find a block with a chain of length >= 2 and break the link
  auto it = std::find_if(d.blocks.begin(), d.blocks.end(), [](const auto& b) { return b.chain.size() >= 2; });
  ASSERT_NE(it, d.blocks.end());
  const auto& g = s.entry.graph;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == it->chain[0] || g.multiplicity(it->chain[0], v) != 0) continue;
    it->chain[1] = v;
    break;
  }
  const auto viol = validate_sequence(s.lattice, d);
  EXPECT_TRUE(std::any_of(viol.begin(), viol.end(), [](const auto& x) { return x.axiom == 2; }));
}

TEST(ValidateSequence, ForeignVectorsRejected) {
  const auto& s = surface(kD8ExtraSpecial);
  IsotropicSequence wrong;
  wrong.half_fibers = {ivec({1, 0})};
  EXPECT_THROW(validate_sequence(s.lattice, wrong), DomainError);
}

TEST(FindSequences, ExtraSpecialCounts) {
  const auto& d8 = surface(kD8ExtraSpecial);
  EXPECT_EQ(of_length(find_sequences(d8.lattice, d8.fibrations, 2), 2).size(), 2u);
  const auto& e7 = surface(kE7ExtraSpecial);
  EXPECT_EQ(of_length(find_sequences(e7.lattice, e7.fibrations, 2), 2).size(), 1u);
  const auto& e8 = surface(kE8ExtraSpecial);
  const auto e8s = find_sequences(e8.lattice, e8.fibrations, 2);
  EXPECT_EQ(of_length(e8s, 1).size(), 1u);
  EXPECT_TRUE(of_length(e8s, 2).empty());
}

TEST(FindSequences, RangeChecked) {
  const auto& s = surface(kD8ExtraSpecial);
  EXPECT_THROW(find_sequences(s.lattice, s.fibrations, 0), DomainError);
  EXPECT_THROW(find_sequences(s.lattice, s.fibrations, 11), DomainError);
}

TEST(FindSequences, EveryResultIsValidAndCanonical) {
  for (const auto& name : catalog_names()) {
    const auto& s = surface(name);
    const auto seqs = find_sequences(s.lattice, s.fibrations, 10);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      EXPECT_TRUE(validate_sequence(s.lattice, seqs[i]).empty()) << name;
      EXPECT_EQ(seqs[i].canonical(), seqs[i]);
      if (i > 0) EXPECT_LE(seqs[i - 1].size(), seqs[i].size());
    }
  }
}

// When the graph has symmetries the saturation is chosen up to a graph
// automorphism, so the comparison is up to automorphism too.
TEST(FindSequences, StableUnderVertexRelabeling) {
  std::mt19937_64 rng(41);
  for (const auto& name : catalog_names()) {
    const auto& s = surface(name);
    const auto& g = s.entry.graph;
    const auto seqs = find_sequences(s.lattice, s.fibrations, 4);
    std::set<std::multiset<std::multiset<std::string>>> images;
    for (const auto& perm : graph_automorphisms(g)) {
      LabelMap rename;
      for (std::size_t i = 0; i < g.size(); ++i) rename[g.vertices()[i]] = g.vertices()[perm[i]];
      images.insert(sequence_signatures(s, seqs, rename));
    }
    for (int trial = 0; trial < 4; ++trial) {
      const Surface p = analyze_permuted(name, rng);
      const auto sig = sequence_signatures(p, find_sequences(p.lattice, p.fibrations, 4), identity_labels(p.entry.graph));
      EXPECT_TRUE(images.count(sig)) << name << " trial " << trial;
    }
  }
}

TEST(ExtendSequence, ExtraSpecialTwoSequencesAreStuck) {
  for (const char* name : {kD8ExtraSpecial, kE7ExtraSpecial}) {
    const auto& s = surface(name);
    for (const auto& q : of_length(find_sequences(s.lattice, s.fibrations, 2), 2)) {
      const auto r = extend_sequence(s.lattice, s.fibrations, q);
      EXPECT_FALSE(r.extendable()) << name;
    }
  }
  const auto& e8 = surface(kE8ExtraSpecial);
  EXPECT_FALSE(extend_sequence(e8.lattice, e8.fibrations, half_fiber_candidates(e8.fibrations)).extendable());
}

TEST(ExtendSequence, E7TwoHasNoFourSequence) {
  const auto& s = surface(kE7Two);
  const auto seqs = find_sequences(s.lattice, s.fibrations, 10);
  EXPECT_TRUE(of_length(seqs, 4).empty());
  const auto threes = of_length(seqs, 3);
  ASSERT_FALSE(threes.empty());
  for (const auto& q : threes) EXPECT_FALSE(extend_sequence(s.lattice, s.fibrations, q).extendable());
}

TEST(ExtendSequence, TypeIHasAStuckThreeSequence) {
  const auto& s = surface(kTypeI);
  const auto threes = of_length(find_sequences(s.lattice, s.fibrations, 3), 3);
  EXPECT_TRUE(std::any_of(threes.begin(), threes.end(), [&](const auto& q) {
    return !extend_sequence(s.lattice, s.fibrations, q).extendable();
  }));
}

TEST(ExtendSequence, CertificateListsEveryCandidate) {
  for (const auto& name : catalog_names()) {
    const auto& s = surface(name);
    const IsotropicSequence all = half_fiber_candidates(s.fibrations);
    for (const auto& q : find_sequences(s.lattice, s.fibrations, 3)) {
      const auto r = extend_sequence(s.lattice, s.fibrations, q);
      ASSERT_EQ(r.certificate.size(), all.size()) << name;
      std::size_t extending = 0;
      for (std::size_t i = 0; i < r.certificate.size(); ++i) {
        const auto& c = r.certificate[i];
        EXPECT_EQ(c.half_fiber, all.half_fibers[i]);
        ASSERT_EQ(c.pairings.size(), q.size());
        const bool ones = std::all_of(c.pairings.begin(), c.pairings.end(), [](const Integer& p) { return p == 1; });
        EXPECT_EQ(c.extends, ones);
        extending += c.extends;
      }
      EXPECT_EQ(extending, r.extensions.size());
      for (const auto& e : r.extensions) EXPECT_TRUE(validate_sequence(s.lattice, e).empty());
    }
  }
}

TEST(ExtendSequence, InvalidInputRejected) {
  const auto& s = surface(kD8ExtraSpecial);
  const IsotropicSequence c = half_fiber_candidates(s.fibrations);
  IsotropicSequence twice;
  twice.half_fibers = {c.half_fibers[0], c.half_fibers[0]};
  EXPECT_THROW(extend_sequence(s.lattice, s.fibrations, twice), DomainError);
}

// A stuck 2-sequence only occurs next to a fibration with an E8-tilde fiber
// and a curve meeting its half-fiber once.
TEST(ExtendSequence, StuckTwoSequencesComeFromSpecialIIStarFibrations) {
  for (const auto& name : catalog_names()) {
    const auto& s = surface(name);
    const auto& amb = *s.lattice.ambient;
    for (const auto& q : of_length(find_sequences(s.lattice, s.fibrations, 2), 2)) {
      if (extend_sequence(s.lattice, s.fibrations, q).extendable()) continue;
      bool special_ii = false;
      for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& f = s.fibrations[q.fibrations[i]];
        const bool has_e8 = std::any_of(f.fibers.begin(), f.fibers.end(),
                                        [](const AffineDiagram& d) { return d.base.name() == "~E8"; });
        const bool bisection = std::any_of(s.lattice.roots.begin(), s.lattice.roots.end(),
                                           [&](const IntVector& r) { return amb.pairing(r, f.isotropic_class) == 1; });
        special_ii = special_ii || (has_e8 && bisection);
      }
      EXPECT_TRUE(special_ii) << name;
    }
  }
}

TEST(DegenerateClosure, ExtraSpecialD8ReachesTen) {
  const auto& s = surface(kD8ExtraSpecial);
  for (const auto& q : of_length(find_sequences(s.lattice, s.fibrations, 2), 2)) {
    const auto tens = degenerate_closure(s.lattice, s.fibrations, q, 10, 5);
    ASSERT_FALSE(tens.empty());
    for (const auto& d : tens) {
      EXPECT_EQ(d.n(), 10u);
      EXPECT_GE(d.c(), 2u);
      EXPECT_TRUE(validate_sequence(s.lattice, d).empty());
    }
  }
}

TEST(DegenerateClosure, NineIsUnsupported) {
  const auto& s = surface(kD8ExtraSpecial);
  const auto q = half_fiber_candidates(s.fibrations);
  IsotropicSequence one;
  one.half_fibers = {q.half_fibers[0]};
  one.fibrations = {q.fibrations[0]};
  EXPECT_THROW(degenerate_closure(s.lattice, s.fibrations, one, 9), UnsupportedError);
  EXPECT_THROW(degenerate_closure(s.lattice, s.fibrations, one, 11), DomainError);
}

TEST(DegenerateClosure, TargetEqualToLengthReturnsTheSequence) {
  const auto& s = surface(kD8ExtraSpecial);
  const auto q = of_length(find_sequences(s.lattice, s.fibrations, 2), 2).front();
  const auto out = degenerate_closure(s.lattice, s.fibrations, q, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.front(), DegenerateSequence::from(q).canonical());
}

TEST(DegenerateClosure, MembersIsotropicAndTenSequenceDiscriminantNine) {
  std::size_t tens_checked = 0;
  for (const auto& name : catalog_names()) {
    const auto& s = surface(name);
    const auto& amb = *s.lattice.ambient;
    for (const auto& q : find_sequences(s.lattice, s.fibrations, 2)) {
      for (const auto& d : degenerate_closure(s.lattice, s.fibrations, q, 10, 20)) {
        for (const auto& m : d.members(s.lattice)) EXPECT_EQ(amb.pairing(m, m), 0) << name;
        const IntegralLattice gram = sequence_gram(s.lattice, d);
        EXPECT_EQ(gram.rank(), 10u);
        EXPECT_EQ(iabs(determinant_exact(gram)), 9) << name;
        ++tens_checked;
      }
    }
  }
  EXPECT_GT(tens_checked, 0u);
}

TEST(SequenceGram, AbstractExamples) {
  EXPECT_EQ(sequence_gram(2).gram(), int_matrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(determinant_exact(sequence_gram(2)), -1);
  EXPECT_EQ(sequence_gram(1).gram(), int_matrix({{0}}));
  EXPECT_EQ(determinant_exact(sequence_gram(1)), 0);
  EXPECT_EQ(determinant_exact(sequence_gram(10)), -9);
  EXPECT_EQ(sequence_gram(10).rank(), 10u);
}

TEST(SequenceGram, ConcreteTwoSequence) {
  const auto& s = surface(kE7ExtraSpecial);
  const auto q = of_length(find_sequences(s.lattice, s.fibrations, 2), 2).front();
  EXPECT_EQ(sequence_gram(s.lattice, q).gram(), int_matrix({{0, 1}, {1, 0}}));
}
