#include <gtest/gtest.h>

#include <algorithm>

#include "enriques/errors.hpp"
#include "enriques/fiber_types.hpp"
#include "support.hpp"

using namespace enriques;
using namespace testing_support;

namespace {

std::vector<std::size_t> all_vertices(const CurveGraph& g) {
  std::vector<std::size_t> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<long long> sorted_marks(const AffineDiagram& d) {
  std::vector<long long> m;
  for (const auto& x : d.marks) m.push_back(to_int64(x));
  std::sort(m.begin(), m.end());
  return m;
}

oracle::Mat negated_submatrix(const CurveGraph& g, const std::vector<std::size_t>& subset) {
  oracle::Mat m = oracle::submatrix(to_oracle(gram_from_graph(g).gram()), subset);
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

CurveGraph triangle() { return CurveGraph("tri", {"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }
CurveGraph double_pair() { return CurveGraph("pair", {"a", "b"}, {{0, 1, 2}}); }

}  // namespace

TEST(ClassifyRootDiagram, Examples) {
  const CurveGraph one("one", {"a"}, {});
  EXPECT_EQ(classify_root_diagram(one, {0}).name(), "A1");
  EXPECT_EQ(classify_root_diagram(dynkin_graph(RootType::A, 5), {0, 1, 2, 3, 4}).name(), "A5");
  EXPECT_EQ(classify_root_diagram(one, {}).name(), "0");
}

TEST(ClassifyRootDiagram, E8FromTheIIStarFiberMinusASimpleComponent) {
  const auto& s = surface(kE8ExtraSpecial);
  const auto parabolics = find_parabolic_subdiagrams(s.entry.graph);
  ASSERT_EQ(parabolics.size(), 1u);
  const auto& d = parabolics.front();
  ASSERT_EQ(d.base.name(), "~E8");
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < d.vertices.size(); ++k)
    if (d.marks[k] != 1) rest.push_back(d.vertices[k]);
  ASSERT_EQ(rest.size(), 8u);
  const AdeDiagram e8 = classify_root_diagram(s.entry.graph, rest);
  EXPECT_EQ(e8.name(), "E8");
  EXPECT_EQ(e8.determinant(), 1);
}

TEST(ClassifyRootDiagram, NotDefiniteGivesWitness) {
  for (const auto& g : {triangle(), double_pair(), affine_dynkin_graph(RootType::E, 8)}) {
    try {
      classify_root_diagram(g, all_vertices(g));
      FAIL() << g.name();
    } catch (const ClassificationError& e) {
      const IntegralLattice l = gram_from_graph(g);
      ASSERT_EQ(e.witness().size(), g.size());
      EXPECT_FALSE(is_zero(e.witness()));
      EXPECT_GE(l.pairing(e.witness(), e.witness()), 0);
    }
  }
}

TEST(ClassifyRootDiagram, StandardDiagramsAndDeterminants) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto a = classify_root_diagram(dynkin_graph(RootType::A, n), all_vertices(dynkin_graph(RootType::A, n)));
    EXPECT_EQ(a.name(), "A" + std::to_string(n));
    EXPECT_EQ(a.determinant(), Integer(n + 1));
    EXPECT_EQ(iabs(determinant_exact(root_lattice(RootType::A, n))), Integer(n + 1));
  }
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto g = dynkin_graph(RootType::D, n);
    EXPECT_EQ(classify_root_diagram(g, all_vertices(g)).name(), "D" + std::to_string(n));
    EXPECT_EQ(iabs(determinant_exact(root_lattice(RootType::D, n))), 4);
  }
  for (std::size_t n = 6; n <= 8; ++n) {
    const auto g = dynkin_graph(RootType::E, n);
    EXPECT_EQ(classify_root_diagram(g, all_vertices(g)).name(), "E" + std::to_string(n));
    EXPECT_EQ(iabs(determinant_exact(root_lattice(RootType::E, n))), Integer(9 - n));
  }
}

// Every negative definite induced subdiagram of every catalog graph, against
// the short-vector oracle.
TEST(ClassifyRootDiagram, AgreesWithShortVectorOracleOnCatalogSubdiagrams) {
  std::size_t checked = 0;
  for (const auto& name : catalog_names()) {
    const CurveGraph g = catalog(name).graph;
    const std::size_t n = g.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(i);
      if (subset.size() > 8) continue;
      const std::string expected = oracle::root_system_name(negated_submatrix(g, subset));
      if (expected.empty()) {
        EXPECT_THROW(classify_root_diagram(g, subset), ClassificationError);
        continue;
      }
      const AdeDiagram d = classify_root_diagram(g, subset);
      ASSERT_EQ(d.name(), expected) << name << " mask " << mask;
      ASSERT_EQ(d.rank(), subset.size());
      ASSERT_EQ(d.determinant(), iabs(determinant_exact(IntegralLattice(from_oracle(negated_submatrix(g, subset))))));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(ClassifyRootDiagram, AgreesWithOracleOnEveryRankEightSystem) {
  for (const auto& comps : root_systems_of_rank(8)) {
    const IntegralLattice l = root_lattice(comps);
    const CurveGraph g = graph_from_gram(l);
    const AdeDiagram d = classify_root_diagram(g, all_vertices(g));
    oracle::Mat m = to_oracle(l.gram());
    for (auto& row : m)
      for (auto& x : row) x = -x;
    EXPECT_EQ(d.name(), oracle::root_system_name(m));
  }
}

TEST(Parabolic, ExtraSpecialE8ContainsE8Tilde) {
  const auto& s = surface(kE8ExtraSpecial);
  const auto ps = find_parabolic_subdiagrams(s.entry.graph);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].base.name(), "~E8");
  EXPECT_EQ(ps[0].vertices.size(), 9u);
  EXPECT_EQ(kodaira_label(ps[0]).str(), "II*");
}

TEST(Parabolic, TypeIContainsTheEightCycle) {
  const auto& s = surface(kTypeI);
  const auto cycle = fiber_at(s.lattice, {"R8", "R21", "R22", "R23", "R24", "R25", "R26", "R27"});
  std::vector<std::size_t> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  bool found = false;
  for (const auto& d : find_parabolic_subdiagrams(s.entry.graph))
    if (d.vertices == sorted) {
      found = true;
      EXPECT_EQ(d.base.name(), "~A7");
      EXPECT_EQ(kodaira_label(d).str(), "I8");
      EXPECT_TRUE(kodaira_label(d).may_be_multiplicative());
    }
  EXPECT_TRUE(found);
}

TEST(Parabolic, DoubleEdgeAndTriangle) {
  const auto pair = find_parabolic_subdiagrams(double_pair());
  ASSERT_EQ(pair.size(), 1u);
  EXPECT_EQ(pair[0].base.name(), "~A1");
  EXPECT_EQ(sorted_marks(pair[0]), (std::vector<long long>{1, 1}));
  EXPECT_EQ(kodaira_label(pair[0]).str(), "I2|III");
  EXPECT_TRUE(kodaira_label(pair[0]).may_be_multiplicative());
  EXPECT_TRUE(kodaira_label(pair[0]).may_be_additive());

  const auto tri = find_parabolic_subdiagrams(triangle());
  ASSERT_EQ(tri.size(), 1u);
  EXPECT_EQ(kodaira_label(tri[0]).str(), "I3|IV");
  EXPECT_TRUE(find_parabolic_subdiagrams(dynkin_graph(RootType::E, 8)).empty());
}

TEST(Parabolic, MarksMatchStandardTables) {
  auto marks_of = [](RootType t, std::size_t r) {
    const auto ps = find_parabolic_subdiagrams(affine_dynkin_graph(t, r));
    EXPECT_EQ(ps.size(), 1u);
    return sorted_marks(ps.front());
  };
  EXPECT_EQ(marks_of(RootType::E, 8), (std::vector<long long>{1, 2, 2, 3, 3, 4, 4, 5, 6}));
  EXPECT_EQ(marks_of(RootType::E, 7), (std::vector<long long>{1, 1, 2, 2, 2, 3, 3, 4}));
  EXPECT_EQ(marks_of(RootType::E, 6), (std::vector<long long>{1, 1, 1, 2, 2, 2, 3}));
  for (std::size_t n = 4; n <= 8; ++n) {
    std::vector<long long> d(n + 1, 2);
    std::fill(d.begin(), d.begin() + 4, 1);
    EXPECT_EQ(marks_of(RootType::D, n), d) << n;
  }
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(marks_of(RootType::A, n), std::vector<long long>(n + 1, 1)) << n;
}

TEST(Parabolic, NullClassIsIsotropicAndOrthogonalToItsVertices) {
  for (const auto& name : catalog_names()) {
    const CurveGraph g = catalog(name).graph;
    const IntegralLattice l = gram_from_graph(g);
    for (const auto& d : find_parabolic_subdiagrams(g)) {
      const IntVector z = d.null_class(g.size());
      EXPECT_EQ(l.pairing(z, z), 0);
      for (auto v : d.vertices) {
        IntVector e(g.size(), Integer(0));
        e[v] = 1;
        EXPECT_EQ(l.pairing(z, e), 0);
      }
      EXPECT_EQ(content(IntVector(d.marks.begin(), d.marks.end())), 1);
      for (const auto& m : d.marks) EXPECT_GT(m, 0);
      EXPECT_LE(d.rank(), 8u) << name << " " << d.base.name();
      EXPECT_EQ(affine_type_from_marks(d.marks), d.base);
    }
  }
}

TEST(Kodaira, LabelTable) {
  auto label = [](RootType t, std::size_t r) {
    return kodaira_label(find_parabolic_subdiagrams(affine_dynkin_graph(t, r)).front());
  };
  EXPECT_EQ(label(RootType::E, 8).str(), "II*");
  EXPECT_EQ(label(RootType::E, 7).str(), "III*");
  EXPECT_EQ(label(RootType::E, 6).str(), "IV*");
  EXPECT_EQ(label(RootType::D, 4).str(), "I0*");
  EXPECT_EQ(label(RootType::D, 8).str(), "I4*");
  EXPECT_EQ(label(RootType::A, 7).str(), "I8");
  EXPECT_EQ(label(RootType::A, 3).str(), "I4");
  EXPECT_FALSE(label(RootType::E, 8).may_be_multiplicative());
  EXPECT_FALSE(label(RootType::D, 6).may_be_multiplicative());
  EXPECT_FALSE(label(RootType::A, 5).may_be_additive());
}

TEST(Kodaira, UnknownMarksRejected) {
  EXPECT_THROW(affine_type_from_marks({1, 2}), StructuralError);
  EXPECT_THROW(affine_type_from_marks({1, 1, 1, 1, 1, 3}), StructuralError);
}
