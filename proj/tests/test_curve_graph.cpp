#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "enriques/catalog.hpp"
#include "enriques/curve_graph.hpp"
#include "enriques/errors.hpp"
#include "support.hpp"

using namespace enriques;
using namespace testing_support;

namespace {

std::string graph_text(const std::string& edges) {
  return R"({"name": "t", "vertices": ["a", "b"],
  "edges": [)" + edges + "]}";
}

// Multiset of (degree counted with multiplicity, number of double edges) per vertex.
std::multiset<std::pair<int, int>> degree_profile(const CurveGraph& g) {
  std::multiset<std::pair<int, int>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    int deg = 0, doubles = 0;
    for (auto j : g.neighbors(i)) {
      deg += g.multiplicity(i, j);
      doubles += g.multiplicity(i, j) == 2;
    }
    out.insert({deg, doubles});
  }
  return out;
}

CurveGraph permuted(const CurveGraph& g, const std::vector<std::size_t>& perm) {
  // vertex i of g becomes vertex perm[i]
  std::vector<std::string> labels(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) labels[perm[i]] = g.vertices()[i];
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.multiplicity});
  return CurveGraph(g.name(), labels, edges, g.annotations());
}

std::size_t count_multiplicity(const CurveGraph& g, int m) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [m](const Edge& e) { return e.multiplicity == m; }));
}

}  // namespace

TEST(ParseGraph, SingleEdge) {
  const auto g = parse_graph(graph_text(R"(["a", "b", 1])"));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.multiplicity(0, 1), 1);
  EXPECT_EQ(gram_from_graph(g).gram(), int_matrix({{-2, 1}, {1, -2}}));
  EXPECT_EQ(determinant_exact(gram_from_graph(g)), 3);
}

TEST(ParseGraph, DoubleEdge) {
  const auto g = parse_graph(graph_text(R"(["a", "b", 2])"));
  EXPECT_EQ(g.multiplicity(1, 0), 2);
  EXPECT_EQ(gram_from_graph(g).gram(), int_matrix({{-2, 2}, {2, -2}}));
  EXPECT_EQ(determinant_exact(gram_from_graph(g)), 0);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  try {
    parse_graph(graph_text(R"(["a", "a", 1])"));
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  EXPECT_THROW(parse_graph(graph_text(R"(["a", "b", 3])")), ParseError);
  EXPECT_THROW(parse_graph(graph_text(R"(["a", "b", 1], ["b", "a", 1])")), ParseError);
  EXPECT_THROW(parse_graph(graph_text(R"(["a", "zz", 1])")), ParseError);
  EXPECT_THROW(parse_graph(graph_text(R"(["a", "b"])")), ParseError);
  EXPECT_THROW(parse_graph("{ not json"), ParseError);
  EXPECT_THROW(parse_graph(R"({"name": "t", "vertices": ["a", "a"], "edges": []})"), ParseError);
}

TEST(ParseGraph, AnnotationsKept) {
  const auto g = parse_graph(R"({"name": "t", "vertices": ["a", "b"], "edges": [["a", "b", 2]],
    "annotations": {"half_fibers": [["a", "b"]]}})");
  EXPECT_EQ(g.annotations()["half_fibers"][0][1], "b");
}

TEST(CurveGraphType, ConstructorValidates) {
  EXPECT_THROW(CurveGraph("x", {"a"}, {{0, 0, 1}}), StructuralError);
  EXPECT_THROW(CurveGraph("x", {"a", "b"}, {{0, 1, 1}, {1, 0, 2}}), StructuralError);
  EXPECT_THROW(CurveGraph("x", {"a", "b"}, {{0, 1, 0}}), StructuralError);
  EXPECT_THROW(CurveGraph("x", {"a", ""}, {}), StructuralError);
  EXPECT_THROW(catalog(kE8ExtraSpecial).graph.index_of("nope"), LookupError);
}

TEST(Catalog, UnknownNameListsValidNames) {
  try {
    catalog("E6-extra-special");
    FAIL();
  } catch (const LookupError& e) {
    for (const auto& n : catalog_names()) EXPECT_NE(std::string(e.what()).find(n), std::string::npos) << n;
  }
}

TEST(Catalog, ExpectedFibrationCounts) {
  EXPECT_EQ(catalog(kE8ExtraSpecial).fact("fibrations").value, 1);
  EXPECT_EQ(catalog(kD8ExtraSpecial).fact("fibrations").value, 3);
  EXPECT_EQ(catalog(kE7ExtraSpecial).fact("fibrations").value, 2);
  for (const auto& name : catalog_names())
    for (const auto& f : catalog(name).expected) EXPECT_FALSE(f.provenance.empty()) << name << " " << f.key;
  EXPECT_EQ(catalog(kTypeI).fact("fibrations").source, FactSource::kDerived);
  EXPECT_EQ(catalog(kE7Two).fact("fibrations").source, FactSource::kDerived);
}

// Shapes checked through vertex-order-free invariants.
TEST(Catalog, GraphShapes) {
  const auto e8 = catalog(kE8ExtraSpecial).graph;
  EXPECT_EQ(e8.size(), 10u);
  EXPECT_EQ(e8.edges().size(), 9u);  // tree
  EXPECT_EQ(degree_profile(e8), (std::multiset<std::pair<int, int>>{{1, 0}, {1, 0}, {1, 0}, {3, 0}, {2, 0}, {2, 0},
                                                                    {2, 0}, {2, 0}, {2, 0}, {2, 0}}));

  const auto d8 = catalog(kD8ExtraSpecial).graph;
  EXPECT_EQ(d8.size(), 10u);
  EXPECT_EQ(d8.edges().size(), 9u);
  const auto d8_profile = degree_profile(d8);
  EXPECT_EQ(std::count_if(d8_profile.begin(), d8_profile.end(), [](const auto& p) { return p.first == 3; }), 2);

  const auto e7 = catalog(kE7ExtraSpecial).graph;
  EXPECT_EQ(e7.size(), 11u);
  EXPECT_EQ(e7.edges().size(), 10u);
  EXPECT_EQ(count_multiplicity(e7, 2), 1u);

  const auto t1 = catalog(kTypeI).graph;
  EXPECT_EQ(t1.size(), 12u);
  EXPECT_EQ(t1.edges().size(), 13u);  // 8-cycle plus a 5-edge chord path
  EXPECT_EQ(count_multiplicity(t1, 2), 3u);

  const auto e72 = catalog(kE7Two).graph;
  EXPECT_EQ(e72.size(), 11u);
  EXPECT_EQ(e72.edges().size(), 11u);
  EXPECT_EQ(count_multiplicity(e72, 2), 1u);

  for (const auto& name : catalog_names()) EXPECT_TRUE(catalog(name).graph.is_connected()) << name;
}

TEST(Catalog, SerializeRoundTrip) {
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name).graph;
    const std::string text = serialize_graph(g);
    const auto back = parse_graph(text);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(serialize_graph(back), text) << name;
  }
}

TEST(Catalog, DirectoryOverride) {
  const auto dir = ::testing::TempDir();
  const auto g = catalog(kE8ExtraSpecial).graph;
  // missing file: built-in graph
  EXPECT_EQ(catalog_from_directory(dir + "/does-not-exist", kE8ExtraSpecial).graph, g);
}

TEST(GramFromGraph, InjectiveOnRandomGraphs) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> mult(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const int m = mult(rng);
        if (m == 1 || m == 2) edges.push_back({i, j, m});
      }
    const CurveGraph g("r", labels, edges);
    const auto back = graph_from_gram(gram_from_graph(g), "r");
    ASSERT_EQ(gram_from_graph(back), gram_from_graph(g));
    ASSERT_EQ(back.edges().size(), g.edges().size());
    for (const auto& e : g.edges()) ASSERT_EQ(back.multiplicity(e.u, e.v), e.multiplicity);
  }
}

TEST(GramFromGraph, PermutationConjugatesGram) {
  std::mt19937_64 rng(17);
  for (const auto& name : catalog_names()) {
    const auto g = catalog(name).graph;
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = permuted(g, perm);
    const auto gg = gram_from_graph(g).gram();
    const auto hh = gram_from_graph(h).gram();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) ASSERT_EQ(gg(i, j), hh(perm[i], perm[j]));
    EXPECT_EQ(determinant_exact(gram_from_graph(g)), determinant_exact(gram_from_graph(h)));
    // the reconstructed graph is the permuted graph again
    const auto back = graph_from_gram(gram_from_graph(h));
    for (const auto& e : h.edges()) EXPECT_EQ(back.multiplicity(e.u, e.v), e.multiplicity);
  }
}

TEST(GramFromGraph, RejectsNonCurveGrams) {
  EXPECT_THROW(graph_from_gram(lattice({{-2, 3}, {3, -2}})), StructuralError);
  EXPECT_THROW(graph_from_gram(lattice({{0, 1}, {1, -2}})), StructuralError);
}

TEST(ExportDot, Examples) {
  const CurveGraph single("one", {"a"}, {});
  const std::string dot = export_dot(single);
  EXPECT_NE(dot.find("graph \"one\""), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 4);  // header, node style, one node, closing brace

  const std::string pair = export_dot(parse_graph(graph_text(R"(["a", "b", 2])")));
  std::size_t edges = 0;
  for (std::size_t p = pair.find(" -- "); p != std::string::npos; p = pair.find(" -- ", p + 1)) ++edges;
  EXPECT_EQ(edges, 2u);

  const std::string t1 = export_dot(catalog(kTypeI).graph);
  std::size_t t1_edges = 0;
  for (std::size_t p = t1.find(" -- "); p != std::string::npos; p = t1.find(" -- ", p + 1)) ++t1_edges;
  EXPECT_EQ(t1_edges, 13u + 3u);  // double edges drawn twice
  EXPECT_EQ(std::count(t1.begin(), t1.end(), '[') - 1, 12);  // one xlabel per node, plus the node style
}

TEST(Automorphisms, CatalogGroups) {
  // identity always present
  for (const auto& name : catalog_names()) EXPECT_GE(graph_automorphisms(catalog(name).graph).size(), 1u);
  EXPECT_EQ(graph_automorphisms(catalog(kE8ExtraSpecial).graph).size(), 1u);
  EXPECT_EQ(graph_automorphisms(catalog(kD8ExtraSpecial).graph).size(), 2u);
}
