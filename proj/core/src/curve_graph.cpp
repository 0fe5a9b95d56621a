#include "enriques/curve_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "enriques/errors.hpp"

namespace enriques {
namespace {

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Offset of element `index` of the array stored under top-level key `key`,
// or of the key itself when `index` is npos. Falls back to 0.
std::size_t locate(std::string_view text, std::string_view key, std::size_t index) {
  int depth = 0;
  bool in_string = false;
  std::size_t string_start = 0;
  std::string last_string;
  bool armed = false;  // saw the key at depth 1, waiting for its value
  std::size_t key_pos = 0;
  int array_depth = -1;
  std::size_t element = 0;
  bool expect_element = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
        last_string = std::string(text.substr(string_start + 1, i - string_start - 1));
      }
      continue;
    }
    if (array_depth >= 0 && expect_element && depth == array_depth && !std::isspace(static_cast<unsigned char>(c)) && c != ']') {
      if (element == index) return i;
      expect_element = false;
    }
    switch (c) {
      case '"':
        in_string = true;
        string_start = i;
        break;
      case ':':
        if (depth == 1 && last_string == key && array_depth < 0) {
          armed = true;
          key_pos = string_start;
          if (index == std::string_view::npos) return key_pos;
        }
        break;
      case '[':
      case '{':
        ++depth;
        if (armed && c == '[' && array_depth < 0) {
          array_depth = depth;
          expect_element = true;
          armed = false;
        }
        break;
      case ']':
      case '}':
        if (depth == array_depth) return key_pos;
        --depth;
        break;
      case ',':
        if (depth == array_depth) {
          ++element;
          expect_element = true;
        } else if (depth == 1) {
          armed = false;
        }
        break;
      default:
        break;
    }
  }
  return key_pos;
}

}  // namespace

CurveGraph::CurveGraph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges,
                       nlohmann::json annotations)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      annotations_(std::move(annotations)) {
  const std::size_t n = vertices_.size();
  std::set<std::string_view> labels;
  for (const auto& v : vertices_) {
    if (v.empty()) throw StructuralError("empty vertex label");
    if (!labels.insert(v).second) throw StructuralError("duplicate vertex label '" + v + "'");
  }
  if (!annotations_.is_object()) throw StructuralError("annotations must be a JSON object");
  adjacency_.assign(n * n, 0);
  neighbors_.assign(n, {});
  for (const auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw StructuralError("edge endpoint out of range");
    if (e.u == e.v) throw StructuralError("self-loop at '" + vertices_[e.u] + "'");
    if (e.multiplicity != 1 && e.multiplicity != 2)
      throw StructuralError("edge " + vertices_[e.u] + "-" + vertices_[e.v] + " has multiplicity " +
                            std::to_string(e.multiplicity) + " (allowed: 1, 2)");
    if (adjacency_[e.u * n + e.v] != 0)
      throw StructuralError("duplicate edge " + vertices_[e.u] + "-" + vertices_[e.v]);
    adjacency_[e.u * n + e.v] = adjacency_[e.v * n + e.u] = e.multiplicity;
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

CurveGraph CurveGraph::from_labels(std::string name, std::vector<std::string> vertices,
                                   const std::vector<LabeledEdge>& edges, nlohmann::json annotations) {
  auto index = [&](const std::string& label) {
    const auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end()) throw StructuralError("edge refers to unknown vertex '" + label + "'");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b, m] : edges) es.push_back({index(a), index(b), m});
  return CurveGraph(std::move(name), std::move(vertices), std::move(es), std::move(annotations));
}

std::size_t CurveGraph::index_of(std::string_view label) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw LookupError("unknown vertex '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool CurveGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (auto y : neighbors_[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == size();
}

CurveGraph CurveGraph::induced(const std::vector<std::size_t>& subset, std::string name) const {
  std::vector<std::string> vs;
  std::vector<std::size_t> position(size(), size());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    vs.push_back(vertices_.at(subset[k]));
    position[subset[k]] = k;
  }
  std::vector<Edge> es;
  for (const auto& e : edges_)
    if (position[e.u] < size() && position[e.v] < size()) es.push_back({position[e.u], position[e.v], e.multiplicity});
  return CurveGraph(std::move(name), std::move(vs), std::move(es));
}

CurveGraph CurveGraph::without_vertex(std::size_t i) const {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < size(); ++k)
    if (k != i) keep.push_back(k);
  return induced(keep, name_ + "-minus-" + vertices_.at(i));
}

bool operator==(const CurveGraph& a, const CurveGraph& b) {
  if (a.name_ != b.name_ || a.vertices_ != b.vertices_ || a.annotations_ != b.annotations_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t k = 0; k < a.edges_.size(); ++k) {
    const Edge &x = a.edges_[k], &y = b.edges_[k];
    if (x.u != y.u || x.v != y.v || x.multiplicity != y.multiplicity) return false;
  }
  return true;
}

CurveGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "graph document must be a JSON object");
  auto key_line = [&](std::string_view key) { return line_at(text, locate(text, key, std::string_view::npos)); };
  auto element_line = [&](std::string_view key, std::size_t k) { return line_at(text, locate(text, key, k)); };

  if (!doc.contains("name") || !doc["name"].is_string()) throw ParseError(key_line("name"), "missing string field 'name'");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError(key_line("vertices"), "missing array field 'vertices'");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError(key_line("edges"), "missing array field 'edges'");
  nlohmann::json annotations = nlohmann::json::object();
  if (doc.contains("annotations")) {
    if (!doc["annotations"].is_object()) throw ParseError(key_line("annotations"), "'annotations' must be an object");
    annotations = doc["annotations"];
  }
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "vertices" && key != "edges" && key != "annotations")
      throw ParseError(key_line(key), "unknown field '" + key + "'");

  std::vector<std::string> vertices;
  std::set<std::string> seen;
  const auto& vs = doc["vertices"];
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!vs[k].is_string() || vs[k].get<std::string>().empty())
      throw ParseError(element_line("vertices", k), "vertex labels must be nonempty strings");
    const std::string label = vs[k].get<std::string>();
    if (!seen.insert(label).second) throw ParseError(element_line("vertices", k), "duplicate vertex label '" + label + "'");
    vertices.push_back(label);
  }
  auto index = [&](const std::string& label) {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), label) - vertices.begin());
  };
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  const auto& es = doc["edges"];
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::size_t line = element_line("edges", k);
    const auto& e = es[k];
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      throw ParseError(line, "edge must be [label, label, multiplicity]");
    if (!e[2].is_number_integer()) throw ParseError(line, "edge multiplicity must be an integer");
    const std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
    const long long m = e[2].get<long long>();
    const std::size_t u = index(a), v = index(b);
    if (u == vertices.size()) throw ParseError(line, "unknown vertex '" + a + "'");
    if (v == vertices.size()) throw ParseError(line, "unknown vertex '" + b + "'");
    if (u == v) throw ParseError(line, "self-loop at '" + a + "'");
    if (m != 1 && m != 2) throw ParseError(line, "multiplicity " + std::to_string(m) + " is not 1 or 2");
    if (!pairs.insert({std::min(u, v), std::max(u, v)}).second)
      throw ParseError(line, "duplicate edge " + a + "-" + b);
    edges.push_back({u, v, static_cast<int>(m)});
  }
  return CurveGraph(doc["name"].get<std::string>(), std::move(vertices), std::move(edges), std::move(annotations));
}

CurveGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot read graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const CurveGraph& g) {
  using nlohmann::json;
  std::ostringstream os;
  os << "{\n  \"name\": " << json(g.name()).dump() << ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << json(g.vertices()[i]).dump();
  os << "],\n  \"edges\": [";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    os << (k ? ",\n" : "\n") << "    [" << json(g.vertices()[e.u]).dump() << ", " << json(g.vertices()[e.v]).dump() << ", "
       << e.multiplicity << "]";
  }
  os << (g.edges().empty() ? "" : "\n  ") << "],\n  \"annotations\": " << g.annotations().dump() << "\n}\n";
  return os.str();
}

IntegralLattice gram_from_graph(const CurveGraph& g) {
  IntMatrix gram(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    gram(i, i) = -2;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) gram(i, j) = g.multiplicity(i, j);
  }
  return IntegralLattice(std::move(gram), g.vertices());
}

CurveGraph graph_from_gram(const IntegralLattice& lattice, std::string name) {
  const auto& gram = lattice.gram();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) != -2) throw StructuralError("diagonal entry " + to_string(gram(i, i)) + " is not -2");
    for (std::size_t j = i + 1; j < gram.cols(); ++j) {
      const Integer m = gram(i, j);
      if (m < 0 || m > 2) throw StructuralError("off-diagonal entry " + to_string(m) + " is not a curve intersection");
      if (m != 0) edges.push_back({i, j, static_cast<int>(m)});
    }
  }
  return CurveGraph(std::move(name), lattice.labels(), std::move(edges));
}

std::string export_dot(const CurveGraph& g) {
  using nlohmann::json;
  std::ostringstream os;
  os << "graph " << json(g.name()).dump() << " {\n";
  os << "  node [shape=point, width=0.12];\n";
  for (const auto& v : g.vertices()) os << "  " << json(v).dump() << " [xlabel=" << json(v).dump() << "];\n";
  for (const auto& e : g.edges())
    for (int k = 0; k < e.multiplicity; ++k)
      os << "  " << json(g.vertices()[e.u]).dump() << " -- " << json(g.vertices()[e.v]).dump() << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::vector<std::size_t>> graph_automorphisms(const CurveGraph& g) {
  const std::size_t n = g.size();
  // Vertex invariant: sorted multiset of incident multiplicities.
  std::vector<std::vector<int>> signature(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : g.neighbors(i)) signature[i].push_back(g.multiplicity(i, j));
    std::sort(signature[i].begin(), signature[i].end());
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      out.push_back(image);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || signature[c] != signature[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = g.multiplicity(i, k) == g.multiplicity(c, image[k]);
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      extend(i + 1);
      used[c] = false;
    }
    image[i] = n;
  };
  extend(0);
  return out;
}

}  // namespace enriques
