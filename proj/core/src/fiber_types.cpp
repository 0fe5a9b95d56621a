#include "enriques/fiber_types.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "enriques/errors.hpp"
#include "enriques/linalg.hpp"

namespace enriques {
namespace {

IntMatrix induced_gram(const CurveGraph& g, const std::vector<std::size_t>& subset) {
  IntMatrix m(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      m(i, j) = i == j ? Integer(-2) : Integer(g.multiplicity(subset[i], subset[j]));
  return m;
}

// Vector x with x^T G x >= 0, found at the first leading block of -G that is
// not positive definite. Empty when -G is positive definite.
IntVector nondefinite_witness(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i] = i;
    IntMatrix block = gram.submatrix(lead, lead);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = -block(i, j);
    if (determinant(block) > 0) continue;
    // -G_{k-1} is positive definite; complete e_k by the Schur complement.
    RatVector x(n, Rational(0));
    x[k - 1] = 1;
    if (k > 1) {
      std::vector<std::size_t> prev(lead.begin(), lead.end() - 1);
      RatMatrix a = to_rational(block.submatrix(prev, prev));
      RatVector rhs(k - 1);
      for (std::size_t i = 0; i + 1 < k; ++i) rhs[i] = -Rational(block(i, k - 1));
      RatVector y = inverse(a) * rhs;
      for (std::size_t i = 0; i + 1 < k; ++i) x[i] = y[i];
    }
    return primitive_part(clear_denominators(x));
  }
  return {};
}

std::vector<std::size_t> walk_arm(const CurveGraph& g, const std::set<std::size_t>& members,
                                  std::size_t from, std::size_t first) {
  std::vector<std::size_t> arm{first};
  std::size_t prev = from;
  std::size_t cur = first;
  while (true) {
    std::size_t next = cur;
    for (std::size_t w : g.neighbors(cur))
      if (w != prev && members.count(w)) next = w;
    if (next == cur) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

AdeComponent classify_tree(const CurveGraph& g, const std::vector<std::size_t>& comp) {
  const std::set<std::size_t> members(comp.begin(), comp.end());
  std::map<std::size_t, std::vector<std::size_t>> nbrs;
  for (std::size_t v : comp)
    for (std::size_t w : g.neighbors(v))
      if (members.count(w)) nbrs[v].push_back(w);

  AdeComponent out;
  out.rank = comp.size();
  std::vector<std::size_t> branch;
  for (std::size_t v : comp)
    if (nbrs[v].size() >= 3) branch.push_back(v);

  if (branch.empty()) {
    out.type = RootType::A;
    std::size_t start = comp.front();
    for (std::size_t v : comp)
      if (nbrs[v].size() <= 1) { start = v; break; }
    if (comp.size() == 1) {
      out.vertices = {start};
    } else {
      out.vertices = {start};
      auto rest = walk_arm(g, members, start, nbrs[start].front());
      out.vertices.insert(out.vertices.end(), rest.begin(), rest.end());
    }
    return out;
  }
  if (branch.size() != 1 || nbrs[branch.front()].size() != 3)
    throw InternalError("definite diagram with unexpected branching");

  const std::size_t b = branch.front();
  std::vector<std::vector<std::size_t>> arms;
  for (std::size_t w : nbrs[b]) arms.push_back(walk_arm(g, members, b, w));
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();

  if (p == 1 && q == 1) {
    out.type = RootType::D;
    // alpha_1 .. alpha_{n-2} along the long arm towards the branch node.
    std::vector<std::size_t> chain(arms[2].rbegin(), arms[2].rend());
    chain.push_back(b);
    chain.push_back(arms[0][0]);
    chain.push_back(arms[1][0]);
    out.vertices = chain;
    return out;
  }
  if (p == 1 && q == 2 && r >= 2 && r <= 4) {
    out.type = RootType::E;
    // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
    const auto& short_arm = arms[0];
    const auto& two_arm = arms[1];
    const auto& long_arm = arms[2];
    out.vertices = {two_arm[1], short_arm[0], two_arm[0], b};
    out.vertices.insert(out.vertices.end(), long_arm.begin(), long_arm.end());
    return out;
  }
  throw InternalError("definite tree outside the ADE list");
}

std::vector<std::vector<std::size_t>> components_of(const CurveGraph& g,
                                                   const std::vector<std::size_t>& subset) {
  const std::set<std::size_t> members(subset.begin(), subset.end());
  std::set<std::size_t> seen;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s : subset) {
    if (seen.count(s)) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.neighbors(v))
        if (members.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> sorted_marks(std::vector<int> m) {
  std::sort(m.begin(), m.end());
  return std::vector<Integer>(m.begin(), m.end());
}

std::vector<Integer> expected_marks(RootType t, std::size_t rank) {
  switch (t) {
    case RootType::A:
      return std::vector<Integer>(rank + 1, Integer(1));
    case RootType::D: {
      std::vector<int> m(rank + 1, 2);
      for (int i = 0; i < 4; ++i) m[i] = 1;
      return sorted_marks(m);
    }
    case RootType::E:
      if (rank == 6) return sorted_marks({1, 1, 1, 2, 2, 2, 3});
      if (rank == 7) return sorted_marks({1, 1, 2, 2, 2, 3, 3, 4});
      return sorted_marks({1, 2, 3, 4, 5, 6, 4, 2, 3});
  }
  return {};
}

}  // namespace

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::D: return "D";
    case RootType::E: return "E";
  }
  return "?";
}

std::string AdeComponent::name() const { return to_string(type) + std::to_string(rank); }

Integer AdeComponent::determinant() const {
  switch (type) {
    case RootType::A: return Integer(rank + 1);
    case RootType::D: return 4;
    case RootType::E: return Integer(9 - rank);
  }
  return 0;
}

std::string AdeDiagram::name() const {
  if (components.empty()) return "0";
  std::vector<std::string> names;
  for (const auto& c : components) names.push_back(c.name());
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : "+") + n;
  return out;
}

std::size_t AdeDiagram::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

Integer AdeDiagram::determinant() const {
  Integer d = 1;
  for (const auto& c : components) d *= c.determinant();
  return d;
}

std::pair<std::size_t, std::size_t> AdeDiagram::position_of(std::size_t vertex) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t i = 0; i < components[c].vertices.size(); ++i)
      if (components[c].vertices[i] == vertex) return {c, i};
  throw LookupError("vertex " + std::to_string(vertex) + " is not in the diagram");
}

AdeDiagram classify_root_diagram(const CurveGraph& g, const std::vector<std::size_t>& subset) {
  std::set<std::size_t> uniq;
  for (std::size_t v : subset) {
    if (v >= g.size()) throw LookupError("vertex index out of range: " + std::to_string(v));
    if (!uniq.insert(v).second) throw StructuralError("repeated vertex in subset");
  }
  const IntMatrix gram = induced_gram(g, subset);
  IntVector witness = nondefinite_witness(gram);
  if (!witness.empty()) {
    const Integer sq = bilinear(gram, witness, witness);
    throw ClassificationError(std::string("induced Gram is not negative definite; found a vector of square ") +
                                  to_string(sq),
                              witness);
  }
  AdeDiagram out;
  for (const auto& comp : components_of(g, subset)) out.components.push_back(classify_tree(g, comp));
  return out;
}

std::string AffineType::name() const { return "~" + to_string(type) + std::to_string(rank); }

IntVector AffineDiagram::null_class(std::size_t graph_size) const {
  IntVector v(graph_size, Integer(0));
  for (std::size_t i = 0; i < vertices.size(); ++i) v[vertices[i]] = marks[i];
  return v;
}

bool AffineDiagram::contains(std::size_t vertex) const {
  return std::binary_search(vertices.begin(), vertices.end(), vertex);
}

AffineType affine_type_from_marks(const std::vector<Integer>& marks) {
  if (marks.size() < 2) throw StructuralError("an affine diagram has at least two vertices");
  std::vector<Integer> sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = marks.size();
  AffineType t;
  t.rank = k - 1;
  const Integer& top = sorted.back();
  if (top == 1) {
    t.type = RootType::A;
  } else if (top == 2 && k >= 5) {
    t.type = RootType::D;
  } else if ((top == 3 && k == 7) || (top == 4 && k == 8) || (top == 6 && k == 9)) {
    t.type = RootType::E;
  } else {
    throw StructuralError("marks match no affine ADE diagram");
  }
  if (sorted != expected_marks(t.type, t.rank))
    throw StructuralError("marks match no affine ADE diagram");
  return t;
}

AffineDiagram make_affine_diagram(const CurveGraph& g, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw StructuralError("repeated vertex in subset");
  for (std::size_t v : subset)
    if (v >= g.size()) throw LookupError("vertex index out of range: " + std::to_string(v));
  if (components_of(g, subset).size() != 1) throw StructuralError("subdiagram is not connected");
  const IntMatrix gram = induced_gram(g, subset);
  const Inertia in = inertia(gram);
  if (in.positive != 0 || in.zero != 1)
    throw StructuralError("subdiagram is not parabolic with one-dimensional radical");
  const auto ker = kernel(to_rational(gram));
  IntVector m = primitive_part(clear_denominators(ker.front()));
  if (m.front() < 0)
    for (auto& x : m) x = -x;
  for (const auto& x : m)
    if (x <= 0) throw InternalError("null vector of a connected parabolic diagram has a nonpositive entry");
  AffineDiagram d;
  d.vertices = std::move(subset);
  d.marks = std::move(m);
  d.base = affine_type_from_marks(d.marks);
  return d;
}

std::vector<AffineDiagram> find_parabolic_subdiagrams(const CurveGraph& g) {
  const std::size_t n = g.size();
  if (n > 64) throw UnsupportedError("parabolic search supports at most 64 vertices");
  using Mask = std::uint64_t;
  auto members = [n](Mask m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1U) out.push_back(i);
    return out;
  };
  auto neg_det = [&g](const std::vector<std::size_t>& s) {
    IntMatrix m = induced_gram(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) m(i, j) = -m(i, j);
    return determinant(m);
  };

  // Grow connected negative definite sets one neighbour at a time. Adding v to
  // a definite S gives det(-G_T) = det(-G_S) * (Schur complement), so the sign
  // of det(-G_T) decides definite / parabolic / hyperbolic.
  std::set<Mask> seen;
  std::set<Mask> parabolic;
  std::vector<Mask> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    frontier.push_back(Mask{1} << i);
    seen.insert(Mask{1} << i);
  }
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier) {
      Mask boundary = 0;
      for (std::size_t v : members(s))
        for (std::size_t w : g.neighbors(v)) boundary |= Mask{1} << w;
      boundary &= ~s;
      for (std::size_t w = 0; w < n; ++w) {
        if (!(boundary >> w & 1U)) continue;
        const Mask t = s | (Mask{1} << w);
        if (!seen.insert(t).second) continue;
        const Integer d = neg_det(members(t));
        if (d > 0) {
          next.push_back(t);
        } else if (d == 0) {
          parabolic.insert(t);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<AffineDiagram> out;
  for (Mask m : parabolic) out.push_back(make_affine_diagram(g, members(m)));
  std::sort(out.begin(), out.end(),
            [](const AffineDiagram& a, const AffineDiagram& b) { return a.vertices < b.vertices; });
  return out;
}

std::string KodairaLabel::str() const {
  std::string out;
  for (const auto& c : candidates) out += (out.empty() ? "" : "|") + c.name;
  return out;
}

bool KodairaLabel::may_be_multiplicative() const {
  return std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.multiplicative; });
}

bool KodairaLabel::may_be_additive() const {
  return std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return !c.multiplicative; });
}

KodairaLabel kodaira_label(const AffineDiagram& d) {
  const AffineType t = affine_type_from_marks(d.marks);
  if (!(t == d.base)) throw StructuralError("base type does not match the marks");
  KodairaLabel label;
  label.affine = d;
  auto add = [&label](std::string name, bool mult) { label.candidates.push_back({std::move(name), mult}); };
  switch (t.type) {
    case RootType::A:
      add("I" + std::to_string(t.rank + 1), true);
      if (t.rank == 1) add("III", false);
      if (t.rank == 2) add("IV", false);
      break;
    case RootType::D:
      add("I" + std::to_string(t.rank - 4) + "*", false);
      break;
    case RootType::E:
      if (t.rank == 6) add("IV*", false);
      if (t.rank == 7) add("III*", false);
      if (t.rank == 8) add("II*", false);
      break;
  }
  return label;
}

CurveGraph dynkin_graph(RootType type, std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  switch (type) {
    case RootType::A:
      if (rank < 1) throw DomainError("A_n needs n >= 1");
      for (std::size_t i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1, 1});
      break;
    case RootType::D:
      if (rank < 4) throw DomainError("D_n needs n >= 4");
      for (std::size_t i = 0; i + 2 < rank; ++i) edges.push_back({i, i + 1, 1});
      edges.push_back({rank - 3, rank - 1, 1});
      break;
    case RootType::E:
      if (rank < 6 || rank > 8) throw DomainError("E_n needs 6 <= n <= 8");
      edges.push_back({0, 2, 1});
      edges.push_back({1, 3, 1});
      for (std::size_t i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1, 1});
      break;
  }
  return CurveGraph(to_string(type) + std::to_string(rank), names, edges);
}

CurveGraph affine_dynkin_graph(RootType type, std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= rank; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  const std::string name = "~" + to_string(type) + std::to_string(rank);
  if (type == RootType::A) {
    if (rank < 1) throw DomainError("~A_n needs n >= 1");
    if (rank == 1) return CurveGraph(name, names, {{0, 1, 2}});
    for (std::size_t i = 0; i <= rank; ++i) edges.push_back({i, (i + 1) % (rank + 1), 1});
    return CurveGraph(name, names, edges);
  }
  // Extend the finite diagram (v1..vn) by v0 attached at the standard place.
  const CurveGraph finite = dynkin_graph(type, rank);
  for (const auto& e : finite.edges()) edges.push_back({e.u + 1, e.v + 1, 1});
  std::size_t attach = 0;
  if (type == RootType::D) attach = 2;            // alpha_2
  else if (rank == 6) attach = 2;                 // alpha_2
  else if (rank == 7) attach = 1;                 // alpha_1
  else attach = 8;                                // alpha_8
  edges.push_back({0, attach, 1});
  return CurveGraph(name, names, edges);
}

IntegralLattice root_lattice(const std::vector<AdeComponent>& components) {
  std::size_t total = 0;
  for (const auto& c : components) total += c.rank;
  IntMatrix gram(total, total);
  std::size_t offset = 0;
  for (const auto& c : components) {
    const IntMatrix block = gram_from_graph(dynkin_graph(c.type, c.rank)).gram();
    for (std::size_t i = 0; i < c.rank; ++i)
      for (std::size_t j = 0; j < c.rank; ++j) gram(offset + i, offset + j) = block(i, j);
    offset += c.rank;
  }
  return IntegralLattice(gram);
}

IntegralLattice root_lattice(RootType type, std::size_t rank) {
  return root_lattice(std::vector<AdeComponent>{AdeComponent{type, rank, {}}});
}

std::vector<std::vector<AdeComponent>> root_systems_of_rank(std::size_t rank) {
  // Irreducible types ordered so that each multiset is produced once.
  std::vector<AdeComponent> pieces;
  for (std::size_t r = 1; r <= rank; ++r) pieces.push_back({RootType::A, r, {}});
  for (std::size_t r = 4; r <= rank; ++r) pieces.push_back({RootType::D, r, {}});
  for (std::size_t r = 6; r <= std::min<std::size_t>(rank, 8); ++r) pieces.push_back({RootType::E, r, {}});
  std::vector<std::vector<AdeComponent>> out;
  std::vector<AdeComponent> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pieces.size(); ++i) {
      if (pieces[i].rank > left) continue;
      cur.push_back(pieces[i]);
      self(self, i, left - pieces[i].rank);
      cur.pop_back();
    }
  };
  rec(rec, 0, rank);
  return out;
}

}  // namespace enriques
