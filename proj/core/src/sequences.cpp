#include "enriques/sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "enriques/errors.hpp"

namespace enriques {
namespace {

std::string vertex_name(const GraphLattice& gl, std::size_t v) { return gl.graph.vertices()[v]; }

void check_vector(const GraphLattice& gl, const IntVector& v) {
  if (v.size() != gl.ambient->dimension())
    throw DomainError("class of length " + std::to_string(v.size()) + " does not live in the ambient lattice of rank " +
                      std::to_string(gl.ambient->dimension()));
}

void check_half_fiber(const GraphLattice& gl, const IntVector& f, std::size_t i,
                      std::vector<SequenceViolation>& out) {
  check_vector(gl, f);
  const std::string name = "F" + std::to_string(i + 1);
  if (is_zero(f)) {
    out.push_back({0, name + " is zero"});
    return;
  }
  if (gl.ambient->pairing(f, f) != 0) out.push_back({1, name + " is not isotropic"});
  if (!is_primitive(f)) out.push_back({0, name + " is not primitive"});
  for (std::size_t v = 0; v < gl.roots.size(); ++v)
    if (gl.ambient->pairing(f, gl.roots[v]) < 0)
      out.push_back({0, name + " pairs negatively with " + vertex_name(gl, v)});
}

void check_axiom1(const GraphLattice& gl, const std::vector<IntVector>& fs, std::vector<SequenceViolation>& out) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const Integer p = gl.ambient->pairing(fs[i], fs[j]);
      if (p != 1)
        out.push_back({1, "F" + std::to_string(i + 1) + ".F" + std::to_string(j + 1) + " = " + to_string(p) +
                              ", expected 1"});
    }
}

struct SearchContext {
  const GraphLattice& gl;
  std::vector<IntVector> candidates;
  std::vector<std::size_t> candidate_fibration;
  std::vector<std::vector<Integer>> cand_pair;         // candidate x candidate
  std::vector<std::vector<Integer>> cand_root;         // candidate x vertex
};

}  // namespace

IsotropicSequence IsotropicSequence::canonical() const {
  std::vector<std::size_t> order(half_fibers.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return half_fibers[a] < half_fibers[b]; });
  IsotropicSequence out;
  for (std::size_t i : order) {
    out.half_fibers.push_back(half_fibers[i]);
    out.fibrations.push_back(i < fibrations.size() ? fibrations[i] : kNoFibration);
  }
  return out;
}

std::size_t DegenerateSequence::n() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += 1 + b.chain.size();
  return n;
}

std::vector<IntVector> DegenerateSequence::members(const GraphLattice& gl) const {
  std::vector<IntVector> out;
  for (const auto& b : blocks) {
    IntVector cur = b.half_fiber;
    out.push_back(cur);
    for (std::size_t v : b.chain) {
      if (v >= gl.roots.size()) throw DomainError("chain vertex index out of range");
      cur = add(cur, gl.roots[v]);
      out.push_back(cur);
    }
  }
  return out;
}

DegenerateSequence DegenerateSequence::canonical() const {
  DegenerateSequence out = *this;
  std::sort(out.blocks.begin(), out.blocks.end(), [](const SequenceBlock& a, const SequenceBlock& b) {
    return std::tie(a.half_fiber, a.chain) < std::tie(b.half_fiber, b.chain);
  });
  return out;
}

DegenerateSequence DegenerateSequence::from(const IsotropicSequence& s) {
  DegenerateSequence out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out.blocks.push_back({s.half_fibers[i], i < s.fibrations.size() ? s.fibrations[i] : kNoFibration, {}});
  return out;
}

std::vector<SequenceViolation> validate_sequence(const GraphLattice& gl, const IsotropicSequence& s) {
  std::vector<SequenceViolation> out;
  for (std::size_t i = 0; i < s.size(); ++i) check_half_fiber(gl, s.half_fibers[i], i, out);
  check_axiom1(gl, s.half_fibers, out);
  return out;
}

std::vector<SequenceViolation> validate_sequence(const GraphLattice& gl, const DegenerateSequence& s) {
  std::vector<SequenceViolation> out;
  std::vector<IntVector> fs;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    check_half_fiber(gl, s.blocks[i].half_fiber, i, out);
    fs.push_back(s.blocks[i].half_fiber);
    for (std::size_t v : s.blocks[i].chain)
      if (v >= gl.graph.size()) throw DomainError("chain vertex index " + std::to_string(v) + " out of range");
  }
  check_axiom1(gl, fs, out);

  struct Pos {
    std::size_t block, index, vertex;
  };
  std::vector<Pos> roots;
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (std::size_t j = 0; j < s.blocks[i].chain.size(); ++j) roots.push_back({i, j, s.blocks[i].chain[j]});
  auto rname = [](const Pos& p) {
    return "R" + std::to_string(p.block + 1) + "," + std::to_string(p.index + 1);
  };
  const IntMatrix& gram = gl.vertex_lattice.gram();
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      const Pos& x = roots[a];
      const Pos& y = roots[b];
      const Integer p = gram(x.vertex, y.vertex);
      const bool linked = x.block == y.block && y.index == x.index + 1;
      if (linked && p != 1)
        out.push_back({2, rname(x) + "." + rname(y) + " = " + to_string(p) + ", expected 1"});
      if (!linked && p != 0)
        out.push_back({3, rname(x) + "." + rname(y) + " = " + to_string(p) + ", expected 0"});
    }
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (const Pos& r : roots) {
      const Integer p = gl.ambient->pairing(s.blocks[i].half_fiber, gl.roots[r.vertex]);
      const Integer want = (r.block == i && r.index == 0) ? 1 : 0;
      if (p != want)
        out.push_back({4, "F" + std::to_string(i + 1) + "." + rname(r) + " = " + to_string(p) + ", expected " +
                              to_string(want)});
    }
  return out;
}

IsotropicSequence half_fiber_candidates(const std::vector<FibrationClass>& fibrations) {
  IsotropicSequence out;
  for (const auto& f : fibrations) {
    if (std::find(out.half_fibers.begin(), out.half_fibers.end(), f.isotropic_class) != out.half_fibers.end()) continue;
    out.half_fibers.push_back(f.isotropic_class);
    out.fibrations.push_back(f.id);
  }
  return out;
}

std::vector<IsotropicSequence> find_sequences(const GraphLattice& gl, const std::vector<FibrationClass>& fibrations,
                                              std::size_t c_max) {
  if (c_max < 1 || c_max > 10) throw DomainError("c_max must lie in 1..10");
  const IsotropicSequence cand = half_fiber_candidates(fibrations);
  const std::size_t k = cand.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      adj[i][j] = i != j && gl.ambient->pairing(cand.half_fibers[i], cand.half_fibers[j]) == 1;

  std::vector<IsotropicSequence> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (!cur.empty()) {
      IsotropicSequence s;
      for (std::size_t i : cur) {
        s.half_fibers.push_back(cand.half_fibers[i]);
        s.fibrations.push_back(cand.fibrations[i]);
      }
      out.push_back(s.canonical());
    }
    if (cur.size() == c_max) return;
    for (std::size_t i = start; i < k; ++i) {
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t j) { return adj[i][j]; })) continue;
      cur.push_back(i);
      grow(i + 1);
      cur.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const IsotropicSequence& a, const IsotropicSequence& b) {
    return std::make_pair(a.size(), a.half_fibers) < std::make_pair(b.size(), b.half_fibers);
  });
  return out;
}

std::vector<IsotropicSequence> find_sequences(const CurveGraph& g, std::size_t c_max) {
  const GraphLattice gl = analyze_graph_lattice(g);
  return find_sequences(gl, enumerate_fibrations(gl), c_max);
}

ExtensionResult extend_sequence(const GraphLattice& gl, const std::vector<FibrationClass>& fibrations,
                                const IsotropicSequence& s) {
  const auto violations = validate_sequence(gl, s);
  if (!violations.empty()) throw DomainError("invalid sequence: " + violations.front().message);
  const IsotropicSequence cand = half_fiber_candidates(fibrations);
  ExtensionResult out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    CandidateCheck c;
    c.fibration = cand.fibrations[i];
    c.half_fiber = cand.half_fibers[i];
    c.extends = true;
    for (const auto& f : s.half_fibers) {
      c.pairings.push_back(gl.ambient->pairing(c.half_fiber, f));
      if (c.pairings.back() != 1) c.extends = false;
    }
    if (c.extends) {
      IsotropicSequence e = s;
      e.half_fibers.push_back(c.half_fiber);
      e.fibrations.resize(s.size(), kNoFibration);
      e.fibrations.push_back(c.fibration);
      out.extensions.push_back(e.canonical());
    }
    out.certificate.push_back(std::move(c));
  }
  std::sort(out.extensions.begin(), out.extensions.end(),
            [](const auto& a, const auto& b) { return a.half_fibers < b.half_fibers; });
  return out;
}

std::vector<DegenerateSequence> degenerate_closure(const GraphLattice& gl,
                                                   const std::vector<FibrationClass>& fibrations,
                                                   const IsotropicSequence& s, std::size_t n_target,
                                                   std::size_t limit) {
  if (n_target == 9) throw UnsupportedError("no extension statement is available for n = 9");
  if (n_target < 1 || n_target > 10) throw DomainError("n_target must lie in 1..10");
  if (n_target < s.size()) throw DomainError("n_target is smaller than the sequence length");
  const auto violations = validate_sequence(gl, s);
  if (!violations.empty()) throw DomainError("invalid sequence: " + violations.front().message);

  const IsotropicSequence cand = half_fiber_candidates(fibrations);
  const std::size_t nv = gl.graph.size();
  const IntMatrix& gram = gl.vertex_lattice.gram();

  // Half-fibers in play: those of s first, then the remaining candidates.
  std::vector<IntVector> hf = s.half_fibers;
  std::vector<std::size_t> hf_fib(s.size(), kNoFibration);
  for (std::size_t i = 0; i < s.size() && i < s.fibrations.size(); ++i) hf_fib[i] = s.fibrations[i];
  for (std::size_t i = 0; i < cand.size(); ++i) {
    auto it = std::find(hf.begin(), hf.end(), cand.half_fibers[i]);
    if (it == hf.end()) {
      hf.push_back(cand.half_fibers[i]);
      hf_fib.push_back(cand.fibrations[i]);
    } else if (hf_fib[it - hf.begin()] == kNoFibration) {
      hf_fib[it - hf.begin()] = cand.fibrations[i];
    }
  }
  const std::size_t k = hf.size();
  std::vector<std::vector<Integer>> hh(k, std::vector<Integer>(k));
  std::vector<std::vector<Integer>> hr(k, std::vector<Integer>(nv));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) hh[i][j] = gl.ambient->pairing(hf[i], hf[j]);
    for (std::size_t v = 0; v < nv; ++v) hr[i][v] = gl.ambient->pairing(hf[i], gl.roots[v]);
  }

  struct Block {
    std::size_t hf;
    std::vector<std::size_t> chain;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < s.size(); ++i) blocks.push_back({i, {}});
  std::vector<bool> used(nv, false);
  std::size_t n_now = s.size();

  using Key = std::vector<std::pair<std::size_t, std::vector<std::size_t>>>;
  auto key_of = [&] {
    Key key;
    for (const auto& b : blocks) key.emplace_back(b.hf, b.chain);
    std::sort(key.begin(), key.end());
    return key;
  };
  std::set<Key> visited;
  std::set<Key> found;
  bool stop = false;

  std::function<void()> dfs = [&] {
    if (stop) return;
    if (!visited.insert(key_of()).second) return;
    if (n_now == n_target) {
      found.insert(key_of());
      if (limit && found.size() >= limit) stop = true;
      return;
    }
    // New block: pairing 1 with every half-fiber, 0 with every chain vertex.
    for (std::size_t h = 0; h < k; ++h) {
      bool ok = true;
      for (const auto& b : blocks) {
        if (b.hf == h || hh[h][b.hf] != 1) ok = false;
        for (std::size_t v : b.chain)
          if (hr[h][v] != 0) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      blocks.push_back({h, {}});
      ++n_now;
      dfs();
      --n_now;
      blocks.pop_back();
    }
    // Longer chain in block i.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t v = 0; v < nv; ++v) {
        if (used[v]) continue;
        const auto& chain = blocks[i].chain;
        bool ok = hr[blocks[i].hf][v] == (chain.empty() ? 1 : 0);
        for (std::size_t j = 0; ok && j < blocks.size(); ++j) {
          if (j != i && hr[blocks[j].hf][v] != 0) ok = false;
          for (std::size_t t = 0; ok && t < blocks[j].chain.size(); ++t) {
            const std::size_t w = blocks[j].chain[t];
            const bool linked = j == i && t + 1 == chain.size();
            if (gram(v, w) != (linked ? 1 : 0)) ok = false;
          }
        }
        if (!ok) continue;
        blocks[i].chain.push_back(v);
        used[v] = true;
        ++n_now;
        dfs();
        --n_now;
        used[v] = false;
        blocks[i].chain.pop_back();
      }
    }
  };
  dfs();

  std::vector<DegenerateSequence> out;
  for (const auto& key : found) {
    DegenerateSequence d;
    for (const auto& [h, chain] : key) d.blocks.push_back({hf[h], hf_fib[h], chain});
    out.push_back(d.canonical());
  }
  std::sort(out.begin(), out.end(), [](const DegenerateSequence& a, const DegenerateSequence& b) {
    return std::lexicographical_compare(
        a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
        [](const SequenceBlock& x, const SequenceBlock& y) {
          return std::tie(x.half_fiber, x.chain) < std::tie(y.half_fiber, y.chain);
        });
  });
  return out;
}

IntegralLattice sequence_gram(const GraphLattice& gl, const DegenerateSequence& s) {
  const auto m = s.members(gl);
  IntMatrix g(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g(i, j) = gl.ambient->pairing(m[i], m[j]);
  return IntegralLattice(g);
}

IntegralLattice sequence_gram(const GraphLattice& gl, const IsotropicSequence& s) {
  return sequence_gram(gl, DegenerateSequence::from(s));
}

IntegralLattice sequence_gram(std::size_t c) {
  IntMatrix g(c, c, Integer(1));
  for (std::size_t i = 0; i < c; ++i) g(i, i) = 0;
  return IntegralLattice(g);
}

}  // namespace enriques
