#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "enriques/catalog.hpp"
#include "enriques/fibrations.hpp"
#include "enriques/graph_lattice.hpp"
#include "enriques/linalg.hpp"
#include "enriques/sequences.hpp"
#include "enriques/weyl.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace enriques;

inline Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Integer(rows[i][j]);
  return m;
}

inline IntegralLattice lattice(const std::vector<std::vector<long long>>& rows) {
  return IntegralLattice(int_matrix(rows));
}

inline IntVector ivec(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline oracle::Mat to_oracle(const IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_int64(m(i, j));
  return out;
}

inline IntMatrix from_oracle(const oracle::Mat& m) {
  IntMatrix out(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = Integer(m[i][j]);
  return out;
}

// Analyzed catalog graph, computed once per test binary.
struct Surface {
  CatalogEntry entry;
  GraphLattice lattice;
  std::vector<FibrationClass> fibrations;
};

inline const Surface& surface(const std::string& name) {
  static std::map<std::string, Surface> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  Surface s;
  s.entry = catalog(name);
  s.lattice = analyze_graph_lattice(s.entry.graph);
  s.fibrations = enumerate_fibrations(s.lattice);
  return cache.emplace(name, std::move(s)).first->second;
}

inline std::vector<std::size_t> fiber_at(const GraphLattice& gl, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> out;
  for (auto l : labels) out.push_back(gl.graph.index_of(l));
  return out;
}

// Random effective class of nonnegative square: a multiple of a fibration
// class plus a random nonnegative combination of curves, rejection-sampled.
inline IntVector random_effective_class(const Surface& s, std::mt19937_64& rng, IntVector* vertex_coeffs = nullptr) {
  const std::size_t n = s.entry.graph.size();
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_int_distribution<int> mult(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, s.fibrations.size() - 1);
  while (true) {
    IntVector coeffs(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      if (small(rng) == 0) coeffs[i] = small(rng);
    // add whole reducible fibers, which are effective and isotropic
    for (int k = mult(rng); k > 0; --k) {
      const auto& f = s.fibrations[pick(rng)];
      const auto& d = f.fibers.front();
      coeffs = add(coeffs, d.null_class(n));
    }
    if (is_zero(coeffs)) continue;
    const IntVector v = s.lattice.to_ambient(coeffs);
    if (s.lattice.ambient->pairing(v, v) < 0) continue;
    if (vertex_coeffs) *vertex_coeffs = coeffs;
    return v;
  }
}

inline const std::vector<std::string>& catalog_list() { return catalog_names(); }

}  // namespace testing_support
