#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Mat submatrix(const Mat& m, const std::vector<std::size_t>& idx) {
  Mat out(idx.size(), Vec(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = m[idx[i]][idx[j]];
  return out;
}

std::int64_t cofactor_determinant(const Mat& m) {
  const std::size_t n = m.size();
  if (n > 8) throw std::invalid_argument("cofactor expansion limited to n <= 8");
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const std::int64_t sign = j % 2 == 0 ? 1 : -1;
    det += sign * m[0][j] * cofactor_determinant(minor);
  }
  return det;
}

std::int64_t bareiss_determinant(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * static_cast<std::int64_t>(a[n - 1][n - 1]);
}

FibrationCount count_fibrations(const Mat& g, std::int64_t bound) {
  const std::size_t n = g.size();
  // Visit vertices in BFS order so that rows close early.
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t v = queue[h];
      order.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && w != v && g[v][w] != 0) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // A class c >= 0 is nef and isotropic iff c.R_j = 0 on its support: then
  // c^2 = sum c_j (c.R_j) = 0 and off-support pairings are sums of c_k G_jk >= 0.
  std::set<Vec> rays;
  Vec c(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    // Prune: a supported row that can no longer reach 0.
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      std::int64_t fixed = 0, slack = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (pos[k] < depth)
          fixed += g[j][k] * c[k];
        else if (k != j)
          slack += g[j][k] * bound;
      }
      if (fixed > 0 || fixed + slack < 0) return;
    }
    if (depth == n) {
      bool any = false;
      for (auto x : c) any = any || x != 0;
      if (!any) return;
      for (std::size_t j = 0; j < n; ++j) {
        if (c[j] == 0) continue;
        std::int64_t p = 0;
        for (std::size_t k = 0; k < n; ++k) p += g[j][k] * c[k];
        if (p != 0) return;
      }
      std::int64_t d = 0;
      for (auto x : c) d = std::gcd(d, x);
      Vec prim = c;
      for (auto& x : prim) x /= d;
      rays.insert(prim);
      return;
    }
    const std::size_t v = order[depth];
    for (std::int64_t a = 0; a <= bound; ++a) {
      c[v] = a;
      rec(depth + 1);
    }
    c[v] = 0;
  };
  rec(0);

  FibrationCount out;
  out.rays = rays.size();
  std::vector<Vec> list(rays.begin(), rays.end());
  std::vector<std::size_t> parent(list.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = a + 1; b < list.size(); ++b) {
      std::int64_t p = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p += list[a][i] * g[i][j] * list[b][j];
      if (p == 0) parent[find(a)] = find(b);
    }
  std::set<std::size_t> roots;
  for (std::size_t a = 0; a < list.size(); ++a)
    if (roots.insert(find(a)).second) out.ray_representatives.push_back(list[a]);
  out.fibrations = roots.size();
  return out;
}

namespace {

// All x with x^T A x = target, by Fincke-Pohst enumeration on the Cholesky
// factor; candidates are confirmed in exact arithmetic.
std::vector<Vec> short_vectors(const Mat& a, std::int64_t target) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  // q[i][i] = d_i, q[i][j] = mu_ij (j > i): A = sum_i d_i (x_i + sum_j mu_ij x_j)^2.
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<double>(a[i][j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] <= 1e-12) return {};
    q[i][i] = m[i][i];
    for (std::size_t j = i + 1; j < n; ++j) q[i][j] = m[i][j] / m[i][i];
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) {
        m[k][l] -= q[i][k] * q[i][l] * q[i][i];
        m[l][k] = m[k][l];
      }
  }
  std::vector<Vec> out;
  Vec x(n, 0);
  const double bound = static_cast<double>(target) + 1e-6;
  std::function<void(std::size_t, double)> rec = [&](std::size_t level, double used) {
    const std::size_t i = level;
    double center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<double>(x[j]);
    const double room = (bound - used) / q[i][i];
    if (room < 0) return;
    const double r = std::sqrt(room);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - r - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(center + r + 1e-9));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[i] = v;
      const double t = static_cast<double>(v) - center;
      const double next = used + q[i][i] * t * t;
      if (next > bound) continue;
      if (i == 0) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) s += x[k] * a[k][l] * x[l];
        if (s == target) out.push_back(x);
      } else {
        rec(i - 1, next);
      }
    }
    x[i] = 0;
  };
  if (n > 0) rec(n - 1, 0.0);
  return out;
}

std::int64_t rank_of(std::vector<std::vector<double>> rows) {
  std::int64_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<std::int64_t>(rows.size()); ++c) {
    std::size_t p = r;
    for (std::size_t i = r; i < rows.size(); ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[p][c])) p = i;
    if (std::abs(rows[p][c]) < 1e-9) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(r)) continue;
      const double f = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::string root_system_name(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return "0";
  const auto roots = short_vectors(a, 2);
  if (roots.empty()) return "";
  auto pairing = [&](const Vec& u, const Vec& v) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) s += u[k] * a[k][l] * v[l];
    return s;
  };
  std::vector<std::size_t> comp(roots.size(), roots.size());
  std::vector<std::string> names;
  std::size_t total_rank = 0;
  for (std::size_t s = 0; s < roots.size(); ++s) {
    if (comp[s] != roots.size()) continue;
    std::vector<std::size_t> members{s};
    comp[s] = s;
    for (std::size_t h = 0; h < members.size(); ++h)
      for (std::size_t t = 0; t < roots.size(); ++t)
        if (comp[t] == roots.size() && pairing(roots[members[h]], roots[t]) != 0) {
          comp[t] = s;
          members.push_back(t);
        }
    std::vector<std::vector<double>> rows;
    for (std::size_t i : members) rows.emplace_back(roots[i].begin(), roots[i].end());
    const auto r = static_cast<std::size_t>(rank_of(rows));
    const std::size_t count = members.size();
    total_rank += r;
    std::string name;
    if (count == r * (r + 1)) name = "A" + std::to_string(r);
    if (r >= 4 && count == 2 * r * (r - 1)) name = "D" + std::to_string(r);
    if (r == 6 && count == 72) name = "E6";
    if (r == 7 && count == 126) name = "E7";
    if (r == 8 && count == 240) name = "E8";
    if (name.empty()) name = "?" + std::to_string(r) + ":" + std::to_string(count);
    names.push_back(name);
  }
  if (total_rank != n) names.push_back("rank-deficit");
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : "+") + s;
  return out;
}

std::size_t count_index2_even_glue(const Mat& g) {
  const std::size_t n = g.size();
  if (n > 20) throw std::invalid_argument("too many coordinates for exhaustive glue search");
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    Vec a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = mask >> i & 1U;
    bool ok = true;
    std::int64_t sq = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::int64_t row = 0;
      for (std::size_t j = 0; j < n; ++j) row += g[i][j] * a[j];
      if (row % 2 != 0) ok = false;
      sq += a[i] * row;
    }
    if (ok && sq % 8 == 0) ++count;
  }
  return count;
}

BasisChoice smallest_basis(const Mat& g, std::size_t k) {
  const std::size_t n = g.size();
  BasisChoice best;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      const std::int64_t d = std::abs(bareiss_determinant(submatrix(g, idx)));
      if (d != 0 && (best.abs_det == 0 || d < best.abs_det)) {
        best.abs_det = d;
        best.vertices = idx;
      }
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace oracle
