#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share nothing with src/ beyond the SimplicialComplex container.

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mloc/complex.hpp"

#ifndef MLOC_FIXTURE_DIR
#define MLOC_FIXTURE_DIR "tests/fixtures"
#endif

namespace oracle {

using mloc::SimplicialComplex;
using mloc::Vertex;

inline std::string fixture(const std::string& name) { return std::string(MLOC_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::vector<char>> adjacency_matrix(const SimplicialComplex& X) {
  const std::size_t n = X.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : X.simplices(1)) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
  return adj;
}

/// Floyd-Warshall; INT_MAX / 4 marks unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const SimplicialComplex& X) {
  const std::size_t n = X.vertex_count();
  const int inf = INT_MAX / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : X.simplices(1)) d[e[0]][e[1]] = d[e[1]][e[0]] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Rotation/reflection-minimal form, by trying all 2n readings.
inline std::vector<Vertex> canonical(const std::vector<Vertex>& c) {
  std::vector<Vertex> best;
  const std::size_t n = c.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (int dir : {1, -1}) {
      std::vector<Vertex> r;
      for (std::size_t i = 0; i < n; ++i) {
        r.push_back(c[(s + n + dir * static_cast<long>(i) % static_cast<long>(n)) % n]);
      }
      if (best.empty() || r < best) best = r;
    }
  }
  return best;
}

/// Every chordless cycle of length in [lo, hi], found by extending all
/// simple paths and deduplicating canonical forms.
inline std::set<std::vector<Vertex>> full_cycles(const SimplicialComplex& X, int lo, int hi) {
  const auto adj = adjacency_matrix(X);
  const auto n = static_cast<Vertex>(X.vertex_count());
  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  auto chordless = [&](const std::vector<Vertex>& c) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (adj[c[i]][c[j]]) return false;
      }
    }
    return true;
  };
  auto dfs = [&](auto&& self) -> void {
    const int len = static_cast<int>(path.size());
    if (len >= lo && len >= 4 && adj[path.back()][path.front()] && chordless(path)) out.insert(canonical(path));
    if (len == hi) return;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || !adj[path.back()][v] || v < path.front()) continue;
      used[v] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      used[v] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used[s] = 1;
    dfs(dfs);
    used[s] = 0;
  }
  return out;
}

struct OracleWheel {
  Vertex center;
  std::vector<Vertex> rim;  // canonical
};

/// Wheels: full cycles of X whose vertices are all adjacent to a center
/// that spans a triangle with every rim edge.
inline std::vector<OracleWheel> wheels(const SimplicialComplex& X, int lo, int hi) {
  std::vector<OracleWheel> out;
  const auto cycles = oracle::full_cycles(X, lo, hi);
  for (Vertex c = 0; c < static_cast<Vertex>(X.vertex_count()); ++c) {
    for (const auto& rim : cycles) {
      bool ok = std::find(rim.begin(), rim.end(), c) == rim.end();
      for (std::size_t i = 0; i < rim.size() && ok; ++i) {
        ok = X.contains(mloc::Simplex{c, rim[i], rim[(i + 1) % rim.size()]});
      }
      if (ok) out.push_back({c, rim});
    }
  }
  return out;
}

/// A dwheel identified by its two wheels (unordered) and the shared vertex.
using DWheelKey = std::tuple<Vertex, std::vector<Vertex>, Vertex, std::vector<Vertex>, Vertex>;

inline DWheelKey dwheel_key(Vertex c1, std::vector<Vertex> r1, Vertex c2, std::vector<Vertex> r2, Vertex w) {
  r1 = canonical(r1);
  r2 = canonical(r2);
  if (std::tie(c2, r2) < std::tie(c1, r1)) {
    std::swap(c1, c2);
    std::swap(r1, r2);
  }
  return {c1, r1, c2, r2, w};
}

/// All dwheels with boundary length <= max_boundary, as unordered keys,
/// with their boundary lengths.
inline std::vector<std::pair<DWheelKey, int>> dwheels(const SimplicialComplex& X, int max_boundary) {
  const auto ws = oracle::wheels(X, 4, max_boundary);
  std::set<DWheelKey> seen;
  std::vector<std::pair<DWheelKey, int>> out;
  auto neighbors_on = [](const std::vector<Vertex>& rim, Vertex v) {
    const auto it = std::find(rim.begin(), rim.end(), v);
    const std::size_t n = rim.size();
    const auto i = static_cast<std::size_t>(it - rim.begin());
    return std::array<Vertex, 2>{rim[(i + n - 1) % n], rim[(i + 1) % n]};
  };
  auto contains = [](const std::vector<Vertex>& rim, Vertex v) {
    return std::find(rim.begin(), rim.end(), v) != rim.end();
  };
  for (const auto& A : ws) {
    for (const auto& B : ws) {
      if (A.center == B.center || !contains(A.rim, B.center) || !contains(B.rim, A.center)) continue;
      const auto na = neighbors_on(A.rim, B.center);
      const auto nb = neighbors_on(B.rim, A.center);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          if (na[i] != nb[j]) continue;
          const Vertex w = na[i];
          const Vertex v1 = na[1 - i];
          const Vertex v1p = nb[1 - j];
          int boundary;
          const int k = static_cast<int>(A.rim.size());
          const int l = static_cast<int>(B.rim.size());
          if (v1 == v1p) {
            boundary = k + l - 4;
          } else if (X.adjacent(v1, v1p)) {
            boundary = k + l - 3;
          } else {
            continue;
          }
          if (boundary > max_boundary) continue;
          auto key = dwheel_key(A.center, A.rim, B.center, B.rim, w);
          if (seen.insert(key).second) out.emplace_back(key, boundary);
        }
      }
    }
  }
  return out;
}

/// Four-point delta in half units via Gromov products at every basepoint:
/// max over (w, x, y, z) of min((x|z)_w, (y|z)_w) - (x|y)_w, doubled.
inline std::int64_t delta_gromov_products(const SimplicialComplex& X) {
  const auto d = floyd_warshall(X);
  const std::size_t n = X.vertex_count();
  // doubled Gromov product: d(x,w) + d(y,w) - d(x,y)
  auto gp2 = [&](std::size_t x, std::size_t y, std::size_t w) { return d[x][w] + d[y][w] - d[x][y]; };
  std::int64_t best = 0;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const std::int64_t gap = std::min(gp2(x, z, w), gp2(y, z, w)) - gp2(x, y, w);
          best = std::max(best, gap);
        }
      }
    }
  }
  // the doubled-product gap is 2 * delta; delta in half units is the gap itself
  return best;
}

/// 4-wheel search straight from the definition: a center and a chordless
/// 4-cycle of neighbors with every rim triangle present.
inline bool has_4_wheel(const SimplicialComplex& X) {
  const auto adj = adjacency_matrix(X);
  for (Vertex c = 0; c < static_cast<Vertex>(X.vertex_count()); ++c) {
    const auto nb = X.neighbors(c);
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        for (Vertex e : nb) {
          for (Vertex f : nb) {
            if (a == e || b == f || a == b || a == f || b == e || e == f) continue;
            if (!adj[a][b] || !adj[b][e] || !adj[e][f] || !adj[f][a]) continue;
            if (adj[a][e] || adj[b][f]) continue;
            if (X.contains(mloc::Simplex{c, a, b}) && X.contains(mloc::Simplex{c, b, e}) &&
                X.contains(mloc::Simplex{c, e, f}) && X.contains(mloc::Simplex{c, f, a})) {
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace oracle
