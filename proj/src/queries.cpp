#include "mloc/queries.hpp"

#include <algorithm>

namespace mloc {

Verdict is_full(const SimplicialComplex& X, std::span<const Simplex> subcomplex) {
  Verdict out = Verdict::pass("is_full");
  ScopedTimer timer(out.stats);
  std::vector<Simplex> closure;
  std::vector<Vertex> verts;
  for (const Simplex& s : subcomplex) {
    if (!X.contains(s)) {
      throw Error(ErrorCode::SimplexNotPresent, "subcomplex simplex not in the complex", s.to_vector());
    }
    const unsigned full = (1u << s.size()) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      closure.push_back(Simplex(std::span<const Vertex>(face)));
    }
    verts.insert(verts.end(), s.begin(), s.end());
  }
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  const Relabeled spanned = span(X, verts);
  std::vector<Simplex> missing;
  for (int dim = 1; dim <= kMaxDimension; ++dim) {
    for (const Simplex& s : spanned.complex.simplices(dim)) {
      const auto parent = spanned.to_parent_ids(s.vertices());
      const Simplex ps{std::span<const Vertex>(parent)};
      if (!std::binary_search(closure.begin(), closure.end(), ps)) missing.push_back(ps);
    }
  }
  out.stats.counts["span_simplices"] = 0;
  for (int dim = 0; dim <= kMaxDimension; ++dim) {
    out.stats.counts["span_simplices"] += static_cast<std::int64_t>(spanned.complex.simplex_count(dim));
  }
  if (!missing.empty()) {
    const Simplex first = *std::min_element(missing.begin(), missing.end());
    out.passed = false;
    out.witness = first;
    out.detail = "span contains a simplex the subcomplex lacks";
  }
  return out;
}

Verdict is_full(const SimplicialComplex& X, const Cycle& cycle) {
  std::vector<Simplex> edges;
  const std::size_t n = cycle.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back(Simplex{cycle.vertices[i], cycle.vertices[(i + 1) % n]});
  }
  Verdict v = is_full(X, edges);
  v.check = "is_full_cycle";
  if (!v.passed) v.detail = "chord";
  return v;
}

Verdict is_flag(const SimplicialComplex& X) {
  Verdict out = Verdict::pass("is_flag");
  ScopedTimer timer(out.stats);
  const auto n = static_cast<Vertex>(X.vertex_count());
  auto higher = [&](Vertex v, Vertex above, std::span<const Vertex> pool) {
    std::vector<Vertex> res;
    for (Vertex u : pool) {
      if (u > above && X.adjacent(v, u)) res.push_back(u);
    }
    return res;
  };
  std::int64_t cliques = 0;
  // size-3 pass, then size-4, then size-5: the first hit is the minimal witness
  for (int size = 3; size <= 5; ++size) {
    for (Vertex a = 0; a < n; ++a) {
      std::vector<Vertex> na;
      for (Vertex u : X.neighbors(a)) {
        if (u > a) na.push_back(u);
      }
      for (Vertex b : na) {
        const auto nab = higher(b, b, na);
        for (Vertex c : nab) {
          if (size == 3) {
            ++cliques;
            if (!X.contains(Simplex{a, b, c})) {
              out.stats.counts["cliques_checked"] = cliques;
              return Verdict::fail("is_flag", Clique{{a, b, c}}, "3-clique spans no 2-simplex");
            }
            continue;
          }
          const auto nabc = higher(c, c, nab);
          for (Vertex d : nabc) {
            if (size == 4) {
              ++cliques;
              if (!X.contains(Simplex{a, b, c, d})) {
                out.stats.counts["cliques_checked"] = cliques;
                return Verdict::fail("is_flag", Clique{{a, b, c, d}}, "4-clique spans no 3-simplex");
              }
              continue;
            }
            const auto nabcd = higher(d, d, nabc);
            if (!nabcd.empty()) {
              out.stats.counts["cliques_checked"] = cliques + 1;
              return Verdict::fail("is_flag", Clique{{a, b, c, d, nabcd.front()}},
                                   "5-clique; simplices above dimension 3 are not stored");
            }
          }
        }
      }
    }
  }
  out.stats.counts["cliques_checked"] = cliques;
  return out;
}

namespace detail {

std::vector<std::vector<Vertex>> chordless_cycles(const std::vector<std::vector<Vertex>>& step,
                                                  const std::function<bool(Vertex, Vertex)>& chord,
                                                  int min_len, int max_len) {
  std::vector<std::vector<Vertex>> found;
  const auto n = static_cast<Vertex>(step.size());
  std::vector<Vertex> path;
  std::vector<char> on_path(step.size(), 0);

  auto adjacent_step = [&](Vertex a, Vertex b) {
    return std::binary_search(step[a].begin(), step[a].end(), b);
  };

  // path = p0 .. pj with p0 the least vertex; extends from pj
  auto extend = [&](auto&& self) -> void {
    const Vertex s = path.front();
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    for (Vertex v : step[last]) {
      if (v <= s || on_path[v]) continue;
      bool blocked = false;
      for (int i = 1; i + 1 < len; ++i) {
        if (chord(v, path[i])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (len >= 2 && chord(v, s)) {
        // closes (p0 .. pj, v); v ~ p0 must be a cycle edge, not a chord
        if (!adjacent_step(v, s)) continue;
        const int cyc = len + 1;
        if (cyc >= 4 && cyc >= min_len && cyc <= max_len && path[1] < v) {
          auto c = path;
          c.push_back(v);
          found.push_back(std::move(c));
        }
        continue;
      }
      if (len + 2 > max_len) continue;
      path.push_back(v);
      on_path[v] = 1;
      self(self);
      on_path[v] = 0;
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

}  // namespace detail

std::vector<Cycle> full_cycles(const SimplicialComplex& X, int min_len, int max_len, const Limits& limits) {
  if (min_len < 4 || min_len > max_len) {
    throw Error(ErrorCode::InvalidArgument, "cycle length range must satisfy 4 <= min <= max");
  }
  if (max_len > limits.max_cycle_length) {
    throw Error(ErrorCode::BoundExceeded, "cycle length " + std::to_string(max_len) +
                                              " above the cap " + std::to_string(limits.max_cycle_length));
  }
  std::vector<std::vector<Vertex>> adj(X.vertex_count());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const auto row = X.neighbors(static_cast<Vertex>(v));
    adj[v].assign(row.begin(), row.end());
  }
  auto cycles = detail::chordless_cycles(adj, [&](Vertex a, Vertex b) { return X.adjacent(a, b); },
                                         min_len, max_len);
  std::vector<Cycle> out;
  out.reserve(cycles.size());
  for (auto& c : cycles) out.push_back(Cycle{std::move(c), true});
  return out;
}

}  // namespace mloc
