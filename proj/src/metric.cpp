#include "mloc/metric.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mloc/curvature.hpp"
#include "mloc/parallel.hpp"

namespace mloc {

DistanceField distances(const SimplicialComplex& X, Vertex base) {
  if (!X.contains_vertex(base)) {
    throw Error(ErrorCode::InvalidArgument, "base vertex not in the complex", {base});
  }
  DistanceField field{base, std::vector<int>(X.vertex_count(), kUnreachable)};
  std::deque<Vertex> queue{base};
  field.dist[base] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : X.neighbors(v)) {
      if (field.dist[u] == kUnreachable) {
        field.dist[u] = field.dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return field;
}

std::vector<std::vector<int>> all_pairs_distances(const SimplicialComplex& X) {
  return parallel_map(X.vertex_count(),
                      [&](std::size_t v) { return distances(X, static_cast<Vertex>(v)).dist; });
}

namespace {

std::vector<Vertex> select(const DistanceField& d, auto pred) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < d.dist.size(); ++v) {
    if (d.dist[v] != kUnreachable && pred(d.dist[v])) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

void require_radius(int radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
}

}  // namespace

std::vector<Vertex> ball(const SimplicialComplex& X, Vertex v, int radius) {
  require_radius(radius);
  return select(distances(X, v), [&](int d) { return d <= radius; });
}

std::vector<Vertex> sphere(const SimplicialComplex& X, Vertex v, int radius) {
  require_radius(radius);
  return select(distances(X, v), [&](int d) { return d == radius; });
}

std::vector<Vertex> LayeredInterval::vertices() const {
  std::vector<Vertex> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LayeredInterval layered(const std::vector<int>& d_from, const std::vector<int>& d_to, Vertex from, Vertex to) {
  if (d_from[to] == kUnreachable) {
    throw Error(ErrorCode::Disconnected, "interval endpoints lie in different components", {from, to});
  }
  LayeredInterval out{from, to, d_from[to], {}};
  out.layers.resize(static_cast<std::size_t>(out.n) + 1);
  for (std::size_t v = 0; v < d_from.size(); ++v) {
    if (d_from[v] == kUnreachable || d_to[v] == kUnreachable) continue;
    if (d_from[v] + d_to[v] == out.n) out.layers[d_from[v]].push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

LayeredInterval interval(const SimplicialComplex& X, Vertex from, Vertex to) {
  const auto a = distances(X, from);
  if (!X.contains_vertex(to)) throw Error(ErrorCode::InvalidArgument, "endpoint not in the complex", {to});
  return layered(a.dist, distances(X, to).dist, from, to);
}

ThinnessReport interval_thinness(const std::vector<std::vector<int>>& dist, Vertex from, Vertex to) {
  const LayeredInterval I = layered(dist[from], dist[to], from, to);
  ThinnessReport out;
  out.pair = {from, from};
  for (std::size_t k = 0; k < I.layers.size(); ++k) {
    const auto& layer = I.layers[k];
    for (std::size_t a = 0; a < layer.size(); ++a) {
      for (std::size_t b = a + 1; b < layer.size(); ++b) {
        const int d = dist[layer[a]][layer[b]];
        if (d > out.thinness) {
          out.thinness = d;
          out.layer = static_cast<int>(k);
          out.pair = {layer[a], layer[b]};
        }
      }
    }
  }
  return out;
}

ThinnessReport interval_thinness(const SimplicialComplex& X, Vertex from, Vertex to) {
  const LayeredInterval I = interval(X, from, to);
  // distances are only needed from interval vertices
  std::vector<std::vector<int>> dist(X.vertex_count());
  dist[from] = distances(X, from).dist;
  dist[to] = distances(X, to).dist;
  for (Vertex v : I.vertices()) {
    if (dist[v].empty()) dist[v] = distances(X, v).dist;
  }
  return interval_thinness(dist, from, to);
}

namespace {

bool has_triangle_vertex_in_ball(const SimplicialComplex& X, const DistanceField& d, Vertex a, Vertex b, int i) {
  const std::array<Vertex, 2> e{a, b};
  for (Vertex t : X.common_neighbors(e)) {
    if (d[t] <= i && X.contains(Simplex{a, b, t})) return true;
  }
  return false;
}

std::vector<Vertex> link_in_ball(const SimplicialComplex& X, const DistanceField& d, Vertex v, int i) {
  std::vector<Vertex> out;
  for (Vertex u : X.neighbors(v)) {
    if (d[u] <= i) out.push_back(u);
  }
  return out;
}

bool vertex_pair_ok(const SimplicialComplex& X, std::span<const Vertex> candidates, Vertex u, Vertex w) {
  if (X.adjacent(u, w)) return true;
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](Vertex t) { return X.adjacent(t, u) && X.adjacent(t, w); });
}

std::string condition_name(SDCondition c) { return c == SDCondition::Triangle ? "(T)" : "(V)"; }

}  // namespace

SDReport check_sd_prime(const SimplicialComplex& X, Vertex base, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "SD' radius must be nonnegative");
  SDReport report;
  report.base = base;
  report.max_radius = n;
  report.verdict = Verdict::pass("sd_prime");
  ScopedTimer timer(report.verdict.stats);
  const DistanceField d = distances(X, base);
  auto fail = [&](int i, SDCondition c, ConditionInstance inst) {
    if (report.failed_radius) return;
    report.failed_radius = i;
    report.failed_condition = c;
    report.verdict.passed = false;
    report.verdict.witness = std::move(inst);
    report.verdict.detail = condition_name(c) + " fails at radius " + std::to_string(i);
  };
  std::int64_t edges = 0;
  std::int64_t pairs = 0;
  for (int i = 1; i <= n; ++i) {
    SDRadiusStatus status;
    status.radius = i;
    const auto shell = select(d, [&](int r) { return r == i + 1; });
    for (Vertex a : shell) {
      for (Vertex b : X.neighbors(a)) {
        if (b <= a || d[b] != i + 1) continue;
        ++status.edges_checked;
        if (!has_triangle_vertex_in_ball(X, d, a, b, i)) {
          status.triangle_ok = false;
          fail(i, SDCondition::Triangle, ConditionInstance{"sd_triangle", {{"edge", {a, b}}}});
        }
      }
    }
    for (Vertex v : shell) {
      const auto A = link_in_ball(X, d, v, i);
      for (std::size_t p = 0; p < A.size(); ++p) {
        for (std::size_t q = p + 1; q < A.size(); ++q) {
          ++status.pairs_checked;
          if (!vertex_pair_ok(X, A, A[p], A[q])) {
            status.vertex_ok = false;
            fail(i, SDCondition::Vertex,
                 ConditionInstance{"sd_vertex", {{"vertex", {v}}, {"pair", {A[p], A[q]}}}});
          }
        }
      }
    }
    edges += status.edges_checked;
    pairs += status.pairs_checked;
    report.radii.push_back(status);
  }
  report.verdict.stats.counts["edges_checked"] = edges;
  report.verdict.stats.counts["pairs_checked"] = pairs;
  if (report.failed_radius) report.verdict.stats.counts["failed_radius"] = *report.failed_radius;
  return report;
}

bool revalidate_sd_failure(const SimplicialComplex& X, const SDReport& report) {
  if (report.passed() || !report.failed_radius || !report.verdict.witness) return false;
  const auto* inst = std::get_if<ConditionInstance>(&*report.verdict.witness);
  if (!inst) return false;
  const int i = *report.failed_radius;
  const DistanceField d = distances(X, report.base);
  if (*report.failed_condition == SDCondition::Triangle) {
    const auto* e = inst->role("edge");
    if (!e || e->size() != 2) return false;
    const Vertex a = (*e)[0];
    const Vertex b = (*e)[1];
    return X.adjacent(a, b) && d[a] == i + 1 && d[b] == i + 1 && !has_triangle_vertex_in_ball(X, d, a, b, i);
  }
  const auto* v = inst->role("vertex");
  const auto* pair = inst->role("pair");
  if (!v || !pair || v->size() != 1 || pair->size() != 2) return false;
  const Vertex c = (*v)[0];
  const Vertex u = (*pair)[0];
  const Vertex w = (*pair)[1];
  if (d[c] != i + 1 || !X.adjacent(c, u) || !X.adjacent(c, w) || d[u] > i || d[w] > i) return false;
  const auto A = link_in_ball(X, d, c, i);
  return !vertex_pair_ok(X, A, u, w);
}

Verdict check_projection_lemma(const SimplicialComplex& X, Vertex base, int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "projection lemma needs n >= 1");
  if (!is_m_located(X, 8, limits).passed) {
    throw Error(ErrorCode::PreconditionNotMet, "complex is not 8-located");
  }
  if (!is_locally_k_large(X, 5, limits).passed) {
    throw Error(ErrorCode::PreconditionNotMet, "complex is not locally 5-large");
  }
  if (!check_sd_prime(X, base, n).passed()) {
    throw Error(ErrorCode::PreconditionNotMet, "SD'_" + std::to_string(n) + " fails at the base vertex");
  }
  Verdict out = Verdict::pass("projection_lemma");
  ScopedTimer timer(out.stats);
  const DistanceField d = distances(X, base);
  std::int64_t instances = 0;
  auto lower = [&](Vertex x, Vertex y) {
    std::vector<Vertex> out;
    const std::array<Vertex, 2> e{x, y};
    for (Vertex t : X.common_neighbors(e)) {
      if (d[t] <= n - 1 && X.contains(Simplex{x, y, t})) out.push_back(t);
    }
    return out;
  };
  for (Vertex v : select(d, [&](int r) { return r == n + 1; })) {
    const auto A = link_in_ball(X, d, v, n);
    for (std::size_t p = 0; p < A.size(); ++p) {
      for (std::size_t q = p + 1; q < A.size(); ++q) {
        const Vertex y = A[p];
        const Vertex z = A[q];
        if (X.adjacent(y, z)) continue;
        for (Vertex x : A) {
          if (!X.adjacent(x, y) || !X.adjacent(x, z)) continue;
          for (Vertex yp : lower(x, y)) {
            for (Vertex zp : lower(x, z)) {
              ++instances;
              const bool ok = yp != zp && !X.adjacent(yp, z) && !X.adjacent(y, zp) && X.adjacent(yp, zp);
              if (!ok && out.passed) {
                out.passed = false;
                out.witness = ConditionInstance{
                    "projection_lemma",
                    {{"v", {v}}, {"y", {y}}, {"z", {z}}, {"x", {x}}, {"y'", {yp}}, {"z'", {zp}}}};
                out.detail = "projection conclusions fail";
              }
            }
          }
        }
      }
    }
  }
  out.stats.counts["instances"] = instances;
  return out;
}

Delta delta_four_point(const SimplicialComplex& X, const Limits& limits) {
  const std::size_t n = X.vertex_count();
  if (n > limits.max_delta_vertices) {
    throw Error(ErrorCode::TooLarge, "four-point delta over " + std::to_string(n) + " vertices exceeds the cap " +
                                         std::to_string(limits.max_delta_vertices));
  }
  if (n > 0 && !X.is_connected()) throw Error(ErrorCode::Disconnected, "four-point delta needs a connected complex");
  const auto dist = all_pairs_distances(X);
  const auto partial = parallel_map(n, [&](std::size_t ai) {
    Delta best;
    const auto a = static_cast<Vertex>(ai);
    const auto& da = dist[a];
    for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b) {
      const auto& db = dist[b];
      for (Vertex c = b + 1; c < static_cast<Vertex>(n); ++c) {
        const auto& dc = dist[c];
        for (Vertex e = c + 1; e < static_cast<Vertex>(n); ++e) {
          std::array<int, 3> s{da[b] + dc[e], da[c] + db[e], da[e] + db[c]};
          std::sort(s.begin(), s.end());
          const std::int64_t gap = s[2] - s[1];
          if (gap > best.half_units || best.tuple[0] < 0) {
            best.half_units = gap;
            best.tuple = {a, b, c, e};
          }
        }
      }
    }
    return best;
  });
  Delta out;
  for (const Delta& d : partial) {
    if (d.tuple[0] >= 0 && (out.tuple[0] < 0 || d.half_units > out.half_units)) out = d;
  }
  return out;
}

}  // namespace mloc
