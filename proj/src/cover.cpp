#include "mloc/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mloc/curvature.hpp"
#include "mloc/metric.hpp"

namespace mloc {

namespace {

struct Failure {
  std::string invariant;
  std::string detail;
  Witness witness;
};

std::vector<Vertex> flatten(const Witness& w) {
  std::vector<Vertex> out;
  if (const auto* c = std::get_if<ConditionInstance>(&w)) {
    for (const auto& [name, vs] : c->roles) out.insert(out.end(), vs.begin(), vs.end());
  } else if (const auto* s = std::get_if<Simplex>(&w)) {
    out = s->to_vector();
  } else if (const auto* cy = std::get_if<Cycle>(&w)) {
    out = cy->vertices;
  }
  return out;
}

ConditionInstance instance(std::string name, std::vector<std::pair<std::string, std::vector<Vertex>>> roles) {
  return ConditionInstance{std::move(name), std::move(roles)};
}

// (P): BFS distance from the base equals the stage a vertex was created in.
std::optional<Failure> check_p(const CoverState& s) {
  const DistanceField d = distances(s.ball, 0);
  for (std::size_t v = 0; v < s.ball.vertex_count(); ++v) {
    const auto expected = static_cast<int>(s.stage_of(static_cast<Vertex>(v)));
    if (d.dist[v] != expected) {
      return Failure{"P",
                     "vertex created at stage " + std::to_string(expected) + " lies at distance " +
                         std::to_string(d.dist[v]),
                     instance("cover_P", {{"vertex", {static_cast<Vertex>(v)}}})};
    }
  }
  return std::nullopt;
}

// (Q): B~_i satisfies SD'_{i-1}(O).
std::optional<Failure> check_q(const CoverState& s) {
  const SDReport sd = check_sd_prime(s.ball, 0, s.stage - 1);
  if (sd.passed()) return std::nullopt;
  return Failure{"Q", sd.verdict.detail, *sd.verdict.witness};
}

// (R): f is injective on 1-balls with adjacency reflected both ways, and
// onto the full 1-ball of the image at interior vertices.
std::optional<Failure> check_r(const CoverState& s) {
  const auto& f = s.sheet_map;
  const std::size_t interior = s.stage >= 1 ? s.stage_sizes[s.stage - 1] : 0;
  for (std::size_t i = 0; i < s.ball.vertex_count(); ++i) {
    const auto w = static_cast<Vertex>(i);
    std::vector<Vertex> nb{w};
    for (Vertex u : s.ball.neighbors(w)) nb.push_back(u);
    std::vector<Vertex> images;
    for (Vertex u : nb) images.push_back(f[u]);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (images[a] == images[b]) {
          return Failure{"R", "sheet map not injective on a 1-ball",
                         instance("cover_R_injective", {{"center", {w}}, {"pair", {nb[a], nb[b]}}})};
        }
        if (s.ball.adjacent(nb[a], nb[b]) != s.target.adjacent(images[a], images[b])) {
          return Failure{"R", "1-ball is not isomorphic to the span of its image",
                         instance("cover_R_span", {{"center", {w}}, {"pair", {nb[a], nb[b]}}})};
        }
      }
    }
    if (i < interior && nb.size() != s.target.degree(f[w]) + 1) {
      return Failure{"R", "interior 1-ball does not map onto the full 1-ball",
                     instance("cover_R_onto", {{"center", {w}}})};
    }
  }
  return std::nullopt;
}

void record(CoverState& s, const Failure& failure) {
  if (s.hypotheses_hold) {
    throw Error(ErrorCode::InvariantViolation,
                "(" + failure.invariant + ") fails at stage " + std::to_string(s.stage) + ": " + failure.detail,
                flatten(failure.witness));
  }
  s.diagnostics.push_back(CoverDiagnostic{s.stage, failure.invariant, failure.detail, failure.witness});
}

void assert_invariants(CoverState& s) {
  for (auto* check : {&check_p, &check_q, &check_r}) {
    if (auto failure = (*check)(s)) record(s, *failure);
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::pair<Vertex, Vertex>> edge_list(const SimplicialComplex& X) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Simplex& e : X.simplices(1)) out.emplace_back(e[0], e[1]);
  return out;
}

}  // namespace

std::size_t CoverState::stage_of(Vertex v) const {
  for (std::size_t j = 0; j < stage_sizes.size(); ++j) {
    if (static_cast<std::size_t>(v) < stage_sizes[j]) return j;
  }
  return stage_sizes.size();
}

CoverState init_cover(const SimplicialComplex& X, Vertex base, const Limits& limits) {
  if (!X.contains_vertex(base)) throw Error(ErrorCode::InvalidArgument, "base vertex not in the complex", {base});
  const Verdict flag = is_flag(X);
  if (!flag.passed) throw Error(ErrorCode::NotFlag, "cover construction needs a flag complex", flatten(*flag.witness));
  CoverState s;
  s.target = X;
  s.target_base = base;
  s.limits = limits;
  s.stage = 1;
  if (!is_m_located(X, 8, limits).passed) s.hypothesis_failures.push_back("not 8-located");
  if (!is_locally_k_large(X, 5, limits).passed) s.hypothesis_failures.push_back("not locally 5-large");
  s.hypotheses_hold = s.hypothesis_failures.empty();

  s.sheet_map.push_back(base);
  for (Vertex u : X.neighbors(base)) s.sheet_map.push_back(u);
  std::map<Vertex, Vertex> local;
  for (std::size_t i = 0; i < s.sheet_map.size(); ++i) local[s.sheet_map[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [x, lx] : local) {
    for (Vertex y : X.neighbors(x)) {
      auto it = local.find(y);
      if (it != local.end() && x < y) edges.emplace_back(lx, it->second);
    }
  }
  s.ball = SimplicialComplex::flag_completion(s.sheet_map.size(), edges, false, "cover_ball");
  s.stage_sizes = {1, s.sheet_map.size()};
  assert_invariants(s);
  return s;
}

CoverState expand_ball(const CoverState& state) {
  if (state.stage + 1 > state.limits.max_cover_stage) {
    throw Error(ErrorCode::BoundExceeded, "cover stage " + std::to_string(state.stage + 1) + " above the cap " +
                                              std::to_string(state.limits.max_cover_stage));
  }
  const SimplicialComplex& X = state.target;
  const auto& f = state.sheet_map;
  const Vertex first = static_cast<Vertex>(state.stage_sizes[state.stage - 1]);
  const Vertex last = static_cast<Vertex>(state.stage_sizes[state.stage]);

  // Z in lexicographic order
  std::vector<std::pair<Vertex, Vertex>> Z;
  for (Vertex w = first; w < last; ++w) {
    std::vector<Vertex> seen;
    for (Vertex u : state.ball.neighbors(w)) seen.push_back(f[u]);
    std::sort(seen.begin(), seen.end());
    for (Vertex z : X.neighbors(f[w])) {
      if (!std::binary_search(seen.begin(), seen.end(), z)) Z.emplace_back(w, z);
    }
  }
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < Z.size(); ++i) index[Z[i]] = i;
  UnionFind uf(Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i) {
    const auto [w, z] = Z[i];
    for (Vertex u : state.ball.neighbors(w)) {
      if (u <= w || u >= last) continue;
      auto it = index.find({u, z});
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  // roots are the least member index, so classes come out ordered by representative
  std::map<std::size_t, std::size_t> class_of_root;
  CoverState next = state;
  next.last_classes.clear();
  std::vector<std::size_t> class_of(Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto [it, inserted] = class_of_root.emplace(root, next.last_classes.size());
    if (inserted) {
      ZClass c;
      c.vertex = static_cast<Vertex>(state.ball.vertex_count() + next.last_classes.size());
      next.last_classes.push_back(std::move(c));
    }
    next.last_classes[it->second].members.push_back(Z[i]);
    class_of[i] = it->second;
  }
  const std::size_t total = state.ball.vertex_count() + next.last_classes.size();
  if (total > state.limits.max_cover_vertices) {
    throw Error(ErrorCode::TooLarge, "cover ball would have " + std::to_string(total) + " vertices, above the cap " +
                                         std::to_string(state.limits.max_cover_vertices));
  }

  auto edges = edge_list(state.ball);
  const std::size_t old_edges = edges.size();
  for (std::size_t i = 0; i < Z.size(); ++i) {
    edges.emplace_back(Z[i].first, next.last_classes[class_of[i]].vertex);
  }
  // Z is grouped by base; join classes that share a base and have adjacent z
  for (std::size_t i = 0; i < Z.size();) {
    std::size_t j = i;
    while (j < Z.size() && Z[j].first == Z[i].first) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        if (X.adjacent(Z[a].second, Z[b].second)) {
          edges.emplace_back(next.last_classes[class_of[a]].vertex, next.last_classes[class_of[b]].vertex);
        }
      }
    }
    i = j;
  }
  std::sort(edges.begin() + static_cast<std::ptrdiff_t>(old_edges), edges.end());
  edges.erase(std::unique(edges.begin() + static_cast<std::ptrdiff_t>(old_edges), edges.end()), edges.end());

  next.ball = SimplicialComplex::flag_completion(total, edges, false, "cover_ball");
  for (const ZClass& c : next.last_classes) next.sheet_map.push_back(c.z());
  next.stage = state.stage + 1;
  next.stage_sizes.push_back(total);

  // the old ball must survive unchanged as a full subcomplex
  for (int dim = 1; dim <= kMaxDimension; ++dim) {
    std::size_t count = 0;
    for (const Simplex& s : next.ball.simplices(dim)) {
      if (s[s.size() - 1] < last) ++count;
    }
    if (count != state.ball.simplex_count(dim)) {
      record(next, Failure{"P", "simplices among old vertices changed",
                           instance("cover_P_old", {{"dimension", {dim}}})});
      break;
    }
  }
  assert_invariants(next);
  return next;
}

Verdict check_cover_invariants(const CoverState& state) {
  Verdict out = Verdict::pass("cover_invariants");
  ScopedTimer timer(out.stats);
  for (auto* check : {&check_p, &check_q, &check_r}) {
    if (auto failure = (*check)(state)) {
      out.passed = false;
      out.witness = failure->witness;
      out.detail = "(" + failure->invariant + ") " + failure->detail;
      break;
    }
  }
  out.stats.counts["stage"] = state.stage;
  out.stats.counts["vertices"] = static_cast<std::int64_t>(state.ball.vertex_count());
  return out;
}

Verdict verify_equiv_shortcut(const CoverState& state) {
  Verdict out = Verdict::pass("equiv_shortcut");
  ScopedTimer timer(out.stats);
  std::int64_t pairs = 0;
  std::int64_t via_endpoint = 0;
  std::int64_t via_third = 0;
  const auto& ball = state.ball;
  for (const ZClass& c : state.last_classes) {
    std::vector<Vertex> bases;
    for (const auto& m : c.members) bases.push_back(m.first);
    for (std::size_t a = 0; a < bases.size(); ++a) {
      for (std::size_t b = a + 1; b < bases.size(); ++b) {
        ++pairs;
        const Vertex u = bases[a];
        const Vertex w = bases[b];
        if (ball.adjacent(u, w)) {
          ++via_endpoint;
          continue;
        }
        const bool found = std::any_of(bases.begin(), bases.end(), [&](Vertex y) {
          return ball.adjacent(y, u) && ball.adjacent(y, w);
        });
        if (found) {
          ++via_third;
          continue;
        }
        if (out.passed) {
          out.passed = false;
          out.witness = ConditionInstance{"equiv_shortcut", {{"bases", bases}, {"pair", {u, w}}, {"z", {c.z()}}}};
          out.detail = "class members with no common adjacent base";
        }
      }
    }
  }
  out.stats.counts["classes"] = static_cast<std::int64_t>(state.last_classes.size());
  out.stats.counts["pairs"] = pairs;
  out.stats.counts["shortcut_is_endpoint"] = via_endpoint;
  out.stats.counts["shortcut_is_third_vertex"] = via_third;
  return out;
}

CoverResult build_cover(const SimplicialComplex& X, Vertex base, int radius, const Limits& limits) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "cover radius must be at least 1");
  if (radius > limits.max_cover_stage) {
    throw Error(ErrorCode::BoundExceeded, "cover radius " + std::to_string(radius) + " above the cap " +
                                              std::to_string(limits.max_cover_stage));
  }
  CoverResult result{init_cover(X, base, limits), {}};
  auto summarize = [&](const CoverState& s) {
    result.report.stages.push_back(StageSummary{s.stage, s.ball.vertex_count(), s.ball.edge_count()});
  };
  summarize(result.state);
  while (result.state.stage < radius) {
    result.state = expand_ball(result.state);
    summarize(result.state);
  }
  const CoverState& s = result.state;
  CoverReport& r = result.report;
  r.fixed_point = s.at_fixed_point() || (s.stage == 1 && s.ball.vertex_count() == X.vertex_count());
  r.sd_prime = check_sd_prime(s.ball, 0, s.stage - 1).verdict;
  if (auto failure = check_r(s)) {
    r.local_isomorphism = Verdict::fail("local_isomorphism", failure->witness, failure->detail);
  } else {
    r.local_isomorphism = Verdict::pass("local_isomorphism");
  }
  std::vector<Vertex> interior(s.stage_sizes[s.stage - 1]);
  std::iota(interior.begin(), interior.end(), 0);
  const Relabeled inner = span(s.ball, interior);
  r.interior_m_located = is_m_located(inner.complex, 8, limits);
  r.interior_locally_large = is_locally_k_large(inner.complex, 5, limits);
  return result;
}

bool sheet_map_is_isomorphism(const CoverState& state) {
  const auto& f = state.sheet_map;
  if (f.size() != state.target.vertex_count()) return false;
  std::vector<char> hit(f.size(), 0);
  for (Vertex v : f) {
    if (!state.target.contains_vertex(v) || hit[v]) return false;
    hit[v] = 1;
  }
  for (int dim = 1; dim <= kMaxDimension; ++dim) {
    if (state.ball.simplex_count(dim) != state.target.simplex_count(dim)) return false;
    for (const Simplex& s : state.ball.simplices(dim)) {
      std::vector<Vertex> img;
      for (Vertex v : s) img.push_back(f[v]);
      if (!state.target.contains(Simplex(std::span<const Vertex>(img)))) return false;
    }
  }
  return true;
}

std::vector<std::size_t> fiber_sizes(const CoverState& state) {
  std::vector<std::size_t> out(state.target.vertex_count(), 0);
  for (Vertex v : state.sheet_map) ++out[v];
  return out;
}

}  // namespace mloc
