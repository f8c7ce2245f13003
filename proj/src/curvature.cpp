#include "mloc/curvature.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "mloc/parallel.hpp"

namespace mloc {

namespace {

std::string type_key(const DWheel& dw) {
  return "type_" + std::to_string(dw.k()) + "_" + std::to_string(dw.l());
}

std::string join(std::span<const Vertex> vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

}  // namespace

Verdict is_k_large(const SimplicialComplex& X, int k, const Limits& limits) {
  if (k < 4) throw Error(ErrorCode::InvalidArgument, "k-largeness needs k >= 4");
  Verdict out = Verdict::pass("is_k_large");
  ScopedTimer timer(out.stats);
  out.stats.counts["k"] = k;
  Verdict flag = is_flag(X);
  if (!flag.passed) {
    flag.check = "is_k_large";
    flag.detail = "not flag: " + flag.detail;
    flag.stats.counts["k"] = k;
    return flag;
  }
  if (k > 4) {
    const auto cycles = full_cycles(X, 4, k - 1, limits);
    out.stats.counts["full_cycles_below_k"] = static_cast<std::int64_t>(cycles.size());
    if (!cycles.empty()) {
      out.passed = false;
      out.witness = cycles.front();
      out.detail = "full " + std::to_string(cycles.front().length()) + "-cycle";
    }
  }
  return out;
}

Verdict is_locally_k_large(const SimplicialComplex& X, int k, const Limits& limits) {
  if (k < 4) throw Error(ErrorCode::InvalidArgument, "k-largeness needs k >= 4");
  Verdict out = Verdict::pass("is_locally_k_large");
  ScopedTimer timer(out.stats);
  out.stats.counts["k"] = k;
  std::vector<Simplex> all;
  for (int dim = 0; dim <= kMaxDimension; ++dim) {
    all.insert(all.end(), X.simplices(dim).begin(), X.simplices(dim).end());
  }
  struct LinkResult {
    bool ok = true;
    std::optional<Witness> witness;
    std::string detail;
  };
  const auto results = parallel_map(all.size(), [&](std::size_t i) {
    const Relabeled L = link(X, all[i]);
    Verdict v = is_k_large(L.complex, k, limits);
    LinkResult r;
    if (v.passed) return r;
    r.ok = false;
    r.detail = v.detail;
    if (const auto* c = std::get_if<Cycle>(&*v.witness)) {
      const auto rim = L.to_parent_ids(c->vertices);
      if (all[i].size() == 1) {
        r.witness = Wheel{all[i][0], rim};
      } else {
        r.witness = ConditionInstance{"link_cycle", {{"simplex", all[i].to_vector()}, {"cycle", rim}}};
      }
    } else if (const auto* q = std::get_if<Clique>(&*v.witness)) {
      r.witness = ConditionInstance{
          "link_not_flag", {{"simplex", all[i].to_vector()}, {"clique", L.to_parent_ids(q->vertices)}}};
    }
    return r;
  });
  out.stats.counts["links_checked"] = static_cast<std::int64_t>(all.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok) {
      out.passed = false;
      out.witness = results[i].witness;
      out.detail = "link of [" + join(all[i].vertices()) + "] is not " + std::to_string(k) +
                   "-large: " + results[i].detail;
      break;
    }
  }
  return out;
}

std::vector<Wheel> wheels_at(const SimplicialComplex& X, Vertex center, int min_k, int max_k,
                             const Limits& limits) {
  if (max_k > limits.max_cycle_length) {
    throw Error(ErrorCode::BoundExceeded, "wheel size " + std::to_string(max_k) + " above the cycle cap " +
                                              std::to_string(limits.max_cycle_length));
  }
  min_k = std::max(min_k, 4);
  if (min_k > max_k) return {};
  const Relabeled L = link(X, Simplex{center});
  std::vector<std::vector<Vertex>> step(L.complex.vertex_count());
  for (std::size_t v = 0; v < step.size(); ++v) {
    const auto row = L.complex.neighbors(static_cast<Vertex>(v));
    step[v].assign(row.begin(), row.end());
  }
  // to_parent is increasing, so canonical forms survive the relabeling
  const auto cycles = detail::chordless_cycles(
      step, [&](Vertex a, Vertex b) { return X.adjacent(L.to_parent[a], L.to_parent[b]); }, min_k, max_k);
  std::vector<Wheel> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(Wheel{center, L.to_parent_ids(c)});
  std::sort(out.begin(), out.end(), [](const Wheel& a, const Wheel& b) { return a.rim < b.rim; });
  return out;
}

std::vector<Wheel> wheels(const SimplicialComplex& X, int min_k, int max_k, const Limits& limits) {
  const auto per_center = parallel_map(X.vertex_count(), [&](std::size_t v) {
    return wheels_at(X, static_cast<Vertex>(v), min_k, max_k, limits);
  });
  std::vector<Wheel> out;
  for (const auto& ws : per_center) out.insert(out.end(), ws.begin(), ws.end());
  return out;
}

DWheel canonical_orientation(const DWheel& dw) {
  const bool keep = dw.k() > dw.l() || (dw.k() == dw.l() && dw.apexes[0] < dw.apexes[1]);
  return keep ? dw : dw.swapped();
}

namespace {

// Cycle read starting at index `from`, walking away from index `away`
// (which must be a cyclic neighbor of `from`).
std::vector<Vertex> walk_from(const std::vector<Vertex>& rim, std::size_t from, std::size_t away) {
  const std::size_t n = rim.size();
  const bool forward = (from + 1) % n != away;
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(rim[forward ? (from + i) % n : (from + n - i) % n]);
  }
  return out;
}

auto dwheel_key(const DWheel& dw) {
  auto rim0 = dw.wheel(0).rim;
  return std::make_tuple(dw.apexes[0], canonical_cycle(rim0), dw.apexes[1], dw.shared, dw.rims[0], dw.rims[1]);
}

}  // namespace

std::vector<DWheel> dwheels(const SimplicialComplex& X, int max_boundary, const Limits& limits) {
  // a rim has >= 4 vertices, so k <= max_boundary - l + 4 <= max_boundary
  const int max_k = std::max(4, max_boundary);
  if (max_k > limits.max_cycle_length) {
    throw Error(ErrorCode::BoundExceeded, "dwheel boundary " + std::to_string(max_boundary) +
                                              " needs wheels above the cycle cap " +
                                              std::to_string(limits.max_cycle_length));
  }
  const auto by_center = parallel_map(X.vertex_count(), [&](std::size_t v) {
    return wheels_at(X, static_cast<Vertex>(v), 4, max_k, limits);
  });

  const auto per_apex = parallel_map(X.vertex_count(), [&](std::size_t v0_index) {
    std::vector<DWheel> found;
    const auto v0 = static_cast<Vertex>(v0_index);
    for (const Wheel& A : by_center[v0]) {
      const int k = static_cast<int>(A.size());
      for (std::size_t p = 0; p < A.rim.size(); ++p) {
        const Vertex v0p = A.rim[p];
        const std::size_t n = A.rim.size();
        for (std::size_t side : {(p + n - 1) % n, (p + 1) % n}) {
          const Vertex w = A.rim[side];
          // rim A read as (v0', v1, ..., v_{k-2}, w)
          const auto seq_a = walk_from(A.rim, p, side);
          const std::vector<Vertex> rim_a(seq_a.begin() + 1, seq_a.end() - 1);
          for (const Wheel& B : by_center[v0p]) {
            const int l = static_cast<int>(B.size());
            if (k + l - 4 > max_boundary) continue;
            const auto it = std::find(B.rim.begin(), B.rim.end(), v0);
            if (it == B.rim.end()) continue;
            const auto q = static_cast<std::size_t>(it - B.rim.begin());
            const std::size_t m = B.rim.size();
            std::size_t w_pos;
            if (B.rim[(q + 1) % m] == w) {
              w_pos = (q + 1) % m;
            } else if (B.rim[(q + m - 1) % m] == w) {
              w_pos = (q + m - 1) % m;
            } else {
              continue;
            }
            const auto seq_b = walk_from(B.rim, q, w_pos);
            const std::vector<Vertex> rim_b(seq_b.begin() + 1, seq_b.end() - 1);
            DWheel dw;
            dw.apexes = {v0, v0p};
            dw.shared = w;
            dw.rims = {rim_a, rim_b};
            if (rim_a.front() == rim_b.front()) {
              dw.junction = Junction::Identified;
            } else if (X.adjacent(rim_a.front(), rim_b.front())) {
              dw.junction = Junction::Edge;
            } else {
              continue;
            }
            if (dw.boundary_length() > max_boundary) continue;
            if (canonical_orientation(dw) == dw) found.push_back(std::move(dw));
          }
        }
      }
    }
    return found;
  });

  std::vector<DWheel> out;
  for (const auto& chunk : per_apex) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end(),
            [](const DWheel& a, const DWheel& b) { return dwheel_key(a) < dwheel_key(b); });
  return out;
}

std::vector<Vertex> one_ball_candidates(const SimplicialComplex& X, std::span<const Vertex> A) {
  std::vector<Vertex> out(A.begin(), A.end());
  const auto common = X.common_neighbors(A);
  out.insert(out.end(), common.begin(), common.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Vertex> in_one_ball(const SimplicialComplex& X, std::span<const Vertex> A) {
  if (A.empty()) throw Error(ErrorCode::InvalidArgument, "in_one_ball needs a nonempty vertex set");
  for (Vertex y : one_ball_candidates(X, A)) {
    if (std::all_of(A.begin(), A.end(), [&](Vertex a) { return a == y || X.adjacent(a, y); })) return y;
  }
  return std::nullopt;
}

Verdict is_m_located(const SimplicialComplex& X, int m, const Limits& limits) {
  if (m < 6) throw Error(ErrorCode::InvalidArgument, "m-location needs m >= 6");
  Verdict out = Verdict::pass("is_m_located");
  ScopedTimer timer(out.stats);
  out.stats.counts["m"] = m;
  Verdict flag = is_flag(X);
  if (!flag.passed) {
    flag.check = "is_m_located";
    flag.detail = "not flag: " + flag.detail;
    flag.stats.counts["m"] = m;
    return flag;
  }
  const auto all = dwheels(X, m, limits);
  out.stats.counts["dwheels"] = static_cast<std::int64_t>(all.size());
  for (const DWheel& dw : all) ++out.stats.counts[type_key(dw)];
  for (const DWheel& dw : all) {
    const auto verts = dw.vertex_set();
    if (!in_one_ball(X, verts)) {
      out.passed = false;
      out.witness = dw;
      out.annotations.emplace_back("center_candidates", one_ball_candidates(X, verts));
      out.detail = "(" + std::to_string(dw.k()) + "," + std::to_string(dw.l()) +
                   ")-dwheel of boundary length " + std::to_string(dw.boundary_length()) +
                   " lies in no 1-ball";
      break;
    }
  }
  return out;
}

void verify_covering(std::span<const Vertex> f, const SimplicialComplex& cover, const SimplicialComplex& base) {
  if (f.size() != cover.vertex_count()) {
    throw Error(ErrorCode::NotACovering, "map size differs from the cover's vertex count");
  }
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (!base.contains_vertex(f[v])) {
      throw Error(ErrorCode::NotACovering, "vertex maps outside the base", {static_cast<Vertex>(v)});
    }
  }
  for (int dim = 1; dim <= kMaxDimension; ++dim) {
    for (const Simplex& s : cover.simplices(dim)) {
      std::vector<Vertex> img;
      for (Vertex v : s) img.push_back(f[v]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end() ||
          !base.contains(Simplex(std::span<const Vertex>(img)))) {
        throw Error(ErrorCode::NotACovering, "image of a simplex is not a simplex", s.to_vector());
      }
    }
  }
  for (std::size_t i = 0; i < cover.vertex_count(); ++i) {
    const auto v = static_cast<Vertex>(i);
    std::vector<Vertex> ball{v};
    for (Vertex u : cover.neighbors(v)) ball.push_back(u);
    std::map<Vertex, Vertex> back;
    for (Vertex u : ball) {
      if (!back.emplace(f[u], u).second) {
        throw Error(ErrorCode::NotACovering, "not injective on the 1-ball", {v});
      }
    }
    // every simplex of the base spanned by the image lifts into the ball
    for (const auto& [y, lift] : back) {
      (void)lift;
      for (const Simplex& s : base.star(y)) {
        if (s[0] != y) continue;
        std::vector<Vertex> pre;
        bool inside = true;
        for (Vertex z : s) {
          auto it = back.find(z);
          if (it == back.end()) {
            inside = false;
            break;
          }
          pre.push_back(it->second);
        }
        if (inside && !cover.contains(Simplex(std::span<const Vertex>(pre)))) {
          throw Error(ErrorCode::NotACovering, "1-ball is not isomorphic to the span of its image", {v});
        }
      }
    }
  }
}

Verdict check_covering_preservation(std::span<const Vertex> f, const SimplicialComplex& cover,
                                    const SimplicialComplex& base, int m, int k, const Limits& limits) {
  verify_covering(f, cover, base);
  Verdict out = Verdict::pass("covering_preservation");
  ScopedTimer timer(out.stats);
  const Verdict base_loc = is_m_located(base, m, limits);
  const Verdict cover_loc = is_m_located(cover, m, limits);
  const Verdict base_large = is_locally_k_large(base, k, limits);
  const Verdict cover_large = is_locally_k_large(cover, k, limits);
  out.stats.counts["base_m_located"] = base_loc.passed;
  out.stats.counts["cover_m_located"] = cover_loc.passed;
  out.stats.counts["base_locally_k_large"] = base_large.passed;
  out.stats.counts["cover_locally_k_large"] = cover_large.passed;
  if (base_loc.passed && !cover_loc.passed) {
    out.passed = false;
    out.witness = cover_loc.witness;
    out.detail = "base is " + std::to_string(m) + "-located but the cover is not: " + cover_loc.detail;
  } else if (base_large.passed && !cover_large.passed) {
    out.passed = false;
    out.witness = cover_large.witness;
    out.detail = "base is locally " + std::to_string(k) + "-large but the cover is not: " + cover_large.detail;
  }
  return out;
}

}  // namespace mloc
