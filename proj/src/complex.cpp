#include "mloc/complex.hpp"

#include <algorithm>
#include <queue>

namespace mloc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case ErrorCode::NegativeVertex: return "NegativeVertex";
    case ErrorCode::SimplexNotPresent: return "SimplexNotPresent";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorCode::NotFlag: return "NotFlag";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::LinkNotSphere: return "LinkNotSphere";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::NoFillingPair: return "NoFillingPair";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Simplex

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const Vertex> vertices) {
  if (vertices.size() > 4) {
    throw Error(ErrorCode::DimensionTooHigh,
                "simplex with " + std::to_string(vertices.size()) + " vertices exceeds dimension 3",
                {vertices.begin(), vertices.end()});
  }
  n_ = static_cast<std::uint8_t>(vertices.size());
  std::copy(vertices.begin(), vertices.end(), v_.begin());
  std::sort(v_.begin(), v_.begin() + n_);
  if (n_ > 0 && v_[0] < 0) {
    throw Error(ErrorCode::NegativeVertex, "negative vertex id " + std::to_string(v_[0]));
  }
  if (std::adjacent_find(v_.begin(), v_.begin() + n_) != v_.begin() + n_) {
    throw Error(ErrorCode::DuplicateVertexInSimplex, "repeated vertex in simplex",
                {vertices.begin(), vertices.end()});
  }
}

bool Simplex::contains(Vertex v) const { return std::binary_search(begin(), end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

Simplex Simplex::with(Vertex v) const {
  std::array<Vertex, 5> buf{};
  std::copy(begin(), end(), buf.begin());
  buf[n_] = v;
  return Simplex(std::span<const Vertex>(buf.data(), n_ + 1));
}

Simplex Simplex::without(Vertex v) const {
  std::array<Vertex, 4> buf{};
  std::size_t k = 0;
  for (Vertex u : *this) {
    if (u != v) buf[k++] = u;
  }
  return Simplex(std::span<const Vertex>(buf.data(), k));
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t n = cycle.size();
  if (n == 0) return {};
  std::vector<Vertex> best;
  std::vector<Vertex> cand(n);
  for (std::size_t start = 0; start < n; ++start) {
    for (int dir : {1, -1}) {
      const auto len = static_cast<long>(n);
      for (long i = 0; i < len; ++i) {
        const long idx = ((static_cast<long>(start) + dir * i) % len + len) % len;
        cand[i] = cycle[idx];
      }
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

// ------------------------------------------------------ SimplicialComplex

SimplicialComplex SimplicialComplex::from_simplices(std::span<const std::vector<Vertex>> simplices,
                                                    std::string name, std::size_t vertex_count) {
  SimplicialComplex X;
  X.name_ = std::move(name);
  std::size_t n = vertex_count;
  for (const auto& raw : simplices) {
    if (raw.empty()) continue;
    const Simplex s(std::span<const Vertex>(raw.data(), raw.size()));
    n = std::max(n, static_cast<std::size_t>(s[s.size() - 1]) + 1);
    // every nonempty subset is a face
    const unsigned full = (1u << s.size()) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
      std::array<Vertex, 4> buf{};
      std::size_t k = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) buf[k++] = s[i];
      }
      X.simplices_[k - 1].push_back(Simplex(std::span<const Vertex>(buf.data(), k)));
    }
  }
  for (std::size_t v = 0; v < n; ++v) X.simplices_[0].push_back(Simplex{static_cast<Vertex>(v)});
  X.adjacency_.assign(n, {});
  X.index();
  return X;
}

SimplicialComplex SimplicialComplex::flag_completion(std::size_t vertex_count,
                                                     std::span<const std::pair<Vertex, Vertex>> edges,
                                                     bool strict, std::string name) {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::DuplicateVertexInSimplex, "loop edge", {a});
    if (a < 0 || b < 0) throw Error(ErrorCode::NegativeVertex, "negative vertex in edge");
    const auto need = static_cast<std::size_t>(std::max(a, b)) + 1;
    if (need > adj.size()) adj.resize(need);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  auto higher = [&](Vertex v, Vertex above) {
    std::vector<Vertex> out;
    for (Vertex u : adj[v]) {
      if (u > above) out.push_back(u);
    }
    return out;
  };
  auto intersect = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };

  std::vector<std::vector<Vertex>> cliques;
  for (std::size_t v = 0; v < adj.size(); ++v) cliques.push_back({static_cast<Vertex>(v)});
  for (std::size_t a = 0; a < adj.size(); ++a) {
    const auto va = static_cast<Vertex>(a);
    const auto na = higher(va, va);
    for (Vertex b : na) {
      cliques.push_back({va, b});
      const auto nab = intersect(na, higher(b, b));
      for (Vertex c : nab) {
        cliques.push_back({va, b, c});
        const auto nabc = intersect(nab, higher(c, c));
        for (Vertex d : nabc) {
          cliques.push_back({va, b, c, d});
          if (strict) {
            const auto nabcd = intersect(nabc, higher(d, d));
            if (!nabcd.empty()) {
              throw Error(ErrorCode::DimensionTooHigh, "flag completion contains a 5-clique",
                          {va, b, c, d, nabcd.front()});
            }
          }
        }
      }
    }
  }
  return from_simplices(cliques, std::move(name), adj.size());
}

void SimplicialComplex::index() {
  for (auto& layer : simplices_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  adjacency_.assign(std::max(adjacency_.size(), simplices_[0].size()), {});
  for (const Simplex& e : simplices_[1]) {
    adjacency_[e[0]].push_back(e[1]);
    adjacency_[e[1]].push_back(e[0]);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  star_.assign(adjacency_.size(), {});
  for (int dim = 1; dim <= kMaxDimension; ++dim) {
    for (std::uint32_t i = 0; i < simplices_[dim].size(); ++i) {
      for (Vertex v : simplices_[dim][i]) star_[v].emplace_back(static_cast<std::uint8_t>(dim), i);
    }
  }
}

int SimplicialComplex::dimension() const {
  for (int dim = kMaxDimension; dim >= 0; --dim) {
    if (!simplices_[dim].empty()) return dim;
  }
  return -1;
}

bool SimplicialComplex::adjacent(Vertex a, Vertex b) const {
  if (!contains_vertex(a) || !contains_vertex(b)) return false;
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty() || s.dimension() > kMaxDimension) return false;
  const auto& layer = simplices_[s.dimension()];
  return std::binary_search(layer.begin(), layer.end(), s);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int dim = 0; dim <= kMaxDimension; ++dim) {
    for (const Simplex& s : simplices_[dim]) {
      bool maximal = true;
      if (dim == 0) {
        maximal = adjacency_[s[0]].empty();
      } else {
        for (auto [d, i] : star_[s[0]]) {
          if (d == dim + 1 && s.is_face_of(simplices_[d][i])) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

std::vector<Simplex> SimplicialComplex::star(Vertex v) const {
  std::vector<Simplex> out;
  out.reserve(star_[v].size());
  for (auto [d, i] : star_[v]) out.push_back(simplices_[d][i]);
  return out;
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s) const {
  std::vector<Simplex> out;
  if (s.empty()) return out;
  for (auto [d, i] : star_[s[0]]) {
    const Simplex& t = simplices_[d][i];
    if (t.size() > s.size() && s.is_face_of(t)) out.push_back(t);
  }
  return out;
}

std::vector<Vertex> SimplicialComplex::common_neighbors(std::span<const Vertex> vs) const {
  if (vs.empty()) return {};
  std::vector<Vertex> acc(adjacency_[vs[0]].begin(), adjacency_[vs[0]].end());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<Vertex> next;
    const auto& row = adjacency_[vs[i]];
    std::set_intersection(acc.begin(), acc.end(), row.begin(), row.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int dim = 0; dim <= kMaxDimension; ++dim) {
    chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long>(simplices_[dim].size());
  }
  return chi;
}

bool SimplicialComplex::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  return reached == vertex_count();
}

// --------------------------------------------------------------- Relabeled

Vertex Relabeled::local_of(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

std::vector<Vertex> Relabeled::to_parent_ids(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return out;
}

namespace {

// to_parent must be sorted so local_of can binary search
Relabeled relabel(const std::vector<Simplex>& parent_simplices, std::vector<Vertex> parent_vertices,
                  std::string name) {
  std::sort(parent_vertices.begin(), parent_vertices.end());
  parent_vertices.erase(std::unique(parent_vertices.begin(), parent_vertices.end()),
                        parent_vertices.end());
  Relabeled out;
  out.to_parent = std::move(parent_vertices);
  std::vector<std::vector<Vertex>> local;
  local.reserve(parent_simplices.size());
  for (const Simplex& s : parent_simplices) {
    std::vector<Vertex> ids;
    for (Vertex v : s) ids.push_back(out.local_of(v));
    local.push_back(std::move(ids));
  }
  out.complex = SimplicialComplex::from_simplices(local, std::move(name), out.to_parent.size());
  return out;
}

}  // namespace

SimplicialComplex build_complex(std::span<const std::vector<Vertex>> maximal_simplices, std::string name) {
  return SimplicialComplex::from_simplices(maximal_simplices, std::move(name));
}

Relabeled link(const SimplicialComplex& X, const Simplex& sigma) {
  if (!X.contains(sigma)) {
    throw Error(ErrorCode::SimplexNotPresent, "link of a simplex not in the complex", sigma.to_vector());
  }
  std::vector<Simplex> taus;
  std::vector<Vertex> verts;
  for (const Simplex& rho : X.cofaces(sigma)) {
    std::array<Vertex, 4> buf{};
    std::size_t k = 0;
    for (Vertex v : rho) {
      if (!sigma.contains(v)) buf[k++] = v;
    }
    Simplex tau(std::span<const Vertex>(buf.data(), k));
    verts.insert(verts.end(), tau.begin(), tau.end());
    taus.push_back(tau);
  }
  return relabel(taus, std::move(verts), X.name().empty() ? std::string{} : X.name() + "/link");
}

Relabeled span(const SimplicialComplex& X, std::span<const Vertex> vertices) {
  std::vector<Vertex> verts(vertices.begin(), vertices.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<char> inside(X.vertex_count(), 0);
  for (Vertex v : verts) inside.at(v) = 1;
  std::vector<Simplex> keep;
  for (Vertex v : verts) {
    keep.push_back(Simplex{v});
    for (const Simplex& s : X.star(v)) {
      if (s[0] != v) continue;  // visit each simplex once, from its least vertex
      if (std::all_of(s.begin(), s.end(), [&](Vertex u) { return inside[u] != 0; })) keep.push_back(s);
    }
  }
  return relabel(keep, std::move(verts), X.name());
}

}  // namespace mloc
