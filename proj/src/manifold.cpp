#include "mloc/manifold.hpp"

#include <algorithm>
#include <set>

#include "mloc/curvature.hpp"
#include "mloc/parallel.hpp"

namespace mloc {

namespace {

std::size_t position(const std::vector<Simplex>& sorted, const Simplex& s) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
}

// Counts, for each simplex of dimension `dim`, the simplices of dimension
// dim + 1 containing it.
std::vector<int> coface_counts(const SimplicialComplex& X, int dim) {
  const auto& faces = X.simplices(dim);
  std::vector<int> counts(faces.size(), 0);
  if (dim + 1 > kMaxDimension) return counts;
  for (const Simplex& top : X.simplices(dim + 1)) {
    for (Vertex v : top) ++counts[position(faces, top.without(v))];
  }
  return counts;
}

bool is_single_cycle(const SimplicialComplex& L) {
  if (L.vertex_count() < 3 || L.dimension() != 1) return false;
  for (std::size_t v = 0; v < L.vertex_count(); ++v) {
    if (L.degree(static_cast<Vertex>(v)) != 2) return false;
  }
  return L.is_connected();
}

// Link vertices of v in cyclic order; v's link must be a single cycle.
std::vector<Vertex> cyclic_link(const SimplicialComplex& Y, Vertex v) {
  const Relabeled L = link(Y, Simplex{v});
  std::vector<Vertex> order{0};
  Vertex prev = -1;
  Vertex cur = 0;
  while (true) {
    const auto nb = L.complex.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return L.to_parent_ids(order);
}

}  // namespace

std::vector<std::pair<Simplex, int>> edge_degrees(const SimplicialComplex& X) {
  std::vector<int> counts(X.edge_count(), 0);
  const auto& edges = X.simplices(1);
  for (const Simplex& t : X.simplices(3)) {
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) ++counts[position(edges, Simplex{t[a], t[b]})];
    }
  }
  std::vector<std::pair<Simplex, int>> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) out.emplace_back(edges[i], counts[i]);
  return out;
}

ManifoldReport validate_closed_3manifold(const SimplicialComplex& X) {
  const auto maximal = X.maximal_simplices();
  if (maximal.empty()) throw Error(ErrorCode::NotPure, "empty complex");
  for (const Simplex& s : maximal) {
    if (s.size() != 4) {
      throw Error(ErrorCode::NotPure, "maximal simplex of dimension " + std::to_string(s.dimension()),
                  s.to_vector());
    }
  }
  ManifoldReport r;
  r.validation = Verdict::pass("validation");
  ScopedTimer timer(r.validation.stats);
  auto fail = [&](Witness w, std::string detail) {
    if (!r.validation.passed) return;
    r.validation.passed = false;
    r.validation.witness = std::move(w);
    r.validation.detail = std::move(detail);
  };

  const auto tri_counts = coface_counts(X, 2);
  r.is_pseudomanifold = true;
  for (std::size_t i = 0; i < tri_counts.size(); ++i) {
    if (tri_counts[i] != 2) {
      r.is_pseudomanifold = false;
      fail(X.simplices(2)[i], "triangle in " + std::to_string(tri_counts[i]) + " tetrahedra");
      break;
    }
  }
  const auto& edges = X.simplices(1);
  const auto edge_ok = parallel_map(edges.size(), [&](std::size_t i) -> char {
    return is_single_cycle(link(X, edges[i]).complex);
  });
  r.edge_link_cycles = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edge_ok[i]) {
      r.edge_link_cycles = false;
      fail(edges[i], "edge link is not a single cycle");
      break;
    }
  }
  const auto vertex_ok = parallel_map(X.vertex_count(), [&](std::size_t v) -> char {
    return is_closed_2sphere(link(X, Simplex{static_cast<Vertex>(v)}).complex);
  });
  r.vertex_links_spheres = true;
  for (std::size_t v = 0; v < vertex_ok.size(); ++v) {
    if (!vertex_ok[v]) {
      r.vertex_links_spheres = false;
      fail(Simplex{static_cast<Vertex>(v)}, "vertex link is not a 2-sphere");
      break;
    }
  }

  r.edge_degrees = edge_degrees(X);
  r.five_six_star = Verdict::pass("five_six_star");
  std::vector<char> degree5(edges.size(), 0);
  for (std::size_t i = 0; i < r.edge_degrees.size(); ++i) {
    const int d = r.edge_degrees[i].second;
    ++r.five_six_star.stats.counts["edges_degree_" + std::to_string(d)];
    degree5[i] = d == 5;
    if (d != 5 && d != 6 && r.five_six_star.passed) {
      r.five_six_star = Verdict::fail("five_six_star", r.edge_degrees[i].first,
                                      "edge of degree " + std::to_string(d));
    }
  }
  if (r.five_six_star.passed) {
    for (const Simplex& t : X.simplices(2)) {
      const int fives = degree5[position(edges, Simplex{t[0], t[1]})] +
                        degree5[position(edges, Simplex{t[0], t[2]})] +
                        degree5[position(edges, Simplex{t[1], t[2]})];
      if (fives > 1) {
        auto counts = r.five_six_star.stats.counts;
        r.five_six_star = Verdict::fail("five_six_star", t, "triangle with two edges of degree 5");
        r.five_six_star.stats.counts = counts;
        break;
      }
    }
  }
  return r;
}

bool is_closed_2sphere(const SimplicialComplex& Y) {
  if (Y.vertex_count() < 4 || Y.dimension() != 2) return false;
  for (const Simplex& s : Y.maximal_simplices()) {
    if (s.size() != 3) return false;
  }
  for (int c : coface_counts(Y, 1)) {
    if (c != 2) return false;
  }
  for (std::size_t v = 0; v < Y.vertex_count(); ++v) {
    if (!is_single_cycle(link(Y, Simplex{static_cast<Vertex>(v)}).complex)) return false;
  }
  return Y.is_connected() && Y.euler_characteristic() == 2;
}

Relabeled vertex_link_sphere(const SimplicialComplex& X, Vertex v) {
  Relabeled L = link(X, Simplex{v});
  if (!is_closed_2sphere(L.complex)) throw Error(ErrorCode::LinkNotSphere, "vertex link is not a 2-sphere", {v});
  return L;
}

Verdict is_5_6_star_sphere(const SimplicialComplex& Y) {
  if (!is_closed_2sphere(Y)) throw Error(ErrorCode::NotASphere, "not a closed triangulated 2-sphere");
  Verdict out = Verdict::pass("five_six_star_sphere");
  ScopedTimer timer(out.stats);
  for (std::size_t i = 0; i < Y.vertex_count(); ++i) {
    const auto v = static_cast<Vertex>(i);
    const std::size_t d = Y.degree(v);
    ++out.stats.counts["vertices_degree_" + std::to_string(d)];
    if (d != 5 && d != 6 && out.passed) {
      out.passed = false;
      out.witness = Simplex{v};
      out.detail = "vertex of degree " + std::to_string(d);
    }
  }
  if (!out.passed) return out;
  for (const Simplex& e : Y.simplices(1)) {
    if (Y.degree(e[0]) == 5 && Y.degree(e[1]) == 5) {
      out.passed = false;
      out.witness = e;
      out.detail = "adjacent vertices of degree 5";
      break;
    }
  }
  return out;
}

std::size_t SoccerDual::pentagons() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 5; }));
}

std::size_t SoccerDual::hexagons() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 6; }));
}

SoccerDual soccer_dual(const SimplicialComplex& Y) {
  if (!is_5_6_star_sphere(Y).passed) {
    throw Error(ErrorCode::PreconditionNotMet, "soccer dual needs a 5/6* sphere");
  }
  SoccerDual d;
  const auto& tris = Y.simplices(2);
  d.dual_vertices = tris;
  for (std::size_t i = 0; i < Y.vertex_count(); ++i) {
    const auto v = static_cast<Vertex>(i);
    const auto ring = cyclic_link(Y, v);
    std::vector<int> corners;
    for (std::size_t j = 0; j < ring.size(); ++j) {
      corners.push_back(static_cast<int>(position(tris, Simplex{v, ring[j], ring[(j + 1) % ring.size()]})));
    }
    d.cells.push_back(std::move(corners));
  }
  for (const Simplex& e : Y.simplices(1)) {
    std::vector<int> around;
    for (const Simplex& t : Y.cofaces(e)) around.push_back(static_cast<int>(position(tris, t)));
    d.dual_edges.emplace_back(around.at(0), around.at(1));
  }
  return d;
}

FaceCounts redualize(const SoccerDual& dual) {
  FaceCounts out;
  out.vertices = dual.cells.size();
  std::set<int> corners;
  std::set<std::pair<int, int>> sides;
  for (const auto& cell : dual.cells) {
    corners.insert(cell.begin(), cell.end());
    for (std::size_t j = 0; j < cell.size(); ++j) {
      const int a = cell[j];
      const int b = cell[(j + 1) % cell.size()];
      sides.emplace(std::min(a, b), std::max(a, b));
    }
  }
  out.faces = corners.size();
  out.edges = sides.size();
  return out;
}

namespace {

void require_5_6_star_sphere(const SimplicialComplex& Y) {
  if (!is_5_6_star_sphere(Y).passed) throw Error(ErrorCode::PreconditionNotMet, "not a 5/6* sphere");
}

bool has_wheel_center(const SimplicialComplex& Y, const std::vector<Vertex>& cycle) {
  for (Vertex x : Y.common_neighbors(cycle)) {
    bool all = true;
    for (std::size_t i = 0; i < cycle.size() && all; ++i) {
      all = Y.contains(Simplex{x, cycle[i], cycle[(i + 1) % cycle.size()]});
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

Verdict check_sphere_cycle_lemma(const SimplicialComplex& Y, const Limits& limits) {
  require_5_6_star_sphere(Y);
  Verdict out = Verdict::pass("sphere_cycle_lemma");
  ScopedTimer timer(out.stats);
  const auto cycles = full_cycles(Y, 4, 6, limits);
  for (const Cycle& c : cycles) {
    ++out.stats.counts["full_" + std::to_string(c.length()) + "_cycles"];
    if (!out.passed) continue;
    if (c.length() == 4) {
      out.passed = false;
      out.witness = c;
      out.detail = "full 4-cycle";
    } else if (!has_wheel_center(Y, c.vertices)) {
      out.passed = false;
      out.witness = c;
      out.detail = "full " + std::to_string(c.length()) + "-cycle is not the rim of a wheel";
    }
  }
  out.stats.counts["full_4_cycles"] += 0;
  return out;
}

FillingPair find_7cycle_filling(const SimplicialComplex& Y, std::span<const Vertex> cycle) {
  require_5_6_star_sphere(Y);
  if (cycle.size() != 7 || !is_valid_cycle(Y, cycle, true)) {
    throw Error(ErrorCode::PreconditionNotMet, "not a full 7-cycle", {cycle.begin(), cycle.end()});
  }
  auto on_cycle = [&](Vertex v) { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); };
  auto c = [&](std::size_t r, std::size_t j) { return cycle[(r + j) % 7]; };
  for (const Simplex& e : Y.simplices(1)) {
    if (on_cycle(e[0]) || on_cycle(e[1])) continue;
    for (const auto& [y, z] : {std::pair{e[0], e[1]}, std::pair{e[1], e[0]}}) {
      for (std::size_t r = 0; r < 7; ++r) {
        const bool y_ok = Y.adjacent(y, c(r, 0)) && Y.adjacent(y, c(r, 1)) && Y.adjacent(y, c(r, 2)) &&
                          Y.adjacent(y, c(r, 3));
        const bool z_ok = Y.adjacent(z, c(r, 3)) && Y.adjacent(z, c(r, 4)) && Y.adjacent(z, c(r, 5)) &&
                          Y.adjacent(z, c(r, 6)) && Y.adjacent(z, c(r, 0));
        if (y_ok && z_ok) {
          FillingPair p{y, z, {}};
          for (std::size_t j = 0; j < 7; ++j) p.cycle.push_back(c(r, j));
          return p;
        }
      }
    }
  }
  throw Error(ErrorCode::NoFillingPair, "no filling pair for a full 7-cycle", {cycle.begin(), cycle.end()});
}

Verdict check_7cycle_fillings(const SimplicialComplex& Y, const Limits& limits) {
  require_5_6_star_sphere(Y);
  Verdict out = Verdict::pass("seven_cycle_fillings");
  ScopedTimer timer(out.stats);
  const auto cycles = full_cycles(Y, 7, 7, limits);
  out.stats.counts["full_7_cycles"] = static_cast<std::int64_t>(cycles.size());
  for (const Cycle& c : cycles) {
    try {
      (void)find_7cycle_filling(Y, c.vertices);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoFillingPair) throw;
      out.passed = false;
      out.witness = c;
      out.detail = "full 7-cycle without a filling pair";
      break;
    }
  }
  return out;
}

Verdict check_wheel_in_link(const SimplicialComplex& X, bool enforce_precondition, const Limits& limits) {
  if (enforce_precondition) {
    try {
      if (!validate_closed_3manifold(X).five_six_star.passed) {
        throw Error(ErrorCode::PreconditionNotMet, "not a 5/6*-triangulation");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PreconditionNotMet) throw;
      throw Error(ErrorCode::PreconditionNotMet, std::string("not a 5/6*-triangulation: ") + e.what());
    }
  }
  Verdict out = Verdict::pass("wheel_in_link");
  ScopedTimer timer(out.stats);
  const auto all = wheels(X, 5, 6, limits);
  out.stats.counts["wheels_5"] = 0;
  out.stats.counts["wheels_6"] = 0;
  const auto contained = parallel_map(all.size(), [&](std::size_t i) -> char {
    const Wheel& w = all[i];
    const auto verts = w.vertex_set();
    for (Vertex v : X.common_neighbors(verts)) {
      bool ok = true;
      for (std::size_t j = 0; j < w.rim.size() && ok; ++j) {
        ok = X.contains(Simplex{v, w.center, w.rim[j], w.rim[(j + 1) % w.rim.size()]});
      }
      if (ok) return 1;
    }
    return 0;
  });
  for (std::size_t i = 0; i < all.size(); ++i) {
    ++out.stats.counts["wheels_" + std::to_string(all[i].size())];
    if (!contained[i] && out.passed) {
      out.passed = false;
      out.witness = all[i];
      out.detail = std::to_string(all[i].size()) + "-wheel lies in no vertex link";
    }
  }
  return out;
}

TheoremBReport verify_theorem_B(const SimplicialComplex& X, const Limits& limits) {
  TheoremBReport r;
  auto stage = [&](Verdict v, const std::string& name) {
    v.check = name;
    r.stages.push_back(std::move(v));
    if (!r.stages.back().passed) r.failed_stage = name;
    return r.stages.back().passed;
  };
  ManifoldReport m;
  try {
    m = validate_closed_3manifold(X);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPure) throw;
    const auto& w = e.witness();
    stage(Verdict::fail("validation", Simplex(std::span<const Vertex>(w)), e.what()), "validation");
    return r;
  }
  if (!stage(m.validation, "validation")) return r;
  if (!stage(m.five_six_star, "five_six_star")) return r;
  if (!stage(is_flag(X), "flag")) return r;
  const bool large = stage(is_locally_k_large(X, 5, limits), "locally_5_large");
  if (!large) {
    r.contract_violation = true;
    return r;
  }
  if (!stage(is_m_located(X, 8, limits), "8_located")) {
    r.contract_violation = true;
    return r;
  }
  Verdict types = Verdict::pass("dwheel_types");
  const std::set<std::pair<int, int>> allowed{{5, 5}, {6, 5}, {6, 6}, {7, 5}};
  for (const DWheel& dw : dwheels(X, 8, limits)) {
    ++r.dwheel_types[dw.type()];
    if (!allowed.count(dw.type()) && types.passed) {
      types = Verdict::fail("dwheel_types", dw, "dwheel of unexpected type");
    }
  }
  for (const auto& [t, n] : r.dwheel_types) {
    types.stats.counts["type_" + std::to_string(t.first) + "_" + std::to_string(t.second)] = n;
  }
  stage(types, "dwheel_types");
  return r;
}

}  // namespace mloc
