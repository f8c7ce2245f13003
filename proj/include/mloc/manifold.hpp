#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mloc/complex.hpp"
#include "mloc/queries.hpp"
#include "mloc/verdict.hpp"

namespace mloc {

/// Number of 3-simplices containing each edge, in edge order.
std::vector<std::pair<Simplex, int>> edge_degrees(const SimplicialComplex& X);

struct ManifoldReport {
  bool is_pseudomanifold = false;    // every triangle in exactly two tetrahedra
  bool edge_link_cycles = false;     // every edge link is one cycle
  bool vertex_links_spheres = false; // every vertex link is a closed 2-sphere
  std::vector<std::pair<Simplex, int>> edge_degrees;
  Verdict validation;
  /// Edge degrees in {5, 6} and at most one degree-5 edge per triangle.
  Verdict five_six_star;

  bool valid() const { return is_pseudomanifold && edge_link_cycles && vertex_links_spheres; }
};

/// Throws NotPure when some maximal simplex has dimension below 3.
ManifoldReport validate_closed_3manifold(const SimplicialComplex& X);

/// Closed triangulated 2-sphere: pure of dimension 2, every edge in two
/// triangles, every vertex link one cycle, connected, Euler characteristic 2.
bool is_closed_2sphere(const SimplicialComplex& Y);

/// The link of v as a 2-sphere. Throws LinkNotSphere.
Relabeled vertex_link_sphere(const SimplicialComplex& X, Vertex v);

/// Degrees in {5, 6} and no two adjacent degree-5 vertices. Throws
/// NotASphere unless Y is a closed 2-sphere.
Verdict is_5_6_star_sphere(const SimplicialComplex& Y);

/// The pentagon/hexagon cellulation dual to a 5/6* sphere.
struct SoccerDual {
  /// Per sphere vertex: the triangles around it in cyclic order.
  std::vector<std::vector<int>> cells;
  /// Dual vertex i is the i-th triangle of the sphere.
  std::vector<Simplex> dual_vertices;
  /// One per sphere edge: the two triangles containing it.
  std::vector<std::pair<int, int>> dual_edges;

  int gonality(Vertex cell) const { return static_cast<int>(cells[cell].size()); }
  std::size_t pentagons() const;
  std::size_t hexagons() const;
};

/// Throws PreconditionNotMet unless Y is a 5/6* sphere.
SoccerDual soccer_dual(const SimplicialComplex& Y);

struct FaceCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
};

/// Face counts of the dual of the dual, read off the incidences alone.
FaceCounts redualize(const SoccerDual& dual);

/// No full 4-cycles, and every full 5- or 6-cycle is the rim of a wheel.
/// Throws PreconditionNotMet unless Y is a 5/6* sphere.
Verdict check_sphere_cycle_lemma(const SimplicialComplex& Y, const Limits& limits = {});

/// Two adjacent vertices off a full 7-cycle; with the cycle rotated to
/// (c1..c7), y is adjacent to c1..c4 and z to c4..c7 and c1.
struct FillingPair {
  Vertex y = -1;
  Vertex z = -1;
  std::vector<Vertex> cycle;
};

/// Exhaustive search over the edges of Y. Throws PreconditionNotMet for a
/// non-5/6* sphere or a cycle that is not full, NoFillingPair if none exists.
FillingPair find_7cycle_filling(const SimplicialComplex& Y, std::span<const Vertex> cycle);

/// Runs find_7cycle_filling on every full 7-cycle of Y.
Verdict check_7cycle_fillings(const SimplicialComplex& Y, const Limits& limits = {});

/// Every 5- and 6-wheel W lies in the link of some vertex outside W. The
/// 5/6* precondition may be switched off to probe other complexes.
Verdict check_wheel_in_link(const SimplicialComplex& X, bool enforce_precondition = true,
                            const Limits& limits = {});

/// Staged pipeline: validation, five_six_star, flag, locally_5_large,
/// 8_located, dwheel_types. Stops at the first failing stage.
struct TheoremBReport {
  std::vector<Verdict> stages;
  std::string failed_stage;
  std::map<std::pair<int, int>, std::int64_t> dwheel_types;
  /// five_six_star and flagness passed but a later curvature stage failed.
  bool contract_violation = false;

  bool passed() const { return failed_stage.empty(); }
};

TheoremBReport verify_theorem_B(const SimplicialComplex& X, const Limits& limits = {});

}  // namespace mloc
