#include <doctest.h>

#include "mloc/cover.hpp"
#include "mloc/curvature.hpp"
#include "mloc/generators.hpp"
#include "mloc/io.hpp"
#include "mloc/metric.hpp"
#include "oracles.hpp"

using namespace mloc;

namespace {

bool is_path(const SimplicialComplex& X) {
  if (X.dimension() > 1 || !X.is_connected()) return false;
  std::size_t ends = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(X.vertex_count()); ++v) {
    if (X.degree(v) > 2) return false;
    if (X.degree(v) == 1) ++ends;
  }
  return ends == 2;
}

// f sends every simplex of the ball onto a simplex of the target
bool is_simplicial(const CoverState& s) {
  for (int dim = 0; dim <= kMaxDimension; ++dim) {
    for (const Simplex& sigma : s.ball.simplices(dim)) {
      std::vector<Vertex> img;
      for (Vertex v : sigma) img.push_back(s.sheet_map[v]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
      if (!s.target.contains(Simplex(std::span<const Vertex>(img)))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("initial balls") {
    const auto c4 = init_cover(cycle_graph(4), 0);
    CHECK(c4.ball.vertex_count() == 3);
    CHECK(is_path(c4.ball));
    CHECK(c4.sheet_map == std::vector<Vertex>{0, 1, 3});

    const auto tet = init_cover(tetrahedron(), 0);
    CHECK(tet.ball.simplex_count(3) == 1);

    const auto ico = init_cover(icosahedron(), 0);
    CHECK(ico.ball.vertex_count() == 6);
    CHECK(ico.ball.simplex_count(2) == 5);
    CHECK(ico.ball.degree(0) == 5);
    CHECK_FALSE(ico.hypotheses_hold);

    CHECK_THROWS_AS(init_cover(boundary_4_simplex(), 0), Error);
  }

  TEST_CASE("C4 second stage keeps the two far pairs apart") {
    const auto s1 = init_cover(cycle_graph(4), 0);
    const auto s2 = expand_ball(s1);
    CHECK(s2.ball.vertex_count() == 5);
    CHECK(is_path(s2.ball));
    REQUIRE(s2.last_classes.size() == 2);
    for (const auto& c : s2.last_classes) {
      CHECK(c.members.size() == 1);
      CHECK(c.z() == 2);
    }
    CHECK(verify_equiv_shortcut(s2).passed);
    CHECK(check_cover_invariants(s2).passed);
  }

  TEST_CASE("C5 unrolls into the line") {
    auto s = init_cover(cycle_graph(5), 0);
    for (int i = 2; i <= 6; ++i) {
      s = expand_ball(s);
      CHECK(s.ball.vertex_count() == static_cast<std::size_t>(2 * i + 1));
      CHECK(is_path(s.ball));
      CHECK(check_cover_invariants(s).passed);
    }
  }

  TEST_CASE("tetrahedron is a fixed point") {
    const auto s1 = init_cover(tetrahedron(), 0);
    const auto s2 = expand_ball(s1);
    CHECK(s2.last_classes.empty());
    CHECK(s2.ball.vertex_count() == 4);
    CHECK(s2.at_fixed_point());
    CHECK(sheet_map_is_isomorphism(s2));
  }

  TEST_CASE("build_cover over C4") {
    const auto r = build_cover(cycle_graph(4), 0, 4);
    CHECK(r.state.ball.vertex_count() == 9);
    CHECK(is_path(r.state.ball));
    CHECK(fiber_sizes(r.state) == std::vector<std::size_t>{3, 2, 2, 2});
    CHECK(r.report.sd_prime.passed);
    CHECK(r.report.local_isomorphism.passed);
    CHECK(r.report.interior_m_located.passed);
    CHECK(is_simplicial(r.state));
    CHECK_NOTHROW(verify_covering(r.state.sheet_map, r.state.ball, r.state.target) );
  }

  TEST_CASE("build_cover over simply connected inputs") {
    for (const auto& X : {tetrahedron(), triangle()}) {
      const auto r = build_cover(X, 0, 3);
      CHECK(r.report.fixed_point);
      CHECK(sheet_map_is_isomorphism(r.state));
    }
  }

  TEST_CASE("build_cover argument checks") {
    CHECK_THROWS_AS(build_cover(cycle_graph(4), 0, 0), Error);
    Limits limits;
    limits.max_cover_stage = 3;
    CHECK_THROWS_AS(build_cover(cycle_graph(4), 0, 5, limits), Error);
    limits.max_cover_stage = 10;
    limits.max_cover_vertices = 20;
    const auto klein = read_complex_file(oracle::fixture("klein_quartic.cplx")).complex;
    CHECK_THROWS_AS(build_cover(klein, 0, 4, limits), Error);
  }

  TEST_CASE("degree-7 surface: growth, SD' and invariants") {
    const auto klein = read_complex_file(oracle::fixture("klein_quartic.cplx")).complex;
    REQUIRE(is_locally_k_large(klein, 7).passed);
    auto s = init_cover(klein, 0);
    CHECK(s.hypotheses_hold);
    std::size_t last = s.ball.vertex_count();
    for (int i = 2; i <= 4; ++i) {
      s = expand_ball(s);
      CHECK(s.ball.vertex_count() > last);
      last = s.ball.vertex_count();
      CHECK(is_simplicial(s));
      CHECK(check_cover_invariants(s).passed);
      const auto shortcut = verify_equiv_shortcut(s);
      CHECK(shortcut.passed);
    }
    CHECK(s.stage_sizes == std::vector<std::size_t>{1, 8, 29, 85, 232});
    CHECK(check_sd_prime(s.ball, 0, 3).passed());
    CHECK(s.diagnostics.empty());
    // the interior is locally isomorphic to the surface
    for (Vertex v = 0; v < static_cast<Vertex>(s.stage_sizes[3]); ++v) {
      CHECK(s.ball.degree(v) == 7);
    }
  }

  TEST_CASE("ZClass members and representatives") {
    const auto klein = read_complex_file(oracle::fixture("klein_quartic.cplx")).complex;
    auto s = expand_ball(expand_ball(init_cover(klein, 0)));
    for (const auto& c : s.last_classes) {
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
      CHECK(c.representative() == c.members.front());
      for (const auto& [w, z] : c.members) {
        CHECK(z == c.z());
        CHECK(s.ball.adjacent(w, c.vertex));
        CHECK(s.sheet_map[c.vertex] == z);
      }
    }
  }

  TEST_CASE("failed hypotheses are reported, not thrown") {
    const auto r = build_cover(icosahedron(), 0, 4);
    CHECK_FALSE(r.state.hypotheses_hold);
    CHECK_FALSE(r.state.hypothesis_failures.empty());
    // the icosahedron is simply connected: the construction closes up anyway
    CHECK(r.report.fixed_point);
  }

  TEST_CASE("invariant failures without the hypotheses become diagnostics") {
    // found by scanning seeds: this complex has 4-wheels and short dwheels
    const auto X = random_flag(12, 0.35, 1);
    CoverState s;
    CHECK_NOTHROW(s = build_cover(X, 0, 4).state);
    CHECK_FALSE(s.hypotheses_hold);
    REQUIRE_FALSE(s.diagnostics.empty());
    for (const auto& d : s.diagnostics) {
      CHECK((d.invariant == "P" || d.invariant == "Q" || d.invariant == "R"));
      CHECK(d.stage >= 2);
    }
    CHECK_FALSE(check_cover_invariants(s).passed);
  }

  TEST_CASE("interior intervals of cover balls are 2-thin") {
    const auto klein = read_complex_file(oracle::fixture("klein_quartic.cplx")).complex;
    const auto r = build_cover(klein, 0, 4);
    const auto& s = r.state;
    const auto d = all_pairs_distances(s.ball);
    const auto interior = static_cast<Vertex>(s.stage_sizes[s.stage - 1]);
    for (Vertex a = 0; a < interior; ++a) {
      for (Vertex b = a + 1; b < interior; ++b) CHECK(interval_thinness(d, a, b).thinness <= 2);
    }
  }
}
