#include <doctest.h>

#include <map>

#include "mloc/generators.hpp"
#include "mloc/io.hpp"
#include "mloc/manifold.hpp"
#include "mloc/queries.hpp"
#include "oracles.hpp"

using namespace mloc;

TEST_SUITE("manifold") {
  TEST_CASE("boundary of the 4-simplex") {
    const auto X = boundary_4_simplex();
    const auto r = validate_closed_3manifold(X);
    CHECK(r.valid());
    CHECK(r.validation.passed);
    for (const auto& [e, d] : r.edge_degrees) CHECK(d == 3);
    CHECK_FALSE(r.five_six_star.passed);
    for (Vertex v = 0; v < 5; ++v) {
      const auto L = vertex_link_sphere(X, v);
      CHECK(L.complex.vertex_count() == 4);
      for (Vertex u = 0; u < 4; ++u) CHECK(L.complex.degree(u) == 3);
    }
  }

  TEST_CASE("two tetrahedra glued along a triangle are not closed") {
    const auto X = parse_text("0 1 2 3\n1 2 3 4").complex;
    const auto r = validate_closed_3manifold(X);
    CHECK_FALSE(r.is_pseudomanifold);
    CHECK_FALSE(r.validation.passed);
    REQUIRE(r.validation.witness);
    CHECK(std::get<Simplex>(*r.validation.witness).size() == 3);
  }

  TEST_CASE("lower-dimensional maximal simplices are rejected") {
    try {
      (void)validate_closed_3manifold(parse_text("0 1 2 3\n3 4").complex);
      FAIL("expected NotPure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPure);
      CHECK(e.witness() == std::vector<Vertex>{3, 4});
    }
    CHECK_THROWS_AS(vertex_link_sphere(parse_text("0 1 2 3").complex, 0), Error);
  }

  TEST_CASE("600-cell: a closed 3-manifold with icosahedral links") {
    const auto X = read_complex_file(oracle::fixture("cell600.cplx")).complex;
    CHECK(X.vertex_count() == 120);
    CHECK(X.simplex_count(3) == 600);
    const auto r = validate_closed_3manifold(X);
    CHECK(r.valid());
    for (const auto& [e, d] : r.edge_degrees) CHECK(d == 5);
    CHECK_FALSE(r.five_six_star.passed);
    CHECK(std::get<Simplex>(*r.five_six_star.witness).size() == 3);
  }

  TEST_CASE("property: edge degree equals link vertex degree") {
    for (const char* name : {"cell600.cplx"}) {
      const auto X = read_complex_file(oracle::fixture(name)).complex;
      std::map<Simplex, int> deg;
      for (const auto& [e, d] : edge_degrees(X)) deg[e] = d;
      for (Vertex v = 0; v < static_cast<Vertex>(X.vertex_count()); ++v) {
        const auto L = vertex_link_sphere(X, v);
        for (Vertex u = 0; u < static_cast<Vertex>(L.complex.vertex_count()); ++u) {
          const Vertex p = L.parent_of(u);
          CHECK(static_cast<int>(L.complex.degree(u)) == deg.at(Simplex{v, p}));
        }
      }
    }
    const auto B = boundary_4_simplex();
    for (const auto& [e, d] : edge_degrees(B)) {
      CHECK(static_cast<int>(link(B, Simplex{e[0]}).complex.degree(link(B, Simplex{e[0]}).local_of(e[1]))) == d);
    }
  }

  TEST_CASE("5/6* spheres") {
    CHECK_FALSE(is_5_6_star_sphere(icosahedron()).passed);
    CHECK_FALSE(is_5_6_star_sphere(octahedron()).passed);
    const auto g2 = is_5_6_star_sphere(geodesic_sphere(2));
    CHECK(g2.passed);
    CHECK(g2.stats.counts.at("vertices_degree_5") == 12);
    CHECK(g2.stats.counts.at("vertices_degree_6") == 30);
    CHECK_THROWS_AS(is_5_6_star_sphere(cycle_graph(5)), Error);
    for (int k = 2; k <= 5; ++k) CHECK(is_5_6_star_sphere(geodesic_sphere(k)).passed);
  }

  TEST_CASE("soccer duals") {
    CHECK_THROWS_AS(soccer_dual(geodesic_sphere(1)), Error);
    const auto Y2 = geodesic_sphere(2);
    const auto d2 = soccer_dual(Y2);
    CHECK(d2.pentagons() == 12);
    CHECK(d2.hexagons() == 30);
    CHECK(d2.dual_vertices.size() == 80);
    CHECK(d2.dual_edges.size() == 120);
    CHECK(redualize(d2) == FaceCounts{42, 120, 80});
    const auto d3 = soccer_dual(geodesic_sphere(3));
    CHECK(d3.pentagons() == 12);
    CHECK(d3.hexagons() == 80);
    CHECK(redualize(d3) == FaceCounts{92, 270, 180});
    // cells are cyclic: consecutive triangles share an edge through the cell's vertex
    for (Vertex v = 0; v < static_cast<Vertex>(d2.cells.size()); ++v) {
      const auto& cell = d2.cells[v];
      for (std::size_t i = 0; i < cell.size(); ++i) {
        const Simplex& a = d2.dual_vertices[cell[i]];
        const Simplex& b = d2.dual_vertices[cell[(i + 1) % cell.size()]];
        CHECK(a.contains(v));
        int shared = 0;
        for (Vertex x : a) shared += b.contains(x) ? 1 : 0;
        CHECK(shared == 2);
      }
    }
  }

  TEST_CASE("sphere cycle lemma") {
    for (int k = 2; k <= 3; ++k) {
      const auto v = check_sphere_cycle_lemma(geodesic_sphere(k));
      CHECK(v.passed);
    }
    // a diagonal flip next to a degree-5 vertex breaks the 5/6* condition
    auto Y = geodesic_sphere(2);
    std::vector<std::vector<Vertex>> tris;
    for (const auto& t : Y.simplices(2)) tris.push_back(t.to_vector());
    const Simplex e = Y.simplices(1).front();
    std::vector<Vertex> apex;
    for (const auto& t : Y.simplices(2)) {
      if (e.is_face_of(t)) {
        for (Vertex x : t) {
          if (!e.contains(x)) apex.push_back(x);
        }
      }
    }
    REQUIRE(apex.size() == 2);
    std::erase_if(tris, [&](const std::vector<Vertex>& t) {
      return std::count(t.begin(), t.end(), e[0]) + std::count(t.begin(), t.end(), e[1]) == 2;
    });
    tris.push_back({apex[0], apex[1], e[0]});
    tris.push_back({apex[0], apex[1], e[1]});
    const auto flipped = SimplicialComplex::from_simplices(tris);
    CHECK(is_closed_2sphere(flipped));
    CHECK_FALSE(is_5_6_star_sphere(flipped).passed);
    CHECK_THROWS_AS(check_sphere_cycle_lemma(flipped), Error);
  }

  TEST_CASE("7-cycle fillings") {
    for (int k = 2; k <= 3; ++k) {
      const auto Y = geodesic_sphere(k);
      const auto v = check_7cycle_fillings(Y);
      CHECK(v.passed);
      CHECK(v.stats.counts.at("full_7_cycles") > 0);
      for (const auto& c : full_cycles(Y, 7, 7)) {
        const auto pair = find_7cycle_filling(Y, c.vertices);
        CHECK(Y.adjacent(pair.y, pair.z));
        const auto& cyc = pair.cycle;
        REQUIRE(cyc.size() == 7);
        for (int i = 0; i < 4; ++i) CHECK(Y.adjacent(pair.y, cyc[i]));
        for (int i : {3, 4, 5, 6, 0}) CHECK(Y.adjacent(pair.z, cyc[i]));
      }
    }
    // the filling search is only claimed for 5/6* spheres
    const auto tiny = parse_text("0 1 2\n0 1 3\n0 2 3\n1 2 3").complex;
    CHECK_THROWS_AS(check_7cycle_fillings(tiny), Error);
  }

  TEST_CASE("wheels in links") {
    CHECK_THROWS_AS(check_wheel_in_link(boundary_4_simplex()), Error);
    const auto none = check_wheel_in_link(tetrahedron(), false);
    CHECK(none.passed);
    CHECK(none.stats.counts.at("wheels_5") == 0);
    CHECK(none.stats.counts.at("wheels_6") == 0);
    // without the 5/6* condition the statement fails: the 600-cell has
    // 6-wheels around full 6-cycles of its icosahedral links
    const auto X = read_complex_file(oracle::fixture("cell600.cplx")).complex;
    const auto v = check_wheel_in_link(X, false);
    CHECK_FALSE(v.passed);
    const auto& w = std::get<Wheel>(*v.witness);
    CHECK(w.size() == 6);
    CHECK(is_valid_wheel(X, w));
    CHECK(v.stats.counts.at("wheels_5") > 0);
  }

  TEST_CASE("five-six-star pipeline negative controls") {
    const auto b = verify_theorem_B(boundary_4_simplex());
    CHECK_FALSE(b.passed());
    CHECK(b.failed_stage == "five_six_star");
    CHECK_FALSE(b.contract_violation);
    const auto g = verify_theorem_B(parse_text("0 1 2 3\n1 2 3 4").complex);
    CHECK(g.failed_stage == "validation");
    const auto t = verify_theorem_B(parse_text("0 1 2").complex);
    CHECK(t.failed_stage == "validation");
  }
}
