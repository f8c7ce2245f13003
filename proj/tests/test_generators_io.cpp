#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mloc/curvature.hpp"
#include "mloc/generators.hpp"
#include "mloc/io.hpp"
#include "mloc/manifold.hpp"
#include "mloc/queries.hpp"
#include "oracles.hpp"

using namespace mloc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("generators_io") {
  TEST_CASE("platonic generators") {
    const auto ico = icosahedron();
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(ico.simplex_count(2) == 20);
    CHECK(ico.euler_characteristic() == 2);
    CHECK(octahedron().euler_characteristic() == 2);
    CHECK_FALSE(octahedron().adjacent(0, 1));
    CHECK(octahedron().adjacent(0, 2));
    CHECK(cycle_graph(4).simplex_count(2) == 0);
    CHECK(cycle_graph(4).edge_count() == 4);
    CHECK_THROWS_AS(cycle_graph(2), Error);
  }

  TEST_CASE("geodesic spheres") {
    const auto g1 = geodesic_sphere(1);
    CHECK(g1.vertex_count() == 12);
    CHECK(g1.edge_count() == 30);
    for (int k = 1; k <= 5; ++k) {
      const auto g = geodesic_sphere(k);
      CHECK(g.vertex_count() == static_cast<std::size_t>(10 * k * k + 2));
      CHECK(g.euler_characteristic() == 2);
      CHECK(is_closed_2sphere(g));
      std::size_t five = 0, six = 0;
      for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
        five += g.degree(v) == 5;
        six += g.degree(v) == 6;
      }
      CHECK(five == 12);
      CHECK(five + six == g.vertex_count());
      CHECK(is_5_6_star_sphere(g).passed == (k >= 2));
    }
  }

  TEST_CASE("triangulated tori") {
    const auto t = tri_torus(6, 6);
    CHECK(t.vertex_count() == 36);
    CHECK(t.euler_characteristic() == 0);
    for (Vertex v = 0; v < 36; ++v) CHECK(t.degree(v) == 6);
    CHECK(is_flag(t).passed);
    CHECK(is_locally_k_large(t, 6).passed);
    // one link checked by hand: neighbors of (0,0) form the hexagon
    // (0,1) (1,1) (1,0) (0,5) (5,5) (5,0)
    const auto L = link(t, Simplex{0});
    CHECK(L.to_parent == std::vector<Vertex>{1, 5, 6, 7, 30, 35});
    CHECK(full_cycles(L.complex, 6, 6).size() == 1);
    CHECK_THROWS_AS(tri_torus(3, 6), Error);
    for (int m = 4; m <= 7; ++m) {
      for (int n = 4; n <= 7; ++n) {
        const auto T = tri_torus(m, n);
        CHECK(is_m_located(T, 7).passed);
        const auto v = is_m_located(T, 8);
        CHECK_FALSE(v.passed);
        CHECK(std::get<DWheel>(*v.witness).type() == std::pair{6, 6});
      }
    }
  }

  TEST_CASE("random generators are reproducible") {
    const auto a = random_flag(15, 0.4, 99);
    const auto b = random_flag(15, 0.4, 99);
    CHECK(serialize_text(a) == serialize_text(b));
    CHECK(serialize_text(a) != serialize_text(random_flag(15, 0.4, 100)));
    // frozen byte-for-byte output of the canonical serialization
    CHECK(serialize_text(random_flag(8, 0.5, 2026)) ==
          "# name: random_flag(8,0.500000,2026)\n"
          "0 1 5\n0 1 7\n0 3 5\n0 3 7\n1 4 5\n1 4 7\n1 6\n2 3 4\n3 4 5\n3 4 7\n");
    const auto T = random_tree(20, 5);
    CHECK(T.edge_count() == 19);
    CHECK(T.is_connected());
  }

  TEST_CASE("generate dispatches by name") {
    CHECK(generate({"tri_torus", {"6", "6"}}).vertex_count() == 36);
    CHECK(generate({"geodesic_sphere", {"2"}}).vertex_count() == 42);
    CHECK(generate({"icosahedron", {}}).vertex_count() == 12);
    CHECK_THROWS_AS(generate({"nonsense", {}}), Error);
    CHECK_THROWS_AS(generate({"tri_torus", {"6"}}), Error);
    CHECK_THROWS_AS(generate({"geodesic_sphere", {"x"}}), Error);
    for (const auto& name : generator_names()) CHECK_FALSE(name.empty());
  }

  TEST_CASE("text parsing") {
    const auto p = parse_text("# a comment\n0 1\n\n1 2  # trailing\n2 3\n3 0\n");
    CHECK(p.complex.edge_count() == 4);
    CHECK(p.complex.simplex_count(2) == 0);
    CHECK_FALSE(p.relabeled());

    const auto sparse = parse_text("10 20 30");
    CHECK(sparse.relabeled());
    CHECK(sparse.original_ids == std::vector<Vertex>{10, 20, 30});
    CHECK(sparse.complex.vertex_count() == 3);

    try {
      (void)parse_text("0 1\n1 2\n0 1 x\n");
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_text("0 1 2 3 4"), Error);
    CHECK_THROWS_AS(parse_text("0 1 1"), Error);
    CHECK_THROWS_AS(parse_text("0 -1"), Error);
  }

  TEST_CASE("JSON parsing") {
    const auto p = parse_complex(R"({"name": "sq", "maximal_simplices": [[0,1],[1,2],[2,3],[3,0]]})");
    CHECK(p.complex.name() == "sq");
    CHECK(p.complex.edge_count() == 4);
    CHECK_THROWS_AS(parse_json(R"({"maximal_simplices": [[0, "a"]]})"), Error);
    CHECK_THROWS_AS(parse_json("{not json"), Error);
  }

  TEST_CASE("round trips") {
    std::vector<SimplicialComplex> corpus{tetrahedron(), octahedron(), icosahedron(), tri_torus(4, 5),
                                          geodesic_sphere(2), random_flag(12, 0.5, 4), cycle_graph(6)};
    for (const char* f : {"klein_quartic.cplx", "hurwitz_156.cplx", "cell600.cplx"}) {
      corpus.push_back(read_complex_file(oracle::fixture(f)).complex);
    }
    for (const auto& X : corpus) {
      const std::string text = serialize_text(X);
      const auto again = parse_text(text).complex;
      CHECK(serialize_text(again) == text);
      CHECK(again.maximal_simplices() == X.maximal_simplices());
      const auto from_json = parse_complex(serialize_json(X)).complex;
      CHECK(from_json.maximal_simplices() == X.maximal_simplices());
      CHECK(from_json.name() == X.name());
    }
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "mloc_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "square.cplx";
    write_file(path, serialize_text(cycle_graph(4)));
    const auto p = read_complex_file(path.string());
    CHECK(p.complex.edge_count() == 4);
    CHECK_FALSE(slurp(path.string()).empty());
    CHECK_THROWS_AS(read_complex_file((dir / "missing.cplx").string()), Error);
    std::filesystem::remove_all(dir);
  }
}
