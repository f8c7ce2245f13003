#include <doctest.h>

#include <map>
#include <random>

#include "mloc/curvature.hpp"
#include "mloc/generators.hpp"
#include "mloc/io.hpp"
#include "mloc/parallel.hpp"
#include "mloc/queries.hpp"
#include "oracles.hpp"

using namespace mloc;

namespace {

oracle::DWheelKey key_of(const DWheel& d) {
  return oracle::dwheel_key(d.apexes[0], d.wheel(0).rim, d.apexes[1], d.wheel(1).rim, d.shared);
}

// A (k,l)-dwheel with the requested junction, built as two fans glued along
// the triangle (v0, v0', w). Rims are long enough to be chordless.
SimplicialComplex two_wheels(int k, int l, Junction junction) {
  // v0 = 0, v0' = 1, w = 2; rim of v0: r_1..r_{k-2}, w, v0'
  std::vector<std::vector<Vertex>> tris;
  Vertex next = 3;
  std::vector<Vertex> rim_a;
  for (int i = 0; i < k - 2; ++i) rim_a.push_back(next++);
  std::vector<Vertex> rim_b;
  if (junction == Junction::Identified) rim_b.push_back(rim_a.front());
  while (static_cast<int>(rim_b.size()) < l - 2) rim_b.push_back(next++);
  auto fan = [&](Vertex c, std::vector<Vertex> cyc) {
    for (std::size_t i = 0; i < cyc.size(); ++i) tris.push_back({c, cyc[i], cyc[(i + 1) % cyc.size()]});
  };
  std::vector<Vertex> ca = rim_a;
  ca.push_back(2);
  ca.push_back(1);
  std::vector<Vertex> cb = rim_b;
  cb.push_back(2);
  cb.push_back(0);
  fan(0, ca);
  fan(1, cb);
  if (junction == Junction::Edge) tris.push_back({rim_a.front(), rim_b.front()});
  return SimplicialComplex::from_simplices(tris);
}

}  // namespace

TEST_SUITE("curvature") {
  TEST_CASE("k-largeness examples") {
    const auto oct = is_k_large(octahedron(), 5);
    CHECK_FALSE(oct.passed);
    CHECK(std::get<Cycle>(*oct.witness).length() == 4);
    CHECK(is_k_large(icosahedron(), 5).passed);
    const auto ico6 = is_k_large(icosahedron(), 6);
    CHECK_FALSE(ico6.passed);
    CHECK(std::get<Cycle>(*ico6.witness).length() == 5);
    CHECK_THROWS_AS(is_k_large(icosahedron(), 3), Error);
    // flagness is part of the definition
    CHECK_FALSE(is_k_large(boundary_4_simplex(), 5).passed);
  }

  TEST_CASE("local k-largeness examples") {
    const auto oct = is_locally_k_large(octahedron(), 5);
    CHECK_FALSE(oct.passed);
    const auto& w = std::get<Wheel>(*oct.witness);
    CHECK(w.size() == 4);
    CHECK(is_valid_wheel(octahedron(), w));
    CHECK(is_locally_k_large(icosahedron(), 5).passed);
    CHECK(is_locally_k_large(tetrahedron(), 5).passed);
    CHECK_FALSE(is_locally_k_large(icosahedron(), 6).passed);
    CHECK(is_locally_k_large(tri_torus(6, 6), 6).passed);
  }

  TEST_CASE("wheel examples") {
    const auto ico = wheels(icosahedron(), 5, 5);
    CHECK(ico.size() == 12);
    for (std::size_t i = 0; i < ico.size(); ++i) CHECK(ico[i].center == static_cast<Vertex>(i));
    CHECK(wheels(tetrahedron(), 4, 8).empty());
    CHECK(wheels(octahedron(), 4, 4).size() == 6);
  }

  TEST_CASE("dwheel boundary arithmetic") {
    const auto a = two_wheels(7, 5, Junction::Identified);
    const auto b = two_wheels(6, 5, Junction::Edge);
    bool found_a = false;
    for (const auto& d : dwheels(a, 8)) {
      if (d.type() == std::pair{7, 5} && d.junction == Junction::Identified) {
        found_a = true;
        CHECK(d.boundary_length() == 8);
        CHECK(d.boundary().size() == 8);
      }
    }
    bool found_b = false;
    for (const auto& d : dwheels(b, 8)) {
      if (d.type() == std::pair{6, 5} && d.junction == Junction::Edge) {
        found_b = true;
        CHECK(d.boundary_length() == 8);
        CHECK(d.boundary().size() == 8);
      }
    }
    CHECK(found_a);
    CHECK(found_b);
    // one less allowed boundary hides both
    for (const auto& d : dwheels(a, 7)) CHECK(d.type() != std::pair{7, 5});
    for (const auto& d : dwheels(b, 7)) CHECK(d.type() != std::pair{6, 5});
  }

  TEST_CASE("icosahedron dwheels") {
    const auto X = icosahedron();
    const auto ds = dwheels(X, 8);
    // derived from the oracle: one (5,5)-dwheel per ordered choice of an
    // edge and one of its two common neighbors, unordered over the wheels
    CHECK(ds.size() == oracle::dwheels(X, 8).size());
    CHECK(ds.size() == 60);
    for (const auto& d : ds) {
      CHECK(d.type() == std::pair{5, 5});
      CHECK(d.junction == Junction::Identified);
      CHECK(d.boundary_length() == 6);
      CHECK(is_valid_dwheel(X, d));
      CHECK(d.vertex_set().size() == 8);
      CHECK_FALSE(in_one_ball(X, d.vertex_set()).has_value());
    }
  }

  TEST_CASE("one-ball examples") {
    const auto X = icosahedron();
    const std::vector<Vertex> tri{0, 1, 2};
    const auto c = in_one_ball(X, tri);
    REQUIRE(c);
    CHECK(*c == 0);
    for (const auto& w : wheels(X, 5, 5)) {
      auto vs = w.vertex_set();
      const auto cand = one_ball_candidates(X, vs);
      CHECK(std::binary_search(cand.begin(), cand.end(), w.center));
      CHECK(in_one_ball(X, vs) == w.center);
    }
  }

  TEST_CASE("m-location examples") {
    CHECK(is_m_located(tetrahedron(), 8).passed);
    const auto ico = is_m_located(icosahedron(), 8);
    CHECK_FALSE(ico.passed);
    const auto& d = std::get<DWheel>(*ico.witness);
    CHECK(d.type() == std::pair{5, 5});
    CHECK(d.boundary_length() == 6);
    CHECK(is_m_located(tri_torus(6, 6), 7).passed);
    const auto t8 = is_m_located(tri_torus(6, 6), 8);
    CHECK_FALSE(t8.passed);
    const auto& td = std::get<DWheel>(*t8.witness);
    CHECK(td.type() == std::pair{6, 6});
    CHECK(is_valid_dwheel(tri_torus(6, 6), td));
    CHECK_FALSE(in_one_ball(tri_torus(6, 6), td.vertex_set()));
    CHECK_THROWS_AS(is_m_located(icosahedron(), 5), Error);
  }

  TEST_CASE("covering checks") {
    const auto ico = icosahedron();
    std::vector<Vertex> id(ico.vertex_count());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Vertex>(i);
    CHECK(check_covering_preservation(id, ico, ico, 8, 5).passed);

    // the 8-cycle double covers the 4-cycle
    const auto c8 = cycle_graph(8);
    const auto c4 = cycle_graph(4);
    const std::vector<Vertex> wrap{0, 1, 2, 3, 0, 1, 2, 3};
    CHECK_NOTHROW(verify_covering(wrap, c8, c4));
    CHECK(check_covering_preservation(wrap, c8, c4, 8, 5).passed);

    // folding the 4-cycle onto an edge is not injective on a 1-ball
    const auto edge = parse_text("0 1").complex;
    const std::vector<Vertex> fold{0, 1, 0, 1};
    try {
      verify_covering(fold, c4, edge);
      FAIL("expected NotACovering");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotACovering);
    }
  }

  TEST_CASE("property: locally 5-large iff no 4-wheel") {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 60; ++i) {
      const auto X = random_flag(5 + static_cast<int>(gen() % 10), 0.25 + 0.01 * (gen() % 40), gen());
      if (!is_flag(X).passed) continue;
      CHECK(is_locally_k_large(X, 5).passed == !oracle::has_4_wheel(X));
    }
  }

  TEST_CASE("property: wheels and dwheels match the oracle") {
    std::vector<SimplicialComplex> corpus{octahedron(), icosahedron(), tri_torus(4, 5), two_wheels(7, 5, Junction::Identified),
                                          two_wheels(6, 5, Junction::Edge), two_wheels(5, 5, Junction::Edge)};
    std::mt19937_64 gen(23);
    for (int i = 0; i < 30; ++i) corpus.push_back(random_flag(8 + static_cast<int>(gen() % 8), 0.4, gen()));
    for (const auto& X : corpus) {
      std::set<std::pair<Vertex, std::vector<Vertex>>> got_w, want_w;
      for (const auto& w : wheels(X, 4, 7)) {
        CHECK(is_valid_wheel(X, w));
        got_w.emplace(w.center, w.rim);
      }
      for (const auto& w : oracle::wheels(X, 4, 7)) want_w.emplace(w.center, w.rim);
      CHECK(got_w == want_w);

      std::map<oracle::DWheelKey, int> got_d, want_d;
      for (const auto& d : dwheels(X, 8)) {
        CHECK(is_valid_dwheel(X, d));
        CHECK(canonical_orientation(d) == d);
        CHECK(canonical_orientation(d.swapped()) == d);
        got_d.emplace(key_of(d), d.boundary_length());
      }
      for (const auto& [k, b] : oracle::dwheels(X, 8)) want_d.emplace(k, b);
      CHECK(got_d == want_d);
    }
  }

  TEST_CASE("property: monotonicity") {
    std::mt19937_64 gen(29);
    std::vector<SimplicialComplex> corpus{icosahedron(), tri_torus(6, 6), tri_torus(4, 4), geodesic_sphere(2)};
    for (int i = 0; i < 20; ++i) corpus.push_back(random_flag(10, 0.35, gen()));
    for (const auto& X : corpus) {
      for (int m = 7; m <= 8; ++m) {
        if (is_m_located(X, m).passed) {
          for (int mm = 6; mm < m; ++mm) CHECK(is_m_located(X, mm).passed);
        }
      }
      for (int k = 5; k <= 7; ++k) {
        if (is_k_large(X, k).passed) {
          for (int kk = 4; kk < k; ++kk) CHECK(is_k_large(X, kk).passed);
        }
      }
    }
  }

  TEST_CASE("vacuity on degree-7 surfaces") {
    for (const char* name : {"klein_quartic.cplx", "hurwitz_156.cplx"}) {
      const auto X = read_complex_file(oracle::fixture(name)).complex;
      CHECK(is_flag(X).passed);
      CHECK(is_locally_k_large(X, 7).passed);
      const auto v = is_m_located(X, 8);
      CHECK(v.passed);
      CHECK(dwheels(X, 8).empty());
    }
  }

  TEST_CASE("results do not depend on the worker count") {
    const auto X = tri_torus(6, 7);
    const auto a = dwheels(X, 8);
    set_default_parallelism(4);
    const auto b = dwheels(X, 8);
    const auto v = is_locally_k_large(octahedron(), 5);
    set_default_parallelism(1);
    CHECK(a == b);
    CHECK(v.witness == is_locally_k_large(octahedron(), 5).witness);
  }
}
