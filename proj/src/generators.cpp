#include "mloc/generators.hpp"

#include <charconv>
#include <map>
#include <random>
#include <tuple>

namespace mloc {

namespace {

SimplicialComplex from_list(const std::vector<std::vector<Vertex>>& simplices, std::string name,
                            std::size_t vertex_count = 0) {
  return SimplicialComplex::from_simplices(simplices, std::move(name), vertex_count);
}

double unit_interval(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

SimplicialComplex tetrahedron() { return from_list({{0, 1, 2, 3}}, "tetrahedron"); }

SimplicialComplex triangle() { return from_list({{0, 1, 2}}, "triangle"); }

SimplicialComplex cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle length must be at least 3");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_list(edges, "c_" + std::to_string(n));
}

SimplicialComplex octahedron() {
  std::vector<std::vector<Vertex>> tris;
  for (Vertex a : {0, 1}) {
    for (Vertex b : {2, 3}) {
      for (Vertex c : {4, 5}) tris.push_back({a, b, c});
    }
  }
  return from_list(tris, "octahedron");
}

SimplicialComplex icosahedron() {
  std::vector<std::vector<Vertex>> tris;
  for (int i = 0; i < 5; ++i) {
    const Vertex u = 1 + i;
    const Vertex u1 = 1 + (i + 1) % 5;
    const Vertex l = 6 + i;
    const Vertex l1 = 6 + (i + 1) % 5;
    tris.push_back({0, u, u1});
    tris.push_back({u, u1, l});
    tris.push_back({l, l1, u1});
    tris.push_back({11, l, l1});
  }
  return from_list(tris, "icosahedron");
}

SimplicialComplex boundary_4_simplex() {
  std::vector<std::vector<Vertex>> tets;
  for (Vertex skip = 0; skip < 5; ++skip) {
    std::vector<Vertex> t;
    for (Vertex v = 0; v < 5; ++v) {
      if (v != skip) t.push_back(v);
    }
    tets.push_back(t);
  }
  return from_list(tets, "boundary_4_simplex");
}

SimplicialComplex geodesic_sphere(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "geodesic_sphere needs k >= 1");
  const SimplicialComplex base = icosahedron();
  const auto& faces = base.simplices(2);
  const auto& base_edges = base.simplices(1);
  // corners keep their ids; edge points are numbered by (edge, step from
  // the smaller endpoint); face interiors come last
  std::map<std::tuple<Vertex, Vertex, int>, Vertex> edge_point;
  Vertex next = static_cast<Vertex>(base.vertex_count());
  for (const Simplex& e : base_edges) {
    for (int t = 1; t < k; ++t) edge_point[{e[0], e[1], t}] = next++;
  }
  std::vector<std::vector<Vertex>> tris;
  for (const Simplex& f : faces) {
    const Vertex A = f[0];
    const Vertex B = f[1];
    const Vertex C = f[2];
    std::map<std::pair<int, int>, Vertex> local;
    auto on_edge = [&](Vertex p, Vertex q, int steps_from_p) {
      if (steps_from_p == 0) return p;
      if (steps_from_p == k) return q;
      return p < q ? edge_point.at({p, q, steps_from_p}) : edge_point.at({q, p, k - steps_from_p});
    };
    // lattice point (i, j) is (k - i - j) A + i B + j C
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; i + j <= k; ++j) {
        Vertex v;
        if (j == 0) {
          v = on_edge(A, B, i);
        } else if (i == 0) {
          v = on_edge(A, C, j);
        } else if (i + j == k) {
          v = on_edge(B, C, j);
        } else {
          v = next++;
        }
        local[{i, j}] = v;
      }
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; i + j < k; ++j) {
        tris.push_back({local[{i, j}], local[{i + 1, j}], local[{i, j + 1}]});
        if (i + j < k - 1) tris.push_back({local[{i + 1, j}], local[{i, j + 1}], local[{i + 1, j + 1}]});
      }
    }
  }
  return from_list(tris, "geodesic_sphere(" + std::to_string(k) + ")");
}

SimplicialComplex tri_torus(int m, int n) {
  if (m < 4 || n < 4) throw Error(ErrorCode::InvalidArgument, "tri_torus needs m, n >= 4");
  auto id = [&](int i, int j) { return static_cast<Vertex>(((i % m) + m) % m * n + ((j % n) + n) % n); };
  std::vector<std::vector<Vertex>> tris;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return from_list(tris, "tri_torus(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

SimplicialComplex random_flag(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "random_flag needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "random_flag needs 0 <= p <= 1");
  std::mt19937_64 gen(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (unit_interval(gen) < p) edges.emplace_back(a, b);
    }
  }
  return SimplicialComplex::flag_completion(static_cast<std::size_t>(n), edges, false,
                                            "random_flag(" + std::to_string(n) + "," + std::to_string(p) + "," +
                                                std::to_string(seed) + ")");
}

SimplicialComplex random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "random_tree needs n >= 1");
  std::mt19937_64 gen(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(gen() % static_cast<std::uint64_t>(v)), v);
  }
  return SimplicialComplex::flag_completion(static_cast<std::size_t>(n), edges, true,
                                            "random_tree(" + std::to_string(n) + ")");
}

std::vector<std::string> generator_names() {
  return {"tetrahedron",        "triangle",         "c_n N",         "octahedron",
          "icosahedron",        "boundary_4_simplex", "geodesic_sphere K", "tri_torus M N",
          "random_flag N P SEED"};
}

namespace {

long long int_param(const GeneratorSpec& spec, std::size_t i) {
  const std::string& s = spec.params[i];
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidArgument, spec.name + ": expected an integer, got '" + s + "'");
  }
  return v;
}

double real_param(const GeneratorSpec& spec, std::size_t i) {
  const std::string& s = spec.params[i];
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidArgument, spec.name + ": expected a number, got '" + s + "'");
  }
  return v;
}

void arity(const GeneratorSpec& spec, std::size_t n) {
  if (spec.params.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                spec.name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
  }
}

}  // namespace

SimplicialComplex generate(const GeneratorSpec& spec) {
  const std::string& name = spec.name;
  if (name == "tetrahedron") return arity(spec, 0), tetrahedron();
  if (name == "triangle") return arity(spec, 0), triangle();
  if (name == "octahedron") return arity(spec, 0), octahedron();
  if (name == "icosahedron") return arity(spec, 0), icosahedron();
  if (name == "boundary_4_simplex") return arity(spec, 0), boundary_4_simplex();
  if (name == "c_n") return arity(spec, 1), cycle_graph(static_cast<int>(int_param(spec, 0)));
  if (name == "geodesic_sphere") return arity(spec, 1), geodesic_sphere(static_cast<int>(int_param(spec, 0)));
  if (name == "tri_torus") {
    arity(spec, 2);
    return tri_torus(static_cast<int>(int_param(spec, 0)), static_cast<int>(int_param(spec, 1)));
  }
  if (name == "random_flag") {
    arity(spec, 3);
    const long long seed = int_param(spec, 2);
    if (seed < 0) throw Error(ErrorCode::InvalidArgument, "random_flag seed must be nonnegative");
    return random_flag(static_cast<int>(int_param(spec, 0)), real_param(spec, 1), static_cast<std::uint64_t>(seed));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
}

}  // namespace mloc
