#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mloc/complex.hpp"

namespace mloc {

SimplicialComplex tetrahedron();
SimplicialComplex triangle();
/// The n-cycle as a 1-dimensional complex, n >= 3.
SimplicialComplex cycle_graph(int n);
/// Antipodal pairs are (0,1), (2,3), (4,5).
SimplicialComplex octahedron();
/// 0 is the top, 1..5 the upper ring, 6..10 the lower ring, 11 the bottom.
SimplicialComplex icosahedron();
SimplicialComplex boundary_4_simplex();
/// Icosahedron with every face cut into k^2 triangles: 10k^2 + 2 vertices.
SimplicialComplex geodesic_sphere(int k);
/// Quotient of the equilateral triangle lattice; vertex (i, j) is i*n + j.
SimplicialComplex tri_torus(int m, int n);
/// Flag completion (cliques truncated at 4 vertices) of G(n, p) drawn from
/// mt19937_64 seeded with `seed`.
SimplicialComplex random_flag(int n, double p, std::uint64_t seed);
/// Random tree on n vertices (each vertex i > 0 attached to a uniformly
/// chosen earlier vertex).
SimplicialComplex random_tree(int n, std::uint64_t seed);

/// A generator name followed by its parameters, e.g. {"tri_torus", "6", "6"}.
struct GeneratorSpec {
  std::string name;
  std::vector<std::string> params;
};

/// Names accepted by `generate`, for help text.
std::vector<std::string> generator_names();

/// Throws InvalidArgument for unknown names or out-of-range parameters.
SimplicialComplex generate(const GeneratorSpec& spec);

}  // namespace mloc
