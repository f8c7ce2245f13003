#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mloc/complex.hpp"
#include "mloc/verdict.hpp"

namespace mloc {

/// Safety caps. Enumerations refuse (BoundExceeded / TooLarge) rather than
/// silently truncate when a request goes past them.
struct Limits {
  int max_cycle_length = 8;
  int max_cover_stage = 10;
  std::size_t max_cover_vertices = 100000;
  std::size_t max_delta_vertices = 200;
};

/// Is the subcomplex with the given simplices full in X? Fails with the
/// least simplex of X spanned by Y's vertices that Y does not contain.
Verdict is_full(const SimplicialComplex& X, std::span<const Simplex> subcomplex);
/// A cycle as a 1-dimensional subcomplex; a failing witness is a chord.
Verdict is_full(const SimplicialComplex& X, const Cycle& cycle);

/// Every clique of 3..5 vertices must span a stored simplex. The witness is
/// the smallest empty clique, lexicographically least among those.
Verdict is_flag(const SimplicialComplex& X);

/// Chordless cycles of length in [min_len, max_len], each once, in canonical
/// form, ordered by length then lexicographically.
std::vector<Cycle> full_cycles(const SimplicialComplex& X, int min_len, int max_len,
                               const Limits& limits = {});

namespace detail {

/// Chordless cycle enumeration on a graph given by sorted adjacency lists
/// (`step`). A pair of non-consecutive cycle vertices counts as a chord when
/// `chord(a, b)` holds; `chord` must include every step edge.
std::vector<std::vector<Vertex>> chordless_cycles(const std::vector<std::vector<Vertex>>& step,
                                                  const std::function<bool(Vertex, Vertex)>& chord,
                                                  int min_len, int max_len);

}  // namespace detail

}  // namespace mloc
