#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mloc/complex.hpp"
#include "mloc/queries.hpp"
#include "mloc/verdict.hpp"

namespace mloc {

/// k-largeness: X flag and no full j-cycle for 4 <= j < k. A flagness
/// failure is a failing verdict, not an error.
Verdict is_k_large(const SimplicialComplex& X, int k, const Limits& limits = {});

/// Every link of a nonempty simplex is k-large. The witness names the
/// simplex; for a vertex with an offending cycle it is the wheel itself.
Verdict is_locally_k_large(const SimplicialComplex& X, int k, const Limits& limits = {});

/// Wheels centered at v with rim length in [min_k, max_k]: the cycles of
/// the link of v that are full in X, in canonical form.
std::vector<Wheel> wheels_at(const SimplicialComplex& X, Vertex center, int min_k, int max_k,
                             const Limits& limits = {});
/// All wheels, ordered by center and then canonical rim.
std::vector<Wheel> wheels(const SimplicialComplex& X, int min_k, int max_k, const Limits& limits = {});

/// Dwheels with boundary length <= max_boundary, one per unordered pair of
/// wheels. Canonical orientation puts the larger wheel first; equal sizes
/// are ordered by apex id.
std::vector<DWheel> dwheels(const SimplicialComplex& X, int max_boundary, const Limits& limits = {});

/// Reorients a dwheel into the canonical orientation used by `dwheels`.
DWheel canonical_orientation(const DWheel& dw);

/// Least vertex y with A inside B_1(y), if any.
std::optional<Vertex> in_one_ball(const SimplicialComplex& X, std::span<const Vertex> A);
/// The vertices a 1-ball containing A could be centered at: A together with
/// the common neighbors of A.
std::vector<Vertex> one_ball_candidates(const SimplicialComplex& X, std::span<const Vertex> A);

/// m-location: every dwheel of boundary length <= m lies in a 1-ball.
Verdict is_m_located(const SimplicialComplex& X, int m, const Limits& limits = {});

/// Throws NotACovering (witness: the offending 1-ball center) unless f is a
/// simplicial map restricting to isomorphisms from 1-balls of `cover` onto
/// the spans of their images in `base`.
void verify_covering(std::span<const Vertex> f, const SimplicialComplex& cover,
                     const SimplicialComplex& base);

/// Checks on a concrete covering that m-location and local k-largeness of
/// the base carry over to the cover.
Verdict check_covering_preservation(std::span<const Vertex> f, const SimplicialComplex& cover,
                                    const SimplicialComplex& base, int m, int k,
                                    const Limits& limits = {});

}  // namespace mloc
