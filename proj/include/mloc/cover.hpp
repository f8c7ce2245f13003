#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mloc/complex.hpp"
#include "mloc/queries.hpp"
#include "mloc/verdict.hpp"

namespace mloc {

/// One class of the pair set Z under the transitive closure of "same z,
/// adjacent bases". Members are (ball vertex, target vertex) pairs in
/// lexicographic order; the first one is the representative.
struct ZClass {
  std::vector<std::pair<Vertex, Vertex>> members;
  Vertex vertex = -1;  // the ball vertex created for this class

  Vertex z() const { return members.front().second; }
  std::pair<Vertex, Vertex> representative() const { return members.front(); }
};

/// An invariant failure recorded instead of thrown, because the target
/// failed the 8-location / local 5-largeness check at init.
struct CoverDiagnostic {
  int stage = 0;
  std::string invariant;  // "P", "Q" or "R"
  std::string detail;
  std::optional<Witness> witness;
};

/// Stage i of the ball construction. Ball vertex 0 is the lift of the base;
/// vertices are numbered stage by stage, so B~_j is the prefix of
/// stage_sizes[j] vertices.
struct CoverState {
  SimplicialComplex target;
  Vertex target_base = -1;
  int stage = 0;
  SimplicialComplex ball;
  std::vector<Vertex> sheet_map;
  std::vector<std::size_t> stage_sizes;
  bool hypotheses_hold = true;
  std::vector<std::string> hypothesis_failures;
  /// Classes created by the most recent expansion.
  std::vector<ZClass> last_classes;
  std::vector<CoverDiagnostic> diagnostics;
  Limits limits;

  std::size_t stage_of(Vertex v) const;
  bool at_fixed_point() const { return stage_sizes.size() >= 2 && stage_sizes.back() == stage_sizes[stage_sizes.size() - 2]; }
};

/// B~_1 = B_1(O, X) with the identity map. Throws NotFlag for a non-flag
/// target. Checks the hypotheses (8-located, locally 5-large) once.
CoverState init_cover(const SimplicialComplex& X, Vertex base, const Limits& limits = {});

/// Builds B~_{i+1} and f_{i+1} from stage i and asserts (P), (Q), (R).
/// With the hypotheses satisfied a failed assertion throws
/// InvariantViolation; otherwise it is appended to `diagnostics`.
CoverState expand_ball(const CoverState& state);

/// For every two members (u~, z), (w~, z) of a class from the last
/// expansion: some (y~, z) in Z with y~ adjacent to both (y~ may be u~ or
/// w~). Counts report which case occurred.
Verdict verify_equiv_shortcut(const CoverState& state);

/// Checks (P), (Q) and (R) of a state without throwing.
Verdict check_cover_invariants(const CoverState& state);

struct StageSummary {
  int stage = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

struct CoverReport {
  std::vector<StageSummary> stages;
  Verdict sd_prime;
  Verdict local_isomorphism;
  Verdict interior_m_located;
  Verdict interior_locally_large;
  bool fixed_point = false;
};

struct CoverResult {
  CoverState state;
  CoverReport report;
};

/// Runs expand_ball radius - 1 times from init_cover and summarizes.
CoverResult build_cover(const SimplicialComplex& X, Vertex base, int radius, const Limits& limits = {});

/// Is the sheet map a bijection carrying simplices exactly onto simplices?
bool sheet_map_is_isomorphism(const CoverState& state);

/// Sizes of the fibers f^{-1}(x), indexed by target vertex.
std::vector<std::size_t> fiber_sizes(const CoverState& state);

}  // namespace mloc
