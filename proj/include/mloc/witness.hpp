#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mloc/complex.hpp"

namespace mloc {

/// A k-wheel (center; v1, ..., vk): the rim is a full cycle of the host
/// complex and the center spans a triangle with every rim edge.
struct Wheel {
  Vertex center = -1;
  std::vector<Vertex> rim;

  std::size_t size() const { return rim.size(); }
  std::vector<Vertex> vertex_set() const;
  friend bool operator==(const Wheel&, const Wheel&) = default;
};

enum class Junction { Identified, Edge };

/// A (k,l)-dwheel (v0, v0', w; v1..v_{k-2}; v1'..v_{l-2}'): the union of the
/// k-wheel (v0; v1..v_{k-2}, w, v0') and the l-wheel (v0'; v1'..v_{l-2}', w, v0)
/// with v1 = v1' or v1 ~ v1'.
struct DWheel {
  std::array<Vertex, 2> apexes{-1, -1};
  Vertex shared = -1;
  std::array<std::vector<Vertex>, 2> rims;
  Junction junction = Junction::Identified;

  int k() const { return static_cast<int>(rims[0].size()) + 2; }
  int l() const { return static_cast<int>(rims[1].size()) + 2; }
  std::pair<int, int> type() const { return {k(), l()}; }
  int boundary_length() const { return k() + l() - (junction == Junction::Identified ? 4 : 3); }

  Wheel wheel(int which) const;
  /// (v1, ..., v_{k-2}, w, v'_{l-2}, ..., v'_1), with v1' dropped when identified.
  std::vector<Vertex> boundary() const;
  std::vector<Vertex> vertex_set() const;

  /// The same dwheel with the roles of the two wheels exchanged.
  DWheel swapped() const;
  friend bool operator==(const DWheel&, const DWheel&) = default;
};

/// A set of pairwise adjacent vertices that does not span a stored simplex.
struct Clique {
  std::vector<Vertex> vertices;
  friend bool operator==(const Clique&, const Clique&) = default;
};

/// A named tuple of vertex roles, for conditions with no dedicated shape
/// (an SD' instance, a projection configuration, a link witness, ...).
struct ConditionInstance {
  std::string condition;
  std::vector<std::pair<std::string, std::vector<Vertex>>> roles;

  const std::vector<Vertex>* role(const std::string& name) const;
  friend bool operator==(const ConditionInstance&, const ConditionInstance&) = default;
};

using Witness = std::variant<Cycle, Wheel, DWheel, Simplex, Clique, ConditionInstance>;

std::string witness_kind(const Witness& w);

/// Checks a cycle: distinct vertices, consecutive ones adjacent, and when
/// `require_full` no chord.
bool is_valid_cycle(const SimplicialComplex& X, std::span<const Vertex> cycle, bool require_full);
bool is_valid_wheel(const SimplicialComplex& X, const Wheel& w);
bool is_valid_dwheel(const SimplicialComplex& X, const DWheel& dw);

/// Re-checks a structural witness against X. Condition instances are
/// re-validated by the module that produced them and pass through here.
bool revalidate(const SimplicialComplex& X, const Witness& w);

}  // namespace mloc
