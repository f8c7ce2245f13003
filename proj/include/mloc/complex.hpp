#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mloc/error.hpp"

namespace mloc {

/// Largest simplex dimension the library stores.
inline constexpr int kMaxDimension = 3;

/// A simplex as a strictly increasing list of 1..4 vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; throws on duplicates, negatives or more than four vertices.
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::span<const Vertex> vertices);

  std::span<const Vertex> vertices() const { return {v_.data(), n_}; }
  std::size_t size() const { return n_; }
  int dimension() const { return static_cast<int>(n_) - 1; }
  bool empty() const { return n_ == 0; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.begin() + n_; }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  Simplex with(Vertex v) const;
  Simplex without(Vertex v) const;
  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  /// Orders by dimension, then lexicographically.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  std::array<Vertex, 4> v_{};
  std::uint8_t n_ = 0;
};

/// A cyclic vertex sequence (v1, ..., vk). `is_full` is only meaningful
/// relative to the complex it was computed against.
struct Cycle {
  std::vector<Vertex> vertices;
  bool is_full = false;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Lexicographically least rotation/reflection of a cyclic sequence.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

/// Immutable finite simplicial complex of dimension at most 3 with every
/// simplex stored explicitly (not flag-implied).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given simplices. vertex_count = max id + 1
  /// unless `vertex_count` is larger.
  static SimplicialComplex from_simplices(std::span<const std::vector<Vertex>> simplices,
                                          std::string name = {}, std::size_t vertex_count = 0);

  /// Flag completion of a graph. Cliques of size 5 or more either throw
  /// DimensionTooHigh (strict) or are truncated to their 4-subsets.
  static SimplicialComplex flag_completion(std::size_t vertex_count,
                                           std::span<const std::pair<Vertex, Vertex>> edges,
                                           bool strict, std::string name = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return simplices_[1].size(); }
  std::size_t simplex_count(int dim) const { return simplices_[dim].size(); }
  int dimension() const;
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const;
  bool contains(const Simplex& s) const;
  bool contains_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  /// All stored simplices of the given dimension, sorted.
  const std::vector<Simplex>& simplices(int dim) const { return simplices_[dim]; }
  std::vector<Simplex> maximal_simplices() const;
  /// Simplices of dimension >= 1 containing v.
  std::vector<Simplex> star(Vertex v) const;
  /// Simplices strictly containing s.
  std::vector<Simplex> cofaces(const Simplex& s) const;

  std::vector<Vertex> common_neighbors(std::span<const Vertex> vs) const;
  long euler_characteristic() const;
  bool is_connected() const;

 private:
  void index();

  std::string name_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::array<std::vector<Simplex>, kMaxDimension + 1> simplices_;
  // star_[v] indexes into simplices_ as (dim, position); dim >= 1 only
  std::vector<std::vector<std::pair<std::uint8_t, std::uint32_t>>> star_;
};

/// A complex carved out of a parent, with contiguous ids and a map back.
struct Relabeled {
  SimplicialComplex complex;
  std::vector<Vertex> to_parent;

  Vertex parent_of(Vertex v) const { return to_parent[v]; }
  /// Inverse lookup; -1 if the parent vertex is absent.
  Vertex local_of(Vertex parent) const;
  std::vector<Vertex> to_parent_ids(std::span<const Vertex> local) const;
};

SimplicialComplex build_complex(std::span<const std::vector<Vertex>> maximal_simplices,
                                std::string name = {});

/// The link X_sigma, relabeled.
Relabeled link(const SimplicialComplex& X, const Simplex& sigma);

/// The span <A>: the full subcomplex on A, relabeled.
Relabeled span(const SimplicialComplex& X, std::span<const Vertex> vertices);

}  // namespace mloc
