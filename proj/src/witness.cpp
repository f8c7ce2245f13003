#include "mloc/witness.hpp"

#include <algorithm>
#include <set>

namespace mloc {

std::vector<Vertex> Wheel::vertex_set() const {
  std::vector<Vertex> out(rim);
  out.push_back(center);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Wheel DWheel::wheel(int which) const {
  Wheel w;
  w.center = apexes[which];
  w.rim = rims[which];
  w.rim.push_back(shared);
  w.rim.push_back(apexes[1 - which]);
  return w;
}

std::vector<Vertex> DWheel::boundary() const {
  std::vector<Vertex> out(rims[0]);
  out.push_back(shared);
  const auto& other = rims[1];
  const std::size_t stop = junction == Junction::Identified ? 1 : 0;
  for (std::size_t i = other.size(); i > stop; --i) out.push_back(other[i - 1]);
  return out;
}

std::vector<Vertex> DWheel::vertex_set() const {
  std::vector<Vertex> out(rims[0]);
  out.insert(out.end(), rims[1].begin(), rims[1].end());
  out.push_back(shared);
  out.push_back(apexes[0]);
  out.push_back(apexes[1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DWheel DWheel::swapped() const {
  DWheel d = *this;
  std::swap(d.apexes[0], d.apexes[1]);
  std::swap(d.rims[0], d.rims[1]);
  return d;
}

const std::vector<Vertex>* ConditionInstance::role(const std::string& name) const {
  for (const auto& [key, value] : roles) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::string witness_kind(const Witness& w) {
  struct Visitor {
    std::string operator()(const Cycle&) const { return "cycle"; }
    std::string operator()(const Wheel&) const { return "wheel"; }
    std::string operator()(const DWheel&) const { return "dwheel"; }
    std::string operator()(const Simplex&) const { return "simplex"; }
    std::string operator()(const Clique&) const { return "clique"; }
    std::string operator()(const ConditionInstance&) const { return "instance"; }
  };
  return std::visit(Visitor{}, w);
}

bool is_valid_cycle(const SimplicialComplex& X, std::span<const Vertex> cycle, bool require_full) {
  const std::size_t n = cycle.size();
  if (n < 4) return false;
  if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != n) return false;
  for (Vertex v : cycle) {
    if (!X.contains_vertex(v)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!X.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  if (require_full) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (X.adjacent(cycle[i], cycle[j])) return false;
      }
    }
  }
  return true;
}

bool is_valid_wheel(const SimplicialComplex& X, const Wheel& w) {
  if (!X.contains_vertex(w.center)) return false;
  if (std::find(w.rim.begin(), w.rim.end(), w.center) != w.rim.end()) return false;
  if (!is_valid_cycle(X, w.rim, true)) return false;
  const std::size_t n = w.rim.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!X.contains(Simplex{w.center, w.rim[i], w.rim[(i + 1) % n]})) return false;
  }
  return true;
}

bool is_valid_dwheel(const SimplicialComplex& X, const DWheel& dw) {
  if (dw.rims[0].size() < 2 || dw.rims[1].size() < 2) return false;
  if (!is_valid_wheel(X, dw.wheel(0)) || !is_valid_wheel(X, dw.wheel(1))) return false;
  const Vertex a = dw.rims[0].front();
  const Vertex b = dw.rims[1].front();
  if (dw.junction == Junction::Identified) return a == b;
  return a != b && X.adjacent(a, b);
}

bool revalidate(const SimplicialComplex& X, const Witness& w) {
  struct Visitor {
    const SimplicialComplex& X;
    bool operator()(const Cycle& c) const { return is_valid_cycle(X, c.vertices, c.is_full); }
    bool operator()(const Wheel& wh) const { return is_valid_wheel(X, wh); }
    bool operator()(const DWheel& dw) const { return is_valid_dwheel(X, dw); }
    bool operator()(const Simplex& s) const { return X.contains(s); }
    bool operator()(const Clique& c) const {
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
          if (!X.adjacent(c.vertices[i], c.vertices[j])) return false;
        }
      }
      if (c.vertices.size() > 4) return true;
      return !X.contains(Simplex(std::span<const Vertex>(c.vertices)));
    }
    bool operator()(const ConditionInstance&) const { return true; }
  };
  return std::visit(Visitor{X}, w);
}

}  // namespace mloc
