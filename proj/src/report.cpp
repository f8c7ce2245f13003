#include "mloc/report.hpp"

#include <sstream>

namespace mloc {

namespace {

std::string join(std::span<const Vertex> vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

}  // namespace

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = witness_kind(w);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Cycle>) {
          j["vertices"] = x.vertices;
          j["length"] = x.length();
        } else if constexpr (std::is_same_v<T, Wheel>) {
          j["center"] = x.center;
          j["rim"] = x.rim;
        } else if constexpr (std::is_same_v<T, DWheel>) {
          j["apexes"] = x.apexes;
          j["shared"] = x.shared;
          j["rims"] = x.rims;
          j["junction"] = x.junction == Junction::Identified ? "identified" : "edge";
          j["type"] = {x.k(), x.l()};
          j["boundary_length"] = x.boundary_length();
          j["boundary"] = x.boundary();
        } else if constexpr (std::is_same_v<T, Simplex>) {
          j["vertices"] = x.to_vector();
        } else if constexpr (std::is_same_v<T, Clique>) {
          j["vertices"] = x.vertices;
        } else {
          j["condition"] = x.condition;
          Json roles = Json::object();
          for (const auto& [name, vs] : x.roles) roles[name] = vs;
          j["roles"] = roles;
        }
      },
      w);
  return j;
}

Json to_json(const Verdict& v, const JsonOptions& options) {
  Json j;
  j["check"] = v.check;
  j["status"] = v.passed ? "pass" : "fail";
  j["detail"] = v.detail;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (!v.annotations.empty()) {
    Json notes = Json::object();
    for (const auto& [name, vs] : v.annotations) notes[name] = vs;
    j["annotations"] = notes;
  }
  Json stats;
  stats["counts"] = Json::object();
  for (const auto& [name, n] : v.stats.counts) stats["counts"][name] = n;
  if (options.timings) stats["elapsed_ms"] = v.stats.elapsed_ms;
  j["stats"] = stats;
  return j;
}

Json to_json(const Error& e) {
  Json j;
  j["code"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  j["witness"] = e.witness();
  return j;
}

Json to_json(const SDReport& r, const JsonOptions& options) {
  Json j;
  j["base"] = r.base;
  j["max_radius"] = r.max_radius;
  j["radii"] = Json::array();
  for (const auto& s : r.radii) {
    j["radii"].push_back({{"radius", s.radius},
                          {"triangle", s.triangle_ok ? "pass" : "fail"},
                          {"vertex", s.vertex_ok ? "pass" : "fail"},
                          {"edges_checked", s.edges_checked},
                          {"pairs_checked", s.pairs_checked}});
  }
  j["failed_radius"] = r.failed_radius ? Json(*r.failed_radius) : Json(nullptr);
  j["failed_condition"] = r.failed_condition
                              ? Json(*r.failed_condition == SDCondition::Triangle ? "T" : "V")
                              : Json(nullptr);
  j["verdict"] = to_json(r.verdict, options);
  return j;
}

Json to_json(const ThinnessReport& t) {
  return Json{{"thinness", t.thinness}, {"layer", t.layer}, {"pair", t.pair}};
}

Json to_json(const LayeredInterval& I) {
  return Json{{"from", I.from}, {"to", I.to}, {"n", I.n}, {"layers", I.layers}};
}

Json cover_state_json(const CoverState& state) {
  Json j;
  j["name"] = "cover_ball(" + state.target.name() + ")";
  j["maximal_simplices"] = Json::array();
  for (const Simplex& s : state.ball.maximal_simplices()) j["maximal_simplices"].push_back(s.to_vector());
  j["sheet_map"] = state.sheet_map;
  j["stage"] = state.stage;
  j["base"] = state.target_base;
  j["stage_sizes"] = state.stage_sizes;
  return j;
}

std::string describe(const Witness& w) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Cycle>) {
          return std::to_string(x.length()) + "-cycle (" + join(x.vertices) + ")";
        } else if constexpr (std::is_same_v<T, Wheel>) {
          return std::to_string(x.size()) + "-wheel (" + std::to_string(x.center) + "; " + join(x.rim) + ")";
        } else if constexpr (std::is_same_v<T, DWheel>) {
          return "(" + std::to_string(x.k()) + "," + std::to_string(x.l()) + ")-dwheel (" +
                 std::to_string(x.apexes[0]) + ", " + std::to_string(x.apexes[1]) + ", " + std::to_string(x.shared) +
                 "; " + join(x.rims[0]) + "; " + join(x.rims[1]) + "), " +
                 (x.junction == Junction::Identified ? "identified" : "edge") + " junction, boundary length " +
                 std::to_string(x.boundary_length());
        } else if constexpr (std::is_same_v<T, Simplex>) {
          return "simplex [" + join(x.vertices()) + "]";
        } else if constexpr (std::is_same_v<T, Clique>) {
          return "clique {" + join(x.vertices) + "}";
        } else {
          std::string out = x.condition;
          for (const auto& [name, vs] : x.roles) out += " " + name + "=[" + join(vs) + "]";
          return out;
        }
      },
      w);
}

}  // namespace mloc
