#include "mloc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "mloc/cover.hpp"
#include "mloc/curvature.hpp"
#include "mloc/generators.hpp"
#include "mloc/io.hpp"
#include "mloc/manifold.hpp"
#include "mloc/metric.hpp"
#include "mloc/parallel.hpp"
#include "mloc/report.hpp"

namespace mloc {

namespace {

struct Config {
  bool json = false;
  bool timings = true;
  unsigned threads = 0;
  Limits limits;
  std::string file;
  // check
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> large;
  bool sphere56 = false;
  // sd / metric / cover
  Vertex base = 0;
  int n = 1;
  std::optional<Vertex> target;
  bool delta = false;
  int radius = 2;
  std::string out_path;
  // links
  std::optional<Vertex> vertex;
  // lemmas
  bool no_precondition = false;
  // gen
  std::vector<std::string> gen_spec;
  std::string format = "text";
};

struct Report {
  std::string command;
  std::string input;
  std::vector<Verdict> checks;
  Json data = Json::object();
  std::optional<Json> error;

  int exit_code() const {
    if (error) return kExitUsage;
    for (const auto& c : checks) {
      if (!c.passed) return kExitFail;
    }
    return kExitPass;
  }
  std::string status() const {
    switch (exit_code()) {
      case kExitPass: return "pass";
      case kExitFail: return "fail";
      default: return "error";
    }
  }
};

void emit(const Report& r, const Config& cfg, std::ostream& out) {
  const JsonOptions options{cfg.timings};
  if (cfg.json) {
    Json doc;
    doc["command"] = r.command;
    doc["status"] = r.status();
    doc["input"] = r.input.empty() ? Json(nullptr) : Json(r.input);
    doc["checks"] = Json::array();
    for (const auto& c : r.checks) doc["checks"].push_back(to_json(c, options));
    doc["data"] = r.data;
    if (r.error) doc["error"] = *r.error;
    out << doc.dump(2) << '\n';
    return;
  }
  out << r.command;
  if (!r.input.empty()) out << ' ' << r.input;
  out << ": " << (r.status() == "pass" ? "PASS" : r.status() == "fail" ? "FAIL" : "ERROR") << '\n';
  if (r.error) out << "  " << (*r.error)["message"].get<std::string>() << '\n';
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "PASS " : "FAIL ") << c.check;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (c.witness) out << "       witness: " << describe(*c.witness) << '\n';
    for (const auto& [name, vs] : c.annotations) out << "       " << name << ": " << Json(vs).dump() << '\n';
  }
  for (const auto& [key, value] : r.data.items()) out << "  " << key << ": " << value.dump() << '\n';
}

ParsedComplex load(const Config& cfg, Report& r) {
  r.input = cfg.file;
  ParsedComplex p = read_complex_file(cfg.file);
  r.data["vertices"] = p.complex.vertex_count();
  r.data["dimension"] = p.complex.dimension();
  if (p.relabeled()) r.data["relabeling"] = p.original_ids;
  return p;
}

// File vertex id -> dense id, for user-supplied vertex options.
Vertex dense_vertex(const ParsedComplex& p, Vertex original, const char* what) {
  const auto it = std::lower_bound(p.original_ids.begin(), p.original_ids.end(), original);
  if (it == p.original_ids.end() || *it != original) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " " + std::to_string(original) + " is not a vertex");
  }
  return static_cast<Vertex>(it - p.original_ids.begin());
}

void cmd_validate(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  try {
    const ManifoldReport m = validate_closed_3manifold(p.complex);
    r.checks.push_back(m.validation);
    r.checks.push_back(m.five_six_star);
    r.data["is_pseudomanifold"] = m.is_pseudomanifold;
    r.data["edge_link_cycles"] = m.edge_link_cycles;
    r.data["vertex_links_spheres"] = m.vertex_links_spheres;
    Json degrees = Json::array();
    for (const auto& [e, d] : m.edge_degrees) degrees.push_back({{"edge", e.to_vector()}, {"degree", d}});
    r.data["edge_degrees"] = degrees;
    r.data["degree5_rule"] = "at most one degree-5 edge per triangle";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPure) throw;
    r.checks.push_back(Verdict::fail("validation", Simplex(std::span<const Vertex>(e.witness())), e.what()));
  }
}

void cmd_check(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  const auto& X = p.complex;
  r.checks.push_back(is_flag(X));
  if (cfg.large) r.checks.push_back(is_k_large(X, *cfg.large, cfg.limits));
  if (cfg.k) r.checks.push_back(is_locally_k_large(X, *cfg.k, cfg.limits));
  if (cfg.m) r.checks.push_back(is_m_located(X, *cfg.m, cfg.limits));
  if (cfg.sphere56) r.checks.push_back(is_5_6_star_sphere(X));
}

void cmd_sd(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  const Vertex base = dense_vertex(p, cfg.base, "base");
  const SDReport sd = check_sd_prime(p.complex, base, cfg.n);
  r.checks.push_back(sd.verdict);
  r.data["sd_prime"] = to_json(sd, JsonOptions{cfg.timings});
}

void cmd_metric(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  const auto& X = p.complex;
  const Vertex base = dense_vertex(p, cfg.base, "base");
  const DistanceField d = distances(X, base);
  std::vector<std::size_t> spheres;
  for (std::size_t v = 0; v < d.dist.size(); ++v) {
    if (d.dist[v] == kUnreachable) continue;
    if (spheres.size() <= static_cast<std::size_t>(d.dist[v])) spheres.resize(d.dist[v] + 1, 0);
    ++spheres[d.dist[v]];
  }
  r.data["sphere_sizes"] = spheres;
  r.data["unreachable"] = std::count(d.dist.begin(), d.dist.end(), kUnreachable);
  if (cfg.target) {
    const Vertex t = dense_vertex(p, *cfg.target, "target");
    r.data["interval"] = to_json(interval(X, base, t));
    r.data["thinness"] = to_json(interval_thinness(X, base, t));
  }
  if (cfg.delta) {
    const Delta delta = delta_four_point(X, cfg.limits);
    r.data["delta"] = {{"half_units", delta.half_units}, {"value", delta.value()}, {"tuple", delta.tuple}};
  }
}

void cmd_cover(const Config& cfg, Report& r, std::ostream& err) {
  const ParsedComplex p = load(cfg, r);
  const Vertex base = dense_vertex(p, cfg.base, "base");
  CoverState state = init_cover(p.complex, base, cfg.limits);
  Json stages = Json::array();
  auto summarize = [&](const CoverState& s) {
    stages.push_back({{"stage", s.stage}, {"vertices", s.ball.vertex_count()}, {"edges", s.ball.edge_count()}});
    err << "cover: stage " << s.stage << ", " << s.ball.vertex_count() << " vertices\n";
  };
  summarize(state);
  while (state.stage < cfg.radius) {
    state = expand_ball(state);
    summarize(state);
  }
  Verdict invariants = check_cover_invariants(state);
  if (invariants.passed && !state.diagnostics.empty()) {
    const auto& d = state.diagnostics.front();
    invariants = Verdict::fail("cover_invariants", *d.witness,
                               "(" + d.invariant + ") failed at stage " + std::to_string(d.stage) + ": " + d.detail);
  }
  r.checks.push_back(invariants);
  r.checks.push_back(check_sd_prime(state.ball, 0, state.stage - 1).verdict);
  if (state.stage > 1) r.checks.push_back(verify_equiv_shortcut(state));
  r.data["stages"] = stages;
  r.data["hypotheses_hold"] = state.hypotheses_hold;
  r.data["hypothesis_failures"] = state.hypothesis_failures;
  r.data["diagnostics"] = state.diagnostics.size();
  r.data["fixed_point"] = state.at_fixed_point();
  r.data["fiber_sizes"] = fiber_sizes(state);
  if (!cfg.out_path.empty()) {
    write_file(cfg.out_path, cover_state_json(state).dump() + "\n");
    r.data["written"] = cfg.out_path;
  }
}

void cmd_links(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  const auto& X = p.complex;
  std::vector<Vertex> targets;
  if (cfg.vertex) {
    targets.push_back(dense_vertex(p, *cfg.vertex, "vertex"));
  } else {
    for (std::size_t v = 0; v < X.vertex_count(); ++v) targets.push_back(static_cast<Vertex>(v));
  }
  Verdict spheres = Verdict::pass("vertex_links_spheres");
  Verdict star = Verdict::pass("links_five_six_star");
  Json census = Json::array();
  for (Vertex v : targets) {
    Relabeled L;
    try {
      L = vertex_link_sphere(X, v);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LinkNotSphere) throw;
      if (spheres.passed) spheres = Verdict::fail("vertex_links_spheres", Simplex{v}, "vertex link is not a 2-sphere");
      continue;
    }
    Verdict s = is_5_6_star_sphere(L.complex);
    if (!s.passed && star.passed) {
      Witness w = *s.witness;
      if (auto* simplex = std::get_if<Simplex>(&w)) {
        const auto parent = L.to_parent_ids(simplex->vertices());
        w = ConditionInstance{"link_five_six_star", {{"vertex", {v}}, {"offender", parent}}};
      }
      star = Verdict::fail("links_five_six_star", w, "link of " + std::to_string(v) + ": " + s.detail);
    }
    census.push_back({{"vertex", v}, {"link_vertices", L.complex.vertex_count()}, {"degrees", s.stats.counts}});
  }
  r.checks.push_back(spheres);
  if (spheres.passed) r.checks.push_back(star);
  r.data["links"] = census;
}

void cmd_lemmas(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  const auto& X = p.complex;
  if (X.dimension() == 2) {
    r.data["mode"] = "sphere";
    r.checks.push_back(is_5_6_star_sphere(X));
    if (!r.checks.back().passed) return;
    r.checks.push_back(check_sphere_cycle_lemma(X, cfg.limits));
    r.checks.push_back(check_7cycle_fillings(X, cfg.limits));
    const SoccerDual dual = soccer_dual(X);
    r.data["soccer_dual"] = {{"pentagons", dual.pentagons()},
                             {"hexagons", dual.hexagons()},
                             {"dual_vertices", dual.dual_vertices.size()},
                             {"dual_edges", dual.dual_edges.size()}};
    return;
  }
  r.data["mode"] = "3-manifold";
  r.checks.push_back(check_wheel_in_link(X, !cfg.no_precondition, cfg.limits));
  Verdict cycles = Verdict::pass("link_cycle_lemma");
  Verdict fillings = Verdict::pass("link_7cycle_fillings");
  for (std::size_t v = 0; v < X.vertex_count(); ++v) {
    const Relabeled L = vertex_link_sphere(X, static_cast<Vertex>(v));
    if (!is_5_6_star_sphere(L.complex).passed) continue;
    for (auto [verdict, target] : {std::pair{check_sphere_cycle_lemma(L.complex, cfg.limits), &cycles},
                                   std::pair{check_7cycle_fillings(L.complex, cfg.limits), &fillings}}) {
      for (const auto& [name, n] : verdict.stats.counts) target->stats.counts[name] += n;
      if (!verdict.passed && target->passed) {
        const auto* c = std::get_if<Cycle>(&*verdict.witness);
        target->passed = false;
        target->witness = ConditionInstance{"link_cycle", {{"vertex", {static_cast<Vertex>(v)}},
                                                           {"cycle", c ? L.to_parent_ids(c->vertices) : std::vector<Vertex>{}}}};
        target->detail = "link of " + std::to_string(v) + ": " + verdict.detail;
      }
    }
  }
  r.checks.push_back(cycles);
  r.checks.push_back(fillings);
}

void cmd_theorem_b(const Config& cfg, Report& r) {
  const ParsedComplex p = load(cfg, r);
  const TheoremBReport t = verify_theorem_B(p.complex, cfg.limits);
  for (const auto& s : t.stages) r.checks.push_back(s);
  r.data["failed_stage"] = t.failed_stage.empty() ? Json(nullptr) : Json(t.failed_stage);
  r.data["contract_violation"] = t.contract_violation;
  Json types = Json::object();
  for (const auto& [type, n] : t.dwheel_types) types[std::to_string(type.first) + "," + std::to_string(type.second)] = n;
  r.data["dwheel_types"] = types;
}

int cmd_gen(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.gen_spec.empty()) throw Error(ErrorCode::InvalidArgument, "gen needs a generator name");
  GeneratorSpec spec{cfg.gen_spec.front(), {cfg.gen_spec.begin() + 1, cfg.gen_spec.end()}};
  const SimplicialComplex X = generate(spec);
  const Format format = cfg.format == "json" ? Format::Json : Format::Text;
  const std::string text = serialize(X, format);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_file(cfg.out_path, text);
    err << "wrote " << X.name() << " (" << X.vertex_count() << " vertices) to " << cfg.out_path << '\n';
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Checks local curvature conditions (k-largeness, m-location, SD') on simplicial complexes", "mloc"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Emit a JSON report");
  app.add_flag("!--no-timings", cfg.timings, "Omit elapsed times so reports are byte-stable");
  app.add_option("--threads", cfg.threads, "Worker threads (default: MLOC_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--max-cycle-length", cfg.limits.max_cycle_length, "Cap on enumerated cycle length")
      ->check(CLI::Range(4, 64));
  app.add_option("--max-cover-stage", cfg.limits.max_cover_stage, "Cap on cover stages")->check(CLI::PositiveNumber);
  app.add_option("--max-cover-vertices", cfg.limits.max_cover_vertices, "Cap on cover ball size")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-delta-vertices", cfg.limits.max_delta_vertices, "Cap on vertices for the four-point delta")
      ->check(CLI::PositiveNumber);

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", cfg.file, "Complex file (text or JSON, - for stdin)")->required();
  };
  auto* validate = app.add_subcommand("validate", "Closed 3-manifold and 5/6* checks");
  file_arg(validate);
  auto* check = app.add_subcommand("check", "Flagness, largeness and location checks");
  file_arg(check);
  check->add_option("--m", cfg.m, "m-location")->check(CLI::Range(6, 64));
  check->add_option("--k", cfg.k, "local k-largeness")->check(CLI::Range(4, 64));
  check->add_option("--large", cfg.large, "global k-largeness")->check(CLI::Range(4, 64));
  check->add_flag("--sphere-56", cfg.sphere56, "5/6* sphere check");
  auto* sd = app.add_subcommand("sd", "SD'_n(O) check");
  file_arg(sd);
  sd->add_option("--base", cfg.base, "Base vertex O (file id)");
  sd->add_option("--n", cfg.n, "Radius n")->check(CLI::NonNegativeNumber);
  auto* metric = app.add_subcommand("metric", "Spheres, intervals, thinness and four-point delta");
  file_arg(metric);
  metric->add_option("--base", cfg.base, "Base vertex (file id)");
  metric->add_option("--target", cfg.target, "Interval endpoint (file id)");
  metric->add_flag("--delta", cfg.delta, "Compute the four-point delta");
  auto* cover = app.add_subcommand("cover", "Grow cover balls and check their invariants");
  file_arg(cover);
  cover->add_option("--base", cfg.base, "Base vertex (file id)");
  cover->add_option("--radius", cfg.radius, "Final stage")->check(CLI::PositiveNumber);
  cover->add_option("--out", cfg.out_path, "Write the ball and sheet map as JSON");
  auto* links = app.add_subcommand("links", "Vertex links as 2-spheres and their 5/6* status");
  file_arg(links);
  links->add_option("--vertex", cfg.vertex, "Only this vertex (file id)");
  auto* lemmas = app.add_subcommand("lemmas", "Wheel, cycle and 7-cycle lemmas on a 5/6* sphere or 3-manifold");
  file_arg(lemmas);
  lemmas->add_flag("--no-precondition", cfg.no_precondition, "Run the wheel lemma without the 5/6* precondition");
  auto* theorem_b = app.add_subcommand("theorem-b", "5/6* to 8-located locally 5-large pipeline");
  file_arg(theorem_b);
  auto* gen = app.add_subcommand("gen", "Generate a complex");
  gen->add_option("spec", cfg.gen_spec, "Generator name and parameters")->required();
  gen->add_option("-o,--output", cfg.out_path, "Output file (default: standard output)");
  gen->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  std::string footer = "Generators:";
  for (const auto& g : generator_names()) footer += "\n  " + g;
  gen->footer(footer);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (cfg.threads > 0) set_default_parallelism(cfg.threads);

  Report report;
  report.command = app.get_subcommands().front()->get_name();
  try {
    if (*gen) return cmd_gen(cfg, out, err);
    if (*validate) cmd_validate(cfg, report);
    if (*check) cmd_check(cfg, report);
    if (*sd) cmd_sd(cfg, report);
    if (*metric) cmd_metric(cfg, report);
    if (*cover) cmd_cover(cfg, report, err);
    if (*links) cmd_links(cfg, report);
    if (*lemmas) cmd_lemmas(cfg, report);
    if (*theorem_b) cmd_theorem_b(cfg, report);
  } catch (const Error& e) {
    if (report.command == "gen") {
      err << "mloc gen: " << e.what() << '\n';
      return kExitUsage;
    }
    report.checks.clear();
    report.error = to_json(e);
  }
  emit(report, cfg, out);
  return report.exit_code();
}

}  // namespace mloc
