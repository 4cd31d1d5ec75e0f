// asua: average steps until absorption for random walks on graphs.
//
// Exit codes: 0 ok, 1 verification mismatch or usage error, 2 parse error,
// 3 validation error, 4 solve error.

#include "asua/chain.hpp"
#include "asua/closed_forms.hpp"
#include "asua/error.hpp"
#include "asua/families.hpp"
#include "asua/maze.hpp"
#include "asua/monte_carlo.hpp"
#include "asua/survey.hpp"
#include "asua/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using asua::Error;
using asua::ErrorKind;
using json = nlohmann::json;

enum ExitCode { kOk = 0, kMismatch = 1, kParse = 2, kValidation = 3, kSolve = 4 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::RaggedRows:
    case ErrorKind::IllegalCharacter:
    case ErrorKind::NoTarget:
    case ErrorKind::EmptyMaze:
      return kParse;
    case ErrorKind::SingularSystem:
      return kSolve;
    default:
      return kValidation;
  }
}

// "-" reads standard input.
std::string read_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::Parse, "expected integer, got '" + s + "'");
  return v;
}

std::vector<std::int64_t> to_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    out.push_back(to_int(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

struct Globals {
  std::string format = "tsv";
  bool json() const { return format == "json"; }
};

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string file;
  bool use_float = false;
  bool check = false;
};

int cmd_solve(const SolveArgs& a, const Globals& g) {
  const auto graph = asua::parse_edge_list(read_file(a.file));
  asua::validate_reachability(graph);

  if (a.use_float) {
    const auto t = asua::solve_asua_float(graph);
    if (g.json()) {
      json out = {{"vertices", json::array()}, {"residual", t.residual}};
      for (std::size_t v = 0; v < t.values.size(); ++v)
        out["vertices"].push_back({{"id", v + 1}, {"value", t.values[v]}});
      std::cout << out.dump(2) << '\n';
    } else {
      for (std::size_t v = 0; v < t.values.size(); ++v)
        std::cout << 'v' << v + 1 << '\t' << fixed12(t.values[v]) << '\n';
      if (a.check) std::cout << "# residual\t" << t.residual << '\n';
    }
    return kOk;
  }

  const auto t = asua::solve_asua(graph);
  asua::Rational worst = 0;
  if (a.check)
    for (const auto& r : asua::asua_equation_residuals(graph, t))
      if (abs(r) > worst) worst = abs(r);

  if (g.json()) {
    json out = {{"vertices", json::array()}};
    for (std::size_t v = 0; v < t.size(); ++v)
      out["vertices"].push_back({{"id", v + 1},
                                 {"rational", asua::format_fraction(t[v])},
                                 {"decimal", asua::format_decimal(t[v])}});
    if (a.check) out["max_residual"] = asua::format_fraction(worst);
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t v = 0; v < t.size(); ++v)
      std::cout << 'v' << v + 1 << '\t' << asua::format_fraction(t[v]) << '\t'
                << asua::format_decimal(t[v]) << '\n';
    if (a.check) std::cout << "# max-residual\t" << asua::format_fraction(worst) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

asua::SeaDragonSpec spec_from(const std::string& family, const std::vector<std::string>& p,
                              std::size_t& consumed) {
  auto need = [&](std::size_t count) {
    if (p.size() < count)
      throw Error(ErrorKind::Parse, family + " needs " + std::to_string(count) + " parameters");
  };
  if (family == "sd1") {
    need(2);
    consumed = 2;
    return asua::SeaDragonSpec::sd1(to_int(p[0]), to_int_list(p[1]));
  }
  need(3);
  consumed = 3;
  if (family == "sd2") return asua::SeaDragonSpec::sd2(to_int(p[0]), to_int(p[1]), to_int(p[2]));
  if (family == "sd3") return asua::SeaDragonSpec::sd3(to_int(p[0]), to_int(p[1]), to_int(p[2]));
  if (family == "sd4") return asua::SeaDragonSpec::sd4(to_int(p[0]), to_int(p[1]), to_int_list(p[2]));
  throw Error(ErrorKind::BadSpec, "unknown family '" + family + "'");
}

struct FormulaArgs {
  std::string family;
  std::vector<std::string> params;
  bool all = false;
  bool vertices = false;
  bool printed = false;
};

int cmd_formula(const FormulaArgs& a, const Globals& g) {
  std::vector<std::int64_t> values;
  const auto& p = a.params;
  auto index_arg = [&](std::size_t pos) {
    if (a.all) return std::int64_t{0};
    if (p.size() <= pos) throw Error(ErrorKind::Parse, "missing vertex index (or use --all)");
    return to_int(p[pos]);
  };

  if (a.family == "path" || a.family == "cycle" || a.family == "stem") {
    if (p.empty()) throw Error(ErrorKind::Parse, a.family + " needs its size parameter");
    const auto n = to_int(p[0]);
    const auto eval = [&](std::int64_t i) {
      if (a.family == "path") return asua::path_asua(n, i);
      if (a.family == "cycle") return asua::cycle_asua(n, i);
      return asua::stem_offset(n, i);
    };
    const std::int64_t last = a.family == "stem" ? n + 1 : n - 1;
    if (a.all)
      for (std::int64_t i = 1; i <= last; ++i) values.push_back(eval(i));
    else
      values.push_back(eval(index_arg(1)));
  } else {
    std::size_t used = 0;
    const auto spec = spec_from(a.family, p, used);
    if (a.vertices) {
      values = asua::sea_dragon_values(spec);
    } else {
      const auto eval = [&](std::int64_t i) {
        return a.printed ? asua::sd23_printed_asua(spec, i) : asua::spine_asua(spec, i);
      };
      if (a.all)
        for (std::int64_t i = 1; i <= spec.n - 1; ++i) values.push_back(eval(i));
      else
        values.push_back(eval(index_arg(used)));
    }
  }

  if (g.json()) {
    std::cout << json{{"family", a.family}, {"values", values}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
    std::cout << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string family = "all";
  std::string n;
  std::string d = "1..5";
  std::int64_t max_stems = 3;
  bool printed = false;
  bool no_float = false;
  std::size_t trials = 50;
  std::uint64_t seed = 20240101;
};

int cmd_verify(const VerifyArgs& a, const Globals& g) {
  asua::VerifyOptions opts;
  if (!a.n.empty()) opts.n = asua::parse_range(a.n);
  opts.d = asua::parse_range(a.d);
  opts.max_stems = a.max_stems;
  opts.printed_constant = a.printed;
  opts.check_float = !a.no_float;
  opts.stem_trials = a.trials;
  opts.seed = a.seed;

  std::vector<asua::VerifyReport> reports;
  if (a.family == "all")
    reports = asua::verify_all(opts);
  else
    reports.push_back(asua::verify_family(a.family, opts));

  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok &= r.ok();
    if (g.json()) {
      json j = {{"family", r.family},
                {"instances", r.instances},
                {"values", r.values},
                {"mismatches", r.mismatches},
                {"float_failures", r.float_failures},
                {"max_float_rel_error", r.max_float_rel_error},
                {"failures", r.failures}};
      if (a.printed) {
        j["printed_instances"] = r.printed_instances;
        j["printed_mismatched_instances"] = r.printed_mismatched_instances;
      }
      out.push_back(j);
      continue;
    }
    std::cout << r.family << "\tinstances=" << r.instances << "\tvalues=" << r.values
              << "\tmismatches=" << r.mismatches << "\tfloat_failures=" << r.float_failures
              << "\tmax_float_rel_error=" << r.max_float_rel_error;
    if (a.printed && r.printed_instances > 0)
      std::cout << "\tprinted_constant_mismatched_instances=" << r.printed_mismatched_instances << '/'
                << r.printed_instances;
    std::cout << '\n';
    for (const auto& f : r.failures) std::cout << "  FAIL " << f << '\n';
  }
  if (g.json()) std::cout << out.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string file;
  std::size_t start = 1;
  std::uint64_t walks = 100000;
  std::uint64_t seed = 0;
  std::uint64_t cap = 1000000000;
  unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& a, const Globals& g) {
  const auto graph = asua::parse_edge_list(read_file(a.file));
  if (a.start == 0 || a.start > graph.vertex_count())
    throw Error(ErrorKind::IdOutOfRange, "--start must be in 1.." + std::to_string(graph.vertex_count()));
  asua::WalkConfig cfg;
  cfg.start = a.start - 1;
  cfg.walk_count = a.walks;
  cfg.seed = a.seed;
  cfg.step_cap = a.cap;
  cfg.threads = a.threads;
  const auto est = asua::simulate(graph, cfg);
  if (g.json()) {
    std::cout << json{{"start", a.start},
                      {"mean", est.mean},
                      {"stderr", est.stderr_},
                      {"walks_completed", est.walks_completed},
                      {"walks_capped", est.walks_capped}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "start\tv" << a.start << "\nmean\t" << fixed12(est.mean) << "\nstderr\t"
              << fixed12(est.stderr_) << "\nwalks_completed\t" << est.walks_completed
              << "\nwalks_capped\t" << est.walks_capped << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_maze(const std::string& file, const Globals& g) {
  const auto grid = asua::parse_maze(read_file(file));
  const auto mg = asua::maze_to_graph(grid);
  const auto t = asua::solve_asua(mg.graph);
  if (g.json()) {
    json cells = json::array();
    for (std::size_t v = 0; v < mg.coords.size(); ++v)
      cells.push_back({{"row", mg.coords[v].first + 1},
                       {"col", mg.coords[v].second + 1},
                       {"vertex", v + 1},
                       {"rational", asua::format_fraction(t[v])},
                       {"decimal", asua::format_decimal(t[v])}});
    std::cout << json{{"rows", grid.rows}, {"cols", grid.cols}, {"cells", cells}}.dump(2) << '\n';
  } else {
    std::cout << asua::render_maze_asua(grid, mg, t);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::vector<std::string> params;
  std::size_t absorb = 0;
};

int cmd_generate(const GenerateArgs& a, const Globals& g) {
  std::optional<asua::VertexId> absorber;
  if (a.absorb != 0) absorber = a.absorb - 1;
  asua::Graph graph;
  if (a.family == "path" || a.family == "cycle" || a.family == "star") {
    if (a.params.size() != 1) throw Error(ErrorKind::Parse, a.family + " takes one parameter n");
    const auto n = static_cast<std::size_t>(to_int(a.params[0]));
    if (absorber && *absorber >= n) throw Error(ErrorKind::IdOutOfRange, "--absorb outside 1..n");
    graph = a.family == "path"    ? asua::gen_path(n, absorber)
            : a.family == "cycle" ? asua::gen_cycle(n, absorber)
                                  : asua::gen_star(n, absorber);
  } else {
    std::size_t used = 0;
    graph = asua::gen_sea_dragon(spec_from(a.family, a.params, used));
    if (absorber) {
      if (*absorber >= graph.vertex_count()) throw Error(ErrorKind::IdOutOfRange, "--absorb out of range");
      const asua::VertexId set[] = {*absorber};
      graph = graph.with_absorbing(set);
    }
  }
  if (g.json()) {
    json edges = json::array();
    for (const auto& e : graph.edges()) edges.push_back({e.u + 1, e.v + 1, e.multiplicity});
    json absorbing = json::array();
    for (auto v : graph.absorbing()) absorbing.push_back(v + 1);
    std::cout << json{{"vertices", graph.vertex_count()}, {"absorb", absorbing}, {"edges", edges}}.dump()
              << '\n';
  } else {
    asua::write_edge_list(std::cout, graph);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct SurveyArgs {
  std::string n = "3..9";
  std::vector<std::string> absorber;
};

json extremes_json(const asua::Extremes& e) {
  return {{"convention", e.convention},
          {"min", asua::format_compact(e.min)},
          {"max", asua::format_compact(e.max)},
          {"min_trees", e.min_trees},
          {"max_trees", e.max_trees},
          {"star_attains_min", e.star_attains_min},
          {"path_attains_max", e.path_attains_max}};
}

std::string join_ids(const std::vector<std::size_t>& ids) {
  std::string out;
  for (auto id : ids) out += (out.empty() ? "" : ",") + std::to_string(id);
  return out;
}

int cmd_survey(const SurveyArgs& a, const Globals& g) {
  const auto range = asua::parse_range(a.n);
  if (range.lo < 2 || range.hi > 10 || range.lo > range.hi)
    throw Error(ErrorKind::OutOfRange, "survey supports orders within 2..10");
  std::vector<asua::AbsorberConvention> conventions;
  for (const auto& name : a.absorber) conventions.push_back(asua::parse_absorber_convention(name));
  if (conventions.empty())
    conventions = {asua::AbsorberConvention::Max, asua::AbsorberConvention::Min, asua::AbsorberConvention::Each};

  json out = json::array();
  for (auto n = range.lo; n <= range.hi; ++n) {
    const auto level = asua::survey_order(static_cast<std::size_t>(n), conventions);
    if (g.json()) {
      json trees = json::array();
      for (const auto& t : level.trees)
        trees.push_back({{"index", t.index},
                         {"edges", t.edges},
                         {"star", t.star},
                         {"path", t.path},
                         {"tsigma_min", asua::format_compact(t.tsigma_min)},
                         {"tsigma_max", asua::format_compact(t.tsigma_max)},
                         {"round_trip_max_pair", asua::format_compact(t.round_trip_max_pair)},
                         {"round_trip_diametral", asua::format_compact(t.round_trip_diametral)}});
      json ex = json::array();
      for (const auto& e : level.tsigma) ex.push_back(extremes_json(e));
      for (const auto& e : level.round_trip) ex.push_back(extremes_json(e));
      out.push_back({{"n", n}, {"tree_count", level.trees.size()}, {"trees", trees}, {"extremes", ex}});
      continue;
    }
    std::cout << "n\t" << n << "\ttrees\t" << level.trees.size() << '\n';
    std::cout << "#tree\tindex\tshape\ttsigma_min\ttsigma_max\trt_max_pair\trt_diametral\tedges\n";
    for (const auto& t : level.trees)
      std::cout << "tree\t" << t.index << '\t' << (t.path ? (t.star ? "path+star" : "path") : (t.star ? "star" : "-"))
                << '\t' << asua::format_compact(t.tsigma_min) << '\t' << asua::format_compact(t.tsigma_max) << '\t'
                << asua::format_compact(t.round_trip_max_pair) << '\t'
                << asua::format_compact(t.round_trip_diametral) << '\t' << t.edges << '\n';
    auto print = [](const asua::Extremes& e) {
      std::cout << "extremes\t" << e.convention << "\tmin=" << asua::format_compact(e.min)
                << "\tmin_trees=" << join_ids(e.min_trees) << "\tmax=" << asua::format_compact(e.max)
                << "\tmax_trees=" << join_ids(e.max_trees) << "\tstar_attains_min=" << (e.star_attains_min ? "yes" : "no")
                << "\tpath_attains_max=" << (e.path_attains_max ? "yes" : "no") << '\n';
    };
    for (const auto& e : level.tsigma) print(e);
    for (const auto& e : level.round_trip) print(e);
  }
  if (g.json()) std::cout << out.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average steps until absorption for random walks on graphs"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  int rc = kOk;

  SolveArgs solve;
  auto* sub_solve = app.add_subcommand("solve", "Exact ASUA of every vertex of an edge-list graph");
  sub_solve->add_option("file", solve.file, "Edge-list file")->required();
  sub_solve->add_flag("--float", solve.use_float, "Use the double-precision solver");
  sub_solve->add_flag("--check", solve.check, "Also print the largest ASUA-equation residual");

  FormulaArgs formula;
  auto* sub_formula = app.add_subcommand(
      "formula",
      "Evaluate a closed form: path n i | cycle n i | stem l j | sd1 n k1,k2,.. i | sd2 n k b i | "
      "sd3 n k c i | sd4 n k c1,c2,.. i");
  sub_formula->add_option("family", formula.family)->required();
  sub_formula->add_option("params", formula.params)->required();
  sub_formula->add_flag("--all", formula.all, "All spine indices 1..n-1 (stem: 1..l+1)");
  sub_formula->add_flag("--vertices", formula.vertices, "Every vertex of the generated sea dragon");
  sub_formula->add_flag("--sd23-printed-constant", formula.printed,
                        "SD2/SD3 with the (k+1)^2 constant as printed (known wrong)");

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Compare closed forms against the exact solver");
  sub_verify->add_option("family", verify.family, "path|cycle|stem|sd1|sd2|sd3|sd4|all")->capture_default_str();
  sub_verify->add_option("--n", verify.n, "Spine/graph order range a..b");
  sub_verify->add_option("--d", verify.d, "Stem mass range (SD2 b, SD3 c, SD4 total)")->capture_default_str();
  sub_verify->add_option("--max-stems", verify.max_stems, "SD4 maximum stem count")->capture_default_str();
  sub_verify->add_flag("--sd23-printed-constant", verify.printed,
                       "Also count instances where the printed (k+1)^2 constant disagrees");
  sub_verify->add_flag("--no-float", verify.no_float, "Skip the float/exact agreement check");
  sub_verify->add_option("--trials", verify.trials, "Random trees for the stem family")->capture_default_str();
  sub_verify->add_option("--seed", verify.seed, "Seed for the stem family")->capture_default_str();

  SimulateArgs sim;
  auto* sub_sim = app.add_subcommand("simulate", "Monte Carlo estimate of the ASUA of one vertex");
  sub_sim->add_option("file", sim.file, "Edge-list file")->required();
  sub_sim->add_option("--start", sim.start, "Start vertex (1-based)")->capture_default_str();
  sub_sim->add_option("--walks", sim.walks, "Number of walks")->capture_default_str();
  sub_sim->add_option("--seed", sim.seed, "Seed")->capture_default_str();
  sub_sim->add_option("--cap", sim.cap, "Step cap per walk")->capture_default_str();
  sub_sim->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")->capture_default_str();

  std::string maze_file;
  auto* sub_maze = app.add_subcommand("maze", "Per-cell ASUA of an ASCII maze");
  sub_maze->add_option("file", maze_file, "Maze file")->required();

  GenerateArgs gen;
  auto* sub_gen = app.add_subcommand(
      "generate", "Emit a family member as an edge list: path n | cycle n | star n | sd1 n k1,.. | "
                  "sd2 n k b | sd3 n k c | sd4 n k c1,..");
  sub_gen->add_option("family", gen.family)->required();
  sub_gen->add_option("params", gen.params)->required();
  sub_gen->add_option("--absorb", gen.absorb, "Override the absorbing vertex (1-based)");

  SurveyArgs survey;
  auto* sub_survey = app.add_subcommand("survey", "t_sigma and round-trip extremes over all trees");
  sub_survey->add_option("--n", survey.n, "Order range a..b within 2..10")->capture_default_str();
  sub_survey->add_option("--absorber", survey.absorber, "Absorber convention(s): max, min, each");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; genuine argument errors share the parse code.
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  try {
    if (*sub_solve) rc = cmd_solve(solve, globals);
    else if (*sub_formula) rc = cmd_formula(formula, globals);
    else if (*sub_verify) rc = cmd_verify(verify, globals);
    else if (*sub_sim) rc = cmd_simulate(sim, globals);
    else if (*sub_maze) rc = cmd_maze(maze_file, globals);
    else if (*sub_gen) rc = cmd_generate(gen, globals);
    else if (*sub_survey) rc = cmd_survey(survey, globals);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return rc;
}
