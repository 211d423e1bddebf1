#include "kcover/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "kcover/coverage.hpp"
#include "kcover/density.hpp"
#include "kcover/error.hpp"
#include "kcover/json_io.hpp"
#include "kcover/optimizer.hpp"
#include "kcover/patterns.hpp"
#include "kcover/svg.hpp"
#include "kcover/voronoi.hpp"

namespace kcover {

namespace {

// Configuration could not be read or is invalid.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PeriodicConfig load_config(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty()) {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return parse_config(text);
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

struct Options {
  std::string config_path;
  int k = 1;
  double tol = kCoverageTol;
  double congruence_tol = kCongruenceTol;
  std::int64_t budget = 20000;
  std::uint64_t seed = 0;
  std::string name;
  double x = 0.0, y = 0.0, d = 0.0;
  std::string out_path;
  std::string history_path;
  std::string mode = "single-lattice";
  bool congruence = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"k-fold disk covering toolkit: patterns, coverage certificates, densities, optimization"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "PeriodicConfig JSON file (default: stdin)");
  };

  auto* pattern = app.add_subcommand("pattern", "emit a named configuration as JSON");
  pattern->add_option("--name", o.name, "triangle | pattern_b | pattern_c_a | pattern_c_b")->required();
  pattern->add_option("--x", o.x, "pattern_b half-spacing x");
  pattern->add_option("--y", o.y, "pattern_b row spacing y (pattern_c_b: vertical spacing)");
  pattern->add_option("--d", o.d, "pattern_b interleave offset d");

  auto* verify = app.add_subcommand("verify", "certify k-fold coverage");
  add_config(verify);
  verify->add_option("--k", o.k, "coverage order")->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "bound tolerance")->check(CLI::PositiveNumber);

  auto* radius = app.add_subcommand("radius", "bounds on the order-k covering radius");
  add_config(radius);
  radius->add_option("--k", o.k, "coverage order")->check(CLI::PositiveNumber);
  radius->add_option("--tol", o.tol, "bound tolerance")->check(CLI::PositiveNumber);

  auto* density = app.add_subcommand("density", "covering density report");
  add_config(density);
  density->add_option("--k", o.k, "order used for the Toth comparison")->check(CLI::PositiveNumber);

  auto* voronoi = app.add_subcommand("voronoi", "Voronoi cells of the configuration");
  add_config(voronoi);
  voronoi->add_flag("--congruence", o.congruence, "also decide whether all cells are congruent");
  voronoi->add_option("--tol", o.congruence_tol, "congruence quantization tolerance")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Toth, Blundon and Danzer values for order k");
  bounds->add_option("--k", o.k, "coverage order")->required()->check(CLI::PositiveNumber);

  auto* optimize = app.add_subcommand("optimize", "minimize covering density");
  optimize->add_option("--mode", o.mode, "single-lattice | pattern-b")
      ->check(CLI::IsMember({"single-lattice", "pattern-b"}));
  optimize->add_option("--k", o.k, "coverage order (single-lattice)")->check(CLI::Range(1, 6));
  optimize->add_option("--budget", o.budget, "objective evaluation budget")->check(CLI::Range(int64_t{1000}, int64_t{100000000}));
  optimize->add_option("--tol", o.tol, "covering radius tolerance");
  optimize->add_option("--seed", o.seed, "random seed");
  optimize->add_option("--history", o.history_path, "write the improvement history as CSV");

  auto* render = app.add_subcommand("render", "write an SVG of the configuration");
  add_config(render);
  render->add_option("--out", o.out_path, "output SVG path")->required();

  std::vector<const char*> argv{"kcover"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*pattern) {
      PatternSpec spec{o.name, o.x, o.y, o.d};
      if (o.name == "pattern_c_b" && pattern->count("--y") > 0) {
        emit(out, to_json(tangent_pattern_c(TangentVariant::b, o.y)));
      } else {
        emit(out, to_json(build_pattern(spec)));
      }
    } else if (*verify) {
      const PeriodicConfig c = load_config(o.config_path, in);
      emit(out, to_json(verify_k_coverage(c, o.k, o.tol)));
    } else if (*radius) {
      const PeriodicConfig c = load_config(o.config_path, in);
      const CoveringRadius cr = covering_radius(c, o.k, o.tol);
      emit(out, Json{{"k", o.k},
                     {"radius_low", cr.low},
                     {"radius_high", cr.high},
                     {"witness", Json::array({cr.witness.x, cr.witness.y})},
                     {"boxes", cr.boxes},
                     {"capped", cr.capped}});
    } else if (*density) {
      const PeriodicConfig c = load_config(o.config_path, in);
      emit(out, to_json(density_report(c, o.k)));
    } else if (*voronoi) {
      const PeriodicConfig c = load_config(o.config_path, in);
      Json cells = Json::array();
      for (const VoronoiCell& cell : voronoi_cells(c)) cells.push_back(to_json(cell));
      Json j{{"cells", std::move(cells)}};
      if (o.congruence) {
        const CongruenceReport rep = all_cells_congruent(c, o.congruence_tol);
        Json classes = Json::array();
        for (const auto& s : rep.classes) classes.push_back(to_json(s));
        j["congruent"] = rep.congruent;
        j["classes"] = std::move(classes);
        j["class_of"] = rep.class_of;
      }
      emit(out, j);
    } else if (*bounds) {
      const auto blundon = blundon_density(o.k);
      Json known = Json::object();
      for (const auto& kv : known_values()) known[std::string(kv.name)] = kv.value;
      emit(out, Json{{"k", o.k},
                     {"theta", kTheta},
                     {"toth", toth_lower_bound(o.k)},
                     {"blundon", blundon ? Json(*blundon) : Json(nullptr)},
                     {"danzer", o.k == 2 ? Json::array({*known_value("danzer_low"), *known_value("danzer_high")})
                                         : Json(nullptr)},
                     {"known_values", std::move(known)}});
    } else if (*optimize) {
      // The optimizer's default tolerance is looser than the verifier's.
      const double tol = optimize->count("--tol") > 0 ? o.tol : 1e-4;
      const OptimizationResult r = o.mode == "pattern-b" ? optimize_pattern_b(o.budget, tol, o.seed)
                                                         : optimize_single_lattice(o.k, o.budget, tol, o.seed);
      if (!o.history_path.empty()) {
        std::ofstream f(o.history_path);
        if (!f) throw DomainError("cannot write history file: " + o.history_path);
        f << history_csv(r);
      }
      emit(out, to_json(r));
    } else if (*render) {
      const PeriodicConfig c = load_config(o.config_path, in);
      std::ofstream f(o.out_path);
      if (!f) throw DomainError("cannot write SVG file: " + o.out_path);
      f << render_svg(c);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}

}  // namespace kcover
