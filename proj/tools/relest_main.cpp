// relest: boosted-wavepacket estimation toolkit.
//
// Subcommands reproduce the standard figure datasets (fig1..fig5), evaluate
// every quantity at one parameter point (compute), or run the validation
// suite (validate). Output is CSV (one file per series, '#' metadata
// prelude) or JSON with a versioned schema.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relest/figures.hpp"
#include "relest/quadrature.hpp"
#include "relest/series.hpp"
#include "relest/validate.hpp"
#include "relest/wavefunction.hpp"

namespace {

using relest::CurveSeries;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitValidation = 3;

struct CommandOptions {
  double m = 1.0;
  double kappa = 0.0;  // 0 -> per-command default
  std::optional<double> v;
  std::vector<double> v_list;
  std::vector<double> kappa_list;
  int grid_points = 0;  // 0 -> per-command default
  double x_max = 0.0;
  std::string out;
  std::string format = "csv";
  unsigned long long seed = 20240817ULL;
  double rel_tol = 0.0;
  std::string config_path;
  bool classical_fi = false;

  // option handles for config-file backfill
  std::map<std::string, CLI::Option*> handles;
};

void register_common(CLI::App* cmd, CommandOptions& opt, bool with_lists) {
  opt.handles["m"] = cmd->add_option("--m", opt.m, "particle mass");
  opt.handles["kappa"] =
      cmd->add_option("--kappa", opt.kappa, "wavepacket spread parameter");
  if (with_lists) {
    opt.handles["v"] =
        cmd->add_option("--v", opt.v, "single observer velocity");
    opt.handles["v-list"] = cmd->add_option("--v-list", opt.v_list,
                                            "observer velocities")
                                ->delimiter(',');
    opt.handles["kappa-list"] =
        cmd->add_option("--kappa-list", opt.kappa_list, "spread parameters")
            ->delimiter(',');
  }
  opt.handles["grid-points"] = cmd->add_option(
      "--grid-points", opt.grid_points, "samples per curve or per axis");
  opt.handles["x-max"] =
      cmd->add_option("--x-max", opt.x_max, "coordinate half-range");
  opt.handles["out"] = cmd->add_option("--out", opt.out, "output location");
  opt.handles["format"] =
      cmd->add_option("--format", opt.format, "output format")
          ->check(CLI::IsMember({"csv", "json"}));
  opt.handles["seed"] =
      cmd->add_option("--seed", opt.seed, "Monte-Carlo seed");
  opt.handles["rel-tol"] =
      cmd->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
  opt.handles["config"] = cmd->add_option(
      "--config", opt.config_path,
      "JSON config whose keys mirror the flag names; flags win");
}

// Config-file values fill in only options the command line did not set.
void apply_config(CommandOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw CLI::ValidationError("config", "cannot open " + opt.config_path);
  nlohmann::json cfg = nlohmann::json::parse(in);
  auto unset = [&](const char* key) {
    auto it = opt.handles.find(key);
    return it != opt.handles.end() && it->second->count() == 0 &&
           cfg.contains(key);
  };
  if (unset("m")) opt.m = cfg["m"].get<double>();
  if (unset("kappa")) opt.kappa = cfg["kappa"].get<double>();
  if (unset("v")) opt.v = cfg["v"].get<double>();
  if (unset("v-list")) opt.v_list = cfg["v-list"].get<std::vector<double>>();
  if (unset("kappa-list"))
    opt.kappa_list = cfg["kappa-list"].get<std::vector<double>>();
  if (unset("grid-points")) opt.grid_points = cfg["grid-points"].get<int>();
  if (unset("x-max")) opt.x_max = cfg["x-max"].get<double>();
  if (unset("out")) opt.out = cfg["out"].get<std::string>();
  if (unset("format")) opt.format = cfg["format"].get<std::string>();
  if (unset("seed")) opt.seed = cfg["seed"].get<unsigned long long>();
  if (unset("rel-tol")) opt.rel_tol = cfg["rel-tol"].get<double>();
}

void check_run_config(const CommandOptions& opt) {
  auto bad_v = [](double v) { return !(v >= 0.0) || !(v <= 1.0); };
  if (opt.v && bad_v(*opt.v))
    throw CLI::ValidationError("--v", "velocity must lie in [0, 1]");
  for (double v : opt.v_list)
    if (bad_v(v))
      throw CLI::ValidationError("--v-list", "velocities must lie in [0, 1]");
  if (!(opt.m > 0.0)) throw CLI::ValidationError("--m", "mass must be positive");
  if (opt.kappa != 0.0 && !(opt.kappa > 0.0))
    throw CLI::ValidationError("--kappa", "spread must be positive");
  for (double k : opt.kappa_list)
    if (!(k > 0.0))
      throw CLI::ValidationError("--kappa-list", "spreads must be positive");
  if (opt.grid_points != 0 && opt.grid_points < 16)
    throw CLI::ValidationError("--grid-points", "resolution must be >= 16");
  if (opt.rel_tol != 0.0 && !(opt.rel_tol > 0.0))
    throw CLI::ValidationError("--rel-tol", "tolerance must be positive");
}

relest::FigureOptions figure_options(const CommandOptions& opt,
                                     double default_kappa) {
  relest::FigureOptions fig;
  fig.m = opt.m;
  fig.kappa = opt.kappa > 0.0 ? opt.kappa : default_kappa;
  fig.v_list = opt.v_list;
  if (fig.v_list.empty() && opt.v) fig.v_list = {*opt.v};
  fig.kappa_list = opt.kappa_list;
  if (opt.grid_points > 0) {
    fig.curve_points = opt.grid_points;
    fig.grid_points = opt.grid_points;
  }
  fig.x_max = opt.x_max;
  if (opt.rel_tol > 0.0) fig.quad.rel_tol = opt.rel_tol;
  return fig;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}

void emit_series(const std::vector<CurveSeries>& set, const CommandOptions& opt,
                 const std::string& command) {
  const std::filesystem::path dir = opt.out.empty() ? "." : opt.out;
  std::filesystem::create_directories(dir);
  if (opt.format == "json") {
    const auto doc = relest::series_set_json(set);
    write_file(dir / (command + ".json"), doc.dump(2) + "\n");
    std::cerr << "wrote " << (dir / (command + ".json")).string() << "\n";
    return;
  }
  for (const CurveSeries& s : set) {
    write_file(dir / (s.name + ".csv"), relest::to_csv(s));
    std::cerr << "wrote " << (dir / (s.name + ".csv")).string() << "\n";
  }
}

int run_figure(const std::string& command, const CommandOptions& opt) {
  relest::FigureOptions fig = figure_options(opt, command == "fig1" ? 1.0 : 0.1);
  std::vector<CurveSeries> set;
  if (command == "fig1") set = relest::fig1_series(fig);
  if (command == "fig2") set = relest::fig2_series(fig);
  if (command == "fig3") set = relest::fig3_series(fig);
  if (command == "fig4") set = relest::fig4_series(fig);
  if (command == "fig5") set = relest::fig5_series(fig);
  emit_series(set, opt, command);
  return kExitOk;
}

int run_compute(const CommandOptions& opt) {
  relest::ComputeOptions copt;
  copt.m = opt.m;
  copt.kappa = opt.kappa > 0.0 ? opt.kappa : 1.0;
  copt.v = opt.v.value_or(0.0);
  copt.classical_fi = opt.classical_fi;
  copt.grid_points = opt.grid_points;
  copt.x_max = opt.x_max;
  if (opt.rel_tol > 0.0) copt.quad.rel_tol = opt.rel_tol;
  const nlohmann::json record = relest::compute_record(copt);
  if (opt.out.empty())
    std::cout << record.dump(2) << "\n";
  else
    write_file(opt.out, record.dump(2) + "\n");
  return kExitOk;
}

int run_validate(const CommandOptions& opt) {
  relest::ValidationTolerances tol;
  tol.mc_seed = opt.seed;
  const relest::ValidationReport report =
      relest::run_validation(tol, &std::cerr);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"informational", c.informational},
                      {"expected_failure", c.expected_failure},
                      {"detail", c.detail},
                      {"seconds", c.seconds}});
  const nlohmann::json doc = {{"schema_version", 1},
                              {"all_passed", report.all_passed()},
                              {"checks", checks}};
  if (opt.out.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_file(opt.out, doc.dump(2) + "\n");
  return report.all_passed() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boosted-wavepacket estimation toolkit"};
  app.require_subcommand(1);

  std::map<std::string, CommandOptions> opts;
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
    CLI::App* cmd = app.add_subcommand(name, "figure dataset");
    register_common(cmd, opts[name], true);
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "compute", "all quantities at one (m, kappa, v) point as JSON");
    CommandOptions& opt = opts["compute"];
    register_common(cmd, opt, false);
    opt.handles["v"] = cmd->add_option("--v", opt.v, "observer velocity");
    cmd->add_flag("--classical-fi", opt.classical_fi,
                  "include the classical position information (v < 1)");
  }
  {
    CLI::App* cmd = app.add_subcommand("validate", "run the validation suite");
    register_common(cmd, opts["validate"], false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  CommandOptions& opt = opts[command];
  try {
    apply_config(opt);
    check_run_config(opt);
    if (command == "compute") return run_compute(opt);
    if (command == "validate") return run_validate(opt);
    return run_figure(command, opt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const relest::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const relest::ResolutionError& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
