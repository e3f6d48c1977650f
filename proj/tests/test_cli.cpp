#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relest/figures.hpp"
#include "relest/fisher.hpp"
#include "relest/series.hpp"
#include "relest/special.hpp"
#include "relest/state.hpp"
#include "relest/validate.hpp"

using namespace relest;
namespace fs = std::filesystem;

namespace {

int run_binary(const std::string& args, const std::string& stdout_path = "") {
  std::string cmd = std::string(RELEST_BIN) + " " + args;
  if (!stdout_path.empty()) cmd += " > " + stdout_path;
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("series CSV format") {
  CurveSeries s;
  s.name = "demo";
  s.abscissa_label = "x";
  s.ordinate_label = "y";
  s.points = {{0.0, 1.0}, {0.5, 2.0}, {1.0, -3.0}};
  s.metadata = {{"m", "1"}, {"kappa", "0.5"}};
  const std::string csv = to_csv(s);
  CHECK(csv.rfind("# series: demo\n", 0) == 0);
  CHECK(csv.find("# m: 1\n") != std::string::npos);
  CHECK(csv.find("x,y\n") != std::string::npos);
  CHECK(csv.find("0.5,2\n") != std::string::npos);
  // every data row has exactly one comma
  std::istringstream lines(csv);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    CHECK(std::count(line.begin(), line.end(), ',') == 1);
  }
  SUBCASE("non-increasing abscissa is rejected") {
    s.points.push_back({0.2, 0.0});
    CHECK_THROWS_AS(to_csv(s), std::invalid_argument);
  }
}

TEST_CASE("fig1 series") {
  FigureOptions opt;
  opt.curve_points = 40;
  const auto set = fig1_series(opt);
  REQUIRE(set.size() == 4);  // default velocity list
  const CurveSeries* v01 = nullptr;
  const CurveSeries* v095 = nullptr;
  const CurveSeries* v1 = nullptr;
  for (const auto& s : set) {
    if (s.name == "fig1_v0.1") v01 = &s;
    if (s.name == "fig1_v0.95") v095 = &s;
    if (s.name == "fig1_v1") v1 = &s;
    for (const auto& [mk, val] : s.points) {
      CHECK(val >= 0.0);
      CHECK(val <= 0.5);
    }
  }
  REQUIRE(v01 != nullptr);
  REQUIRE(v095 != nullptr);
  REQUIRE(v1 != nullptr);
  // slow observers see strictly less rotation everywhere
  for (std::size_t i = 0; i < v01->points.size(); ++i)
    CHECK(v01->points[i].second < v095->points[i].second);
  // the limit series starts at its closed-form value
  const double mk0 = v1->points.front().first;
  CHECK(mk0 == doctest::Approx(1e-2).epsilon(1e-12));
  CHECK(v1->points.front().second ==
        doctest::Approx(0.5 * (1.0 - xi_rel({mk0, 1.0}))).epsilon(1e-3));
}

TEST_CASE("fig4 series") {
  FigureOptions opt;
  opt.curve_points = 30;
  opt.kappa_list = {0.1, 3.0};
  const auto set = fig4_series(opt);
  REQUIRE(set.size() == 2);
  for (const auto& s : set) {
    CHECK(s.points.front().second == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& [v, delta] : s.points)
      CHECK(delta <= delta_upper_bound(v) + 1e-9);
  }
  // narrow packets lose more information at every velocity
  for (std::size_t i = 1; i < set[0].points.size(); ++i)
    CHECK(set[0].points[i].second > set[1].points[i].second);
}

TEST_CASE("fig5 series stay inside the closed-form bounds") {
  FigureOptions opt;
  opt.curve_points = 25;
  const auto set = fig5_series(opt);
  REQUIRE(set.size() == 5);  // three velocities + two bounds
  const CurveSeries& lower = set[3];
  const CurveSeries& upper = set[4];
  CHECK(lower.name == "fig5_bound_lower");
  CHECK(upper.name == "fig5_bound_upper");
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < set[k].points.size(); ++i) {
      CHECK(set[k].points[i].second >= lower.points[i].second - 1e-9);
      CHECK(set[k].points[i].second <= upper.points[i].second + 1e-9);
    }
  // both bounds start at the common small-argument limit
  CHECK(lower.points.front().second ==
        doctest::Approx(std::sqrt(M_PI) / 4.0).epsilon(0.02));
  CHECK(upper.points.front().second ==
        doctest::Approx(std::sqrt(M_PI) / 4.0).epsilon(0.02));
}

TEST_CASE("fig2/fig3 series") {
  FigureOptions opt;
  opt.v_list = {0.7, 0.9};
  opt.grid_points = 257;
  const auto fig2 = fig2_series(opt);
  REQUIRE(fig2.size() == 2);
  for (const auto& s : fig2) {
    double peak = 0.0;
    for (const auto& [x, y] : s.points) peak = std::max(peak, y);
    const auto mid = s.points[s.points.size() / 2];
    CHECK(mid.first == 0.0);
    CHECK(mid.second <= 1e-9 * peak);
  }
  // raw-mode peak heights grow with the boost factor
  auto height = [](const CurveSeries& s) {
    double peak = 0.0;
    for (const auto& [x, y] : s.points) peak = std::max(peak, y);
    return peak;
  };
  CHECK(height(fig2[0]) < height(fig2[1]));

  const auto fig3 = fig3_series(opt);
  for (const auto& s : fig3) {
    const std::size_t n = s.points.size();
    double scale = 0.0;
    for (const auto& [x, y] : s.points) scale = std::max(scale, std::fabs(y));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(s.points[i].second + s.points[n - 1 - i].second) <=
            1e-9 * scale);
  }
}

TEST_CASE("compute record") {
  SUBCASE("rest frame composite") {
    ComputeOptions opt;
    opt.v = 0.0;
    const auto rec = compute_record(opt);
    CHECK(rec["schema_version"] == 1);
    CHECK(rec["results"]["xi"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rec["results"]["eta"].get<double>() == 0.0);
    CHECK(rec["results"]["delta"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rec["results"]["j_moving"][0][0].get<double>() ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rec["results"]["j_moving"][0][1].get<double>() == 0.0);
  }
  SUBCASE("relativistic limit uses the closed forms") {
    ComputeOptions opt;
    opt.v = 1.0;
    const auto rec = compute_record(opt);
    CHECK(rec["results"]["xi"].get<double>() ==
          doctest::Approx(std::sqrt(M_PI) * relest::erfcx(1.0))
              .epsilon(1e-12));
    CHECK(rec["provenance"]["xi_method"] == "closed-form limit");
  }
  SUBCASE("round-trips through serialization") {
    ComputeOptions opt;
    opt.v = 0.6;
    const auto rec = compute_record(opt);
    const auto parsed = nlohmann::json::parse(rec.dump());
    CHECK(parsed == rec);
    CHECK(parsed["results"].contains("weak_commutativity"));
    CHECK(parsed["results"].contains("cr_var_theta1"));
  }
  SUBCASE("classical information flag needs v < 1") {
    ComputeOptions opt;
    opt.v = 1.0;
    opt.classical_fi = true;
    CHECK_THROWS_AS(compute_record(opt), std::invalid_argument);
  }
}

TEST_CASE("validation negative control: impossible slack fails with diagnostics") {
  ValidationTolerances tol;
  tol.sandwich_slack = -1e-6;
  const ValidationReport report = run_validation(tol, nullptr, "04_");
  REQUIRE(report.checks.size() == 1);
  CHECK_FALSE(report.checks.front().passed);
  CHECK_FALSE(report.all_passed());
  CHECK(report.checks.front().detail.find("max violation") !=
        std::string::npos);
}

TEST_CASE("binary: exit codes and output files") {
  const fs::path dir = "cli_out";
  fs::remove_all(dir);
  fs::create_directories(dir);

  SUBCASE("usage errors exit with 1") {
    CHECK(run_binary("compute --v 2") == 1);
    CHECK(run_binary("fig4 --kappa-list -1") == 1);
    CHECK(run_binary("fig1 --grid-points 4") == 1);
    CHECK(run_binary("no-such-command") == 1);
  }
  SUBCASE("resolution failures exit with 2") {
    CHECK(run_binary("fig2 --x-max 50 --v-list 0.7") == 2);
  }
  SUBCASE("compute writes a parsable record") {
    CHECK(run_binary("compute --m 1 --kappa 1 --v 0.5",
                     (dir / "rec.json").string()) == 0);
    const auto rec = nlohmann::json::parse(slurp(dir / "rec.json"));
    CHECK(rec["schema_version"] == 1);
    CHECK(rec["inputs"]["v"].get<double>() == 0.5);
  }
  SUBCASE("figure output is byte-stable across runs") {
    const std::string args =
        "fig4 --kappa-list 0.5 --grid-points 24 --out ";
    CHECK(run_binary(args + (dir / "a").string()) == 0);
    CHECK(run_binary(args + (dir / "b").string()) == 0);
    const std::string a = slurp(dir / "a" / "fig4_kappa0.5.csv");
    const std::string b = slurp(dir / "b" / "fig4_kappa0.5.csv");
    REQUIRE(!a.empty());
    CHECK(a == b);
    CHECK(a.rfind("# series: fig4_kappa0.5\n", 0) == 0);
  }
  SUBCASE("json format emits one schema-versioned document") {
    CHECK(run_binary("fig1 --grid-points 20 --format json --out " +
                     (dir / "j").string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(dir / "j" / "fig1.json"));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["series"].size() == 4);
  }
  SUBCASE("config file fills unset flags and flags win") {
    {
      std::ofstream cfg(dir / "cfg.json");
      cfg << R"({"kappa-list": [0.5], "grid-points": 20, "m": 2.0})";
    }
    CHECK(run_binary("fig4 --config " + (dir / "cfg.json").string() +
                     " --m 1.0 --out " + (dir / "c").string()) == 0);
    const std::string csv = slurp(dir / "c" / "fig4_kappa0.5.csv");
    CHECK(csv.find("# m: 1\n") != std::string::npos);  // flag beat config
    CHECK(csv.find("# kappa: 0.5\n") != std::string::npos);
  }
}
