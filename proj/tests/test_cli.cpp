#include <cstdlib>
#include <filesystem>
#include <string>

#include <catch_amalgamated.hpp>

#include "purcell/runner.hpp"
#include "purcell/serialize.hpp"

using namespace purcell;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("purcell_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("parse_config applies defaults") {
  const RunConfig c = parse_config(
      R"({"command":"field","grid":{"min":[-1,-1],"max":[1,1],"counts":[3,3]}})");
  CHECK(c.command == Command::Field);
  CHECK(c.params.L == 1.0);
  CHECK(c.params.k == 1.0);
  CHECK(c.mode == DragMode::Corrected);
  CHECK(c.variant == GeometryVariant::Derived);
  CHECK(c.seed == 0);
  CHECK(c.grid.alpha1_count == 3);
  CHECK(c.grid.alpha2_count == 3);
}

TEST_CASE("parse_config maps a simulate document") {
  const RunConfig c = parse_config(
      R"({"command":"simulate",
          "gait":{"kind":"square","amplitude":0.7854,"period":1.0},
          "steps_per_cycle":1000})");
  CHECK(c.command == Command::Simulate);
  CHECK(c.gait.kind == GaitKind::Square);
  CHECK(c.gait.amplitude1 == Catch::Approx(0.7854));
  CHECK(c.steps_per_cycle == 1000);
  CHECK(c.cycles == 1);
  CHECK(c.method == IntegrationMethod::RK4);
}

TEST_CASE("parse_config rejects unknown keys with their path") {
  try {
    parse_config(
        R"({"command":"field","gird":{"min":[-1,-1],"max":[1,1],"counts":[3,3]}})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("gird") != std::string::npos);
  }

  try {
    parse_config(
        R"({"command":"field",
            "grid":{"min":[-1,-1],"max":[1,1],"counts":[3,3],"step":0.5}})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("grid.step") != std::string::npos);
  }
}

TEST_CASE("parse_config validates fields") {
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"grid":{}})"), ConfigError);  // no command
  CHECK_THROWS_AS(parse_config(R"({"command":"fly"})"), ConfigError);
  CHECK_THROWS_AS(
      parse_config(R"({"command":"field","grid":{"min":[-1,-1],"max":[1,1]}})"),
      ConfigError);  // counts missing
  CHECK_THROWS_AS(
      parse_config(
          R"({"command":"verify","mode":"lateral"})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_config(
          R"({"command":"verify","params":{"L":-1}})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_config(
          R"({"command":"simulate","gait":{"kind":"square","amplitude":1.0}})"),
      ConfigError);  // period missing

  const RunConfig ok = parse_config(
      R"({"command":"verify","samples":50,"seed":7,
          "params":{"L":2.0,"k":0.5},"mode":"printed","variant":"printed"})");
  CHECK(ok.verify_samples == 50);
  CHECK(ok.seed == 7);
  CHECK(ok.params.L == 2.0);
  CHECK(ok.mode == DragMode::Printed);
  CHECK(ok.variant == GeometryVariant::Printed);
}

TEST_CASE("field run writes the expected collinear row") {
  const fs::path dir = temp_dir("field");
  RunConfig cfg = parse_config(
      R"({"command":"field","grid":{"min":[-1,-1],"max":[1,1],"counts":[3,3]}})");
  cfg.output = dir.string();
  run(cfg);

  const std::string csv = read_file((dir / "field.csv").string());
  CHECK(csv.rfind("alpha1,alpha2,A11,A12,A21,A22,A31,A32\n", 0) == 0);
  // row at alpha = (0, 0): the exact fractions print exactly; the omega row
  // goes through one extra rounding in the solve, so allow it one ulp
  const std::string prefix =
      "\n0,0,0,0,-0.33333333333333331,-0.33333333333333331,";
  const std::size_t at = csv.find(prefix);
  REQUIRE(at != std::string::npos);
  const char* tail = csv.c_str() + at + prefix.size();
  char* end = nullptr;
  const double a31 = std::strtod(tail, &end);
  REQUIRE(*end == ',');
  const double a32 = std::strtod(end + 1, &end);
  CHECK(std::abs(a31 - 7.0 / 27.0) <= 2e-16);
  CHECK(std::abs(a32 + 7.0 / 27.0) <= 2e-16);
}

TEST_CASE("simulate run reports a zero holonomy for a still gait") {
  const fs::path dir = temp_dir("sim0");
  RunConfig cfg = parse_config(
      R"({"command":"simulate",
          "gait":{"kind":"square","amplitude":0.0,"period":1.0},
          "steps_per_cycle":64})");
  cfg.output = dir.string();
  run(cfg);

  const auto summary =
      nlohmann::json::parse(read_file((dir / "summary.json").string()));
  CHECK(summary.at("holonomy").at("dx").get<double>() == 0.0);
  CHECK(summary.at("holonomy").at("dy").get<double>() == 0.0);
  CHECK(summary.at("holonomy").at("dtheta").get<double>() == 0.0);
  CHECK(summary.at("cycles").get<int>() == 1);
  CHECK(summary.at("steps").get<int>() == 64);
}

TEST_CASE("trajectory csv round-trips byte for byte") {
  const Trajectory t =
      integrate_gait(GaitSpec::square(0.7, 1.0), 1, {1, 1}, DragMode::Corrected,
                     GeometryVariant::Derived, 64, IntegrationMethod::RK4);
  const std::string once = trajectory_csv(t);
  const std::string twice = trajectory_csv(parse_trajectory_csv(once));
  CHECK(once == twice);
}

TEST_CASE("repeated runs are byte-identical") {
  RunConfig verify = parse_config(R"({"command":"verify","samples":150})");
  const fs::path v1 = temp_dir("verify1"), v2 = temp_dir("verify2");
  verify.output = v1.string();
  run(verify);
  verify.output = v2.string();
  run(verify);
  CHECK(read_file((v1 / "errata.json").string()) ==
        read_file((v2 / "errata.json").string()));
  CHECK(read_file((v1 / "verify_summary.csv").string()) ==
        read_file((v2 / "verify_summary.csv").string()));

  RunConfig sim = parse_config(
      R"({"command":"simulate",
          "gait":{"kind":"ellipse","amplitude":[0.6,0.8],"period":1.0},
          "steps_per_cycle":200,"cycles":2})");
  const fs::path s1 = temp_dir("sim1"), s2 = temp_dir("sim2");
  sim.output = s1.string();
  run(sim);
  sim.output = s2.string();
  run(sim);
  CHECK(read_file((s1 / "trajectory.csv").string()) ==
        read_file((s2 / "trajectory.csv").string()));
  CHECK(read_file((s1 / "summary.json").string()) ==
        read_file((s2 / "summary.json").string()));
}

TEST_CASE("verify run adjudicates the corrected/derived pipeline") {
  const fs::path dir = temp_dir("verify_win");
  RunConfig cfg = parse_config(R"({"command":"verify","samples":200})");
  cfg.output = dir.string();
  run(cfg);

  const auto report =
      nlohmann::json::parse(read_file((dir / "errata.json").string()));
  CHECK(report.at("winning_combination").at("mode") == "corrected");
  CHECK(report.at("winning_combination").at("variant") == "derived");
  CHECK(report.at("winning_combination").at("sign") == 1);
  CHECK(report.at("winning_combination").at("max_deviation").get<double>() <
        1e-9);
  CHECK(report.at("errata").size() == 4);

  const std::string csv = read_file((dir / "verify_summary.csv").string());
  CHECK(csv.rfind("mode,variant,sign,entry,max_dev,mean_dev\n", 0) == 0);
  // 8 combinations x 6 entries + header
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 49);
}

TEST_CASE("cli binary end to end") {
  const fs::path dir = temp_dir("cli");
  const fs::path cfg = dir / "cfg.json";
  write_file(cfg.string(),
             R"({"command":"field","grid":{"min":[-1,-1],"max":[1,1],"counts":[3,3]}})");

  const std::string base = std::string(PURCELL_CLI_PATH);
  std::string cmd = base + " field --config " + cfg.string() + " --output " +
                    dir.string() + " --quiet";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(dir / "field.csv"));

  // config/subcommand mismatch is a config error (exit code 2)
  cmd = base + " simulate --config " + cfg.string() + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 2);
}
