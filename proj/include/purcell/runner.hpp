#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "purcell/closed_form.hpp"
#include "purcell/connection.hpp"
#include "purcell/detail/rng.hpp"
#include "purcell/errors.hpp"
#include "purcell/gait.hpp"
#include "purcell/serialize.hpp"

namespace purcell {

enum class Command { Field, Simulate, Verify };

/// A complete, archivable description of one run. Identical configurations
/// (including the seed) produce byte-identical output files.
struct RunConfig {
  Command command = Command::Field;
  SwimmerParams params{};
  DragMode mode = DragMode::Corrected;
  GeometryVariant variant = GeometryVariant::Derived;
  std::uint64_t seed = 0;
  std::string output = ".";

  GridSpec grid{};  // field
  GaitSpec gait{};  // simulate
  int cycles = 1;
  int steps_per_cycle = 1000;
  IntegrationMethod method = IntegrationMethod::RK4;
  int verify_samples = 1000;  // verify
};

namespace config_detail {

using json = nlohmann::json;

inline void check_keys(const json& obj, const std::string& path,
                       std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) throw ConfigError(path + "." + it.key(), "unknown key");
  }
}

inline double get_num(const json& obj, const std::string& path,
                      const char* key, double fallback, bool required = false) {
  if (!obj.contains(key)) {
    if (required) throw ConfigError(path + "." + key, "missing required key");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
  return v.get<double>();
}

inline std::array<double, 2> get_pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(path, "expected [number, number]");
  return {v[0].get<double>(), v[1].get<double>()};
}

inline GridSpec parse_grid(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  check_keys(j, path, {"min", "max", "counts"});
  for (const char* key : {"min", "max", "counts"})
    if (!j.contains(key)) throw ConfigError(path + "." + key, "missing required key");
  GridSpec g;
  const auto mn = get_pair(j.at("min"), path + ".min");
  const auto mx = get_pair(j.at("max"), path + ".max");
  const auto ct = get_pair(j.at("counts"), path + ".counts");
  g.alpha1_min = mn[0];
  g.alpha2_min = mn[1];
  g.alpha1_max = mx[0];
  g.alpha2_max = mx[1];
  if (ct[0] < 2 || ct[1] < 2 || ct[0] != static_cast<std::size_t>(ct[0]) ||
      ct[1] != static_cast<std::size_t>(ct[1]))
    throw ConfigError(path + ".counts", "expected integers >= 2");
  g.alpha1_count = static_cast<std::size_t>(ct[0]);
  g.alpha2_count = static_cast<std::size_t>(ct[1]);
  return g;
}

inline GaitSpec parse_gait(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  check_keys(j, path,
             {"kind", "amplitude", "center", "period", "direction", "points",
              "fractions"});
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw ConfigError(path + ".kind", "missing or non-string");
  const std::string kind = j.at("kind").get<std::string>();

  GaitSpec g;
  g.period = get_num(j, path, "period", 1.0, /*required=*/true);
  const double dir = get_num(j, path, "direction", 1.0);
  if (dir != 1.0 && dir != -1.0)
    throw ConfigError(path + ".direction", "expected +1 or -1");
  g.direction = static_cast<int>(dir);
  if (j.contains("center")) {
    const auto c = get_pair(j.at("center"), path + ".center");
    g.center = {c[0], c[1]};
  }

  if (kind == "square") {
    g.kind = GaitKind::Square;
    g.amplitude1 = g.amplitude2 =
        get_num(j, path, "amplitude", 0.0, /*required=*/true);
  } else if (kind == "ellipse") {
    g.kind = GaitKind::Ellipse;
    if (!j.contains("amplitude"))
      throw ConfigError(path + ".amplitude", "missing required key");
    const json& a = j.at("amplitude");
    if (a.is_number()) {
      g.amplitude1 = g.amplitude2 = a.get<double>();
    } else {
      const auto p = get_pair(a, path + ".amplitude");
      g.amplitude1 = p[0];
      g.amplitude2 = p[1];
    }
  } else if (kind == "waypoints") {
    g.kind = GaitKind::Waypoints;
    if (!j.contains("points") || !j.at("points").is_array())
      throw ConfigError(path + ".points", "missing or non-array");
    if (!j.contains("fractions") || !j.at("fractions").is_array())
      throw ConfigError(path + ".fractions", "missing or non-array");
    const json& pts = j.at("points");
    const json& fr = j.at("fractions");
    if (pts.size() != fr.size())
      throw ConfigError(path + ".fractions",
                        "must have one fraction per point");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto p = get_pair(pts[i], path + ".points[" + std::to_string(i) + "]");
      if (!fr[i].is_number())
        throw ConfigError(path + ".fractions[" + std::to_string(i) + "]",
                          "expected a number");
      g.waypoints.push_back({{p[0], p[1]}, fr[i].get<double>()});
    }
  } else {
    throw ConfigError(path + ".kind", "unknown gait kind: " + kind);
  }
  validate(g);
  return g;
}

}  // namespace config_detail

/// Parse and validate a JSON configuration document. Defaults: L=1, k=1,
/// corrected drag, derived geometry, seed 0. Unknown keys are rejected with
/// their field path.
inline RunConfig parse_config(const std::string& text) {
  using config_detail::check_keys;
  using config_detail::get_num;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("(document)", e.what());
  }
  if (!j.is_object()) throw ConfigError("(document)", "expected a JSON object");

  if (!j.contains("command") || !j.at("command").is_string())
    throw ConfigError("command", "missing or non-string");
  const std::string cmd = j.at("command").get<std::string>();

  RunConfig cfg;
  if (cmd == "field") {
    cfg.command = Command::Field;
    check_keys(j, "(top)",
               {"command", "params", "mode", "variant", "seed", "output", "grid"});
    if (!j.contains("grid")) throw ConfigError("grid", "missing required key");
    cfg.grid = config_detail::parse_grid(j.at("grid"), "grid");
  } else if (cmd == "simulate") {
    cfg.command = Command::Simulate;
    check_keys(j, "(top)",
               {"command", "params", "mode", "variant", "seed", "output",
                "gait", "cycles", "steps_per_cycle", "method"});
    if (!j.contains("gait")) throw ConfigError("gait", "missing required key");
    cfg.gait = config_detail::parse_gait(j.at("gait"), "gait");
    cfg.cycles = static_cast<int>(get_num(j, "(top)", "cycles", 1.0));
    cfg.steps_per_cycle =
        static_cast<int>(get_num(j, "(top)", "steps_per_cycle", 1000.0));
    if (j.contains("method")) {
      const std::string m = j.at("method").is_string()
                                ? j.at("method").get<std::string>()
                                : std::string();
      if (m == "rk4")
        cfg.method = IntegrationMethod::RK4;
      else if (m == "euler")
        cfg.method = IntegrationMethod::Euler;
      else
        throw ConfigError("method", "expected \"rk4\" or \"euler\"");
    }
  } else if (cmd == "verify") {
    cfg.command = Command::Verify;
    check_keys(j, "(top)",
               {"command", "params", "mode", "variant", "seed", "output",
                "samples"});
    cfg.verify_samples =
        static_cast<int>(get_num(j, "(top)", "samples", 1000.0));
    if (cfg.verify_samples < 1)
      throw ConfigError("samples", "must be >= 1");
  } else {
    throw ConfigError("command", "unknown command: " + cmd);
  }

  if (j.contains("params")) {
    const nlohmann::json& p = j.at("params");
    if (!p.is_object()) throw ConfigError("params", "expected an object");
    check_keys(p, "params", {"L", "k"});
    cfg.params.L = get_num(p, "params", "L", 1.0);
    cfg.params.k = get_num(p, "params", "k", 1.0);
    if (!(cfg.params.L > 0.0)) throw ConfigError("params.L", "must be > 0");
    if (!(cfg.params.k > 0.0)) throw ConfigError("params.k", "must be > 0");
  }
  if (j.contains("mode")) {
    const std::string m =
        j.at("mode").is_string() ? j.at("mode").get<std::string>() : std::string();
    if (m == "corrected")
      cfg.mode = DragMode::Corrected;
    else if (m == "printed")
      cfg.mode = DragMode::Printed;
    else
      throw ConfigError("mode", "expected \"corrected\" or \"printed\"");
  }
  if (j.contains("variant")) {
    const std::string v = j.at("variant").is_string()
                              ? j.at("variant").get<std::string>()
                              : std::string();
    if (v == "derived")
      cfg.variant = GeometryVariant::Derived;
    else if (v == "printed")
      cfg.variant = GeometryVariant::Printed;
    else
      throw ConfigError("variant", "expected \"derived\" or \"printed\"");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer())
      throw ConfigError("seed", "expected an integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string())
      throw ConfigError("output", "expected a string");
    cfg.output = j.at("output").get<std::string>();
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// verify: differential sweep of the numeric pipeline against the closed forms
// ---------------------------------------------------------------------------

/// Deviation statistics for one (mode, variant, sign) combination over the
/// sampled shapes. Deviations are |A_num - sign*A_ref| / (1 + |A_ref|).
struct ComboDeviation {
  DragMode mode = DragMode::Corrected;
  GeometryVariant variant = GeometryVariant::Derived;
  int sign = +1;
  std::array<double, 6> max_dev{};   // entries 11,12,21,22,31,32
  std::array<double, 6> mean_dev{};
  double overall_max = 0.0;
};

struct VerifyResult {
  std::vector<ComboDeviation> combos;  // all 8, sweep order
  std::size_t winner_index = 0;
  // evidence for the adopted errata readings: max deviation of the winning
  // combination with the adopted reading vs with the printed one
  double dev_swap_adopted = 0.0, dev_swap_printed = 0.0;
  double dev_d212_adopted = 0.0, dev_d212_alternate = 0.0;
  double dev_display32_adopted = 0.0, dev_display32_printed = 0.0;
  double dev_sign_adopted = 0.0, dev_sign_flipped = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

inline const char* to_string(DragMode m) {
  return m == DragMode::Corrected ? "corrected" : "printed";
}
inline const char* to_string(GeometryVariant v) {
  return v == GeometryVariant::Derived ? "derived" : "printed";
}
inline const char* to_string(IntegrationMethod m) {
  return m == IntegrationMethod::RK4 ? "rk4" : "euler";
}

inline VerifyResult run_verify(int samples, std::uint64_t seed,
                               const SwimmerParams& params) {
  VerifyResult res;
  res.samples = samples;
  res.seed = seed;

  detail::SplitMix64 rng(seed);
  std::vector<ShapeState> shapes(static_cast<std::size_t>(samples));
  const double lim = 3.0 * kPi / 4.0;
  for (auto& s : shapes) {
    s.alpha1 = rng.uniform(-lim, lim);
    s.alpha2 = rng.uniform(-lim, lim);
  }

  // numeric connection for all four (mode, variant) pipelines
  const DragMode modes[2] = {DragMode::Printed, DragMode::Corrected};
  const GeometryVariant variants[2] = {GeometryVariant::Printed,
                                       GeometryVariant::Derived};

  // reference closed forms under the adopted errata readings
  std::vector<ConnectionLocalForm> ref(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i)
    ref[i] = oracle_connection(shapes[i], params);

  auto accumulate = [&](const std::vector<ConnectionLocalForm>& numeric,
                        const std::vector<ConnectionLocalForm>& reference,
                        int sign, ComboDeviation& out) {
    out.max_dev.fill(0.0);
    out.mean_dev.fill(0.0);
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      int e = 0;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c, ++e) {
          const double o = reference[i].a[r][c];
          const double d =
              std::abs(numeric[i].a[r][c] - sign * o) / (1.0 + std::abs(o));
          out.mean_dev[e] += d;
          if (d > out.max_dev[e]) out.max_dev[e] = d;
        }
    }
    out.overall_max = 0.0;
    for (int e = 0; e < 6; ++e) {
      out.mean_dev[e] /= static_cast<double>(numeric.size());
      if (out.max_dev[e] > out.overall_max) out.overall_max = out.max_dev[e];
    }
  };

  std::vector<ConnectionLocalForm> winner_numeric;
  for (DragMode m : modes) {
    for (GeometryVariant v : variants) {
      std::vector<ConnectionLocalForm> num(shapes.size());
      for (std::size_t i = 0; i < shapes.size(); ++i)
        num[i] = local_connection(shapes[i], params, m, v);
      for (int sign : {+1, -1}) {
        ComboDeviation cd;
        cd.mode = m;
        cd.variant = v;
        cd.sign = sign;
        accumulate(num, ref, sign, cd);
        res.combos.push_back(cd);
        if (cd.overall_max < res.combos[res.winner_index].overall_max) {
          res.winner_index = res.combos.size() - 1;
          winner_numeric = num;
        } else if (res.combos.size() == 1) {
          winner_numeric = num;
        }
      }
    }
  }

  // errata evidence, computed with the winning pipeline
  const ComboDeviation& win = res.combos[res.winner_index];
  auto sweep_against = [&](const OracleOptions& opt) {
    double worst = 0.0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const ConnectionLocalForm o = oracle_connection(shapes[i], params, opt);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) {
          const double d = std::abs(winner_numeric[i].a[r][c] -
                                    win.sign * o.a[r][c]) /
                           (1.0 + std::abs(o.a[r][c]));
          if (d > worst) worst = d;
        }
    }
    return worst;
  };

  OracleOptions adopted;
  res.dev_swap_adopted = sweep_against(adopted);
  OracleOptions noswap = adopted;
  noswap.swap_offdiagonal = false;
  res.dev_swap_printed = sweep_against(noswap);
  res.dev_d212_adopted = res.dev_swap_adopted;
  OracleOptions alt = adopted;
  alt.d212 = D212Reading::Entry12Third;
  res.dev_d212_alternate = sweep_against(alt);
  res.dev_sign_adopted = res.dev_swap_adopted;
  res.dev_sign_flipped = res.combos[res.winner_index ^ 1].overall_max;

  // display mislabel of entry (3,2): printed reading repeats the entry-22
  // expressions there
  double adopted32 = 0.0, printed32 = 0.0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const double num32 = winner_numeric[i].a[2][1];
    const double o32 = oracle_entry(32, shapes[i], params, adopted).total;
    const double o22 = oracle_entry(22, shapes[i], params, adopted).total;
    adopted32 = std::max(adopted32, std::abs(num32 - win.sign * o32) /
                                        (1.0 + std::abs(o32)));
    printed32 = std::max(printed32, std::abs(num32 - win.sign * o22) /
                                        (1.0 + std::abs(o22)));
  }
  res.dev_display32_adopted = adopted32;
  res.dev_display32_printed = printed32;
  return res;
}

// ---------------------------------------------------------------------------
// run: execute a configuration and write its output files
// ---------------------------------------------------------------------------

namespace run_detail {

inline nlohmann::ordered_json errata_report(const VerifyResult& v) {
  using oj = nlohmann::ordered_json;
  const ComboDeviation& win = v.combos[v.winner_index];
  oj rep;
  rep["samples"] = v.samples;
  rep["seed"] = v.seed;
  rep["winning_combination"] = {
      {"mode", to_string(win.mode)},
      {"variant", to_string(win.variant)},
      {"sign", win.sign},
      {"max_deviation", win.overall_max},
  };
  oj errata = oj::array();
  errata.push_back(oj{
      {"location", "connection matrix display, row 3 column 2"},
      {"printed_form", "A_{22}"},
      {"adopted_reading", "A_{32}"},
      {"evidence", oj{{"max_dev_adopted", v.dev_display32_adopted},
                      {"max_dev_printed", v.dev_display32_printed}}},
  });
  errata.push_back(oj{
      {"location", "denominator table, D_2^{12}"},
      {"printed_form", "D_2^{12} = D_2^{12}"},
      {"adopted_reading", "D_2^{12} = D_2^{11}"},
      {"evidence", oj{{"max_dev_adopted", v.dev_d212_adopted},
                      {"max_dev_alternate_D3_12", v.dev_d212_alternate}}},
  });
  errata.push_back(oj{
      {"location", "entry labels A_{12} and A_{21}"},
      {"printed_form", "as labeled"},
      {"adopted_reading", "labels exchanged"},
      {"evidence", oj{{"max_dev_adopted", v.dev_swap_adopted},
                      {"max_dev_printed", v.dev_swap_printed}}},
  });
  errata.push_back(oj{
      {"location", "force balance statement"},
      {"printed_form", "B_1 xi = B_2 alpha_dot"},
      {"adopted_reading", "B_1 xi = -B_2 alpha_dot (A solves F = 0)"},
      {"evidence", oj{{"max_dev_adopted", v.dev_sign_adopted},
                      {"max_dev_flipped_sign", v.dev_sign_flipped}}},
  });
  rep["errata"] = errata;
  return rep;
}

inline std::string verify_summary_csv(const VerifyResult& v) {
  static constexpr int kEntries[6] = {11, 12, 21, 22, 31, 32};
  std::string out = "mode,variant,sign,entry,max_dev,mean_dev\n";
  for (const ComboDeviation& cd : v.combos) {
    for (int e = 0; e < 6; ++e) {
      out += to_string(cd.mode);
      out += ',';
      out += to_string(cd.variant);
      out += ',';
      out += (cd.sign > 0 ? "+1" : "-1");
      out += ',';
      out += std::to_string(kEntries[e]);
      out += ',';
      out += format_double(cd.max_dev[e]);
      out += ',';
      out += format_double(cd.mean_dev[e]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace run_detail

/// Execute a run. Output files land in cfg.output (created if needed):
///   field     field.csv
///   simulate  trajectory.csv, summary.json
///   verify    errata.json, verify_summary.csv
/// Progress notes go to `log` when non-null.
inline void run(const RunConfig& cfg, std::ostream* log = nullptr) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output);
  const auto path = [&](const char* name) {
    return (fs::path(cfg.output) / name).string();
  };

  switch (cfg.command) {
    case Command::Field: {
      const FieldGrid g =
          sample_field(cfg.grid, cfg.params, cfg.mode, cfg.variant);
      write_file(path("field.csv"), field_csv(g));
      if (log)
        *log << "field: " << g.entries.size() << " grid points -> "
             << path("field.csv") << "\n";
      break;
    }
    case Command::Simulate: {
      const Trajectory traj =
          integrate_gait(cfg.gait, cfg.cycles, cfg.params, cfg.mode,
                         cfg.variant, cfg.steps_per_cycle, cfg.method);
      write_file(path("trajectory.csv"), trajectory_csv(traj));
      const Pose h = net_displacement(traj);
      nlohmann::ordered_json summary;
      summary["holonomy"] = {{"dx", h.x}, {"dy", h.y}, {"dtheta", h.theta}};
      summary["cycles"] = cfg.cycles;
      summary["steps"] = cfg.steps_per_cycle;
      write_file(path("summary.json"), summary.dump(2) + "\n");
      if (log)
        *log << "simulate: holonomy dx=" << format_double(h.x)
             << " dy=" << format_double(h.y)
             << " dtheta=" << format_double(h.theta) << " -> "
             << path("summary.json") << "\n";
      break;
    }
    case Command::Verify: {
      const VerifyResult v =
          run_verify(cfg.verify_samples, cfg.seed, cfg.params);
      write_file(path("errata.json"),
                 run_detail::errata_report(v).dump(2) + "\n");
      write_file(path("verify_summary.csv"), run_detail::verify_summary_csv(v));
      if (log) {
        const ComboDeviation& win = v.combos[v.winner_index];
        *log << "verify: winner mode=" << to_string(win.mode)
             << " variant=" << to_string(win.variant) << " sign=" << win.sign
             << " max_dev=" << format_double(win.overall_max) << " -> "
             << path("errata.json") << "\n";
      }
      break;
    }
  }
}

}  // namespace purcell
