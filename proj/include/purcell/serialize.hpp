#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "purcell/connection.hpp"
#include "purcell/errors.hpp"
#include "purcell/gait.hpp"

namespace purcell {

/// Format a double with 17 significant digits: enough to round-trip exactly,
/// so re-parsing and re-serializing a file reproduces it byte for byte.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v + 0.0);  // normalizes -0
  return buf;
}

inline constexpr const char* kTrajectoryHeader =
    "t,x,y,theta,alpha1,alpha2,xix,xiy,xitheta";
inline constexpr const char* kFieldHeader =
    "alpha1,alpha2,A11,A12,A21,A22,A31,A32";

inline std::string trajectory_csv(const Trajectory& traj) {
  std::string out = kTrajectoryHeader;
  out += '\n';
  for (const TrajectorySample& s : traj.samples) {
    out += format_double(s.t);
    for (double v : {s.pose.x, s.pose.y, s.pose.theta, s.shape.alpha1,
                     s.shape.alpha2, s.twist.vx, s.twist.vy, s.twist.omega}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

/// Parse a trajectory CSV back into samples (metadata is not stored in the
/// file and is left default).
inline Trajectory parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryHeader)
    throw ConfigError("trajectory csv", "bad header: " + line);
  Trajectory traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double v[9];
    const char* p = line.c_str();
    for (int i = 0; i < 9; ++i) {
      char* end = nullptr;
      v[i] = std::strtod(p, &end);
      if (end == p) throw ConfigError("trajectory csv", "bad row: " + line);
      p = (*end == ',') ? end + 1 : end;
    }
    traj.samples.push_back(
        {v[0], {v[1], v[2], v[3]}, {v[4], v[5]}, {v[6], v[7], v[8]}});
  }
  return traj;
}

inline std::string field_csv(const FieldGrid& g) {
  std::string out = kFieldHeader;
  out += '\n';
  const double nan = std::nan("");
  for (std::size_t i = 0; i < g.alpha1_values.size(); ++i) {
    for (std::size_t j = 0; j < g.alpha2_values.size(); ++j) {
      out += format_double(g.alpha1_values[i]);
      out += ',';
      out += format_double(g.alpha2_values[j]);
      const auto& e = g.at(i, j);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) {
          out += ',';
          out += format_double(e ? e->a[r][c] : nan);
        }
      out += '\n';
    }
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(path, "cannot open for writing");
  f << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError(path, "cannot open for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace purcell
