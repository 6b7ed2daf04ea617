// Copyright 2026-present the orientation-vsds project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vsds/io/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vsds/errors.hpp"

namespace vsds::io {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double parse_double(const std::string& field, const std::string& where) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception&) {
    throw ParseError(where + ": not a number: '" + field + "'");
  }
  if (used != field.size()) {
    throw ParseError(where + ": trailing junk in '" + field + "'");
  }
  return value;
}

// The writer emits unit quaternions at 9 digits, so the reader tolerates a
// rounding-sized norm defect and renormalizes.
UnitQuaternion parse_quaternion(const std::vector<std::string>& f, std::size_t at,
                                const std::string& where) {
  const double nu = parse_double(f[at], where);
  const Vec3 u(parse_double(f[at + 1], where), parse_double(f[at + 2], where),
               parse_double(f[at + 3], where));
  const double norm = std::sqrt(nu * nu + u.squaredNorm());
  if (std::abs(norm - 1.0) > 1e-6) {
    throw ParseError(where + ": quaternion not unit");
  }
  return UnitQuaternion(nu, u);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  return in;
}

}  // namespace

void write_trajectory_csv(const sim::Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write " + path);
  }
  out << kTrajectoryHeader << '\n';
  for (const auto& r : traj.rows) {
    out << num(r.t) << ',' << num(r.q.nu()) << ',' << num(r.q.u().x()) << ','
        << num(r.q.u().y()) << ',' << num(r.q.u().z()) << ',' << num(r.omega.x()) << ','
        << num(r.omega.y()) << ',' << num(r.omega.z()) << ',' << num(r.tau_vs.x()) << ','
        << num(r.tau_vs.y()) << ',' << num(r.tau_vs.z()) << ',' << num(r.tau.x()) << ','
        << num(r.tau.y()) << ',' << num(r.tau.z()) << ',' << r.spring << ','
        << num(r.dist_goal) << '\n';
  }
  if (!out) {
    throw ValidationError("write failed for " + path);
  }
}

sim::Trajectory read_trajectory_csv(const std::string& path, double eps_stop) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryHeader) {
    throw ParseError(path + ": expected header '" + std::string(kTrajectoryHeader) + "'");
  }
  sim::Trajectory traj;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::string where = path + ":" + std::to_string(line_no);
    const auto f = split_csv(line);
    if (f.size() != 16) {
      throw ParseError(where + ": expected 16 fields, got " + std::to_string(f.size()));
    }
    sim::TrajectoryRecord r;
    r.t = parse_double(f[0], where);
    r.q = parse_quaternion(f, 1, where);
    r.omega = Vec3(parse_double(f[5], where), parse_double(f[6], where),
                   parse_double(f[7], where));
    r.tau_vs = Vec3(parse_double(f[8], where), parse_double(f[9], where),
                    parse_double(f[10], where));
    r.tau = Vec3(parse_double(f[11], where), parse_double(f[12], where),
                 parse_double(f[13], where));
    const double idx = parse_double(f[14], where);
    if (idx < 0.0 || idx != std::floor(idx)) {
      throw ParseError(where + ": spring_idx must be a nonnegative integer");
    }
    r.spring = static_cast<std::size_t>(idx);
    r.dist_goal = parse_double(f[15], where);
    traj.rows.push_back(r);
  }
  if (traj.rows.size() >= 2) {
    traj.dt = traj.rows[1].t - traj.rows[0].t;
  }
  if (!traj.rows.empty()) {
    const auto& last = traj.rows.back();
    traj.converged = last.dist_goal <= eps_stop && last.omega.norm() <= 0.05;
  }
  return traj;
}

DemoTrajectory read_demo_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line) || line != "t,qw,qx,qy,qz,wx,wy,wz") {
    throw ParseError(path + ": expected header 't,qw,qx,qy,qz,wx,wy,wz'");
  }
  DemoTrajectory demo;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::string where = path + ":" + std::to_string(line_no);
    const auto f = split_csv(line);
    if (f.size() != 8) {
      throw ParseError(where + ": expected 8 fields, got " + std::to_string(f.size()));
    }
    demo.t.push_back(parse_double(f[0], where));
    demo.q.push_back(parse_quaternion(f, 1, where));
    demo.omega.emplace_back(parse_double(f[5], where), parse_double(f[6], where),
                            parse_double(f[7], where));
  }
  return demo;
}

}  // namespace vsds::io
