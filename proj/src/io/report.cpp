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

#include "vsds/io/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json_util.hpp"
#include "vsds/errors.hpp"

namespace vsds::io {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// JSON has no NaN literal; absent-by-meaning values serialize as null.
detail::Json number_or_null(double v) {
  if (std::isnan(v)) {
    return nullptr;
  }
  return v;
}

}  // namespace

ReportMetrics compute_metrics(const sim::Trajectory& traj, const ViaPointSequence& via,
                              const std::vector<sim::DisturbanceEvent>& disturbances,
                              double eps_stop) {
  if (traj.rows.empty()) {
    throw EmptyTrajectoryError("cannot report on an empty trajectory");
  }
  ReportMetrics m;
  const auto& last = traj.rows.back();
  m.final_dist = last.dist_goal;
  m.converged = last.dist_goal <= eps_stop && last.omega.norm() <= 0.05;
  m.convergence_time = m.converged ? last.t : kNan;
  m.max_tau_vs = 0.0;
  m.max_path_deviation = 0.0;
  for (const auto& r : traj.rows) {
    m.max_tau_vs = std::max(m.max_tau_vs, r.tau_vs.norm());
    m.max_path_deviation =
        std::max(m.max_path_deviation, sim::min_distance_to_chain(r.q, via));
  }

  // Torque constancy across the first hold window: max over the window
  // relative to its first sample. State-indexed control keeps this near one.
  m.hold_ratio = kNan;
  for (const auto& event : disturbances) {
    if (event.kind != sim::DisturbanceKind::kHold) {
      continue;
    }
    double first = kNan;
    double peak = 0.0;
    for (const auto& r : traj.rows) {
      if (r.t < event.t_start || r.t >= event.t_end) {
        continue;
      }
      const double mag = r.tau_vs.norm();
      if (std::isnan(first)) {
        first = mag;
      }
      peak = std::max(peak, mag);
    }
    if (!std::isnan(first) && first > 0.0) {
      m.hold_ratio = peak / first;
    }
    break;
  }
  return m;
}

std::string format_report(const ReportMetrics& metrics) {
  detail::Json j;
  j["converged"] = metrics.converged;
  j["convergence_time"] = number_or_null(metrics.convergence_time);
  j["final_dist"] = metrics.final_dist;
  j["max_tau_vs"] = metrics.max_tau_vs;
  j["max_path_deviation"] = metrics.max_path_deviation;
  j["hold_ratio"] = number_or_null(metrics.hold_ratio);
  return j.dump(2) + "\n";
}

void write_plot_csv(const sim::Trajectory& traj, const UnitQuaternion& q_goal,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write " + path);
  }
  out << "t,qw,qx,qy,qz,zx,zy,zz\n";
  for (const auto& r : traj.rows) {
    const TangentVector z = log_map(q_goal, r.q);
    out << num(r.t) << ',' << num(r.q.nu()) << ',' << num(r.q.u().x()) << ','
        << num(r.q.u().y()) << ',' << num(r.q.u().z()) << ',' << num(z.x()) << ','
        << num(z.y()) << ',' << num(z.z()) << '\n';
  }
  if (!out) {
    throw ValidationError("write failed for " + path);
  }
}

std::string render_svg(const sim::Trajectory& traj) {
  if (traj.rows.empty()) {
    throw EmptyTrajectoryError("cannot plot an empty trajectory");
  }
  // Fixed frame: components live in [-1, 1], time spans the run.
  const double t0 = traj.rows.front().t;
  const double t1 = traj.rows.back().t;
  const double span = (t1 > t0) ? (t1 - t0) : 1.0;
  const double x0 = 60.0, x1 = 980.0, y0 = 30.0, y1 = 570.0;
  const auto x_of = [&](double t) { return x0 + (t - t0) / span * (x1 - x0); };
  const auto y_of = [&](double v) { return y0 + (1.05 - v) / 2.1 * (y1 - y0); };

  // Long runs decimate to ~2000 points per line; endpoints always survive.
  const std::size_t stride = std::max<std::size_t>(1, traj.rows.size() / 2000);

  const char* colors[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  const char* labels[4] = {"qw", "qx", "qy", "qz"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 600\">\n";
  svg << "  <rect width=\"1000\" height=\"600\" fill=\"white\"/>\n";
  svg << "  <line x1=\"" << x0 << "\" y1=\"" << y_of(0.0) << "\" x2=\"" << x1
      << "\" y2=\"" << y_of(0.0) << "\" stroke=\"#cccccc\"/>\n";
  svg << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
      << y1 << "\" stroke=\"#333333\"/>\n";
  svg << "  <line x1=\"" << x0 << "\" y1=\"" << y1 << "\" x2=\"" << x1 << "\" y2=\""
      << y1 << "\" stroke=\"#333333\"/>\n";
  for (int c = 0; c < 4; ++c) {
    svg << "  <polyline fill=\"none\" stroke=\"" << colors[c]
        << "\" stroke-width=\"1.5\" points=\"";
    const auto emit = [&](const sim::TrajectoryRecord& r) {
      const Eigen::Vector4d q = r.q.coeffs();
      svg << num(x_of(r.t)) << ',' << num(y_of(q[c])) << ' ';
    };
    for (std::size_t i = 0; i < traj.rows.size(); i += stride) {
      emit(traj.rows[i]);
    }
    if ((traj.rows.size() - 1) % stride != 0) {
      emit(traj.rows.back());
    }
    svg << "\"/>\n";
    svg << "  <text x=\"" << (x0 + 15.0 + 60.0 * c) << "\" y=\"20\" fill=\""
        << colors[c] << "\" font-family=\"sans-serif\" font-size=\"14\">" << labels[c]
        << "</text>\n";
  }
  svg << "  <text x=\"" << (x1 - 60.0) << "\" y=\"" << (y1 + 20.0)
      << "\" fill=\"#333333\" font-family=\"sans-serif\" font-size=\"12\">t [s]</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const sim::Trajectory& traj, const std::string& path) {
  detail::write_file(path, render_svg(traj));
}

}  // namespace vsds::io
