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

#include "vsds/stiffness.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "vsds/errors.hpp"

namespace vsds {

namespace {

void require_spd(const Mat3& K, const std::string& what) {
  if ((K - K.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError(what + " is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Mat3> es(K);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError(what + " is not positive-definite");
  }
}

template <typename T>
void require_sorted_knots(const std::vector<std::pair<double, T>>& knots,
                          const std::string& what) {
  if (knots.empty()) {
    throw ValidationError(what + " needs at least one knot");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].first < 0.0 || knots[i].first > 1.0) {
      throw ValidationError(what + " knot s=" + std::to_string(knots[i].first) +
                            " outside [0,1]");
    }
    if (i > 0 && knots[i].first <= knots[i - 1].first) {
      throw ValidationError(what + " knots must be strictly increasing in s");
    }
  }
}

class ConstantStiffness final : public StiffnessProfile {
 public:
  explicit ConstantStiffness(const Mat3& K) : K_(K) {}
  Mat3 eval(double) const override { return K_; }
  std::string family() const override { return "constant"; }

 private:
  Mat3 K_;
};

class ScalarProfileStiffness final : public StiffnessProfile {
 public:
  explicit ScalarProfileStiffness(std::vector<std::pair<double, double>> knots)
      : knots_(std::move(knots)) {}

  Mat3 eval(double s) const override {
    return scalar_at(std::clamp(s, 0.0, 1.0)) * Mat3::Identity();
  }

  std::string family() const override { return "profile"; }

 private:
  double scalar_at(double s) const {
    if (s <= knots_.front().first) return knots_.front().second;
    if (s >= knots_.back().first) return knots_.back().second;
    std::size_t j = 1;
    while (knots_[j].first < s) ++j;
    const auto& [s0, k0] = knots_[j - 1];
    const auto& [s1, k1] = knots_[j];
    const double t = (s - s0) / (s1 - s0);
    // half-cosine ramp: flat at both nodes, so chained segments stay C^1
    return k0 + (k1 - k0) * 0.5 * (1.0 - std::cos(M_PI * t));
  }

  std::vector<std::pair<double, double>> knots_;
};

class TabulatedStiffness final : public StiffnessProfile {
 public:
  explicit TabulatedStiffness(std::vector<std::pair<double, Mat3>> knots)
      : knots_(std::move(knots)) {}

  Mat3 eval(double s) const override {
    s = std::clamp(s, 0.0, 1.0);
    if (s <= knots_.front().first) return knots_.front().second;
    if (s >= knots_.back().first) return knots_.back().second;
    std::size_t j = 1;
    while (knots_[j].first < s) ++j;
    const double t = (s - knots_[j - 1].first) / (knots_[j].first - knots_[j - 1].first);
    return (1.0 - t) * knots_[j - 1].second + t * knots_[j].second;
  }

  std::string family() const override { return "tabulated"; }

 private:
  std::vector<std::pair<double, Mat3>> knots_;
};

}  // namespace

StiffnessProfilePtr make_constant_stiffness(double k) {
  if (k <= 0.0) {
    throw ValidationError("constant stiffness must be positive");
  }
  return std::make_shared<ConstantStiffness>(k * Mat3::Identity());
}

StiffnessProfilePtr make_constant_stiffness(const Mat3& K) {
  require_spd(K, "constant stiffness");
  return std::make_shared<ConstantStiffness>(K);
}

StiffnessProfilePtr make_scalar_profile(
    const std::vector<std::pair<double, double>>& breakpoints) {
  require_sorted_knots(breakpoints, "scalar stiffness profile");
  for (const auto& [s, k] : breakpoints) {
    if (k <= 0.0) {
      throw ValidationError("scalar stiffness profile value at s=" +
                            std::to_string(s) + " must be positive");
    }
  }
  return std::make_shared<ScalarProfileStiffness>(breakpoints);
}

StiffnessProfilePtr make_tabulated_profile(
    const std::vector<std::pair<double, Mat3>>& samples) {
  require_sorted_knots(samples, "tabulated stiffness profile");
  for (const auto& [s, K] : samples) {
    require_spd(K, "tabulated stiffness at s=" + std::to_string(s));
  }
  return std::make_shared<TabulatedStiffness>(samples);
}

}  // namespace vsds
