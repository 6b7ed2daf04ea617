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

// The two kernel backends are required to be bit-identical, not merely close:
// every comparison here is memcmp on raw doubles.

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "vsds/errors.hpp"
#include "vsds/kernels/policy_kernels.hpp"
#include "vsds/nominal_ds.hpp"
#include "vsds/policy.hpp"
#include "vsds/stiffness.hpp"
#include "vsds/via_points.hpp"

namespace {

using vsds::Mat3;
using vsds::UnitQuaternion;
using vsds::Vec3;
namespace kern = vsds::kernels;

bool avx2_backend_usable() {
  try {
    kern::force_kernel("avx2");
  } catch (const vsds::ValidationError&) {
    return false;
  }
  kern::force_kernel(nullptr);
  return true;
}

kern::SpringSoa random_soa(vsds::test::Rng& rng, std::size_t n) {
  kern::SpringSoa soa;
  soa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const UnitQuaternion via = rng.unit_quaternion();
    const UnitQuaternion cen = rng.unit_quaternion();
    soa.via_nu[i] = via.nu();
    soa.via_x[i] = via.u().x();
    soa.via_y[i] = via.u().y();
    soa.via_z[i] = via.u().z();
    soa.cen_nu[i] = cen.nu();
    soa.cen_x[i] = cen.u().x();
    soa.cen_y[i] = cen.u().y();
    soa.cen_z[i] = cen.u().z();
    soa.a00[i] = rng.uniform(-200.0, 200.0);
    soa.a01[i] = rng.uniform(-200.0, 200.0);
    soa.a02[i] = rng.uniform(-200.0, 200.0);
    soa.a10[i] = rng.uniform(-200.0, 200.0);
    soa.a11[i] = rng.uniform(-200.0, 200.0);
    soa.a12[i] = rng.uniform(-200.0, 200.0);
    soa.a20[i] = rng.uniform(-200.0, 200.0);
    soa.a21[i] = rng.uniform(-200.0, 200.0);
    soa.a22[i] = rng.uniform(-200.0, 200.0);
    const double sigma = rng.uniform(0.01, 1.0);
    soa.inv_two_sigma_sq[i] = 1.0 / (2.0 * sigma * sigma);
  }
  return soa;
}

// Output buffers plus the view the kernels write through.
struct TermsBuffers {
  std::vector<double> zx, zy, zz, fx, fy, fz, d2, rn, ru2;

  explicit TermsBuffers(std::size_t padded)
      : zx(padded), zy(padded), zz(padded), fx(padded), fy(padded), fz(padded),
        d2(padded), rn(padded), ru2(padded) {}

  kern::SpringTermsView view() {
    return {zx.data(), zy.data(), zz.data(), fx.data(), fy.data(), fz.data(),
            d2.data(), rn.data(), ru2.data()};
  }
};

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b,
               std::size_t n) {
  return std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0;
}

bool all_bit_equal(const TermsBuffers& a, const TermsBuffers& b, std::size_t n) {
  return bit_equal(a.zx, b.zx, n) && bit_equal(a.zy, b.zy, n) &&
         bit_equal(a.zz, b.zz, n) && bit_equal(a.fx, b.fx, n) &&
         bit_equal(a.fy, b.fy, n) && bit_equal(a.fz, b.fz, n) &&
         bit_equal(a.d2, b.d2, n) && bit_equal(a.rn, b.rn, n) &&
         bit_equal(a.ru2, b.ru2, n);
}

vsds::VsdsPolicy make_test_policy(vsds::test::Rng& rng, std::size_t n_points) {
  const UnitQuaternion goal = rng.unit_quaternion();
  const UnitQuaternion q0 = vsds::exp_map(goal, 0.5 * rng.tangent(2.0, 2.6));
  const auto ds = vsds::make_tangent_linear_ds(-Mat3::Identity(), goal);
  const auto via = vsds::sample_via_points(*ds, q0, goal, n_points, 0.002, 0.05);
  return vsds::build_springs(via, *vsds::make_constant_stiffness(150.0), 0.5);
}

}  // namespace

TEST_CASE("scalar and avx2 term kernels are bit-identical") {
#if defined(VSDS_HAVE_AVX2)
  if (!avx2_backend_usable()) {
    MESSAGE("avx2 not available on this CPU, equivalence not exercised");
    return;
  }
  vsds::test::Rng rng(0x6b65726e01ULL);
  // Counts straddle the lane width: below, exact, one over, many, many+1.
  for (const std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{4},
                              std::size_t{5}, std::size_t{8}, std::size_t{30},
                              std::size_t{33}}) {
    for (int rep = 0; rep < 60; ++rep) {
      const kern::SpringSoa soa = random_soa(rng, n);
      const UnitQuaternion q = rng.unit_quaternion();
      const double q4[4] = {q.nu(), q.u().x(), q.u().y(), q.u().z()};
      TermsBuffers scalar_out(soa.padded);
      TermsBuffers avx2_out(soa.padded);
      kern::terms_scalar(soa, q4, scalar_out.view());
      kern::terms_avx2(soa, q4, avx2_out.view());
      REQUIRE(all_bit_equal(scalar_out, avx2_out, soa.count));
    }
  }
#else
  MESSAGE("built without avx2 support, equivalence not exercised");
#endif
}

TEST_CASE("policy evaluation is bit-identical across backends") {
  if (!avx2_backend_usable()) {
    MESSAGE("avx2 not available on this CPU, equivalence not exercised");
    return;
  }
  vsds::test::Rng rng(0x6b65726e02ULL);
  const vsds::VsdsPolicy policy = make_test_policy(rng, 30);

  for (int rep = 0; rep < 300; ++rep) {
    // Mix of states near the chain and anywhere on the sphere.
    const UnitQuaternion q =
        (rep % 2 == 0) ? vsds::exp_map(policy.q_goal(), 0.5 * rng.tangent(0.0, 2.8))
                       : rng.unit_quaternion();

    kern::force_kernel("scalar");
    const vsds::PolicyEvaluation a = policy.evaluate(q);
    const std::vector<double> wa = policy.weights(q);

    kern::force_kernel("avx2");
    const vsds::PolicyEvaluation b = policy.evaluate(q);
    const std::vector<double> wb = policy.weights(q);

    const Eigen::Vector3d ta = a.tau_vs;
    const Eigen::Vector3d tb = b.tau_vs;
    REQUIRE(std::memcmp(ta.data(), tb.data(), 3 * sizeof(double)) == 0);
    REQUIRE(a.dominant == b.dominant);
    REQUIRE(bit_equal(wa, wb, wa.size()));
  }
  kern::force_kernel(nullptr);
}

TEST_CASE("kernel selection honors forcing and rejects unknown names") {
  const std::string initial = kern::active_kernel_name();
  CHECK((initial == "scalar" || initial == "avx2"));

  kern::force_kernel("scalar");
  CHECK(std::string(kern::active_kernel_name()) == "scalar");
  CHECK(kern::active_kernel() == &kern::terms_scalar);

  CHECK_THROWS_AS(kern::force_kernel("sse9"), vsds::ValidationError);
  // A failed force leaves the previous selection in place.
  CHECK(std::string(kern::active_kernel_name()) == "scalar");

  kern::force_kernel(nullptr);
  CHECK(std::string(kern::active_kernel_name()) == initial);
}

TEST_CASE("pad lanes never contaminate live outputs") {
#if defined(VSDS_HAVE_AVX2)
  if (!avx2_backend_usable()) {
    MESSAGE("avx2 not available on this CPU, pad check not exercised");
    return;
  }
  // A count-5 table shares its second vector with three pad lanes; the live
  // fifth entry must not depend on what the pads compute.
  vsds::test::Rng rng(0x6b65726e03ULL);
  const kern::SpringSoa soa5 = random_soa(rng, 5);
  kern::SpringSoa soa5_poisoned = soa5;
  for (std::size_t i = soa5.count; i < soa5.padded; ++i) {
    // Arbitrary valid unit quaternions in the pads instead of identity.
    soa5_poisoned.via_nu[i] = 0.0;
    soa5_poisoned.via_z[i] = 1.0;
    soa5_poisoned.cen_nu[i] = 0.0;
    soa5_poisoned.cen_x[i] = 1.0;
    soa5_poisoned.a00[i] = 1e6;
    soa5_poisoned.inv_two_sigma_sq[i] = 1e8;
  }
  const UnitQuaternion q = rng.unit_quaternion();
  const double q4[4] = {q.nu(), q.u().x(), q.u().y(), q.u().z()};
  TermsBuffers clean(soa5.padded);
  TermsBuffers poisoned(soa5.padded);
  kern::terms_avx2(soa5, q4, clean.view());
  kern::terms_avx2(soa5_poisoned, q4, poisoned.view());
  CHECK(all_bit_equal(clean, poisoned, soa5.count));
#endif
}
