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

// Data-parallel inner loop of the torque policy: for one query orientation
// and every spring at once, the relative quaternion to the attractor, its
// log, the spring force, and the squared tangent distance to the kernel
// center. Two interchangeable backends (plain scalar, AVX2) produce
// bit-identical results; reductions stay in the caller so backend choice
// never reorders a sum.

#pragma once

#include <cstddef>
#include <vector>

namespace vsds::kernels {

inline constexpr std::size_t kLanes = 4;  // doubles per AVX2 vector

// Structure-of-arrays spring table, padded to a lane multiple. Pad entries
// hold identity quaternions and zero matrices so every lane is safe to
// evaluate; consumers read indices [0, count) only.
struct SpringSoa {
  std::size_t count = 0;
  std::size_t padded = 0;

  // attractor quaternion components
  std::vector<double> via_nu, via_x, via_y, via_z;
  // kernel center quaternion components
  std::vector<double> cen_nu, cen_x, cen_y, cen_z;
  // rows of the spring matrix A
  std::vector<double> a00, a01, a02, a10, a11, a12, a20, a21, a22;
  // 1 / (2 sigma_i^2)
  std::vector<double> inv_two_sigma_sq;

  void resize(std::size_t n);
};

// Per-spring outputs; each array must hold at least soa.padded entries.
struct SpringTermsView {
  double* zeta_x;   // Log_q(attractor), the displacement the spring acts on
  double* zeta_y;
  double* zeta_z;
  double* force_x;  // A * zeta
  double* force_y;
  double* force_z;
  double* cen_d2;   // squared tangent distance to the kernel center
  double* rel_nu;   // scalar part of attractor * conj(q), antipodal screen
  double* rel_u2;   // squared vector norm of the same
};

// q4 = {nu, ux, uy, uz} of the query orientation.
using TermsKernel = void (*)(const SpringSoa& soa, const double* q4,
                             const SpringTermsView& out);

void terms_scalar(const SpringSoa& soa, const double* q4, const SpringTermsView& out);
#if defined(VSDS_HAVE_AVX2)
void terms_avx2(const SpringSoa& soa, const double* q4, const SpringTermsView& out);
#endif

// Backend picked at first use: VSDS_KERNEL=scalar|avx2 wins, else the widest
// one the CPU supports.
TermsKernel active_kernel();
const char* active_kernel_name();

// Test hook. "scalar" or "avx2" pins the backend (ValidationError if that
// backend cannot run here); nullptr re-runs auto-selection.
void force_kernel(const char* name);

}  // namespace vsds::kernels
