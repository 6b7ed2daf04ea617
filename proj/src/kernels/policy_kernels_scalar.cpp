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

// Reference backend. The association order here is the contract: the AVX2
// backend mirrors it expression by expression, and this translation unit is
// built with FP contraction off so neither side fuses differently.

#include <cmath>

#include "vsds/kernels/policy_kernels.hpp"

namespace vsds::kernels {

void SpringSoa::resize(std::size_t n) {
  count = n;
  padded = (n + kLanes - 1) / kLanes * kLanes;
  for (auto* v : {&via_nu, &via_x, &via_y, &via_z, &cen_nu, &cen_x, &cen_y, &cen_z,
                  &a00, &a01, &a02, &a10, &a11, &a12, &a20, &a21, &a22,
                  &inv_two_sigma_sq}) {
    v->assign(padded, 0.0);
  }
  // identity pad quaternions keep the tail lanes mathematically valid
  for (std::size_t i = n; i < padded; ++i) {
    via_nu[i] = 1.0;
    cen_nu[i] = 1.0;
  }
}

void terms_scalar(const SpringSoa& soa, const double* q4, const SpringTermsView& out) {
  // conj(q): negate the vector part once, outside the loop
  const double cn = q4[0];
  const double cx = -q4[1];
  const double cy = -q4[2];
  const double cz = -q4[3];

  for (std::size_t i = 0; i < soa.count; ++i) {
    // rel = attractor * conj(q), Hamilton product
    const double bn = soa.via_nu[i];
    const double bx = soa.via_x[i];
    const double by = soa.via_y[i];
    const double bz = soa.via_z[i];
    const double rn = bn * cn - ((bx * cx + by * cy) + bz * cz);
    const double rx = (bn * cx + cn * bx) + (by * cz - bz * cy);
    const double ry = (bn * cy + cn * by) + (bz * cx - bx * cz);
    const double rz = (bn * cz + cn * bz) + (bx * cy - by * cx);

    const double u2 = (rx * rx + ry * ry) + rz * rz;
    const double un = std::sqrt(u2);
    const double th = std::atan2(un, rn);
    const double sc = un > 0.0 ? th / un : 0.0;
    const double zx = sc * rx;
    const double zy = sc * ry;
    const double zz = sc * rz;
    out.zeta_x[i] = zx;
    out.zeta_y[i] = zy;
    out.zeta_z[i] = zz;
    out.rel_nu[i] = rn;
    out.rel_u2[i] = u2;

    out.force_x[i] = (soa.a00[i] * zx + soa.a01[i] * zy) + soa.a02[i] * zz;
    out.force_y[i] = (soa.a10[i] * zx + soa.a11[i] * zy) + soa.a12[i] * zz;
    out.force_z[i] = (soa.a20[i] * zx + soa.a21[i] * zy) + soa.a22[i] * zz;

    // center leg: only the angle is needed, not the full log
    const double dn = soa.cen_nu[i];
    const double dx = soa.cen_x[i];
    const double dy = soa.cen_y[i];
    const double dz = soa.cen_z[i];
    const double sn = dn * cn - ((dx * cx + dy * cy) + dz * cz);
    const double sx = (dn * cx + cn * dx) + (dy * cz - dz * cy);
    const double sy = (dn * cy + cn * dy) + (dz * cx - dx * cz);
    const double sz = (dn * cz + cn * dz) + (dx * cy - dy * cx);
    const double su2 = (sx * sx + sy * sy) + sz * sz;
    const double sun = std::sqrt(su2);
    const double sth = std::atan2(sun, sn);
    out.cen_d2[i] = sth * sth;
  }
}

}  // namespace vsds::kernels
