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

// Four springs per iteration. Every arithmetic expression mirrors the scalar
// backend's association order, sqrt uses the IEEE vector instruction, and
// atan2 drops to libm per lane, so results match the scalar backend bit for
// bit. Built with FP contraction off; no FMA.

#include <immintrin.h>

#include <cmath>

#include "vsds/kernels/policy_kernels.hpp"

namespace vsds::kernels {

namespace {

// th/un with un == 0 lanes forced to zero (the div lane is inf/nan, masked off)
inline __m256d safe_scale(__m256d th, __m256d un) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d mask = _mm256_cmp_pd(un, zero, _CMP_GT_OQ);
  return _mm256_blendv_pd(zero, _mm256_div_pd(th, un), mask);
}

inline __m256d atan2_lanes(__m256d y, __m256d x) {
  alignas(32) double ys[4], xs[4], out[4];
  _mm256_store_pd(ys, y);
  _mm256_store_pd(xs, x);
  for (int k = 0; k < 4; ++k) out[k] = std::atan2(ys[k], xs[k]);
  return _mm256_load_pd(out);
}

}  // namespace

void terms_avx2(const SpringSoa& soa, const double* q4, const SpringTermsView& out) {
  const __m256d cn = _mm256_set1_pd(q4[0]);
  const __m256d cx = _mm256_set1_pd(-q4[1]);
  const __m256d cy = _mm256_set1_pd(-q4[2]);
  const __m256d cz = _mm256_set1_pd(-q4[3]);

  for (std::size_t i = 0; i < soa.padded; i += kLanes) {
    const __m256d bn = _mm256_loadu_pd(soa.via_nu.data() + i);
    const __m256d bx = _mm256_loadu_pd(soa.via_x.data() + i);
    const __m256d by = _mm256_loadu_pd(soa.via_y.data() + i);
    const __m256d bz = _mm256_loadu_pd(soa.via_z.data() + i);

    // rn = bn*cn - ((bx*cx + by*cy) + bz*cz)
    const __m256d rn = _mm256_sub_pd(
        _mm256_mul_pd(bn, cn),
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(bx, cx), _mm256_mul_pd(by, cy)),
                      _mm256_mul_pd(bz, cz)));
    // rx = (bn*cx + cn*bx) + (by*cz - bz*cy), and cyclic
    const __m256d rx = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(bn, cx), _mm256_mul_pd(cn, bx)),
        _mm256_sub_pd(_mm256_mul_pd(by, cz), _mm256_mul_pd(bz, cy)));
    const __m256d ry = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(bn, cy), _mm256_mul_pd(cn, by)),
        _mm256_sub_pd(_mm256_mul_pd(bz, cx), _mm256_mul_pd(bx, cz)));
    const __m256d rz = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(bn, cz), _mm256_mul_pd(cn, bz)),
        _mm256_sub_pd(_mm256_mul_pd(bx, cy), _mm256_mul_pd(by, cx)));

    const __m256d u2 = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(rx, rx), _mm256_mul_pd(ry, ry)),
        _mm256_mul_pd(rz, rz));
    const __m256d un = _mm256_sqrt_pd(u2);
    const __m256d th = atan2_lanes(un, rn);
    const __m256d sc = safe_scale(th, un);
    const __m256d zx = _mm256_mul_pd(sc, rx);
    const __m256d zy = _mm256_mul_pd(sc, ry);
    const __m256d zz = _mm256_mul_pd(sc, rz);
    _mm256_storeu_pd(out.zeta_x + i, zx);
    _mm256_storeu_pd(out.zeta_y + i, zy);
    _mm256_storeu_pd(out.zeta_z + i, zz);
    _mm256_storeu_pd(out.rel_nu + i, rn);
    _mm256_storeu_pd(out.rel_u2 + i, u2);

    // force rows: (a0*zx + a1*zy) + a2*zz
    const __m256d fx = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(soa.a00.data() + i), zx),
                      _mm256_mul_pd(_mm256_loadu_pd(soa.a01.data() + i), zy)),
        _mm256_mul_pd(_mm256_loadu_pd(soa.a02.data() + i), zz));
    const __m256d fy = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(soa.a10.data() + i), zx),
                      _mm256_mul_pd(_mm256_loadu_pd(soa.a11.data() + i), zy)),
        _mm256_mul_pd(_mm256_loadu_pd(soa.a12.data() + i), zz));
    const __m256d fz = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(soa.a20.data() + i), zx),
                      _mm256_mul_pd(_mm256_loadu_pd(soa.a21.data() + i), zy)),
        _mm256_mul_pd(_mm256_loadu_pd(soa.a22.data() + i), zz));
    _mm256_storeu_pd(out.force_x + i, fx);
    _mm256_storeu_pd(out.force_y + i, fy);
    _mm256_storeu_pd(out.force_z + i, fz);

    // center leg
    const __m256d dn = _mm256_loadu_pd(soa.cen_nu.data() + i);
    const __m256d dx = _mm256_loadu_pd(soa.cen_x.data() + i);
    const __m256d dy = _mm256_loadu_pd(soa.cen_y.data() + i);
    const __m256d dz = _mm256_loadu_pd(soa.cen_z.data() + i);
    const __m256d sn = _mm256_sub_pd(
        _mm256_mul_pd(dn, cn),
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, cx), _mm256_mul_pd(dy, cy)),
                      _mm256_mul_pd(dz, cz)));
    const __m256d sx = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(dn, cx), _mm256_mul_pd(cn, dx)),
        _mm256_sub_pd(_mm256_mul_pd(dy, cz), _mm256_mul_pd(dz, cy)));
    const __m256d sy = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(dn, cy), _mm256_mul_pd(cn, dy)),
        _mm256_sub_pd(_mm256_mul_pd(dz, cx), _mm256_mul_pd(dx, cz)));
    const __m256d sz = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(dn, cz), _mm256_mul_pd(cn, dz)),
        _mm256_sub_pd(_mm256_mul_pd(dx, cy), _mm256_mul_pd(dy, cx)));
    const __m256d su2 = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(sx, sx), _mm256_mul_pd(sy, sy)),
        _mm256_mul_pd(sz, sz));
    const __m256d sun = _mm256_sqrt_pd(su2);
    const __m256d sth = atan2_lanes(sun, sn);
    _mm256_storeu_pd(out.cen_d2 + i, _mm256_mul_pd(sth, sth));
  }
}

}  // namespace vsds::kernels
