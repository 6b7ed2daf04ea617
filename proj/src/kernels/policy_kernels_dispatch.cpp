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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "vsds/errors.hpp"
#include "vsds/kernels/policy_kernels.hpp"

namespace vsds::kernels {

namespace {

bool avx2_usable() {
#if defined(VSDS_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

TermsKernel by_name(const char* name) {
  if (std::strcmp(name, "scalar") == 0) {
    return terms_scalar;
  }
  if (std::strcmp(name, "avx2") == 0) {
#if defined(VSDS_HAVE_AVX2)
    if (avx2_usable()) {
      return terms_avx2;
    }
#endif
    throw ValidationError("avx2 kernel backend not available on this host");
  }
  throw ValidationError(std::string("unknown kernel backend '") + name + "'");
}

TermsKernel autoselect() {
  if (const char* env = std::getenv("VSDS_KERNEL")) {
    return by_name(env);
  }
#if defined(VSDS_HAVE_AVX2)
  if (avx2_usable()) {
    return terms_avx2;
  }
#endif
  return terms_scalar;
}

std::atomic<TermsKernel> g_kernel{nullptr};

}  // namespace

TermsKernel active_kernel() {
  TermsKernel k = g_kernel.load(std::memory_order_acquire);
  if (k == nullptr) {
    k = autoselect();
    g_kernel.store(k, std::memory_order_release);
  }
  return k;
}

const char* active_kernel_name() {
#if defined(VSDS_HAVE_AVX2)
  if (active_kernel() == terms_avx2) {
    return "avx2";
  }
#endif
  return "scalar";
}

void force_kernel(const char* name) {
  g_kernel.store(name == nullptr ? autoselect() : by_name(name),
                 std::memory_order_release);
}

}  // namespace vsds::kernels
