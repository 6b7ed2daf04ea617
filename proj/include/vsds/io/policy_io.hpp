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

#pragma once

#include <string>

#include "vsds/policy.hpp"

namespace vsds::io {

// Serialized policy format tag; bump on layout changes.
inline constexpr const char* kPolicyFormat = "vsds-policy-v1";

// Full compiled policy as JSON: via-point chain plus every spring. Doubles
// round-trip exactly, so a reloaded policy evaluates bit-identically.
std::string format_policy(const VsdsPolicy& policy);

// Throws ParseError on malformed JSON, ValidationError on a wrong format
// tag or springs that fail the policy invariants.
VsdsPolicy parse_policy(const std::string& text);

void save_policy_json(const VsdsPolicy& policy, const std::string& path);

VsdsPolicy load_policy_json(const std::string& path);

}  // namespace vsds::io
