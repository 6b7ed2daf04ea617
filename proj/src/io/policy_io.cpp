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

#include "vsds/io/policy_io.hpp"

#include <string>
#include <vector>

#include "json_util.hpp"
#include "vsds/errors.hpp"
#include "vsds/via_points.hpp"

namespace vsds::io {
namespace {

using detail::Json;

Json spring_json(const LocalSpring& s) {
  Json j;
  j["index"] = s.index;
  j["attractor"] = detail::quaternion_json(s.attractor);
  j["A"] = detail::mat3_json(s.A);
  j["frame"] = detail::mat3_json(s.frame);
  j["K"] = detail::mat3_json(s.K);
  j["center"] = detail::quaternion_json(s.center);
  j["sigma"] = s.sigma;
  j["l"] = s.l;
  return j;
}

LocalSpring parse_spring(const Json& j, const std::string& path) {
  LocalSpring s;
  const double index = detail::as_number(detail::member(j, path, "index"), path + ".index");
  s.index = static_cast<std::size_t>(index);
  s.attractor = detail::as_stored_quaternion(detail::member(j, path, "attractor"),
                                             path + ".attractor");
  s.A = detail::as_mat3(detail::member(j, path, "A"), path + ".A");
  s.frame = detail::as_mat3(detail::member(j, path, "frame"), path + ".frame");
  s.K = detail::as_mat3(detail::member(j, path, "K"), path + ".K");
  s.center =
      detail::as_stored_quaternion(detail::member(j, path, "center"), path + ".center");
  s.sigma = detail::as_number(detail::member(j, path, "sigma"), path + ".sigma");
  s.l = detail::as_number(detail::member(j, path, "l"), path + ".l");
  return s;
}

}  // namespace

std::string format_policy(const VsdsPolicy& policy) {
  Json j;
  j["format"] = kPolicyFormat;
  j["delta"] = policy.delta();
  const ViaPointSequence& via = policy.via();
  Json via_json;
  Json q = Json::array();
  Json zeta = Json::array();
  Json omega = Json::array();
  Json l = Json::array();
  for (const auto& point : via.q) {
    q.push_back(detail::quaternion_json(point));
  }
  for (const auto& z : via.zeta) {
    zeta.push_back(detail::vec3_json(z));
  }
  for (const auto& w : via.omega) {
    omega.push_back(detail::vec3_json(w));
  }
  for (double spacing : via.l) {
    l.push_back(spacing);
  }
  via_json["q"] = q;
  via_json["zeta"] = zeta;
  via_json["omega"] = omega;
  via_json["l"] = l;
  via_json["q_goal"] = detail::quaternion_json(via.q_goal);
  j["via"] = via_json;
  Json springs = Json::array();
  for (const auto& s : policy.springs()) {
    springs.push_back(spring_json(s));
  }
  j["springs"] = springs;
  return j.dump(2) + "\n";
}

VsdsPolicy parse_policy(const std::string& text) {
  const Json j = detail::parse_text(text, "policy");
  if (!j.is_object()) {
    throw ParseError("policy root: expected an object");
  }
  const std::string format =
      detail::as_string(detail::member(j, "", "format"), "format");
  if (format != kPolicyFormat) {
    throw ValidationError("unsupported policy format '" + format + "'");
  }
  const double delta = detail::as_number(detail::member(j, "", "delta"), "delta");

  const Json& v = detail::member(j, "", "via");
  ViaPointSequence via;
  const Json& q = detail::member(v, "via", "q");
  if (!q.is_array()) {
    throw ParseError("field 'via.q': expected an array");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    via.q.push_back(
        detail::as_stored_quaternion(q[i], "via.q[" + std::to_string(i) + "]"));
  }
  const Json& zeta = detail::member(v, "via", "zeta");
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    via.zeta.push_back(detail::as_vec3(zeta[i], "via.zeta[" + std::to_string(i) + "]"));
  }
  const Json& omega = detail::member(v, "via", "omega");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    via.omega.push_back(detail::as_vec3(omega[i], "via.omega[" + std::to_string(i) + "]"));
  }
  const Json& l = detail::member(v, "via", "l");
  for (std::size_t i = 0; i < l.size(); ++i) {
    via.l.push_back(detail::as_number(l[i], "via.l[" + std::to_string(i) + "]"));
  }
  via.q_goal =
      detail::as_stored_quaternion(detail::member(v, "via", "q_goal"), "via.q_goal");

  const Json& springs_json = detail::member(j, "", "springs");
  if (!springs_json.is_array()) {
    throw ParseError("field 'springs': expected an array");
  }
  std::vector<LocalSpring> springs;
  for (std::size_t i = 0; i < springs_json.size(); ++i) {
    springs.push_back(
        parse_spring(springs_json[i], "springs[" + std::to_string(i) + "]"));
  }
  // The policy constructor re-runs all structural invariants.
  return VsdsPolicy(std::move(via), std::move(springs), delta);
}

void save_policy_json(const VsdsPolicy& policy, const std::string& path) {
  detail::write_file(path, format_policy(policy));
}

VsdsPolicy load_policy_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_policy(buf.str());
}

}  // namespace vsds::io
