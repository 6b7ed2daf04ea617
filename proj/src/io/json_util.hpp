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

// Internal helpers shared by the io translation units. Field lookups throw
// ParseError naming the offending dotted path, so config mistakes surface
// with context instead of a bare type error.

#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vsds/errors.hpp"
#include "vsds/quaternion.hpp"

namespace vsds::io::detail {

using Json = nlohmann::ordered_json;

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write " + path);
  }
  out << text;
  if (!out) {
    throw ValidationError("write failed for " + path);
  }
}

inline const Json& member(const Json& j, const std::string& path,
                          const std::string& key) {
  if (!j.is_object()) {
    throw ParseError("field '" + path + "': expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError("field '" + path + "." + key + "': missing");
  }
  return *it;
}

inline double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ParseError("field '" + path + "': expected a number");
  }
  return j.get<double>();
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) {
    throw ParseError("field '" + path + "': expected a string");
  }
  return j.get<std::string>();
}

inline Vec3 as_vec3(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("field '" + path + "': expected [x, y, z]");
  }
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    v[i] = as_number(j[i], path);
  }
  return v;
}

// 3x3 matrices travel as three row arrays.
inline Mat3 as_mat3(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("field '" + path + "': expected three rows of three");
  }
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != 3) {
      throw ParseError("field '" + path + "': expected three rows of three");
    }
    for (int c = 0; c < 3; ++c) {
      m(r, c) = as_number(row[c], path);
    }
  }
  return m;
}

// Scalar shorthand x means x * I3.
inline Mat3 as_mat3_or_scalar(const Json& j, const std::string& path) {
  if (j.is_number()) {
    return j.get<double>() * Mat3::Identity();
  }
  return as_mat3(j, path);
}

// Quaternions travel scalar-first. The unit check runs on the raw values;
// construction then renormalizes the residual 1e-6.
inline UnitQuaternion as_quaternion(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("field '" + path + "': expected [nu, ux, uy, uz]");
  }
  double c[4];
  for (int i = 0; i < 4; ++i) {
    c[i] = as_number(j[i], path);
  }
  const double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw ValidationError(path + " not unit");
  }
  // Already-normalized values load untouched, so load(write(x)) is
  // field-exact; renormalizing here could walk the last ulp.
  if (std::abs(norm - 1.0) <= 1e-9) {
    return UnitQuaternion::from_normalized(c[0], Vec3(c[1], c[2], c[3]));
  }
  return UnitQuaternion(c[0], Vec3(c[1], c[2], c[3]));
}

// For documents this library wrote itself: bit-exact reload, norm gate 1e-9.
inline UnitQuaternion as_stored_quaternion(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("field '" + path + "': expected [nu, ux, uy, uz]");
  }
  double c[4];
  for (int i = 0; i < 4; ++i) {
    c[i] = as_number(j[i], path);
  }
  return UnitQuaternion::from_normalized(c[0], Vec3(c[1], c[2], c[3]));
}

inline Json quaternion_json(const UnitQuaternion& q) {
  return Json::array({q.nu(), q.u().x(), q.u().y(), q.u().z()});
}

inline Json vec3_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

inline Json mat3_json(const Mat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    rows.push_back(Json::array({m(r, 0), m(r, 1), m(r, 2)}));
  }
  return rows;
}

}  // namespace vsds::io::detail
