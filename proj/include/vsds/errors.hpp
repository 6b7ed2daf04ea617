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

#include <stdexcept>
#include <string>

namespace vsds {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Log map requested at the antipode, where the direction is undefined.
class AntipodalError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an op (step angle >= pi, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Nominal system gain is not Hurwitz.
class StabilityError : public Error {
 public:
  using Error::Error;
};

class EmptyTrajectoryError : public Error {
 public:
  using Error::Error;
};

// Consecutive quaternions of a sequence fell on opposite hemispheres.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Via-point sampling ran out of steps before reaching the goal ball.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Path too short to carve the requested number of segments out of.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Spring direction vector has no usable norm.
class ZeroDirectionError : public Error {
 public:
  using Error::Error;
};

// Jacobian shape does not match a 6-dof wrench.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vsds
