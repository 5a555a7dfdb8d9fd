// Copyright 2026 The nsp Authors
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

namespace nsp {

// Base class for every error raised by the library. The CLI maps each
// subclass onto a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector/problem/instance sizes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value lies outside its admissible domain (e.g. a spin that is not +-1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A coordinate (nurse, day, shift) is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Invalid or contradictory configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The request exceeds an explicit capacity limit (e.g. the exact-solver cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A statistic was requested over an empty population.
class UndefinedStatisticError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsp
