// Copyright 2026 The DCAE Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCAE_ERRORS_HPP
#define DCAE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcae {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs that violate the domain model (mismatched dimensions, malformed
// bids, inconsistent catalogs).
class ModelError : public Error {
 public:
  explicit ModelError(const std::string& what) : Error(what) {}
};

// Invalid user-facing parameters: scenario ranges, mechanism settings,
// config files and flags.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Failure to read or write an output artifact.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Integer overflow on pathological inputs.
class ArithmeticError : public Error {
 public:
  explicit ArithmeticError(const std::string& what) : Error(what) {}
};

}  // namespace dcae

#endif  // DCAE_ERRORS_HPP
