// Copyright 2026 The tiltcage Authors
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

#ifndef TILTCAGE_ERRORS_HPP_
#define TILTCAGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tiltcage {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required key is absent from a config document.
struct MissingKeyError : ConfigError {
  explicit MissingKeyError(const std::string& key)
      : ConfigError("missing key: " + key), key(key) {}
  std::string key;
};

// The config text is not parseable at all.
struct ParseError : ConfigError {
  using ConfigError::ConfigError;
};

// Parsed values violate a model invariant.
struct ValidationError : ConfigError {
  using ConfigError::ConfigError;
};

// A demanded allocation or acceleration cannot be met within the hardware
// envelope; `binding` names the constraint that blocks it.
struct InfeasibleError : std::runtime_error {
  InfeasibleError(const std::string& binding, const std::string& detail)
      : std::runtime_error("infeasible: " + binding +
                           (detail.empty() ? "" : " (" + detail + ")")),
        binding(binding) {}
  std::string binding;
};

}  // namespace tiltcage

#endif  // TILTCAGE_ERRORS_HPP_
