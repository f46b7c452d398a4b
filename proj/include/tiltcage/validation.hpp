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

#ifndef TILTCAGE_VALIDATION_HPP_
#define TILTCAGE_VALIDATION_HPP_

#include <string>
#include <vector>

#include "tiltcage/control.hpp"
#include "tiltcage/params.hpp"

namespace tiltcage {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool informational = false;  // notes that do not fail the suite
  std::string detail;
};

// Fast self-consistency suite: flat-limit reduction of the inclined
// dynamics, integrator convergence order, optimizer-vs-oracle agreement,
// the level-rotor-plane invariant, and the closed-loop hover fixed point.
std::vector<CheckResult> run_validation_suite(const ParamSet& params,
                                              const ControlConfig& control);

}  // namespace tiltcage

#endif  // TILTCAGE_VALIDATION_HPP_
