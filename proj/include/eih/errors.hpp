// Copyright 2026 The EIH Authors
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

#ifndef EIH_ERRORS_HPP_
#define EIH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace eih {

// Input-shaped failures. Callers that pass validated values never see these.
struct DegenerateGeometry : std::invalid_argument {
  explicit DegenerateGeometry(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NoAccessLink : std::invalid_argument {
  explicit NoAccessLink(const std::string& what)
      : std::invalid_argument(what) {}
};

struct InvalidLatency : std::invalid_argument {
  explicit InvalidLatency(const std::string& what)
      : std::invalid_argument(what) {}
};

struct EmptyScenario : std::invalid_argument {
  explicit EmptyScenario(const std::string& what)
      : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
  explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownScheme : std::invalid_argument {
  explicit UnknownScheme(const std::string& what)
      : std::invalid_argument(what) {}
};

// Model-shaped failures: the inputs are well formed but the system they
// describe cannot do what was asked.
struct NoBackhaul : std::runtime_error {
  explicit NoBackhaul(const std::string& what) : std::runtime_error(what) {}
};

struct NoComputeCapacity : std::runtime_error {
  explicit NoComputeCapacity(const std::string& what)
      : std::runtime_error(what) {}
};

struct Infeasible : std::runtime_error {
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

struct ComputeBelowThreshold : std::runtime_error {
  explicit ComputeBelowThreshold(const std::string& what)
      : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eih

#endif  // EIH_ERRORS_HPP_
