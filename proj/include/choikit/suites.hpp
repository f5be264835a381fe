// Copyright 2026 The choikit Authors
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

/**
 * @file suites.hpp
 * Seeded batch runs of the identity and cone checks, as driven by
 * `choikit verify`. Every row aggregates one identity over all instances:
 * the worst residual, the tolerance and the number of failures. The first
 * failing instance of each suite is kept for a reproducer dump.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choikit/json_io.hpp"

namespace choikit {

struct SuiteConfig {
  std::uint64_t seed = 0;
  Index trials = 20;
  Index budget = 64;
  Index m = 0;  ///< 0: drawn per instance
  Index n = 0;
  Index k = 0;  ///< thm43 level; 0 runs every level
  std::optional<double> tol;  ///< overrides the identity tolerances
  std::string sigma;          ///< thm43: "transpose", "ad", "id" or "" (both)
};

struct SuiteRow {
  std::string suite;
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Index instances = 0;
  Index failures = 0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  std::vector<Json> notes;             ///< per-instance summaries (thm43, controls)
  std::optional<Json> reproducer;      ///< first failing instance

  bool pass() const;
};

/// Names accepted by run_suite(); "all" runs them in this order.
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidArgument) for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

/// Deterministic report (no timings).
Json suite_report(const std::string& name, const SuiteConfig& config,
                  const SuiteResult& result);

/// Fixed-width residual table.
std::string suite_table(const SuiteResult& result);

}  // namespace choikit
