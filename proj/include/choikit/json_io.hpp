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
 * @file json_io.hpp
 * JSON encodings. Complex numbers are [re, im] pairs; matrices are
 *
 *   {"rows": r, "cols": c, "entries": [[re, im], ...]}   (row-major)
 *
 * and every other object nests that format. Doubles are written in the
 * shortest form that parses back to the same value, so a dump/parse cycle
 * is exact. Malformed input throws Error(Parse); inconsistent sizes throw
 * Error(DimensionMismatch).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "choikit/cones.hpp"
#include "choikit/forms.hpp"
#include "choikit/linalg.hpp"
#include "choikit/map_rep.hpp"

namespace choikit {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& x);
ComplexMatrix matrix_from_json(const Json& j);

/// A bare array of [re, im] pairs.
Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json operator_to_json(const BipartiteOperator& c);
BipartiteOperator operator_from_json(const Json& j);

Json form_to_json(const BilinearForm& form);
BilinearForm form_from_json(const Json& j);

/// Elements are written as matrices when d is a perfect square; either
/// encoding is accepted on input.
Json basis_to_json(const BasisFamily& basis);
BasisFamily basis_from_json(const Json& j);

Json map_to_json(const LinearMapRep& phi, const Json& metadata = nullptr);

/**
 * Accepts {"dimIn", "dimOut", "transfer"} or a named built-in:
 * "id" / "transpose" (with "dim", or default_dim when given as a bare
 * string) and {"name": "ad", "s": <matrix>}.
 */
LinearMapRep map_from_json(const Json& j, Index default_dim = 0);

struct CheckReport {
  ConeLabel cone;
  ConeVerdict verdict;
  std::uint64_t seed = 0;
  Index budget = 0;
};

Json report_to_json(const CheckReport& report);

/// Parses a file; throws Error(Parse) when it is missing or malformed.
Json read_json_file(const std::string& path);

/// Compact dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace choikit
