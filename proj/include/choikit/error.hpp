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

#pragma once

#include <stdexcept>
#include <string>

namespace choikit {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotHermitian,
  NotSymmetric,
  NotPSD,
  SingularBasis,
  SingularForm,
  SingularIsomorphism,
  SingularS,
  NumericalBreakdown,
  InvalidK,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::SingularIsomorphism: return "SingularIsomorphism";
    case ErrorKind::SingularS: return "SingularS";
    case ErrorKind::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace choikit
