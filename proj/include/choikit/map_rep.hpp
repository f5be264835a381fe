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

#include <vector>

#include "choikit/linalg.hpp"

namespace choikit {

/**
 * A linear map M_m -> M_n stored as its n^2 x m^2 transfer matrix, so that
 * vec(phi(x)) = transfer * vec(x) with the row-major vec().
 */
class LinearMapRep {
 public:
  LinearMapRep(Index dim_in, Index dim_out, ComplexMatrix transfer);

  static LinearMapRep identity(Index m);
  static LinearMapRep transpose(Index m);

  /// x -> s* x s for an m x n matrix s, a map M_m -> M_n.
  static LinearMapRep ad(const ComplexMatrix& s);

  /// x -> sum_l V_l* x V_l; every V_l is m x n.
  static LinearMapRep from_kraus(const std::vector<ComplexMatrix>& ops);

  /// x -> k tr(x) I - x on M_m; k-positive, not (k+1)-positive.
  static LinearMapRep reduction(Index m, double k);

  /// x -> tr(x) I_n / m.
  static LinearMapRep depolarizing(Index m, Index n);

  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  const ComplexMatrix& transfer() const { return transfer_; }

 private:
  Index dim_in_;
  Index dim_out_;
  ComplexMatrix transfer_;
};

/// A square LinearMapRep with invertible transfer; the inverse is cached.
class Isomorphism {
 public:
  /// Throws SingularIsomorphism unless rank(transfer, 1e-10) == m^2.
  explicit Isomorphism(LinearMapRep map);

  const LinearMapRep& map() const { return map_; }
  Index dim() const { return map_.dim_in(); }
  const ComplexMatrix& transfer() const { return map_.transfer(); }
  LinearMapRep inverse() const { return LinearMapRep(dim(), dim(), inverse_); }

  operator const LinearMapRep&() const { return map_; }

 private:
  LinearMapRep map_;
  ComplexMatrix inverse_;
};

}  // namespace choikit
