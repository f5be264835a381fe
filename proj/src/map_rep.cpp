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

#include "choikit/map_rep.hpp"

#include <string>

namespace choikit {

LinearMapRep::LinearMapRep(Index dim_in, Index dim_out, ComplexMatrix transfer)
    : dim_in_(dim_in), dim_out_(dim_out), transfer_(std::move(transfer)) {
  if (dim_in <= 0 || dim_out <= 0)
    throw Error(ErrorKind::InvalidArgument,
                "LinearMapRep: dimensions must be positive");
  if (transfer_.rows() != dim_out * dim_out ||
      transfer_.cols() != dim_in * dim_in)
    throw Error(ErrorKind::DimensionMismatch,
                "LinearMapRep: transfer is " +
                    std::to_string(transfer_.rows()) + "x" +
                    std::to_string(transfer_.cols()) + ", expected " +
                    std::to_string(dim_out * dim_out) + "x" +
                    std::to_string(dim_in * dim_in));
  require_finite(transfer_, "LinearMapRep");
}

LinearMapRep LinearMapRep::identity(Index m) {
  return LinearMapRep(m, m, ComplexMatrix::Identity(m * m, m * m));
}

LinearMapRep LinearMapRep::transpose(Index m) {
  // vec(x^T) is vec(x) with the two index halves exchanged.
  return LinearMapRep(m, m, swap_operator(m));
}

LinearMapRep LinearMapRep::ad(const ComplexMatrix& s) {
  // vec(A X B) = (A kron B^T) vec(X) for row-major vec.
  return LinearMapRep(s.rows(), s.cols(), kron(s.adjoint(), s.transpose()));
}

LinearMapRep LinearMapRep::from_kraus(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty())
    throw Error(ErrorKind::InvalidArgument, "from_kraus: no operators");
  const Index m = ops.front().rows();
  const Index n = ops.front().cols();
  ComplexMatrix t = ComplexMatrix::Zero(n * n, m * m);
  for (const auto& v : ops) {
    if (v.rows() != m || v.cols() != n)
      throw Error(ErrorKind::DimensionMismatch,
                  "from_kraus: operators must share one shape");
    t += kron(v.adjoint(), v.transpose());
  }
  return LinearMapRep(m, n, std::move(t));
}

LinearMapRep LinearMapRep::reduction(Index m, double k) {
  const ComplexVector id = vec(ComplexMatrix::Identity(m, m));
  ComplexMatrix t = k * id * id.transpose();
  t -= ComplexMatrix::Identity(m * m, m * m);
  return LinearMapRep(m, m, std::move(t));
}

LinearMapRep LinearMapRep::depolarizing(Index m, Index n) {
  const ComplexVector in = vec(ComplexMatrix::Identity(m, m));
  const ComplexVector out = vec(ComplexMatrix::Identity(n, n));
  return LinearMapRep(m, n, out * in.transpose() / static_cast<double>(m));
}

Isomorphism::Isomorphism(LinearMapRep map) : map_(std::move(map)) {
  const Index m = map_.dim_in();
  if (map_.dim_out() != m)
    throw Error(ErrorKind::DimensionMismatch,
                "Isomorphism: domain M_" + std::to_string(m) +
                    " differs from codomain M_" +
                    std::to_string(map_.dim_out()));
  if (rank(map_.transfer(), 1e-10) != m * m)
    throw Error(ErrorKind::SingularIsomorphism,
                "Isomorphism: transfer matrix is singular");
  inverse_ = map_.transfer().fullPivLu().inverse();
}

}  // namespace choikit
