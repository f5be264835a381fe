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

#include "choikit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace choikit {

void require_finite(const ComplexMatrix& x, const char* what) {
  if (x.rows() <= 0 || x.cols() <= 0)
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": dimensions must be positive");
  if (!x.allFinite())
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": entries must be finite");
}

BipartiteOperator::BipartiteOperator(Index dim_a, Index dim_b,
                                     ComplexMatrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  if (dim_a <= 0 || dim_b <= 0)
    throw Error(ErrorKind::InvalidArgument,
                "BipartiteOperator: factor dimensions must be positive");
  if (matrix_.rows() != dim_a * dim_b || matrix_.cols() != dim_a * dim_b)
    throw Error(ErrorKind::DimensionMismatch,
                "BipartiteOperator: matrix is " +
                    std::to_string(matrix_.rows()) + "x" +
                    std::to_string(matrix_.cols()) + " but dims are " +
                    std::to_string(dim_a) + "*" + std::to_string(dim_b));
}

BipartiteOperator BipartiteOperator::product(const ComplexMatrix& a,
                                             const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "BipartiteOperator::product: factors must be square");
  return BipartiteOperator(a.rows(), b.rows(), kron(a, b));
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw Error(ErrorKind::DimensionMismatch, "hermiticity_defect: not square");
  return max_abs(h - h.adjoint()) / std::max(1.0, h.norm());
}

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  if (hermiticity_defect(h) > kTolHermitian)
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eig: max|h - h*| exceeds tolerance");
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::NumericalBreakdown, "hermitian_eig: no convergence");
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

bool is_psd(const ComplexMatrix& h, double tol) {
  const HermitianEig eig = hermitian_eig(h);
  const double lo = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const double scale =
      std::max({1.0, std::abs(lo), std::abs(eig.eigenvalues(0))});
  return lo >= -tol * scale;
}

BipartiteOperator partial_transpose(const BipartiteOperator& x, Slot slot) {
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  ComplexMatrix out(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index a = 0; a < n; ++a)
      for (Index j = 0; j < m; ++j)
        for (Index b = 0; b < n; ++b) {
          if (slot == Slot::First)
            out(j * n + a, i * n + b) = x(i, a, j, b);
          else
            out(i * n + b, j * n + a) = x(i, a, j, b);
        }
  return BipartiteOperator(m, n, std::move(out));
}

BipartiteOperator flip(const BipartiteOperator& x) {
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  ComplexMatrix out(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index a = 0; a < n; ++a)
      for (Index j = 0; j < m; ++j)
        for (Index b = 0; b < n; ++b)
          out(a * m + i, b * m + j) = x(i, a, j, b);
  return BipartiteOperator(n, m, std::move(out));
}

BipartiteOperator transpose(const BipartiteOperator& x) {
  return BipartiteOperator(x.dim_a(), x.dim_b(), x.matrix().transpose());
}

Index rank(const ComplexMatrix& x, double tol) {
  if (x.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  const RealVector& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Index schmidt_rank(const ComplexVector& xi, Index m, Index n, double tol) {
  return rank(unvec(xi, m, n), tol);
}

ComplexMatrix matrix_unit(Index m, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(m, m);
  e(i, j) = 1.0;
  return e;
}

ComplexMatrix swap_operator(Index m) {
  ComplexMatrix s = ComplexMatrix::Zero(m * m, m * m);
  for (Index i = 0; i < m; ++i)
    for (Index a = 0; a < m; ++a) s(a * m + i, i * m + a) = 1.0;
  return s;
}

}  // namespace choikit
