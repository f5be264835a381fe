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
 * @file linalg.hpp
 * Dense linear algebra conventions shared by every other module.
 *
 * Conventions:
 *  - vec() flattens row-major, so vec(e_ij) is the unit vector at i*cols+j
 *    and the standard form sum_ij x_ij y_ij is vec(x).transpose()*vec(y)
 *    with no conjugation.
 *  - An operator on M_m (x) M_n is an (m*n)x(m*n) matrix whose composite
 *    index is i*n + a, i for the first factor and a for the second. kron()
 *    follows the same ordering.
 *
 * The structural helpers (vec, unvec, kron, partial_transpose, flip) are
 * templated on the Eigen expression so they work for real and complex
 * scalars alike.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>

#include "choikit/error.hpp"

namespace choikit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative tolerances used throughout.
inline constexpr double kTolHermitian = 1e-10;
inline constexpr double kTolEig = 1e-9;
inline constexpr double kTolPsd = 1e-9;

enum class Slot { First, Second };

/// Row-major flattening.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> vec(
    const Eigen::MatrixBase<Derived>& x) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> v(x.rows() *
                                                               x.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

/// Inverse of vec() for a rows x cols target.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> unvec(
    const Eigen::MatrixBase<Derived>& v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch,
                "unvec: length " + std::to_string(v.size()) + " != " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> x(
      rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) x(i, j) = v(i * cols + j);
  return x;
}

/// Square unvec; the length must be a perfect square.
template <typename Derived>
auto unvec_square(const Eigen::MatrixBase<Derived>& v) {
  Index m = 0;
  while ((m + 1) * (m + 1) <= v.size()) ++m;
  if (m * m != v.size())
    throw Error(ErrorKind::DimensionMismatch,
                "unvec_square: length " + std::to_string(v.size()) +
                    " is not a perfect square");
  return unvec(v, m, m);
}

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Largest entry modulus.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

/// Relative residual ||a - b||_F / max(1, ||a||_F, ||b||_F).
template <typename DerivedA, typename DerivedB>
double relative_residual(const Eigen::MatrixBase<DerivedA>& a,
                         const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "relative_residual: shapes differ");
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

/// Element of M_m (x) M_n with its factor dimensions.
class BipartiteOperator {
 public:
  BipartiteOperator(Index dim_a, Index dim_b, ComplexMatrix matrix);

  static BipartiteOperator product(const ComplexMatrix& a,
                                   const ComplexMatrix& b);

  Index dim_a() const { return dim_a_; }
  Index dim_b() const { return dim_b_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Entry (i*dimB + a, j*dimB + b).
  Complex operator()(Index i, Index a, Index j, Index b) const {
    return matrix_(i * dim_b_ + a, j * dim_b_ + b);
  }

 private:
  Index dim_a_;
  Index dim_b_;
  ComplexMatrix matrix_;
};

void require_finite(const ComplexMatrix& x, const char* what);

struct HermitianEig {
  RealVector eigenvalues;     ///< descending
  ComplexMatrix eigenvectors; ///< columns, matching eigenvalues
};

/// max|h - h*| relative to max(1, ||h||_F).
double hermiticity_defect(const ComplexMatrix& h);

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws NotHermitian when hermiticity_defect(h) > kTolHermitian.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// True iff the smallest eigenvalue is >= -tol * max(1, ||h||_2).
bool is_psd(const ComplexMatrix& h, double tol = kTolPsd);

BipartiteOperator partial_transpose(const BipartiteOperator& x, Slot slot);

/// Exchanges the tensor factors; output dims are (dimB, dimA).
BipartiteOperator flip(const BipartiteOperator& x);

/// Global transpose, keeping the factor dims.
BipartiteOperator transpose(const BipartiteOperator& x);

/// Number of singular values above tol * (largest singular value).
Index rank(const ComplexMatrix& x, double tol);

/// Schmidt rank of a vector in C^m (x) C^n (index i*n + a).
Index schmidt_rank(const ComplexVector& xi, Index m, Index n, double tol);

/// Matrix unit e_ij in M_m (zero-based).
ComplexMatrix matrix_unit(Index m, Index i, Index j);

/// The flip operator on C^m (x) C^m.
ComplexMatrix swap_operator(Index m);

}  // namespace choikit
