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
 * @file forms.hpp
 * Non-degenerate bilinear forms on C^d, stored by Gram matrix:
 * pair(x, y) = x^T * gram * y, linear in both slots.
 *
 * For matrix algebras, coordinates are row-major vec() of M_m (d = m^2).
 * A form determined by bases {e_i}, {f_i} through pair(e_i, f_j) = delta_ij
 * has gram = (F E^T)^{-1} where E, F hold the coordinates as columns.
 */

#pragma once

#include <vector>

#include "choikit/linalg.hpp"
#include "choikit/map_rep.hpp"

namespace choikit {

/// Self-pairing magnitude (relative to max(1, max|gram|)) below which
/// orthonormalize_symmetric() gives up.
inline constexpr double kBreakdownTol = 1e-10;

class BilinearForm {
 public:
  /// Throws SingularForm unless rank(gram, 1e-10) == d.
  explicit BilinearForm(ComplexMatrix gram);

  /// sum_i x_i y_i on C^d; tr(x y^T) on M_m when d = m^2.
  static BilinearForm standard(Index d);

  /// tr(x y) on M_m.
  static BilinearForm trace_form(Index m);

  /// <x, y>_sigma = <x, sigma^{-1}(y)>, i.e. gram = [sigma]^{-1}.
  static BilinearForm from_isomorphism(const Isomorphism& sigma);

  Index dim() const { return gram_.rows(); }
  const ComplexMatrix& gram() const { return gram_; }

 private:
  ComplexMatrix gram_;
};

/// d coordinate vectors in C^d, stored as the columns of an invertible matrix.
class BasisFamily {
 public:
  /// Throws SingularBasis unless the columns form a basis.
  explicit BasisFamily(ComplexMatrix columns);

  /// Basis of M_m given as matrices (each vec()'d into a column).
  static BasisFamily from_matrices(const std::vector<ComplexMatrix>& elements);

  static BasisFamily standard(Index d);

  Index dim() const { return coords_.rows(); }
  const ComplexMatrix& coordinates() const { return coords_; }
  ComplexVector element(Index i) const { return coords_.col(i); }

  /// Element i as a square matrix (requires d to be a perfect square).
  ComplexMatrix element_matrix(Index i) const;

 private:
  ComplexMatrix coords_;
};

Complex pair(const BilinearForm& form, const ComplexVector& x,
             const ComplexVector& y);

/// Matrix arguments are vec()'d first.
Complex pair(const BilinearForm& form, const ComplexMatrix& x,
             const ComplexMatrix& y);

/// The form with pair(e_i, f_j) = delta_ij.
BilinearForm form_from_basis_pair(const BasisFamily& e, const BasisFamily& f);

/// The unique f with pair(e_i, f_j) = delta_ij.
BasisFamily dual_basis(const BilinearForm& form, const BasisFamily& e);

bool is_symmetric(const BilinearForm& form);

/**
 * Basis with pair(e_i, e_j) = delta_ij for a symmetric non-degenerate form.
 *
 * Inductive construction: pick a vector of the current complement with
 * nonzero self-pairing (complement basis vectors and their pairwise sums are
 * the candidates, best |pair(v,v)|/|v|^2 wins), scale it by the principal
 * square root of its self-pairing, then pass to the pair-orthogonal
 * complement. The complement is carried as a Euclidean-orthonormal basis.
 *
 * Throws NotSymmetric, or NumericalBreakdown when every candidate
 * self-pairing falls below kBreakdownTol.
 */
BasisFamily orthonormalize_symmetric(const BilinearForm& form);

/// ||gram_a - gram_b||_F <= tol * max(1, ||gram_a||_F).
bool forms_equal(const BilinearForm& a, const BilinearForm& b, double tol);

/// The map with <sigma^T(x), y> = <x, sigma(y)>: transposed transfer.
LinearMapRep sigma_transpose(const LinearMapRep& sigma);

}  // namespace choikit
