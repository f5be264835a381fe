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
 * @file maps.hpp
 * Operations on linear maps between matrix algebras and their Choi-type
 * transforms.
 *
 * With transfer T of phi: M_m -> M_n the Choi matrix is a reshuffle of T:
 *   C_phi(i*n + a, j*n + b) = phi(e_ij)(a, b) = T(a*n + b, i*m + j).
 */

#pragma once

#include "choikit/forms.hpp"
#include "choikit/linalg.hpp"
#include "choikit/map_rep.hpp"

namespace choikit {

ComplexMatrix apply(const LinearMapRep& phi, const ComplexMatrix& x);

/// psi o phi.
LinearMapRep compose(const LinearMapRep& psi, const LinearMapRep& phi);

/// psi1 (x) psi2 acting on M_{m1 m2} with the composite index i*m2 + k.
LinearMapRep tensor(const LinearMapRep& psi1, const LinearMapRep& psi2);

/// (psi1 (x) psi2)(x), keeping factor dims.
BipartiteOperator apply_tensor(const LinearMapRep& psi1,
                               const LinearMapRep& psi2,
                               const BipartiteOperator& x);

/// sum_ij e_ij (x) phi(e_ij).
BipartiteOperator choi(const LinearMapRep& phi);

/// C^sigma_phi = C_{phi o sigma}.
BipartiteOperator choi_sigma(const LinearMapRep& phi, const Isomorphism& sigma);

/// C^sigma_phi computed as (id (x) phi)(C_sigma).
BipartiteOperator choi_sigma_via_tensor(const LinearMapRep& phi,
                                        const Isomorphism& sigma);

/// sum_i e_i (x) phi(f_i) for bases of M_m given in vec() coordinates.
BipartiteOperator gamma(const LinearMapRep& phi, const BasisFamily& e,
                        const BasisFamily& f);

/// Vector-space version: sum_i e_i (x) (transfer * f_i) in V (x) W, with
/// transfer of shape dim(W) x dim(V).
ComplexVector gamma_vector(const ComplexMatrix& transfer, const BasisFamily& e,
                           const BasisFamily& f);

/// Inverse of choi(): the transfer whose Choi matrix is c.
LinearMapRep transfer_from_choi(const BipartiteOperator& c);

/**
 * The unique phi with gamma(phi, e, dual_basis(form, e)) == c for any basis
 * e, i.e. (D_form (x) id)(c). Equals transfer_from_choi(c) * gram.
 */
LinearMapRep inverse_choi(const BipartiteOperator& c, const BilinearForm& form);

/// Adjoint for the standard forms tr(x y^T): transposed transfer.
LinearMapRep adjoint(const LinearMapRep& phi);

/// sigma o phi* o tau^{-1}: the adjoint for the forms induced by sigma on
/// the domain and tau on the codomain.
LinearMapRep adjoint_general(const LinearMapRep& phi, const Isomorphism& sigma,
                             const Isomorphism& tau);

/// Standard bilinear form sum_pq a_pq b_pq of two equally shaped matrices.
Complex standard_pair(const ComplexMatrix& a, const ComplexMatrix& b);

/// <C_phi, C_psi> under the standard form.
Complex pairing(const LinearMapRep& phi, const LinearMapRep& psi);

/// <x, y>_sigma = <x, sigma^{-1}(y)> on matrices.
Complex form_pair(const Isomorphism& sigma, const ComplexMatrix& x,
                  const ComplexMatrix& y);

}  // namespace choikit
