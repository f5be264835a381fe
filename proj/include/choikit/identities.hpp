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
 * @file identities.hpp
 * Numerical checks of the identities relating Choi transforms, adjoints and
 * tensor products under the two forms tr(x y^T) and tr(x y). Each check
 * computes both sides along independent paths and records the relative
 * residual.
 */

#pragma once

#include <string>
#include <vector>

#include "choikit/forms.hpp"
#include "choikit/map_rep.hpp"
#include "choikit/sampling.hpp"

namespace choikit {

inline constexpr double kTolIdentity = 1e-10;
inline constexpr double kTolTensorPush = 1e-9;

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  void add(std::string name, double residual, double tolerance);
};

/// Relative residual of two scalars: |a - b| / max(1, |a|, |b|).
double scalar_residual(Complex a, Complex b);

/// phi^* for the trace form: t o phi* o t.
LinearMapRep star_adjoint(const LinearMapRep& phi);

/**
 * The seven comparison rows between the standard and the trace form:
 *   (t (x) id)(C_phi) = C^t_phi
 *   t o phi* o t = phi^{*_{t,t}}
 *   C_{phi*} = flip(C_phi)
 *   C^t_{phi^star} = flip(C^t_phi)
 *   (id (x) t)(C_{phi*}) = C^t_{phi^star}
 *   (C_{phi*})^T = C_{phi^star}
 *   <C_{phi*}, x^T (x) y> = <C^t_{phi^star}, x (x) y>_{t (x) t}
 * x in M_n and y in M_m are drawn from rng.
 */
IdentityReport table1_suite(const LinearMapRep& phi, Rng& rng);

/**
 * For sigma on the domain and tau on the codomain of phi:
 *   <phi(x), y>_tau = <C^sigma_phi, x (x) y>_{sigma (x) tau}
 *   <C^tau_{phi^#}, y (x) x>_{tau (x) sigma^T} = <C^sigma_phi, x (x) y>_{sigma (x) tau}
 *   <phi(x), y>_tau = <x, phi^#(y)>_sigma   with phi^# = adjoint_general()
 */
IdentityReport verify_prop51(const LinearMapRep& phi, const Isomorphism& sigma,
                             const Isomorphism& tau, Rng& rng);

/**
 * With Phi = psi2 o phi o psi1^{#} (adjoint for sigma1, tau1):
 *   (psi1 (x) psi2)(C^{sigma1}_phi) = C^{tau1}_Phi
 * and the untwisted special case (psi1 (x) psi2)(C_phi) = C_{psi2 o phi o psi1*}.
 */
IdentityReport verify_prop52(const LinearMapRep& psi1, const LinearMapRep& psi2,
                             const LinearMapRep& phi, const Isomorphism& sigma1,
                             const Isomorphism& tau1);

/// Normalized Weyl basis E_1..E_4 of M_2.
std::vector<ComplexMatrix> weyl_basis();

/// E_1, E_2, E_3, i E_4: orthonormal for tr(x y).
std::vector<ComplexMatrix> pauli_family();

/// Matrix units e_ij in row-major order.
std::vector<ComplexMatrix> matrix_unit_basis(Index m);

/// Transposed matrix units e_ji in the order of matrix_unit_basis().
std::vector<ComplexMatrix> transposed_matrix_unit_basis(Index m);

}  // namespace choikit
