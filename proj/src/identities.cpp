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

#include "choikit/identities.hpp"

#include <algorithm>
#include <cmath>

#include "choikit/maps.hpp"

namespace choikit {

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

void IdentityReport::add(std::string name, double residual, double tolerance) {
  // NaN residuals fail.
  checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
}

double scalar_residual(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

LinearMapRep star_adjoint(const LinearMapRep& phi) {
  return compose(LinearMapRep::transpose(phi.dim_in()),
                 compose(adjoint(phi), LinearMapRep::transpose(phi.dim_out())));
}

IdentityReport table1_suite(const LinearMapRep& phi, Rng& rng) {
  const Index m = phi.dim_in(), n = phi.dim_out();
  const Isomorphism tm(LinearMapRep::transpose(m));
  const Isomorphism tn(LinearMapRep::transpose(n));
  IdentityReport report;

  const BipartiteOperator c_phi = choi(phi);
  const BipartiteOperator ct_phi = choi_sigma(phi, tm);
  report.add("(t x id)(C_phi) = C^t_phi",
             relative_residual(partial_transpose(c_phi, Slot::First).matrix(),
                               ct_phi.matrix()),
             kTolIdentity);

  const LinearMapRep star = star_adjoint(phi);
  const LinearMapRep star_general = adjoint_general(phi, tm, tn);
  report.add("t o phi* o t = phi^star",
             relative_residual(star.transfer(), star_general.transfer()),
             kTolIdentity);

  const LinearMapRep phi_adj = adjoint(phi);
  const BipartiteOperator c_adj = choi(phi_adj);
  report.add("C_{phi*} = flip(C_phi)",
             relative_residual(c_adj.matrix(), flip(c_phi).matrix()),
             kTolIdentity);

  const BipartiteOperator ct_star = choi_sigma(star_general, tn);
  report.add("C^t_{phi^star} = flip(C^t_phi)",
             relative_residual(ct_star.matrix(), flip(ct_phi).matrix()),
             kTolIdentity);

  report.add("(id x t)(C_{phi*}) = C^t_{phi^star}",
             relative_residual(partial_transpose(c_adj, Slot::Second).matrix(),
                               ct_star.matrix()),
             kTolIdentity);

  report.add("(C_{phi*})^T = C_{phi^star}",
             relative_residual(c_adj.matrix().transpose(),
                               choi(star_general).matrix()),
             kTolIdentity);

  // x in M_n, y in M_m; the t (x) t form pairs against the global transpose.
  const ComplexMatrix x = random_matrix(n, n, rng);
  const ComplexMatrix y = random_matrix(m, m, rng);
  const Complex lhs = standard_pair(c_adj.matrix(), kron(x.transpose(), y));
  const Complex rhs =
      standard_pair(ct_star.matrix(), kron(x, y).transpose());
  report.add("<C_{phi*}, x^T (x) y> = <C^t_{phi^star}, x (x) y>_{t x t}",
             scalar_residual(lhs, rhs), kTolIdentity);
  return report;
}

IdentityReport verify_prop51(const LinearMapRep& phi, const Isomorphism& sigma,
                             const Isomorphism& tau, Rng& rng) {
  const Index m = phi.dim_in(), n = phi.dim_out();
  if (sigma.dim() != m || tau.dim() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "verify_prop51: sigma/tau do not match the map");
  IdentityReport report;
  const ComplexMatrix x = random_matrix(m, m, rng);
  const ComplexMatrix y = random_matrix(n, n, rng);

  const Complex direct = form_pair(tau, choikit::apply(phi, x), y);

  // <A, B>_{sigma (x) tau} = <A, (sigma^{-1} (x) tau^{-1})(B)>.
  const BipartiteOperator c_sigma = choi_sigma(phi, sigma);
  const BipartiteOperator xy = BipartiteOperator::product(x, y);
  const Complex via_choi = standard_pair(
      c_sigma.matrix(),
      apply_tensor(sigma.inverse(), tau.inverse(), xy).matrix());
  report.add("<phi(x),y>_tau = <C^sigma_phi, x(x)y>_{sigma(x)tau}",
             scalar_residual(direct, via_choi), kTolIdentity);

  const LinearMapRep adj = adjoint_general(phi, sigma, tau);
  const Isomorphism sigma_t(sigma_transpose(sigma.map()));
  const BipartiteOperator c_adj = choi_sigma(adj, tau);
  const BipartiteOperator yx = BipartiteOperator::product(y, x);
  const Complex flipped = standard_pair(
      c_adj.matrix(),
      apply_tensor(tau.inverse(), sigma_t.inverse(), yx).matrix());
  report.add("<C^tau_{phi#}, y(x)x>_{tau(x)sigma^T} = <C^sigma_phi, x(x)y>_{sigma(x)tau}",
             scalar_residual(flipped, via_choi), kTolIdentity);

  const Complex adj_side = form_pair(sigma, x, choikit::apply(adj, y));
  report.add("<phi(x),y>_tau = <x, sigma o phi* o tau^-1 (y)>_sigma",
             scalar_residual(direct, adj_side), kTolIdentity);
  return report;
}

IdentityReport verify_prop52(const LinearMapRep& psi1, const LinearMapRep& psi2,
                             const LinearMapRep& phi, const Isomorphism& sigma1,
                             const Isomorphism& tau1) {
  if (phi.dim_in() != psi1.dim_in() || phi.dim_out() != psi2.dim_in() ||
      sigma1.dim() != psi1.dim_in() || tau1.dim() != psi1.dim_out())
    throw Error(ErrorKind::DimensionMismatch,
                "verify_prop52: incompatible dimensions");
  IdentityReport report;

  const LinearMapRep psi1_adj = adjoint_general(psi1, sigma1, tau1);
  const LinearMapRep big_phi = compose(psi2, compose(phi, psi1_adj));
  const BipartiteOperator lhs =
      apply_tensor(psi1, psi2, choi_sigma(phi, sigma1));
  const BipartiteOperator rhs = choi_sigma(big_phi, tau1);
  report.add("(psi1 x psi2)(C^sigma1_phi) = C^tau1_Phi",
             relative_residual(lhs.matrix(), rhs.matrix()), kTolTensorPush);

  const BipartiteOperator lhs0 = apply_tensor(psi1, psi2, choi(phi));
  const BipartiteOperator rhs0 =
      choi(compose(psi2, compose(phi, adjoint(psi1))));
  report.add("(psi1 x psi2)(C_phi) = C_{psi2 o phi o psi1*}",
             relative_residual(lhs0.matrix(), rhs0.matrix()), kTolTensorPush);
  return report;
}

std::vector<ComplexMatrix> weyl_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix e1(2, 2), e2(2, 2), e3(2, 2), e4(2, 2);
  e1 << r, 0, 0, r;
  e2 << r, 0, 0, -r;
  e3 << 0, r, r, 0;
  e4 << 0, -r, r, 0;
  return {e1, e2, e3, e4};
}

std::vector<ComplexMatrix> pauli_family() {
  auto w = weyl_basis();
  w[3] *= Complex(0.0, 1.0);
  return w;
}

std::vector<ComplexMatrix> matrix_unit_basis(Index m) {
  std::vector<ComplexMatrix> out;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) out.push_back(matrix_unit(m, i, j));
  return out;
}

std::vector<ComplexMatrix> transposed_matrix_unit_basis(Index m) {
  std::vector<ComplexMatrix> out;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) out.push_back(matrix_unit(m, j, i));
  return out;
}

}  // namespace choikit
