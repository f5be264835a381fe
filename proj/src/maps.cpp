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

#include "choikit/maps.hpp"

#include <string>
#include <vector>

namespace choikit {

namespace {

std::string dims(Index a, Index b) {
  return "M_" + std::to_string(a) + " -> M_" + std::to_string(b);
}

/// For M_{p q}: position of the composite vec index inside vec(a) (x) vec(b).
std::vector<Index> composite_to_kron(Index p, Index q) {
  const Index pq = p * q;
  std::vector<Index> perm(static_cast<std::size_t>(pq * pq));
  for (Index i = 0; i < p; ++i)
    for (Index k = 0; k < q; ++k)
      for (Index j = 0; j < p; ++j)
        for (Index l = 0; l < q; ++l) {
          const Index composite = (i * q + k) * pq + (j * q + l);
          const Index split = (i * p + j) * q * q + (k * q + l);
          perm[static_cast<std::size_t>(composite)] = split;
        }
  return perm;
}

}  // namespace

ComplexMatrix apply(const LinearMapRep& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.dim_in() || x.cols() != phi.dim_in())
    throw Error(ErrorKind::DimensionMismatch,
                "apply: input is " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + ", map is " +
                    dims(phi.dim_in(), phi.dim_out()));
  return unvec(phi.transfer() * vec(x), phi.dim_out(), phi.dim_out());
}

LinearMapRep compose(const LinearMapRep& psi, const LinearMapRep& phi) {
  if (psi.dim_in() != phi.dim_out())
    throw Error(ErrorKind::DimensionMismatch,
                "compose: " + dims(psi.dim_in(), psi.dim_out()) + " after " +
                    dims(phi.dim_in(), phi.dim_out()));
  return LinearMapRep(phi.dim_in(), psi.dim_out(),
                      psi.transfer() * phi.transfer());
}

LinearMapRep tensor(const LinearMapRep& psi1, const LinearMapRep& psi2) {
  const Index m1 = psi1.dim_in(), m2 = psi2.dim_in();
  const Index n1 = psi1.dim_out(), n2 = psi2.dim_out();
  const ComplexMatrix split = kron(psi1.transfer(), psi2.transfer());
  const auto in = composite_to_kron(m1, m2);
  const auto out = composite_to_kron(n1, n2);
  ComplexMatrix t(split.rows(), split.cols());
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < in.size(); ++c)
      t(static_cast<Index>(r), static_cast<Index>(c)) = split(out[r], in[c]);
  return LinearMapRep(m1 * m2, n1 * n2, std::move(t));
}

BipartiteOperator apply_tensor(const LinearMapRep& psi1,
                               const LinearMapRep& psi2,
                               const BipartiteOperator& x) {
  if (x.dim_a() != psi1.dim_in() || x.dim_b() != psi2.dim_in())
    throw Error(ErrorKind::DimensionMismatch,
                "apply_tensor: operator on M_" + std::to_string(x.dim_a()) +
                    " (x) M_" + std::to_string(x.dim_b()) + ", maps from M_" +
                    std::to_string(psi1.dim_in()) + " (x) M_" +
                    std::to_string(psi2.dim_in()));
  return BipartiteOperator(psi1.dim_out(), psi2.dim_out(),
                           choikit::apply(tensor(psi1, psi2), x.matrix()));
}

BipartiteOperator choi(const LinearMapRep& phi) {
  const Index m = phi.dim_in(), n = phi.dim_out();
  const ComplexMatrix& t = phi.transfer();
  ComplexMatrix c(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          c(i * n + a, j * n + b) = t(a * n + b, i * m + j);
  return BipartiteOperator(m, n, std::move(c));
}

LinearMapRep transfer_from_choi(const BipartiteOperator& c) {
  const Index m = c.dim_a(), n = c.dim_b();
  ComplexMatrix t(n * n, m * m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          t(a * n + b, i * m + j) = c(i, a, j, b);
  return LinearMapRep(m, n, std::move(t));
}

BipartiteOperator choi_sigma(const LinearMapRep& phi, const Isomorphism& sigma) {
  if (sigma.dim() != phi.dim_in())
    throw Error(ErrorKind::DimensionMismatch,
                "choi_sigma: sigma on M_" + std::to_string(sigma.dim()) +
                    ", map is " + dims(phi.dim_in(), phi.dim_out()));
  return choi(compose(phi, sigma.map()));
}

BipartiteOperator choi_sigma_via_tensor(const LinearMapRep& phi,
                                        const Isomorphism& sigma) {
  if (sigma.dim() != phi.dim_in())
    throw Error(ErrorKind::DimensionMismatch,
                "choi_sigma_via_tensor: sigma on M_" +
                    std::to_string(sigma.dim()) + ", map is " +
                    dims(phi.dim_in(), phi.dim_out()));
  return apply_tensor(LinearMapRep::identity(sigma.dim()), phi,
                      choi(sigma.map()));
}

BipartiteOperator gamma(const LinearMapRep& phi, const BasisFamily& e,
                        const BasisFamily& f) {
  const Index m = phi.dim_in(), n = phi.dim_out();
  if (e.dim() != m * m || f.dim() != m * m)
    throw Error(ErrorKind::DimensionMismatch,
                "gamma: bases must live in M_" + std::to_string(m));
  ComplexMatrix c = ComplexMatrix::Zero(m * n, m * n);
  for (Index i = 0; i < e.dim(); ++i)
    c += kron(e.element_matrix(i), choikit::apply(phi, f.element_matrix(i)));
  return BipartiteOperator(m, n, std::move(c));
}

ComplexVector gamma_vector(const ComplexMatrix& transfer, const BasisFamily& e,
                           const BasisFamily& f) {
  if (e.dim() != f.dim() || transfer.cols() != e.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "gamma_vector: bases and map disagree on dim(V)");
  ComplexVector out = ComplexVector::Zero(e.dim() * transfer.rows());
  for (Index i = 0; i < e.dim(); ++i)
    out += kron(e.coordinates().col(i), transfer * f.coordinates().col(i));
  return out;
}

LinearMapRep inverse_choi(const BipartiteOperator& c, const BilinearForm& form) {
  const Index m = c.dim_a();
  if (form.dim() != m * m)
    throw Error(ErrorKind::DimensionMismatch,
                "inverse_choi: form on C^" + std::to_string(form.dim()) +
                    ", operator first factor M_" + std::to_string(m));
  // phi(y) = sum_ij <e_ij, y> C_ij where C_ij is the (i,j) block of c.
  const LinearMapRep blocks = transfer_from_choi(c);
  return LinearMapRep(m, c.dim_b(), blocks.transfer() * form.gram());
}

LinearMapRep adjoint(const LinearMapRep& phi) {
  return LinearMapRep(phi.dim_out(), phi.dim_in(), phi.transfer().transpose());
}

LinearMapRep adjoint_general(const LinearMapRep& phi, const Isomorphism& sigma,
                             const Isomorphism& tau) {
  if (sigma.dim() != phi.dim_in() || tau.dim() != phi.dim_out())
    throw Error(ErrorKind::DimensionMismatch,
                "adjoint_general: sigma on M_" + std::to_string(sigma.dim()) +
                    ", tau on M_" + std::to_string(tau.dim()) + ", map is " +
                    dims(phi.dim_in(), phi.dim_out()));
  return compose(sigma.map(), compose(adjoint(phi), tau.inverse()));
}

Complex standard_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "standard_pair: shapes differ");
  return a.cwiseProduct(b).sum();
}

Complex pairing(const LinearMapRep& phi, const LinearMapRep& psi) {
  if (phi.dim_in() != psi.dim_in() || phi.dim_out() != psi.dim_out())
    throw Error(ErrorKind::DimensionMismatch,
                "pairing: " + dims(phi.dim_in(), phi.dim_out()) + " vs " +
                    dims(psi.dim_in(), psi.dim_out()));
  return standard_pair(choi(phi).matrix(), choi(psi).matrix());
}

Complex form_pair(const Isomorphism& sigma, const ComplexMatrix& x,
                  const ComplexMatrix& y) {
  return standard_pair(x, choikit::apply(sigma.inverse(), y));
}

}  // namespace choikit
