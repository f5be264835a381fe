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

#include "choikit/sampling.hpp"

#include <cmath>

#include "choikit/maps.hpp"

namespace choikit {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng) {
  ComplexMatrix x(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) x(i, j) = complex_normal(rng);
  return x;
}

ComplexVector random_vector(Index d, Rng& rng) {
  return random_matrix(d, 1, rng).col(0);
}

ComplexMatrix random_hermitian(Index d, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_psd(Index d, Index r, Rng& rng) {
  const ComplexMatrix g = random_matrix(d, r, rng);
  return g * g.adjoint();
}

LinearMapRep random_map(Index m, Index n, Rng& rng) {
  return LinearMapRep(m, n, random_matrix(n * n, m * m, rng));
}

ComplexMatrix random_nonsingular(Index m, Rng& rng) {
  for (;;) {
    ComplexMatrix s = random_matrix(m, m, rng);
    if (rank(s, 1e-10) == m) return s;
  }
}

Isomorphism random_isomorphism(Index m, Rng& rng) {
  for (;;) {
    LinearMapRep t = random_map(m, m, rng);
    if (rank(t.transfer(), 1e-10) == m * m) return Isomorphism(std::move(t));
  }
}

BasisFamily random_basis(Index d, Rng& rng) {
  for (;;) {
    ComplexMatrix e = random_matrix(d, d, rng);
    if (rank(e, 1e-10) == d) return BasisFamily(std::move(e));
  }
}

BilinearForm random_form(Index d, Rng& rng) {
  for (;;) {
    ComplexMatrix g = random_matrix(d, d, rng);
    if (rank(g, 1e-10) == d) return BilinearForm(std::move(g));
  }
}

BilinearForm random_symmetric_form(Index d, Rng& rng) {
  for (;;) {
    const ComplexMatrix g = random_matrix(d, d, rng);
    ComplexMatrix gram = g.transpose() * g;
    gram.diagonal().array() += complex_normal(rng);
    gram = 0.5 * (gram + gram.transpose()).eval();
    if (rank(gram, 1e-10) == d) return BilinearForm(std::move(gram));
  }
}

Isomorphism random_non_ad_isomorphism(Index m, Rng& rng) {
  for (;;) {
    Isomorphism sigma = random_isomorphism(m, rng);
    if (rank(choi(sigma.map()).matrix(), 1e-8) > 1) return sigma;
  }
}

const char* to_string(SampleCone cone) {
  switch (cone) {
    case SampleCone::CP: return "cp";
    case SampleCone::SPk: return "spk";
    case SampleCone::CoCP: return "cocp";
    case SampleCone::Positive: return "positive";
    case SampleCone::KPositive: return "kpositive";
  }
  return "unknown";
}

CertifiedMap random_cp(Index m, Index n, Rng& rng, Index count) {
  if (count <= 0) count = m * n;
  std::vector<ComplexMatrix> ops;
  for (Index l = 0; l < count; ++l) ops.push_back(random_matrix(m, n, rng));
  LinearMapRep map = LinearMapRep::from_kraus(ops);
  return {std::move(map), SampleCone::CP, std::min(m, n), std::move(ops),
          "kraus: x -> sum V* x V with " + std::to_string(count) + " operators"};
}

CertifiedMap random_spk(Index m, Index n, Index k, Rng& rng) {
  if (k < 1 || k > std::min(m, n))
    throw Error(ErrorKind::InvalidK, "random_spk: k out of range");
  std::vector<ComplexMatrix> ops;
  for (Index l = 0; l < m * n; ++l)
    ops.push_back(random_matrix(m, k, rng) * random_matrix(k, n, rng));
  LinearMapRep map = LinearMapRep::from_kraus(ops);
  return {std::move(map), SampleCone::SPk, k, std::move(ops),
          "kraus operators of rank <= " + std::to_string(k)};
}

CertifiedMap random_cocp(Index m, Index n, Rng& rng) {
  CertifiedMap cp = random_cp(m, n, rng);
  LinearMapRep map = compose(cp.map, LinearMapRep::transpose(m));
  return {std::move(map), SampleCone::CoCP, 1, std::move(cp.kraus),
          "cp o transpose"};
}

CertifiedMap random_positive(Index m, Index n, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lambda = unit(rng);
  CertifiedMap cp = random_cp(m, n, rng, 1);
  CertifiedMap co = random_cocp(m, n, rng);
  ComplexMatrix t = lambda * cp.map.transfer() +
                    (1.0 - lambda) * co.map.transfer();
  return {LinearMapRep(m, n, std::move(t)), SampleCone::Positive, 1, {},
          "convex mixture of cp and cocp, lambda=" + std::to_string(lambda)};
}

CertifiedMap random_kpositive(Index m, Index n, Index k, Rng& rng) {
  if (k < 1 || k > std::min(m, n))
    throw Error(ErrorKind::InvalidK, "random_kpositive: k out of range");
  const Index p = std::max(m, n);
  const LinearMapRep in = LinearMapRep::ad(random_matrix(m, p, rng));
  const LinearMapRep out = LinearMapRep::ad(random_matrix(p, n, rng));
  const LinearMapRep core =
      compose(out, compose(LinearMapRep::reduction(p, static_cast<double>(k)), in));
  std::uniform_real_distribution<double> unit(0.0, 0.25);
  CertifiedMap cp = random_cp(m, n, rng, 1);
  ComplexMatrix t = core.transfer() + unit(rng) * cp.map.transfer();
  return {LinearMapRep(m, n, std::move(t)), SampleCone::KPositive, k, {},
          "Ad o R_k o Ad plus cp, R_k(x) = k tr(x) I - x"};
}

}  // namespace choikit
