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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "choikit/cones.hpp"
#include "choikit/maps.hpp"
#include "choikit/sampling.hpp"
#include "oracles.hpp"

using namespace choikit;

namespace {

ComplexVector column(const ConeVerdict& v) { return v.witness->col(0); }

void check_decomposition(const SchmidtBounds& b, const BipartiteOperator& c) {
  const ComplexMatrix& v = b.decomposition;
  CHECK((v * v.adjoint() - c.matrix()).norm() <= 1e-7 * c.matrix().norm());
  for (Index p = 0; p < v.cols(); ++p)
    if (v.col(p).norm() > 1e-12)
      CHECK(oracle::schmidt_rank(v.col(p), int(c.dim_a()), int(c.dim_b())) <=
            b.decomposition_rank);
}

}  // namespace

TEST_CASE("complete positivity") {
  const ConeVerdict id = is_cp(LinearMapRep::identity(2));
  CHECK(id.status == ConeStatus::Member);
  const ComplexMatrix& cert = *id.certificate;
  CHECK(oracle::rel(cert * cert.adjoint(), choi(LinearMapRep::identity(2)).matrix()) < 1e-12);

  const ConeVerdict t = is_cp(LinearMapRep::transpose(2));
  CHECK(t.status == ConeStatus::NonMember);
  const ComplexVector w = column(t);
  CHECK(oracle::expectation(w, oracle::swap(2)).real() == doctest::Approx(-1.0));
  CHECK(std::abs(w(1) + w(2)) < 1e-12);

  Rng rng = make_rng(1);
  CHECK(is_cp(LinearMapRep::ad(random_nonsingular(3, rng))).status == ConeStatus::Member);
}

TEST_CASE("block positivity of the swap") {
  const BipartiteOperator swap(2, 2, oracle::swap(2));
  const ConeVerdict k2 = is_k_blockpositive(swap, 2);
  CHECK(k2.status == ConeStatus::NonMember);
  CHECK(oracle::expectation(column(k2), swap.matrix()).real() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(oracle::schmidt_rank(column(k2), 2, 2) == 2);

  const ConeVerdict k1 = is_k_blockpositive(swap, 1);
  CHECK(k1.status == ConeStatus::Unknown);
  CHECK(k1.value >= -1e-8);
  // <x(x)y|swap|x(x)y> = |<conj x, y>|^2 >= 0 on a grid.
  CHECK(oracle::product_grid_min(swap.matrix(), 8) >= -1e-12);
}

TEST_CASE("PSD operators are block-positive at every level") {
  Rng rng = make_rng(2);
  const BipartiteOperator c(2, 3, random_psd(6, 3, rng));
  for (Index k = 1; k <= 2; ++k) CHECK(is_k_blockpositive(c, k).status == ConeStatus::Member);
  CHECK_THROWS_AS(is_k_blockpositive(c, 3), Error);
  CHECK_THROWS_AS(is_k_blockpositive(c, 0), Error);
}

TEST_CASE("reduction maps are k- but not (k+1)-positive") {
  SearchOptions opts;
  opts.budget = 16;
  for (Index k = 1; k <= 2; ++k) {
    const LinearMapRep r = LinearMapRep::reduction(3, double(k));
    CHECK(is_k_positive(r, k, opts).status != ConeStatus::NonMember);
    const ConeVerdict v = is_k_positive(r, k + 1, opts);
    REQUIRE(v.status == ConeStatus::NonMember);
    const ComplexMatrix c = oracle::choi(
        [&](const oracle::M& x) {
          return oracle::M(double(k) * x.trace() * oracle::M::Identity(3, 3) - x);
        },
        3, 3);
    CHECK(oracle::expectation(column(v), c).real() < -1e-8);
    CHECK(oracle::schmidt_rank(column(v), 3, 3) <= k + 1);
  }
}

TEST_CASE("non-Hermitian input is refuted with an imaginary witness") {
  ComplexMatrix x = ComplexMatrix::Identity(4, 4);
  x(0, 3) = Complex(0.0, 1.0);
  const ConeVerdict v = is_k_blockpositive(BipartiteOperator(2, 2, x), 1);
  CHECK(v.status == ConeStatus::NonMember);
  CHECK(std::abs(oracle::expectation(column(v), x).imag()) > 1e-3);
  CHECK(oracle::schmidt_rank(column(v), 2, 2) == 1);
}

TEST_CASE("see-saw is deterministic for a fixed seed") {
  Rng rng = make_rng(3);
  const BipartiteOperator c(3, 3, random_hermitian(9, rng));
  SearchOptions opts;
  opts.seed = 42;
  opts.budget = 8;
  const SeesawResult a = seesaw_minimize(c, 1, opts);
  const SeesawResult b = seesaw_minimize(c, 1, opts);
  CHECK(a.value == b.value);
  CHECK(a.start == b.start);
  CHECK(a.xi == b.xi);
}

TEST_CASE("Schmidt number bounds") {
  Rng rng = make_rng(4);
  const ComplexVector x = random_vector(2, rng), y = random_vector(3, rng);
  const BipartiteOperator prod = BipartiteOperator::product(x * x.adjoint(), y * y.adjoint());
  SchmidtBounds b = schmidt_number_bounds(prod);
  CHECK(b.lower == 1);
  CHECK(b.upper == 1);
  check_decomposition(b, prod);

  const BipartiteOperator cid = choi(LinearMapRep::identity(2));
  b = schmidt_number_bounds(cid);
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);
  check_decomposition(b, cid);

  const BipartiteOperator cid3 = choi(LinearMapRep::identity(3));
  b = schmidt_number_bounds(cid3);
  CHECK(b.lower == 3);
  CHECK(b.upper == 3);

  for (Index m : {2, 3}) {
    ComplexMatrix mix = ComplexMatrix::Zero(m * m, m * m);
    for (int i = 0; i < 5; ++i) {
      const ComplexVector a = random_vector(m, rng), c = random_vector(m, rng);
      mix += oracle::kron(a * a.adjoint(), c * c.adjoint());
    }
    const BipartiteOperator sep(m, m, mix);
    b = schmidt_number_bounds(sep);
    CHECK(b.lower == 1);
    CHECK(b.upper == 1);
    if (!b.ppt_external) check_decomposition(b, sep);
  }
  CHECK_THROWS_AS(schmidt_number_bounds(BipartiteOperator(2, 2, -ComplexMatrix::Identity(4, 4))),
                  Error);
  b = schmidt_number_bounds(BipartiteOperator(2, 2, ComplexMatrix::Zero(4, 4)));
  CHECK(b.lower == 0);
  CHECK(b.upper == 0);
}

TEST_CASE("Schmidt bounds bracket SP_2 samples in 3x3") {
  Rng rng = make_rng(5);
  for (int t = 0; t < 3; ++t) {
    const CertifiedMap s = random_spk(3, 3, 2, rng);
    const BipartiteOperator c = choi(s.map);
    const SchmidtBounds b = schmidt_number_bounds(c);
    CHECK(b.lower <= 2);
    CHECK(b.lower <= b.upper);
    check_decomposition(b, c);
  }
}

TEST_CASE("superpositivity") {
  const ConeVerdict dep = is_k_superpositive(LinearMapRep::depolarizing(3, 3), 1);
  CHECK(dep.status == ConeStatus::Member);
  CHECK_FALSE(dep.relies_on_external_theorem);
  const ConeVerdict id1 = is_k_superpositive(LinearMapRep::identity(2), 1);
  CHECK(id1.status == ConeStatus::NonMember);
  CHECK(id1.witness_map.has_value());
  CHECK(is_k_superpositive(LinearMapRep::identity(2), 2).status == ConeStatus::Member);
  CHECK(is_k_superpositive(LinearMapRep::transpose(2), 1).status == ConeStatus::NonMember);
}

TEST_CASE("detect_ad") {
  Rng rng = make_rng(6);
  const ComplexMatrix s = random_nonsingular(3, rng);
  const auto got = detect_ad(LinearMapRep::ad(s));
  REQUIRE(got.has_value());
  CHECK(oracle::rel(LinearMapRep::ad(*got).transfer(), LinearMapRep::ad(s).transfer()) <= 1e-8);
  // Same s up to a unimodular phase.
  const Complex ratio = (*got)(0, 0) / s(0, 0);
  CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-8);
  CHECK(oracle::rel(*got, ratio * s) < 1e-8);

  CHECK_FALSE(detect_ad(LinearMapRep::transpose(2)).has_value());
  const auto id = detect_ad(LinearMapRep::identity(3));
  REQUIRE(id.has_value());
  CHECK(oracle::rel(*id, ComplexMatrix::Identity(3, 3)) < 1e-12);
  // Rank-one Choi with a singular factor is not an isomorphism of that form.
  ComplexMatrix sing = ComplexMatrix::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_FALSE(detect_ad(LinearMapRep::ad(sing)).has_value());
}

TEST_CASE("correspondence for the transpose and for Ad_s") {
  const Isomorphism t(LinearMapRep::transpose(2));
  const Theorem43Report k1 = check_theorem43(t, 1, 10);
  CHECK(k1.prediction == Prediction::Holds);
  CHECK(k1.consistent);
  CHECK(k1.sample_violations == 0);
  const Theorem43Report k2 = check_theorem43(t, 2, 10);
  CHECK(k2.prediction == Prediction::Fails);
  CHECK(k2.probe_violation);
  CHECK(k2.consistent);

  Rng rng = make_rng(7);
  const Isomorphism ad(LinearMapRep::ad(random_nonsingular(2, rng)));
  for (Index k = 1; k <= 2; ++k) {
    const Theorem43Report r = check_theorem43(ad, k, 10);
    CHECK(r.prediction_certified);
    CHECK(r.consistent);
  }
  CHECK_THROWS_AS(check_theorem43(t, 3, 1), Error);
}

TEST_CASE("symmetric forms from Ad_s") {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, 1;
  Prop46Report r = check_prop46(s);
  CHECK(r.s_symmetric);
  CHECK(r.form_symmetric);
  CHECK(r.holds);
  s << 0, 1, -1, 0;
  r = check_prop46(s);
  CHECK(r.s_antisymmetric);
  CHECK(r.form_symmetric);
  CHECK(r.ad_self_transpose);
  CHECK(r.holds);
  s << 1, 1, 0, 1;
  r = check_prop46(s);
  CHECK_FALSE(r.form_symmetric);
  CHECK_FALSE(r.ad_self_transpose);
  CHECK(r.holds);
  s << 1, 0, 0, 0;
  CHECK_THROWS_AS(check_prop46(s), Error);
}
