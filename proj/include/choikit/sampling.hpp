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
 * @file sampling.hpp
 * Seeded random instances. Matrix entries are i.i.d. complex standard
 * normal (real and imaginary parts N(0, 1/2)). Certified generators record
 * how membership in their cone is guaranteed.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "choikit/forms.hpp"
#include "choikit/map_rep.hpp"

namespace choikit {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream); used to keep parallelizable work
/// deterministic regardless of execution order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

Complex complex_normal(Rng& rng);
ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng);
ComplexVector random_vector(Index d, Rng& rng);
ComplexMatrix random_hermitian(Index d, Rng& rng);
/// Rank-r PSD matrix G G* with G of shape d x r.
ComplexMatrix random_psd(Index d, Index r, Rng& rng);

LinearMapRep random_map(Index m, Index n, Rng& rng);

/// Resamples until the rank condition holds.
ComplexMatrix random_nonsingular(Index m, Rng& rng);
Isomorphism random_isomorphism(Index m, Rng& rng);
BasisFamily random_basis(Index d, Rng& rng);
BilinearForm random_form(Index d, Rng& rng);

/// G^T G + shift * I, re-checked for invertibility.
BilinearForm random_symmetric_form(Index d, Rng& rng);

/// A random isomorphism whose Choi matrix has rank > 1 (never of the form
/// Ad_s).
Isomorphism random_non_ad_isomorphism(Index m, Rng& rng);

enum class SampleCone { CP, SPk, CoCP, Positive, KPositive };

const char* to_string(SampleCone cone);

/// A map together with the construction that certifies its cone.
struct CertifiedMap {
  LinearMapRep map;
  SampleCone cone;
  Index k = 1;                        ///< level for SPk / KPositive
  std::vector<ComplexMatrix> kraus;   ///< x -> sum V* x V (CP / SPk parts)
  std::string certificate;
};

/// CP via `count` random Kraus operators (default m*n).
CertifiedMap random_cp(Index m, Index n, Rng& rng, Index count = 0);

/// k-superpositive via m*n Kraus operators of rank <= k.
CertifiedMap random_spk(Index m, Index n, Index k, Rng& rng);

/// Completely copositive: CP o transpose.
CertifiedMap random_cocp(Index m, Index n, Rng& rng);

/// Positive (1-positive): lambda * CP + (1 - lambda) * coCP.
CertifiedMap random_positive(Index m, Index n, Rng& rng);

/// k-positive: CP o R_k o CP with R_k(x) = k tr(x) I - x, plus a CP term.
CertifiedMap random_kpositive(Index m, Index n, Index k, Rng& rng);

}  // namespace choikit
