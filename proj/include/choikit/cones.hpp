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
 * @file cones.hpp
 * Membership oracles for the cones
 *
 *   maps:       SP_1 < SP_k < CP  < P_k  < P_1
 *   operators:  S_1  < S_k  < PSD < BP_k < BP_1
 *
 * An oracle answers Member only with an exact argument (eigendecomposition,
 * explicit decomposition, or the 2x2 / 2x3 PPT criterion, which is flagged).
 * NonMember always carries a witness that can be re-checked from scratch.
 * Everything else is Unknown.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choikit/forms.hpp"
#include "choikit/linalg.hpp"
#include "choikit/map_rep.hpp"

namespace choikit {

enum class ConeStatus { Member, NonMember, Unknown };

const char* to_string(ConeStatus status);

enum class ConeKind { SP, CP, P, CoCP, PPT, S, BP, PSD };

const char* to_string(ConeKind kind);

struct ConeLabel {
  ConeKind kind;
  Index k = 0;  ///< 0 when the cone has no level

  std::string name() const;
};

struct ConeVerdict {
  ConeStatus status = ConeStatus::Unknown;
  /// NonMember: a vector xi (column) with <xi|X|xi> < 0 for the tested X,
  /// or with nonzero imaginary part when X is not Hermitian.
  std::optional<ComplexMatrix> witness;
  /// When set, X = (id (x) witness_map)(C) (or witness_map on the first
  /// factor if witness_slot is First) rather than C itself.
  std::optional<LinearMapRep> witness_map;
  Slot witness_slot = Slot::Second;
  /// Member: columns v_p with C = sum_p v_p v_p^*.
  std::optional<ComplexMatrix> certificate;
  /// Smallest eigenvalue / best objective found.
  double value = 0.0;
  bool relies_on_external_theorem = false;
  std::string detail;
};

struct SearchOptions {
  Index budget = 64;              ///< random starts
  std::uint64_t seed = 0;
  Index max_alternations = 200;
  double convergence = 1e-12;
};

/// Threshold for a see-saw violation, relative to ||C||_2.
inline constexpr double kViolationTol = 1e-8;

/// Residual accepted for an explicit Schmidt decomposition, relative to
/// ||C||_F.
inline constexpr double kDecompositionTol = 1e-7;

ConeVerdict is_cp(const LinearMapRep& phi);

/// Exact PSD test with eigen-witness.
ConeVerdict psd_verdict(const ComplexMatrix& h);

/**
 * Minimizes <xi|C|xi> over unit xi of Schmidt rank <= k. PSD input is an
 * exact Member; k == min(m, n) reduces to the exact PSD test. Otherwise a
 * see-saw over the k Schmidt factors runs from `budget` random starts and
 * returns NonMember if it finds a value below -kViolationTol * ||C||,
 * Unknown with the best value otherwise. Non-Hermitian input is NonMember
 * with a product witness of nonzero imaginary part.
 */
ConeVerdict is_k_blockpositive(const BipartiteOperator& c, Index k,
                               const SearchOptions& options = {});

ConeVerdict is_k_positive(const LinearMapRep& phi, Index k,
                          const SearchOptions& options = {});

/// C PSD and its partial transpose PSD.
ConeVerdict is_ppt(const BipartiteOperator& c);

/// Best product-vector (Schmidt rank <= k) minimum of <xi|C|xi>.
struct SeesawResult {
  double value = 0.0;
  ComplexVector xi;
  Index start = -1;
};

SeesawResult seesaw_minimize(const BipartiteOperator& c, Index k,
                             const SearchOptions& options);

struct SchmidtBounds {
  Index lower = 0;
  Index upper = 0;

  /// Certificate for lower > 1: xi with <xi|(id (x) map)(C)|xi> < 0
  /// (map on the first factor when lower_slot == First). Absent means
  /// lower follows from C != 0 only.
  std::optional<ComplexVector> lower_witness;
  std::optional<LinearMapRep> lower_map;
  Slot lower_slot = Slot::Second;
  std::string lower_detail;

  /// Explicit C = sum_p v_p v_p^* with every v_p of Schmidt rank <=
  /// decomposition_rank; upper == decomposition_rank unless
  /// ppt_external lowered it to 1.
  ComplexMatrix decomposition;
  Index decomposition_rank = 0;
  bool ppt_external = false;
};

/// Lower bound only (witness-map tests); no decomposition search.
SchmidtBounds schmidt_number_lower_bound(const BipartiteOperator& c);

/// Throws NotPSD for non-PSD input.
SchmidtBounds schmidt_number_bounds(const BipartiteOperator& c,
                                    const SearchOptions& options = {});

/// Alternating-projection search for C = sum v_p v_p^* with Schmidt rank
/// of every v_p at most k. Runs budget/16 starts (1 to 4). Returns the
/// columns v_p on success.
std::optional<ComplexMatrix> schmidt_decomposition_search(
    const BipartiteOperator& c, Index k, const SearchOptions& options);

ConeVerdict is_k_superpositive(const LinearMapRep& phi, Index k,
                               const SearchOptions& options = {});

/// s (up to phase, largest-modulus entry real positive) with Ad_s == sigma
/// when choi(sigma) is PSD of rank one with nonsingular factor.
std::optional<ComplexMatrix> detect_ad(const LinearMapRep& sigma);

enum class Prediction { Holds, Fails };

struct Theorem43Report {
  Index k = 1;
  ConeVerdict sigma_verdict;
  ConeVerdict inverse_verdict;
  Prediction prediction = Prediction::Holds;
  bool prediction_certified = false;  ///< both verdicts Member
  Index samples = 0;
  Index sample_violations = 0;        ///< re-verified violations on samples
  bool probe_violation = false;       ///< id or sigma^{-1} exposes a failure
  bool consistent = false;
  std::string detail;
};

/**
 * Checks whether phi -> C^sigma_phi keeps P_k <-> BP_k and SP_k <-> S_k,
 * as predicted by k-positivity of sigma and sigma^{-1}. Samples CP and
 * SP_k maps, plus the probes phi = id and phi = sigma^{-1}.
 */
Theorem43Report check_theorem43(const Isomorphism& sigma, Index k, Index trials,
                                const SearchOptions& options = {});

struct Prop46Report {
  bool s_symmetric = false;
  bool s_antisymmetric = false;
  bool form_symmetric = false;        ///< gram [Ad_s]^{-1} symmetric
  bool ad_self_transpose = false;     ///< (Ad_s)^T == Ad_s
  double form_defect = 0.0;           ///< relative |G - G^T|
  double transpose_defect = 0.0;      ///< relative |T - T^T|
  bool holds = false;
};

/// Throws SingularS for singular s.
Prop46Report check_prop46(const ComplexMatrix& s);

}  // namespace choikit
