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

#include "choikit/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "choikit/maps.hpp"
#include "choikit/sampling.hpp"

namespace choikit {

const char* to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::Member: return "member";
    case ConeStatus::NonMember: return "nonmember";
    case ConeStatus::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::SP: return "SP";
    case ConeKind::CP: return "CP";
    case ConeKind::P: return "P";
    case ConeKind::CoCP: return "coCP";
    case ConeKind::PPT: return "PPT";
    case ConeKind::S: return "S";
    case ConeKind::BP: return "BP";
    case ConeKind::PSD: return "PSD";
  }
  return "?";
}

std::string ConeLabel::name() const {
  std::string out = to_string(kind);
  if (k > 0) out += "_" + std::to_string(k);
  return out;
}

namespace {

struct MinEig {
  double value;
  ComplexVector vector;
};

MinEig min_eig(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

double spectral_norm_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

/// Thin Q and R of a tall matrix with k columns.
void thin_qr(const ComplexMatrix& x, ComplexMatrix& q, ComplexMatrix& r) {
  const Index k = x.cols();
  Eigen::HouseholderQR<ComplexMatrix> qr(x);
  q = qr.householderQ() * ComplexMatrix::Identity(x.rows(), k);
  r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
}

ComplexMatrix polar_factor(const ComplexMatrix& x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

/// Best rank-k approximation of a vector's m x n reshaping.
ComplexVector truncate_schmidt(const ComplexVector& v, Index m, Index n,
                               Index k) {
  const ComplexMatrix x = unvec(v, m, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Index keep = std::min<Index>(k, svd.singularValues().size());
  const ComplexMatrix xk = svd.matrixU().leftCols(keep) *
                           svd.singularValues().head(keep).asDiagonal() *
                           svd.matrixV().leftCols(keep).adjoint();
  return vec(xk);
}

ComplexMatrix positive_factor(const HermitianEig& eig) {
  Index r = 0;
  while (r < eig.eigenvalues.size() && eig.eigenvalues(r) > 0.0) ++r;
  ComplexMatrix w(eig.eigenvectors.rows(), r);
  for (Index i = 0; i < r; ++i)
    w.col(i) = std::sqrt(eig.eigenvalues(i)) * eig.eigenvectors.col(i);
  return w;
}

double decomposition_residual(const ComplexMatrix& v, const ComplexMatrix& c) {
  return (v * v.adjoint() - c).norm();
}

/// A product vector with large |<xi|K|xi>| for the anti-Hermitian part K
/// of c, so that <xi|c|xi> is not real.
ConeVerdict hermiticity_witness(const BipartiteOperator& c,
                                const SearchOptions& options) {
  const ComplexMatrix k =
      (c.matrix() - c.matrix().adjoint()) / Complex(0.0, 2.0);
  SearchOptions quick = options;
  quick.budget = std::max<Index>(1, std::min<Index>(options.budget, 8));
  const SeesawResult lo =
      seesaw_minimize(BipartiteOperator(c.dim_a(), c.dim_b(), k), 1, quick);
  const SeesawResult hi =
      seesaw_minimize(BipartiteOperator(c.dim_a(), c.dim_b(), -k), 1, quick);
  const SeesawResult& pick = std::abs(lo.value) >= std::abs(hi.value) ? lo : hi;
  ConeVerdict v;
  v.status = ConeStatus::NonMember;
  v.witness = ComplexMatrix(pick.xi);
  const Complex q = pick.xi.adjoint() * c.matrix() * pick.xi;
  v.value = q.imag();
  v.detail = "not Hermitian: product witness has <xi|C|xi> with imaginary part " +
             std::to_string(q.imag());
  return v;
}

}  // namespace

ConeVerdict psd_verdict(const ComplexMatrix& h) {
  ConeVerdict v;
  if (hermiticity_defect(h) > kTolHermitian) {
    const ComplexMatrix k = (h - h.adjoint()) / Complex(0.0, 2.0);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (k + k.adjoint()));
    const RealVector& ev = solver.eigenvalues();
    const Index pick = std::abs(ev(0)) >= std::abs(ev(ev.size() - 1)) ? 0 : ev.size() - 1;
    v.status = ConeStatus::NonMember;
    v.witness = ComplexMatrix(solver.eigenvectors().col(pick));
    v.value = ev(pick);
    v.detail = "not Hermitian";
    return v;
  }
  const HermitianEig eig = hermitian_eig(h);
  const Index last = eig.eigenvalues.size() - 1;
  const double lo = eig.eigenvalues(last);
  const double scale = std::max({1.0, std::abs(lo), std::abs(eig.eigenvalues(0))});
  v.value = lo;
  if (lo < -kTolPsd * scale) {
    v.status = ConeStatus::NonMember;
    v.witness = ComplexMatrix(eig.eigenvectors.col(last));
    v.detail = "negative eigenvalue " + std::to_string(lo);
  } else {
    v.status = ConeStatus::Member;
    v.certificate = positive_factor(eig);
    v.detail = "positive semidefinite";
  }
  return v;
}

ConeVerdict is_cp(const LinearMapRep& phi) {
  ConeVerdict v = psd_verdict(choi(phi).matrix());
  v.detail = "choi matrix: " + v.detail;
  return v;
}

SeesawResult seesaw_minimize(const BipartiteOperator& c, Index k,
                             const SearchOptions& options) {
  const Index m = c.dim_a(), n = c.dim_b();
  const ComplexMatrix h = 0.5 * (c.matrix() + c.matrix().adjoint());
  const double scale = std::max(1.0, spectral_norm_hermitian(h));
  const ComplexMatrix id_m = ComplexMatrix::Identity(m, m);
  const ComplexMatrix id_n = ComplexMatrix::Identity(n, n);

  SeesawResult best;
  best.value = std::numeric_limits<double>::infinity();
  // Starts are independent streams; the merge keeps the lowest value and,
  // on ties, the lowest start index.
  for (Index start = 0; start < std::max<Index>(1, options.budget); ++start) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(start));
    ComplexMatrix a, b, r;
    thin_qr(random_matrix(n, k, rng), b, r);
    double previous = std::numeric_limits<double>::infinity();
    double value = previous;
    for (Index it = 0; it < options.max_alternations; ++it) {
      const ComplexMatrix la = kron(id_m, b);
      const MinEig sa = min_eig(la.adjoint() * h * la);
      a = unvec(sa.vector, m, k);
      ComplexMatrix q;
      thin_qr(a, q, r);
      a = q;
      b = b * r.transpose();

      const ComplexMatrix lb = kron(a, id_n);
      const MinEig sb = min_eig(lb.adjoint() * h * lb);
      b = unvec(sb.vector, k, n).transpose();
      thin_qr(b, q, r);
      b = q;
      a = a * r.transpose();
      value = sb.value;
      if (previous - value < options.convergence * scale) break;
      previous = value;
    }
    ComplexVector xi = vec(ComplexMatrix(a * b.transpose()));
    xi /= xi.norm();
    const double v = (xi.adjoint() * h * xi)(0).real();
    if (v < best.value) {
      best.value = v;
      best.xi = xi;
      best.start = start;
    }
  }
  return best;
}

ConeVerdict is_k_blockpositive(const BipartiteOperator& c, Index k,
                               const SearchOptions& options) {
  const Index m = c.dim_a(), n = c.dim_b();
  const Index kmax = std::min(m, n);
  if (k < 1 || k > kmax)
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) +
                                         " outside [1, " +
                                         std::to_string(kmax) + "]");
  if (hermiticity_defect(c.matrix()) > kTolHermitian)
    return hermiticity_witness(c, options);

  ConeVerdict psd = psd_verdict(c.matrix());
  if (psd.status == ConeStatus::Member) {
    psd.detail = "positive semidefinite, hence block-positive at every level";
    return psd;
  }
  if (k == kmax) {
    psd.detail = "exact at k = min(m,n): " + psd.detail;
    return psd;
  }

  const SeesawResult best = seesaw_minimize(c, k, options);
  const double norm = spectral_norm_hermitian(c.matrix());
  ConeVerdict v;
  v.value = best.value;
  if (best.value < -kViolationTol * norm) {
    const double recheck =
        (best.xi.adjoint() * c.matrix() * best.xi)(0).real();
    if (recheck < -kViolationTol * norm &&
        schmidt_rank(best.xi, m, n, 1e-9) <= k) {
      v.status = ConeStatus::NonMember;
      v.witness = ComplexMatrix(best.xi);
      v.value = recheck;
      v.detail = "see-saw witness of Schmidt rank <= " + std::to_string(k) +
                 " from start " + std::to_string(best.start);
      return v;
    }
  }
  v.status = ConeStatus::Unknown;
  v.detail = "no violation found in " + std::to_string(options.budget) +
             " starts; best value " + std::to_string(best.value);
  return v;
}

ConeVerdict is_k_positive(const LinearMapRep& phi, Index k,
                          const SearchOptions& options) {
  return is_k_blockpositive(choi(phi), k, options);
}

ConeVerdict is_ppt(const BipartiteOperator& c) {
  ConeVerdict v = psd_verdict(c.matrix());
  if (v.status != ConeStatus::Member) {
    v.detail = "operator: " + v.detail;
    return v;
  }
  ConeVerdict pt = psd_verdict(partial_transpose(c, Slot::Second).matrix());
  if (pt.status == ConeStatus::NonMember) {
    pt.witness_map = LinearMapRep::transpose(c.dim_b());
    pt.witness_slot = Slot::Second;
    pt.detail = "partial transpose: " + pt.detail;
    return pt;
  }
  v.detail = "operator and partial transpose positive semidefinite";
  return v;
}

SchmidtBounds schmidt_number_lower_bound(const BipartiteOperator& c) {
  const Index m = c.dim_a(), n = c.dim_b();
  const Index kmax = std::min(m, n);
  SchmidtBounds b;
  if (c.matrix().norm() == 0.0) return b;
  b.lower = 1;

  struct Probe {
    LinearMapRep map;
    Slot slot;
    Index level;  // failure implies Schmidt number > level
    std::string name;
  };
  std::vector<Probe> probes;
  for (Index k = 1; k < kmax; ++k) {
    const double kd = static_cast<double>(k);
    probes.push_back({LinearMapRep::reduction(n, kd), Slot::Second, k,
                      "reduction k=" + std::to_string(k)});
    probes.push_back({LinearMapRep::reduction(m, kd), Slot::First, k,
                      "reduction k=" + std::to_string(k)});
  }
  probes.push_back({LinearMapRep::transpose(n), Slot::Second, 1, "transpose"});
  for (const Probe& p : probes) {
    if (p.level + 1 <= b.lower) continue;
    const BipartiteOperator x =
        p.slot == Slot::Second
            ? apply_tensor(LinearMapRep::identity(m), p.map, c)
            : apply_tensor(p.map, LinearMapRep::identity(n), c);
    const ConeVerdict v = psd_verdict(x.matrix());
    if (v.status == ConeStatus::NonMember) {
      b.lower = p.level + 1;
      b.lower_witness = ComplexVector(v.witness->col(0));
      b.lower_map = p.map;
      b.lower_slot = p.slot;
      b.lower_detail = p.name + (p.slot == Slot::Second ? " on second factor"
                                                        : " on first factor") +
                       ", eigenvalue " + std::to_string(v.value);
    }
  }
  return b;
}

std::optional<ComplexMatrix> schmidt_decomposition_search(
    const BipartiteOperator& c, Index k, const SearchOptions& options) {
  const Index m = c.dim_a(), n = c.dim_b();
  const Index mn = m * n;
  const HermitianEig eig = hermitian_eig(c.matrix());
  const double top = eig.eigenvalues(0);
  if (top <= 0.0) return std::nullopt;
  Index r = 0;
  while (r < mn && eig.eigenvalues(r) > 1e-12 * top) ++r;
  ComplexMatrix w(mn, r), w_pinv(r, mn);
  for (Index i = 0; i < r; ++i) {
    const double s = std::sqrt(eig.eigenvalues(i));
    w.col(i) = s * eig.eigenvectors.col(i);
    w_pinv.row(i) = eig.eigenvectors.col(i).adjoint() / s;
  }
  const Index terms = std::max(r, std::min(mn * mn, 4 * mn));
  const double target = kDecompositionTol * c.matrix().norm();
  // One decomposition start per 16 see-saw starts, at most 4.
  const Index starts = std::clamp<Index>(options.budget / 16, 1, 4);
  constexpr Index kMaxIterations = 3000;
  constexpr Index kWindow = 200;

  for (Index start = 0; start < starts; ++start) {
    Rng rng = make_rng(options.seed ^ 0x9e3779b97f4a7c15ULL,
                       static_cast<std::uint64_t>(start));
    ComplexMatrix u = polar_factor(random_matrix(r, terms, rng));
    double checkpoint = std::numeric_limits<double>::infinity();
    for (Index it = 0; it < kMaxIterations; ++it) {
      ComplexMatrix v = w * u;
      for (Index p = 0; p < terms; ++p)
        v.col(p) = truncate_schmidt(v.col(p), m, n, k);
      const double res = decomposition_residual(v, c.matrix());
      if (res <= target) return v;
      if (it % kWindow == 0) {
        if (res > 0.95 * checkpoint) break;
        checkpoint = res;
      }
      u = polar_factor(w_pinv * v);
    }
  }
  return std::nullopt;
}

SchmidtBounds schmidt_number_bounds(const BipartiteOperator& c,
                                    const SearchOptions& options) {
  const ConeVerdict psd = psd_verdict(c.matrix());
  if (psd.status != ConeStatus::Member)
    throw Error(ErrorKind::NotPSD,
                "schmidt_number_bounds: operator is not positive semidefinite");
  const Index m = c.dim_a(), n = c.dim_b();
  const Index kmax = std::min(m, n);
  SchmidtBounds b = schmidt_number_lower_bound(c);
  if (b.lower == 0) return b;

  const double target = kDecompositionTol * c.matrix().norm();
  b.decomposition = *psd.certificate;
  b.decomposition_rank = kmax;

  // Product-diagonal operators decompose into basis product vectors.
  const ComplexMatrix& mat = c.matrix();
  const ComplexMatrix diag = mat.diagonal().asDiagonal();
  if (max_abs(mat - diag) <= 1e-14 * std::max(1.0, max_abs(mat))) {
    ComplexMatrix v = ComplexMatrix::Zero(mat.rows(), mat.rows());
    for (Index i = 0; i < mat.rows(); ++i)
      v(i, i) = std::sqrt(std::max(0.0, mat(i, i).real()));
    b.decomposition = v;
    b.decomposition_rank = 1;
  } else {
    Index worst = 0;
    for (Index p = 0; p < b.decomposition.cols(); ++p)
      worst = std::max(worst, schmidt_rank(b.decomposition.col(p), m, n, 1e-9));
    if (worst < kmax) {
      ComplexMatrix v = b.decomposition;
      for (Index p = 0; p < v.cols(); ++p)
        v.col(p) = truncate_schmidt(v.col(p), m, n, worst);
      if (decomposition_residual(v, mat) <= target) {
        b.decomposition = v;
        b.decomposition_rank = std::max<Index>(worst, 1);
      }
    }
  }
  for (Index k = b.lower; k < b.decomposition_rank; ++k) {
    if (auto found = schmidt_decomposition_search(c, k, options)) {
      b.decomposition = *found;
      b.decomposition_rank = k;
      break;
    }
  }
  b.upper = b.decomposition_rank;

  const bool ppt_regime = (m == 2 && n <= 3) || (n == 2 && m <= 3);
  if (b.upper > 1 && b.lower == 1 && ppt_regime) {
    // lower == 1 means the partial-transpose probe passed.
    b.upper = 1;
    b.ppt_external = true;
  }
  return b;
}

ConeVerdict is_k_superpositive(const LinearMapRep& phi, Index k,
                               const SearchOptions& options) {
  const Index kmax = std::min(phi.dim_in(), phi.dim_out());
  if (k < 1 || k > kmax)
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) +
                                         " outside [1, " +
                                         std::to_string(kmax) + "]");
  ConeVerdict cp = is_cp(phi);
  if (cp.status != ConeStatus::Member) {
    cp.detail = "not completely positive; " + cp.detail;
    return cp;
  }
  const BipartiteOperator c = choi(phi);
  const SchmidtBounds b = schmidt_number_bounds(c, options);
  ConeVerdict v;
  if (b.upper <= k) {
    v.status = ConeStatus::Member;
    if (b.decomposition_rank <= k) {
      v.certificate = b.decomposition;
      v.detail = "explicit decomposition into Schmidt rank <= " +
                 std::to_string(b.decomposition_rank) + " vectors";
    } else {
      v.relies_on_external_theorem = true;
      v.detail = "PPT in dimension " + std::to_string(phi.dim_in()) + "x" +
                 std::to_string(phi.dim_out()) +
                 ", separable by the Horodecki criterion (external theorem)";
    }
    return v;
  }
  if (b.lower > k) {
    v.status = ConeStatus::NonMember;
    v.witness = ComplexMatrix(*b.lower_witness);
    v.witness_map = b.lower_map;
    v.witness_slot = b.lower_slot;
    const BipartiteOperator x =
        b.lower_slot == Slot::Second
            ? apply_tensor(LinearMapRep::identity(c.dim_a()), *b.lower_map, c)
            : apply_tensor(*b.lower_map, LinearMapRep::identity(c.dim_b()), c);
    v.value = (b.lower_witness->adjoint() * x.matrix() * *b.lower_witness)(0).real();
    v.detail = "Schmidt number >= " + std::to_string(b.lower) + ": " +
               b.lower_detail;
    return v;
  }
  v.status = ConeStatus::Unknown;
  v.detail = "Schmidt number bounds [" + std::to_string(b.lower) + ", " +
             std::to_string(b.upper) + "]";
  return v;
}

std::optional<ComplexMatrix> detect_ad(const LinearMapRep& sigma) {
  if (sigma.dim_in() != sigma.dim_out()) return std::nullopt;
  const Index m = sigma.dim_in();
  const ComplexMatrix c = choi(sigma).matrix();
  if (hermiticity_defect(c) > kTolHermitian) return std::nullopt;
  const HermitianEig eig = hermitian_eig(c);
  const double top = eig.eigenvalues(0);
  if (top <= 0.0) return std::nullopt;
  for (Index i = 1; i < eig.eigenvalues.size(); ++i)
    if (std::abs(eig.eigenvalues(i)) > 1e-9 * top) return std::nullopt;

  // C_{Ad_s} = u u^* with u = conj(vec(s)).
  const ComplexVector u = std::sqrt(top) * eig.eigenvectors.col(0);
  ComplexMatrix s = unvec(ComplexVector(u.conjugate()), m, m);
  if (rank(s, 1e-10) != m) return std::nullopt;

  Index bi = 0, bj = 0;
  double best = -1.0;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (std::abs(s(i, j)) > best * (1.0 + 1e-12)) {
        best = std::abs(s(i, j));
        bi = i;
        bj = j;
      }
  s *= std::conj(s(bi, bj)) / best;
  s(bi, bj) = best;

  if (relative_residual(LinearMapRep::ad(s).transfer(), sigma.transfer()) > 1e-8)
    return std::nullopt;
  return s;
}

Theorem43Report check_theorem43(const Isomorphism& sigma, Index k, Index trials,
                                const SearchOptions& options) {
  const Index m = sigma.dim();
  if (k < 1 || k > m)
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) +
                                         " outside [1, " + std::to_string(m) +
                                         "]");
  Theorem43Report rep;
  rep.k = k;
  rep.sigma_verdict = is_k_positive(sigma.map(), k, options);
  const LinearMapRep inv = sigma.inverse();
  rep.inverse_verdict = is_k_positive(inv, k, options);
  const bool refuted = rep.sigma_verdict.status == ConeStatus::NonMember ||
                       rep.inverse_verdict.status == ConeStatus::NonMember;
  rep.prediction = refuted ? Prediction::Fails : Prediction::Holds;
  rep.prediction_certified =
      rep.sigma_verdict.status == ConeStatus::Member &&
      rep.inverse_verdict.status == ConeStatus::Member;

  // Probe id (always k-positive): C^sigma_id = C_sigma.
  const ConeVerdict id_probe = is_k_blockpositive(choi(sigma.map()), k, options);
  // Probe sigma^{-1}: C^sigma_{sigma^{-1}} = C_id is PSD, so the pair breaks
  // the correspondence exactly when sigma^{-1} is not k-positive.
  const bool inverse_probe = rep.inverse_verdict.status == ConeStatus::NonMember;
  rep.probe_violation = id_probe.status == ConeStatus::NonMember || inverse_probe;

  Rng rng = make_rng(options.seed, 0x7431);
  for (Index t = 0; t < trials; ++t) {
    SearchOptions sub = options;
    sub.seed = options.seed + 1000003ULL * static_cast<std::uint64_t>(t + 1);

    // CP maps are k-positive: C^sigma_phi must be k-block-positive.
    const CertifiedMap cp = random_cp(m, m, rng);
    const ConeVerdict bp = is_k_blockpositive(choi_sigma(cp.map, sigma), k, sub);
    ++rep.samples;
    if (bp.status == ConeStatus::NonMember) ++rep.sample_violations;

    // SP_k maps: C^sigma_phi must have Schmidt number <= k.
    const CertifiedMap sp = random_spk(m, m, k, rng);
    const BipartiteOperator cs = choi_sigma(sp.map, sigma);
    ++rep.samples;
    if (psd_verdict(cs.matrix()).status == ConeStatus::NonMember ||
        schmidt_number_lower_bound(cs).lower > k)
      ++rep.sample_violations;
  }

  if (rep.prediction == Prediction::Holds) {
    rep.consistent = rep.sample_violations == 0 && !rep.probe_violation;
    rep.detail = rep.consistent
                     ? "correspondence predicted and no violation observed"
                     : "violation observed although sigma and sigma^{-1} "
                       "were not refuted as k-positive";
  } else {
    rep.consistent = rep.probe_violation;
    rep.detail = rep.consistent
                     ? "predicted failure observed"
                     : "predicted failure not exhibited by any probe";
  }
  if (!rep.prediction_certified && rep.prediction == Prediction::Holds)
    rep.detail += " (k-positivity of sigma and sigma^{-1} not certified, "
                  "only unrefuted)";
  return rep;
}

Prop46Report check_prop46(const ComplexMatrix& s) {
  if (s.rows() != s.cols())
    throw Error(ErrorKind::DimensionMismatch, "check_prop46: s is not square");
  const Index m = s.rows();
  if (rank(s, 1e-10) != m)
    throw Error(ErrorKind::SingularS, "check_prop46: s is singular");
  Prop46Report rep;
  const double scale = std::max(1.0, max_abs(s));
  rep.s_symmetric = max_abs(s - s.transpose()) <= 1e-10 * scale;
  rep.s_antisymmetric = max_abs(s + s.transpose()) <= 1e-10 * scale;

  const Isomorphism ad(LinearMapRep::ad(s));
  const BilinearForm form = BilinearForm::from_isomorphism(ad);
  const ComplexMatrix& g = form.gram();
  rep.form_defect = max_abs(g - g.transpose()) / std::max(1.0, max_abs(g));
  rep.form_symmetric = is_symmetric(form);

  const ComplexMatrix& t = ad.transfer();
  const ComplexMatrix tt = sigma_transpose(ad.map()).transfer();
  rep.transpose_defect = max_abs(tt - t) / std::max(1.0, max_abs(t));
  rep.ad_self_transpose = rep.transpose_defect <= 1e-10;

  const bool s_side = rep.s_symmetric || rep.s_antisymmetric;
  rep.holds = rep.form_symmetric == s_side && rep.ad_self_transpose == s_side;
  return rep;
}

}  // namespace choikit
