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

// Acceptance run: one PASS/FAIL line per criterion. The CLI binary path is
// the first argument (used by the determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "choikit/cones.hpp"
#include "choikit/identities.hpp"
#include "choikit/maps.hpp"
#include "choikit/sampling.hpp"
#include "oracles.hpp"

using namespace choikit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  if (!o.pass) ++failures;
  std::printf("AC%02d %s  %s: %s [%.1f s]\n", id, o.pass ? "PASS" : "FAIL", title,
              o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

Index pick(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// 1. Three computations of C^sigma_phi.
Outcome choi_dual_path() {
  Rng rng = make_rng(101);
  double worst = 0.0;
  const auto t0 = Clock::now();
  for (int t = 0; t < 500; ++t) {
    const Index m = pick(rng, 2, 4), n = pick(rng, 2, 4);
    const LinearMapRep phi = random_map(m, n, rng);
    const Isomorphism sigma = random_isomorphism(m, rng);
    const ComplexMatrix loop = oracle::choi(
        [&](const oracle::M& x) {
          return choikit::apply(phi, choikit::apply(sigma.map(), x));
        },
        int(m), int(n));
    worst = std::max(worst, oracle::rel(loop, choi_sigma(phi, sigma).matrix()));
    worst = std::max(worst, oracle::rel(loop, choi_sigma_via_tensor(phi, sigma).matrix()));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-10 && secs < 10.0,
          "500 pairs, max relative residual " + sci(worst) + " (tol 1e-10), " +
              std::to_string(secs).substr(0, 5) + " s (target < 10 s)"};
}

// 2. Invariance of Gamma under the choice of dual basis pair.
Outcome gamma_invariance() {
  Rng rng = make_rng(102);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Index m = pick(rng, 2, 3), n = pick(rng, 2, 3);
    const BilinearForm form = random_form(m * m, rng);
    const LinearMapRep phi = random_map(m, n, rng);
    const BasisFamily e1 = random_basis(m * m, rng), e2 = random_basis(m * m, rng);
    const ComplexMatrix g1 = gamma(phi, e1, dual_basis(form, e1)).matrix();
    const ComplexMatrix g2 = gamma(phi, e2, dual_basis(form, e2)).matrix();
    worst = std::max(worst, oracle::rel(g1, g2));
  }
  ComplexMatrix e(2, 2), f(2, 2);
  e << 1, 1, 0, 1;
  f << 1, 1, 0, -1;
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexVector ge = gamma_vector(id, BasisFamily(e), BasisFamily(e));
  const ComplexVector gf = gamma_vector(id, BasisFamily(f), BasisFamily(f));
  ComplexVector we(4), wf(4);
  we << 2, 1, 1, 1;
  wf << 2, -1, -1, 1;
  const bool control = ge == we && gf == wf && e.transpose() * e == f.transpose() * f;
  return {worst <= 1e-9 && control,
          "200 forms, max residual " + sci(worst) + " (tol 1e-9); C^2 control " +
              (control ? "(2,1,1,1) vs (2,-1,-1,1) exact" : "NOT reproduced")};
}

// 3. Weyl basis and the twisted family.
Outcome weyl_identities() {
  Rng rng = make_rng(103);
  const auto w = weyl_basis();
  const auto p = pauli_family();
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const LinearMapRep phi = random_map(2, 2, rng);
    ComplexMatrix sw = ComplexMatrix::Zero(4, 4), sp = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
      sw += oracle::kron(w[i], choikit::apply(phi, w[i]));
      sp += oracle::kron(p[i], choikit::apply(phi, p[i]));
    }
    ComplexMatrix cu = ComplexMatrix::Zero(4, 4), ct = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cu += oracle::kron(oracle::unit(2, i, j), choikit::apply(phi, oracle::unit(2, i, j)));
        ct += oracle::kron(oracle::unit(2, i, j), choikit::apply(phi, oracle::unit(2, j, i)));
      }
    worst = std::max({worst, oracle::rel(sw, cu), oracle::rel(sp, ct)});
  }
  return {worst <= 1e-12, "100 maps, max residual " + sci(worst) + " (tol 1e-12)"};
}

// 4. Orthonormal bases for symmetric forms.
Outcome symmetric_orthonormal() {
  Rng rng = make_rng(104);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Index d = 1 + t % 16;
    const BilinearForm form = random_symmetric_form(d, rng);
    const BasisFamily b = orthonormalize_symmetric(form);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        const Complex pij = pair(form, b.element(i), b.element(j));
        worst = std::max(worst, std::abs(pij - Complex(i == j ? 1.0 : 0.0)));
      }
  }
  return {worst <= 1e-8, "100 forms, d <= 16, max |<e_i,e_j> - delta_ij| " + sci(worst) +
                             " (tol 1e-8)"};
}

// 5. Comparison table rows.
Outcome table_rows() {
  Rng rng = make_rng(105);
  double worst = 0.0;
  std::size_t rows = 0;
  bool flip_row = false, transpose_row = false;
  for (int t = 0; t < 100; ++t) {
    const Index m = pick(rng, 1, 4), n = pick(rng, 1, 4);
    const IdentityReport r = table1_suite(random_map(m, n, rng), rng);
    rows = r.checks.size();
    for (const IdentityCheck& c : r.checks) {
      worst = std::max(worst, c.residual);
      flip_row |= c.name == "C_{phi*} = flip(C_phi)";
      transpose_row |= c.name == "(C_{phi*})^T = C_{phi^star}";
    }
  }
  return {worst <= 1e-10 && rows == 7 && flip_row && transpose_row,
          std::to_string(rows) + " rows x 100 maps, max residual " + sci(worst) + " (tol 1e-10)"};
}

// 6. Adjoint identity and tensor push.
Outcome adjoint_and_push() {
  Rng rng = make_rng(106);
  double adj = 0.0, push = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Index m = pick(rng, 1, 3), n = pick(rng, 1, 3), p = pick(rng, 1, 3),
                q = pick(rng, 1, 3);
    const LinearMapRep phi = random_map(m, n, rng);
    const Isomorphism sigma1 = random_isomorphism(m, rng);
    const Isomorphism tau = random_isomorphism(n, rng);
    const Isomorphism tau1 = random_isomorphism(p, rng);
    const LinearMapRep psi1 = random_map(m, p, rng), psi2 = random_map(n, q, rng);

    // <phi(x), y>_tau = <x, phi^#(y)>_sigma, computed here from scratch.
    const LinearMapRep sharp = adjoint_general(phi, sigma1, tau);
    const ComplexMatrix x = random_matrix(m, m, rng), y = random_matrix(n, n, rng);
    const ComplexMatrix ty = choikit::apply(tau.inverse(), y);
    const ComplexMatrix sy = choikit::apply(sigma1.inverse(), choikit::apply(sharp, y));
    const Complex lhs = (choikit::apply(phi, x).array() * ty.array()).sum();
    const Complex rhs = (x.array() * sy.array()).sum();
    adj = std::max(adj, scalar_residual(lhs, rhs));

    const IdentityReport r = verify_prop52(psi1, psi2, phi, sigma1, tau1);
    push = std::max(push, r.checks.front().residual);
  }
  return {adj <= 1e-9 && push <= 1e-9,
          "100 tuples, adjoint " + sci(adj) + ", tensor push " + sci(push) + " (tol 1e-9)"};
}

// 7. CP maps versus PSD transforms at sigma = Ad_s.
Outcome choi_theorem() {
  Rng rng = make_rng(107);
  int psd_ok = 0, refuted = 0;
  for (int t = 0; t < 200; ++t) {
    const Index m = pick(rng, 2, 3), n = pick(rng, 2, 3);
    const Isomorphism ad(LinearMapRep::ad(random_nonsingular(m, rng)));
    const CertifiedMap cp = random_cp(m, n, rng);
    const ComplexMatrix cs = choi_sigma(cp.map, ad).matrix();
    if (oracle::min_eig(cs) >= -1e-9 * std::max(1.0, cs.norm()) &&
        psd_verdict(cs).status == ConeStatus::Member)
      ++psd_ok;
  }
  for (int t = 0; t < 200; ++t) {
    const Index m = pick(rng, 2, 3), n = pick(rng, 2, 3);
    const Isomorphism ad(LinearMapRep::ad(random_nonsingular(m, rng)));
    const CertifiedMap cp = random_cp(m, n, rng);
    // Subtract a rank-one term along the weakest eigenvector of C_phi, far
    // enough to make that direction negative.
    const ComplexMatrix c = choi(cp.map).matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c);
    const ComplexVector u = es.eigenvectors().col(0);
    const double eps = es.eigenvalues()(0) + 0.05 * es.eigenvalues().maxCoeff();
    const ComplexMatrix pert = c - eps * u * u.adjoint();
    if (oracle::expectation(u, pert).real() >= 0.0) continue;  // not certified
    const LinearMapRep phi = transfer_from_choi(BipartiteOperator(m, n, pert));
    const ConeVerdict v = is_cp(phi);
    const ComplexMatrix cs = choi_sigma(phi, ad).matrix();
    const ConeVerdict vs = psd_verdict(cs);
    if (v.status != ConeStatus::NonMember || vs.status != ConeStatus::NonMember) continue;
    const ComplexVector w = v.witness->col(0), ws = vs.witness->col(0);
    const ComplexMatrix c_phi = oracle::choi(
        [&](const oracle::M& x) { return choikit::apply(phi, x); }, int(m), int(n));
    if (oracle::expectation(w, c_phi).real() < -1e-9 &&
        oracle::expectation(ws, cs).real() < -1e-9)
      ++refuted;
  }
  return {psd_ok == 200 && refuted == 200,
          std::to_string(psd_ok) + "/200 CP maps PSD at 1e-9, " + std::to_string(refuted) +
              "/200 perturbed maps NonMember with re-verified witness"};
}

// 8. The transpose on M_2.
Outcome transpose_instance() {
  const LinearMapRep t = LinearMapRep::transpose(2);
  SearchOptions opts;
  opts.budget = 64;
  const ConeVerdict k1 = is_k_positive(t, 1, opts);
  const ConeVerdict k2 = is_k_positive(t, 2, opts);
  bool ok = k1.status != ConeStatus::NonMember && k2.status == ConeStatus::NonMember;
  double value = 0.0;
  int sr = 0;
  if (k2.witness) {
    const ComplexVector xi = k2.witness->col(0) / k2.witness->col(0).norm();
    value = oracle::expectation(xi, oracle::swap(2)).real();
    sr = oracle::schmidt_rank(xi, 2, 2);
    ok = ok && std::abs(value + 1.0) <= 1e-9 && sr == 2;
  }
  const Isomorphism sigma(t);
  const Theorem43Report r1 = check_theorem43(sigma, 1, 20, opts);
  const Theorem43Report r2 = check_theorem43(sigma, 2, 20, opts);
  ok = ok && r1.prediction == Prediction::Holds && r1.consistent &&
       r2.prediction == Prediction::Fails && r2.consistent;
  return {ok, std::string("k=1 ") + to_string(k1.status) + ", k=2 " + to_string(k2.status) +
                  " with <xi|SWAP|xi> = " + std::to_string(value) + " (Schmidt rank " +
                  std::to_string(sr) + "); correspondence k=1 " +
                  (r1.consistent ? "consistent" : "INCONSISTENT") + ", k=2 failure " +
                  (r2.consistent ? "observed" : "NOT observed")};
}

// 9. Detecting Ad_s.
Outcome ad_detection() {
  Rng rng = make_rng(109);
  int recovered = 0, false_positive = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Index m = 1 + t % 4;
    const ComplexMatrix s = random_nonsingular(m, rng);
    const auto got = detect_ad(LinearMapRep::ad(s));
    if (!got) continue;
    const double d = (LinearMapRep::ad(*got).transfer() - LinearMapRep::ad(s).transfer()).norm();
    worst = std::max(worst, d);
    if (d <= 1e-8) ++recovered;
  }
  for (int t = 0; t < 100; ++t) {
    const Index m = 2 + t % 3;
    const Isomorphism iso = random_non_ad_isomorphism(m, rng);
    if (detect_ad(iso.map())) ++false_positive;
  }
  return {recovered == 100 && false_positive == 0,
          std::to_string(recovered) + "/100 recovered (max ||Ad_s^ - Ad_s|| " + sci(worst) +
              "), " + std::to_string(false_positive) + " false positives in 100"};
}

// 10. Symmetric forms from Ad_s.
Outcome prop46() {
  Rng rng = make_rng(110);
  std::vector<ComplexMatrix> cases;
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, 1;
  cases.push_back(s);
  s << 0, 1, -1, 0;
  cases.push_back(s);
  s << 1, 1, 0, 1;
  cases.push_back(s);
  for (int t = 0; t < 100; ++t) {
    const Index m = 2 + 2 * (t % 2);
    const ComplexMatrix g = random_nonsingular(m, rng);
    ComplexMatrix x = g;
    if (t % 4 == 1) x = g + g.transpose();
    if (t % 4 == 2) x = g - g.transpose();
    if (rank(x, 1e-10) < m) x = random_nonsingular(m, rng);
    cases.push_back(x);
  }
  int ok = 0, sym_side = 0;
  for (const ComplexMatrix& x : cases) {
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    const bool pm = (x - x.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale ||
                    (x + x.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale;
    // Gram of the induced form is the inverse transfer of Ad_s.
    const ComplexMatrix g = LinearMapRep::ad(x).transfer().inverse();
    const bool gs = (g - g.transpose()).cwiseAbs().maxCoeff() <=
                    1e-10 * std::max(1.0, g.cwiseAbs().maxCoeff());
    const Prop46Report r = check_prop46(x);
    if (pm) ++sym_side;
    if (gs == pm && r.form_symmetric == pm && r.holds) ++ok;
  }
  return {ok == int(cases.size()),
          std::to_string(ok) + "/" + std::to_string(cases.size()) +
              " cases satisfy the biconditional (" + std::to_string(sym_side) +
              " with s = +-s^T)"};
}

// 11. Cone chain and duality.
Outcome cone_chain() {
  Rng rng = make_rng(111);
  SearchOptions opts;
  opts.budget = 16;
  std::vector<CertifiedMap> samples;
  for (int t = 0; t < 300; ++t) {
    const Index m = pick(rng, 2, 3), n = pick(rng, 2, 3);
    const Index k = pick(rng, 1, std::min(m, n));
    switch (t % 5) {
      case 0: samples.push_back(random_cp(m, n, rng)); break;
      case 1: samples.push_back(random_spk(m, n, k, rng)); break;
      case 2: samples.push_back(random_cocp(m, n, rng)); break;
      case 3: samples.push_back(random_positive(m, n, rng)); break;
      default: samples.push_back(random_kpositive(m, n, k, rng)); break;
    }
  }
  int chain_violations = 0, certificate_violations = 0;
  for (const CertifiedMap& s : samples) {
    opts.seed = static_cast<std::uint64_t>(&s - samples.data());
    const Index kmax = std::min(s.map.dim_in(), s.map.dim_out());
    // SP_1 < ... < SP_kmax = CP = P_kmax < ... < P_1
    std::vector<ConeStatus> chain;
    for (Index k = 1; k < kmax; ++k) chain.push_back(is_k_superpositive(s.map, k, opts).status);
    const ConeStatus cp = is_cp(s.map).status;
    chain.push_back(cp);
    for (Index k = kmax - 1; k >= 1; --k) chain.push_back(is_k_positive(s.map, k, opts).status);
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j)
        if (chain[i] == ConeStatus::Member && chain[j] == ConeStatus::NonMember)
          ++chain_violations;
    ConeStatus own = ConeStatus::Unknown;
    switch (s.cone) {
      case SampleCone::CP: own = cp; break;
      case SampleCone::SPk: own = is_k_superpositive(s.map, s.k, opts).status; break;
      case SampleCone::CoCP: own = is_cp(compose(s.map, LinearMapRep::transpose(s.map.dim_in()))).status; break;
      case SampleCone::Positive: own = is_k_positive(s.map, 1, opts).status; break;
      case SampleCone::KPositive: own = is_k_positive(s.map, s.k, opts).status; break;
    }
    if (own == ConeStatus::NonMember) ++certificate_violations;
  }
  // Duality: <C_phi, C_psi> >= 0 for phi in SP_k and psi in P_k.
  double worst = std::numeric_limits<double>::infinity();
  int pairs = 0;
  for (const CertifiedMap& a : samples) {
    if (a.cone != SampleCone::SPk) continue;
    for (const CertifiedMap& b : samples) {
      if (b.map.dim_in() != a.map.dim_in() || b.map.dim_out() != a.map.dim_out()) continue;
      const bool in_pk = (b.cone == SampleCone::CP) || (b.cone == SampleCone::SPk) ||
                         (b.cone == SampleCone::Positive && a.k == 1) ||
                         (b.cone == SampleCone::KPositive && b.k >= a.k);
      if (!in_pk) continue;
      const ComplexMatrix ca = choi(a.map).matrix(), cb = choi(b.map).matrix();
      const Complex p = pairing(a.map, b.map);
      worst = std::min(worst, p.real() / (ca.norm() * cb.norm()));
      ++pairs;
    }
  }
  return {chain_violations == 0 && certificate_violations == 0 && worst >= -1e-9,
          "300 samples, " + std::to_string(chain_violations) + " chain violations, " +
              std::to_string(certificate_violations) + " certificate conflicts; " +
              std::to_string(pairs) + " dual pairs, min scaled pairing " + sci(worst) +
              " (tol -1e-9)"};
}

// 12. CLI determinism.
Outcome cli_determinism(const std::string& cli) {
  if (cli.empty()) return {false, "CLI path not given"};
  const auto dir = std::filesystem::temp_directory_path() / "choikit_acceptance";
  std::filesystem::create_directories(dir);
  const auto t0 = Clock::now();
  std::string out[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("run" + std::to_string(i) + ".json");
    std::filesystem::remove(path);
    const std::string cmd =
        "\"" + cli + "\" verify --suite all --seed 7 --quiet --out \"" + path.string() + "\"";
    codes[i] = std::system(cmd.c_str());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    out[i] = ss.str();
  }
  const double secs = seconds_since(t0);
  const bool same = !out[0].empty() && out[0] == out[1];
  return {same && codes[0] == 0 && codes[1] == 0 && secs / 2 < 120.0,
          std::string(same ? "byte-identical" : "DIFFERENT") + " reports (" +
              std::to_string(out[0].size()) + " bytes), exit codes " + std::to_string(codes[0]) +
              "/" + std::to_string(codes[1]) + ", " + std::to_string(secs / 2).substr(0, 5) +
              " s per run (target < 120 s)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  report(1, "Choi dual-path identity", choi_dual_path);
  report(2, "Gamma invariance and C^2 control", gamma_invariance);
  report(3, "Weyl basis identities", weyl_identities);
  report(4, "orthonormal basis for symmetric forms", symmetric_orthonormal);
  report(5, "comparison table rows", table_rows);
  report(6, "adjoint and tensor-push identities", adjoint_and_push);
  report(7, "CP maps versus PSD transforms at Ad_s", choi_theorem);
  report(8, "transpose on M_2", transpose_instance);
  report(9, "Ad_s detection", ad_detection);
  report(10, "symmetric forms from Ad_s", prop46);
  report(11, "cone chain and duality", cone_chain);
  report(12, "CLI determinism", [&] { return cli_determinism(cli); });
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
