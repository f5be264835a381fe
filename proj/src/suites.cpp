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

#include "choikit/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "choikit/identities.hpp"
#include "choikit/maps.hpp"
#include "choikit/sampling.hpp"

namespace choikit {

namespace {

/// Stream offsets keep the suites independent of each other.
enum SuiteStream : std::uint64_t {
  kTable1 = 1u << 20,
  kProp51 = 2u << 20,
  kProp52 = 3u << 20,
  kThm33 = 4u << 20,
  kThm43 = 5u << 20,
  kProp46 = 6u << 20,
};

class Recorder {
 public:
  Recorder(std::string suite, const SuiteConfig& config, SuiteResult& out)
      : suite_(std::move(suite)), config_(config), out_(out) {}

  void record(const std::string& name, double residual, double tolerance,
              Index trial, const std::function<Json()>& instance) {
    if (config_.tol) tolerance = *config_.tol;
    SuiteRow& row = find(name, tolerance);
    ++row.instances;
    row.max_residual = std::max(row.max_residual, residual);
    if (!(residual <= tolerance)) {
      ++row.failures;
      if (!out_.reproducer) {
        Json r;
        r["suite"] = suite_;
        r["identity"] = name;
        r["trial"] = trial;
        r["residual"] = residual;
        r["tolerance"] = tolerance;
        r["seed"] = config_.seed;
        r["trials"] = config_.trials;
        r["budget"] = config_.budget;
        r["instance"] = instance();
        std::ostringstream cmd;
        cmd << "choikit verify --suite " << suite_ << " --seed " << config_.seed
            << " --trials " << config_.trials << " --budget " << config_.budget;
        if (config_.m) cmd << " --m " << config_.m;
        if (config_.n) cmd << " --n " << config_.n;
        if (config_.k) cmd << " --k " << config_.k;
        if (!config_.sigma.empty()) cmd << " --sigma " << config_.sigma;
        if (config_.tol) cmd << " --tol " << *config_.tol;
        r["replay"] = cmd.str();
        out_.reproducer = std::move(r);
      }
    }
  }

  /// Pass/fail checks recorded as residual 0 or 1 against tolerance 0.
  void expect(const std::string& name, bool ok, Index trial,
              const std::function<Json()>& instance) {
    SuiteRow& row = find(name, 0.0);
    ++row.instances;
    if (!ok) {
      row.max_residual = 1.0;
      ++row.failures;
      if (!out_.reproducer) {
        Json r;
        r["suite"] = suite_;
        r["identity"] = name;
        r["trial"] = trial;
        r["seed"] = config_.seed;
        r["trials"] = config_.trials;
        r["budget"] = config_.budget;
        r["instance"] = instance();
        out_.reproducer = std::move(r);
      }
    }
  }

 private:
  SuiteRow& find(const std::string& name, double tolerance) {
    for (SuiteRow& row : out_.rows)
      if (row.suite == suite_ && row.name == name) return row;
    out_.rows.push_back({suite_, name, 0.0, tolerance, 0, 0});
    return out_.rows.back();
  }

  std::string suite_;
  const SuiteConfig& config_;
  SuiteResult& out_;
};

Index pick_dim(Index fixed, Index lo, Index hi, Rng& rng) {
  if (fixed > 0) return fixed;
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

Json iso_json(const Isomorphism& s) { return map_to_json(s.map()); }

void run_table1(const SuiteConfig& cfg, SuiteResult& out) {
  Recorder rec("table1", cfg, out);
  for (Index t = 0; t < cfg.trials; ++t) {
    Rng rng = make_rng(cfg.seed, kTable1 + static_cast<std::uint64_t>(t));
    const Index m = pick_dim(cfg.m, 2, 4, rng);
    const Index n = pick_dim(cfg.n, 2, 4, rng);
    const LinearMapRep phi = random_map(m, n, rng);
    for (const IdentityCheck& c : table1_suite(phi, rng).checks)
      rec.record(c.name, c.residual, c.tolerance, t, [&] { return map_to_json(phi); });
  }
}

ComplexMatrix choi_sigma_by_definition(const LinearMapRep& phi,
                                       const Isomorphism& sigma) {
  const Index m = phi.dim_in(), n = phi.dim_out();
  ComplexMatrix c = ComplexMatrix::Zero(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const ComplexMatrix e = matrix_unit(m, i, j);
      c += kron(e, choikit::apply(phi, choikit::apply(sigma.map(), e)));
    }
  return c;
}

void run_prop51(const SuiteConfig& cfg, SuiteResult& out) {
  Recorder rec("prop51", cfg, out);
  for (Index t = 0; t < cfg.trials; ++t) {
    Rng rng = make_rng(cfg.seed, kProp51 + static_cast<std::uint64_t>(t));
    const Index m = pick_dim(cfg.m, 2, 3, rng);
    const Index n = pick_dim(cfg.n, 2, 3, rng);
    const LinearMapRep phi = random_map(m, n, rng);
    const Isomorphism sigma = random_isomorphism(m, rng);
    const Isomorphism tau = random_isomorphism(n, rng);
    auto instance = [&] {
      Json j;
      j["phi"] = map_to_json(phi);
      j["sigma"] = iso_json(sigma);
      j["tau"] = iso_json(tau);
      return j;
    };
    const ComplexMatrix direct = choi_sigma_by_definition(phi, sigma);
    rec.record("C^sigma_phi: definition = C_{phi o sigma}",
               relative_residual(direct, choi_sigma(phi, sigma).matrix()),
               kTolIdentity, t, instance);
    rec.record("C^sigma_phi: definition = (id x phi)(C_sigma)",
               relative_residual(direct, choi_sigma_via_tensor(phi, sigma).matrix()),
               kTolIdentity, t, instance);
    for (const IdentityCheck& c : verify_prop51(phi, sigma, tau, rng).checks)
      rec.record(c.name, c.residual, c.tolerance, t, instance);
  }
}

void run_prop52(const SuiteConfig& cfg, SuiteResult& out) {
  Recorder rec("prop52", cfg, out);
  for (Index t = 0; t < cfg.trials; ++t) {
    Rng rng = make_rng(cfg.seed, kProp52 + static_cast<std::uint64_t>(t));
    const Index m = pick_dim(cfg.m, 2, 3, rng);
    const Index n = pick_dim(cfg.n, 2, 3, rng);
    const Index p = pick_dim(0, 2, 3, rng);
    const Index q = pick_dim(0, 2, 3, rng);
    const LinearMapRep psi1 = random_map(m, p, rng);
    const LinearMapRep psi2 = random_map(n, q, rng);
    const LinearMapRep phi = random_map(m, n, rng);
    const Isomorphism sigma1 = random_isomorphism(m, rng);
    const Isomorphism tau1 = random_isomorphism(p, rng);
    auto instance = [&] {
      Json j;
      j["psi1"] = map_to_json(psi1);
      j["psi2"] = map_to_json(psi2);
      j["phi"] = map_to_json(phi);
      j["sigma1"] = iso_json(sigma1);
      j["tau1"] = iso_json(tau1);
      return j;
    };
    for (const IdentityCheck& c :
         verify_prop52(psi1, psi2, phi, sigma1, tau1).checks)
      rec.record(c.name, c.residual, c.tolerance, t, instance);
  }
}

ComplexMatrix sum_kron(const std::vector<ComplexMatrix>& a,
                       const std::vector<ComplexMatrix>& b,
                       const LinearMapRep& phi) {
  ComplexMatrix c = ComplexMatrix::Zero(a[0].rows() * phi.dim_out(),
                                        a[0].cols() * phi.dim_out());
  for (std::size_t i = 0; i < a.size(); ++i)
    c += kron(a[i], choikit::apply(phi, b[i]));
  return c;
}

void run_thm33(const SuiteConfig& cfg, SuiteResult& out) {
  Recorder rec("thm33", cfg, out);

  // Same Gram data for {e_i} and {f_i} without pair(e_i, f_j) = delta_ij:
  // the tensor sums must differ.
  {
    ComplexMatrix e(2, 2), f(2, 2);
    e << 1, 1, 0, 1;
    f << 1, 1, 0, -1;
    const BasisFamily eb(e), fb(f);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexVector ge = gamma_vector(id, eb, eb);
    const ComplexVector gf = gamma_vector(id, fb, fb);
    ComplexVector want_e(4), want_f(4);
    want_e << 2, 1, 1, 1;
    want_f << 2, -1, -1, 1;
    const bool grams_equal = e.transpose() * e == f.transpose() * f;
    const bool ok = grams_equal && ge == want_e && gf == want_f && ge != gf;
    Json note;
    note["control"] = "C^2 bases with equal Gram data";
    note["sumE"] = vector_to_json(ge);
    note["sumF"] = vector_to_json(gf);
    note["detected"] = ok;
    out.notes.push_back(note);
    rec.expect("C^2 control: sum e_i(x)e_i != sum f_i(x)f_i", ok, -1,
               [&] { return note; });
  }

  for (Index t = 0; t < cfg.trials; ++t) {
    Rng rng = make_rng(cfg.seed, kThm33 + static_cast<std::uint64_t>(t));
    const Index m = pick_dim(cfg.m, 2, 3, rng);
    const Index n = pick_dim(cfg.n, 2, 3, rng);
    const Index d = m * m;
    const BilinearForm form = random_form(d, rng);
    const LinearMapRep phi = random_map(m, n, rng);
    const BasisFamily e1 = random_basis(d, rng);
    const BasisFamily e2 = random_basis(d, rng);
    const BasisFamily f1 = dual_basis(form, e1);
    const BasisFamily f2 = dual_basis(form, e2);
    auto instance = [&] {
      Json j;
      j["form"] = form_to_json(form);
      j["phi"] = map_to_json(phi);
      j["e1"] = basis_to_json(e1);
      j["e2"] = basis_to_json(e2);
      return j;
    };
    const BipartiteOperator g1 = gamma(phi, e1, f1);
    const BipartiteOperator g2 = gamma(phi, e2, f2);
    rec.record("gamma independent of the dual basis pair",
               relative_residual(g1.matrix(), g2.matrix()), 1e-9, t, instance);
    rec.record("inverse_choi(gamma) = phi",
               relative_residual(inverse_choi(g1, form).transfer(), phi.transfer()),
               1e-9, t, instance);

    const Index ds = 1 + t % 16;
    const BilinearForm sym = random_symmetric_form(ds, rng);
    const BasisFamily on = orthonormalize_symmetric(sym);
    const ComplexMatrix& q = on.coordinates();
    const double defect =
        max_abs(ComplexMatrix(q.transpose() * sym.gram() * q) -
                ComplexMatrix::Identity(ds, ds));
    rec.record("symmetric form: pair(e_i, e_j) = delta_ij", defect, 1e-8, t,
               [&] { return form_to_json(sym); });

    const LinearMapRep psi = random_map(2, 2, rng);
    const ComplexMatrix c = choi(psi).matrix();
    const ComplexMatrix ct = sum_kron(matrix_unit_basis(2),
                                      transposed_matrix_unit_basis(2), psi);
    const auto w = weyl_basis();
    const auto p = pauli_family();
    rec.record("Weyl basis: sum E_i (x) phi(E_i) = C_phi",
               relative_residual(sum_kron(w, w, psi), c), 1e-12, t,
               [&] { return map_to_json(psi); });
    rec.record("E_1..E_3, iE_4: sum = sum e_ij (x) phi(e_ji)",
               relative_residual(sum_kron(p, p, psi), ct), 1e-12, t,
               [&] { return map_to_json(psi); });
  }
}

void run_thm43(const SuiteConfig& cfg, SuiteResult& out) {
  Recorder rec("thm43", cfg, out);
  struct Case {
    std::string label;
    Isomorphism sigma;
  };
  std::vector<Case> cases;
  Rng rng = make_rng(cfg.seed, kThm43);
  const Index m = cfg.m > 0 ? cfg.m : 2;
  if (cfg.sigma.empty() || cfg.sigma == "transpose")
    cases.push_back({"transpose", Isomorphism(LinearMapRep::transpose(m))});
  if (cfg.sigma.empty() || cfg.sigma == "ad")
    cases.push_back({"ad", Isomorphism(LinearMapRep::ad(random_nonsingular(m, rng)))});
  if (cfg.sigma.empty()) {
    // Ad_s o t is never k-positive for k >= 2; spot-checked, not proven.
    const LinearMapRep adt = compose(LinearMapRep::ad(random_nonsingular(m, rng)),
                                     LinearMapRep::transpose(m));
    cases.push_back({"ad_transpose", Isomorphism(adt)});
  }
  if (cfg.sigma == "id")
    cases.push_back({"id", Isomorphism(LinearMapRep::identity(m))});
  if (cases.empty())
    throw Error(ErrorKind::InvalidArgument, "unknown sigma \"" + cfg.sigma + "\"");

  SearchOptions opts;
  opts.budget = cfg.budget;
  Index index = 0;
  for (const Case& c : cases) {
    const Index k_lo = cfg.k > 0 ? cfg.k : 1;
    const Index k_hi = cfg.k > 0 ? cfg.k : m;
    for (Index k = k_lo; k <= k_hi; ++k, ++index) {
      opts.seed = cfg.seed + static_cast<std::uint64_t>(index);
      const Theorem43Report r = check_theorem43(c.sigma, k, cfg.trials, opts);
      Json note;
      note["sigma"] = c.label;
      note["m"] = m;
      note["k"] = k;
      note["sigmaKPositive"] = to_string(r.sigma_verdict.status);
      note["inverseKPositive"] = to_string(r.inverse_verdict.status);
      note["prediction"] = r.prediction == Prediction::Holds ? "holds" : "fails";
      note["certified"] = r.prediction_certified;
      note["samples"] = r.samples;
      note["sampleViolations"] = r.sample_violations;
      note["probeViolation"] = r.probe_violation;
      note["consistent"] = r.consistent;
      note["detail"] = r.detail;
      out.notes.push_back(note);
      rec.expect("sigma=" + c.label + " m=" + std::to_string(m) +
                     " k=" + std::to_string(k) + ": consistent",
                 r.consistent, static_cast<Index>(index), [&] {
                   Json j;
                   j["sigma"] = iso_json(c.sigma);
                   j["k"] = k;
                   j["report"] = note;
                   return j;
                 });
    }
  }
}

void run_prop46(const SuiteConfig& cfg, SuiteResult& out) {
  Recorder rec("prop46", cfg, out);
  auto check = [&](const ComplexMatrix& s, Index trial) {
    const Prop46Report r = check_prop46(s);
    rec.expect("gram symmetric iff s = +-s^T", r.form_symmetric == (r.s_symmetric || r.s_antisymmetric),
               trial, [&] { return matrix_to_json(s); });
    rec.expect("(Ad_s)^T = Ad_s iff s = +-s^T", r.holds, trial,
               [&] { return matrix_to_json(s); });
  };
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, 1;
  check(s, -1);
  s << 0, 1, -1, 0;
  check(s, -1);
  s << 1, 1, 0, 1;
  check(s, -1);
  for (Index t = 0; t < cfg.trials; ++t) {
    Rng rng = make_rng(cfg.seed, kProp46 + static_cast<std::uint64_t>(t));
    ComplexMatrix x;
    switch (t % 3) {
      case 0:
        x = random_nonsingular(pick_dim(cfg.m, 2, 4, rng), rng);
        break;
      case 1: {
        const Index d = pick_dim(cfg.m, 2, 4, rng);
        do {
          const ComplexMatrix g = random_matrix(d, d, rng);
          x = g + g.transpose();
        } while (rank(x, 1e-10) < d);
        break;
      }
      default: {
        // Odd-order antisymmetric matrices are singular.
        Index d = cfg.m > 0 ? cfg.m : 2 * pick_dim(0, 1, 2, rng);
        if (d % 2) d += 1;
        do {
          const ComplexMatrix g = random_matrix(d, d, rng);
          x = g - g.transpose();
        } while (rank(x, 1e-10) < d);
      }
    }
    check(x, t);
  }
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SuiteRow& r) { return r.failures == 0; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table1", "prop51", "prop52",
                                                 "thm33",  "thm43",  "prop46"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteResult out;
  if (name == "all") {
    for (const std::string& s : suite_names()) {
      SuiteResult part = run_suite(s, config);
      out.rows.insert(out.rows.end(), part.rows.begin(), part.rows.end());
      out.notes.insert(out.notes.end(), part.notes.begin(), part.notes.end());
      if (!out.reproducer && part.reproducer) out.reproducer = part.reproducer;
    }
    return out;
  }
  if (name == "table1") run_table1(config, out);
  else if (name == "prop51") run_prop51(config, out);
  else if (name == "prop52") run_prop52(config, out);
  else if (name == "thm33") run_thm33(config, out);
  else if (name == "thm43") run_thm43(config, out);
  else if (name == "prop46") run_prop46(config, out);
  else throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + name + "\"");
  return out;
}

Json suite_report(const std::string& name, const SuiteConfig& config,
                  const SuiteResult& result) {
  Json j;
  j["suite"] = name;
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["budget"] = config.budget;
  j["pass"] = result.pass();
  Json rows = Json::array();
  for (const SuiteRow& r : result.rows) {
    Json row;
    row["suite"] = r.suite;
    row["identity"] = r.name;
    row["maxResidual"] = r.max_residual;
    row["tolerance"] = r.tolerance;
    row["instances"] = r.instances;
    row["failures"] = r.failures;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["notes"] = result.notes;
  return j;
}

std::string suite_table(const SuiteResult& result) {
  std::size_t width = 8;
  for (const SuiteRow& r : result.rows)
    width = std::max(width, r.suite.size() + r.name.size() + 2);
  std::ostringstream os;
  os << std::string(width - 8, ' ') << "identity  max residual   tolerance      n  fail\n";
  for (const SuiteRow& r : result.rows) {
    const std::string label = r.suite + ": " + r.name;
    os << std::string(width - label.size(), ' ') << label << "  "
       << fixed(r.max_residual) << "   " << fixed(r.tolerance) << "  ";
    std::string n = std::to_string(r.instances), f = std::to_string(r.failures);
    os << std::string(n.size() < 5 ? 5 - n.size() : 0, ' ') << n
       << std::string(f.size() < 6 ? 6 - f.size() : 0, ' ') << f << "\n";
  }
  return os.str();
}

}  // namespace choikit
