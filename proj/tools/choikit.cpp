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

// choikit: command-line front end.
//
// Exit codes: 0 member / success, 1 nonmember, 4 unknown, 2 parse or usage
// error, 3 dimension mismatch, 5 identity failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "choikit/cones.hpp"
#include "choikit/json_io.hpp"
#include "choikit/maps.hpp"
#include "choikit/sampling.hpp"
#include "choikit/suites.hpp"

using namespace choikit;

namespace {

enum Exit : int {
  kMember = 0,
  kNonMember = 1,
  kParse = 2,
  kDims = 3,
  kUnknown = 4,
  kIdentityFailure = 5,
};

struct Options {
  std::optional<std::uint64_t> seed;
  Index trials = 20;
  Index budget = 64;
  Index m = 0;
  Index n = 0;
  Index k = 0;
  std::optional<double> tol;
  std::string out;
  bool quiet = false;

  std::string map_file;
  std::string sigma = "id";
  std::string s_file;
  std::string cone;
  std::string suite = "all";
  std::string kind;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("CHOIKIT_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const unsigned long long v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, std::string("CHOIKIT_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + o.out);
  f << text;
}

void say(const Options& o, const std::string& text) {
  if (!o.quiet) std::cerr << text;
}

LinearMapRep load_sigma(const Options& o, Index dim) {
  if (o.sigma == "id") return LinearMapRep::identity(dim);
  if (o.sigma == "transpose") return LinearMapRep::transpose(dim);
  if (o.sigma == "ad") {
    if (o.s_file.empty())
      throw Error(ErrorKind::Parse, "--sigma ad needs --s <matrix file>");
    return LinearMapRep::ad(matrix_from_json(read_json_file(o.s_file)));
  }
  return map_from_json(read_json_file(o.sigma), dim);
}

int cmd_transform(const Options& o) {
  const LinearMapRep phi = map_from_json(read_json_file(o.map_file));
  const LinearMapRep sigma_map = load_sigma(o, phi.dim_in());
  if (sigma_map.dim_in() != sigma_map.dim_out() ||
      sigma_map.dim_out() != phi.dim_in())
    throw Error(ErrorKind::DimensionMismatch,
                "sigma maps M_" + std::to_string(sigma_map.dim_in()) + " -> M_" +
                    std::to_string(sigma_map.dim_out()) +
                    " but the map has domain M_" + std::to_string(phi.dim_in()));
  const Isomorphism sigma(sigma_map);
  emit(o, dump(operator_to_json(choi_sigma(phi, sigma))));
  return kMember;
}

int cmd_check(const Options& o) {
  const LinearMapRep phi = map_from_json(read_json_file(o.map_file));
  SearchOptions search;
  search.seed = resolve_seed(o);
  search.budget = o.budget;
  CheckReport report;
  report.seed = search.seed;
  report.budget = o.budget;
  const Index k = o.k > 0 ? o.k : 1;
  if (o.cone == "cp") {
    report.cone = {ConeKind::CP, 0};
    report.verdict = is_cp(phi);
  } else if (o.cone == "p") {
    report.cone = {ConeKind::P, k};
    report.verdict = is_k_positive(phi, k, search);
  } else if (o.cone == "sp") {
    report.cone = {ConeKind::SP, k};
    report.verdict = is_k_superpositive(phi, k, search);
  } else if (o.cone == "ppt") {
    report.cone = {ConeKind::PPT, 0};
    report.verdict = is_ppt(choi(phi));
  } else {
    throw Error(ErrorKind::Parse, "unknown cone \"" + o.cone + "\"");
  }
  emit(o, dump(report_to_json(report)));
  say(o, report.cone.name() + ": " + to_string(report.verdict.status) + " (" +
             report.verdict.detail + ")\n");
  switch (report.verdict.status) {
    case ConeStatus::Member: return kMember;
    case ConeStatus::NonMember: return kNonMember;
    case ConeStatus::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_verify(const Options& o, const std::string& sigma) {
  SuiteConfig cfg;
  cfg.seed = resolve_seed(o);
  cfg.trials = o.trials;
  cfg.budget = o.budget;
  cfg.m = o.m;
  cfg.n = o.n;
  cfg.k = o.k;
  cfg.tol = o.tol;
  cfg.sigma = sigma;
  const SuiteResult result = run_suite(o.suite, cfg);
  say(o, suite_table(result));
  emit(o, dump(suite_report(o.suite, cfg, result)));
  if (result.pass()) return kMember;
  const std::string path =
      (o.out.empty() ? std::string("choikit") : o.out) + ".repro.json";
  std::ofstream f(path, std::ios::binary);
  f << dump(*result.reproducer);
  say(o, "identity failure; reproducer written to " + path + "\n");
  return kIdentityFailure;
}

Json kraus_json(const std::vector<ComplexMatrix>& ops) {
  Json a = Json::array();
  for (const ComplexMatrix& v : ops) a.push_back(matrix_to_json(v));
  return a;
}

int cmd_gen(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  Rng rng = make_rng(seed);
  const Index m = o.m > 0 ? o.m : 2;
  const Index n = o.n > 0 ? o.n : m;
  const Index k = o.k > 0 ? o.k : 1;
  Json meta;
  meta["kind"] = o.kind;
  meta["seed"] = seed;
  auto certified = [&](const CertifiedMap& c) {
    meta["cone"] = to_string(c.cone);
    meta["k"] = c.k;
    meta["certificate"] = c.certificate;
    if (!c.kraus.empty()) meta["kraus"] = kraus_json(c.kraus);
    return dump(map_to_json(c.map, meta));
  };
  if (o.kind == "cp") {
    emit(o, certified(random_cp(m, n, rng)));
  } else if (o.kind == "spk") {
    if (k > std::min(m, n))
      throw Error(ErrorKind::Parse, "--k must not exceed min(m, n)");
    emit(o, certified(random_spk(m, n, k, rng)));
  } else if (o.kind == "positive") {
    emit(o, certified(random_positive(m, n, rng)));
  } else if (o.kind == "iso") {
    const Isomorphism iso = random_isomorphism(m, rng);
    meta["certificate"] = "transfer has full rank " + std::to_string(m * m);
    emit(o, dump(map_to_json(iso.map(), meta)));
  } else if (o.kind == "ad") {
    const ComplexMatrix s = random_nonsingular(m, rng);
    meta["certificate"] = "x -> s* x s with nonsingular s";
    meta["s"] = matrix_to_json(s);
    emit(o, dump(map_to_json(LinearMapRep::ad(s), meta)));
  } else if (o.kind == "form") {
    const BilinearForm form = random_symmetric_form(m * m, rng);
    Json j = form_to_json(form);
    meta["certificate"] = "G^T G + shift, symmetric, rank re-checked";
    j["metadata"] = meta;
    emit(o, dump(j));
  } else {
    throw Error(ErrorKind::Parse, "unknown kind \"" + o.kind + "\"");
  }
  return kMember;
}

int exit_for(const Error& e) {
  return e.kind() == ErrorKind::DimensionMismatch ? kDims : kParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"choikit: Choi matrices, bilinear forms and positivity cones"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed_value = 0;
  std::string sigma_suite;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_value, "random seed (default: $CHOIKIT_SEED, then 0)");
    sub->add_option("--trials", o.trials, "random instances per suite")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "see-saw random starts")->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "domain dimension")->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n, "codomain dimension")->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k, "cone level")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "output file (default: stdout)");
    sub->add_flag("--quiet", o.quiet, "suppress diagnostics on stderr");
  };

  CLI::App* transform = app.add_subcommand("transform", "write C^sigma_phi");
  common(transform);
  transform->add_option("--map", o.map_file, "map JSON")->required();
  transform->add_option("--sigma", o.sigma, "id, transpose, ad or a map JSON file");
  transform->add_option("--s", o.s_file, "matrix JSON for --sigma ad");

  CLI::App* check = app.add_subcommand("check", "cone membership of a map");
  common(check);
  check->add_option("--map", o.map_file, "map JSON")->required();
  check->add_option("--cone", o.cone, "cp, p, sp or ppt")
      ->required()
      ->check(CLI::IsMember({"cp", "p", "sp", "ppt"}));

  CLI::App* verify = app.add_subcommand("verify", "run identity and cone suites");
  common(verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suites));
  verify->add_option("--sigma", sigma_suite, "thm43 isomorphism: transpose, ad or id")
      ->check(CLI::IsMember({"transpose", "ad", "id"}));

  CLI::App* gen = app.add_subcommand("gen", "seeded certified samples");
  common(gen);
  gen->add_option("--kind", o.kind, "cp, spk, positive, iso, ad or form")
      ->required()
      ->check(CLI::IsMember({"cp", "spk", "positive", "iso", "ad", "form"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  for (CLI::App* sub : {transform, check, verify, gen})
    if (sub->parsed() && sub->count("--seed") > 0) o.seed = seed_value;

  try {
    if (transform->parsed()) return cmd_transform(o);
    if (check->parsed()) return cmd_check(o);
    if (verify->parsed()) return cmd_verify(o, sigma_suite);
    if (gen->parsed()) return cmd_gen(o);
  } catch (const Error& e) {
    std::cerr << "choikit: " << e.what() << "\n";
    return exit_for(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "choikit: malformed JSON: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
