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

#include "choikit/json_io.hpp"
#include "choikit/sampling.hpp"

using namespace choikit;

TEST_CASE("matrix format") {
  ComplexMatrix x(1, 2);
  x << Complex(1.5, -2.0), Complex(0.0, 3.0);
  const Json j = matrix_to_json(x);
  CHECK(dump(j) == "{\"rows\":1,\"cols\":2,\"entries\":[[1.5,-2.0],[0.0,3.0]]}\n");
}

TEST_CASE("exact round trips") {
  Rng rng = make_rng(9);
  const ComplexMatrix x = random_matrix(3, 4, rng) * 1e-7;
  CHECK(matrix_from_json(Json::parse(dump(matrix_to_json(x)))) == x);

  const ComplexVector v = random_vector(5, rng);
  CHECK(vector_from_json(Json::parse(dump(vector_to_json(v)))) == v);

  const LinearMapRep phi = random_map(2, 3, rng);
  const LinearMapRep back = map_from_json(Json::parse(dump(map_to_json(phi))));
  CHECK(back.dim_in() == 2);
  CHECK(back.dim_out() == 3);
  CHECK(back.transfer() == phi.transfer());

  const BipartiteOperator c(2, 3, random_matrix(6, 6, rng));
  const BipartiteOperator c2 = operator_from_json(Json::parse(dump(operator_to_json(c))));
  CHECK(c2.dim_a() == 2);
  CHECK(c2.matrix() == c.matrix());

  const BilinearForm f = random_form(4, rng);
  CHECK(form_from_json(Json::parse(dump(form_to_json(f)))).gram() == f.gram());

  for (Index d : {3, 4}) {
    const BasisFamily b = random_basis(d, rng);
    CHECK(basis_from_json(Json::parse(dump(basis_to_json(b)))).coordinates() == b.coordinates());
  }
}

TEST_CASE("named built-ins") {
  CHECK(map_from_json(Json("id"), 3).transfer() == LinearMapRep::identity(3).transfer());
  CHECK(map_from_json(Json::parse(R"({"name":"transpose","dim":2})")).transfer() ==
        LinearMapRep::transpose(2).transfer());
  ComplexMatrix s(2, 2);
  s << 1, 2, 3, 4;
  Json j;
  j["name"] = "ad";
  j["s"] = matrix_to_json(s);
  CHECK(map_from_json(j).transfer() == LinearMapRep::ad(s).transfer());
}

TEST_CASE("errors carry the right kind") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":[[1,0]]})")); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":["x"]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { matrix_from_json(Json::parse(R"({"cols":1})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          map_from_json(Json::parse(
              R"({"dimIn":2,"dimOut":2,"transfer":{"rows":1,"cols":1,"entries":[[1,0]]}})"));
        }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { map_from_json(Json("nope"), 2); }) == ErrorKind::Parse);
  CHECK(kind_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::Parse);
}

TEST_CASE("report format") {
  CheckReport r;
  r.cone = {ConeKind::SP, 1};
  r.verdict.status = ConeStatus::NonMember;
  r.verdict.witness = ComplexMatrix::Identity(2, 1);
  r.verdict.value = -1.0;
  r.seed = 7;
  r.budget = 64;
  const Json j = report_to_json(r);
  CHECK(j["cone"] == "SP");
  CHECK(j["k"] == 1);
  CHECK(j["status"] == "nonmember");
  CHECK(j["witness"].size() == 2);
  CHECK(j["value"] == -1.0);
  CHECK(j["seed"] == 7);
  CHECK(j["budget"] == 64);
}
