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

#include "choikit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace choikit {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::Parse, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

Index positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    parse_error(std::string("\"") + key + "\" must be a positive integer");
  return static_cast<Index>(v.get<std::int64_t>());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_error("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json finite_or_null(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& x) {
  Json entries = Json::array();
  for (Index i = 0; i < x.rows(); ++i)
    for (Index k = 0; k < x.cols(); ++k) entries.push_back(complex_to_json(x(i, k)));
  Json j;
  j["rows"] = x.rows();
  j["cols"] = x.cols();
  j["entries"] = std::move(entries);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Index rows = positive_int(j, "rows");
  const Index cols = positive_int(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) parse_error("\"entries\" must be an array");
  if (static_cast<Index>(entries.size()) != rows * cols)
    throw Error(ErrorKind::DimensionMismatch,
                "matrix has " + std::to_string(entries.size()) +
                    " entries, expected " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  ComplexMatrix x(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k)
      x(i, k) = complex_from_json(entries[static_cast<std::size_t>(i * cols + k)]);
  require_finite(x, "matrix");
  return x;
}

Json vector_to_json(const ComplexVector& v) {
  Json j = Json::array();
  for (Index i = 0; i < v.size(); ++i) j.push_back(complex_to_json(v(i)));
  return j;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("a vector is a non-empty array of [re, im] pairs");
  ComplexVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i)
    v(i) = complex_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

Json operator_to_json(const BipartiteOperator& c) {
  Json j;
  j["dimA"] = c.dim_a();
  j["dimB"] = c.dim_b();
  j["matrix"] = matrix_to_json(c.matrix());
  return j;
}

BipartiteOperator operator_from_json(const Json& j) {
  const Index a = positive_int(j, "dimA");
  const Index b = positive_int(j, "dimB");
  return BipartiteOperator(a, b, matrix_from_json(field(j, "matrix")));
}

Json form_to_json(const BilinearForm& form) {
  Json j;
  j["dim"] = form.dim();
  j["gram"] = matrix_to_json(form.gram());
  return j;
}

BilinearForm form_from_json(const Json& j) {
  const Index d = positive_int(j, "dim");
  ComplexMatrix g = matrix_from_json(field(j, "gram"));
  if (g.rows() != d || g.cols() != d)
    throw Error(ErrorKind::DimensionMismatch,
                "gram is " + std::to_string(g.rows()) + "x" +
                    std::to_string(g.cols()) + ", dim is " + std::to_string(d));
  return BilinearForm(std::move(g));
}

Json basis_to_json(const BasisFamily& basis) {
  const Index d = basis.dim();
  Index m = 0;
  while ((m + 1) * (m + 1) <= d) ++m;
  Json elements = Json::array();
  for (Index i = 0; i < d; ++i)
    elements.push_back(m * m == d ? matrix_to_json(basis.element_matrix(i))
                                  : vector_to_json(basis.element(i)));
  Json j;
  j["dim"] = d;
  j["elements"] = std::move(elements);
  return j;
}

BasisFamily basis_from_json(const Json& j) {
  const Index d = positive_int(j, "dim");
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) parse_error("\"elements\" must be an array");
  if (static_cast<Index>(elements.size()) != d)
    throw Error(ErrorKind::DimensionMismatch,
                "basis of dim " + std::to_string(d) + " has " +
                    std::to_string(elements.size()) + " elements");
  ComplexMatrix cols(d, d);
  for (Index i = 0; i < d; ++i) {
    const Json& e = elements[static_cast<std::size_t>(i)];
    const ComplexVector v = e.is_object() ? ComplexVector(vec(matrix_from_json(e)))
                                          : vector_from_json(e);
    if (v.size() != d)
      throw Error(ErrorKind::DimensionMismatch,
                  "basis element " + std::to_string(i) + " has " +
                      std::to_string(v.size()) + " coordinates, expected " +
                      std::to_string(d));
    cols.col(i) = v;
  }
  return BasisFamily(std::move(cols));
}

Json map_to_json(const LinearMapRep& phi, const Json& metadata) {
  Json j;
  j["dimIn"] = phi.dim_in();
  j["dimOut"] = phi.dim_out();
  j["transfer"] = matrix_to_json(phi.transfer());
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

LinearMapRep map_from_json(const Json& j, Index default_dim) {
  if (j.is_string() || (j.is_object() && j.contains("name"))) {
    const std::string name =
        j.is_string() ? j.get<std::string>() : field(j, "name").get<std::string>();
    if (name == "ad") {
      if (!j.is_object()) parse_error("built-in \"ad\" needs an \"s\" matrix");
      return LinearMapRep::ad(matrix_from_json(field(j, "s")));
    }
    Index dim = default_dim;
    if (j.is_object() && j.contains("dim")) dim = positive_int(j, "dim");
    if (dim < 1) parse_error("built-in \"" + name + "\" needs a dimension");
    if (name == "id") return LinearMapRep::identity(dim);
    if (name == "transpose") return LinearMapRep::transpose(dim);
    parse_error("unknown built-in map \"" + name + "\"");
  }
  const Index m = positive_int(j, "dimIn");
  const Index n = positive_int(j, "dimOut");
  ComplexMatrix t = matrix_from_json(field(j, "transfer"));
  if (t.rows() != n * n || t.cols() != m * m)
    throw Error(ErrorKind::DimensionMismatch,
                "transfer is " + std::to_string(t.rows()) + "x" +
                    std::to_string(t.cols()) + ", expected " +
                    std::to_string(n * n) + "x" + std::to_string(m * m) +
                    " for M_" + std::to_string(m) + " -> M_" + std::to_string(n));
  return LinearMapRep(m, n, std::move(t));
}

Json report_to_json(const CheckReport& report) {
  const ConeVerdict& v = report.verdict;
  Json j;
  j["cone"] = to_string(report.cone.kind);
  j["k"] = report.cone.k > 0 ? Json(report.cone.k) : Json(nullptr);
  j["status"] = to_string(v.status);
  if (v.witness) {
    j["witness"] = v.witness->cols() == 1 ? vector_to_json(v.witness->col(0))
                                          : matrix_to_json(*v.witness);
  } else {
    j["witness"] = nullptr;
  }
  j["value"] = finite_or_null(v.value);
  j["seed"] = report.seed;
  j["budget"] = report.budget;
  if (v.witness_map) {
    j["witnessMap"] = map_to_json(*v.witness_map);
    j["witnessSlot"] = v.witness_slot == Slot::First ? "first" : "second";
  }
  if (v.relies_on_external_theorem) j["externalTheorem"] = true;
  j["detail"] = v.detail;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace choikit
