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

#include "choikit/forms.hpp"

#include <cmath>
#include <string>

namespace choikit {

namespace {

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": dimension " + std::to_string(a) +
                    " vs " + std::to_string(b));
}

}  // namespace

BilinearForm::BilinearForm(ComplexMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw Error(ErrorKind::DimensionMismatch, "BilinearForm: gram not square");
  require_finite(gram_, "BilinearForm");
  if (rank(gram_, 1e-10) != gram_.rows())
    throw Error(ErrorKind::SingularForm, "BilinearForm: gram is singular");
}

BilinearForm BilinearForm::standard(Index d) {
  return BilinearForm(ComplexMatrix::Identity(d, d));
}

BilinearForm BilinearForm::trace_form(Index m) {
  return BilinearForm(swap_operator(m));
}

BilinearForm BilinearForm::from_isomorphism(const Isomorphism& sigma) {
  return BilinearForm(sigma.inverse().transfer());
}

BasisFamily::BasisFamily(ComplexMatrix columns) : coords_(std::move(columns)) {
  if (coords_.rows() != coords_.cols())
    throw Error(ErrorKind::SingularBasis,
                "BasisFamily: need exactly d vectors in C^d, got " +
                    std::to_string(coords_.cols()) + " in C^" +
                    std::to_string(coords_.rows()));
  require_finite(coords_, "BasisFamily");
  if (rank(coords_, 1e-10) != coords_.rows())
    throw Error(ErrorKind::SingularBasis,
                "BasisFamily: elements are linearly dependent");
}

BasisFamily BasisFamily::from_matrices(
    const std::vector<ComplexMatrix>& elements) {
  if (elements.empty())
    throw Error(ErrorKind::SingularBasis, "BasisFamily: no elements");
  const Index d = elements.front().size();
  ComplexMatrix cols(d, static_cast<Index>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].size() != d)
      throw Error(ErrorKind::DimensionMismatch,
                  "BasisFamily: elements differ in size");
    cols.col(static_cast<Index>(i)) = vec(elements[i]);
  }
  return BasisFamily(std::move(cols));
}

BasisFamily BasisFamily::standard(Index d) {
  return BasisFamily(ComplexMatrix::Identity(d, d));
}

ComplexMatrix BasisFamily::element_matrix(Index i) const {
  return unvec_square(coords_.col(i));
}

Complex pair(const BilinearForm& form, const ComplexVector& x,
             const ComplexVector& y) {
  require_same_dim(form.dim(), x.size(), "pair");
  require_same_dim(form.dim(), y.size(), "pair");
  return x.transpose() * form.gram() * y;
}

Complex pair(const BilinearForm& form, const ComplexMatrix& x,
             const ComplexMatrix& y) {
  return pair(form, ComplexVector(vec(x)), ComplexVector(vec(y)));
}

BilinearForm form_from_basis_pair(const BasisFamily& e, const BasisFamily& f) {
  require_same_dim(e.dim(), f.dim(), "form_from_basis_pair");
  // E^T G F = I.
  const ComplexMatrix g =
      (f.coordinates() * e.coordinates().transpose()).fullPivLu().inverse();
  return BilinearForm(g);
}

BasisFamily dual_basis(const BilinearForm& form, const BasisFamily& e) {
  require_same_dim(form.dim(), e.dim(), "dual_basis");
  const ComplexMatrix lhs = e.coordinates().transpose() * form.gram();
  return BasisFamily(lhs.fullPivLu().inverse());
}

bool is_symmetric(const BilinearForm& form) {
  const ComplexMatrix& g = form.gram();
  return max_abs(g - g.transpose()) <= 1e-10 * std::max(1.0, max_abs(g));
}

BasisFamily orthonormalize_symmetric(const BilinearForm& form) {
  if (!is_symmetric(form))
    throw Error(ErrorKind::NotSymmetric,
                "orthonormalize_symmetric: form is not symmetric");
  const Index d = form.dim();
  const ComplexMatrix& g = form.gram();
  const double floor = kBreakdownTol * std::max(1.0, max_abs(g));

  ComplexMatrix basis(d, d);
  ComplexMatrix complement = ComplexMatrix::Identity(d, d);

  auto project_out = [&](ComplexVector v, Index count) {
    for (Index j = 0; j < count; ++j) {
      const Complex c = basis.col(j).transpose() * g * v;
      v -= c * basis.col(j);
    }
    return v;
  };

  for (Index k = 0; k < d; ++k) {
    const Index r = complement.cols();
    const ComplexMatrix h = complement.transpose() * g * complement;

    double best = -1.0;
    ComplexVector pick;
    for (Index i = 0; i < r; ++i) {
      const double score = std::abs(h(i, i));
      if (score > best) {
        best = score;
        pick = complement.col(i);
      }
    }
    for (Index i = 0; i < r; ++i)
      for (Index j = i + 1; j < r; ++j) {
        const double score =
            std::abs(h(i, i) + 2.0 * h(i, j) + h(j, j)) / 2.0;
        if (score > best) {
          best = score;
          pick = complement.col(i) + complement.col(j);
        }
      }
    if (best < floor)
      throw Error(ErrorKind::NumericalBreakdown,
                  "orthonormalize_symmetric: no vector with nonzero "
                  "self-pairing in complement of dimension " +
                      std::to_string(r));

    // Second projection pass cleans up rounding drift from earlier steps.
    pick = project_out(pick, k);
    const Complex self = pick.transpose() * g * pick;
    basis.col(k) = pick / std::sqrt(self);
    if (r == 1) break;

    ComplexMatrix projected(d, r);
    for (Index i = 0; i < r; ++i)
      projected.col(i) = project_out(project_out(complement.col(i), k + 1), k + 1);
    Eigen::JacobiSVD<ComplexMatrix> svd(projected, Eigen::ComputeThinU);
    complement = svd.matrixU().leftCols(r - 1);
  }
  return BasisFamily(std::move(basis));
}

bool forms_equal(const BilinearForm& a, const BilinearForm& b, double tol) {
  require_same_dim(a.dim(), b.dim(), "forms_equal");
  return (a.gram() - b.gram()).norm() <= tol * std::max(1.0, a.gram().norm());
}

LinearMapRep sigma_transpose(const LinearMapRep& sigma) {
  if (sigma.dim_in() != sigma.dim_out())
    throw Error(ErrorKind::DimensionMismatch,
                "sigma_transpose: map is not square");
  return LinearMapRep(sigma.dim_in(), sigma.dim_in(),
                      sigma.transfer().transpose());
}

}  // namespace choikit
