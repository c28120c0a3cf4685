// Copyright 2026 The OrbitBasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitbasis/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbitbasis {

OrbitBasis orbit(const GroupDescriptor& gd, const StateVector& fid) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < gd.n; ++i) dim *= gd.d;
  if (fid.dim() != dim || fid.local_dim() != gd.d) {
    throw std::invalid_argument("orbit: fiducial does not match the group's space");
  }
  if (!fid.is_normalized(1e-9)) {
    throw std::invalid_argument("orbit: fiducial must be unit norm");
  }
  OrbitBasis ob;
  ob.group = gd;
  ob.fiducial = fid;
  ob.labels.reserve(dim);
  ob.states.reserve(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::vector<std::size_t> digits = index_digits(idx, gd.n, gd.d);
    std::vector<int> label(digits.begin(), digits.end());
    PauliWord w = group_element_word(gd, label);
    ob.states.push_back(w.apply(fid));
    ob.labels.push_back(std::move(label));
  }
  return ob;
}

OrthonormalityReport check_orthonormal(OrbitBasis& ob, double tol) {
  OrthonormalityReport rep;
  std::size_t count = ob.states.size();
  for (std::size_t i = 0; i < count; ++i) {
    rep.max_norm_err = std::max(rep.max_norm_err, std::abs(ob.states[i].norm() - 1.0));
    for (std::size_t j = i + 1; j < count; ++j) {
      rep.max_offdiag = std::max(rep.max_offdiag, std::abs(inner(ob.states[i], ob.states[j])));
    }
  }
  rep.pass = rep.max_offdiag <= tol && rep.max_norm_err <= tol;
  ob.verified = rep.pass;
  return rep;
}

CompletenessReport check_completeness(const GroupDescriptor& gd, const StateVector& fid,
                                      double tol) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < gd.n; ++i) dim *= gd.d;
  if (fid.dim() != dim) {
    throw std::invalid_argument("check_completeness: fiducial does not match the group's space");
  }
  ComplexMatrix sum(dim, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::vector<std::size_t> digits = index_digits(idx, gd.n, gd.d);
    std::vector<int> label(digits.begin(), digits.end());
    StateVector moved = group_element_word(gd, label).apply(fid);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) sum(r, c) += moved[r] * std::conj(moved[c]);
    }
  }
  sum -= ComplexMatrix::identity(dim);
  CompletenessReport rep;
  rep.max_dev_from_identity = sum.max_abs();
  rep.pass = rep.max_dev_from_identity <= tol;
  return rep;
}

std::vector<double> schur_weights(const StateVector& fid,
                                  const std::vector<EigenbasisEntry>& eig) {
  if (!eig.empty() && eig[0].state.dim() != fid.dim()) {
    throw std::invalid_argument("schur_weights: eigenbasis does not match the state");
  }
  std::vector<double> weights;
  weights.reserve(eig.size());
  for (const EigenbasisEntry& e : eig) weights.push_back(std::norm(inner(e.state, fid)));
  return weights;
}

ComplexMatrix measurement_unitary(const OrbitBasis& ob) {
  if (!ob.verified) {
    throw std::logic_error("measurement_unitary: basis has not passed check_orthonormal");
  }
  std::size_t dim = ob.states.size();
  ComplexMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = ob.states[col][row];
  return m;
}

std::vector<double> schmidt_coefficients(const StateVector& s,
                                         const std::vector<std::size_t>& sites_a) {
  std::size_t n = s.site_count();
  std::size_t d = s.local_dim();
  std::vector<bool> in_a(n, false);
  for (std::size_t site : sites_a) {
    if (site >= n) throw std::out_of_range("schmidt_coefficients: site out of range");
    if (in_a[site]) throw std::invalid_argument("schmidt_coefficients: duplicate site");
    in_a[site] = true;
  }
  std::size_t na = sites_a.size();
  if (na == 0 || na == n) {
    throw std::invalid_argument("schmidt_coefficients: bipartition must be nontrivial");
  }
  std::size_t dim_a = 1, dim_b = 1;
  for (std::size_t i = 0; i < na; ++i) dim_a *= d;
  for (std::size_t i = 0; i < n - na; ++i) dim_b *= d;
  // Reshape onto (A, B) indices.
  ComplexMatrix m(dim_a, dim_b);
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    std::vector<std::size_t> digits = index_digits(idx, n, d);
    std::size_t ia = 0, ib = 0;
    for (std::size_t site = 0; site < n; ++site) {
      if (in_a[site]) {
        ia = ia * d + digits[site];
      } else {
        ib = ib * d + digits[site];
      }
    }
    m(ia, ib) = s[idx];
  }
  // Singular values via the smaller Gram matrix.
  ComplexMatrix gram = (dim_a <= dim_b) ? m * m.adjoint() : m.adjoint() * m;
  std::vector<double> eig = hermitian_eigenvalues(gram);
  std::vector<double> coeffs;
  coeffs.reserve(eig.size());
  for (auto it = eig.rbegin(); it != eig.rend(); ++it) {
    coeffs.push_back(std::sqrt(std::max(0.0, *it)));
  }
  return coeffs;
}

}  // namespace orbitbasis
