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

#include "orbitbasis/pauli.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orbitbasis {

namespace {

int mod(long long value, long long modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

void require_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
}

}  // namespace

namespace {

// e^{2 pi i p / q} with exact values on the quarter turns, so that real or
// imaginary-free constructions stay exactly real.
Complex unit_phase(long long p, long long q) {
  int r = mod(p, q);
  if (r == 0) return Complex(1.0, 0.0);
  if (2 * r == q) return Complex(-1.0, 0.0);
  if (4 * r == q) return Complex(0.0, 1.0);
  if (4 * r == 3 * q) return Complex(0.0, -1.0);
  double angle = 2.0 * std::numbers::pi * r / static_cast<double>(q);
  return Complex(std::cos(angle), std::sin(angle));
}

}  // namespace

Complex root_of_unity(std::size_t d, long long power) {
  return unit_phase(power, static_cast<long long>(d));
}

ComplexMatrix pauli_z(std::size_t d) {
  require_dim(d);
  ComplexMatrix z(d, d);
  for (std::size_t j = 0; j < d; ++j) z(j, j) = root_of_unity(d, static_cast<long long>(j));
  return z;
}

ComplexMatrix pauli_x(std::size_t d) {
  require_dim(d);
  ComplexMatrix x(d, d);
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

ComplexMatrix fourier_gate(std::size_t d) {
  require_dim(d);
  ComplexMatrix h(d, d);
  double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      h(j, k) = scale * root_of_unity(d, static_cast<long long>(j * k));
  return h;
}

PauliWord PauliWord::identity(std::size_t n, std::size_t d) {
  PauliWord w;
  w.d = d;
  w.x_exps.assign(n, 0);
  w.z_exps.assign(n, 0);
  w.phase_exp = 0;
  return w;
}

void PauliWord::reduce() {
  int dd = static_cast<int>(d);
  for (int& e : x_exps) e = mod(e, dd);
  for (int& e : z_exps) e = mod(e, dd);
  phase_exp = mod(phase_exp, 2 * dd);
}

PauliWord PauliWord::times(const PauliWord& other) const {
  if (d != other.d || site_count() != other.site_count()) {
    throw std::invalid_argument("PauliWord: mismatched words in product");
  }
  PauliWord out = *this;
  // (X^a Z^b)(X^c Z^e) = omega_d^{bc} X^{a+c} Z^{b+e} per site.
  long long extra = 0;
  for (std::size_t j = 0; j < site_count(); ++j) {
    extra += static_cast<long long>(z_exps[j]) * other.x_exps[j];
    out.x_exps[j] += other.x_exps[j];
    out.z_exps[j] += other.z_exps[j];
  }
  out.phase_exp = mod(static_cast<long long>(phase_exp) + other.phase_exp +
                          2 * (extra % static_cast<long long>(d)),
                      2 * static_cast<long long>(d));
  out.reduce();
  return out;
}

ComplexMatrix PauliWord::to_matrix() const {
  std::size_t n = site_count();
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= d;
  Complex prefactor = unit_phase(phase_exp, 2 * static_cast<long long>(d));
  ComplexMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<std::size_t> digits = index_digits(col, n, d);
    long long zpow = 0;
    for (std::size_t j = 0; j < n; ++j) {
      zpow += static_cast<long long>(z_exps[j]) * static_cast<long long>(digits[j]);
      digits[j] = (digits[j] + static_cast<std::size_t>(mod(x_exps[j], d))) % d;
    }
    m(digits_index(digits, d), col) = prefactor * root_of_unity(d, zpow);
  }
  return m;
}

StateVector PauliWord::apply(const StateVector& s) const {
  if (s.site_count() != site_count() || s.local_dim() != d) {
    throw std::invalid_argument("PauliWord: state shape mismatch");
  }
  std::size_t n = site_count();
  Complex prefactor = unit_phase(phase_exp, 2 * static_cast<long long>(d));
  std::vector<Complex> out(s.dim(), Complex(0.0, 0.0));
  for (std::size_t col = 0; col < s.dim(); ++col) {
    std::vector<std::size_t> digits = index_digits(col, n, d);
    long long zpow = 0;
    for (std::size_t j = 0; j < n; ++j) {
      zpow += static_cast<long long>(z_exps[j]) * static_cast<long long>(digits[j]);
      digits[j] = (digits[j] + static_cast<std::size_t>(mod(x_exps[j], d))) % d;
    }
    out[digits_index(digits, d)] = prefactor * root_of_unity(d, zpow) * s[col];
  }
  return StateVector(s.dims(), std::move(out));
}

GroupDescriptor tetra_group(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("tetra_group: need at least one site");
  require_dim(d);
  GroupDescriptor gd;
  gd.n = n;
  gd.d = d;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PauliWord w = PauliWord::identity(n, d);
    w.z_exps[i] = 1;
    w.z_exps[i + 1] = static_cast<int>(d) - 1;  // Z^* = Z^{d-1}
    w.reduce();
    gd.generators.push_back(std::move(w));
  }
  PauliWord xs = PauliWord::identity(n, d);
  for (std::size_t i = 0; i < n; ++i) xs.x_exps[i] = 1;
  gd.generators.push_back(std::move(xs));
  return gd;
}

PauliWord group_element_word(const GroupDescriptor& gd, const std::vector<int>& label) {
  if (label.size() != gd.n) throw std::invalid_argument("group element label has wrong length");
  std::size_t n = gd.n;
  int x = mod(label[n - 1], gd.d);
  PauliWord w = PauliWord::identity(n, gd.d);
  // Site j accumulates Z exponent label[j] - label[j-1] from the two
  // adjacent pair generators; the telescoping sum vanishes mod d, which is
  // what keeps the ordered product free of any global phase.
  for (std::size_t j = 0; j < n; ++j) {
    long long zj = 0;
    if (j + 1 < n) zj += label[j];
    if (j > 0) zj -= label[j - 1];
    w.z_exps[j] = mod(zj, gd.d);
    w.x_exps[j] = x;
  }
  return w;
}

std::vector<GroupElement> group_elements(const GroupDescriptor& gd) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < gd.n; ++i) order *= gd.d;
  std::vector<GroupElement> out;
  out.reserve(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::vector<std::size_t> digits = index_digits(idx, gd.n, gd.d);
    std::vector<int> label(digits.begin(), digits.end());
    PauliWord w = group_element_word(gd, label);
    ComplexMatrix m = w.to_matrix();
    out.push_back(GroupElement{std::move(label), std::move(w), std::move(m)});
  }
  return out;
}

ComplexMatrix sum_chain(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("sum_chain: need at least one site");
  require_dim(d);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= d;
  // Composed action on |v_1,...,v_n>: digit i becomes sum_{j>=i} v_j mod d.
  ComplexMatrix s(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<std::size_t> digits = index_digits(col, n, d);
    std::vector<std::size_t> image(n);
    std::size_t acc = 0;
    for (std::size_t i = n; i-- > 0;) {
      acc = (acc + digits[i]) % d;
      image[i] = acc;
    }
    s(digits_index(image, d), col) = 1.0;
  }
  return s;
}

std::vector<EigenbasisEntry> eigenbasis(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("eigenbasis: need at least one site");
  require_dim(d);
  ComplexMatrix chain = sum_chain(n, d);
  ComplexMatrix hdag = fourier_gate(d).adjoint();
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= d;
  std::vector<EigenbasisEntry> out;
  out.reserve(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::vector<std::size_t> digits = index_digits(idx, n, d);
    std::vector<int> label(digits.begin(), digits.end());
    // Product state |z_1> ... |z_{n-1}> tensor |x>_X, then the SUM chain.
    StateVector product = StateVector::basis_state({d}, digits[0]);
    if (n == 1) {
      product = mat_apply(hdag, product);
    } else {
      for (std::size_t i = 1; i + 1 < n; ++i) {
        product = tensor(product, StateVector::basis_state({d}, digits[i]));
      }
      StateVector xeig = mat_apply(hdag, StateVector::basis_state({d}, digits[n - 1]));
      product = tensor(product, xeig);
    }
    out.push_back(EigenbasisEntry{std::move(label), mat_apply(chain, product)});
  }
  return out;
}

}  // namespace orbitbasis
