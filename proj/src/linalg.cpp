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

#include "orbitbasis/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitbasis {

namespace {

void require_finite(const std::vector<Complex>& values, const char* what) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
  }
  require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::vector<Complex> ComplexMatrix::diag() const {
  std::size_t n = std::min(rows_, cols_);
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(i, i);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in +=");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in -=");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix: shape mismatch in max_abs_diff");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
  }
  return m;
}

StateVector::StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  std::size_t expected = 1;
  for (std::size_t d : dims_) {
    if (d < 1) throw std::invalid_argument("StateVector: site dimension must be >= 1");
    expected *= d;
  }
  if (!dims_.empty() && expected != amps_.size()) {
    throw std::invalid_argument("StateVector: amplitude count does not match dims");
  }
  if (dims_.empty()) dims_ = {amps_.size()};
  for (std::size_t d : dims_) {
    if (d != dims_[0]) throw std::invalid_argument("StateVector: sites must share one dimension");
  }
  require_finite(amps_, "StateVector");
}

StateVector StateVector::basis_state(std::vector<std::size_t> dims, std::size_t index) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<Complex> amps(total, Complex(0.0, 0.0));
  amps.at(index) = 1.0;
  return StateVector(std::move(dims), std::move(amps));
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const Complex& a : amps_) n2 += std::norm(a);
  return std::sqrt(n2);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::domain_error("StateVector: cannot normalize the zero vector");
  std::vector<Complex> amps = amps_;
  for (Complex& a : amps) a /= n;
  return StateVector(dims_, std::move(amps));
}

StateVector StateVector::phase_canonical(double cutoff) const {
  for (const Complex& a : amps_) {
    if (std::abs(a) > cutoff) {
      Complex phase = std::abs(a) / a;
      std::vector<Complex> amps = amps_;
      for (Complex& x : amps) x *= phase;
      return StateVector(dims_, std::move(amps));
    }
  }
  return *this;
}

std::vector<std::size_t> index_digits(std::size_t index, std::size_t n, std::size_t d) {
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = index % d;
    index /= d;
  }
  return digits;
}

std::size_t digits_index(const std::vector<std::size_t>& digits, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t v : digits) idx = idx * d + v;
  return idx;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
  std::size_t rows = a.rows() * b.rows();
  std::size_t cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    throw std::length_error("kron: result dimension " + std::to_string(std::max(rows, cols)) +
                            " exceeds cap " + std::to_string(max_dim));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      Complex v = a(ar, ac);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
        }
      }
    }
  }
  return out;
}

StateVector mat_apply(const ComplexMatrix& m, const StateVector& s) {
  if (m.cols() != s.dim()) {
    throw std::invalid_argument("mat_apply: matrix columns do not match state dimension");
  }
  std::vector<Complex> out(m.rows(), Complex(0.0, 0.0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * s[c];
    out[r] = acc;
  }
  if (m.rows() == s.dim()) return StateVector(s.dims(), std::move(out));
  return StateVector({m.rows()}, std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.local_dim() != b.local_dim()) {
    throw std::invalid_argument("tensor: mixed local dimensions");
  }
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
  return StateVector(std::move(dims), std::move(amps));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

ComplexMatrix partial_trace(const StateVector& s, std::size_t keep_site) {
  std::size_t n = s.site_count();
  if (keep_site >= n) throw std::out_of_range("partial_trace: site index out of range");
  std::size_t d = s.local_dim();
  // stride between consecutive values of the kept site's digit
  std::size_t stride = 1;
  for (std::size_t i = keep_site + 1; i < n; ++i) stride *= d;
  std::size_t block = stride * d;
  ComplexMatrix rho(d, d);
  for (std::size_t outer = 0; outer < s.dim(); outer += block) {
    for (std::size_t inner_ = 0; inner_ < stride; ++inner_) {
      std::size_t base = outer + inner_;
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          rho(a, b) += s[base + a * stride] * std::conj(s[base + b * stride]);
        }
      }
    }
  }
  return rho;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw std::invalid_argument("is_unitary: matrix must be square");
  ComplexMatrix g = m.adjoint() * m;
  g -= ComplexMatrix::identity(m.rows());
  return g.max_abs() <= tol;
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix a) {
  if (!a.is_square()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  std::size_t n = a.rows();
  double scale = a.max_abs();
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-30 * scale * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Complex apq = a(p, q);
        double mag = std::abs(apq);
        if (mag < 1e-18 * scale) continue;
        double app = a(p, p).real();
        double aqq = a(q, q).real();
        double tau = (app - aqq) / (2.0 * mag);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        Complex s = (t * c) * (std::conj(apq) / mag);  // sin(theta) * e^{-i arg(apq)}
        // Apply the rotation G = [[c, -conj(s)], [s, c]] on the (p, q) plane:
        // a <- G^dagger a G.
        for (std::size_t k = 0; k < n; ++k) {
          Complex akp = a(k, p);
          Complex akq = a(k, q);
          a(k, p) = c * akp + s * akq;
          a(k, q) = -std::conj(s) * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Complex apk = a(p, k);
          Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(s) * aqk;
          a(q, k) = -s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace orbitbasis
