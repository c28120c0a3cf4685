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

#ifndef ORBITBASIS_LINALG_HPP
#define ORBITBASIS_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace orbitbasis {

using Complex = std::complex<double>;

// Tolerance ladder. Algebraic identities (norms, Gram residuals, eigenvalue
// equations) are held to kTolNorm; geometry classification snaps values at
// kTolGeom. Callers can override per call.
inline constexpr double kTolNorm = 1e-12;
inline constexpr double kTolGeom = 1e-9;

// Cap on the dimensions a kron() result may reach.
inline constexpr std::size_t kMaxKronDim = 4096;

// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex> diag() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  // Max entrywise |.| over the whole matrix.
  double max_abs() const;
  // Max |a - b| entrywise; dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Pure state of n qudits with a common local dimension d. Site 0 is the
// leftmost (most significant) tensor factor, so a computational basis state
// |j_0, j_1, ..., j_{n-1}> sits at index sum_i j_i * d^(n-1-i).
class StateVector {
 public:
  StateVector() = default;
  StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

  static StateVector basis_state(std::vector<std::size_t> dims, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  std::size_t site_count() const { return dims_.size(); }
  std::size_t local_dim() const { return dims_.empty() ? 0 : dims_[0]; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm() const;
  bool is_normalized(double tol = kTolNorm) const;
  StateVector normalized() const;
  // Rotates the global phase so the first amplitude above `cutoff` in
  // magnitude becomes real positive.
  StateVector phase_canonical(double cutoff = 1e-9) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Complex> amps_;
};

// Digit <-> flat index helpers for the site-0-most-significant convention.
std::vector<std::size_t> index_digits(std::size_t index, std::size_t n, std::size_t d);
std::size_t digits_index(const std::vector<std::size_t>& digits, std::size_t d);

// Kronecker product. Throws std::length_error if either output dimension
// exceeds max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dim = kMaxKronDim);

// Matrix-vector product; the result is not renormalized.
StateVector mat_apply(const ComplexMatrix& m, const StateVector& s);

// Tensor product of states (sites of `a` become the leading sites).
StateVector tensor(const StateVector& a, const StateVector& b);

Complex inner(const StateVector& a, const StateVector& b);  // <a|b>

// Reduced density matrix of one site (d x d).
ComplexMatrix partial_trace(const StateVector& s, std::size_t keep_site);

// True iff max-entry norm of (m^dagger m - I) <= tol.
bool is_unitary(const ComplexMatrix& m, double tol = kTolNorm);

// Eigenvalues of a Hermitian matrix, ascending (cyclic Jacobi).
std::vector<double> hermitian_eigenvalues(ComplexMatrix a);

}  // namespace orbitbasis

#endif  // ORBITBASIS_LINALG_HPP
