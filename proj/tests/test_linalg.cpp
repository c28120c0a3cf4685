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

#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitbasis/fiducial.hpp"
#include "orbitbasis/pauli.hpp"

using namespace orbitbasis;

namespace {

ComplexMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> dist(-3, 3);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(dist(rng), dist(rng));
  return m;
}

StateVector random_state(std::mt19937& rng, std::vector<std::size_t> dims) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::size_t dim = 1;
  for (std::size_t d : dims) dim *= d;
  std::vector<Complex> amps(dim);
  for (Complex& a : amps) a = Complex(dist(rng), dist(rng));
  return StateVector(dims, std::move(amps)).normalized();
}

}  // namespace

TEST_CASE("kron identity and pauli actions") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(kron(i2, i2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

  // (Z tensor Z)|11> = +|11>, (X tensor X)|00> = |11>
  StateVector e11 = StateVector::basis_state({2, 2}, 3);
  StateVector zz = mat_apply(kron(pauli_z(2), pauli_z(2)), e11);
  CHECK(std::abs(inner(zz, e11) - Complex(1.0, 0.0)) < 1e-15);
  StateVector e00 = StateVector::basis_state({2, 2}, 0);
  StateVector xx = mat_apply(kron(pauli_x(2), pauli_x(2)), e00);
  CHECK(std::abs(inner(xx, e11) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("kron dimension cap") {
  ComplexMatrix big = ComplexMatrix::identity(80);
  CHECK_THROWS_AS(kron(big, ComplexMatrix::identity(80)), std::length_error);
  CHECK_NOTHROW(kron(big, ComplexMatrix::identity(80), 6400));
}

TEST_CASE("kron associativity is exact on integer matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a = random_int_matrix(rng, 2, 3);
    ComplexMatrix b = random_int_matrix(rng, 3, 2);
    ComplexMatrix c = random_int_matrix(rng, 2, 2);
    CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) == 0.0);
  }
}

TEST_CASE("kron mixed-product property on states") {
  std::mt19937 rng(11);
  for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
    for (int trial = 0; trial < 10; ++trial) {
      ComplexMatrix a = random_int_matrix(rng, d, d);
      ComplexMatrix b = random_int_matrix(rng, d, d);
      StateVector u = random_state(rng, {d});
      StateVector v = random_state(rng, {d});
      StateVector lhs = mat_apply(kron(a, b), tensor(u, v));
      StateVector rhs = tensor(mat_apply(a, u), mat_apply(b, v));
      double diff = 0.0;
      for (std::size_t i = 0; i < lhs.dim(); ++i) {
        diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
      }
      CHECK(diff < 1e-12);
    }
  }
}

TEST_CASE("partial trace of Bell state is maximally mixed") {
  double s = 1.0 / std::sqrt(2.0);
  StateVector bell({2, 2}, {s, 0.0, 0.0, s});
  for (std::size_t site : {0, 1}) {
    ComplexMatrix rho = partial_trace(bell, site);
    CHECK(rho.max_abs_diff(ComplexMatrix::identity(2) * Complex(0.5, 0.0)) < 1e-15);
  }
}

TEST_CASE("partial trace of product state is pure") {
  double s = 1.0 / std::sqrt(2.0);
  StateVector prod({2, 2}, {s, s, 0.0, 0.0});  // |0> tensor |+>
  ComplexMatrix rho = partial_trace(prod, 0);
  ComplexMatrix proj(2, 2);
  proj(0, 0) = 1.0;
  CHECK(rho.max_abs_diff(proj) < 1e-15);
}

TEST_CASE("partial trace is Hermitian with unit trace") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    StateVector s = random_state(rng, {2, 2, 2});
    for (std::size_t site = 0; site < 3; ++site) {
      ComplexMatrix rho = partial_trace(s, site);
      CHECK(rho.max_abs_diff(rho.adjoint()) < 1e-14);
      CHECK(std::abs(rho(0, 0).real() + rho(1, 1).real() - 1.0) < 1e-12);
      for (double eig : hermitian_eigenvalues(rho)) CHECK(eig > -1e-12);
    }
  }
}

TEST_CASE("partial trace of the tetrahedral fiducial") {
  StateVector fid = ejm_theta(0.0);
  ComplexMatrix rho = partial_trace(fid, 0);
  CHECK(std::abs(rho(0, 0).real() + rho(1, 1).real() - 1.0) < 1e-14);
  // Bloch components (1/2, 1/2, 1/2) via direct contraction
  CHECK(std::abs(2.0 * rho(0, 1).real() - 0.5) < 1e-14);
  CHECK(std::abs(-2.0 * rho(0, 1).imag() - 0.5) < 1e-14);
  CHECK(std::abs(rho(0, 0).real() - rho(1, 1).real() - 0.5) < 1e-14);
}

TEST_CASE("mat_apply basics") {
  StateVector e0 = StateVector::basis_state({2}, 0);
  StateVector same = mat_apply(ComplexMatrix::identity(2), e0);
  CHECK(std::abs(same[0] - Complex(1.0, 0.0)) == 0.0);
  StateVector flipped = mat_apply(pauli_x(2), e0);
  CHECK(std::abs(flipped[1] - Complex(1.0, 0.0)) < 1e-15);
  StateVector plus = mat_apply(fourier_gate(2), e0);
  CHECK(std::abs(plus[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(plus[1] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(mat_apply(ComplexMatrix::identity(3), e0), std::invalid_argument);
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(ComplexMatrix::identity(4)));
  ComplexMatrix stretched = ComplexMatrix::diagonal({Complex(1, 0), Complex(2, 0)});
  CHECK_FALSE(is_unitary(stretched, 0.5));
  CHECK(is_unitary(sum_chain(2, 2)));
}

TEST_CASE("hermitian eigenvalues via Jacobi") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 2.0;
  m(1, 1) = 1.0;
  m(0, 1) = Complex(0.0, -0.5);
  m(1, 0) = Complex(0.0, 0.5);
  auto eig = hermitian_eigenvalues(m);
  // Analytic: 1.5 +- sqrt(0.25 + 0.25)
  CHECK(std::abs(eig[0] - (1.5 - std::sqrt(0.5))) < 1e-12);
  CHECK(std::abs(eig[1] - (1.5 + std::sqrt(0.5))) < 1e-12);
}

TEST_CASE("state vector validation") {
  CHECK_THROWS_AS(StateVector({2, 2}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector({2}, {std::nan(""), 0.0}), std::invalid_argument);
  StateVector s({2}, {0.6, 0.8});
  CHECK(s.is_normalized());
  CHECK(s.phase_canonical()[0].real() == doctest::Approx(0.6));
}
