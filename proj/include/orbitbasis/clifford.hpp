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

#ifndef ORBITBASIS_CLIFFORD_HPP
#define ORBITBASIS_CLIFFORD_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "orbitbasis/fiducial.hpp"
#include "orbitbasis/linalg.hpp"

namespace orbitbasis {

// Sentinel for nu2(0).
inline constexpr int kNu2Infinity = std::numeric_limits<int>::max();

// 2-adic valuation: largest e with 2^e | a; nu2(0) = infinity sentinel.
int nu2(long long a);

// Exact dyadic value num / 2^exp, canonical (num odd or zero, exp >= 0).
struct DyadicRational {
  long long num = 0;
  int exp = 0;
};

DyadicRational make_dyadic(long long num, int exp);
DyadicRational dyadic_add(const DyadicRational& a, const DyadicRational& b);
int nu2(const DyadicRational& r);  // nu2(num) - exp; infinity for zero

// Nearest dyadic t/2^exp with exp <= max_exp, accepted when
// |value - t/2^exp| <= tol. The result is canonical.
std::optional<DyadicRational> to_dyadic(double value, int max_exp, double tol);

// Multilinear polynomial over n boolean variables with coefficients in
// Z_{2^m}, indexed by nonempty variable subsets. Masks put variable 1 at the
// most significant of n bits, so a mask doubles as the evaluation point's
// index in diagonal/label order. The empty-set coefficient is fixed to 0
// (global phase).
struct PhasePolynomial {
  std::size_t n = 0;
  int m = 1;
  std::vector<std::uint32_t> coeffs;  // size 2^n, entry [0] unused (= 0)

  std::uint32_t modulus() const { return 1u << m; }
};

PhasePolynomial make_phase_polynomial(std::size_t n, int m,
                                      std::vector<std::uint32_t> coeffs);

// Subset masks in display order: singles first ({1}, {2}, ...), then pairs,
// then higher degrees, each tier ordered by its variable tuple.
std::vector<std::uint32_t> subset_order(std::size_t n);

std::string polynomial_to_string(const PhasePolynomial& f);

// f evaluated at every point, in label order.
std::vector<std::uint32_t> phase_table(const PhasePolynomial& f);

// Lowest Clifford-hierarchy level of the induced diagonal gate:
//   k = max over nonzero coefficients of (m - nu2(a_S) - 1) + |S|,
// clamped below at 1 (the all-zero polynomial is the identity).
int cgk_level(const PhasePolynomial& f);

// Diag_z exp(i 2 pi f(z) / 2^m).
ComplexMatrix diagonal_gate(const PhasePolynomial& f);

// Recovers the unique coefficients from a list of 2^n diagonal phases
// (radians, label order) by inclusion-exclusion over variable subsets.
// Each phase must sit within 1e-9 of a multiple of 2 pi / 2^m; violations
// throw std::domain_error naming the entry.
PhasePolynomial interpolate_phase_polynomial(const std::vector<double>& diag_phases, int m);

// Recursive hierarchy membership for qubit unitaries. Level 1 accepts any
// unit-modulus multiple of a Pauli word; level k conjugates the single-site
// X and Z generators and recurses. Exact for k <= 3; a sound acceptance
// check above that. Throws std::length_error when the work estimate
// (2n)^(k-1) 16^n leaves the permitted envelope (n = 2 up to k = 4, n = 3
// up to k = 3).
bool hierarchy_member(const ComplexMatrix& u, int k, double tol = 1e-9);

std::uint64_t hierarchy_work_estimate(std::size_t n, int k);

// Clifford level of the diagonal phase gate behind a qubit phase vector:
// detects the minimal precision m with every phase dyadic (else
// std::domain_error), interpolates the polynomial, and applies cgk_level.
// Upper-bounds the localization level of the induced measurement.
int level_of_measurement(const PhaseVector& pv);

// Level along the one-parameter two-qubit family, from the closed form
// k = 1 - nu2(theta/2pi + 1/4) (exact 2-adic arithmetic), clamped below at
// 2 where the quadratic coefficient degenerates. Input is theta / 2pi.
int ejm_family_level(const DyadicRational& theta_over_two_pi);
int ejm_family_level(double theta);  // accepts dyadic angles to 1e-9

// Polynomial realizing the family's diagonal gate at precision m >= 2 for
// theta = 2 pi ell / 2^m.
PhasePolynomial ejm_family_polynomial(long long ell, int m);

}  // namespace orbitbasis

#endif  // ORBITBASIS_CLIFFORD_HPP
