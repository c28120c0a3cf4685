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

#ifndef ORBITBASIS_FIDUCIAL_HPP
#define ORBITBASIS_FIDUCIAL_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "orbitbasis/linalg.hpp"
#include "orbitbasis/pauli.hpp"
#include "orbitbasis/rational.hpp"

namespace orbitbasis {

// One phase alpha_{z,x} per eigenbasis label, stored in label order (the
// d-ary order of (z_1,...,z_{n-1},x)). Phases are reduced to (-pi, pi].
struct PhaseVector {
  std::size_t n = 0;
  std::size_t d = 2;
  std::vector<double> alphas;  // size d^n
};

PhaseVector make_phase_vector(std::size_t n, std::size_t d, std::vector<double> alphas);
double reduce_phase(double alpha);  // into (-pi, pi]

// Equal-weight superposition d^{-n/2} sum e^{i alpha_{z,x}} |Phi_{z,x}>.
// Every such state seeds an orthonormal orbit basis.
StateVector fiducial_from_phases(const PhaseVector& pv);

// Preparation unitary V = S_d(n) (H_d on site n)^dagger D_alpha H_d^{tensor n}
// with V|0...0> equal to fiducial_from_phases (D_alpha holds e^{i alpha} in
// label order).
ComplexMatrix normal_form_unitary(const PhaseVector& pv);

// One-parameter two-qubit family: phases (0, pi/2, -pi/2, theta + pi/2).
// theta = 0 gives the elegant joint measurement fiducial, theta = pi/2 the
// Bell basis.
PhaseVector ejm_theta_phases(double theta);
StateVector ejm_theta(double theta);

// Binary Krawtchouk polynomial K^n_k(m), exact.
long long krawtchouk(unsigned n, unsigned k, unsigned m);

// Permutation-invariant fiducials over Dicke states. For odd n the Dicke
// weights are pinned exactly (q_k = a_k^2 + a_{n-k}^2 = 1/2^{n-1}) and
// theta_k, alpha_k remain free; amplitudes follow
//   a_k = cos(theta_k)/2^{(n-1)/2},  a_{n-k} = sin(theta_k)/2^{(n-1)/2},
//   alpha_{n-k} = alpha_k + pi/2.
struct PPISolution {
  std::size_t n = 0;
  std::vector<Rational> weights;  // q_k, k = 0..(n-1)/2, exact
  std::vector<double> thetas;     // free parameters, defaults 0
  std::vector<double> alphas;     // free parameters, defaults 0
};

// Certificate that no permutation-invariant fiducial exists for even n: the
// two exact orthogonality systems pin the middle Dicke weight a_{n/2}^2 to
// incompatible values.
struct PPIInfeasibility {
  std::size_t n = 0;
  Rational middle_weight_phase_system;  // from the Z-string constraints
  Rational middle_weight_shift_system;  // from the (Z-string)(X-string) constraints
  std::vector<Rational> weights;        // q_k from the first system
};

using PPIResult = std::variant<PPISolution, PPIInfeasibility>;

PPIResult ppi_solve(std::size_t n);

// Canonical parameter choice: all theta_k = alpha_k = 0, except n = 3 which
// uses the preset theta_0 = 0, theta_1 = alpha_1 = arctan(1/3).
PPISolution ppi_preset(std::size_t n);

StateVector ppi_state(const PPISolution& sol);

// Real n-qubit fiducial supported on |0,1,...,1> and |1,j_2,...,j_n> with
// (j_2,...,j_n) != 0; its per-site orbit points form rectangles with side
// lengths 2*4/2^n and 2*(1 - 4/2^n).
StateVector rect_fiducial(std::size_t n);

// Hard-coded three-qubit fiducial whose orbit puts sites 1,2 on the (1,1,1)
// tetrahedron orientation and site 3 on the mirrored one.
StateVector both_orientation_preset();

// Hesse fiducial (1/sqrt2)[1, -e^{i theta}, 0]; its nine-element
// shift/phase orbit has pairwise overlap modulus^2 = 1/4 for every theta.
StateVector hesse_sic(double theta);

// Qubit fiducial with Bloch vector (1,1,1)/sqrt(3); its four-element orbit
// has pairwise overlap modulus^2 = 1/3.
StateVector qubit_sic_fiducial();

// Relation a valid (q, alpha) pair must satisfy:
//   cos(alpha) = (d q^2 + 1) / (2 q sqrt(d+1)).
// Returns the principal-branch alpha for the given q; throws
// std::domain_error when q lies outside the admissible window
// [(sqrt(d+1)-1)/d, (sqrt(d+1)+1)/d].
double czartowski_alpha(std::size_t d, double q);

// Two-qudit fiducial sqrt((d+1)/d) |phi> tensor |phi^*> - q e^{i alpha}
// |Phi+_d> built from a SIC fiducial |phi>. Validates the (q, alpha)
// relation to 1e-9 and throws std::invalid_argument with the residual
// otherwise.
StateVector czartowski_fiducial(std::size_t d, const StateVector& sic_fid, double q,
                                double alpha);

}  // namespace orbitbasis

#endif  // ORBITBASIS_FIDUCIAL_HPP
