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

#ifndef ORBITBASIS_PAULI_HPP
#define ORBITBASIS_PAULI_HPP

#include <cstddef>
#include <vector>

#include "orbitbasis/linalg.hpp"

namespace orbitbasis {

// omega_d^power = exp(2*pi*i*power/d), with the exponent reduced mod d first.
Complex root_of_unity(std::size_t d, long long power);

// Generalized phase operator: Z_d |j> = omega_d^j |j>.
ComplexMatrix pauli_z(std::size_t d);

// Generalized shift operator: X_d |j> = |j+1 mod d>.
ComplexMatrix pauli_x(std::size_t d);

// Discrete Fourier gate H_d = d^{-1/2} sum_{j,k} omega_d^{jk} |j><k|.
// H_d^dagger maps |x> to the X_d eigenstate with eigenvalue omega_d^x.
ComplexMatrix fourier_gate(std::size_t d);

// Tensor word in the generalized Pauli group. The dense realization is
//   omega_{2d}^{phase_exp} * tensor_j X_d^{x_exps[j]} Z_d^{z_exps[j]},
// with X written to the left of Z on every site.
struct PauliWord {
  std::size_t d = 2;
  std::vector<int> x_exps;  // reduced mod d
  std::vector<int> z_exps;  // reduced mod d
  int phase_exp = 0;        // exponent of omega_{2d}, reduced mod 2d

  std::size_t site_count() const { return x_exps.size(); }

  static PauliWord identity(std::size_t n, std::size_t d);

  PauliWord times(const PauliWord& other) const;
  ComplexMatrix to_matrix() const;
  // Applies the word to a state in O(d^n).
  StateVector apply(const StateVector& s) const;

  void reduce();  // bring all exponents into canonical range
};

// The abelian subgroup used for orbit bases on n sites of dimension d:
// n-1 adjacent phase-pair generators Z^(i) (Z^(i+1))^* and the global
// shift string X^{tensor n}. Isomorphic to (Z_d)^n.
struct GroupDescriptor {
  std::size_t n = 0;
  std::size_t d = 2;
  std::vector<PauliWord> generators;
};

GroupDescriptor tetra_group(std::size_t n, std::size_t d);

// Element labels are g = (z_1, ..., z_{n-1}, x): the first n-1 coordinates
// power the phase-pair generators, the last powers the shift string. The
// ordered generator product collapses to a phase-free word.
PauliWord group_element_word(const GroupDescriptor& gd, const std::vector<int>& label);

struct GroupElement {
  std::vector<int> label;
  PauliWord word;
  ComplexMatrix matrix;
};

// All d^n elements in label order (label 0 is the identity).
std::vector<GroupElement> group_elements(const GroupDescriptor& gd);

// Chain S_d(n) = SUM_(2->1) ... SUM_(n->n-1), where SUM_(i+1->i) maps
// |j,k> on sites (i, i+1) to |j+k mod d, k>. For d=2 this is the CNOT chain
// controlled from the right. n = 1 gives the identity. Conjugation sends
// the single-site group <Z^(1),...,Z^(n-1),X^(n)> onto the group above.
ComplexMatrix sum_chain(std::size_t n, std::size_t d);

struct EigenbasisEntry {
  std::vector<int> label;  // (z_1, ..., z_{n-1}, x)
  StateVector state;
};

// Joint eigenbasis of the group: |Phi_{z,x}> = S_d(n) [ |z_1>...|z_{n-1}>
// tensor |x>_X ], satisfying Z^(i)(Z^(i+1))^* |Phi> = omega_d^{z_i}|Phi> and
// X^{tensor n}|Phi> = omega_d^x |Phi>. Entries come in label order.
std::vector<EigenbasisEntry> eigenbasis(std::size_t n, std::size_t d);

}  // namespace orbitbasis

#endif  // ORBITBASIS_PAULI_HPP
