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

#ifndef ORBITBASIS_BASIS_HPP
#define ORBITBASIS_BASIS_HPP

#include <cstddef>
#include <vector>

#include "orbitbasis/linalg.hpp"
#include "orbitbasis/pauli.hpp"

namespace orbitbasis {

// Orbit {U_g |psi>} of a fiducial state, ordered by group label; states[0]
// is the fiducial itself. `verified` is set by check_orthonormal so that
// deliberately invalid fiducials stay constructible.
struct OrbitBasis {
  GroupDescriptor group;
  StateVector fiducial;
  std::vector<std::vector<int>> labels;
  std::vector<StateVector> states;
  bool verified = false;
};

OrbitBasis orbit(const GroupDescriptor& gd, const StateVector& fid);

struct OrthonormalityReport {
  double max_offdiag = 0.0;
  double max_norm_err = 0.0;
  bool pass = false;
};

// Full Gram check; marks the basis verified on success.
OrthonormalityReport check_orthonormal(OrbitBasis& ob, double tol = kTolNorm);

struct CompletenessReport {
  double max_dev_from_identity = 0.0;
  bool pass = false;
};

// Evaluates sum_g U_g |psi><psi| U_g^dagger against the identity.
CompletenessReport check_completeness(const GroupDescriptor& gd, const StateVector& fid,
                                      double tol = kTolNorm);

// Overlap weights |<Phi_{z,x}|psi>|^2 in label order; the orbit is complete
// iff they are all equal to d^{-n}.
std::vector<double> schur_weights(const StateVector& fid,
                                  const std::vector<EigenbasisEntry>& eig);

// Basis-change unitary whose columns are the orbit states in label order.
// Requires a verified basis.
ComplexMatrix measurement_unitary(const OrbitBasis& ob);

// Schmidt coefficients (descending singular values) of the bipartition
// sites_a | complement.
std::vector<double> schmidt_coefficients(const StateVector& s,
                                         const std::vector<std::size_t>& sites_a);

}  // namespace orbitbasis

#endif  // ORBITBASIS_BASIS_HPP
