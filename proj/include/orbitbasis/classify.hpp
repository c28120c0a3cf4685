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

#ifndef ORBITBASIS_CLASSIFY_HPP
#define ORBITBASIS_CLASSIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orbitbasis/clifford.hpp"
#include "orbitbasis/fiducial.hpp"
#include "orbitbasis/geometry.hpp"

namespace orbitbasis {

// Phases alpha_{z,x} = (2 pi / 2^m) f(z_1, ..., z_{n-1}, x); the polynomial's
// evaluation-point order coincides with the eigenbasis label order, so the
// diagonal of the induced gate is exactly e^{i alpha} in label order.
PhaseVector phase_vector_from_polynomial(const PhasePolynomial& f);

// Streams every phase polynomial of exactly level k over the admissible
// precision window (m in [k-1, k] for two variables, [k-2, k] for three),
// keeping only tuples with at least one odd coefficient. Order: m ascending,
// then coefficient tuples lexicographic in subset_order. Throws
// std::length_error outside the supported envelope.
void for_each_polynomial(std::size_t n, int k,
                         const std::function<void(const PhasePolynomial&)>& fn);

std::vector<PhasePolynomial> enumerate_polynomials(std::size_t n, int k);

// Coefficient tuples that would have to be scanned for (n, k).
std::uint64_t census_work_estimate(std::size_t n, int k);

struct CensusEntry {
  PhasePolynomial poly;
  int level = 0;
  PhaseVector phases;
  StateVector fiducial;
  GeometryReport report;
  std::string dedup_key;
  bool separable = false;  // every site marginal pure
  double orthonormality_residual = 0.0;
};

struct CensusResult {
  std::size_t n = 0;
  int k = 0;
  std::vector<CensusEntry> entries;            // entangled geometry classes
  std::vector<CensusEntry> separable_entries;  // fully-product classes
  std::uint64_t candidates = 0;                // coefficient tuples scanned
  std::uint64_t level_matches = 0;             // tuples at exactly level k
};

// Canonical signature a geometry class is deduplicated on: the sorted
// per-site tuples (class, circumradius, edge multiset) rounded to 12
// decimals.
std::string geometry_key(const GeometryReport& report);

// Enumerates, prunes on the level formula alone, classifies survivors'
// geometries, and keeps the first representative (smallest m, then
// lexicographic coefficients) of each signature. threads = 0 picks the
// hardware count; the result does not depend on the thread count.
CensusResult census(std::size_t n, int k, unsigned threads = 0);

// Level staircase of the one-parameter family over theta in [0, pi/2]:
// one (theta, level) row per dyadic angle theta = 2 pi ell / 2^m with
// m <= max_m, sorted by theta.
std::vector<std::pair<double, int>> fig3_data(int max_m);

}  // namespace orbitbasis

#endif  // ORBITBASIS_CLASSIFY_HPP
