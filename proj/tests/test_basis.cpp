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

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "orbitbasis/fiducial.hpp"

using namespace orbitbasis;

namespace {

constexpr double kPi = std::numbers::pi;

// Eigenket of m.sigma for a unit Bloch vector m.
StateVector bloch_eigenket(const std::array<double, 3>& m) {
  double theta = std::acos(m[2]);
  double phi = std::atan2(m[1], m[0]);
  return StateVector({2}, {Complex(std::cos(theta / 2), 0.0),
                           std::polar(std::sin(theta / 2), phi)});
}

StateVector negate(const std::array<double, 3>& m, bool flip) {
  return bloch_eigenket(flip ? std::array<double, 3>{-m[0], -m[1], -m[2]} : m);
}

std::size_t fid_size(std::size_t n, std::size_t d) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= d;
  return out;
}

}  // namespace

TEST_CASE("the canonical two-qubit orbit reproduces the anti-parallel construction") {
  // Expected basis: a |m_j, -m_j> + b |-m_j, m_j> with a, b fixed by the
  // tetrahedron vertex amplitudes.
  double a = (std::sqrt(3.0) + 1.0) / (2.0 * std::sqrt(2.0));
  double b = (std::sqrt(3.0) - 1.0) / (2.0 * std::sqrt(2.0));
  double s3 = 1.0 / std::sqrt(3.0);
  std::vector<std::array<double, 3>> vertices = {
      {s3, s3, s3}, {s3, -s3, -s3}, {-s3, s3, -s3}, {-s3, -s3, s3}};
  std::vector<StateVector> expected;
  for (const auto& m : vertices) {
    StateVector fwd = tensor(negate(m, false), negate(m, true));
    StateVector bwd = tensor(negate(m, true), negate(m, false));
    std::vector<Complex> amps(4);
    for (std::size_t i = 0; i < 4; ++i) amps[i] = a * fwd[i] + b * bwd[i];
    expected.push_back(StateVector({2, 2}, std::move(amps)));
  }

  OrbitBasis ob = orbit(tetra_group(2, 2), ejm_theta(0.0));
  REQUIRE(check_orthonormal(ob).pass);
  // each expected state matches exactly one orbit state up to a global phase
  for (const StateVector& want : expected) {
    int hits = 0;
    for (const StateVector& got : ob.states) {
      if (std::abs(std::abs(inner(want, got)) - 1.0) < 1e-10) ++hits;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("orbit states agree with dense group-element application") {
  // independent route: multiply out the dense element matrices instead of
  // the digit-wise word action
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    GroupDescriptor gd = tetra_group(n, d);
    StateVector fid =
        (d == 2 && n == 2) ? ejm_theta(0.37)
                           : fiducial_from_phases(make_phase_vector(
                                 n, d, std::vector<double>(fid_size(n, d), 0.4)));
    OrbitBasis ob = orbit(gd, fid);
    auto elements = group_elements(gd);
    REQUIRE(elements.size() == ob.states.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      StateVector dense = mat_apply(elements[i].matrix, fid);
      for (std::size_t j = 0; j < dense.dim(); ++j) {
        CHECK(std::abs(dense[j] - ob.states[i][j]) < 1e-13);
      }
    }
  }
}

TEST_CASE("orbit of an eigenstate collapses to one ray") {
  auto eig = eigenbasis(2, 2);
  OrbitBasis ob = orbit(tetra_group(2, 2), eig[0].state);
  OrthonormalityReport rep = check_orthonormal(ob);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_offdiag == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("real rectangular orbit is orthonormal") {
  OrbitBasis ob = orbit(tetra_group(3, 2), rect_fiducial(3));
  CHECK(check_orthonormal(ob, 1e-12).pass);
  CHECK(ob.states.size() == 8);
}

TEST_CASE("orthonormality, completeness, and weight checks agree") {
  auto eig22 = eigenbasis(2, 2);
  std::vector<Complex> skew(4, Complex(0, 0));
  for (std::size_t j = 0; j < 4; ++j) {
    skew[j] = 0.8 * eig22[0].state[j] + 0.6 * eig22[1].state[j];
  }

  struct Case {
    std::size_t n, d;
    StateVector fid;
  };
  std::vector<Case> corpus;
  corpus.push_back({2, 2, ejm_theta(0.0)});
  corpus.push_back({2, 2, ejm_theta(kPi / 2)});
  corpus.push_back({2, 2, ejm_theta(0.37)});
  corpus.push_back({3, 2, ppi_state(ppi_preset(3))});
  corpus.push_back({3, 2, rect_fiducial(3)});
  corpus.push_back({4, 2, rect_fiducial(4)});
  corpus.push_back({2, 3, czartowski_fiducial(3, hesse_sic(0.0), 1.0 / 3.0, 0.0)});
  corpus.push_back({2, 2, StateVector({2, 2}, skew)});                     // unequal weights
  corpus.push_back({2, 2, StateVector::basis_state({2, 2}, 0)});          // computational seed
  corpus.push_back({2, 2, eig22[0].state});                               // single eigenstate

  for (const Case& c : corpus) {
    GroupDescriptor gd = tetra_group(c.n, c.d);
    OrbitBasis ob = orbit(gd, c.fid);
    bool ortho = check_orthonormal(ob, 1e-10).pass;
    bool complete = check_completeness(gd, c.fid, 1e-10).pass;
    auto weights = schur_weights(c.fid, eigenbasis(c.n, c.d));
    double uniform = 1.0 / static_cast<double>(weights.size());
    bool equal_weights = true;
    for (double w : weights) {
      if (std::abs(w - uniform) > 1e-10) equal_weights = false;
    }
    CHECK(ortho == complete);
    CHECK(ortho == equal_weights);
  }
}

TEST_CASE("completeness diagnostics on failure cases") {
  GroupDescriptor gd = tetra_group(2, 2);
  CompletenessReport good = check_completeness(gd, ejm_theta(0.0), 1e-12);
  CHECK(good.pass);
  CHECK(good.max_dev_from_identity < 1e-12);
  CompletenessReport bad = check_completeness(gd, StateVector::basis_state({2, 2}, 0), 1e-12);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_dev_from_identity == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("schur weights") {
  auto eig22 = eigenbasis(2, 2);
  auto w_ejm = schur_weights(ejm_theta(0.0), eig22);
  for (double w : w_ejm) CHECK(w == doctest::Approx(0.25).epsilon(1e-12));
  auto w_eig = schur_weights(eig22[0].state, eig22);
  CHECK(w_eig[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < 4; ++i) CHECK(w_eig[i] < 1e-14);
  auto w_rect = schur_weights(rect_fiducial(3), eigenbasis(3, 2));
  for (double w : w_rect) CHECK(w == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("measurement unitary") {
  OrbitBasis unverified = orbit(tetra_group(2, 2), ejm_theta(0.0));
  CHECK_THROWS_AS(measurement_unitary(unverified), std::logic_error);

  OrbitBasis bell = orbit(tetra_group(2, 2), ejm_theta(kPi / 2));
  REQUIRE(check_orthonormal(bell).pass);
  ComplexMatrix m = measurement_unitary(bell);
  CHECK(is_unitary(m, 1e-12));
  // columns reproduce the orbit states exactly
  for (std::size_t col = 0; col < 4; ++col) {
    StateVector moved = mat_apply(m, StateVector::basis_state({2, 2}, col));
    for (std::size_t jj = 0; jj < 4; ++jj) CHECK(moved[jj] == bell.states[col][jj]);
  }
  // the theta = pi/2 orbit consists of maximally entangled states
  for (const StateVector& s : bell.states) {
    auto sc = schmidt_coefficients(s, {0});
    CHECK(sc[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(sc[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("orbits are isoentangled across every bipartition") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= d;
    std::vector<double> alphas(count);
    for (double& a : alphas) a = dist(rng);
    StateVector fid = fiducial_from_phases(make_phase_vector(n, d, alphas));
    OrbitBasis ob = orbit(tetra_group(n, d), fid);
    REQUIRE(check_orthonormal(ob, 1e-10).pass);
    // every nontrivial bipartition, indexed by subset bitmask
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> sites_a;
      for (std::size_t site = 0; site < n; ++site) {
        if (mask & (std::size_t{1} << site)) sites_a.push_back(site);
      }
      auto reference = schmidt_coefficients(ob.states[0], sites_a);
      for (const StateVector& s : ob.states) {
        auto sc = schmidt_coefficients(s, sites_a);
        for (std::size_t i = 0; i < sc.size(); ++i) {
          CHECK(std::abs(sc[i] - reference[i]) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("orbit input validation") {
  CHECK_THROWS_AS(orbit(tetra_group(2, 2), StateVector::basis_state({2}, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(orbit(tetra_group(2, 2), StateVector({2, 2}, {0.5, 0, 0, 0})),
                  std::invalid_argument);
}
