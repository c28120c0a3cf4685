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

#include "orbitbasis/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "orbitbasis/basis.hpp"
#include "orbitbasis/fiducial.hpp"

using namespace orbitbasis;

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937 rng(404);

PhaseVector random_two_qubit_phases() {
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  return make_phase_vector(2, 2, {dist(rng), dist(rng), dist(rng), dist(rng)});
}

}  // namespace

TEST_CASE("bloch vector basics") {
  BlochPoint up = bloch_vector(StateVector::basis_state({2}, 0), 0);
  CHECK(up.x == doctest::Approx(0.0));
  CHECK(up.y == doctest::Approx(0.0));
  CHECK(up.z == doctest::Approx(1.0));
  BlochPoint r1 = bloch_vector(ejm_theta(0.0), 0);
  CHECK(r1.norm() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  BlochPoint p = bloch_vector(ppi_state(ppi_preset(3)), 2);
  CHECK(p.x == doctest::Approx(0.45).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(0.45).epsilon(1e-12));
  CHECK(p.z == doctest::Approx(0.45).epsilon(1e-12));
  CHECK(p.norm() == doctest::Approx(9.0 * std::sqrt(3.0) / 20.0).epsilon(1e-12));
  CHECK_THROWS_AS(bloch_vector(hesse_sic(0.0), 0), std::domain_error);
}

TEST_CASE("closed-form two-qubit marginals match the partial trace") {
  for (int trial = 0; trial < 1000; ++trial) {
    PhaseVector pv = random_two_qubit_phases();
    auto [r1, r2] = two_qubit_bloch(pv);
    StateVector fid = fiducial_from_phases(pv);
    BlochPoint q1 = bloch_vector(fid, 0);
    BlochPoint q2 = bloch_vector(fid, 1);
    CHECK(std::abs(r1.x - q1.x) < 1e-10);
    CHECK(std::abs(r1.y - q1.y) < 1e-10);
    CHECK(std::abs(r1.z - q1.z) < 1e-10);
    CHECK(std::abs(r2.x - q2.x) < 1e-10);
    CHECK(std::abs(r2.y - q2.y) < 1e-10);
    CHECK(std::abs(r2.z - q2.z) < 1e-10);
    // equal lengths and vanishing combined volume term
    CHECK(std::abs(r1.norm() - r2.norm()) < 1e-12);
    CHECK(std::abs(r1.x * r1.y * r1.z + r2.x * r2.y * r2.z) < 1e-10);
  }
}

TEST_CASE("anti-aligned marginals sit on a cube diagonal") {
  // With the first three phases pinned, the marginals become
  // +-(sin(beta)/2)(1, 1, 1)-type diagonal vectors for every beta.
  for (double beta : {0.2, 1.0, -0.6}) {
    PhaseVector pv = make_phase_vector(2, 2, {0.0, kPi / 2, -kPi / 2, beta});
    auto [r1, r2] = two_qubit_bloch(pv);
    CHECK(std::abs(r1.x + r2.x) < 1e-12);
    CHECK(std::abs(r1.y + r2.y) < 1e-12);
    CHECK(std::abs(r1.z + r2.z) < 1e-12);
    CHECK(std::abs(std::abs(r1.x) - std::abs(r1.y)) < 1e-12);
    CHECK(std::abs(std::abs(r1.y) - std::abs(r1.z)) < 1e-12);
  }
}

TEST_CASE("aligned marginals are only possible at zero length") {
  // Random search over the alignment constraint: drive |r1 - r2| to zero by
  // coordinate descent and confirm the solutions all have zero length.
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 3> a = {dist(rng), dist(rng), dist(rng)};  // alpha01, alpha10, alpha11
    auto gap = [](const std::array<double, 3>& v) {
      PhaseVector pv = make_phase_vector(2, 2, {0.0, v[0], v[1], v[2]});
      auto [r1, r2] = two_qubit_bloch(pv);
      double dx = r1.x - r2.x, dy = r1.y - r2.y, dz = r1.z - r2.z;
      return dx * dx + dy * dy + dz * dz;
    };
    double step = 0.5;
    double value = gap(a);
    for (int iter = 0; iter < 400 && value > 1e-16; ++iter) {
      bool improved = false;
      for (int axis = 0; axis < 3; ++axis) {
        for (double sign : {1.0, -1.0}) {
          std::array<double, 3> candidate = a;
          candidate[axis] += sign * step;
          double v = gap(candidate);
          if (v < value) {
            a = candidate;
            value = v;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    REQUIRE(value < 1e-12);
    PhaseVector pv = make_phase_vector(2, 2, {0.0, a[0], a[1], a[2]});
    auto [r1, r2] = two_qubit_bloch(pv);
    CHECK(r1.norm() < 1e-6);
    CHECK(r2.norm() < 1e-6);
  }
}

TEST_CASE("tetrahedron volume") {
  double s3 = 1.0 / std::sqrt(3.0);
  CHECK(tetra_volume({s3, s3, s3}) == doctest::Approx(8.0 / (9.0 * std::sqrt(3.0))));
  CHECK(tetra_volume({0.3, 0.0, 0.9}) == 0.0);
}

TEST_CASE("classification of representative points") {
  SiteGeometry reg = classify_bloch_orbit({0.5, 0.5, 0.5});
  CHECK(reg.cls == GeometryClass::RegularTetrahedron);
  CHECK(reg.circumradius == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(reg.orientation == 1);
  CHECK(reg.points.size() == 4);

  SiteGeometry rect = classify_bloch_orbit({1.0 / std::sqrt(2.0), 0.5, 0.0});
  CHECK(rect.cls == GeometryClass::Rectangle);
  // sides sqrt(2) and 1 appear among the edges
  CHECK(rect.edge_lengths[0] == doctest::Approx(1.0));
  CHECK(rect.edge_lengths[2] == doctest::Approx(std::sqrt(2.0)));
  CHECK(rect.orientation == 0);

  SiteGeometry line = classify_bloch_orbit({1.0 / std::sqrt(2.0), 0.0, 0.0});
  CHECK(line.cls == GeometryClass::LineSegment);
  CHECK(line.circumradius == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(line.points.size() == 2);

  CHECK(classify_bloch_orbit({0.0, 0.0, 0.0}).cls == GeometryClass::Point);
  CHECK(classify_bloch_orbit({0.4, 0.4, 0.0}).cls == GeometryClass::Square);
  SiteGeometry disph = classify_bloch_orbit({0.5, 0.3, 0.2});
  CHECK(disph.cls == GeometryClass::Disphenoid);
  // opposite edges equal: the sorted edges pair up
  CHECK(disph.edge_lengths[0] == doctest::Approx(disph.edge_lengths[1]));
  CHECK(disph.edge_lengths[2] == doctest::Approx(disph.edge_lengths[3]));
  CHECK(disph.edge_lengths[4] == doctest::Approx(disph.edge_lengths[5]));
}

TEST_CASE("classify_site_geometry validates closure") {
  std::vector<BlochPoint> good = {{0.5, 0.5, 0.5},
                                  {0.5, -0.5, -0.5},
                                  {-0.5, 0.5, -0.5},
                                  {-0.5, -0.5, 0.5}};
  CHECK(classify_site_geometry(good).cls == GeometryClass::RegularTetrahedron);
  std::vector<BlochPoint> bad = {{0.5, 0.5, 0.5}, {0.5, 0.5, -0.5}};
  CHECK_THROWS_AS(classify_site_geometry(bad), std::invalid_argument);
}

TEST_CASE("geometry report for the canonical bases") {
  OrbitBasis ejm = orbit(tetra_group(2, 2), ejm_theta(0.0));
  REQUIRE(check_orthonormal(ejm).pass);
  GeometryReport rep = geometry_report(ejm);
  REQUIRE(rep.per_site.size() == 2);
  for (const SiteGeometry& g : rep.per_site) {
    CHECK(g.cls == GeometryClass::RegularTetrahedron);
    CHECK(g.circumradius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  }
  CHECK(rep.per_site[0].orientation * rep.per_site[1].orientation == -1);

  OrbitBasis rect4 = orbit(tetra_group(4, 2), rect_fiducial(4));
  REQUIRE(check_orthonormal(rect4, 1e-10).pass);
  GeometryReport rep4 = geometry_report(rect4);
  for (const SiteGeometry& g : rep4.per_site) CHECK(g.cls == GeometryClass::Rectangle);
  // first site has the two side lengths interchanged relative to the rest
  CHECK(std::abs(rep4.per_site[0].representative.x) ==
        doctest::Approx(std::abs(rep4.per_site[1].representative.z)).epsilon(1e-9));
  CHECK(std::abs(rep4.per_site[0].representative.z) ==
        doctest::Approx(std::abs(rep4.per_site[1].representative.x)).epsilon(1e-9));

  OrbitBasis rect3 = orbit(tetra_group(3, 2), rect_fiducial(3));
  REQUIRE(check_orthonormal(rect3, 1e-10).pass);
  for (const SiteGeometry& g : geometry_report(rect3).per_site) {
    CHECK(g.cls == GeometryClass::Square);
  }
}

TEST_CASE("both-orientation preset splits the sites") {
  StateVector fid = both_orientation_preset();
  OrbitBasis ob = orbit(tetra_group(3, 2), fid);
  REQUIRE(check_orthonormal(ob, 1e-12).pass);
  GeometryReport rep = geometry_report(ob);
  for (const SiteGeometry& g : rep.per_site) {
    CHECK(g.cls == GeometryClass::RegularTetrahedron);
    CHECK(g.circumradius == doctest::Approx(9.0 * std::sqrt(3.0) / 20.0).epsilon(1e-12));
  }
  CHECK(rep.per_site[0].orientation == 1);
  CHECK(rep.per_site[1].orientation == 1);
  CHECK(rep.per_site[2].orientation == -1);
}

TEST_CASE("orbit bloch points close under the sign-pattern action") {
  for (int trial = 0; trial < 50; ++trial) {
    PhaseVector pv = random_two_qubit_phases();
    StateVector fid = fiducial_from_phases(pv);
    OrbitBasis ob = orbit(tetra_group(2, 2), fid);
    REQUIRE(check_orthonormal(ob, 1e-10).pass);
    GeometryReport rep = geometry_report(ob);  // throws on closure violations
    CHECK(rep.per_site[0].circumradius ==
          doctest::Approx(rep.per_site[1].circumradius).epsilon(1e-10));
  }
}
