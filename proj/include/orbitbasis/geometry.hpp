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

#ifndef ORBITBASIS_GEOMETRY_HPP
#define ORBITBASIS_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "orbitbasis/basis.hpp"
#include "orbitbasis/fiducial.hpp"
#include "orbitbasis/linalg.hpp"

namespace orbitbasis {

struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

// (Tr rho X, Tr rho Y, Tr rho Z) of one site's marginal; qubits only.
BlochPoint bloch_vector(const StateVector& s, std::size_t site);

// Closed-form marginal Bloch vectors of a two-qubit phase-vector fiducial,
// r_1 = (r_+ + r_-)/2 and r_2 = (r_+ - r_-)/2 in the phase differences.
std::pair<BlochPoint, BlochPoint> two_qubit_bloch(const PhaseVector& pv);

// Volume of the four-point sign-pattern tetrahedron seeded by p: (8/3)|xyz|.
double tetra_volume(const BlochPoint& p);

// Shape of the orbit {(x,y,z), (x,-y,-z), (-x,y,-z), (-x,-y,z)} of a single
// Bloch point under conjugation by X, Y, Z.
enum class GeometryClass {
  Point,
  LineSegment,
  Rectangle,
  Square,
  RegularTetrahedron,
  Disphenoid,
};

const char* to_string(GeometryClass cls);

struct SiteGeometry {
  GeometryClass cls = GeometryClass::Point;
  BlochPoint representative;
  std::vector<BlochPoint> points;       // deduplicated orbit points
  double circumradius = 0.0;            // |representative|
  std::array<double, 6> edge_lengths{}; // sorted; opposite edges come in pairs
  double volume = 0.0;
  int orientation = 0;                  // sign(x*y*z); 0 for degenerate shapes
};

// Classifies the sign-pattern orbit of a representative point without
// checking any point set.
SiteGeometry classify_bloch_orbit(const BlochPoint& representative, double tol = kTolGeom);

// Classifies a measured point set: deduplicates, checks closure under the
// three sign-pattern reflections, then classifies the representative.
// Throws std::invalid_argument for sets that are not such an orbit.
SiteGeometry classify_site_geometry(const std::vector<BlochPoint>& points,
                                    double tol = kTolGeom);

struct GeometryReport {
  std::vector<SiteGeometry> per_site;
};

// Per-site classification of a verified qubit orbit basis. Each site's Bloch
// points across all basis states must deduplicate to at most the four
// sign-pattern images.
GeometryReport geometry_report(const OrbitBasis& ob, double tol = kTolGeom);

}  // namespace orbitbasis

#endif  // ORBITBASIS_GEOMETRY_HPP
