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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbitbasis {

namespace {

double dist(const BlochPoint& a, const BlochPoint& b) {
  double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::array<BlochPoint, 4> sign_images(const BlochPoint& p) {
  return {BlochPoint{p.x, p.y, p.z}, BlochPoint{p.x, -p.y, -p.z},
          BlochPoint{-p.x, p.y, -p.z}, BlochPoint{-p.x, -p.y, p.z}};
}

}  // namespace

double BlochPoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochPoint bloch_vector(const StateVector& s, std::size_t site) {
  if (s.local_dim() != 2) {
    throw std::domain_error("bloch_vector: only qubit marginals have Bloch coordinates");
  }
  ComplexMatrix rho = partial_trace(s, site);
  BlochPoint p;
  p.x = 2.0 * rho(0, 1).real();
  p.y = -2.0 * rho(0, 1).imag();
  p.z = rho(0, 0).real() - rho(1, 1).real();
  return p;
}

std::pair<BlochPoint, BlochPoint> two_qubit_bloch(const PhaseVector& pv) {
  if (pv.n != 2 || pv.d != 2) {
    throw std::invalid_argument("two_qubit_bloch: needs a two-qubit phase vector");
  }
  double a00 = pv.alphas[0], a01 = pv.alphas[1], a10 = pv.alphas[2], a11 = pv.alphas[3];
  BlochPoint rp{std::cos(a10 - a00), std::sin(a10 - a01), std::cos(a01 - a00)};
  BlochPoint rm{std::cos(a11 - a01), std::sin(a11 - a00), -std::cos(a11 - a10)};
  BlochPoint r1{(rp.x + rm.x) / 2.0, (rp.y + rm.y) / 2.0, (rp.z + rm.z) / 2.0};
  BlochPoint r2{(rp.x - rm.x) / 2.0, (rp.y - rm.y) / 2.0, (rp.z - rm.z) / 2.0};
  return {r1, r2};
}

double tetra_volume(const BlochPoint& p) { return (8.0 / 3.0) * std::abs(p.x * p.y * p.z); }

const char* to_string(GeometryClass cls) {
  switch (cls) {
    case GeometryClass::Point:
      return "Point";
    case GeometryClass::LineSegment:
      return "LineSegment";
    case GeometryClass::Rectangle:
      return "Rectangle";
    case GeometryClass::Square:
      return "Square";
    case GeometryClass::RegularTetrahedron:
      return "RegularTetrahedron";
    case GeometryClass::Disphenoid:
      return "Disphenoid";
  }
  return "?";
}

SiteGeometry classify_bloch_orbit(const BlochPoint& representative, double tol) {
  SiteGeometry g;
  g.representative = representative;
  double ax = std::abs(representative.x);
  double ay = std::abs(representative.y);
  double az = std::abs(representative.z);
  if (ax <= tol) ax = 0.0;
  if (ay <= tol) ay = 0.0;
  if (az <= tol) az = 0.0;
  int nonzero = (ax > 0.0) + (ay > 0.0) + (az > 0.0);
  switch (nonzero) {
    case 0:
      g.cls = GeometryClass::Point;
      break;
    case 1:
      g.cls = GeometryClass::LineSegment;
      break;
    case 2: {
      double a = std::max({ax, ay, az});
      double b = ax + ay + az - a;  // the other nonzero magnitude
      g.cls = (std::abs(a - b) <= tol) ? GeometryClass::Square : GeometryClass::Rectangle;
      break;
    }
    default:
      g.cls = (std::abs(ax - ay) <= tol && std::abs(ay - az) <= tol)
                  ? GeometryClass::RegularTetrahedron
                  : GeometryClass::Disphenoid;
      break;
  }
  g.circumradius = representative.norm();
  // Opposite edges of the sign-pattern tetrahedron come in equal pairs.
  double e_yz = 2.0 * std::sqrt(ay * ay + az * az);
  double e_xz = 2.0 * std::sqrt(ax * ax + az * az);
  double e_xy = 2.0 * std::sqrt(ax * ax + ay * ay);
  g.edge_lengths = {e_yz, e_yz, e_xz, e_xz, e_xy, e_xy};
  std::sort(g.edge_lengths.begin(), g.edge_lengths.end());
  g.volume = tetra_volume(representative);
  double prod = representative.x * representative.y * representative.z;
  if (ax == 0.0 || ay == 0.0 || az == 0.0) {
    g.orientation = 0;
  } else {
    g.orientation = (prod > 0.0) ? 1 : -1;
  }
  auto images = sign_images(representative);
  for (const BlochPoint& q : images) {
    bool seen = false;
    for (const BlochPoint& r : g.points) {
      if (dist(q, r) <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) g.points.push_back(q);
  }
  return g;
}

SiteGeometry classify_site_geometry(const std::vector<BlochPoint>& points, double tol) {
  if (points.empty()) throw std::invalid_argument("classify_site_geometry: empty point set");
  std::vector<BlochPoint> distinct;
  for (const BlochPoint& p : points) {
    bool seen = false;
    for (const BlochPoint& q : distinct) {
      if (dist(p, q) <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) distinct.push_back(p);
  }
  SiteGeometry g = classify_bloch_orbit(distinct[0], tol);
  if (distinct.size() != g.points.size()) {
    throw std::invalid_argument("classify_site_geometry: point set is not a sign-pattern orbit");
  }
  for (const BlochPoint& p : distinct) {
    bool matched = false;
    for (const BlochPoint& q : g.points) {
      if (dist(p, q) <= tol) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw std::invalid_argument(
          "classify_site_geometry: point set is not closed under the sign-pattern action");
    }
  }
  return g;
}

GeometryReport geometry_report(const OrbitBasis& ob, double tol) {
  if (ob.group.d != 2) {
    throw std::domain_error("geometry_report: Bloch geometry is defined for qubits only");
  }
  if (!ob.verified) {
    throw std::logic_error("geometry_report: basis has not passed check_orthonormal");
  }
  GeometryReport report;
  report.per_site.reserve(ob.group.n);
  for (std::size_t site = 0; site < ob.group.n; ++site) {
    std::vector<BlochPoint> pts;
    pts.reserve(ob.states.size());
    for (const StateVector& s : ob.states) pts.push_back(bloch_vector(s, site));
    // The fiducial's own point (states[0]) is the classification seed.
    std::vector<BlochPoint> distinct;
    for (const BlochPoint& p : pts) {
      bool seen = false;
      for (const BlochPoint& q : distinct) {
        if (dist(p, q) <= tol) {
          seen = true;
          break;
        }
      }
      if (!seen) distinct.push_back(p);
    }
    if (distinct.size() > 4) {
      throw std::invalid_argument("geometry_report: more than four distinct points on a site");
    }
    report.per_site.push_back(classify_site_geometry(distinct, tol));
  }
  return report;
}

}  // namespace orbitbasis
