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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitbasis/basis.hpp"
#include "orbitbasis/classify.hpp"
#include "orbitbasis/clifford.hpp"
#include "orbitbasis/fiducial.hpp"
#include "orbitbasis/geometry.hpp"

namespace py = pybind11;
using namespace orbitbasis;

namespace {

StateVector state_from_amps(std::size_t n, std::size_t d, std::vector<Complex> amps) {
  return StateVector(std::vector<std::size_t>(n, d), std::move(amps));
}

py::dict site_geometry_dict(const SiteGeometry& g) {
  py::dict out;
  out["class"] = std::string(to_string(g.cls));
  out["representative"] = py::make_tuple(g.representative.x, g.representative.y,
                                         g.representative.z);
  out["circumradius"] = g.circumradius;
  out["edge_lengths"] = g.edge_lengths;
  out["volume"] = g.volume;
  out["orientation"] = g.orientation;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "orthonormal measurement bases as Pauli orbits of fiducial states";

  py::class_<StateVector>(m, "StateVector")
      .def(py::init(&state_from_amps), py::arg("n"), py::arg("d"), py::arg("amplitudes"))
      .def_property_readonly("amplitudes", &StateVector::amplitudes)
      .def_property_readonly("dims", &StateVector::dims)
      .def("norm", &StateVector::norm)
      .def("__len__", &StateVector::dim);

  py::class_<PhaseVector>(m, "PhaseVector")
      .def(py::init([](std::size_t n, std::size_t d, std::vector<double> alphas) {
             return make_phase_vector(n, d, std::move(alphas));
           }),
           py::arg("n"), py::arg("d"), py::arg("alphas"))
      .def_readonly("n", &PhaseVector::n)
      .def_readonly("d", &PhaseVector::d)
      .def_readonly("alphas", &PhaseVector::alphas);

  py::class_<OrthonormalityReport>(m, "OrthonormalityReport")
      .def_readonly("max_offdiag", &OrthonormalityReport::max_offdiag)
      .def_readonly("max_norm_err", &OrthonormalityReport::max_norm_err)
      .def_readonly("passed", &OrthonormalityReport::pass);

  py::class_<CompletenessReport>(m, "CompletenessReport")
      .def_readonly("max_dev_from_identity", &CompletenessReport::max_dev_from_identity)
      .def_readonly("passed", &CompletenessReport::pass);

  py::class_<PhasePolynomial>(m, "PhasePolynomial")
      .def(py::init([](std::size_t n, int m_prec, std::vector<std::uint32_t> coeffs) {
             return make_phase_polynomial(n, m_prec, std::move(coeffs));
           }),
           py::arg("n"), py::arg("m"), py::arg("coeffs"))
      .def_readonly("n", &PhasePolynomial::n)
      .def_readonly("m", &PhasePolynomial::m)
      .def_readonly("coeffs", &PhasePolynomial::coeffs)
      .def("__str__", &polynomial_to_string);

  // fiducial families
  m.def("ejm_theta", &ejm_theta, py::arg("theta"));
  m.def("ejm_theta_phases", &ejm_theta_phases, py::arg("theta"));
  m.def("fiducial_from_phases", &fiducial_from_phases, py::arg("phases"));
  m.def("rect_fiducial", &rect_fiducial, py::arg("n"));
  m.def("hesse_sic", &hesse_sic, py::arg("theta"));
  m.def("qubit_sic_fiducial", &qubit_sic_fiducial);
  m.def("czartowski_alpha", &czartowski_alpha, py::arg("d"), py::arg("q"));
  m.def("czartowski_fiducial", &czartowski_fiducial, py::arg("d"), py::arg("sic_fiducial"),
        py::arg("q"), py::arg("alpha"));
  m.def("krawtchouk", &krawtchouk, py::arg("n"), py::arg("k"), py::arg("m"));
  m.def(
      "ppi_solve",
      [](std::size_t n) -> py::dict {
        PPIResult r = ppi_solve(n);
        py::dict out;
        if (std::holds_alternative<PPISolution>(r)) {
          const auto& sol = std::get<PPISolution>(r);
          out["feasible"] = true;
          py::list weights;
          for (const Rational& q : sol.weights) weights.append(q.to_string());
          out["weights"] = weights;
        } else {
          const auto& cert = std::get<PPIInfeasibility>(r);
          out["feasible"] = false;
          out["middle_weight_phase_system"] = cert.middle_weight_phase_system.to_string();
          out["middle_weight_shift_system"] = cert.middle_weight_shift_system.to_string();
        }
        return out;
      },
      py::arg("n"));
  m.def(
      "ppi_state",
      [](std::size_t n) { return ppi_state(ppi_preset(n)); },
      py::arg("n"), "permutation-invariant fiducial with the canonical parameter preset");

  // orbits and verification
  m.def(
      "orbit_states",
      [](const StateVector& fid) {
        std::size_t n = fid.site_count(), d = fid.local_dim();
        OrbitBasis ob = orbit(tetra_group(n, d), fid);
        std::vector<std::vector<Complex>> out;
        for (const StateVector& s : ob.states) out.push_back(s.amplitudes());
        return out;
      },
      py::arg("fiducial"));
  m.def(
      "check_orthonormal",
      [](const StateVector& fid, double tol) {
        OrbitBasis ob = orbit(tetra_group(fid.site_count(), fid.local_dim()), fid);
        return check_orthonormal(ob, tol);
      },
      py::arg("fiducial"), py::arg("tol") = 1e-12);
  m.def(
      "check_completeness",
      [](const StateVector& fid, double tol) {
        return check_completeness(tetra_group(fid.site_count(), fid.local_dim()), fid, tol);
      },
      py::arg("fiducial"), py::arg("tol") = 1e-12);
  m.def(
      "schur_weights",
      [](const StateVector& fid) {
        return schur_weights(fid, eigenbasis(fid.site_count(), fid.local_dim()));
      },
      py::arg("fiducial"));
  m.def(
      "bloch_vector",
      [](const StateVector& s, std::size_t site) {
        BlochPoint p = bloch_vector(s, site);
        return py::make_tuple(p.x, p.y, p.z);
      },
      py::arg("state"), py::arg("site"));
  m.def(
      "geometry_report",
      [](const StateVector& fid) {
        OrbitBasis ob = orbit(tetra_group(fid.site_count(), 2), fid);
        if (!check_orthonormal(ob, 1e-10).pass) {
          throw std::invalid_argument("geometry_report: orbit is not orthonormal");
        }
        GeometryReport rep = geometry_report(ob);
        py::list out;
        for (const SiteGeometry& g : rep.per_site) out.append(site_geometry_dict(g));
        return out;
      },
      py::arg("fiducial"));

  // hierarchy levels
  m.def("cgk_level", &cgk_level, py::arg("polynomial"));
  m.def("level_of_measurement", &level_of_measurement, py::arg("phases"));
  m.def("ejm_family_level", py::overload_cast<double>(&ejm_family_level), py::arg("theta"));
  m.def("polynomial_phases", &phase_vector_from_polynomial, py::arg("polynomial"));

  // census
  m.def(
      "census",
      [](std::size_t n, int k, unsigned threads) {
        CensusResult result = census(n, k, threads);
        py::list entries;
        for (const CensusEntry& e : result.entries) {
          py::dict row;
          row["m"] = e.poly.m;
          row["polynomial"] = polynomial_to_string(e.poly);
          row["coeffs"] = e.poly.coeffs;
          row["level"] = e.level;
          row["fiducial"] = e.fiducial.amplitudes();
          py::list sites;
          for (const SiteGeometry& g : e.report.per_site) sites.append(site_geometry_dict(g));
          row["sites"] = sites;
          row["dedup_key"] = e.dedup_key;
          entries.append(row);
        }
        py::dict out;
        out["n"] = result.n;
        out["k"] = result.k;
        out["entries"] = entries;
        out["separable_class_count"] = result.separable_entries.size();
        out["candidates"] = result.candidates;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("threads") = 0);
  m.def("fig3_data", &fig3_data, py::arg("max_m"));

  m.attr("__version__") = "0.1.0";
}
