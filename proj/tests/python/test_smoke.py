# Copyright 2026 The OrbitBasis Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke checks for the python bindings."""

import math

import orbitbasis as ob


def test_canonical_basis():
    fid = ob.ejm_theta(0.0)
    report = ob.check_orthonormal(fid)
    assert report.passed
    assert report.max_offdiag < 1e-12
    x, y, z = ob.bloch_vector(fid, 0)
    assert max(abs(x - 0.5), abs(y - 0.5), abs(z - 0.5)) < 1e-12
    assert len(ob.orbit_states(fid)) == 4
    sites = ob.geometry_report(fid)
    assert sites[0]["class"] == "RegularTetrahedron"
    assert abs(sites[0]["circumradius"] - math.sqrt(3) / 2) < 1e-12


def test_levels():
    assert ob.ejm_family_level(0.0) == 3
    assert ob.ejm_family_level(math.pi / 2) == 2
    assert ob.level_of_measurement(ob.ejm_theta_phases(0.0)) == 3
    poly = ob.PhasePolynomial(2, 2, [0, 0, 0, 1])
    assert ob.cgk_level(poly) == 3


def test_census_level3():
    result = ob.census(2, 3, 2)
    assert len(result["entries"]) == 3
    classes = {tuple(site["class"] for site in e["sites"]) for e in result["entries"]}
    assert ("RegularTetrahedron", "RegularTetrahedron") in classes


def test_ppi():
    sol = ob.ppi_solve(3)
    assert sol["feasible"]
    assert sol["weights"] == ["1/4", "1/4"]
    cert = ob.ppi_solve(4)
    assert not cert["feasible"]
    state = ob.ppi_state(3)
    amp = state.amplitudes[1]
    assert abs(amp - complex(0.45, 0.15)) < 1e-12


def test_qudit():
    fid = ob.czartowski_fiducial(3, ob.hesse_sic(0.0), 1 / 3, ob.czartowski_alpha(3, 1 / 3))
    report = ob.check_orthonormal(fid, 1e-10)
    assert report.passed


def test_fig3():
    rows = dict()
    for theta, level in ob.fig3_data(6):
        rows[round(theta / math.pi, 6)] = level
    assert rows[0.0] == 3
    assert rows[0.5] == 2
    assert rows[0.25] == 4


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
