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

"""Orthonormal measurement bases as Pauli orbits of fiducial states."""

from ._core import (  # noqa: F401
    CompletenessReport,
    OrthonormalityReport,
    PhasePolynomial,
    PhaseVector,
    StateVector,
    __version__,
    bloch_vector,
    census,
    cgk_level,
    check_completeness,
    check_orthonormal,
    czartowski_alpha,
    czartowski_fiducial,
    ejm_family_level,
    ejm_theta,
    ejm_theta_phases,
    fiducial_from_phases,
    fig3_data,
    geometry_report,
    hesse_sic,
    krawtchouk,
    level_of_measurement,
    orbit_states,
    polynomial_phases,
    ppi_solve,
    ppi_state,
    qubit_sic_fiducial,
    rect_fiducial,
    schur_weights,
)
