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

#include "orbitbasis/fiducial.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace orbitbasis {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

long long binomial(unsigned n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

double reduce_phase(double alpha) {
  double r = std::remainder(alpha, 2.0 * kPi);  // (-pi, pi] up to the -pi edge
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

PhaseVector make_phase_vector(std::size_t n, std::size_t d, std::vector<double> alphas) {
  if (alphas.size() != pow_size(d, n)) {
    throw std::invalid_argument("PhaseVector: need one phase per eigenbasis label");
  }
  for (double& a : alphas) {
    if (!std::isfinite(a)) throw std::invalid_argument("PhaseVector: non-finite phase");
    a = reduce_phase(a);
  }
  return PhaseVector{n, d, std::move(alphas)};
}

StateVector fiducial_from_phases(const PhaseVector& pv) {
  auto eig = eigenbasis(pv.n, pv.d);
  if (eig.size() != pv.alphas.size()) {
    throw std::invalid_argument("fiducial_from_phases: phase count mismatch");
  }
  std::size_t dim = eig.size();
  double weight = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  for (std::size_t l = 0; l < dim; ++l) {
    Complex coeff = weight * Complex(std::cos(pv.alphas[l]), std::sin(pv.alphas[l]));
    for (std::size_t j = 0; j < dim; ++j) amps[j] += coeff * eig[l].state[j];
  }
  return StateVector(std::vector<std::size_t>(pv.n, pv.d), std::move(amps));
}

ComplexMatrix normal_form_unitary(const PhaseVector& pv) {
  std::size_t dim = pow_size(pv.d, pv.n);
  if (pv.alphas.size() != dim) {
    throw std::invalid_argument("normal_form_unitary: phase count mismatch");
  }
  ComplexMatrix h = fourier_gate(pv.d);
  ComplexMatrix hpow = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < pv.n; ++i) hpow = kron(hpow, h);
  ComplexMatrix hsite = kron(ComplexMatrix::identity(dim / pv.d), h.adjoint());
  std::vector<Complex> diag(dim);
  for (std::size_t l = 0; l < dim; ++l)
    diag[l] = Complex(std::cos(pv.alphas[l]), std::sin(pv.alphas[l]));
  return sum_chain(pv.n, pv.d) * hsite * ComplexMatrix::diagonal(diag) * hpow;
}

PhaseVector ejm_theta_phases(double theta) {
  return make_phase_vector(2, 2, {0.0, kPi / 2.0, -kPi / 2.0, theta + kPi / 2.0});
}

StateVector ejm_theta(double theta) {
  Complex i(0.0, 1.0);
  double s2 = std::sqrt(2.0);
  Complex eit = std::exp(i * theta);
  std::vector<Complex> amps = {
      0.5 * std::exp(i * (kPi / 4.0)),
      0.5 * (-i) * (1.0 + eit) / s2,
      0.5 * (-i) * (1.0 - eit) / s2,
      0.5 * std::exp(-i * (kPi / 4.0)),
  };
  return StateVector({2, 2}, std::move(amps));
}

long long krawtchouk(unsigned n, unsigned k, unsigned m) {
  if (k > n || m > n) throw std::invalid_argument("krawtchouk: need 0 <= k, m <= n");
  long long acc = 0;
  for (unsigned m1 = 0; m1 <= m; ++m1) {
    long long term = binomial(m, m1) * binomial(n - m, static_cast<long long>(k) - m1);
    acc += (m1 % 2 == 0) ? term : -term;
  }
  return acc;
}

PPIResult ppi_solve(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ppi_solve: need n >= 2");
  std::size_t half = n / 2;  // (n-1)/2 for odd n
  if (n % 2 == 1) {
    // Square system in the pair weights q_k, rows indexed by the Z-string
    // length 2m. The companion system for the shifted correlators shares the
    // matrix with a zero right-hand side, so its solution is identically 0.
    std::size_t size = half + 1;
    std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
    std::vector<Rational> rhs(size, Rational(0));
    rhs[0] = Rational(1);
    for (std::size_t m = 0; m < size; ++m)
      for (std::size_t k = 0; k < size; ++k)
        mat[m][k] = Rational(krawtchouk(n, k, 2 * m));
    std::vector<Rational> q = solve_rational_system(mat, rhs);
    PPISolution sol;
    sol.n = n;
    sol.weights = std::move(q);
    sol.thetas.assign(size, 0.0);
    sol.alphas.assign(size, 0.0);
    return sol;
  }
  // Even n: the middle Dicke weight joins both systems as an extra unknown
  // and the two unique solutions disagree on it.
  std::size_t size = half + 1;
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t k = 0; k < half; ++k) mat[m][k] = Rational(krawtchouk(n, k, 2 * m));
    mat[m][half] = Rational(krawtchouk(n, half, 2 * m));
  }
  std::vector<Rational> rhs_phase(size, Rational(0));
  rhs_phase[0] = Rational(1);
  std::vector<Rational> sol_phase = solve_rational_system(mat, rhs_phase);
  std::vector<Rational> sol_shift = solve_rational_system(mat, std::vector<Rational>(size, 0));
  PPIInfeasibility cert;
  cert.n = n;
  cert.middle_weight_phase_system = sol_phase[half];
  cert.middle_weight_shift_system = sol_shift[half];
  cert.weights.assign(sol_phase.begin(), sol_phase.end() - 1);
  return cert;
}

PPISolution ppi_preset(std::size_t n) {
  PPIResult r = ppi_solve(n);
  if (!std::holds_alternative<PPISolution>(r)) {
    throw std::domain_error("ppi_preset: no permutation-invariant fiducial for even n");
  }
  PPISolution sol = std::get<PPISolution>(r);
  if (n == 3) {
    sol.thetas = {0.0, std::atan(1.0 / 3.0)};
    sol.alphas = {0.0, std::atan(1.0 / 3.0)};
  }
  return sol;
}

StateVector ppi_state(const PPISolution& sol) {
  std::size_t n = sol.n;
  if (n % 2 != 1) throw std::invalid_argument("ppi_state: n must be odd");
  std::size_t half = (n - 1) / 2;
  if (sol.thetas.size() != half + 1 || sol.alphas.size() != half + 1) {
    throw std::invalid_argument("ppi_state: need one (theta, alpha) pair per weight");
  }
  double scale = 1.0 / std::sqrt(static_cast<double>(pow_size(2, n - 1)));
  std::vector<Complex> coeff(n + 1, Complex(0.0, 0.0));  // a_k e^{i alpha_k}
  for (std::size_t k = 0; k <= half; ++k) {
    double ak = std::cos(sol.thetas[k]) * scale;
    double ank = std::sin(sol.thetas[k]) * scale;
    coeff[k] = ak * Complex(std::cos(sol.alphas[k]), std::sin(sol.alphas[k]));
    double alpha_nk = sol.alphas[k] + kPi / 2.0;
    coeff[n - k] = ank * Complex(std::cos(alpha_nk), std::sin(alpha_nk));
  }
  std::size_t dim = pow_size(2, n);
  std::vector<Complex> amps(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    amps[idx] = coeff[std::popcount(idx)];
  }
  return StateVector(std::vector<std::size_t>(n, 2), std::move(amps));
}

StateVector rect_fiducial(std::size_t n) {
  if (n < 2) throw std::invalid_argument("rect_fiducial: need n >= 2");
  std::size_t dim = pow_size(2, n);
  std::size_t halfdim = dim / 2;
  double amp = 1.0 / std::sqrt(static_cast<double>(halfdim));
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  amps[halfdim - 1] = amp;  // |0,1,...,1>
  for (std::size_t idx = halfdim + 1; idx < dim; ++idx) amps[idx] = amp;
  return StateVector(std::vector<std::size_t>(n, 2), std::move(amps));
}

StateVector both_orientation_preset() {
  double scale = 1.0 / (2.0 * std::sqrt(10.0));
  Complex i(0.0, 1.0);
  std::vector<Complex> amps = {3.0 * scale, (-3.0 - i) * scale, 1.0 * scale, -3.0 * i * scale,
                               1.0 * scale, -3.0 * i * scale,   0.0,         -i * scale};
  return StateVector({2, 2, 2}, std::move(amps));
}

StateVector hesse_sic(double theta) {
  double s = 1.0 / std::sqrt(2.0);
  Complex i(0.0, 1.0);
  return StateVector({3}, {s, -s * std::exp(i * theta), Complex(0.0, 0.0)});
}

StateVector qubit_sic_fiducial() {
  double cb = 1.0 / std::sqrt(3.0);  // cos of the polar angle
  double c = std::sqrt((1.0 + cb) / 2.0);
  double s = std::sqrt((1.0 - cb) / 2.0);
  Complex i(0.0, 1.0);
  return StateVector({2}, {Complex(c, 0.0), s * std::exp(i * kPi / 4.0)});
}

double czartowski_alpha(std::size_t d, double q) {
  double dd = static_cast<double>(d);
  double root = std::sqrt(dd + 1.0);
  if (q < (root - 1.0) / dd - 1e-12 || q > (root + 1.0) / dd + 1e-12) {
    throw std::domain_error("czartowski_alpha: q outside [" + std::to_string((root - 1.0) / dd) +
                            ", " + std::to_string((root + 1.0) / dd) + "]");
  }
  double c = (dd * q * q + 1.0) / (2.0 * q * root);
  if (c > 1.0) c = 1.0;
  return std::acos(c);
}

StateVector czartowski_fiducial(std::size_t d, const StateVector& sic_fid, double q,
                                double alpha) {
  if (sic_fid.dim() != d || sic_fid.site_count() != 1) {
    throw std::invalid_argument("czartowski_fiducial: SIC fiducial must be a single qudit");
  }
  if (!sic_fid.is_normalized(1e-9)) {
    throw std::invalid_argument("czartowski_fiducial: SIC fiducial must be unit norm");
  }
  double dd = static_cast<double>(d);
  double required = (dd * q * q + 1.0) / (2.0 * q * std::sqrt(dd + 1.0));
  double residual = std::abs(std::cos(alpha) - required);
  if (!(residual <= 1e-9)) {
    throw std::invalid_argument(
        "czartowski_fiducial: cos(alpha) = (d q^2 + 1)/(2 q sqrt(d+1)) violated, residual " +
        std::to_string(residual));
  }
  double front = std::sqrt((dd + 1.0) / dd);
  Complex i(0.0, 1.0);
  Complex back = q * std::exp(i * alpha) / std::sqrt(dd);
  std::vector<Complex> amps(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      Complex v = front * sic_fid[j] * std::conj(sic_fid[k]);
      if (j == k) v -= back;
      amps[j * d + k] = v;
    }
  }
  return StateVector({d, d}, std::move(amps)).normalized();
}

}  // namespace orbitbasis
