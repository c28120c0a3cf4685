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

#include "orbitbasis/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orbitbasis/pauli.hpp"

namespace orbitbasis {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDyadicTol = 1e-9;

std::size_t log2_exact(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) {
    throw std::invalid_argument("dimension is not a power of two");
  }
  return n;
}

}  // namespace

int nu2(long long a) {
  if (a == 0) return kNu2Infinity;
  if (a < 0) a = -a;
  int e = 0;
  while ((a & 1) == 0) {
    a >>= 1;
    ++e;
  }
  return e;
}

DyadicRational make_dyadic(long long num, int exp) {
  if (exp < 0) {
    if (exp < -62) throw std::overflow_error("make_dyadic: exponent out of range");
    num <<= -exp;
    exp = 0;
  }
  while (num != 0 && (num & 1) == 0 && exp > 0) {
    num >>= 1;
    --exp;
  }
  if (num == 0) exp = 0;
  return DyadicRational{num, exp};
}

DyadicRational dyadic_add(const DyadicRational& a, const DyadicRational& b) {
  int exp = std::max(a.exp, b.exp);
  long long num = (a.num << (exp - a.exp)) + (b.num << (exp - b.exp));
  return make_dyadic(num, exp);
}

int nu2(const DyadicRational& r) {
  if (r.num == 0) return kNu2Infinity;
  return nu2(r.num) - r.exp;
}

std::optional<DyadicRational> to_dyadic(double value, int max_exp, double tol) {
  for (int exp = 0; exp <= max_exp; ++exp) {
    double scaled = value * static_cast<double>(1LL << exp);
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) <= tol * static_cast<double>(1LL << exp) &&
        std::abs(rounded) < 9.0e15) {
      return make_dyadic(static_cast<long long>(rounded), exp);
    }
  }
  return std::nullopt;
}

PhasePolynomial make_phase_polynomial(std::size_t n, int m, std::vector<std::uint32_t> coeffs) {
  if (n == 0 || n > 20) throw std::invalid_argument("PhasePolynomial: bad variable count");
  if (m < 1 || m > 30) throw std::invalid_argument("PhasePolynomial: bad precision");
  std::size_t size = std::size_t{1} << n;
  if (coeffs.size() != size) {
    throw std::invalid_argument("PhasePolynomial: need one coefficient per subset mask");
  }
  std::uint32_t mask = (1u << m) - 1u;
  for (std::uint32_t& c : coeffs) c &= mask;
  coeffs[0] = 0;
  return PhasePolynomial{n, m, std::move(coeffs)};
}

std::vector<std::uint32_t> subset_order(std::size_t n) {
  std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> order;
  order.reserve(size - 1);
  for (std::size_t popcnt = 1; popcnt <= n; ++popcnt) {
    // Variable 1 occupies the top bit, so the variable-tuple order is mask
    // descending within a tier.
    for (std::size_t mask = size - 1; mask >= 1; --mask) {
      if (std::popcount(mask) == static_cast<int>(popcnt)) {
        order.push_back(static_cast<std::uint32_t>(mask));
      }
    }
  }
  return order;
}

std::string polynomial_to_string(const PhasePolynomial& f) {
  std::string out;
  for (std::uint32_t mask : subset_order(f.n)) {
    std::uint32_t a = f.coeffs[mask];
    if (a == 0) continue;
    if (!out.empty()) out += " + ";
    if (a != 1) out += std::to_string(a) + " ";
    for (std::size_t var = 1; var <= f.n; ++var) {
      if (mask & (1u << (f.n - var))) out += "z" + std::to_string(var);
    }
  }
  if (out.empty()) out = "0";
  return out + " mod 2^" + std::to_string(f.m);
}

std::vector<std::uint32_t> phase_table(const PhasePolynomial& f) {
  std::size_t size = std::size_t{1} << f.n;
  std::uint32_t mask = f.modulus() - 1u;
  std::vector<std::uint32_t> table(size, 0);
  for (std::size_t point = 0; point < size; ++point) {
    std::uint32_t acc = 0;
    // Monomial of subset S evaluates to 1 exactly when S is contained in
    // the set bits of the point.
    for (std::size_t s = point;; s = (s - 1) & point) {
      if (s != 0) acc += f.coeffs[s];
      if (s == 0) break;
    }
    table[point] = acc & mask;
  }
  return table;
}

int cgk_level(const PhasePolynomial& f) {
  int level = 1;
  for (std::size_t mask = 1; mask < f.coeffs.size(); ++mask) {
    std::uint32_t a = f.coeffs[mask];
    if (a == 0) continue;
    int contribution = (f.m - nu2(a) - 1) + std::popcount(mask);
    level = std::max(level, contribution);
  }
  return level;
}

ComplexMatrix diagonal_gate(const PhasePolynomial& f) {
  std::vector<std::uint32_t> table = phase_table(f);
  double unit = 2.0 * kPi / static_cast<double>(f.modulus());
  std::vector<Complex> diag(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    double angle = unit * table[i];
    diag[i] = Complex(std::cos(angle), std::sin(angle));
  }
  return ComplexMatrix::diagonal(diag);
}

PhasePolynomial interpolate_phase_polynomial(const std::vector<double>& diag_phases, int m) {
  std::size_t size = diag_phases.size();
  std::size_t n = log2_exact(size);
  std::uint32_t modulus = 1u << m;
  double unit = 2.0 * kPi / static_cast<double>(modulus);
  std::vector<long long> values(size);
  for (std::size_t i = 0; i < size; ++i) {
    double scaled = diag_phases[i] / unit;
    double rounded = std::round(scaled);
    if (std::abs(diag_phases[i] - rounded * unit) > kDyadicTol) {
      throw std::domain_error("interpolate_phase_polynomial: phase at entry " +
                              std::to_string(i) + " is not a multiple of 2pi/2^" +
                              std::to_string(m));
    }
    values[i] = static_cast<long long>(rounded);
  }
  std::vector<std::uint32_t> coeffs(size, 0);
  for (std::size_t mask = 1; mask < size; ++mask) {
    long long acc = 0;
    // a_S = sum over subsets T of S of (-1)^{|S|-|T|} f(1_T); the constant
    // f(0) cancels, so a shared global phase drops out.
    for (std::size_t t = mask;; t = (t - 1) & mask) {
      int sgn = ((std::popcount(mask) - std::popcount(t)) % 2 == 0) ? 1 : -1;
      acc += sgn * values[t];
      if (t == 0) break;
    }
    acc %= static_cast<long long>(modulus);
    if (acc < 0) acc += modulus;
    coeffs[mask] = static_cast<std::uint32_t>(acc);
  }
  return make_phase_polynomial(n, m, std::move(coeffs));
}

namespace {

// Unit-modulus multiple of some X^a Z^b word, any global phase.
bool is_pauli_proportional(const ComplexMatrix& u, double tol) {
  std::size_t dim = u.rows();
  std::size_t n = log2_exact(dim);
  for (std::size_t xmask = 0; xmask < dim; ++xmask) {
    Complex scale = u(xmask, 0);  // candidate word has +1 at (xmask, 0)
    if (std::abs(std::abs(scale) - 1.0) > tol) continue;
    for (std::size_t zmask = 0; zmask < dim; ++zmask) {
      bool ok = true;
      for (std::size_t col = 0; col < dim && ok; ++col) {
        std::size_t row_hit = col ^ xmask;
        double sign = (std::popcount(zmask & col) % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t row = 0; row < dim && ok; ++row) {
          Complex expected =
              (row == row_hit) ? scale * sign : Complex(0.0, 0.0);
          if (std::abs(u(row, col) - expected) > tol) ok = false;
        }
      }
      if (ok) return true;
    }
  }
  (void)n;
  return false;
}

bool hierarchy_member_impl(const ComplexMatrix& u, int k, std::size_t n, double tol) {
  if (k == 1) return is_pauli_proportional(u, tol);
  for (std::size_t site = 0; site < n; ++site) {
    for (int which = 0; which < 2; ++which) {
      PauliWord gen = PauliWord::identity(n, 2);
      if (which == 0) {
        gen.x_exps[site] = 1;
      } else {
        gen.z_exps[site] = 1;
      }
      ComplexMatrix conj = u * gen.to_matrix() * u.adjoint();
      if (!hierarchy_member_impl(conj, k - 1, n, tol)) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t hierarchy_work_estimate(std::size_t n, int k) {
  std::uint64_t leaves = 1;
  for (int i = 1; i < k; ++i) {
    if (leaves > (std::uint64_t{1} << 40)) return leaves;
    leaves *= 2 * n;
  }
  std::uint64_t leaf_cost = std::uint64_t{1} << (4 * n);  // Pauli scan of a 2^n matrix
  return leaves * leaf_cost;
}

bool hierarchy_member(const ComplexMatrix& u, int k, double tol) {
  if (k < 1) throw std::invalid_argument("hierarchy_member: level must be >= 1");
  if (!u.is_square()) throw std::invalid_argument("hierarchy_member: unitary must be square");
  std::size_t n = log2_exact(u.rows());
  if (!is_unitary(u, std::max(tol, 1e-9))) {
    throw std::invalid_argument("hierarchy_member: input is not unitary");
  }
  bool permitted = (n == 1 && k <= 6) || (n == 2 && k <= 4) || (n == 3 && k <= 3);
  if (!permitted) {
    throw std::length_error("hierarchy_member: n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) +
                            " is outside the supported envelope (estimated work " +
                            std::to_string(hierarchy_work_estimate(n, k)) + ")");
  }
  return hierarchy_member_impl(u, k, n, tol);
}

int level_of_measurement(const PhaseVector& pv) {
  if (pv.d != 2) throw std::domain_error("level_of_measurement: qubit phase vectors only");
  constexpr int kMaxPrecision = 24;
  double base = pv.alphas[0];
  for (int m = 1; m <= kMaxPrecision; ++m) {
    double unit = 2.0 * kPi / static_cast<double>(1u << m);
    bool ok = true;
    for (double alpha : pv.alphas) {
      double scaled = (alpha - base) / unit;
      double rounded = std::round(scaled);
      if (std::abs((alpha - base) - rounded * unit) > kDyadicTol) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<double> shifted(pv.alphas.size());
    for (std::size_t i = 0; i < pv.alphas.size(); ++i) shifted[i] = pv.alphas[i] - base;
    return cgk_level(interpolate_phase_polynomial(shifted, m));
  }
  for (std::size_t i = 0; i < pv.alphas.size(); ++i) {
    double unit = 2.0 * kPi / static_cast<double>(1u << kMaxPrecision);
    double scaled = (pv.alphas[i] - base) / unit;
    if (std::abs((pv.alphas[i] - base) - std::round(scaled) * unit) > kDyadicTol) {
      throw std::domain_error("level_of_measurement: phase " + std::to_string(pv.alphas[i]) +
                              " at entry " + std::to_string(i) +
                              " is not a dyadic multiple of 2pi");
    }
  }
  throw std::domain_error("level_of_measurement: phases exceed the supported precision");
}

int ejm_family_level(const DyadicRational& theta_over_two_pi) {
  DyadicRational shifted = dyadic_add(theta_over_two_pi, make_dyadic(1, 2));
  int valuation = nu2(shifted);
  if (valuation == kNu2Infinity) return 2;
  // The closed form 1 - nu2(theta/2pi + 1/4); the quadratic coefficient
  // drops out of the polynomial when the valuation is >= 0, leaving the
  // level-2 linear part.
  return std::max(2, 1 - valuation);
}

int ejm_family_level(double theta) {
  std::optional<DyadicRational> t = to_dyadic(theta / (2.0 * kPi), 24, kDyadicTol);
  if (!t) {
    throw std::domain_error("ejm_family_level: theta is not a dyadic multiple of 2pi");
  }
  return ejm_family_level(*t);
}

PhasePolynomial ejm_family_polynomial(long long ell, int m) {
  if (m < 2) throw std::invalid_argument("ejm_family_polynomial: need precision m >= 2");
  std::uint32_t modulus = 1u << m;
  long long quarter = 1LL << (m - 2);
  auto reduce = [&](long long v) {
    v %= static_cast<long long>(modulus);
    if (v < 0) v += modulus;
    return static_cast<std::uint32_t>(v);
  };
  std::vector<std::uint32_t> coeffs(4, 0);
  coeffs[0b10] = reduce(-quarter);       // z1
  coeffs[0b01] = reduce(quarter);        // z2
  coeffs[0b11] = reduce(ell + quarter);  // z1 z2
  return make_phase_polynomial(2, m, std::move(coeffs));
}

}  // namespace orbitbasis
