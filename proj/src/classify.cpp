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

#include "orbitbasis/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "orbitbasis/basis.hpp"
#include "orbitbasis/pauli.hpp"

namespace orbitbasis {

namespace {

constexpr double kPi = std::numbers::pi;

// Marginal purity threshold: a site counts as pure when its Bloch norm
// exceeds 1 - kPurityMargin. The dyadic-phase fiducials either hit norm 1
// exactly or stay well below it.
constexpr double kPurityMargin = 1e-7;

struct PrecisionWindow {
  int lo;
  int hi;
};

PrecisionWindow precision_window(std::size_t n, int k) {
  int spread = static_cast<int>(n) - 1;  // a level-k tuple needs m >= k - (n-1)
  return PrecisionWindow{std::max(1, k - spread), std::max(1, k)};
}

void require_envelope(std::size_t n, int k) {
  if (k < 1) throw std::invalid_argument("census: level must be >= 1");
  bool ok = (n == 2 && k <= 8) || (n == 3 && k <= 4);
  if (!ok) {
    throw std::length_error("census: n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            " outside the supported envelope (would scan " +
                            std::to_string(census_work_estimate(n, k)) +
                            " coefficient tuples)");
  }
}

int tuple_level(const std::vector<std::uint32_t>& order,
                const std::vector<std::uint32_t>& coeffs, int m) {
  int level = 1;
  for (std::uint32_t mask : order) {
    std::uint32_t a = coeffs[mask];
    if (a == 0) continue;
    level = std::max(level, (m - nu2(a) - 1) + std::popcount(mask));
  }
  return level;
}

long long round12(double v) {
  double r = std::round(v * 1e12);
  if (r == 0.0) r = 0.0;  // collapse -0
  return static_cast<long long>(r);
}

// Numeric form of the dedup signature, cheap enough for the scan loop:
// per site (class, circumradius, six edges) rounded to 12 decimals, sites
// sorted.
using NumericKey = std::vector<long long>;

NumericKey numeric_key(const std::vector<SiteGeometry>& sites) {
  std::vector<std::array<long long, 8>> blocks;
  blocks.reserve(sites.size());
  for (const SiteGeometry& g : sites) {
    std::array<long long, 8> b{};
    b[0] = static_cast<long long>(g.cls);
    b[1] = round12(g.circumradius);
    for (int i = 0; i < 6; ++i) b[2 + i] = round12(g.edge_lengths[i]);
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  NumericKey key;
  key.reserve(blocks.size() * 8);
  for (const auto& b : blocks)
    for (long long v : b) key.push_back(v);
  return key;
}

struct ScanHit {
  int m;
  std::vector<std::uint32_t> tuple;  // coefficient values in subset_order
  bool separable;
};

bool tuple_less(const ScanHit& a, const ScanHit& b) {
  if (a.m != b.m) return a.m < b.m;
  return a.tuple < b.tuple;
}

// Flattened eigenbasis amplitudes for qubit systems, Phi[label][component].
std::vector<std::vector<Complex>> eigenbasis_table(std::size_t n) {
  auto eig = eigenbasis(n, 2);
  std::vector<std::vector<Complex>> table(eig.size());
  for (std::size_t l = 0; l < eig.size(); ++l) table[l] = eig[l].state.amplitudes();
  return table;
}

// One worker's share of the coefficient scan for a fixed precision m: all
// tuples whose leading coefficient lies in [first_lo, first_hi).
void scan_slice(std::size_t n, int k, int m, std::uint32_t first_lo, std::uint32_t first_hi,
                const std::vector<std::uint32_t>& order,
                const std::vector<std::vector<Complex>>& eigen_table,
                std::map<NumericKey, ScanHit>& best, std::map<NumericKey, ScanHit>& best_sep,
                std::uint64_t& candidates, std::uint64_t& level_matches) {
  std::size_t dim = std::size_t{1} << n;
  std::size_t terms = order.size();
  std::uint32_t modulus = 1u << m;
  std::vector<std::uint32_t> tuple(terms, 0);
  std::vector<std::uint32_t> coeffs(dim, 0);
  std::vector<std::uint32_t> table(dim, 0);
  std::vector<Complex> psi(dim);
  tuple[0] = first_lo;
  if (first_lo >= first_hi) return;
  double weight = 1.0 / std::sqrt(static_cast<double>(dim));
  while (true) {
    ++candidates;
    bool any_odd = false;
    for (std::size_t i = 0; i < terms; ++i) {
      coeffs[order[i]] = tuple[i];
      if (tuple[i] & 1u) any_odd = true;
    }
    if (any_odd && tuple_level(order, coeffs, m) == k) {
      ++level_matches;
      // Phase table by subset sums, fiducial by combining eigenvectors.
      for (std::size_t point = 0; point < dim; ++point) {
        std::uint32_t acc = 0;
        for (std::size_t s = point;; s = (s - 1) & point) {
          if (s != 0) acc += coeffs[s];
          if (s == 0) break;
        }
        table[point] = acc & (modulus - 1u);
      }
      std::fill(psi.begin(), psi.end(), Complex(0.0, 0.0));
      double unit = 2.0 * kPi / static_cast<double>(modulus);
      for (std::size_t l = 0; l < dim; ++l) {
        double angle = unit * table[l];
        Complex coeff = weight * Complex(std::cos(angle), std::sin(angle));
        const std::vector<Complex>& phi = eigen_table[l];
        for (std::size_t j = 0; j < dim; ++j) psi[j] += coeff * phi[j];
      }
      // Per-site Bloch points of the fiducial seed the class signature.
      std::vector<SiteGeometry> sites;
      sites.reserve(n);
      bool separable = true;
      std::size_t stride = dim;
      for (std::size_t site = 0; site < n; ++site) {
        stride >>= 1;
        Complex rho01(0.0, 0.0);
        double rho00 = 0.0;
        for (std::size_t idx = 0; idx < dim; ++idx) {
          if (idx & stride) continue;  // idx has the site digit 0
          rho01 += psi[idx] * std::conj(psi[idx | stride]);
          rho00 += std::norm(psi[idx]);
        }
        BlochPoint p{2.0 * rho01.real(), -2.0 * rho01.imag(), 2.0 * rho00 - 1.0};
        if (p.norm() < 1.0 - kPurityMargin) separable = false;
        sites.push_back(classify_bloch_orbit(p));
      }
      NumericKey key = numeric_key(sites);
      std::map<NumericKey, ScanHit>& target = separable ? best_sep : best;
      auto it = target.find(key);
      if (it == target.end()) {
        target.emplace(std::move(key), ScanHit{m, tuple, separable});
      } else if (m < it->second.m || (m == it->second.m && tuple < it->second.tuple)) {
        it->second = ScanHit{m, tuple, separable};
      }
    }
    // Odometer, last coordinate fastest; the first coordinate stays in
    // [first_lo, first_hi).
    std::size_t pos = terms;
    while (pos-- > 0) {
      std::uint32_t limit = (pos == 0) ? first_hi : modulus;
      if (++tuple[pos] < limit) break;
      if (pos == 0) return;
      tuple[pos] = 0;
    }
  }
}

CensusEntry build_entry(std::size_t n, const ScanHit& hit,
                        const std::vector<std::uint32_t>& order) {
  std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> coeffs(dim, 0);
  for (std::size_t i = 0; i < order.size(); ++i) coeffs[order[i]] = hit.tuple[i];
  CensusEntry entry;
  entry.poly = make_phase_polynomial(n, hit.m, std::move(coeffs));
  entry.level = cgk_level(entry.poly);
  entry.phases = phase_vector_from_polynomial(entry.poly);
  entry.fiducial = fiducial_from_phases(entry.phases);
  OrbitBasis ob = orbit(tetra_group(n, 2), entry.fiducial);
  OrthonormalityReport rep = check_orthonormal(ob, 1e-10);
  entry.orthonormality_residual = std::max(rep.max_offdiag, rep.max_norm_err);
  entry.report = geometry_report(ob);
  entry.dedup_key = geometry_key(entry.report);
  entry.separable = hit.separable;
  return entry;
}

}  // namespace

PhaseVector phase_vector_from_polynomial(const PhasePolynomial& f) {
  std::vector<std::uint32_t> table = phase_table(f);
  double unit = 2.0 * kPi / static_cast<double>(f.modulus());
  std::vector<double> alphas(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) alphas[i] = unit * table[i];
  return make_phase_vector(f.n, 2, std::move(alphas));
}

std::uint64_t census_work_estimate(std::size_t n, int k) {
  std::size_t terms = (std::size_t{1} << n) - 1;
  PrecisionWindow window = precision_window(n, k);
  std::uint64_t total = 0;
  for (int m = window.lo; m <= window.hi; ++m) {
    std::uint64_t per = 1;
    for (std::size_t t = 0; t < terms; ++t) {
      if (per > (std::uint64_t{1} << 58)) return per;
      per *= (std::uint64_t{1} << m);
    }
    total += per;
  }
  return total;
}

void for_each_polynomial(std::size_t n, int k,
                         const std::function<void(const PhasePolynomial&)>& fn) {
  require_envelope(n, k);
  std::vector<std::uint32_t> order = subset_order(n);
  std::size_t dim = std::size_t{1} << n;
  PrecisionWindow window = precision_window(n, k);
  for (int m = window.lo; m <= window.hi; ++m) {
    std::uint32_t modulus = 1u << m;
    std::vector<std::uint32_t> tuple(order.size(), 0);
    std::vector<std::uint32_t> coeffs(dim, 0);
    while (true) {
      bool any_odd = false;
      for (std::size_t i = 0; i < order.size(); ++i) {
        coeffs[order[i]] = tuple[i];
        if (tuple[i] & 1u) any_odd = true;
      }
      if (any_odd && tuple_level(order, coeffs, m) == k) {
        fn(make_phase_polynomial(n, m, coeffs));
      }
      std::size_t pos = order.size();
      bool done = false;
      while (pos-- > 0) {
        if (++tuple[pos] < modulus) break;
        tuple[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
}

std::vector<PhasePolynomial> enumerate_polynomials(std::size_t n, int k) {
  std::vector<PhasePolynomial> out;
  for_each_polynomial(n, k, [&](const PhasePolynomial& f) { out.push_back(f); });
  return out;
}

std::string geometry_key(const GeometryReport& report) {
  std::vector<std::string> parts;
  parts.reserve(report.per_site.size());
  for (const SiteGeometry& g : report.per_site) {
    std::ostringstream os;
    os << to_string(g.cls) << ":" << round12(g.circumradius);
    for (double e : g.edge_lengths) os << ":" << round12(e);
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& p : parts) {
    if (!key.empty()) key += "|";
    key += p;
  }
  return key;
}

CensusResult census(std::size_t n, int k, unsigned threads) {
  require_envelope(n, k);
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  std::vector<std::uint32_t> order = subset_order(n);
  std::vector<std::vector<Complex>> eigen_table = eigenbasis_table(n);
  PrecisionWindow window = precision_window(n, k);

  CensusResult result;
  result.n = n;
  result.k = k;
  std::map<NumericKey, ScanHit> best;
  std::map<NumericKey, ScanHit> best_sep;

  for (int m = window.lo; m <= window.hi; ++m) {
    std::uint32_t modulus = 1u << m;
    unsigned workers = std::min<unsigned>(threads, modulus);
    std::vector<std::map<NumericKey, ScanHit>> local(workers);
    std::vector<std::map<NumericKey, ScanHit>> local_sep(workers);
    std::vector<std::uint64_t> cand(workers, 0), match(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint32_t lo = static_cast<std::uint32_t>((std::uint64_t{modulus} * w) / workers);
      std::uint32_t hi = static_cast<std::uint32_t>((std::uint64_t{modulus} * (w + 1)) / workers);
      pool.emplace_back([&, w, lo, hi]() {
        scan_slice(n, k, m, lo, hi, order, eigen_table, local[w], local_sep[w], cand[w],
                   match[w]);
      });
    }
    for (std::thread& t : pool) t.join();
    for (unsigned w = 0; w < workers; ++w) {
      result.candidates += cand[w];
      result.level_matches += match[w];
      for (auto& [key, hit] : local[w]) {
        auto it = best.find(key);
        if (it == best.end()) {
          best.emplace(key, hit);
        } else if (tuple_less(hit, it->second)) {
          it->second = hit;
        }
      }
      for (auto& [key, hit] : local_sep[w]) {
        auto it = best_sep.find(key);
        if (it == best_sep.end()) {
          best_sep.emplace(key, hit);
        } else if (tuple_less(hit, it->second)) {
          it->second = hit;
        }
      }
    }
  }

  for (const auto& [key, hit] : best) result.entries.push_back(build_entry(n, hit, order));
  for (const auto& [key, hit] : best_sep)
    result.separable_entries.push_back(build_entry(n, hit, order));
  auto entry_less = [](const CensusEntry& a, const CensusEntry& b) {
    if (a.poly.m != b.poly.m) return a.poly.m < b.poly.m;
    return a.poly.coeffs < b.poly.coeffs;
  };
  std::sort(result.entries.begin(), result.entries.end(), entry_less);
  std::sort(result.separable_entries.begin(), result.separable_entries.end(), entry_less);
  return result;
}

std::vector<std::pair<double, int>> fig3_data(int max_m) {
  if (max_m < 2 || max_m > 12) {
    throw std::invalid_argument("fig3_data: precision bound must be in [2, 12]");
  }
  // Distinct dyadic fractions ell/2^m in [0, 1/4], reduced.
  std::vector<std::pair<long long, int>> fractions;
  for (int m = 2; m <= max_m; ++m) {
    for (long long ell = 0; ell <= (1LL << (m - 2)); ++ell) {
      DyadicRational r = make_dyadic(ell, m);
      fractions.emplace_back(r.num, r.exp);
    }
  }
  std::sort(fractions.begin(), fractions.end(), [](const auto& a, const auto& b) {
    return static_cast<double>(a.first) / std::ldexp(1.0, a.second) <
           static_cast<double>(b.first) / std::ldexp(1.0, b.second);
  });
  fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());
  std::vector<std::pair<double, int>> rows;
  rows.reserve(fractions.size());
  for (const auto& [num, exp] : fractions) {
    DyadicRational t{num, exp};
    double theta = 2.0 * kPi * num / std::ldexp(1.0, exp);
    rows.emplace_back(theta, ejm_family_level(t));
  }
  return rows;
}

}  // namespace orbitbasis
