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

// Command-line front end: build and verify orbit measurement bases, run the
// level censuses, and export the family level staircase. Exit codes: 0 on
// success, 1 when a requested verification fails, 2 on usage errors.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitbasis/basis.hpp"
#include "orbitbasis/classify.hpp"
#include "orbitbasis/clifford.hpp"
#include "orbitbasis/fiducial.hpp"
#include "orbitbasis/geometry.hpp"
#include "orbitbasis/io.hpp"

namespace {

using nlohmann::json;
using namespace orbitbasis;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  double tol_norm = 1e-12;
  double tol_geom = 1e-9;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
};

unsigned threads_from_env(unsigned flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("ORBITBASIS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;
}

double parse_fraction(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return std::stod(text);
  return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
}

struct BuiltBasis {
  std::string family;
  json params;
  StateVector fiducial;
  std::size_t n = 2;
  std::size_t d = 2;
};

std::optional<BuiltBasis> build_family(const std::string& family, const std::string& theta_text,
                                       std::size_t n, std::size_t d, const std::string& q_text,
                                       const std::string& alpha_text,
                                       const std::vector<std::string>& phase_texts) {
  BuiltBasis out;
  out.family = family;
  if (family == "ejm") {
    out.fiducial = ejm_theta(0.0);
    out.params = json{{"theta", "0/4*2pi"}};
    return out;
  }
  if (family == "ejm-theta") {
    Angle theta = parse_angle(theta_text.empty() ? "0" : theta_text);
    out.fiducial = ejm_theta(theta.radians);
    out.params = json{{"theta", format_angle(theta)}};
    return out;
  }
  if (family == "ppi") {
    PPIResult result = ppi_solve(n);
    if (std::holds_alternative<PPIInfeasibility>(result)) {
      const auto& cert = std::get<PPIInfeasibility>(result);
      std::cout << "no permutation-invariant fiducial exists for n = " << n << ":\n"
                << "  the Z-string constraints force the middle Dicke weight a_{n/2}^2 = "
                << cert.middle_weight_phase_system.to_string() << "\n"
                << "  the shifted constraints force a_{n/2}^2 = "
                << cert.middle_weight_shift_system.to_string() << "\n"
                << "  (exact rational arithmetic; the two systems are incompatible)\n";
      return std::nullopt;
    }
    out.fiducial = ppi_state(ppi_preset(n));
    out.n = n;
    out.params = json{{"n", n}};
    return out;
  }
  if (family == "rect") {
    out.fiducial = rect_fiducial(n);
    out.n = n;
    out.params = json{{"n", n}};
    return out;
  }
  if (family == "czartowski") {
    if (d != 2 && d != 3) {
      throw std::invalid_argument("czartowski: built-in SIC fiducials cover d = 2 and d = 3");
    }
    // default q at the lower window edge (most distinguishable marginals)
    double q = q_text.empty() ? (std::sqrt(static_cast<double>(d) + 1.0) - 1.0) / d
                              : parse_fraction(q_text);
    double alpha = alpha_text.empty() ? czartowski_alpha(d, q) : parse_angle(alpha_text).radians;
    double theta = theta_text.empty() ? 0.0 : parse_angle(theta_text).radians;
    StateVector sic = (d == 3) ? hesse_sic(theta) : qubit_sic_fiducial();
    out.fiducial = czartowski_fiducial(d, sic, q, alpha);
    out.n = 2;
    out.d = d;
    out.params = json{{"d", d}, {"q", q}, {"alpha", alpha}, {"theta", theta}};
    return out;
  }
  if (family == "phases") {
    std::vector<double> alphas;
    json exact = json::array();
    for (const std::string& t : phase_texts) {
      Angle a = parse_angle(t);
      alphas.push_back(a.radians);
      exact.push_back(format_angle(a));
    }
    out.n = n;
    out.d = d;
    PhaseVector pv = make_phase_vector(n, d, std::move(alphas));
    out.fiducial = fiducial_from_phases(pv);
    out.params = json{{"n", n}, {"d", d}, {"alphas", exact}};
    return out;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

int report_basis(const BuiltBasis& built, const CommonOpts& opts) {
  GroupDescriptor gd = tetra_group(built.n, built.d);
  OrbitBasis ob = orbit(gd, built.fiducial);
  OrthonormalityReport ortho = check_orthonormal(ob, opts.tol_norm);
  CompletenessReport completeness = check_completeness(gd, built.fiducial, opts.tol_norm);
  std::vector<double> weights = schur_weights(built.fiducial, eigenbasis(built.n, built.d));
  GeometryReport geometry;
  bool have_geometry = false;
  if (built.d == 2 && ortho.pass) {
    geometry = geometry_report(ob, opts.tol_geom);
    have_geometry = true;
  }

  std::cout << "family: " << built.family << "  (n=" << built.n << ", d=" << built.d << ")\n";
  std::cout << "orthonormal: " << (ortho.pass ? "yes" : "NO") << "  max offdiag "
            << ortho.max_offdiag << ", max norm err " << ortho.max_norm_err << "\n";
  std::cout << "complete: " << (completeness.pass ? "yes" : "NO") << "  max deviation "
            << completeness.max_dev_from_identity << "\n";
  if (have_geometry) {
    for (std::size_t site = 0; site < geometry.per_site.size(); ++site) {
      const SiteGeometry& g = geometry.per_site[site];
      std::printf("site %zu: %-18s r = %.12f  bloch (%.12f, %.12f, %.12f)\n", site + 1,
                  to_string(g.cls), g.circumradius, g.representative.x, g.representative.y,
                  g.representative.z);
    }
  }

  if (!opts.out.empty()) {
    if (opts.format == "json") {
      json doc = basis_to_json(built.family, built.params, ob, ortho, completeness, weights,
                               have_geometry ? &geometry : nullptr);
      write_text_file(opts.out, doc.dump(2) + "\n");
    } else {
      write_text_file(opts.out, basis_to_csv(ob));
    }
    std::cout << "wrote " << opts.out << "\n";
  }
  return ortho.pass ? kExitOk : kExitVerifyFailed;
}

int verify_file(const std::string& path, const CommonOpts& opts) {
  BasisDocument doc = basis_from_json(json::parse(read_text_file(path)));
  OrthonormalityReport ortho = check_orthonormal(doc.basis, opts.tol_norm);
  CompletenessReport completeness =
      check_completeness(doc.basis.group, doc.basis.fiducial, opts.tol_norm);
  std::vector<double> weights =
      schur_weights(doc.basis.fiducial, eigenbasis(doc.basis.group.n, doc.basis.group.d));
  std::cout << "family: " << doc.family << "\n";
  std::printf("orthonormal: %s  max offdiag %.17g, max norm err %.17g\n",
              ortho.pass ? "yes" : "NO", ortho.max_offdiag, ortho.max_norm_err);
  std::printf("complete: %s  max deviation %.17g\n", completeness.pass ? "yes" : "NO",
              completeness.max_dev_from_identity);
  double wmin = 1.0, wmax = 0.0;
  for (double w : weights) {
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  std::printf("schur weights in [%.17g, %.17g]\n", wmin, wmax);
  return ortho.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit measurement bases: construction, verification, classification"};
  app.require_subcommand(1);
  CommonOpts opts;
  app.add_option("--tol-norm", opts.tol_norm, "algebraic tolerance (default 1e-12)");
  app.add_option("--tol-geom", opts.tol_geom, "geometry tolerance (default 1e-9)");
  app.add_option("--threads", opts.threads, "worker threads (0 = auto, env ORBITBASIS_THREADS)");

  CLI::App* basis_cmd = app.add_subcommand("basis", "build or verify one orbit basis");
  basis_cmd->require_subcommand(1);
  CLI::App* build_cmd = basis_cmd->add_subcommand("build", "construct a basis from a family");
  std::string family, theta_text, q_text, alpha_text;
  std::size_t n = 2, d = 2;
  std::vector<std::string> phase_texts;
  bool verify_flag = false;
  build_cmd->add_option("--family", family, "ejm | ejm-theta | ppi | rect | czartowski | phases")
      ->required();
  build_cmd->add_option("--theta", theta_text, "angle (radians or 'l/2^m*2pi')");
  build_cmd->add_option("--n", n, "site count");
  build_cmd->add_option("--d", d, "local dimension");
  build_cmd->add_option("--q", q_text, "czartowski weight (e.g. 1/3)");
  build_cmd->add_option("--alpha", alpha_text, "czartowski phase (default from q)");
  build_cmd->add_option("--phases", phase_texts, "phase list for --family phases");
  build_cmd->add_flag("--verify", verify_flag, "accepted for compatibility; always on");
  build_cmd->add_option("--out", opts.out, "report file");
  build_cmd->add_option("--format", opts.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify_cmd = basis_cmd->add_subcommand("verify", "re-verify a written basis file");
  std::string in_path;
  verify_cmd->add_option("--in", in_path, "basis JSON file")->required();

  CLI::App* census_cmd = app.add_subcommand("census", "enumerate level-k bases and classify");
  std::size_t census_n = 2;
  int census_k = 3;
  census_cmd->add_option("--n", census_n, "site count (2 or 3)")->required();
  census_cmd->add_option("--k", census_k, "hierarchy level")->required();
  census_cmd->add_option("--out", opts.out, "output file");
  census_cmd->add_option("--format", opts.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* fig3_cmd = app.add_subcommand("fig3", "level staircase of the theta family");
  int max_m = 8;
  fig3_cmd->add_option("--max-m", max_m, "dyadic precision bound (<= 12)");
  fig3_cmd->add_option("--out", opts.out, "output file");
  fig3_cmd->add_option("--format", opts.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  opts.threads = threads_from_env(opts.threads);

  try {
    if (build_cmd->parsed()) {
      auto built = build_family(family, theta_text, n, d, q_text, alpha_text, phase_texts);
      if (!built) return kExitOk;  // infeasibility certificate printed
      (void)verify_flag;
      return report_basis(*built, opts);
    }
    if (verify_cmd->parsed()) {
      return verify_file(in_path, opts);
    }
    if (census_cmd->parsed()) {
      CensusResult result = census(census_n, census_k, opts.threads);
      std::cout << "census n=" << result.n << " k=" << result.k << ": " << result.entries.size()
                << " geometry classes";
      if (!result.separable_entries.empty()) {
        std::cout << " (+" << result.separable_entries.size() << " product-state classes)";
      }
      std::cout << "\n";
      if (result.entries.empty()) {
        std::cout << "only product structure at this level\n";
      }
      for (const CensusEntry& e : result.entries) {
        std::printf("  m=%d  %-32s", e.poly.m, polynomial_to_string(e.poly).c_str());
        for (const SiteGeometry& g : e.report.per_site) {
          std::printf("  %s(r=%.6f)", to_string(g.cls), g.circumradius);
        }
        std::printf("\n");
      }
      if (!opts.out.empty()) {
        if (opts.format == "json") {
          write_text_file(opts.out, census_to_json(result).dump(2) + "\n");
        } else {
          write_text_file(opts.out, census_to_csv(result));
        }
        std::cout << "wrote " << opts.out << "\n";
      }
      return kExitOk;
    }
    if (fig3_cmd->parsed()) {
      auto rows = fig3_data(max_m);
      if (!opts.out.empty()) {
        if (opts.format == "json") {
          write_text_file(opts.out, fig3_to_json(rows).dump(2) + "\n");
        } else {
          write_text_file(opts.out, fig3_to_csv(rows));
        }
        std::cout << "wrote " << opts.out << " (" << rows.size() << " rows)\n";
      } else {
        std::cout << fig3_to_csv(rows);
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
