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

#include "orbitbasis/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbitbasis {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

json state_to_json(const StateVector& s) {
  json amps = json::array();
  for (const Complex& a : s.amplitudes()) amps.push_back(complex_to_json(a));
  return amps;
}

StateVector state_from_json(const json& j, std::vector<std::size_t> dims) {
  std::vector<Complex> amps;
  amps.reserve(j.size());
  for (const json& a : j) amps.push_back(complex_from_json(a));
  return StateVector(std::move(dims), std::move(amps));
}

json word_to_json(const PauliWord& w) {
  return json{{"x_exps", w.x_exps}, {"z_exps", w.z_exps}, {"phase_exp", w.phase_exp}};
}

PauliWord word_from_json(const json& j, std::size_t d) {
  PauliWord w;
  w.d = d;
  w.x_exps = j.at("x_exps").get<std::vector<int>>();
  w.z_exps = j.at("z_exps").get<std::vector<int>>();
  w.phase_exp = j.at("phase_exp").get<int>();
  w.reduce();
  return w;
}

json bloch_to_json(const BlochPoint& p) { return json::array({p.x, p.y, p.z}); }

json geometry_to_json(const GeometryReport& report) {
  json sites = json::array();
  for (const SiteGeometry& g : report.per_site) {
    json points = json::array();
    for (const BlochPoint& p : g.points) points.push_back(bloch_to_json(p));
    sites.push_back(json{{"class", to_string(g.cls)},
                         {"representative", bloch_to_json(g.representative)},
                         {"points", points},
                         {"circumradius", g.circumradius},
                         {"edge_lengths", g.edge_lengths},
                         {"volume", g.volume},
                         {"orientation", g.orientation}});
  }
  return json{{"sites", sites}};
}

std::string csv_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

Angle parse_angle(const std::string& text) {
  Angle angle;
  std::size_t star = text.find("*2pi");
  if (star != std::string::npos && star + 4 == text.size()) {
    std::string frac = text.substr(0, star);
    std::size_t slash = frac.find('/');
    long long num = 0, den = 1;
    try {
      if (slash == std::string::npos) {
        num = std::stoll(frac);
      } else {
        num = std::stoll(frac.substr(0, slash));
        den = std::stoll(frac.substr(slash + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_angle: cannot parse '" + text + "'");
    }
    if (den <= 0 || (den & (den - 1)) != 0) {
      throw std::invalid_argument("parse_angle: denominator in '" + text +
                                  "' must be a power of two");
    }
    int exp = 0;
    while ((1LL << exp) < den) ++exp;
    angle.turn = make_dyadic(num, exp);
    angle.radians = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return angle;
  }
  try {
    std::size_t used = 0;
    angle.radians = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_angle: cannot parse '" + text + "'");
  }
  angle.turn = to_dyadic(angle.radians / (2.0 * std::numbers::pi), 24, 1e-9);
  return angle;
}

std::string format_angle(const Angle& a) {
  if (a.turn) {
    return std::to_string(a.turn->num) + "/" + std::to_string(1LL << a.turn->exp) + "*2pi";
  }
  std::ostringstream os;
  os << std::setprecision(17) << a.radians;
  return os.str();
}

json basis_to_json(const std::string& family, const json& params, const OrbitBasis& ob,
                   const OrthonormalityReport& ortho, const CompletenessReport& completeness,
                   const std::vector<double>& weights, const GeometryReport* geometry) {
  json states = json::array();
  for (const StateVector& s : ob.states) states.push_back(state_to_json(s));
  json labels = json::array();
  for (const auto& l : ob.labels) labels.push_back(l);
  json generators = json::array();
  for (const PauliWord& w : ob.group.generators) generators.push_back(word_to_json(w));
  json doc{{"format", "orbitbasis.basis/1"},
           {"family", family},
           {"params", params},
           {"n", ob.group.n},
           {"d", ob.group.d},
           {"group", json{{"generators", generators}}},
           {"fiducial", state_to_json(ob.fiducial)},
           {"labels", labels},
           {"states", states},
           {"verification",
            json{{"max_offdiag", ortho.max_offdiag},
                 {"max_norm_err", ortho.max_norm_err},
                 {"orthonormal", ortho.pass},
                 {"completeness_max_dev", completeness.max_dev_from_identity},
                 {"complete", completeness.pass},
                 {"schur_weights", weights}}}};
  if (geometry != nullptr) doc["geometry"] = geometry_to_json(*geometry);
  return doc;
}

BasisDocument basis_from_json(const json& doc) {
  if (doc.at("format").get<std::string>() != "orbitbasis.basis/1") {
    throw std::invalid_argument("basis_from_json: unrecognized format tag");
  }
  BasisDocument out;
  out.family = doc.at("family").get<std::string>();
  out.params = doc.at("params");
  std::size_t n = doc.at("n").get<std::size_t>();
  std::size_t d = doc.at("d").get<std::size_t>();
  out.basis.group.n = n;
  out.basis.group.d = d;
  for (const json& g : doc.at("group").at("generators")) {
    out.basis.group.generators.push_back(word_from_json(g, d));
  }
  std::vector<std::size_t> dims(n, d);
  out.basis.fiducial = state_from_json(doc.at("fiducial"), dims);
  for (const json& l : doc.at("labels")) {
    out.basis.labels.push_back(l.get<std::vector<int>>());
  }
  for (const json& s : doc.at("states")) {
    out.basis.states.push_back(state_from_json(s, dims));
  }
  if (out.basis.states.empty() || out.basis.labels.size() != out.basis.states.size()) {
    throw std::invalid_argument("basis_from_json: inconsistent states/labels");
  }
  return out;
}

std::string basis_to_csv(const OrbitBasis& ob) {
  std::ostringstream os;
  os << "label,component,re,im\n";
  for (std::size_t i = 0; i < ob.states.size(); ++i) {
    std::string label;
    for (std::size_t j = 0; j < ob.labels[i].size(); ++j) {
      if (j) label += " ";
      label += std::to_string(ob.labels[i][j]);
    }
    for (std::size_t c = 0; c < ob.states[i].dim(); ++c) {
      os << '"' << label << '"' << ',' << c << ',' << csv_double(ob.states[i][c].real()) << ','
         << csv_double(ob.states[i][c].imag()) << '\n';
    }
  }
  return os.str();
}

json census_to_json(const CensusResult& result) {
  auto entry_to_json = [](const CensusEntry& e) {
    json bloch = json::array();
    for (const SiteGeometry& g : e.report.per_site) {
      bloch.push_back(bloch_to_json(g.representative));
    }
    json classes = json::array();
    for (const SiteGeometry& g : e.report.per_site) classes.push_back(to_string(g.cls));
    return json{{"m", e.poly.m},
                {"polynomial", polynomial_to_string(e.poly)},
                {"coefficients", e.poly.coeffs},
                {"level", e.level},
                {"fiducial", state_to_json(e.fiducial)},
                {"bloch_representatives", bloch},
                {"classes", classes},
                {"geometry", geometry_to_json(e.report)},
                {"dedup_key", e.dedup_key},
                {"orthonormality_residual", e.orthonormality_residual}};
  };
  json entries = json::array();
  for (const CensusEntry& e : result.entries) entries.push_back(entry_to_json(e));
  json separable = json::array();
  for (const CensusEntry& e : result.separable_entries) separable.push_back(entry_to_json(e));
  return json{{"format", "orbitbasis.census/1"},
              {"n", result.n},
              {"k", result.k},
              {"candidates", result.candidates},
              {"level_matches", result.level_matches},
              {"class_count", result.entries.size()},
              {"entries", entries},
              {"separable_class_count", result.separable_entries.size()},
              {"separable_entries", separable}};
}

std::string census_to_csv(const CensusResult& result) {
  std::ostringstream os;
  os << "m,polynomial,level,fiducial";
  for (std::size_t site = 0; site < result.n; ++site) {
    os << ",class_" << site + 1 << ",bloch_" << site + 1 << "_x,bloch_" << site + 1
       << "_y,bloch_" << site + 1 << "_z,circumradius_" << site + 1;
  }
  os << "\n";
  for (const CensusEntry& e : result.entries) {
    os << e.poly.m << ",\"" << polynomial_to_string(e.poly) << "\"," << e.level << ",\"";
    for (std::size_t c = 0; c < e.fiducial.dim(); ++c) {
      if (c) os << " ";
      os << csv_double(e.fiducial[c].real()) << (e.fiducial[c].imag() < 0 ? "-" : "+")
         << csv_double(std::abs(e.fiducial[c].imag())) << "i";
    }
    os << "\"";
    for (const SiteGeometry& g : e.report.per_site) {
      os << "," << to_string(g.cls) << "," << csv_double(g.representative.x) << ","
         << csv_double(g.representative.y) << "," << csv_double(g.representative.z) << ","
         << csv_double(g.circumradius);
    }
    os << "\n";
  }
  return os.str();
}

json fig3_to_json(const std::vector<std::pair<double, int>>& rows) {
  json data = json::array();
  for (const auto& [theta, k] : rows) {
    data.push_back(json{{"theta_over_pi", theta / std::numbers::pi}, {"k", k}});
  }
  return json{{"format", "orbitbasis.fig3/1"}, {"rows", data}};
}

std::string fig3_to_csv(const std::vector<std::pair<double, int>>& rows) {
  std::ostringstream os;
  os << "theta_over_pi,k\n";
  for (const auto& [theta, k] : rows) {
    os << csv_double(theta / std::numbers::pi) << "," << k << "\n";
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace orbitbasis
