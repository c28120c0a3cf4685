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

#ifndef ORBITBASIS_IO_HPP
#define ORBITBASIS_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitbasis/basis.hpp"
#include "orbitbasis/classify.hpp"
#include "orbitbasis/clifford.hpp"
#include "orbitbasis/geometry.hpp"

namespace orbitbasis {

// Angle arguments accept plain radians ("0.7853981") or exact dyadic
// fractions of a full turn ("3/16*2pi", meaning 2*pi*3/16). The exact form
// is kept so levels can be computed without float round-off.
struct Angle {
  double radians = 0.0;
  std::optional<DyadicRational> turn;  // radians / 2pi when exact
};

Angle parse_angle(const std::string& text);
std::string format_angle(const Angle& a);  // dyadic form when known

struct BasisDocument {
  std::string family;
  nlohmann::json params;
  OrbitBasis basis;
};

nlohmann::json basis_to_json(const std::string& family, const nlohmann::json& params,
                             const OrbitBasis& ob, const OrthonormalityReport& ortho,
                             const CompletenessReport& completeness,
                             const std::vector<double>& weights,
                             const GeometryReport* geometry);
BasisDocument basis_from_json(const nlohmann::json& doc);

std::string basis_to_csv(const OrbitBasis& ob);

nlohmann::json census_to_json(const CensusResult& result);
std::string census_to_csv(const CensusResult& result);

nlohmann::json fig3_to_json(const std::vector<std::pair<double, int>>& rows);
std::string fig3_to_csv(const std::vector<std::pair<double, int>>& rows);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace orbitbasis

#endif  // ORBITBASIS_IO_HPP
