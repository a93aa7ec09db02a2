// Copyright 2026 The Entrobound Authors
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

// File formats. Floating-point values are always written with 17
// significant digits; infinities are written as the strings "inf"/"-inf".
//
//   unitary:  {"dim": d, "re": [[...]], "im": [[...]]}   (row-major)
//   hull:     {"tangents": [{"lambda", "mu", "c", "certified"}],
//              "vertices": [[hx, hy]]}
//   samples:  CSV, one "hx,hy" row per point, no header

#ifndef ENTROBOUND_SERIALIZATION_HPP_
#define ENTROBOUND_SERIALIZATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entrobound/bounds.hpp"
#include "entrobound/regions.hpp"

namespace entrobound {

using Json = nlohmann::ordered_json;

/// %.17g, or "inf" / "-inf" / "nan".
std::string format_double(double x);

/// Deterministic pretty printer (2-space indent) using format_double for
/// every float. Short arrays of scalars stay on one line.
std::string dump_json(const Json& j);

/// Parses the unitary format; errors name the offending field.
MeasurementPair parse_unitary_json(std::string_view text,
                                   const std::string& label = {});
MeasurementPair load_unitary(const std::string& path);
Json unitary_to_json(const MeasurementPair& pair);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const NormParams& params);
Json to_json(const BoundResult& result, LogBase base);
Json to_json(const PositiveHull& hull, LogBase base);
Json to_json(const AdditivityReport& report, LogBase base);
Json to_json(const MultiplicativityReport& report);
Json to_json(const HullCompositionReport& report, LogBase base);
Json to_json(const ThreePauliReport& report, LogBase base);
Json to_json(const RenyiCheckReport& report, LogBase base);
Json vector_to_json(const Vector& v);

/// Accepts the hull format (values in the unit named by an optional
/// "unit" field, bits by default) and returns a hull in bits.
PositiveHull hull_from_json(const Json& j);

/// True when the document looks like a hull rather than a unitary.
bool is_hull_document(const Json& j);

std::string samples_csv(const std::vector<UncertaintyPoint>& points,
                        LogBase base);

}  // namespace entrobound

#endif  // ENTROBOUND_SERIALIZATION_HPP_
