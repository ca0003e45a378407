/*
* Copyright 2026 The mrgrid Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include "mrgrid/bounds.hpp"
#include "mrgrid/codes.hpp"
#include "mrgrid/mr.hpp"

#include "json.hpp"

namespace mrgrid {

using Json = nlohmann::ordered_json;

// Readers throw ParseError on malformed input.

Json to_json(const FieldSpec& s);
FieldSpec field_spec_from_json(const Json& j);

// {"rows", "cols", "field", "data": [[...], ...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const PatternType& t);
PatternType pattern_type_from_json(const Json& j);

// [[row, col], ...]
Json to_json(const ErasurePattern& e);
ErasurePattern pattern_from_json(const Json& j);

// {"field", "m", "n", "a", "b", "h_col": [[...]], "h_row": [[...]]}
Json to_json(const TensorCode& c);
TensorCode code_from_json(const Json& j);

// {"m", "n", "entries": [[v or null, ...], ...], "erased": [[r, c], ...]}
Json to_json(const GridWord& w);
GridWord word_from_json(const Json& j);
Json grid_to_json(std::uint32_t m, std::uint32_t n, std::span<const Element> entries);

Json to_json(const CertReport& r);
Json to_json(const SidonWitness& w);
Json to_json(const DifferenceWitness& w);
Json to_json(const AttackResult& r);
Json to_json(const SweepRecord& r);
Json to_json(const BoundReport& r);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

} // namespace mrgrid
