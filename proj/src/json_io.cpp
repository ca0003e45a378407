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

#include "mrgrid/json_io.hpp"

#include "mrgrid/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace mrgrid {

namespace {

[[noreturn]] void fail(const std::string& what)
{
	throw Error(ErrorKind::ParseError, what);
}

const Json& member(const Json& j, const char* key)
{
	if (!j.is_object() || !j.contains(key))
		fail(std::string("missing field \"") + key + "\"");
	return j.at(key);
}

std::uint64_t uint_of(const Json& j, const char* what)
{
	if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
		fail(std::string(what) + " must be a non-negative integer");
	return j.get<std::uint64_t>();
}

std::uint32_t uint32_member(const Json& j, const char* key)
{
	std::uint64_t v = uint_of(member(j, key), key);
	if (v > 0xffffffffu)
		fail(std::string(key) + " out of range");
	return static_cast<std::uint32_t>(v);
}

Json rows_json(const Matrix& m)
{
	Json rows = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		rows.push_back(Json(std::vector<Element>(m.row(r).begin(), m.row(r).end())));
	return rows;
}

Matrix rows_from_json(const FieldPtr& f, const Json& j, const char* what)
{
	if (!j.is_array())
		fail(std::string(what) + " must be a list of rows");
	std::vector<std::vector<Element>> rows;
	for (const auto& r : j) {
		if (!r.is_array())
			fail(std::string(what) + " must be a list of rows");
		std::vector<Element> row;
		for (const auto& v : r) {
			std::uint64_t x = uint_of(v, what);
			if (x >= f->order())
				fail(std::string(what) + " entry " + std::to_string(x) + " outside the field");
			row.push_back(static_cast<Element>(x));
		}
		if (!rows.empty() && row.size() != rows[0].size())
			fail(std::string(what) + " has ragged rows");
		rows.push_back(std::move(row));
	}
	return Matrix::from_rows(f, rows);
}

// Plain number when it fits, decimal string otherwise.
Json big_json(const BigInt& v)
{
	if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
		return v.convert_to<std::int64_t>();
	return v.str();
}

} // namespace

Json to_json(const FieldSpec& s)
{
	Json j{{"p", s.p}, {"k", s.k}};
	if (s.p == 2 && s.k > 1)
		j["modulus"] = s.modulus;
	return j;
}

FieldSpec field_spec_from_json(const Json& j)
{
	try {
		if (j.is_number_unsigned() || j.is_number_integer()) {
			auto s = FieldSpec::for_order(uint_of(j, "field order"));
			if (!s)
				fail("field order must be a prime or a power of 2");
			return *s;
		}
		std::uint32_t p = uint32_member(j, "p");
		std::uint32_t k = j.contains("k") ? uint32_member(j, "k") : 1;
		if (p == 2 && k > 1)
			return FieldSpec::binary(k, j.contains("modulus") ? uint32_member(j, "modulus") : 0);
		if (k != 1)
			fail("only prime fields and GF(2^k) are supported");
		return FieldSpec::prime(p);
	} catch (const Error& e) {
		if (e.kind() == ErrorKind::ParseError)
			throw;
		fail(std::string("bad field: ") + e.what());
	}
}

Json to_json(const Matrix& m)
{
	return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", to_json(m.field()->spec())}, {"data", rows_json(m)}};
}

Matrix matrix_from_json(const Json& j)
{
	FieldPtr f = Field::make(field_spec_from_json(member(j, "field")));
	Matrix m = rows_from_json(f, member(j, "data"), "data");
	if (j.contains("rows") && uint_of(j.at("rows"), "rows") != m.rows())
		fail("rows does not match data");
	if (j.contains("cols") && uint_of(j.at("cols"), "cols") != m.cols())
		fail("cols does not match data");
	return m;
}

Json to_json(const PatternType& t)
{
	return Json{{"u", t.u}, {"v", t.v}, {"mask", t.to_strings()}};
}

PatternType pattern_type_from_json(const Json& j)
{
	const Json& mask = member(j, "mask");
	if (!mask.is_array())
		fail("mask must be a list of strings");
	std::vector<std::string> rows;
	for (const auto& r : mask) {
		if (!r.is_string())
			fail("mask must be a list of strings");
		rows.push_back(r.get<std::string>());
	}
	PatternType t = PatternType::from_strings(rows);
	if (j.contains("u") && uint_of(j.at("u"), "u") != t.u)
		fail("u does not match mask");
	if (j.contains("v") && uint_of(j.at("v"), "v") != t.v)
		fail("v does not match mask");
	return t;
}

Json to_json(const ErasurePattern& e)
{
	Json a = Json::array();
	for (const auto& c : e.cells())
		a.push_back(Json::array({c.row, c.col}));
	return a;
}

ErasurePattern pattern_from_json(const Json& j)
{
	if (!j.is_array())
		fail("pattern must be a list of [row, col] pairs");
	std::vector<Cell> cells;
	for (const auto& c : j) {
		if (!c.is_array() || c.size() != 2)
			fail("pattern must be a list of [row, col] pairs");
		std::uint64_t r = uint_of(c[0], "row"), col = uint_of(c[1], "col");
		if (r > 0xffffffffu || col > 0xffffffffu)
			fail("cell index out of range");
		cells.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(col)});
	}
	return ErasurePattern(std::move(cells));
}

Json to_json(const TensorCode& c)
{
	const Topology& t = c.topology;
	return Json{{"field", to_json(c.field()->spec())}, {"m", t.m}, {"n", t.n}, {"a", t.a}, {"b", t.b},
		{"h_col", rows_json(c.h_col)}, {"h_row", rows_json(c.h_row)}};
}

TensorCode code_from_json(const Json& j)
{
	FieldPtr f = Field::make(field_spec_from_json(member(j, "field")));
	Topology t{uint32_member(j, "m"), uint32_member(j, "n"), uint32_member(j, "a"), uint32_member(j, "b"),
		j.contains("h") ? uint32_member(j, "h") : 0u};
	auto mat = [&](const char* key) {
		const Json& v = member(j, key);
		if (v.is_object()) {
			Matrix m = matrix_from_json(v);
			if (!(m.field()->spec() == f->spec()))
				throw Error(ErrorKind::MixedFields, std::string(key) + " is over a different field");
			return m;
		}
		return rows_from_json(f, v, key);
	};
	return TensorCode::make(t, mat("h_col"), mat("h_row"));
}

Json grid_to_json(std::uint32_t m, std::uint32_t n, std::span<const Element> entries)
{
	Json rows = Json::array();
	for (std::uint32_t i = 0; i < m; ++i)
		rows.push_back(Json(std::vector<Element>(entries.begin() + static_cast<std::ptrdiff_t>(i) * n,
			entries.begin() + static_cast<std::ptrdiff_t>(i + 1) * n)));
	return rows;
}

Json to_json(const GridWord& w)
{
	Json rows = Json::array();
	for (std::uint32_t i = 0; i < w.m; ++i) {
		Json row = Json::array();
		for (std::uint32_t j = 0; j < w.n; ++j) {
			if (w.erased.contains({i, j}))
				row.push_back(nullptr);
			else
				row.push_back(w.at(i, j));
		}
		rows.push_back(std::move(row));
	}
	return Json{{"m", w.m}, {"n", w.n}, {"entries", std::move(rows)}, {"erased", to_json(w.erased)}};
}

GridWord word_from_json(const Json& j)
{
	GridWord w;
	const Json& rows = member(j, "entries");
	if (!rows.is_array())
		fail("entries must be a list of rows");
	w.m = j.contains("m") ? uint32_member(j, "m") : static_cast<std::uint32_t>(rows.size());
	if (rows.size() != w.m)
		fail("entries does not have m rows");
	w.n = j.contains("n") ? uint32_member(j, "n") : (rows.empty() ? 0 : static_cast<std::uint32_t>(rows[0].size()));
	std::vector<Cell> nulls;
	for (std::uint32_t i = 0; i < w.m; ++i) {
		if (!rows[i].is_array() || rows[i].size() != w.n)
			fail("entries row " + std::to_string(i) + " does not have n entries");
		for (std::uint32_t c = 0; c < w.n; ++c) {
			const Json& v = rows[i][c];
			if (v.is_null()) {
				nulls.push_back({i, c});
				w.entries.push_back(0);
			} else {
				std::uint64_t x = uint_of(v, "entry");
				if (x > 0xffffffffu)
					fail("entry out of range");
				w.entries.push_back(static_cast<Element>(x));
			}
		}
	}
	w.erased = j.contains("erased") ? pattern_from_json(j.at("erased")) : ErasurePattern(nulls);
	w.erased.check_bounds(w.m, w.n);
	for (const auto& c : nulls)
		if (!w.erased.contains(c))
			fail("null entry at a cell not listed as erased");
	return w;
}

Json to_json(const CertReport& r)
{
	Json j{{"verdict", verdict_name(r.verdict)}};
	if (r.counterexample)
		j["counterexample"] = to_json(*r.counterexample);
	if (r.rank_found)
		j["rank_found"] = *r.rank_found;
	j["patterns_checked"] = r.patterns_checked;
	return j;
}

Json to_json(const SidonWitness& w)
{
	Json pairs = Json::array();
	for (const auto& [x, y] : w.pairing)
		pairs.push_back(Json::array({x, y}));
	return Json{{"modulus", w.modulus}, {"exponents", w.exponents}, {"pairing", std::move(pairs)}, {"sum", w.sum},
		{"columns", w.columns}};
}

Json to_json(const DifferenceWitness& w)
{
	return Json{{"columns", w.columns}, {"difference", w.difference}, {"zero_first_coordinate", w.zero_first_coordinate}};
}

Json to_json(const AttackResult& r)
{
	Json j{{"pattern", to_json(r.pattern)}, {"size", r.pattern.size()}, {"rank", r.rank}};
	if (r.sidon)
		j["witness"] = to_json(*r.sidon);
	if (r.difference)
		j["witness"] = to_json(*r.difference);
	return j;
}

Json to_json(const SweepRecord& r)
{
	return Json{{"q", r.q}, {"trials", r.trials}, {"outcome", r.found ? "certified" : "not_found"}};
}

Json to_json(const BoundReport& r)
{
	Json params = Json::object();
	for (const auto& [k, v] : r.params) {
		if (!v.empty() && v.size() < 19 && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
			params[k] = std::stoull(v);
		else
			params[k] = v;
	}
	Json value = std::visit(
		[](const auto& v) -> Json {
			using T = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<T, BigInt>) {
				return v.str();
			} else if constexpr (std::is_same_v<T, BigRational>) {
				return to_string(v);
			} else if constexpr (std::is_same_v<T, Radical>) {
				Json o{{"radicand", big_json(v.radicand)}, {"divisor", big_json(v.divisor)}};
				if (v.offset != 0)
					o["offset"] = big_json(v.offset);
				return o;
			} else {
				std::ostringstream s;
				s.precision(17);
				s << v;
				return s.str();
			}
		},
		r.value);
	return Json{{"name", r.name}, {"params", std::move(params)}, {"value", std::move(value)}, {"approx", r.approx},
		{"applicability", r.applicability}};
}

Json parse_json(const std::string& text)
{
	try {
		return Json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		fail(e.what());
	}
}

Json read_json_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_json(ss.str());
}

} // namespace mrgrid
