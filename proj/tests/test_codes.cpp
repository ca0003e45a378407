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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mrgrid/codes.hpp"
#include "mrgrid/error.hpp"
#include "mrgrid/mr.hpp"

#include "oracle.hpp"

#include <random>

using namespace mrgrid;

namespace {

oracle::NaiveField naive(const FieldPtr& f)
{
	const auto& s = f->spec();
	return {s.p, s.k, s.p == 2 && s.k > 1 ? s.modulus : 0};
}

oracle::Mat rows_of(const Matrix& m)
{
	oracle::Mat out;
	for (std::size_t r = 0; r < m.rows(); ++r)
		out.emplace_back(m.row(r).begin(), m.row(r).end());
	return out;
}

// rows x nodes.size() with entries node^r.
Matrix vandermonde(const FieldPtr& f, std::size_t rows, const std::vector<Element>& nodes)
{
	Matrix m(f, rows, nodes.size());
	for (std::size_t j = 0; j < nodes.size(); ++j) {
		Element p = 1;
		for (std::size_t r = 0; r < rows; ++r) {
			m(r, j) = p;
			p = f->mul(p, nodes[j]);
		}
	}
	return m;
}

std::vector<Element> distinct(std::mt19937& rng, const FieldPtr& f, std::size_t count)
{
	std::vector<Element> all(f->order());
	std::iota(all.begin(), all.end(), 0u);
	std::shuffle(all.begin(), all.end(), rng);
	all.resize(count);
	return all;
}

// Generalized Reed-Solomon parity checks: Vandermonde with random nonzero column scales.
Matrix random_mds(std::mt19937& rng, const FieldPtr& f, std::size_t rows, std::size_t cols)
{
	Matrix m = vandermonde(f, rows, distinct(rng, f, cols));
	for (std::size_t j = 0; j < cols; ++j) {
		Element s = 1 + rng() % (f->order() - 1);
		for (std::size_t r = 0; r < rows; ++r)
			m(r, j) = f->mul(m(r, j), s);
	}
	return m;
}

TensorCode random_code(std::mt19937& rng, const FieldPtr& f, std::uint32_t m, std::uint32_t n, std::uint32_t a,
	std::uint32_t b)
{
	return TensorCode::make(Topology{m, n, a, b, 0}, random_mds(rng, f, a, m), random_mds(rng, f, b, n));
}

ErasurePattern random_pattern(std::mt19937& rng, std::uint32_t m, std::uint32_t n, double density)
{
	std::vector<Cell> cells;
	std::bernoulli_distribution coin(density);
	for (std::uint32_t i = 0; i < m; ++i)
		for (std::uint32_t j = 0; j < n; ++j)
			if (coin(rng))
				cells.push_back({i, j});
	return ErasurePattern(cells);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> cells_of(const ErasurePattern& e)
{
	std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
	for (const auto& c : e.cells())
		out.push_back({c.row, c.col});
	return out;
}

std::vector<Element> random_message(std::mt19937& rng, const TensorCode& c)
{
	const auto& t = c.topology;
	std::vector<Element> msg(static_cast<std::size_t>(t.m - t.a) * (t.n - t.b));
	for (auto& x : msg)
		x = rng() % c.field()->order();
	return msg;
}

template <class F>
ErrorKind kind_of(F&& f)
{
	try {
		f();
	} catch (const Error& e) {
		return e.kind();
	}
	FAIL("no error thrown");
	return ErrorKind::InvalidArgument;
}

const std::array<std::uint32_t, 6> kRoles{0, 1, 2, 3, 4, 5};

} // namespace

TEST_CASE("pseudo-parity matrix matches the definition")
{
	std::mt19937 rng(1);
	auto f2 = Field::make(FieldSpec::prime(2));
	auto small = TensorCode::make(Topology{2, 2, 1, 1, 0}, all_ones_row(f2, 2), all_ones_row(f2, 2));
	Matrix h = build_pseudo_parity(small);
	CHECK(h.rows() == 4);
	CHECK(h.cols() == 4);
	for (std::size_t r = 0; r < 4; ++r)
		CHECK(std::count_if(h.row(r).begin(), h.row(r).end(), [](Element x) { return x != 0; }) == 2);

	for (auto spec : {FieldSpec::prime(11), FieldSpec::binary(4)}) {
		auto f = Field::make(spec);
		for (int t = 0; t < 50; ++t) {
			std::uint32_t m = 2 + rng() % 4, n = 2 + rng() % 6;
			std::uint32_t a = 1 + rng() % (m - 1), b = 1 + rng() % (n - 1);
			auto c = random_code(rng, f, m, n, a, b);
			Matrix hp = build_pseudo_parity(c);
			REQUIRE(hp.rows() == a * n + b * m);
			REQUIRE(hp.cols() == m * n);
			std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
			for (std::uint32_t i = 0; i < m; ++i)
				for (std::uint32_t j = 0; j < n; ++j)
					all.push_back({i, j});
			REQUIRE(rows_of(hp) == oracle::restricted_parity(m, n, rows_of(c.h_col), rows_of(c.h_row), all));
		}
	}
	auto bad = small;
	bad.topology.h = 1;
	CHECK(kind_of([&] { build_pseudo_parity(bad); }) == ErrorKind::UnsupportedGlobalParities);
}

TEST_CASE("restricted rank agrees with the definition-built oracle")
{
	std::mt19937 rng(2);
	for (auto spec : {FieldSpec::prime(5), FieldSpec::prime(13), FieldSpec::binary(3), FieldSpec::binary(5)}) {
		auto f = Field::make(spec);
		for (int t = 0; t < 150; ++t) {
			std::uint32_t m = 2 + rng() % 3, n = 2 + rng() % std::min<std::uint32_t>(5, f->order() - 1);
			std::uint32_t a = 1 + rng() % (m - 1), b = 1 + rng() % (n - 1);
			auto c = random_code(rng, f, m, n, a, b);
			auto e = random_pattern(rng, m, n, 0.5);
			std::size_t expect = oracle::restricted_rank(m, n, rows_of(c.h_col), rows_of(c.h_row), cells_of(e), naive(f));
			REQUIRE(restricted_rank(c, e) == expect);
			RestrictedRanker rr(c);
			REQUIRE(rr.rank(e) == expect);
			REQUIRE(is_correctable_by(c, e) == (expect == e.size()));
		}
	}
}

TEST_CASE("correctability examples")
{
	auto f7 = Field::make(FieldSpec::prime(7));
	// Row code columns (1, 3^t) for t = 0..5.
	std::vector<Element> nodes;
	for (std::uint32_t t = 0; t < 6; ++t)
		nodes.push_back(f7->exp(t));
	auto c = TensorCode::make(Topology{4, 6, 1, 2, 0}, all_ones_row(f7, 4), vandermonde(f7, 2, nodes));
	CHECK(is_correctable_by(c, ErasurePattern()));
	CHECK(is_correctable_by(c, ErasurePattern({{0, 2}, {1, 2}, {2, 2}, {3, 2}})));
	CHECK_FALSE(is_correctable_by(c, type_two_layout(kRoles)));
	CHECK(is_correctable_by(c, type_one_layout(kRoles)));
}

TEST_CASE("encode produces codewords")
{
	auto f2 = Field::make(FieldSpec::prime(2));
	auto tiny = TensorCode::make(Topology{2, 2, 1, 1, 0}, all_ones_row(f2, 2), all_ones_row(f2, 2));
	auto w = encode(tiny, std::vector<Element>{1});
	CHECK(w.entries == std::vector<Element>{1, 1, 1, 1});
	CHECK(kind_of([&] { encode(tiny, std::vector<Element>{1, 0}); }) == ErrorKind::DimensionMismatch);

	std::mt19937 rng(3);
	for (auto spec : {FieldSpec::prime(11), FieldSpec::binary(4), FieldSpec::binary(8)}) {
		auto f = Field::make(spec);
		for (int t = 0; t < 60; ++t) {
			std::uint32_t m = 2 + rng() % 4, n = 2 + rng() % 8;
			std::uint32_t a = 1 + rng() % (m - 1), b = 1 + rng() % (n - 1);
			auto c = random_code(rng, f, m, n, a, b);
			auto zero = encode(c, std::vector<Element>((m - a) * (n - b), 0));
			REQUIRE(std::all_of(zero.entries.begin(), zero.entries.end(), [](Element x) { return x == 0; }));
			auto msg = random_message(rng, c);
			auto word = encode(c, msg);
			REQUIRE(build_pseudo_parity(c).apply(word.entries) == std::vector<Element>(a * n + b * m, 0));
			// Every row in C_row, every column in C_col.
			for (std::uint32_t i = 0; i < m; ++i) {
				std::vector<Element> row(word.entries.begin() + i * n, word.entries.begin() + (i + 1) * n);
				REQUIRE(c.h_row.apply(row) == std::vector<Element>(b, 0));
			}
			for (std::uint32_t j = 0; j < n; ++j) {
				std::vector<Element> col;
				for (std::uint32_t i = 0; i < m; ++i)
					col.push_back(word.at(i, j));
				REQUIRE(c.h_col.apply(col) == std::vector<Element>(a, 0));
			}
			// The message sits on the information set.
			auto [U, V] = information_set(c);
			REQUIRE(U.size() == m - a);
			REQUIRE(V.size() == n - b);
			std::size_t k = 0;
			for (auto i : U)
				for (auto j : V)
					REQUIRE(word.at(i, j) == msg[k++]);
		}
	}
}

TEST_CASE("null space dimension")
{
	std::mt19937 rng(4);
	auto f = Field::make(FieldSpec::prime(13));
	for (int t = 0; t < 40; ++t) {
		std::uint32_t m = 2 + rng() % 4, n = 2 + rng() % 7;
		std::uint32_t a = 1 + rng() % (m - 1), b = 1 + rng() % (n - 1);
		auto c = random_code(rng, f, m, n, a, b);
		REQUIRE(null_space_basis(build_pseudo_parity(c)).rows() == (m - a) * (n - b));
	}
}

TEST_CASE("decode")
{
	auto f7 = Field::make(FieldSpec::prime(7));
	std::mt19937 rng(5);
	auto c = random_code(rng, f7, 3, 5, 1, 2);
	c = TensorCode::make(c.topology, all_ones_row(f7, 3), c.h_row);
	auto word = encode(c, random_message(rng, c));

	GridWord clean = word;
	CHECK(decode(c, clean) == word.entries);

	GridWord one = word;
	one.erased = ErasurePattern({{1, 3}});
	one.entries[1 * 5 + 3] = 0;
	auto got = decode(c, one);
	CHECK(got[8] == f7->neg(f7->add(word.at(0, 3), word.at(2, 3))));

	GridWord corrupt = word;
	corrupt.erased = ErasurePattern({{0, 0}});
	corrupt.entries[1] = f7->add(corrupt.entries[1], 1);
	CHECK(kind_of([&] { decode(c, corrupt); }) == ErrorKind::InconsistentWord);

	GridWord too_many = word;
	too_many.erased = ErasurePattern({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
	CHECK(kind_of([&] { decode(c, too_many); }) == ErrorKind::Uncorrectable);

	GridWord wrong = word;
	wrong.n = 4;
	CHECK(kind_of([&] { decode(c, wrong); }) == ErrorKind::DimensionMismatch);

	for (int t = 0; t < 200; ++t) {
		auto e = random_pattern(rng, 3, 5, 0.35);
		GridWord w = word;
		w.erased = e;
		for (const auto& cell : e.cells())
			w.entries[cell.row * 5 + cell.col] = rng() % 7;
		if (is_correctable_by(c, e))
			REQUIRE(decode(c, w) == word.entries);
		else
			REQUIRE(kind_of([&] { decode(c, w); }) == ErrorKind::Uncorrectable);
	}
}

TEST_CASE("reduce_restricted rank identity")
{
	std::mt19937 rng(6);
	int checked = 0;
	for (auto spec : {FieldSpec::prime(7), FieldSpec::prime(31), FieldSpec::binary(4)}) {
		auto f = Field::make(spec);
		while (checked < 1000) {
			std::uint32_t m = 2 + rng() % 3, n = 3 + rng() % 5;
			std::uint32_t b = 1 + rng() % std::min<std::uint32_t>(3, n - 1);
			auto c = random_code(rng, f, m, n, 1, b);
			auto e = random_pattern(rng, m, n, 0.7);
			if (e.empty() || !is_irreducible(c.topology, e))
				continue;
			Matrix B = reduce_restricted(c, e);
			const std::size_t v0 = e.cols_used().size();
			REQUIRE(B.rows() == e.rows_used().size() * b);
			REQUIRE(B.cols() == e.size() - v0);
			REQUIRE(restricted_rank(c, e) == v0 + rank(B));
			if (++checked % 334 == 0)
				break;
		}
	}
	CHECK(checked >= 1000);
	auto f = Field::make(FieldSpec::prime(7));
	auto c = random_code(rng, f, 4, 6, 1, 2);
	CHECK(kind_of([&] { reduce_restricted(c, ErasurePattern({{0, 0}})); }) == ErrorKind::NotIrreducible);
}

TEST_CASE("layout rank conditions on Vandermonde rows, exhaustive over GF(7) and GF(8)")
{
	for (auto spec : {FieldSpec::prime(7), FieldSpec::binary(3)}) {
		auto f = Field::make(spec);
		std::vector<Element> x(f->order());
		std::iota(x.begin(), x.end(), 0u);
		std::array<Element, 6> a{};
		// All ordered 6-tuples of distinct nodes.
		std::vector<bool> pick(f->order(), false);
		std::fill(pick.begin(), pick.begin() + 6, true);
		std::size_t tuples = 0;
		do {
			std::vector<Element> sub;
			for (std::size_t i = 0; i < pick.size(); ++i)
				if (pick[i])
					sub.push_back(x[i]);
			do {
				std::copy(sub.begin(), sub.end(), a.begin());
				std::vector<Element> nodes(a.begin(), a.end());
				auto c4 = TensorCode::make(Topology{4, 6, 1, 2, 0}, all_ones_row(f, 4), vandermonde(f, 2, nodes));
				auto c3 = TensorCode::make(Topology{3, 6, 1, 3, 0}, all_ones_row(f, 3), vandermonde(f, 3, nodes));
				std::span<const Element, 6> s(a);
				REQUIRE(rank(reduce_restricted(c4, type_one_layout(kRoles))) == 6);
				REQUIRE((rank(reduce_restricted(c4, type_two_layout(kRoles))) == 6) ==
					(f_poly(*f, TopologyKind::T4_12, s) != 0));
				REQUIRE((rank(reduce_restricted(c3, e0_layout(kRoles))) == 6) ==
					(rank_condition(*f, TopologyKind::T3_13, s) != 0));
				++tuples;
			} while (std::next_permutation(sub.begin(), sub.end()));
		} while (std::prev_permutation(pick.begin(), pick.end()));
		CHECK(tuples == (f->order() == 7 ? 5040u : 20160u));
	}
}

TEST_CASE("type one condition with repeated nodes")
{
	auto f = Field::make(FieldSpec::prime(11));
	std::mt19937 rng(8);
	for (int t = 0; t < 500; ++t) {
		std::vector<Element> nodes(6);
		for (auto& v : nodes)
			v = rng() % 4;
		// Repeated nodes break MDS but the reduced block is still defined.
		TensorCode c{Topology{4, 6, 1, 2, 0}, all_ones_row(f, 4), vandermonde(f, 2, nodes)};
		bool expect = nodes[1] != nodes[0] && nodes[3] != nodes[2] && nodes[5] != nodes[4];
		REQUIRE((rank(reduce_restricted(c, type_one_layout(kRoles))) == 6) == expect);
	}
}

TEST_CASE("printed T3_13 polynomial is not the rank condition")
{
	// Nodes (0, 1, 2, 3, 4, 5) over GF(7): the reduced block is full rank
	// but the printed polynomial vanishes, or the other way round.
	auto f = Field::make(FieldSpec::prime(7));
	std::size_t disagree = 0;
	std::array<Element, 6> a{0, 1, 2, 3, 4, 5};
	do {
		std::span<const Element, 6> s(a);
		std::vector<Element> nodes(a.begin(), a.end());
		auto c3 = TensorCode::make(Topology{3, 6, 1, 3, 0}, all_ones_row(f, 3), vandermonde(f, 3, nodes));
		const bool full = rank(reduce_restricted(c3, e0_layout(kRoles))) == 6;
		disagree += full != (f_poly(*f, TopologyKind::T3_13, s) != 0);
	} while (std::next_permutation(a.begin(), a.end()));
	CHECK(disagree > 0);
}

TEST_CASE("type two condition is independent of the column parity")
{
	auto f = Field::make(FieldSpec::prime(13));
	std::mt19937 rng(10);
	for (int t = 0; t < 2000; ++t) {
		auto nodes = distinct(rng, f, 6);
		Matrix hc(f, 1, 4);
		for (std::size_t i = 0; i < 4; ++i)
			hc(0, i) = 1 + rng() % 12;
		auto c = TensorCode::make(Topology{4, 6, 1, 2, 0}, hc, vandermonde(f, 2, nodes));
		std::array<Element, 6> a{};
		std::copy(nodes.begin(), nodes.end(), a.begin());
		REQUIRE(is_correctable_by(c, type_two_layout(kRoles)) ==
			(f_poly(*f, TopologyKind::T4_12, std::span<const Element, 6>(a)) != 0));
	}
}

TEST_CASE("code validation")
{
	auto f = Field::make(FieldSpec::prime(7));
	auto g = Field::make(FieldSpec::prime(5));
	auto hr = vandermonde(f, 2, {1, 2, 3, 4});
	CHECK(kind_of([&] { TensorCode::make(Topology{3, 4, 1, 2, 0}, all_ones_row(g, 3), hr); }) == ErrorKind::MixedFields);
	CHECK(kind_of([&] { TensorCode::make(Topology{3, 4, 1, 2, 0}, all_ones_row(f, 2), hr); }) ==
		ErrorKind::DimensionMismatch);
	CHECK(kind_of([&] { TensorCode::make(Topology{3, 4, 1, 2, 0}, all_ones_row(f, 3), vandermonde(f, 2, {1, 1, 1, 1})); }) ==
		ErrorKind::RankDeficient);
}
