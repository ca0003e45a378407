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

#include "mrgrid/error.hpp"
#include "mrgrid/galois.hpp"

#include "oracle.hpp"

#include <random>
#include <set>

using namespace mrgrid;

namespace {

oracle::NaiveField naive(const FieldSpec& s)
{
	return {s.p, s.k, s.p == 2 && s.k > 1 ? s.modulus : 0};
}

ErrorKind kind_of(const std::function<void()>& f)
{
	try {
		f();
	} catch (const Error& e) {
		return e.kind();
	}
	FAIL("no error thrown");
	return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("prime field arithmetic")
{
	auto f = Field::make(FieldSpec::prime(7));
	CHECK(f->mul(3, 5) == 1);
	CHECK(f->add(6, 3) == 2);
	CHECK(f->sub(2, 5) == 4);
	CHECK(f->neg(0) == 0);
	CHECK(f->inv(3) == 5);
	CHECK(f->pow(3, 6) == 1);
	CHECK(kind_of([&] { f->inv(0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("binary extension multiplication")
{
	auto f = Field::make(FieldSpec::binary(3, 0b1011));
	CHECK(f->mul(0b010, 0b100) == 0b011);
	CHECK(f->primitive_element() == 0b010);
	CHECK(default_modulus(3) == 0b1011);
	CHECK(default_modulus(4) == 0b10011);
	CHECK(default_modulus(8) == 0x11D);
}

TEST_CASE("arithmetic matches schoolbook oracle on every pair")
{
	for (auto spec : {FieldSpec::prime(2), FieldSpec::prime(5), FieldSpec::prime(31), FieldSpec::binary(2),
			 FieldSpec::binary(4), FieldSpec::binary(5), FieldSpec::binary(6)}) {
		auto f = Field::make(spec);
		auto o = naive(spec);
		for (Element a = 0; a < f->order(); ++a) {
			for (Element b = 0; b < f->order(); ++b) {
				REQUIRE(f->add(a, b) == o.add(a, b));
				REQUIRE(f->sub(a, b) == o.sub(a, b));
				REQUIRE(f->mul(a, b) == o.mul(a, b));
			}
			if (a != 0)
				REQUIRE(o.mul(a, f->inv(a)) == 1);
		}
	}
}

TEST_CASE("random products in large fields match the oracle")
{
	std::mt19937 rng(7);
	for (auto spec : {FieldSpec::binary(10), FieldSpec::binary(16), FieldSpec::binary(20), FieldSpec::prime(65521)}) {
		auto f = Field::make(spec);
		auto o = naive(spec);
		for (int i = 0; i < 2000; ++i) {
			Element a = rng() % f->order(), b = rng() % f->order();
			REQUIRE(f->mul(a, b) == o.mul(a, b));
		}
	}
}

TEST_CASE("primitive element is the least generator")
{
	CHECK(Field::make(FieldSpec::prime(7))->primitive_element() == 3);
	CHECK(Field::make(FieldSpec::prime(2))->primitive_element() == 1);
	for (auto spec : {FieldSpec::prime(7), FieldSpec::prime(13), FieldSpec::prime(41), FieldSpec::binary(4),
			 FieldSpec::binary(6)}) {
		auto f = Field::make(spec);
		auto o = naive(spec);
		const std::uint32_t q = f->order();
		Element least = 0;
		for (Element g = 1; g < q && least == 0; ++g) {
			std::set<Element> powers;
			Element x = 1;
			for (std::uint32_t i = 0; i < q - 1; ++i) {
				powers.insert(x);
				x = o.mul(x, g);
			}
			if (powers.size() == q - 1)
				least = g;
		}
		CHECK(f->primitive_element() == least);
		CHECK(f->multiplicative_order(least) == q - 1);
	}
}

TEST_CASE("discrete log")
{
	auto f = Field::make(FieldSpec::prime(7));
	CHECK(f->discrete_log(1, 3) == 0);
	CHECK(f->discrete_log(3, 3) == 1);
	CHECK(f->discrete_log(6, 3) == 3);
	CHECK(f->discrete_log(3, 5) == 5); // 5^5 = 3125 = 446*7 + 3
	CHECK(kind_of([&] { f->log(0); }) == ErrorKind::ZeroHasNoLog);
	CHECK(kind_of([&] { f->discrete_log(2, 2); }) == ErrorKind::NotPrimitive);

	for (auto spec : {FieldSpec::prime(101), FieldSpec::binary(7)}) {
		auto g = Field::make(spec);
		const std::uint32_t q = g->order();
		std::set<std::uint32_t> seen;
		for (Element x = 1; x < q; ++x) {
			auto l = g->log(x);
			REQUIRE(l < q - 1);
			REQUIRE(g->exp(l) == x);
			seen.insert(l);
			for (Element y = 1; y < q; y += 7)
				REQUIRE(g->log(g->mul(x, y)) == (l + g->log(y)) % (q - 1));
		}
		CHECK(seen.size() == q - 1);
	}
}

TEST_CASE("field specs and validation")
{
	CHECK(FieldSpec::for_order(16)->k == 4);
	CHECK(FieldSpec::for_order(13)->p == 13);
	CHECK(!FieldSpec::for_order(12).has_value());
	CHECK(!FieldSpec::for_order(9).has_value());
	CHECK(kind_of([] { Field::make(FieldSpec{6, 1, 0}); }) == ErrorKind::InvalidArgument);
	// x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
	CHECK(kind_of([] { Field::make(FieldSpec::binary(4, 0b11111)); }) == ErrorKind::InvalidArgument);
	CHECK(kind_of([] { Field::make(FieldSpec::binary(21)); }) == ErrorKind::InvalidArgument);
	CHECK(Field::make(FieldSpec::prime(7)) == Field::make(FieldSpec::prime(7)));
}

TEST_CASE("checked field_op")
{
	auto f7 = Field::make(FieldSpec::prime(7));
	auto f8 = Field::make(FieldSpec::binary(3));
	std::vector<FieldElement> ops{{f7, 3}, {f7, 5}};
	CHECK(field_op(f7, FieldOp::Mul, ops).value == 1);
	CHECK(field_op(f7, FieldOp::Div, ops).value == 2);
	CHECK(field_op(f7, FieldOp::Pow, std::vector<FieldElement>{{f7, 3}}, 3).value == 6);
	std::vector<FieldElement> mixed{{f7, 3}, {f8, 5}};
	CHECK(kind_of([&] { field_op(f7, FieldOp::Add, mixed); }) == ErrorKind::MixedFields);
	std::vector<FieldElement> zero{{f7, 0}};
	CHECK(kind_of([&] { field_op(f7, FieldOp::Inv, zero); }) == ErrorKind::DivisionByZero);
	for (Element x = 0; x < 8; ++x)
		CHECK(field_op(f8, FieldOp::Mul, std::vector<FieldElement>{{f8, x}, {f8, 1}}).value == x);
}
