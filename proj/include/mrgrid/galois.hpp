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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mrgrid {

// Field elements are plain integers in [0, q). For GF(2^k) the integer is the
// coefficient bitmask of a polynomial in x; for GF(p) it is the least residue.
using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

struct FieldSpec {
	std::uint32_t p = 2;
	std::uint32_t k = 1;
	// Bitmask of the primitive modulus polynomial; 0 for prime fields.
	std::uint32_t modulus = 0;

	std::uint32_t order() const;
	std::string to_string() const;

	static FieldSpec prime(std::uint32_t p);
	// modulus = 0 picks the built-in primitive polynomial for degree k.
	static FieldSpec binary(std::uint32_t k, std::uint32_t modulus = 0);
	// GF(q) for q prime or a power of two; nullopt otherwise.
	static std::optional<FieldSpec> for_order(std::uint64_t q);

	bool operator==(const FieldSpec&) const = default;
};

// Built-in primitive polynomial of degree k over GF(2), 2 <= k <= 20.
std::uint32_t default_modulus(std::uint32_t k);

bool is_prime(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable finite field with log/antilog tables rooted at the least
// primitive element. Instances are cached per FieldSpec.
class Field {
public:
	static FieldPtr make(const FieldSpec& spec);

	const FieldSpec& spec() const { return spec_; }
	std::uint32_t order() const { return q_; }
	std::uint32_t characteristic() const { return spec_.p; }
	bool is_binary() const { return spec_.p == 2; }
	bool contains(Element x) const { return x < q_; }

	Element add(Element a, Element b) const
	{
		if (is_binary())
			return a ^ b;
		Element s = a + b;
		return s >= q_ ? s - q_ : s;
	}
	Element neg(Element a) const
	{
		if (is_binary() || a == 0)
			return a;
		return q_ - a;
	}
	Element sub(Element a, Element b) const { return add(a, neg(b)); }
	Element mul(Element a, Element b) const
	{
		if (a == 0 || b == 0)
			return 0;
		if (!is_binary() || spec_.k == 1)
			return static_cast<Element>(static_cast<std::uint64_t>(a) * b % q_);
		return exp_[log_[a] + log_[b]];
	}
	// Throws DivisionByZero.
	Element inv(Element a) const;
	Element div(Element a, Element b) const { return mul(a, inv(b)); }
	Element pow(Element a, std::uint64_t e) const;

	// Least element of multiplicative order q - 1.
	Element primitive_element() const { return primitive_; }
	// primitive_element()^t.
	Element exp(std::uint64_t t) const;
	// Logarithm to the base primitive_element(). Throws ZeroHasNoLog.
	std::uint32_t log(Element x) const;
	// Logarithm to an arbitrary primitive base. Throws ZeroHasNoLog or
	// NotPrimitive.
	std::uint32_t discrete_log(Element x, Element base) const;
	std::uint32_t multiplicative_order(Element x) const;

	explicit Field(const FieldSpec& spec);

private:
	FieldSpec spec_;
	std::uint32_t q_ = 0;
	Element primitive_ = 1;
	std::vector<std::uint32_t> log_;
	std::vector<Element> exp_; // length 2(q-1), so exp_[log a + log b] needs no reduction
};

struct FieldElement {
	FieldPtr field;
	Element value = 0;
};

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv, Pow };

// Checked arithmetic on tagged elements. Pow takes its exponent from the
// extra argument. Throws MixedFields, DivisionByZero, InvalidArgument.
FieldElement field_op(const FieldPtr& field, FieldOp op, std::span<const FieldElement> operands,
	std::uint64_t exponent = 0);

} // namespace mrgrid
