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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mrgrid {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// sqrt(radicand) / divisor + offset, kept symbolic.
struct Radical {
	BigInt radicand;
	BigInt divisor = 1;
	BigInt offset = 0;

	double approx() const;
	// Exact test value < x for a non-negative integer x.
	bool less_than(const BigInt& x) const;
	// Exact test x < value.
	bool greater_than(const BigInt& x) const;
};

// Values built from logarithms or caller constants are only approximate.
using BoundValue = std::variant<BigInt, BigRational, Radical, double>;

struct BoundReport {
	std::string name;
	std::vector<std::pair<std::string, std::string>> params;
	BoundValue value;
	double approx = 0;
	std::string applicability;
};

// sum_{i <= k} C(n, i).
BigInt binomial_sum(std::uint64_t n, std::uint64_t k);
BigInt big_binomial(std::uint64_t n, std::uint64_t k);

BigInt gopalan_general(std::uint64_t m, std::uint64_t b, std::uint64_t n);
BigInt kmg_constant(std::uint64_t m, std::uint64_t b);
BigInt kmg_poly(std::uint64_t m, std::uint64_t b, std::uint64_t n);
BigInt type_count(std::uint64_t m, std::uint64_t b);
BigRational t4_lower_threshold(std::uint64_t n);
Radical t3_lower_threshold(std::uint64_t n);
Radical sidon_max(std::uint64_t N);

// Field orders below the lower-bound thresholds, compared exactly.
bool below_t4_threshold(std::uint64_t q, std::uint64_t n);
bool below_t3_threshold(std::uint64_t q, std::uint64_t n);
// True when a subset of this size in Z_N cannot be 2-Sidon.
bool exceeds_sidon_max(std::uint64_t size, std::uint64_t N);

// Natural logarithm; constants are supplied by the caller.
double hypergraph_alpha(double nv, double delta_r, double r, double c_r);
double t4_upper(std::uint64_t n, double c1);
double t3_upper(std::uint64_t n, double c2);

std::vector<std::string_view> bound_names();

// Dispatch by name. Integer parameters: m, b, n, N, nv, delta, r. Real
// constants: c_r (hypergraph_alpha), C (t4_upper, t3_upper). Throws
// MissingConstant for an absent constant and InvalidArgument for other
// missing or malformed parameters or an unknown name.
BoundReport bound(std::string_view name, const std::map<std::string, std::string>& params);

std::string to_string(const BigRational& r);

} // namespace mrgrid
