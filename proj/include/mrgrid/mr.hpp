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

#include "mrgrid/codes.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mrgrid {

enum class Verdict { Certified, FailedMds, FailedPattern };

std::string_view verdict_name(Verdict v);

struct CertReport {
	Verdict verdict = Verdict::Certified;
	std::optional<ErasurePattern> counterexample;
	std::optional<std::size_t> rank_found;
	// Instances examined up to and including the counterexample, or all of them.
	std::uint64_t patterns_checked = 0;
};

struct CertifyOptions {
	std::uint64_t max_instances = 10'000'000;
	unsigned threads = 1; // 0 = resolve_threads()
};

// MR test for T_{m x n}(1, b, 0): h_col and h_row must be MDS, then every
// placement of every enumerated pattern type must have full restricted rank.
// The reported counterexample is the first failing placement in type order,
// column subsets lexicographic, independent of the thread count.
// Throws InvalidArgument for a != 1 and ResourceGuard past max_instances.
CertReport certify_mr(const TensorCode& c, const CertifyOptions& opts = {});

enum class SearchStrategy { GreedyIndependent, Random };

struct SearchOptions {
	SearchStrategy strategy = SearchStrategy::GreedyIndependent;
	std::uint64_t seed = 0;        // greedy: 0 scans in increasing order, otherwise shuffled
	std::uint64_t random_trials = 256;
	// Greedy: when one column short, also try the column at infinity
	// ((0,1) or (0,0,1)).
	bool allow_infinity = true;
	CertifyOptions certify;
};

struct SearchOutcome {
	std::optional<TensorCode> code;
	std::uint64_t trials = 0; // greedy: candidates scanned; random: matrices drawn
};

// Throws InvalidArgument when (m, b) has no greedy ansatz.
SearchOutcome search_mr(std::uint32_t m, std::uint32_t b, std::uint32_t n, const FieldSpec& spec,
	const SearchOptions& opts = {});

struct SweepRecord {
	std::uint32_t q = 0;
	std::uint64_t trials = 0;
	bool found = false;
};

struct SweepResult {
	std::vector<SweepRecord> progress;
	std::optional<TensorCode> code;
};

// Tries every prime and every power of two in [q_min, q_max] in increasing
// order and stops at the first certified code.
SweepResult search_sweep(std::uint32_t m, std::uint32_t b, std::uint32_t n, std::uint32_t q_min,
	std::uint32_t q_max, const SearchOptions& opts = {});

enum class TopologyKind { T4_12, T3_13 };

// The closed forms as printed:
//   T4_12: (x1-x4)(x2-x6)(x3-x5) - (x2-x4)(x1-x5)(x3-x6)
//   T3_13: (x1-x2)(x3-x4)[(x1-x6)(x2-x6)(x3-x5)(x4-x6) - (x1-x5)(x2-x5)(x3-x6)(x4-x6)]
Element f_poly(const Field& f, TopologyKind kind, std::span<const Element, 6> x);
// Throws MixedFields, InvalidArgument on a count other than six.
FieldElement f_poly(TopologyKind kind, std::span<const FieldElement> x);

// Polynomial that vanishes exactly when the Type II (T4_12) or E0 (T3_13)
// layout on Vandermonde columns with nodes x1..x6 is rank deficient. For
// T4_12 this is f_poly. For T3_13 the printed form does not match the rank;
// this is the determinant of the reduced 4 x 4 block instead:
//   (x1-x2)(x3-x4)(x5-x6)[x1x2(x3+x4-x5-x6) + x3x4(x5+x6-x1-x2) + x5x6(x1+x2-x3-x4)]
Element rank_condition(const Field& f, TopologyKind kind, std::span<const Element, 6> x);

// True if some ordering of the six values zeroes rank_condition.
bool rank_condition_vanishes(const Field& f, TopologyKind kind, std::array<Element, 6> x);

struct SidonWitness {
	std::uint64_t modulus = 0;
	std::array<std::uint64_t, 6> exponents{}; // t1..t6
	std::array<std::pair<std::uint64_t, std::uint64_t>, 3> pairing{}; // {t1,t6}, {t2,t5}, {t3,t4}
	std::uint64_t sum = 0;
	std::array<std::uint32_t, 6> columns{}; // h_row columns holding t1..t6, when from an attack
};

// Pair sums bucketed mod modulus; the first bucket to collect three pairs
// wins. Exponents are deduplicated and taken mod modulus.
std::optional<SidonWitness> find_sum_collision(std::span<const std::uint64_t> exponents, std::uint64_t modulus);

// Cells for the 4-row Type I / Type II and 3-row E0 layouts with role k
// placed at grid column cols[k].
ErasurePattern type_one_layout(std::span<const std::uint32_t, 6> cols);
ErasurePattern type_two_layout(std::span<const std::uint32_t, 6> cols);
ErasurePattern e0_layout(std::span<const std::uint32_t, 6> cols);

struct DifferenceWitness {
	std::array<std::uint32_t, 6> columns{};
	std::array<Element, 2> difference{}; // gamma_2 - gamma_1, zero for the first-coordinate-zero case
	bool zero_first_coordinate = false;
};

struct AttackResult {
	ErasurePattern pattern;
	std::size_t rank = 0; // rank(H|_E) under the all-ones column parity
	std::optional<SidonWitness> sidon;
	std::optional<DifferenceWitness> difference;
};

// Ordered-pair differences gamma_j - gamma_i bucketed by value, buckets in
// ascending order; within a bucket disjoint pairs are taken greedily, then by
// exact search. Returned indices are into gammas, roles 1..6.
std::optional<DifferenceWitness> find_difference_collision(const Field& f,
	std::span<const std::array<Element, 2>> gammas);

// 2 x n row parity; throws NotMds unless every 2 columns are independent.
std::optional<AttackResult> attack_t4(const Matrix& h_row);
// 3 x n row parity; throws NotMds unless every 3 columns are independent.
std::optional<AttackResult> attack_t3(const Matrix& h_row);

} // namespace mrgrid
