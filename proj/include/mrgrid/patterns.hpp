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

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mrgrid {

struct Cell {
	std::uint32_t row = 0;
	std::uint32_t col = 0;
	auto operator<=>(const Cell&) const = default;
};

// Grid-like topology T_{m x n}(a, b, h): a parities per column, b per row,
// h global parities. Everything in this library requires h = 0.
struct Topology {
	std::uint32_t m = 0;
	std::uint32_t n = 0;
	std::uint32_t a = 0;
	std::uint32_t b = 0;
	std::uint32_t h = 0;

	// Throws InvalidArgument on a > m-1 or b > n-1, and
	// UnsupportedGlobalParities on h > 0.
	void validate() const;
	bool operator==(const Topology&) const = default;
};

// Set of erased cells, kept sorted in row-major order.
class ErasurePattern {
public:
	ErasurePattern() = default;
	explicit ErasurePattern(std::vector<Cell> cells);

	const std::vector<Cell>& cells() const { return cells_; }
	std::size_t size() const { return cells_.size(); }
	bool empty() const { return cells_.empty(); }
	bool contains(Cell c) const;

	// U_E and V_E, ascending.
	std::vector<std::uint32_t> rows_used() const;
	std::vector<std::uint32_t> cols_used() const;

	// Throws InvalidArgument when a cell falls outside an m x n grid.
	void check_bounds(std::uint32_t m, std::uint32_t n) const;

	auto operator<=>(const ErasurePattern&) const = default;

private:
	std::vector<Cell> cells_;
};

// Canonical representative of a pattern's class under row and column
// permutations: a u x v 0/1 mask with full support that is the
// lexicographically least (row-major) member of its orbit.
struct PatternType {
	std::uint32_t u = 0;
	std::uint32_t v = 0;
	std::vector<std::uint8_t> mask; // row-major, 1 = erased

	bool at(std::uint32_t r, std::uint32_t c) const { return mask[r * v + c] != 0; }
	std::size_t weight() const;
	std::vector<std::string> to_strings() const;
	// Throws ParseError on ragged rows or characters other than 0/1.
	static PatternType from_strings(const std::vector<std::string>& rows);
	// The mask itself placed in the top-left corner of a grid.
	ErasurePattern to_pattern() const;

	auto operator<=>(const PatternType&) const = default;
};

bool is_irreducible(const Topology& t, const ErasurePattern& e);

enum class RegularityMode { Fast, Brute };

// |E ∩ (U x V)| <= |V|a + |U|b - ab over all row sets U and column sets V.
// Pairs with |U| < a and |V| < b are skipped: the bound there is below the
// size of the subgrid and such pairs do not constrain recoverability.
bool is_regular(const Topology& t, const ErasurePattern& e, RegularityMode mode = RegularityMode::Fast);

// Same test on a compressed pattern: column j occupies the rows set in
// col_masks[j] (bit r = row r), over rows [0, rows).
bool is_regular_masks(std::span<const std::uint32_t> col_masks, std::uint32_t rows, std::uint32_t a,
	std::uint32_t b, RegularityMode mode);

// Throws EmptyPattern.
PatternType canonical_type(const ErasurePattern& e);

struct EnumerateOptions {
	// Candidate masks examined before giving up with ResourceGuard.
	std::uint64_t max_candidates = 50'000'000;
};

// Canonical types of all regular irreducible patterns of T_{m x n}(1, b, 0)
// for unbounded n, sorted ascending.
std::vector<PatternType> enumerate_types(std::uint32_t m, std::uint32_t b, const EnumerateOptions& opts = {});

// Distinct placements of a pattern type into an m x n grid. A placement is
// an ascending choice of pt.v grid columns together with the grid-row mask
// (bit i = grid row i) of each chosen column.
class TypeEmbedder {
public:
	// Throws InvalidArgument when pt does not fit into the grid.
	TypeEmbedder(const PatternType& pt, std::uint32_t m, std::uint32_t n);

	using Visitor = std::function<bool(std::span<const std::uint32_t> cols, std::span<const std::uint32_t> masks)>;

	std::uint32_t width() const { return v_; }
	std::uint64_t per_column_subset() const { return per_subset_; }
	std::uint64_t column_subsets() const { return subsets_; }
	std::uint64_t total() const { return per_subset_ * subsets_; }

	// All placements on one ascending column subset of size width(). Stops and
	// returns false as soon as the visitor does.
	bool visit_subset(std::span<const std::uint32_t> cols, const Visitor& visit) const;
	// All placements, column subsets in lexicographic order.
	bool visit_all(const Visitor& visit) const;

	static ErasurePattern to_pattern(std::span<const std::uint32_t> cols, std::span<const std::uint32_t> masks);

private:
	std::uint32_t m_, n_, v_;
	std::vector<std::vector<std::uint32_t>> multisets_; // sorted grid-row masks
	std::uint64_t per_subset_ = 0;
	std::uint64_t subsets_ = 0;
};

// Every embedding of pt into an m x n grid as a distinct cell set.
std::vector<ErasurePattern> instantiate_type(const PatternType& pt, std::uint32_t m, std::uint32_t n);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace mrgrid
