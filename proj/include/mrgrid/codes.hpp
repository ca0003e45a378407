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

#include "mrgrid/gfmatrix.hpp"
#include "mrgrid/patterns.hpp"

#include <span>
#include <vector>

namespace mrgrid {

// Tensor-product code C_col (x) C_row: h_col is a x m, h_row is b x n.
struct TensorCode {
	Topology topology;
	Matrix h_col;
	Matrix h_row;

	const FieldPtr& field() const { return h_row.field(); }

	// Shapes, common field, full row rank, h = 0.
	void validate() const;
	static TensorCode make(const Topology& t, Matrix h_col, Matrix h_row);
};

// 1 x m all-ones column parity (the simple parity code P_m).
Matrix all_ones_row(FieldPtr field, std::size_t m);

// m x n array; entries at erased cells are ignored.
struct GridWord {
	std::uint32_t m = 0;
	std::uint32_t n = 0;
	std::vector<Element> entries; // row-major
	ErasurePattern erased;

	Element at(std::uint32_t i, std::uint32_t j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

// Cell (i, j) maps to column n*i + j.
inline std::size_t cell_index(std::uint32_t n, Cell c) { return static_cast<std::size_t>(c.row) * n + c.col; }

// (a*n + b*m) x (m*n): the column constraints above diag(h_row, ..., h_row).
Matrix build_pseudo_parity(const TensorCode& c);

// Rank of the pseudo-parity matrix restricted to the cells of e.
std::size_t restricted_rank(const TensorCode& c, const ErasurePattern& e);
bool is_correctable_by(const TensorCode& c, const ErasurePattern& e);

// Allocation-free restricted rank for hot loops. Only the nonzero rows of
// the restriction are materialised: a rows per touched grid column and b
// rows per touched grid row.
class RestrictedRanker {
public:
	explicit RestrictedRanker(const TensorCode& c) : code_(c) {}

	// Pattern given as ascending grid columns and a grid-row mask per column.
	std::size_t rank(std::span<const std::uint32_t> cols, std::span<const std::uint32_t> masks);
	std::size_t rank(const ErasurePattern& e);

private:
	const TensorCode& code_;
	std::vector<Cell> cells_;
	std::vector<Element> scratch_;
};

// Fills the erased cells. Throws InconsistentWord when the known symbols
// violate the parities and Uncorrectable when the erasures are not
// uniquely determined. Returns the full m x n array row-major.
std::vector<Element> decode(const TensorCode& c, const GridWord& w);

// Systematic encoding: the message fills U x V row-major, where U and V are
// the lexicographically first row/column sets whose complements carry
// invertible parity blocks. Throws DimensionMismatch.
GridWord encode(const TensorCode& c, std::span<const Element> message);

// Information set chosen by encode().
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> information_set(const TensorCode& c);

// For a = 1 and an irreducible pattern: eliminate the column-parity rows
// against one pivot cell per erased column and return the u0*b x (|E| - v0)
// block B, so that rank(H|_E) = v0 + rank(B). B's rows follow U_E ascending
// (b rows each); its columns are the non-pivot cells in row-major order.
// Throws NotIrreducible.
Matrix reduce_restricted(const TensorCode& c, const ErasurePattern& e);

} // namespace mrgrid
