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

#include "mrgrid/codes.hpp"

#include "mrgrid/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mrgrid {

namespace {

// Lexicographically first k-subset S of [0, count) whose complement indexes
// an invertible square block of h.
std::vector<std::uint32_t> first_info_set(const Matrix& h, std::uint32_t count)
{
	const std::uint32_t parity = static_cast<std::uint32_t>(h.rows());
	const std::uint32_t k = count - parity;
	std::vector<std::uint32_t> s(k);
	std::iota(s.begin(), s.end(), 0);
	for (;;) {
		std::vector<std::size_t> rest;
		for (std::uint32_t j = 0, p = 0; j < count; ++j) {
			if (p < k && s[p] == j)
				++p;
			else
				rest.push_back(j);
		}
		if (rank(h.select_columns(rest)) == parity)
			return s;
		std::size_t i = k;
		while (i > 0 && s[i - 1] == count - k + i - 1)
			--i;
		if (i == 0)
			break;
		++s[i - 1];
		for (std::size_t j = i; j < k; ++j)
			s[j] = s[j - 1] + 1;
	}
	throw Error(ErrorKind::RankDeficient, "parity matrix has no invertible block");
}

} // namespace

void TensorCode::validate() const
{
	topology.validate();
	if (!h_col.field() || !h_row.field())
		throw Error(ErrorKind::InvalidArgument, "parity matrices need a field");
	if (!(h_col.field()->spec() == h_row.field()->spec()))
		throw Error(ErrorKind::MixedFields, "h_col and h_row over different fields");
	if (h_col.rows() != topology.a || h_col.cols() != topology.m)
		throw Error(ErrorKind::DimensionMismatch, "h_col must be a x m");
	if (h_row.rows() != topology.b || h_row.cols() != topology.n)
		throw Error(ErrorKind::DimensionMismatch, "h_row must be b x n");
	if (rank(h_col) != topology.a || rank(h_row) != topology.b)
		throw Error(ErrorKind::RankDeficient, "parity matrices must have full row rank");
}

TensorCode TensorCode::make(const Topology& t, Matrix h_col, Matrix h_row)
{
	TensorCode c{t, std::move(h_col), std::move(h_row)};
	c.validate();
	return c;
}

Matrix all_ones_row(FieldPtr field, std::size_t m)
{
	return Matrix(std::move(field), 1, m, std::vector<Element>(m, 1));
}

Matrix build_pseudo_parity(const TensorCode& c)
{
	const auto& t = c.topology;
	if (t.h != 0)
		throw Error(ErrorKind::UnsupportedGlobalParities, "global parities (h > 0) are not supported");
	const std::size_t m = t.m, n = t.n, a = t.a, b = t.b;
	Matrix h(c.field(), a * n + b * m, m * n);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < a; ++k)
				h(j * a + k, i * n + j) = c.h_col(k, i);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t k = 0; k < b; ++k)
			for (std::size_t j = 0; j < n; ++j)
				h(a * n + i * b + k, i * n + j) = c.h_row(k, j);
	return h;
}

std::size_t RestrictedRanker::rank(std::span<const std::uint32_t> cols, std::span<const std::uint32_t> masks)
{
	cells_.clear();
	for (std::size_t j = 0; j < cols.size(); ++j)
		for (std::uint32_t r = 0; r < 32; ++r)
			if (masks[j] & (1u << r))
				cells_.push_back({r, cols[j]});
	std::sort(cells_.begin(), cells_.end());
	return rank(ErasurePattern(cells_));
}

std::size_t RestrictedRanker::rank(const ErasurePattern& e)
{
	const auto& t = code_.topology;
	const auto& cells = e.cells();
	if (cells.empty())
		return 0;
	const std::size_t width = cells.size();
	// Dense labels for touched rows and columns.
	std::uint32_t row_slot[64], col_slot[64];
	std::vector<std::uint32_t> row_slots, col_slots;
	const bool small = t.m <= 64 && t.n <= 64;
	std::map<std::uint32_t, std::uint32_t> row_map, col_map;
	std::uint32_t nrows_used = 0, ncols_used = 0;
	if (small) {
		std::fill(row_slot, row_slot + t.m, ~0u);
		std::fill(col_slot, col_slot + t.n, ~0u);
	}
	auto slot_of = [&](std::uint32_t key, std::uint32_t* table, std::map<std::uint32_t, std::uint32_t>& map,
			std::uint32_t& counter) {
		if (small) {
			if (table[key] == ~0u)
				table[key] = counter++;
			return table[key];
		}
		auto [it, inserted] = map.emplace(key, counter);
		if (inserted)
			++counter;
		return it->second;
	};
	for (const auto& cell : cells) {
		slot_of(cell.row, row_slot, row_map, nrows_used);
		slot_of(cell.col, col_slot, col_map, ncols_used);
	}
	const std::size_t a = t.a, b = t.b;
	const std::size_t height = a * ncols_used + b * nrows_used;
	scratch_.assign(height * width, 0);
	for (std::size_t x = 0; x < width; ++x) {
		const Cell cell = cells[x];
		const std::size_t cs = slot_of(cell.col, col_slot, col_map, ncols_used);
		const std::size_t rs = slot_of(cell.row, row_slot, row_map, nrows_used);
		for (std::size_t k = 0; k < a; ++k)
			scratch_[(cs * a + k) * width + x] = code_.h_col(k, cell.row);
		for (std::size_t k = 0; k < b; ++k)
			scratch_[(a * ncols_used + rs * b + k) * width + x] = code_.h_row(k, cell.col);
	}
	return rank_in_place(*code_.field(), scratch_.data(), height, width);
}

std::size_t restricted_rank(const TensorCode& c, const ErasurePattern& e)
{
	c.topology.validate();
	e.check_bounds(c.topology.m, c.topology.n);
	RestrictedRanker r(c);
	return r.rank(e);
}

bool is_correctable_by(const TensorCode& c, const ErasurePattern& e)
{
	return restricted_rank(c, e) == e.size();
}

std::vector<Element> decode(const TensorCode& c, const GridWord& w)
{
	const auto& t = c.topology;
	if (w.m != t.m || w.n != t.n || w.entries.size() != static_cast<std::size_t>(t.m) * t.n)
		throw Error(ErrorKind::DimensionMismatch, "word shape does not match the code");
	w.erased.check_bounds(t.m, t.n);
	const Field& f = *c.field();
	std::vector<Element> out = w.entries;
	for (const auto& cell : w.erased.cells())
		out[cell_index(t.n, cell)] = 0;
	for (Element e : out)
		if (!f.contains(e))
			throw Error(ErrorKind::InvalidArgument, "word entry outside the field");

	const Matrix h = build_pseudo_parity(c);
	// Known part contributes H_K y; the erased unknowns must solve H_E x = -H_K y.
	const auto syndrome = h.apply(out);
	std::vector<std::size_t> erased_cols;
	for (const auto& cell : w.erased.cells())
		erased_cols.push_back(cell_index(t.n, cell));
	const std::size_t ne = erased_cols.size();
	Matrix aug(c.field(), h.rows(), ne + 1);
	for (std::size_t r = 0; r < h.rows(); ++r) {
		for (std::size_t x = 0; x < ne; ++x)
			aug(r, x) = h(r, erased_cols[x]);
		aug(r, ne) = f.neg(syndrome[r]);
	}
	const auto pivots = aug.reduce();
	if (!pivots.empty() && pivots.back() == ne)
		throw Error(ErrorKind::InconsistentWord, "known symbols violate the parity checks");
	if (pivots.size() < ne)
		throw Error(ErrorKind::Uncorrectable,
			"restricted rank " + std::to_string(pivots.size()) + " < " + std::to_string(ne) + " erasures");
	for (std::size_t x = 0; x < ne; ++x)
		out[erased_cols[x]] = aug(x, ne);
	return out;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> information_set(const TensorCode& c)
{
	return {first_info_set(c.h_col, c.topology.m), first_info_set(c.h_row, c.topology.n)};
}

GridWord encode(const TensorCode& c, std::span<const Element> message)
{
	c.validate();
	const auto& t = c.topology;
	const Field& f = *c.field();
	const std::size_t k = static_cast<std::size_t>(t.m - t.a) * (t.n - t.b);
	if (message.size() != k)
		throw Error(ErrorKind::DimensionMismatch,
			"message length " + std::to_string(message.size()) + " != dimension " + std::to_string(k));
	const auto [info_rows, info_cols] = information_set(c);
	auto complement = [](const std::vector<std::uint32_t>& s, std::uint32_t count) {
		std::vector<std::size_t> rest;
		for (std::uint32_t j = 0; j < count; ++j)
			if (!std::binary_search(s.begin(), s.end(), j))
				rest.push_back(j);
		return rest;
	};
	const auto parity_rows = complement(info_rows, t.m);
	const auto parity_cols = complement(info_cols, t.n);

	GridWord w{t.m, t.n, std::vector<Element>(static_cast<std::size_t>(t.m) * t.n, 0), {}};
	std::size_t next = 0;
	for (auto i : info_rows)
		for (auto j : info_cols) {
			if (!f.contains(message[next]))
				throw Error(ErrorKind::InvalidArgument, "message symbol outside the field");
			w.entries[static_cast<std::size_t>(i) * t.n + j] = message[next++];
		}

	// Complete information rows with the row code, then every column with the
	// column code; rows obtained as column combinations stay in C_row.
	const Matrix row_block = c.h_row.select_columns(parity_cols);
	for (auto i : info_rows) {
		std::vector<Element> rhs(t.b, 0);
		for (std::uint32_t r = 0; r < t.b; ++r)
			for (auto j : info_cols)
				rhs[r] = f.sub(rhs[r], f.mul(c.h_row(r, j), w.at(i, j)));
		const auto x = solve_unique(row_block, rhs);
		for (std::size_t p = 0; p < parity_cols.size(); ++p)
			w.entries[static_cast<std::size_t>(i) * t.n + parity_cols[p]] = x[p];
	}
	const Matrix col_block = c.h_col.select_columns(parity_rows);
	for (std::uint32_t j = 0; j < t.n; ++j) {
		std::vector<Element> rhs(t.a, 0);
		for (std::uint32_t r = 0; r < t.a; ++r)
			for (auto i : info_rows)
				rhs[r] = f.sub(rhs[r], f.mul(c.h_col(r, i), w.at(i, j)));
		const auto x = solve_unique(col_block, rhs);
		for (std::size_t p = 0; p < parity_rows.size(); ++p)
			w.entries[parity_rows[p] * t.n + j] = x[p];
	}
	return w;
}

Matrix reduce_restricted(const TensorCode& c, const ErasurePattern& e)
{
	const auto& t = c.topology;
	if (t.a != 1)
		throw Error(ErrorKind::InvalidArgument, "reduce_restricted needs a = 1");
	if (e.empty() || !is_irreducible(t, e))
		throw Error(ErrorKind::NotIrreducible, "pattern is not irreducible");
	const Field& f = *c.field();
	const auto rows = e.rows_used();
	std::map<std::uint32_t, std::size_t> row_block;
	for (std::size_t i = 0; i < rows.size(); ++i)
		row_block[rows[i]] = i;
	// Pivot of each erased column: its first erased row with a nonzero
	// column-parity coefficient.
	std::map<std::uint32_t, std::uint32_t> pivot;
	for (const auto& cell : e.cells()) {
		if (c.h_col(0, cell.row) == 0)
			continue;
		auto it = pivot.find(cell.col);
		if (it == pivot.end() || cell.row < it->second)
			pivot[cell.col] = cell.row;
	}
	for (auto col : e.cols_used())
		if (!pivot.count(col))
			throw Error(ErrorKind::NotMds, "erased column has no nonzero column-parity coefficient");
	std::vector<Cell> rest;
	for (const auto& cell : e.cells())
		if (pivot[cell.col] != cell.row)
			rest.push_back(cell);
	const std::size_t b = t.b;
	Matrix out(c.field(), rows.size() * b, rest.size());
	for (std::size_t x = 0; x < rest.size(); ++x) {
		const Cell cell = rest[x];
		const std::uint32_t pr = pivot[cell.col];
		const Element ratio = f.div(c.h_col(0, cell.row), c.h_col(0, pr));
		for (std::size_t k = 0; k < b; ++k) {
			const Element h = c.h_row(k, cell.col);
			out(row_block[cell.row] * b + k, x) = h;
			out(row_block[pr] * b + k, x) = f.neg(f.mul(ratio, h));
		}
	}
	return out;
}

} // namespace mrgrid
