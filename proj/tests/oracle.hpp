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

// Reference implementations used only by the tests. Nothing here calls into
// the library's arithmetic, elimination, regularity or canonical-form code.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// GF(p) by residues, GF(2^k) by carry-less multiplication mod the modulus.
struct NaiveField {
	std::uint32_t p = 2;
	std::uint32_t k = 1;
	std::uint32_t modulus = 0; // full polynomial bitmask including x^k

	std::uint32_t q() const { return k == 1 ? p : (1u << k); }
	bool binary() const { return p == 2; }

	std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return binary() ? (a ^ b) : (a + b) % p; }
	std::uint32_t neg(std::uint32_t a) const { return binary() ? a : (p - a) % p; }
	std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
	std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
	{
		if (!binary() || k == 1)
			return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
		std::uint64_t r = 0;
		for (std::uint32_t i = 0; i < k; ++i)
			if (b >> i & 1)
				r ^= static_cast<std::uint64_t>(a) << i;
		for (int d = 2 * static_cast<int>(k) - 2; d >= static_cast<int>(k); --d)
			if (r >> d & 1)
				r ^= static_cast<std::uint64_t>(modulus) << (d - k);
		return static_cast<std::uint32_t>(r);
	}
	std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
	{
		std::uint32_t r = 1;
		for (std::uint64_t i = 0; i < e; ++i)
			r = mul(r, a);
		return r;
	}
	// Linear search; the tests keep q small.
	std::uint32_t inv(std::uint32_t a) const
	{
		for (std::uint32_t x = 1; x < q(); ++x)
			if (mul(a, x) == 1)
				return x;
		return 0;
	}
};

using Mat = std::vector<std::vector<std::uint32_t>>;

inline std::size_t rank(Mat m, const NaiveField& f)
{
	std::size_t r = 0;
	const std::size_t cols = m.empty() ? 0 : m[0].size();
	for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
		std::size_t piv = r;
		while (piv < m.size() && m[piv][c] == 0)
			++piv;
		if (piv == m.size())
			continue;
		std::swap(m[r], m[piv]);
		const std::uint32_t iv = f.inv(m[r][c]);
		for (std::size_t i = r + 1; i < m.size(); ++i) {
			if (m[i][c] == 0)
				continue;
			const std::uint32_t t = f.mul(m[i][c], iv);
			for (std::size_t j = c; j < cols; ++j)
				m[i][j] = f.sub(m[i][j], f.mul(t, m[r][j]));
		}
		++r;
	}
	return r;
}

// Parity-check matrix straight from the definition: for every grid column j
// and column-parity row k, sum_i h_col[k][i] x_ij = 0; for every grid row i
// and row-parity row k, sum_j h_row[k][j] x_ij = 0. Restricted to cells.
inline Mat restricted_parity(std::uint32_t m, std::uint32_t n, const Mat& h_col, const Mat& h_row,
	const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells)
{
	Mat out;
	for (std::uint32_t j = 0; j < n; ++j)
		for (const auto& hc : h_col) {
			std::vector<std::uint32_t> row;
			for (const auto& [ci, cj] : cells)
				row.push_back(cj == j ? hc[ci] : 0);
			out.push_back(row);
		}
	for (std::uint32_t i = 0; i < m; ++i)
		for (const auto& hr : h_row) {
			std::vector<std::uint32_t> row;
			for (const auto& [ci, cj] : cells)
				row.push_back(ci == i ? hr[cj] : 0);
			out.push_back(row);
		}
	return out;
}

inline std::size_t restricted_rank(std::uint32_t m, std::uint32_t n, const Mat& h_col, const Mat& h_row,
	const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells, const NaiveField& f)
{
	if (cells.empty())
		return 0;
	return rank(restricted_parity(m, n, h_col, h_row, cells), f);
}

// Every (U, V) pair by bitmask; pairs with |U| < a and |V| < b are skipped.
inline bool regular(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells, std::uint32_t m,
	std::uint32_t n, std::uint32_t a, std::uint32_t b)
{
	for (std::uint32_t U = 0; U < (1u << m); ++U) {
		const int u = __builtin_popcount(U);
		for (std::uint32_t V = 0; V < (1u << n); ++V) {
			const int v = __builtin_popcount(V);
			if (u < static_cast<int>(a) && v < static_cast<int>(b))
				continue;
			int inside = 0;
			for (const auto& [i, j] : cells)
				inside += (U >> i & 1) && (V >> j & 1);
			if (inside > v * static_cast<int>(a) + u * static_cast<int>(b) - static_cast<int>(a * b))
				return false;
		}
	}
	return true;
}

// Rows of a u x v 0/1 mask as strings.
using Mask = std::vector<std::string>;

inline Mask permute(const Mask& m, const std::vector<int>& rp, const std::vector<int>& cp)
{
	Mask out(m.size(), std::string(cp.size(), '0'));
	for (std::size_t r = 0; r < m.size(); ++r)
		for (std::size_t c = 0; c < cp.size(); ++c)
			out[r][c] = m[rp[r]][cp[c]];
	return out;
}

inline std::set<Mask> orbit(const Mask& m)
{
	std::set<Mask> seen;
	std::vector<int> rp(m.size()), cp(m.empty() ? 0 : m[0].size());
	std::iota(rp.begin(), rp.end(), 0);
	do {
		std::iota(cp.begin(), cp.end(), 0);
		do
			seen.insert(permute(m, rp, cp));
		while (std::next_permutation(cp.begin(), cp.end()));
	} while (std::next_permutation(rp.begin(), rp.end()));
	return seen;
}

inline Mask canonical(const Mask& m)
{
	return *orbit(m).begin();
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> cells_of(const Mask& m)
{
	std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
	for (std::uint32_t r = 0; r < m.size(); ++r)
		for (std::uint32_t c = 0; c < m[r].size(); ++c)
			if (m[r][c] == '1')
				out.push_back({r, c});
	return out;
}

// Types of T(1, b, 0) patterns in at most m rows: every column holds >= 2
// cells and every row >= b + 1 (irreducible), all rows and columns used,
// regular by exhaustive (U, V). Columns are generated as non-decreasing
// tuples, which loses nothing since types are column-permutation classes.
// Width is bounded by v <= u*b - b, from 2v <= |E| <= v + ub - b.
inline std::set<Mask> types(std::uint32_t m, std::uint32_t b)
{
	std::set<Mask> out;
	for (std::uint32_t u = 1; u <= m; ++u) {
		std::vector<std::uint32_t> colset;
		for (std::uint32_t c = 1; c < (1u << u); ++c)
			if (__builtin_popcount(c) >= 2)
				colset.push_back(c);
		if (colset.empty())
			continue;
		const std::uint32_t vmax = u * b - b;
		for (std::uint32_t v = 1; v <= vmax; ++v) {
			std::vector<std::size_t> idx(v, 0);
			for (;;) {
				Mask mk(u, std::string(v, '0'));
				for (std::uint32_t c = 0; c < v; ++c)
					for (std::uint32_t r = 0; r < u; ++r)
						if (colset[idx[c]] >> r & 1)
							mk[r][c] = '1';
				bool ok = true;
				for (std::uint32_t r = 0; r < u && ok; ++r)
					ok = static_cast<std::uint32_t>(std::count(mk[r].begin(), mk[r].end(), '1')) >= b + 1;
				if (ok && regular(cells_of(mk), u, v, 1, b))
					out.insert(canonical(mk));
				// next non-decreasing tuple
				std::size_t i = v;
				while (i > 0 && idx[i - 1] + 1 == colset.size())
					--i;
				if (i == 0)
					break;
				++idx[i - 1];
				for (std::size_t j = i; j < v; ++j)
					idx[j] = idx[i - 1];
			}
		}
	}
	return out;
}

} // namespace oracle
