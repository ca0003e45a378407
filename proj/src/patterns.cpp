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

#include "mrgrid/patterns.hpp"

#include "mrgrid/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace mrgrid {

namespace {

constexpr std::uint32_t kMaxCompressedRows = 24;
constexpr std::uint32_t kMaxBruteCells = 30;   // u + v for brute-force regularity
constexpr std::uint32_t kMaxCanonicalRows = 10; // u! row orders

struct Compressed {
	std::uint32_t u = 0;
	std::vector<std::uint32_t> cols; // bit r = r-th used row
};

Compressed compress(const ErasurePattern& e)
{
	const auto rows = e.rows_used();
	const auto cols = e.cols_used();
	if (rows.size() > kMaxCompressedRows)
		throw Error(ErrorKind::ResourceGuard, "pattern spans more than 24 rows");
	std::map<std::uint32_t, std::uint32_t> row_index, col_index;
	for (std::uint32_t i = 0; i < rows.size(); ++i)
		row_index[rows[i]] = i;
	for (std::uint32_t j = 0; j < cols.size(); ++j)
		col_index[cols[j]] = j;
	Compressed c;
	c.u = static_cast<std::uint32_t>(rows.size());
	c.cols.assign(cols.size(), 0);
	for (const auto& cell : e.cells())
		c.cols[col_index[cell.col]] |= 1u << row_index[cell.row];
	return c;
}

bool regular_fast(std::span<const std::uint32_t> cols, std::uint32_t u, std::uint32_t a, std::uint32_t b)
{
	const std::uint32_t full = u == 32 ? ~0u : (1u << u) - 1;
	for (std::uint32_t rows = 0;; ++rows) {
		const auto usize = static_cast<std::int64_t>(std::popcount(rows));
		if (usize >= a) {
			// Worst column set: every column with more than a erasures inside U.
			std::int64_t excess = 0;
			for (auto c : cols) {
				const std::int64_t k = std::popcount(c & rows);
				if (k > static_cast<std::int64_t>(a))
					excess += k - a;
			}
			if (excess > (usize - static_cast<std::int64_t>(a)) * b)
				return false;
		}
		if (rows == full)
			break;
	}
	return true;
}

bool regular_brute(std::span<const std::uint32_t> cols, std::uint32_t u, std::uint32_t a, std::uint32_t b)
{
	const auto v = static_cast<std::uint32_t>(cols.size());
	if (u + v > kMaxBruteCells)
		throw Error(ErrorKind::ResourceGuard, "brute-force regularity limited to u + v <= 30");
	const std::uint64_t nv = std::uint64_t{1} << v;
	std::vector<std::int64_t> inside(v);
	for (std::uint32_t rows = 0; rows < (1u << u); ++rows) {
		const std::int64_t usize = std::popcount(rows);
		for (std::uint32_t j = 0; j < v; ++j)
			inside[j] = std::popcount(cols[j] & rows);
		// Walk all column sets in Gray-code order.
		std::int64_t count = 0, vsize = 0;
		std::uint64_t gray = 0;
		for (std::uint64_t step = 0; step < nv; ++step) {
			if (step > 0) {
				const auto bit = static_cast<std::uint32_t>(std::countr_zero(step));
				gray ^= std::uint64_t{1} << bit;
				if (gray & (std::uint64_t{1} << bit)) {
					count += inside[bit];
					++vsize;
				} else {
					count -= inside[bit];
					--vsize;
				}
			}
			if (usize < a && vsize < b)
				continue;
			if (count > vsize * a + usize * b - static_cast<std::int64_t>(a) * b)
				return false;
		}
	}
	return true;
}

// Row-major mask of the given column codes; bit (u-1-r) of a code is row r.
std::vector<std::uint8_t> mask_from_codes(std::span<const std::uint32_t> codes, std::uint32_t u)
{
	const auto v = static_cast<std::uint32_t>(codes.size());
	std::vector<std::uint8_t> m(static_cast<std::size_t>(u) * v);
	for (std::uint32_t r = 0; r < u; ++r)
		for (std::uint32_t c = 0; c < v; ++c)
			m[r * v + c] = (codes[c] >> (u - 1 - r)) & 1u;
	return m;
}

PatternType canonical_from_columns(std::span<const std::uint32_t> cols, std::uint32_t u)
{
	if (u > kMaxCanonicalRows)
		throw Error(ErrorKind::ResourceGuard, "canonical form limited to 10 rows");
	const auto v = static_cast<std::uint32_t>(cols.size());
	std::vector<std::uint32_t> perm(u);
	std::iota(perm.begin(), perm.end(), 0);
	std::vector<std::uint32_t> codes(v);
	PatternType best{u, v, {}};
	// For a fixed row order, sorting columns ascending (row 0 as the most
	// significant bit) gives the lexicographically least row-major mask.
	do {
		for (std::uint32_t c = 0; c < v; ++c) {
			std::uint32_t code = 0;
			for (std::uint32_t r = 0; r < u; ++r)
				code = (code << 1) | ((cols[c] >> perm[r]) & 1u);
			codes[c] = code;
		}
		std::sort(codes.begin(), codes.end());
		auto m = mask_from_codes(codes, u);
		if (best.mask.empty() || m < best.mask)
			best.mask = std::move(m);
	} while (std::next_permutation(perm.begin(), perm.end()));
	return best;
}

} // namespace

void Topology::validate() const
{
	if (h != 0)
		throw Error(ErrorKind::UnsupportedGlobalParities, "global parities (h > 0) are not supported");
	if (m == 0 || n == 0)
		throw Error(ErrorKind::InvalidArgument, "grid must be non-empty");
	if (a > m - 1 || b > n - 1)
		throw Error(ErrorKind::InvalidArgument, "require a <= m-1 and b <= n-1");
}

ErasurePattern::ErasurePattern(std::vector<Cell> cells) : cells_(std::move(cells))
{
	std::sort(cells_.begin(), cells_.end());
	cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool ErasurePattern::contains(Cell c) const
{
	return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<std::uint32_t> ErasurePattern::rows_used() const
{
	std::vector<std::uint32_t> r;
	for (const auto& c : cells_)
		if (r.empty() || r.back() != c.row)
			r.push_back(c.row);
	return r;
}

std::vector<std::uint32_t> ErasurePattern::cols_used() const
{
	std::vector<std::uint32_t> c;
	for (const auto& cell : cells_)
		c.push_back(cell.col);
	std::sort(c.begin(), c.end());
	c.erase(std::unique(c.begin(), c.end()), c.end());
	return c;
}

void ErasurePattern::check_bounds(std::uint32_t m, std::uint32_t n) const
{
	for (const auto& c : cells_)
		if (c.row >= m || c.col >= n)
			throw Error(ErrorKind::InvalidArgument, "cell (" + std::to_string(c.row) + ", " + std::to_string(c.col) +
				") outside the " + std::to_string(m) + "x" + std::to_string(n) + " grid");
}

std::size_t PatternType::weight() const
{
	return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
}

std::vector<std::string> PatternType::to_strings() const
{
	std::vector<std::string> rows(u);
	for (std::uint32_t r = 0; r < u; ++r)
		for (std::uint32_t c = 0; c < v; ++c)
			rows[r].push_back(at(r, c) ? '1' : '0');
	return rows;
}

PatternType PatternType::from_strings(const std::vector<std::string>& rows)
{
	PatternType t;
	t.u = static_cast<std::uint32_t>(rows.size());
	t.v = rows.empty() ? 0 : static_cast<std::uint32_t>(rows[0].size());
	for (const auto& r : rows) {
		if (r.size() != t.v)
			throw Error(ErrorKind::ParseError, "ragged pattern mask");
		for (char ch : r) {
			if (ch != '0' && ch != '1')
				throw Error(ErrorKind::ParseError, "mask characters must be 0 or 1");
			t.mask.push_back(ch == '1');
		}
	}
	return t;
}

ErasurePattern PatternType::to_pattern() const
{
	std::vector<Cell> cells;
	for (std::uint32_t r = 0; r < u; ++r)
		for (std::uint32_t c = 0; c < v; ++c)
			if (at(r, c))
				cells.push_back({r, c});
	return ErasurePattern(std::move(cells));
}

bool is_irreducible(const Topology& t, const ErasurePattern& e)
{
	t.validate();
	e.check_bounds(t.m, t.n);
	std::map<std::uint32_t, std::uint32_t> per_row, per_col;
	for (const auto& c : e.cells()) {
		++per_row[c.row];
		++per_col[c.col];
	}
	for (const auto& c : e.cells())
		if (per_col[c.col] < t.a + 1 || per_row[c.row] < t.b + 1)
			return false;
	return true;
}

bool is_regular_masks(std::span<const std::uint32_t> col_masks, std::uint32_t rows, std::uint32_t a,
	std::uint32_t b, RegularityMode mode)
{
	if (rows > kMaxCompressedRows)
		throw Error(ErrorKind::ResourceGuard, "regularity limited to 24 rows");
	return mode == RegularityMode::Fast ? regular_fast(col_masks, rows, a, b) : regular_brute(col_masks, rows, a, b);
}

bool is_regular(const Topology& t, const ErasurePattern& e, RegularityMode mode)
{
	t.validate();
	e.check_bounds(t.m, t.n);
	if (e.empty())
		return true;
	const auto c = compress(e);
	return is_regular_masks(c.cols, c.u, t.a, t.b, mode);
}

PatternType canonical_type(const ErasurePattern& e)
{
	if (e.empty())
		throw Error(ErrorKind::EmptyPattern, "an empty pattern has no type");
	const auto c = compress(e);
	return canonical_from_columns(c.cols, c.u);
}

std::vector<PatternType> enumerate_types(std::uint32_t m, std::uint32_t b, const EnumerateOptions& opts)
{
	if (m < 1 || b < 1)
		throw Error(ErrorKind::InvalidArgument, "enumerate_types needs m >= 1 and b >= 1");
	std::set<PatternType> found;
	std::uint64_t examined = 0;
	for (std::uint32_t u = 1; u <= m; ++u) {
		if (u > kMaxCanonicalRows)
			throw Error(ErrorKind::ResourceGuard, "type enumeration limited to 10 rows");
		// Regular irreducible patterns satisfy u + b <= v <= bu - b.
		const std::int64_t vmin = u + b;
		const std::int64_t vmax = static_cast<std::int64_t>(b) * u - b;
		if (vmin > vmax)
			continue;
		const std::uint32_t max_weight = 2 * b * (u - 1);
		// Admissible columns: at least a + 1 = 2 erasures.
		std::vector<std::uint32_t> kinds;
		for (std::uint32_t s = 1; s < (1u << u); ++s)
			if (std::popcount(s) >= 2)
				kinds.push_back(s);
		for (auto v = static_cast<std::uint32_t>(vmin); v <= vmax; ++v) {
			std::vector<std::uint32_t> cols(v);
			std::vector<std::uint32_t> row_sum(u, 0);
			std::function<void(std::uint32_t, std::size_t, std::uint32_t)> place =
				[&](std::uint32_t depth, std::size_t first_kind, std::uint32_t weight) {
					const std::uint32_t remaining = v - depth;
					if (remaining == 0) {
						if (++examined > opts.max_candidates)
							throw Error(ErrorKind::ResourceGuard, "type enumeration exceeded the candidate cap");
						for (auto s : row_sum)
							if (s < b + 1)
								return;
						if (!regular_fast(cols, u, 1, b))
							return;
						found.insert(canonical_from_columns(cols, u));
						return;
					}
					if (weight + 2 * remaining > max_weight)
						return;
					for (auto s : row_sum)
						if (s + remaining < b + 1)
							return;
					for (std::size_t k = first_kind; k < kinds.size(); ++k) {
						const std::uint32_t s = kinds[k];
						const auto w = static_cast<std::uint32_t>(std::popcount(s));
						if (weight + w + 2 * (remaining - 1) > max_weight)
							continue;
						cols[depth] = s;
						for (std::uint32_t r = 0; r < u; ++r)
							row_sum[r] += (s >> r) & 1u;
						place(depth + 1, k, weight + w);
						for (std::uint32_t r = 0; r < u; ++r)
							row_sum[r] -= (s >> r) & 1u;
					}
				};
			place(0, 0, 0);
		}
	}
	return {found.begin(), found.end()};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
	if (k > n)
		return 0;
	k = std::min(k, n - k);
	unsigned __int128 r = 1;
	for (std::uint64_t i = 1; i <= k; ++i) {
		r = r * (n - k + i) / i;
		if (r > ~std::uint64_t{0})
			return ~std::uint64_t{0};
	}
	return static_cast<std::uint64_t>(r);
}

TypeEmbedder::TypeEmbedder(const PatternType& pt, std::uint32_t m, std::uint32_t n) : m_(m), n_(n), v_(pt.v)
{
	if (pt.u == 0 || pt.v == 0)
		throw Error(ErrorKind::EmptyPattern, "cannot embed an empty type");
	if (pt.u > m || pt.v > n)
		throw Error(ErrorKind::InvalidArgument, "type " + std::to_string(pt.u) + "x" + std::to_string(pt.v) +
			" does not fit a " + std::to_string(m) + "x" + std::to_string(n) + " grid");
	if (m > 32)
		throw Error(ErrorKind::ResourceGuard, "embedding limited to 32 grid rows");
	// Injective maps of type rows onto grid rows; automorphisms collapse in
	// the set of sorted column-mask multisets.
	std::set<std::vector<std::uint32_t>> seen;
	std::vector<std::uint32_t> grid_rows(m);
	std::iota(grid_rows.begin(), grid_rows.end(), 0);
	std::vector<std::uint32_t> image(pt.u);
	std::vector<bool> used(m, false);
	std::function<void(std::uint32_t)> assign = [&](std::uint32_t r) {
		if (r == pt.u) {
			std::vector<std::uint32_t> ms(pt.v, 0);
			for (std::uint32_t c = 0; c < pt.v; ++c)
				for (std::uint32_t rr = 0; rr < pt.u; ++rr)
					if (pt.at(rr, c))
						ms[c] |= 1u << image[rr];
			std::sort(ms.begin(), ms.end());
			seen.insert(std::move(ms));
			return;
		}
		for (std::uint32_t g = 0; g < m; ++g) {
			if (used[g])
				continue;
			used[g] = true;
			image[r] = g;
			assign(r + 1);
			used[g] = false;
		}
	};
	assign(0);
	multisets_.assign(seen.begin(), seen.end());
	for (const auto& ms : multisets_) {
		// Distinct arrangements of the multiset: v! / prod(multiplicity!).
		std::uint64_t arrangements = 1;
		std::uint32_t placed = 0;
		for (std::size_t i = 0; i < ms.size();) {
			std::size_t j = i;
			while (j < ms.size() && ms[j] == ms[i])
				++j;
			for (std::size_t k = 0; k < j - i; ++k) {
				++placed;
				arrangements = arrangements * placed / (k + 1);
			}
			i = j;
		}
		per_subset_ += arrangements;
	}
	subsets_ = binomial(n, pt.v);
}

bool TypeEmbedder::visit_subset(std::span<const std::uint32_t> cols, const Visitor& visit) const
{
	std::vector<std::uint32_t> masks;
	for (const auto& ms : multisets_) {
		masks = ms;
		do {
			if (!visit(cols, masks))
				return false;
		} while (std::next_permutation(masks.begin(), masks.end()));
	}
	return true;
}

bool TypeEmbedder::visit_all(const Visitor& visit) const
{
	std::vector<std::uint32_t> cols(v_);
	std::iota(cols.begin(), cols.end(), 0);
	for (;;) {
		if (!visit_subset(cols, visit))
			return false;
		std::size_t i = v_;
		while (i > 0 && cols[i - 1] == n_ - v_ + i - 1)
			--i;
		if (i == 0)
			return true;
		++cols[i - 1];
		for (std::size_t j = i; j < v_; ++j)
			cols[j] = cols[j - 1] + 1;
	}
}

ErasurePattern TypeEmbedder::to_pattern(std::span<const std::uint32_t> cols, std::span<const std::uint32_t> masks)
{
	std::vector<Cell> cells;
	for (std::size_t j = 0; j < cols.size(); ++j)
		for (std::uint32_t r = 0; r < 32; ++r)
			if (masks[j] & (1u << r))
				cells.push_back({r, cols[j]});
	return ErasurePattern(std::move(cells));
}

std::vector<ErasurePattern> instantiate_type(const PatternType& pt, std::uint32_t m, std::uint32_t n)
{
	TypeEmbedder emb(pt, m, n);
	std::vector<ErasurePattern> out;
	emb.visit_all([&](auto cols, auto masks) {
		out.push_back(TypeEmbedder::to_pattern(cols, masks));
		return true;
	});
	return out;
}

} // namespace mrgrid
