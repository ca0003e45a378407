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

#include "mrgrid/mr.hpp"

#include "mrgrid/error.hpp"
#include "mrgrid/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

namespace mrgrid {

std::string_view verdict_name(Verdict v)
{
	switch (v) {
	case Verdict::Certified: return "certified";
	case Verdict::FailedMds: return "failed_mds";
	case Verdict::FailedPattern: return "failed_pattern";
	}
	return "unknown";
}

namespace {

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n)
{
	const std::size_t k = c.size();
	for (std::size_t i = k; i-- > 0;) {
		if (c[i] < n - k + i) {
			++c[i];
			for (std::size_t j = i + 1; j < k; ++j)
				c[j] = c[j - 1] + 1;
			return true;
		}
	}
	return false;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
	std::uint64_t s = a + b;
	return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// Uniform draw in [0, bound) by rejection, so results do not depend on the
// standard library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
{
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
	for (;;) {
		std::uint64_t r = rng();
		if (r < limit)
			return r % bound;
	}
}

} // namespace

CertReport certify_mr(const TensorCode& c, const CertifyOptions& opts)
{
	c.validate();
	const Topology& t = c.topology;
	if (t.a != 1)
		throw Error(ErrorKind::InvalidArgument, "certification needs a = 1");
	CertReport rep;
	for (std::size_t j = 0; j < c.h_col.cols(); ++j) {
		if (c.h_col(0, j) == 0) {
			rep.verdict = Verdict::FailedMds;
			return rep;
		}
	}
	if (!every_w_columns_independent(c.h_row, t.b)) {
		rep.verdict = Verdict::FailedMds;
		return rep;
	}

	std::vector<TypeEmbedder> emb;
	for (const auto& pt : enumerate_types(t.m, t.b))
		if (pt.u <= t.m && pt.v <= t.n)
			emb.emplace_back(pt, t.m, t.n);
	std::vector<std::uint64_t> offset;
	std::uint64_t total = 0;
	for (const auto& e : emb) {
		offset.push_back(total);
		total = sat_add(total, e.total());
	}
	if (total > opts.max_instances)
		throw Error(ErrorKind::ResourceGuard, std::to_string(total) + " pattern instances exceed the cap of " +
			std::to_string(opts.max_instances));

	// Work units are (type, column subset), handed out in order.
	std::mutex mu;
	std::size_t cur_type = 0;
	std::uint64_t cur_index = 0;
	std::vector<std::uint32_t> cur_cols;
	bool exhausted = emb.empty();
	if (!exhausted) {
		cur_cols.resize(emb[0].width());
		std::iota(cur_cols.begin(), cur_cols.end(), 0u);
	}
	constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
	std::atomic<std::uint64_t> best{kNone};
	ErasurePattern best_pattern;
	std::size_t best_rank = 0;

	auto worker = [&](unsigned) {
		RestrictedRanker ranker(c);
		std::vector<std::uint32_t> cols;
		for (;;) {
			std::size_t type;
			std::uint64_t base;
			{
				std::lock_guard lock(mu);
				if (exhausted)
					return;
				type = cur_type;
				base = offset[type] + cur_index * emb[type].per_column_subset();
				if (base >= best.load())
					return;
				cols = cur_cols;
				++cur_index;
				if (!next_combination(cur_cols, t.n)) {
					if (++cur_type == emb.size()) {
						exhausted = true;
					} else {
						cur_index = 0;
						cur_cols.assign(emb[cur_type].width(), 0);
						std::iota(cur_cols.begin(), cur_cols.end(), 0u);
					}
				}
			}
			std::uint64_t pos = 0;
			emb[type].visit_subset(cols, [&](std::span<const std::uint32_t> cs, std::span<const std::uint32_t> masks) {
				const std::uint64_t ord = base + pos++;
				if (ord >= best.load(std::memory_order_relaxed))
					return false;
				std::size_t size = 0;
				for (auto m : masks)
					size += static_cast<std::size_t>(std::popcount(m));
				const std::size_t r = ranker.rank(cs, masks);
				if (r == size)
					return true;
				std::lock_guard lock(mu);
				if (ord < best.load()) {
					best.store(ord);
					best_pattern = TypeEmbedder::to_pattern(cs, masks);
					best_rank = r;
				}
				return false;
			});
		}
	};
	run_workers(resolve_threads(opts.threads), worker);

	if (best.load() == kNone) {
		rep.patterns_checked = total;
		return rep;
	}
	rep.verdict = Verdict::FailedPattern;
	rep.counterexample = std::move(best_pattern);
	rep.rank_found = best_rank;
	rep.patterns_checked = best.load() + 1;
	return rep;
}

namespace {

TensorCode with_all_ones(std::uint32_t m, std::uint32_t n, std::uint32_t b, Matrix h_row)
{
	FieldPtr f = h_row.field();
	return TensorCode::make(Topology{m, n, 1, b, 0}, all_ones_row(f, m), std::move(h_row));
}

bool certified(const TensorCode& c, const CertifyOptions& opts)
{
	return certify_mr(c, opts).verdict == Verdict::Certified;
}

SearchOutcome search_greedy(std::uint32_t m, std::uint32_t b, std::uint32_t n, const FieldPtr& fp,
	const SearchOptions& opts)
{
	const Field& f = *fp;
	const TopologyKind kind = m == 4 ? TopologyKind::T4_12 : TopologyKind::T3_13;
	const std::uint32_t q = f.order();
	std::vector<Element> order(q);
	std::iota(order.begin(), order.end(), 0u);
	if (opts.seed != 0) {
		std::mt19937_64 rng(opts.seed);
		for (std::size_t i = order.size(); i > 1; --i)
			std::swap(order[i - 1], order[bounded(rng, i)]);
	}

	SearchOutcome out;
	std::vector<Element> acc;
	for (Element x : order) {
		if (acc.size() == n)
			break;
		++out.trials;
		bool ok = true;
		if (acc.size() >= 5) {
			std::vector<std::uint32_t> s(5);
			std::iota(s.begin(), s.end(), 0u);
			do {
				std::array<Element, 6> v{acc[s[0]], acc[s[1]], acc[s[2]], acc[s[3]], acc[s[4]], x};
				if (rank_condition_vanishes(f, kind, v)) {
					ok = false;
					break;
				}
			} while (next_combination(s, static_cast<std::uint32_t>(acc.size())));
		}
		if (ok)
			acc.push_back(x);
	}
	const bool infinity = acc.size() + 1 == n && opts.allow_infinity;
	if (acc.size() < n && !infinity)
		return out;

	Matrix h(fp, b, n);
	for (std::size_t j = 0; j < acc.size(); ++j) {
		Element p = 1;
		for (std::uint32_t k = 0; k < b; ++k) {
			h(k, j) = p;
			p = f.mul(p, acc[j]);
		}
	}
	if (infinity)
		h(b - 1, n - 1) = 1;
	TensorCode c = with_all_ones(m, n, b, std::move(h));
	if (certified(c, opts.certify))
		out.code = std::move(c);
	return out;
}

SearchOutcome search_random(std::uint32_t m, std::uint32_t b, std::uint32_t n, const FieldPtr& fp,
	const SearchOptions& opts)
{
	std::mt19937_64 rng(opts.seed);
	SearchOutcome out;
	const std::uint32_t q = fp->order();
	for (std::uint64_t trial = 0; trial < opts.random_trials; ++trial) {
		++out.trials;
		Matrix h(fp, b, n);
		for (std::uint32_t r = 0; r < b; ++r)
			for (std::uint32_t j = 0; j < n; ++j)
				h(r, j) = static_cast<Element>(bounded(rng, q));
		if (rank(h) < b)
			continue;
		TensorCode c = with_all_ones(m, n, b, std::move(h));
		if (certified(c, opts.certify)) {
			out.code = std::move(c);
			break;
		}
	}
	return out;
}

} // namespace

SearchOutcome search_mr(std::uint32_t m, std::uint32_t b, std::uint32_t n, const FieldSpec& spec,
	const SearchOptions& opts)
{
	Topology{m, n, 1, b, 0}.validate();
	FieldPtr fp = Field::make(spec);
	if (opts.strategy == SearchStrategy::Random)
		return search_random(m, b, n, fp, opts);
	if (!((m == 4 && b == 2) || (m == 3 && b == 3)))
		throw Error(ErrorKind::InvalidArgument, "greedy search covers (m, b) = (4, 2) and (3, 3) only");
	return search_greedy(m, b, n, fp, opts);
}

SweepResult search_sweep(std::uint32_t m, std::uint32_t b, std::uint32_t n, std::uint32_t q_min,
	std::uint32_t q_max, const SearchOptions& opts)
{
	if (q_max > kMaxFieldOrder)
		throw Error(ErrorKind::InvalidArgument, "q_max above the supported field order");
	SweepResult res;
	for (std::uint32_t q = std::max<std::uint32_t>(q_min, 2); q <= q_max; ++q) {
		if (!is_prime(q) && !std::has_single_bit(q))
			continue;
		SearchOutcome o = search_mr(m, b, n, *FieldSpec::for_order(q), opts);
		res.progress.push_back({q, o.trials, o.code.has_value()});
		if (o.code) {
			res.code = std::move(o.code);
			break;
		}
	}
	return res;
}

Element f_poly(const Field& f, TopologyKind kind, std::span<const Element, 6> x)
{
	auto d = [&](int i, int j) { return f.sub(x[i - 1], x[j - 1]); };
	auto prod = [&](std::initializer_list<Element> v) {
		Element r = 1;
		for (Element e : v)
			r = f.mul(r, e);
		return r;
	};
	if (kind == TopologyKind::T4_12)
		return f.sub(prod({d(1, 4), d(2, 6), d(3, 5)}), prod({d(2, 4), d(1, 5), d(3, 6)}));
	Element inner = f.sub(prod({d(1, 6), d(2, 6), d(3, 5), d(4, 6)}), prod({d(1, 5), d(2, 5), d(3, 6), d(4, 6)}));
	return prod({d(1, 2), d(3, 4), inner});
}

FieldElement f_poly(TopologyKind kind, std::span<const FieldElement> x)
{
	if (x.size() != 6)
		throw Error(ErrorKind::InvalidArgument, "f takes six arguments");
	std::array<Element, 6> v{};
	for (std::size_t i = 0; i < 6; ++i) {
		if (!x[i].field || !x[0].field || !(x[i].field->spec() == x[0].field->spec()))
			throw Error(ErrorKind::MixedFields, "arguments from different fields");
		if (!x[i].field->contains(x[i].value))
			throw Error(ErrorKind::InvalidArgument, "value outside the field");
		v[i] = x[i].value;
	}
	return {x[0].field, f_poly(*x[0].field, kind, std::span<const Element, 6>(v))};
}

Element rank_condition(const Field& f, TopologyKind kind, std::span<const Element, 6> x)
{
	if (kind == TopologyKind::T4_12)
		return f_poly(f, kind, x);
	auto d = [&](int i, int j) { return f.sub(x[i - 1], x[j - 1]); };
	auto pair = [&](int i, int j) { return f.mul(x[i - 1], x[j - 1]); };
	auto s = [&](int i, int j) { return f.add(x[i - 1], x[j - 1]); };
	Element g = f.mul(pair(1, 2), f.sub(s(3, 4), s(5, 6)));
	g = f.add(g, f.mul(pair(3, 4), f.sub(s(5, 6), s(1, 2))));
	g = f.add(g, f.mul(pair(5, 6), f.sub(s(1, 2), s(3, 4))));
	return f.mul(f.mul(d(1, 2), d(3, 4)), f.mul(d(5, 6), g));
}

bool rank_condition_vanishes(const Field& f, TopologyKind kind, std::array<Element, 6> x)
{
	std::sort(x.begin(), x.end());
	do {
		if (rank_condition(f, kind, std::span<const Element, 6>(x)) == 0)
			return true;
	} while (std::next_permutation(x.begin(), x.end()));
	return false;
}

namespace {

using Triple = std::array<std::pair<std::uint64_t, std::uint64_t>, 3>;

// Calls visit on every equal-sum triple of pairs, in the order the third
// pair of each triple is reached. Stops when visit returns true.
template <class Visit>
bool for_each_sum_collision(const std::vector<std::uint64_t>& e, std::uint64_t mod, Visit&& visit)
{
	std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> buckets;
	for (std::size_t i = 0; i < e.size(); ++i) {
		for (std::size_t j = i + 1; j < e.size(); ++j) {
			auto& bk = buckets[(e[i] + e[j]) % mod];
			for (std::size_t x = 0; x < bk.size(); ++x)
				for (std::size_t y = x + 1; y < bk.size(); ++y)
					if (visit(Triple{bk[x], bk[y], {e[i], e[j]}}))
						return true;
			bk.push_back({e[i], e[j]});
		}
	}
	return false;
}

std::vector<std::uint64_t> normalize_exponents(std::span<const std::uint64_t> exps, std::uint64_t mod)
{
	if (mod == 0)
		throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
	std::vector<std::uint64_t> e;
	for (auto x : exps)
		e.push_back(x % mod);
	std::sort(e.begin(), e.end());
	e.erase(std::unique(e.begin(), e.end()), e.end());
	return e;
}

SidonWitness make_witness(const Triple& t, std::uint64_t mod)
{
	SidonWitness w;
	w.modulus = mod;
	w.pairing = t;
	w.sum = (t[0].first + t[0].second) % mod;
	w.exponents = {t[0].first, t[1].first, t[2].first, t[2].second, t[1].second, t[0].second};
	return w;
}

ErasurePattern layout(std::span<const std::uint32_t, 6> cols, std::initializer_list<std::initializer_list<int>> rows)
{
	std::vector<Cell> cells;
	std::uint32_t r = 0;
	for (const auto& row : rows) {
		for (int role : row)
			cells.push_back({r, cols[role - 1]});
		++r;
	}
	return ErasurePattern(std::move(cells));
}

std::size_t rank_all_ones(const Matrix& h_row, std::uint32_t m, const ErasurePattern& e)
{
	TensorCode c = with_all_ones(m, static_cast<std::uint32_t>(h_row.cols()), static_cast<std::uint32_t>(h_row.rows()), h_row);
	return restricted_rank(c, e);
}

} // namespace

std::optional<SidonWitness> find_sum_collision(std::span<const std::uint64_t> exponents, std::uint64_t modulus)
{
	auto e = normalize_exponents(exponents, modulus);
	std::optional<SidonWitness> w;
	for_each_sum_collision(e, modulus, [&](const Triple& t) {
		w = make_witness(t, modulus);
		return true;
	});
	return w;
}

ErasurePattern type_one_layout(std::span<const std::uint32_t, 6> cols)
{
	return layout(cols, {{1, 2, 3}, {1, 2, 4}, {3, 5, 6}, {4, 5, 6}});
}

ErasurePattern type_two_layout(std::span<const std::uint32_t, 6> cols)
{
	return layout(cols, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
}

ErasurePattern e0_layout(std::span<const std::uint32_t, 6> cols)
{
	return layout(cols, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
}

std::optional<AttackResult> attack_t4(const Matrix& h_row)
{
	if (h_row.rows() != 2)
		throw Error(ErrorKind::InvalidArgument, "attack_t4 needs a 2-row parity matrix");
	if (!every_w_columns_independent(h_row, 2))
		throw Error(ErrorKind::NotMds, "two columns of h_row are dependent");
	if (h_row.cols() < 6)
		return std::nullopt;
	const Field& f = h_row.gf();
	std::map<std::uint64_t, std::uint32_t> column_of;
	std::vector<std::uint64_t> exps;
	for (std::uint32_t j = 0; j < h_row.cols(); ++j) {
		if (h_row(0, j) == 0 || h_row(1, j) == 0)
			continue;
		std::uint64_t t = f.log(f.div(h_row(1, j), h_row(0, j)));
		column_of[t] = j;
		exps.push_back(t);
	}
	const std::uint64_t mod = f.order() - 1;
	std::sort(exps.begin(), exps.end());

	std::optional<AttackResult> res;
	for_each_sum_collision(exps, mod, [&](const Triple& t) {
		SidonWitness w = make_witness(t, mod);
		for (int k = 0; k < 6; ++k)
			w.columns[k] = column_of.at(w.exponents[k]);
		ErasurePattern e = type_two_layout(std::span<const std::uint32_t, 6>(w.columns));
		std::size_t r = rank_all_ones(h_row, 4, e);
		if (r == e.size())
			return false;
		res = AttackResult{std::move(e), r, w, std::nullopt};
		return true;
	});
	return res;
}

namespace {

template <class Visit>
bool for_each_difference_collision(const Field& f, std::span<const std::array<Element, 2>> g, Visit&& visit)
{
	using Pair = std::pair<std::uint32_t, std::uint32_t>;
	const std::uint64_t q = f.order();
	std::map<std::uint64_t, std::vector<Pair>> buckets;
	for (std::uint32_t i = 0; i < g.size(); ++i)
		for (std::uint32_t j = 0; j < g.size(); ++j)
			if (i != j)
				buckets[f.sub(g[j][0], g[i][0]) * q + f.sub(g[j][1], g[i][1])].push_back({i, j});
	auto disjoint = [](const Pair& x, const Pair& y) {
		return x.first != y.first && x.first != y.second && x.second != y.first && x.second != y.second;
	};
	for (const auto& [key, pairs] : buckets) {
		if (key == 0 || pairs.size() < 3)
			continue;
		DifferenceWitness w;
		w.difference = {static_cast<Element>(key / q), static_cast<Element>(key % q)};
		auto emit = [&](const Pair& a, const Pair& b, const Pair& c) {
			w.columns = {a.first, a.second, b.first, b.second, c.first, c.second};
			return visit(w);
		};
		std::vector<Pair> taken;
		for (const auto& p : pairs) {
			if (std::all_of(taken.begin(), taken.end(), [&](const Pair& t) { return disjoint(t, p); }))
				taken.push_back(p);
			if (taken.size() == 3)
				break;
		}
		if (taken.size() == 3 && emit(taken[0], taken[1], taken[2]))
			return true;
		for (std::size_t x = 0; x < pairs.size(); ++x)
			for (std::size_t y = x + 1; y < pairs.size(); ++y) {
				if (!disjoint(pairs[x], pairs[y]))
					continue;
				for (std::size_t z = y + 1; z < pairs.size(); ++z)
					if (disjoint(pairs[x], pairs[z]) && disjoint(pairs[y], pairs[z]) && emit(pairs[x], pairs[y], pairs[z]))
						return true;
			}
	}
	return false;
}

} // namespace

std::optional<DifferenceWitness> find_difference_collision(const Field& f, std::span<const std::array<Element, 2>> gammas)
{
	std::optional<DifferenceWitness> res;
	for_each_difference_collision(f, gammas, [&](const DifferenceWitness& w) {
		res = w;
		return true;
	});
	return res;
}

std::optional<AttackResult> attack_t3(const Matrix& h_row)
{
	if (h_row.rows() != 3)
		throw Error(ErrorKind::InvalidArgument, "attack_t3 needs a 3-row parity matrix");
	const std::uint32_t n = static_cast<std::uint32_t>(h_row.cols());
	std::vector<std::uint32_t> zero_first;
	for (std::uint32_t j = 0; j < n; ++j)
		if (h_row(0, j) == 0)
			zero_first.push_back(j);
	if (zero_first.size() >= 6) {
		DifferenceWitness w;
		w.zero_first_coordinate = true;
		std::copy_n(zero_first.begin(), 6, w.columns.begin());
		ErasurePattern e = e0_layout(std::span<const std::uint32_t, 6>(w.columns));
		std::size_t r = rank_all_ones(h_row, 3, e);
		return AttackResult{std::move(e), r, std::nullopt, w};
	}
	if (!every_w_columns_independent(h_row, 3))
		throw Error(ErrorKind::NotMds, "three columns of h_row are dependent");
	if (n < 6)
		return std::nullopt;

	const Field& f = h_row.gf();
	std::vector<std::uint32_t> idx;
	std::vector<std::array<Element, 2>> gamma;
	for (std::uint32_t j = 0; j < n; ++j) {
		if (h_row(0, j) == 0)
			continue;
		idx.push_back(j);
		gamma.push_back({f.div(h_row(1, j), h_row(0, j)), f.div(h_row(2, j), h_row(0, j))});
	}
	std::optional<AttackResult> res;
	for_each_difference_collision(f, gamma, [&](DifferenceWitness w) {
		for (auto& c : w.columns)
			c = idx[c];
		ErasurePattern e = e0_layout(std::span<const std::uint32_t, 6>(w.columns));
		std::size_t r = rank_all_ones(h_row, 3, e);
		if (r == e.size())
			return false;
		res = AttackResult{std::move(e), r, std::nullopt, w};
		return true;
	});
	return res;
}

} // namespace mrgrid
