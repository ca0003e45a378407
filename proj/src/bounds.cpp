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

#include "mrgrid/bounds.hpp"

#include "mrgrid/error.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

namespace mrgrid {

namespace {

BigInt isqrt(const BigInt& x)
{
	return boost::multiprecision::sqrt(x);
}

BigInt big(std::uint64_t x)
{
	return BigInt(x);
}

} // namespace

double Radical::approx() const
{
	return std::sqrt(radicand.convert_to<double>()) / divisor.convert_to<double>() + offset.convert_to<double>();
}

bool Radical::less_than(const BigInt& x) const
{
	// sqrt(R)/d + o < x  <=>  sqrt(R) < d(x - o)  <=>  R < (d(x - o))^2 with d(x - o) > 0
	BigInt rhs = divisor * (x - offset);
	return rhs > 0 && radicand < rhs * rhs;
}

bool Radical::greater_than(const BigInt& x) const
{
	// x < sqrt(R)/d + o  <=>  d(x - o) < sqrt(R)
	BigInt lhs = divisor * (x - offset);
	return lhs < 0 || lhs * lhs < radicand;
}

BigInt big_binomial(std::uint64_t n, std::uint64_t k)
{
	if (k > n)
		return 0;
	k = std::min(k, n - k);
	BigInt r = 1;
	for (std::uint64_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

BigInt binomial_sum(std::uint64_t n, std::uint64_t k)
{
	BigInt s = 0;
	BigInt term = 1;
	for (std::uint64_t i = 0; i <= std::min(n, k); ++i) {
		s += term;
		term = term * (n - i) / (i + 1);
	}
	return s;
}

BigInt gopalan_general(std::uint64_t m, std::uint64_t b, std::uint64_t n)
{
	if (m == 0 || n == 0 || b == 0)
		throw Error(ErrorKind::InvalidArgument, "m, b, n must be positive");
	const std::uint64_t k = n + b * m - b;
	return big(k) * binomial_sum(m * n, k);
}

BigInt kmg_constant(std::uint64_t m, std::uint64_t b)
{
	BigInt fact = 1;
	for (std::uint64_t i = 2; i <= m + 1; ++i)
		fact *= i;
	return fact * type_count(m, b);
}

BigInt kmg_poly(std::uint64_t m, std::uint64_t b, std::uint64_t n)
{
	if (m == 0 || n == 0 || b == 0)
		throw Error(ErrorKind::InvalidArgument, "m, b, n must be positive");
	return kmg_constant(m, b) * boost::multiprecision::pow(big(n), static_cast<unsigned>(2 * b * (m - 1))) +
		boost::multiprecision::pow(big(n), static_cast<unsigned>(b - 1));
}

BigInt type_count(std::uint64_t m, std::uint64_t b)
{
	if (m == 0)
		throw Error(ErrorKind::InvalidArgument, "m must be positive");
	return binomial_sum(m * b * (m - 1), 2 * b * (m - 1));
}

BigRational t4_lower_threshold(std::uint64_t n)
{
	BigInt d = big(n) - 3;
	return BigRational(d * d, 4) + 2;
}

Radical t3_lower_threshold(std::uint64_t n)
{
	BigInt nn = big(n);
	return Radical{nn * nn - 11 * nn + 34, 2, 0};
}

Radical sidon_max(std::uint64_t N)
{
	return Radical{4 * big(N), 1, 1};
}

bool below_t4_threshold(std::uint64_t q, std::uint64_t n)
{
	return BigRational(big(q)) < t4_lower_threshold(n);
}

bool below_t3_threshold(std::uint64_t q, std::uint64_t n)
{
	return t3_lower_threshold(n).greater_than(big(q));
}

bool exceeds_sidon_max(std::uint64_t size, std::uint64_t N)
{
	return sidon_max(N).less_than(big(size));
}

double hypergraph_alpha(double nv, double delta_r, double r, double c_r)
{
	if (!(nv > 0 && delta_r > 0 && r > 0))
		throw Error(ErrorKind::InvalidArgument, "nv, delta and r must be positive");
	const double x = nv / delta_r;
	return c_r * std::pow(x * std::log(x), 1.0 / r);
}

double t4_upper(std::uint64_t n, double c1)
{
	if (n < 2)
		throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
	return c1 * std::pow(static_cast<double>(n), 5) / std::log(static_cast<double>(n));
}

double t3_upper(std::uint64_t n, double c2)
{
	return t4_upper(n, c2);
}

std::vector<std::string_view> bound_names()
{
	return {"gopalan_general", "kmg_poly", "t4_upper", "t3_upper", "t4_lower_threshold", "t3_lower_threshold",
		"sidon_max", "type_count", "hypergraph_alpha"};
}

std::string to_string(const BigRational& r)
{
	const BigInt num = boost::multiprecision::numerator(r);
	const BigInt den = boost::multiprecision::denominator(r);
	return den == 1 ? num.str() : num.str() + "/" + den.str();
}

namespace {

class Params {
public:
	Params(const std::map<std::string, std::string>& p, BoundReport& rep) : p_(p), rep_(rep) {}

	std::uint64_t integer(const std::string& key)
	{
		auto it = p_.find(key);
		if (it == p_.end())
			throw Error(ErrorKind::InvalidArgument, "missing parameter " + key);
		const std::string& s = it->second;
		char* end = nullptr;
		errno = 0;
		unsigned long long v = std::strtoull(s.c_str(), &end, 10);
		if (s.empty() || s[0] == '-' || end != s.c_str() + s.size() || errno != 0)
			throw Error(ErrorKind::InvalidArgument, "parameter " + key + " is not a non-negative integer: " + s);
		rep_.params.emplace_back(key, s);
		return v;
	}

	double constant(const std::string& key)
	{
		auto it = p_.find(key);
		if (it == p_.end())
			throw Error(ErrorKind::MissingConstant, "constant " + key + " must be supplied");
		const std::string& s = it->second;
		char* end = nullptr;
		double v = std::strtod(s.c_str(), &end);
		if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
			throw Error(ErrorKind::InvalidArgument, "constant " + key + " is not a number: " + s);
		rep_.params.emplace_back(key, s);
		return v;
	}

private:
	const std::map<std::string, std::string>& p_;
	BoundReport& rep_;
};

} // namespace

BoundReport bound(std::string_view name, const std::map<std::string, std::string>& params)
{
	BoundReport rep;
	rep.name = std::string(name);
	Params p(params, rep);
	if (name == "gopalan_general") {
		auto m = p.integer("m"), b = p.integer("b"), n = p.integer("n");
		BigInt v = gopalan_general(m, b, n);
		rep.value = v;
		rep.approx = v.convert_to<double>();
		rep.applicability = "MR instantiation exists for q above this value, any topology T_{m x n}(1, b, 0)";
	} else if (name == "kmg_poly") {
		auto m = p.integer("m"), b = p.integer("b"), n = p.integer("n");
		BigInt v = kmg_poly(m, b, n);
		rep.value = v;
		rep.approx = v.convert_to<double>();
		rep.applicability = "MR code for T_{m x n}(1, b, 0) exists for q above this value";
	} else if (name == "type_count") {
		auto m = p.integer("m"), b = p.integer("b");
		BigInt v = type_count(m, b);
		rep.value = v;
		rep.approx = v.convert_to<double>();
		rep.applicability = "upper bound on the number of regular irreducible pattern types of T_{m x n}(1, b, 0)";
	} else if (name == "t4_lower_threshold") {
		auto n = p.integer("n");
		BigRational v = t4_lower_threshold(n);
		rep.value = v;
		rep.approx = v.convert_to<double>();
		rep.applicability = "no MR code for T_{4 x n}(1, 2, 0) when q is below this value";
	} else if (name == "t3_lower_threshold") {
		auto n = p.integer("n");
		Radical v = t3_lower_threshold(n);
		rep.approx = v.approx();
		rep.value = std::move(v);
		rep.applicability = "no MR code for T_{3 x n}(1, 3, 0) when q is below this value";
	} else if (name == "sidon_max") {
		auto N = p.integer("N");
		Radical v = sidon_max(N);
		rep.approx = v.approx();
		rep.value = std::move(v);
		rep.applicability = "every 2-Sidon subset of Z_N has at most this many elements";
	} else if (name == "hypergraph_alpha") {
		auto nv = p.integer("nv"), d = p.integer("delta"), r = p.integer("r");
		double c = p.constant("c_r");
		double v = hypergraph_alpha(static_cast<double>(nv), static_cast<double>(d), static_cast<double>(r), c);
		rep.value = v;
		rep.approx = v;
		rep.applicability = "independence number lower bound for an (r+1)-graph with max r-degree delta < nv/(log nv)^{3r^2}";
	} else if (name == "t4_upper" || name == "t3_upper") {
		auto n = p.integer("n");
		double c = p.constant("C");
		double v = name == "t4_upper" ? t4_upper(n, c) : t3_upper(n, c);
		rep.value = v;
		rep.approx = v;
		rep.applicability = name == "t4_upper" ? "MR code for T_{4 x n}(1, 2, 0) exists for q above this value"
											   : "MR code for T_{3 x n}(1, 3, 0) exists for q above this value";
	} else {
		throw Error(ErrorKind::InvalidArgument, "unknown bound " + std::string(name));
	}
	return rep;
}

} // namespace mrgrid
