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

#include "mrgrid/galois.hpp"

#include "mrgrid/error.hpp"

#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace mrgrid {

namespace {

// One primitive polynomial per degree; index = degree.
constexpr std::array<std::uint32_t, 21> kPrimitivePolys = {
	0, 0,
	0x7,      // x^2+x+1
	0xB,      // x^3+x+1
	0x13,     // x^4+x+1
	0x25,     // x^5+x^2+1
	0x43,     // x^6+x+1
	0x83,     // x^7+x+1
	0x11D,    // x^8+x^4+x^3+x^2+1
	0x211,    // x^9+x^4+1
	0x409,    // x^10+x^3+1
	0x805,    // x^11+x^2+1
	0x1053,   // x^12+x^6+x^4+x+1
	0x201B,   // x^13+x^4+x^3+x+1
	0x4443,   // x^14+x^10+x^6+x+1
	0x8003,   // x^15+x+1
	0x1100B,  // x^16+x^12+x^3+x+1
	0x20009,  // x^17+x^3+1
	0x40081,  // x^18+x^7+1
	0x80027,  // x^19+x^5+x^2+x+1
	0x100009, // x^20+x^3+1
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (std::uint64_t d = 2; d * d <= n; ++d) {
		if (n % d == 0) {
			out.push_back(d);
			while (n % d == 0)
				n /= d;
		}
	}
	if (n > 1)
		out.push_back(n);
	return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
	std::uint64_t r = 1 % m;
	a %= m;
	while (e) {
		if (e & 1)
			r = mulmod(r, a, m);
		a = mulmod(a, a, m);
		e >>= 1;
	}
	return r;
}

void validate(const FieldSpec& s)
{
	if (!is_prime(s.p))
		throw Error(ErrorKind::InvalidArgument, "characteristic " + std::to_string(s.p) + " is not prime");
	if (s.k < 1)
		throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
	if (s.k > 1 && s.p != 2)
		throw Error(ErrorKind::InvalidArgument, "extensions are supported over GF(2) only");
	if (s.k > 20 || (s.k == 1 && s.p > kMaxFieldOrder))
		throw Error(ErrorKind::InvalidArgument, "field order exceeds 2^20");
	if (s.k == 1 && s.modulus != 0)
		throw Error(ErrorKind::InvalidArgument, "prime fields take no modulus");
	if (s.k > 1 && (s.modulus >> s.k) != 1)
		throw Error(ErrorKind::InvalidArgument, "modulus degree does not match k");
}

} // namespace

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

std::uint32_t default_modulus(std::uint32_t k)
{
	if (k < 2 || k > 20)
		throw Error(ErrorKind::InvalidArgument, "no built-in modulus for degree " + std::to_string(k));
	return kPrimitivePolys[k];
}

std::uint32_t FieldSpec::order() const
{
	return k == 1 ? p : (1u << k);
}

std::string FieldSpec::to_string() const
{
	if (k == 1)
		return "GF(" + std::to_string(p) + ")";
	return "GF(2^" + std::to_string(k) + ")";
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
	FieldSpec s{p, 1, 0};
	validate(s);
	return s;
}

FieldSpec FieldSpec::binary(std::uint32_t k, std::uint32_t modulus)
{
	if (k == 1)
		return prime(2);
	FieldSpec s{2, k, modulus == 0 ? default_modulus(k) : modulus};
	validate(s);
	return s;
}

std::optional<FieldSpec> FieldSpec::for_order(std::uint64_t q)
{
	if (q < 2 || q > kMaxFieldOrder)
		return std::nullopt;
	if (is_prime(q))
		return prime(static_cast<std::uint32_t>(q));
	if (std::has_single_bit(q))
		return binary(static_cast<std::uint32_t>(std::countr_zero(q)));
	return std::nullopt;
}

Field::Field(const FieldSpec& spec) : spec_(spec), q_(spec.order())
{
	validate(spec_);
	const std::uint32_t n = q_ - 1;
	log_.assign(q_, 0);
	exp_.assign(2 * static_cast<std::size_t>(n), 0);

	if (spec_.k > 1) {
		// x generates the multiplicative group iff the modulus is primitive.
		Element b = 1;
		for (std::uint32_t i = 0; i < n; ++i) {
			if (i > 0 && b == 1)
				throw Error(ErrorKind::InvalidArgument, "modulus is not primitive");
			exp_[i] = b;
			log_[b] = i;
			b <<= 1;
			if (b & q_)
				b ^= spec_.modulus;
		}
		if (b != 1)
			throw Error(ErrorKind::InvalidArgument, "modulus is not primitive");
		primitive_ = 2;
	} else {
		const auto factors = prime_factors(n);
		Element g = 1;
		for (Element c = 1; c < q_; ++c) {
			bool ok = true;
			for (auto f : factors)
				if (powmod(c, n / f, q_) == 1) {
					ok = false;
					break;
				}
			if (ok) {
				g = c;
				break;
			}
		}
		primitive_ = g;
		std::uint64_t b = 1;
		for (std::uint32_t i = 0; i < n; ++i) {
			exp_[i] = static_cast<Element>(b);
			log_[b] = i;
			b = b * g % q_;
		}
	}
	for (std::uint32_t i = 0; i < n; ++i)
		exp_[n + i] = exp_[i];
}

FieldPtr Field::make(const FieldSpec& spec)
{
	static std::mutex mu;
	static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, FieldPtr> cache;
	std::lock_guard lock(mu);
	auto key = std::make_tuple(spec.p, spec.k, spec.modulus);
	auto it = cache.find(key);
	if (it != cache.end())
		return it->second;
	auto f = std::make_shared<const Field>(spec);
	cache.emplace(key, f);
	return f;
}

Element Field::inv(Element a) const
{
	if (a == 0)
		throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + spec_.to_string());
	const std::uint32_t n = q_ - 1;
	return exp_[(n - log_[a]) % n];
}

Element Field::pow(Element a, std::uint64_t e) const
{
	if (e == 0)
		return 1;
	if (a == 0)
		return 0;
	const std::uint64_t n = q_ - 1;
	return exp_[static_cast<std::size_t>((log_[a] * (e % n)) % n)];
}

Element Field::exp(std::uint64_t t) const
{
	return exp_[t % (q_ - 1)];
}

std::uint32_t Field::log(Element x) const
{
	if (x == 0)
		throw Error(ErrorKind::ZeroHasNoLog, "log of zero in " + spec_.to_string());
	return log_[x];
}

std::uint32_t Field::multiplicative_order(Element x) const
{
	const std::uint32_t n = q_ - 1;
	return n / std::gcd(log(x), n);
}

std::uint32_t Field::discrete_log(Element x, Element base) const
{
	const std::uint32_t lx = log(x);
	if (base == 0 || multiplicative_order(base) != q_ - 1)
		throw Error(ErrorKind::NotPrimitive, "base " + std::to_string(base) + " is not primitive");
	const std::int64_t n = q_ - 1;
	if (n == 1)
		return 0;
	// log_base(x) = log_g(x) / log_g(base) mod n.
	std::int64_t a = log_[base], m = n, x0 = 1, x1 = 0;
	while (m != 0) {
		std::int64_t t = a / m;
		std::tie(a, m) = std::make_pair(m, a - t * m);
		std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
	}
	const std::int64_t inv_lb = ((x0 % n) + n) % n;
	return static_cast<std::uint32_t>(static_cast<std::uint64_t>(lx) * inv_lb % n);
}

FieldElement field_op(const FieldPtr& field, FieldOp op, std::span<const FieldElement> operands,
	std::uint64_t exponent)
{
	const std::size_t arity = (op == FieldOp::Neg || op == FieldOp::Inv || op == FieldOp::Pow) ? 1 : 2;
	if (operands.size() != arity)
		throw Error(ErrorKind::InvalidArgument, "wrong operand count");
	for (const auto& o : operands) {
		if (!o.field || !(o.field->spec() == field->spec()))
			throw Error(ErrorKind::MixedFields, "operand is not an element of " + field->spec().to_string());
		if (!field->contains(o.value))
			throw Error(ErrorKind::InvalidArgument, "element out of range");
	}
	const Element a = operands[0].value;
	const Element b = arity == 2 ? operands[1].value : 0;
	Element r = 0;
	switch (op) {
	case FieldOp::Add: r = field->add(a, b); break;
	case FieldOp::Sub: r = field->sub(a, b); break;
	case FieldOp::Mul: r = field->mul(a, b); break;
	case FieldOp::Div: r = field->div(a, b); break;
	case FieldOp::Neg: r = field->neg(a); break;
	case FieldOp::Inv: r = field->inv(a); break;
	case FieldOp::Pow: r = field->pow(a, exponent); break;
	}
	return {field, r};
}

} // namespace mrgrid
