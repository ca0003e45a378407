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

#include "cli.hpp"

#include "mrgrid/bounds.hpp"
#include "mrgrid/error.hpp"
#include "mrgrid/json_io.hpp"
#include "mrgrid/mr.hpp"
#include "mrgrid/parallel.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace mrgrid::cli {

namespace {

enum class Format { Json, Csv, Text };

struct Globals {
	Format format = Format::Json;
	unsigned threads = 0;
	std::uint64_t seed = 0;
};

std::string cells_string(const ErasurePattern& e)
{
	std::string s;
	for (const auto& c : e.cells()) {
		if (!s.empty())
			s += ';';
		s += std::to_string(c.row) + ":" + std::to_string(c.col);
	}
	return s;
}

std::string join_mask(const PatternType& t, char sep)
{
	std::string s;
	for (const auto& r : t.to_strings()) {
		if (!s.empty())
			s += sep;
		s += r;
	}
	return s;
}

Json envelope(const char* command)
{
	return Json{{"schema", 1}, {"command", command}};
}

void emit_json(std::ostream& out, const Json& j)
{
	out << j.dump(2) << '\n';
}

// --- enumerate ---------------------------------------------------------

struct EnumerateArgs {
	std::uint32_t m = 0, b = 0;
	std::uint64_t max_candidates = EnumerateOptions{}.max_candidates;
};

int do_enumerate(const Globals& g, const EnumerateArgs& a, std::ostream& out)
{
	auto types = enumerate_types(a.m, a.b, EnumerateOptions{a.max_candidates});
	switch (g.format) {
	case Format::Json: {
		Json j = envelope("enumerate");
		j["m"] = a.m;
		j["b"] = a.b;
		Json list = Json::array();
		for (const auto& t : types)
			list.push_back(to_json(t));
		j["types"] = std::move(list);
		emit_json(out, j);
		break;
	}
	case Format::Csv:
		out << "u,v,weight,mask\n";
		for (const auto& t : types)
			out << t.u << ',' << t.v << ',' << t.weight() << ',' << join_mask(t, '/') << '\n';
		break;
	case Format::Text:
		out << types.size() << " type(s) for m=" << a.m << " b=" << a.b << '\n';
		for (const auto& t : types)
			out << '\n' << t.u << 'x' << t.v << ", " << t.weight() << " cells\n" << join_mask(t, '\n') << '\n';
		break;
	}
	return 0;
}

// --- certify -----------------------------------------------------------

struct CertifyArgs {
	std::string code;
	std::string pattern;
	std::uint64_t max_instances = CertifyOptions{}.max_instances;
};

int do_certify(const Globals& g, const CertifyArgs& a, std::ostream& out)
{
	TensorCode c = code_from_json(read_json_file(a.code));
	if (!a.pattern.empty()) {
		// Re-check of a single pattern.
		ErasurePattern e = pattern_from_json(read_json_file(a.pattern));
		e.check_bounds(c.topology.m, c.topology.n);
		const bool regular = is_regular(c.topology, e);
		const std::size_t r = restricted_rank(c, e);
		const bool failed = regular && r < e.size();
		const char* verdict = failed ? "failed_pattern" : "consistent";
		if (g.format == Format::Json) {
			Json j = envelope("certify");
			j["verdict"] = verdict;
			j["pattern"] = to_json(e);
			j["regular"] = regular;
			j["irreducible"] = is_irreducible(c.topology, e);
			j["rank_found"] = r;
			j["size"] = e.size();
			emit_json(out, j);
		} else if (g.format == Format::Csv) {
			out << "verdict,regular,rank_found,size\n"
				<< verdict << ',' << regular << ',' << r << ',' << e.size() << '\n';
		} else {
			out << verdict << ": regular=" << (regular ? "yes" : "no") << " rank " << r << " of " << e.size() << '\n';
		}
		return failed ? 1 : 0;
	}
	CertReport rep = certify_mr(c, CertifyOptions{a.max_instances, resolve_threads(g.threads)});
	switch (g.format) {
	case Format::Json: {
		Json j = envelope("certify");
		j.update(to_json(rep));
		emit_json(out, j);
		break;
	}
	case Format::Csv:
		out << "verdict,rank_found,patterns_checked,counterexample\n"
			<< verdict_name(rep.verdict) << ',' << (rep.rank_found ? std::to_string(*rep.rank_found) : "") << ','
			<< rep.patterns_checked << ',' << (rep.counterexample ? cells_string(*rep.counterexample) : "") << '\n';
		break;
	case Format::Text:
		out << verdict_name(rep.verdict) << " after " << rep.patterns_checked << " pattern(s)\n";
		if (rep.counterexample)
			out << "counterexample " << cells_string(*rep.counterexample) << " rank " << *rep.rank_found << " of "
				<< rep.counterexample->size() << '\n';
		break;
	}
	return rep.verdict == Verdict::Certified ? 0 : 1;
}

// --- search ------------------------------------------------------------

struct SearchArgs {
	std::uint32_t m = 0, b = 0, n = 0;
	std::uint32_t q_min = 2, q_max = 1024;
	std::string strategy = "greedy";
	std::uint64_t trials = SearchOptions{}.random_trials;
	std::uint64_t max_instances = CertifyOptions{}.max_instances;
	bool no_infinity = false;
};

int do_search(const Globals& g, const SearchArgs& a, std::ostream& out)
{
	SearchOptions opts;
	opts.strategy = a.strategy == "random" ? SearchStrategy::Random : SearchStrategy::GreedyIndependent;
	opts.seed = g.seed;
	opts.random_trials = a.trials;
	opts.allow_infinity = !a.no_infinity;
	opts.certify = CertifyOptions{a.max_instances, resolve_threads(g.threads)};
	SweepResult res = search_sweep(a.m, a.b, a.n, a.q_min, a.q_max, opts);
	switch (g.format) {
	case Format::Json: {
		Json j = envelope("search");
		j["m"] = a.m;
		j["b"] = a.b;
		j["n"] = a.n;
		j["strategy"] = a.strategy;
		j["seed"] = g.seed;
		Json prog = Json::array();
		for (const auto& r : res.progress)
			prog.push_back(to_json(r));
		j["progress"] = std::move(prog);
		if (res.code) {
			j["outcome"] = "certified";
			j["q"] = res.code->field()->order();
			j["code"] = to_json(*res.code);
		} else {
			j["outcome"] = "not_found";
		}
		emit_json(out, j);
		break;
	}
	case Format::Csv:
		out << "q,trials,outcome\n";
		for (const auto& r : res.progress)
			out << r.q << ',' << r.trials << ',' << (r.found ? "certified" : "not_found") << '\n';
		break;
	case Format::Text:
		for (const auto& r : res.progress)
			out << "q=" << r.q << " trials=" << r.trials << ' ' << (r.found ? "certified" : "not_found") << '\n';
		if (res.code)
			out << to_json(*res.code).dump() << '\n';
		break;
	}
	return res.code ? 0 : 1;
}

// --- attack ------------------------------------------------------------

struct AttackArgs {
	std::string code;
	std::string topology;
};

int do_attack(const Globals& g, const AttackArgs& a, std::ostream& out)
{
	TensorCode c = code_from_json(read_json_file(a.code));
	std::optional<AttackResult> res = a.topology == "t4" ? attack_t4(c.h_row) : attack_t3(c.h_row);
	switch (g.format) {
	case Format::Json: {
		Json j = envelope("attack");
		j["topology"] = a.topology;
		j["found"] = res.has_value();
		if (res)
			j.update(to_json(*res));
		emit_json(out, j);
		break;
	}
	case Format::Csv:
		out << "topology,found,size,rank,pattern\n" << a.topology << ',' << res.has_value() << ',';
		if (res)
			out << res->pattern.size() << ',' << res->rank << ',' << cells_string(res->pattern);
		else
			out << ",,";
		out << '\n';
		break;
	case Format::Text:
		if (res)
			out << "witness " << cells_string(res->pattern) << " rank " << res->rank << " of " << res->pattern.size()
				<< '\n';
		else
			out << "no witness\n";
		break;
	}
	return res ? 0 : 1;
}

// --- encode / decode ---------------------------------------------------

struct EncodeArgs {
	std::string code;
	std::string message;
	bool random = false;
};

std::vector<Element> parse_message(const std::string& s)
{
	std::vector<Element> v;
	std::stringstream ss(s);
	std::string tok;
	while (std::getline(ss, tok, ',')) {
		try {
			std::size_t used = 0;
			unsigned long x = std::stoul(tok, &used);
			if (used != tok.size())
				throw std::invalid_argument(tok);
			v.push_back(static_cast<Element>(x));
		} catch (const std::exception&) {
			throw Error(ErrorKind::ParseError, "bad message symbol: " + tok);
		}
	}
	return v;
}

int do_encode(const Globals& g, const EncodeArgs& a, std::ostream& out)
{
	TensorCode c = code_from_json(read_json_file(a.code));
	const Topology& t = c.topology;
	std::vector<Element> msg;
	if (a.random) {
		std::mt19937_64 rng(g.seed);
		msg.resize(static_cast<std::size_t>(t.m - t.a) * (t.n - t.b));
		for (auto& x : msg)
			x = static_cast<Element>(rng() % c.field()->order());
	} else {
		msg = parse_message(a.message);
		for (auto x : msg)
			if (!c.field()->contains(x))
				throw Error(ErrorKind::InvalidArgument, "message symbol outside the field");
	}
	GridWord w = encode(c, msg);
	if (g.format == Format::Json) {
		Json j = envelope("encode");
		j["word"] = to_json(w);
		emit_json(out, j);
	} else {
		for (std::uint32_t i = 0; i < w.m; ++i) {
			for (std::uint32_t k = 0; k < w.n; ++k)
				out << (k ? (g.format == Format::Csv ? "," : " ") : "") << w.at(i, k);
			out << '\n';
		}
	}
	return 0;
}

struct DecodeArgs {
	std::string code;
	std::string word;
};

int do_decode(const Globals& g, const DecodeArgs& a, std::ostream& out)
{
	TensorCode c = code_from_json(read_json_file(a.code));
	GridWord w = word_from_json(read_json_file(a.word));
	for (auto x : w.entries)
		if (!c.field()->contains(x))
			throw Error(ErrorKind::InvalidArgument, "word symbol outside the field");
	std::vector<Element> grid = decode(c, w);
	if (g.format == Format::Json) {
		Json j = envelope("decode");
		j["m"] = w.m;
		j["n"] = w.n;
		j["recovered"] = w.erased.size();
		j["grid"] = grid_to_json(w.m, w.n, grid);
		emit_json(out, j);
	} else {
		for (std::uint32_t i = 0; i < w.m; ++i) {
			for (std::uint32_t k = 0; k < w.n; ++k)
				out << (k ? (g.format == Format::Csv ? "," : " ") : "") << grid[static_cast<std::size_t>(i) * w.n + k];
			out << '\n';
		}
	}
	return 0;
}

// --- bounds ------------------------------------------------------------

struct BoundsArgs {
	std::vector<std::string> names;
	std::vector<std::string> params;
	std::map<std::string, std::string> named;
};

int do_bounds(const Globals& g, const BoundsArgs& a, std::ostream& out)
{
	std::map<std::string, std::string> params = a.named;
	for (const auto& kv : a.params) {
		auto eq = kv.find('=');
		if (eq == std::string::npos || eq == 0)
			throw Error(ErrorKind::ParseError, "expected key=value, got " + kv);
		params[kv.substr(0, eq)] = kv.substr(eq + 1);
	}
	std::vector<BoundReport> reps;
	for (const auto& name : a.names)
		reps.push_back(bound(name, params));
	switch (g.format) {
	case Format::Json: {
		Json j = envelope("bounds");
		if (reps.size() == 1) {
			j.update(to_json(reps[0]));
		} else {
			Json list = Json::array();
			for (const auto& r : reps)
				list.push_back(to_json(r));
			j["bounds"] = std::move(list);
		}
		emit_json(out, j);
		break;
	}
	case Format::Csv:
	case Format::Text:
		if (g.format == Format::Csv)
			out << "name,value,approx\n";
		for (const auto& r : reps) {
			Json v = to_json(r)["value"];
			std::string value = v.is_string() ? v.get<std::string>() : v.dump();
			if (g.format == Format::Csv) {
				if (value.find_first_of(",\"") != std::string::npos) {
					std::string quoted = "\"";
					for (char ch : value)
						quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
					value = quoted + '"';
				}
				out << r.name << ',' << value << ',' << r.approx << '\n';
			} else {
				out << r.name << " = " << value << " (~" << r.approx << ")\n";
			}
		}
		break;
	}
	return 0;
}

int exit_code_for(ErrorKind k)
{
	switch (k) {
	case ErrorKind::Uncorrectable:
	case ErrorKind::InconsistentWord:
		return 1;
	default:
		return 2;
	}
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Maximally recoverable grid codes: enumeration, certification, search, attacks, bounds", "mrgrid"};
	app.require_subcommand(1);
	app.fallthrough();

	Globals g;
	std::string format = "json";
	app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
	app.add_option("--threads", g.threads, "Worker threads (0: MRGRID_THREADS or all cores)")->envname("MRGRID_THREADS");
	app.add_option("--seed", g.seed, "Seed for randomized steps");

	EnumerateArgs ea;
	auto* enumerate = app.add_subcommand("enumerate", "List regular irreducible pattern types of T(1,b,0)");
	enumerate->add_option("--m", ea.m, "Rows")->required();
	enumerate->add_option("--b", ea.b, "Row parities")->required();
	enumerate->add_option("--max-candidates", ea.max_candidates, "Enumeration cap");

	CertifyArgs ca;
	auto* certify = app.add_subcommand("certify", "Check that a code is maximally recoverable");
	certify->add_option("--code", ca.code, "Code JSON file")->required();
	certify->add_option("--pattern", ca.pattern, "Re-check a single erasure pattern JSON file");
	certify->add_option("--max-instances", ca.max_instances, "Pattern instance cap");

	SearchArgs sa;
	auto* search = app.add_subcommand("search", "Sweep field sizes for a certified MR code");
	search->add_option("--m", sa.m, "Rows")->required();
	search->add_option("--b", sa.b, "Row parities")->required();
	search->add_option("--n", sa.n, "Columns")->required();
	search->add_option("--q-min", sa.q_min, "Smallest field order");
	search->add_option("--q-max", sa.q_max, "Largest field order");
	search->add_option("--strategy", sa.strategy, "greedy or random")->check(CLI::IsMember({"greedy", "random"}));
	search->add_option("--trials", sa.trials, "Random matrices per field");
	search->add_option("--max-instances", sa.max_instances, "Pattern instance cap");
	search->add_flag("--no-infinity", sa.no_infinity, "Greedy: never use the column at infinity");

	AttackArgs aa;
	auto* attack = app.add_subcommand("attack", "Search a row code for an uncorrectable regular pattern");
	attack->add_option("--code", aa.code, "Code JSON file")->required();
	attack->add_option("--topology", aa.topology, "t4 or t3")->required()->check(CLI::IsMember({"t4", "t3"}));

	EncodeArgs ena;
	auto* enc = app.add_subcommand("encode", "Systematically encode a message");
	enc->add_option("--code", ena.code, "Code JSON file")->required();
	auto* msg_opt = enc->add_option("--message", ena.message, "Comma-separated symbols");
	auto* rnd_opt = enc->add_flag("--random", ena.random, "Random message from --seed");
	msg_opt->excludes(rnd_opt);

	DecodeArgs da;
	auto* dec = app.add_subcommand("decode", "Recover the erased cells of a word");
	dec->add_option("--code", da.code, "Code JSON file")->required();
	dec->add_option("--word", da.word, "Word JSON file")->required();

	BoundsArgs ba;
	auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate field-size bounds");
	bounds_cmd->add_option("--name", ba.names, "Bound name (repeatable)")->required();
	bounds_cmd->add_option("--params", ba.params, "key=value pairs");
	for (const char* key : {"m", "b", "n", "N", "nv", "delta", "r", "c_r", "C"}) {
		bounds_cmd->add_option_function<std::string>(std::string("--") + key,
			[&ba, key](const std::string& v) { ba.named[key] = v; }, std::string("Parameter ") + key);
	}

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try {
		app.parse(rev);
	} catch (const CLI::ParseError& e) {
		if (e.get_exit_code() == 0) {
			out << app.help();
			return 0;
		}
		err << "usage error: " << e.what() << '\n';
		return 2;
	}
	if (*enc && !*msg_opt && !ena.random) {
		err << "usage error: encode needs --message or --random\n";
		return 2;
	}
	g.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
	if (g.threads == 0)
		g.threads = resolve_threads(0);

	try {
		if (*enumerate)
			return do_enumerate(g, ea, out);
		if (*certify)
			return do_certify(g, ca, out);
		if (*search)
			return do_search(g, sa, out);
		if (*attack)
			return do_attack(g, aa, out);
		if (*enc)
			return do_encode(g, ena, out);
		if (*dec)
			return do_decode(g, da, out);
		if (*bounds_cmd)
			return do_bounds(g, ba, out);
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return exit_code_for(e.kind());
	}
	return 2;
}

} // namespace mrgrid::cli
