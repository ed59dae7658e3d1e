/*
 * Copyright 2026 The frobthick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBTHICK_CLI_HPP
#define FROBTHICK_CLI_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "analyzer.hpp"
#include "errors.hpp"
#include "graded_ideal.hpp"
#include "parallel.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace frobthick::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kGuardrail = 3, kInvariant = 4 };

/// Inconsistent or incomplete command-line configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

struct Options {
    std::string command;
    std::optional<std::uint32_t> n;
    std::string primes;
    std::vector<std::string> polys;
    std::string ideal;
    std::string input;
    std::optional<std::uint32_t> t;
    std::string t_range;
    std::int64_t twist = 0;
    std::string mode = "bracket";
    std::optional<std::uint32_t> level;
    std::string format;
    std::optional<std::size_t> threads;
    bool force = false;
    double max_codomain = 5e5;
    std::string out;
    bool validate = false;
    std::string family;
    std::optional<std::uint32_t> degree;
    std::uint32_t e = 1;
    std::string check;
    std::size_t samples = 3;
    std::uint64_t seed = 20260101;
};

/// Generators of one variety, as text, with the primes to run it over.
struct VarietySource {
    std::uint32_t n = 0;
    std::vector<std::string> generators;
    std::vector<std::uint32_t> primes;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

inline std::uint32_t to_prime(const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number in prime list: '" + s + "'");
    }
    if (used != s.size()) throw ConfigError("not a number in prime list: '" + s + "'");
    if (!is_prime(v) || v >= (1ull << 31)) throw ConfigError(s + " is not a supported prime");
    return static_cast<std::uint32_t>(v);
}

inline std::vector<std::uint32_t> parse_primes(const std::string& s) {
    std::vector<std::uint32_t> out;
    for (const auto& tok : split(s, ',')) out.push_back(to_prime(tok));
    return out;
}

inline std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw ConfigError("t-range must look like a:b");
    try {
        auto a = std::stoul(parts[0]), b = std::stoul(parts[1]);
        if (a < 1 || b < a) throw ConfigError("t-range must satisfy 1 <= a <= b");
        return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    } catch (const std::logic_error&) {
        throw ConfigError("t-range must look like a:b");
    }
}

inline ThickeningMode parse_mode(const std::string& s) {
    if (s == "bracket") return ThickeningMode::bracket;
    if (s == "power") return ThickeningMode::power;
    throw ConfigError("mode must be bracket or power");
}

inline std::vector<VarietySource> load_sources(const Options& o) {
    std::vector<VarietySource> out;
    const auto cli_primes = o.primes.empty() ? std::vector<std::uint32_t>{} : parse_primes(o.primes);
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw ConfigError("cannot open input file " + o.input);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const nlohmann::json::exception& ex) {
            throw ConfigError(std::string("malformed input JSON: ") + ex.what());
        }
        if (!doc.is_array()) doc = Json::array({doc});
        for (const auto& item : doc) {
            try {
                VarietySource src;
                src.n = item.at("n").get<std::uint32_t>();
                for (const auto& g : item.at("generators")) src.generators.push_back(g.get<std::string>());
                if (item.contains("p")) {
                    const auto& p = item["p"];
                    if (p.is_array())
                        for (const auto& x : p) src.primes.push_back(to_prime(std::to_string(x.get<std::uint64_t>())));
                    else src.primes.push_back(to_prime(std::to_string(p.get<std::uint64_t>())));
                }
                if (src.primes.empty()) src.primes = cli_primes;
                out.push_back(std::move(src));
            } catch (const nlohmann::json::exception& ex) {
                throw ConfigError(std::string("bad input entry: ") + ex.what());
            }
        }
    }
    std::vector<std::string> gens = o.polys;
    if (!o.ideal.empty())
        for (auto& g : split(o.ideal, ',')) gens.push_back(g);
    if (o.family == "fermat") {
        if (!o.degree) throw ConfigError("--family fermat needs --degree");
        std::string f;
        for (std::uint32_t i = 0; o.n && i <= *o.n; ++i)
            f += (i ? " + x" : "x") + std::to_string(i) + "^" + std::to_string(*o.degree);
        gens.push_back(f);
    } else if (!o.family.empty()) {
        throw ConfigError("unknown family '" + o.family + "' (supported: fermat)");
    }
    if (!gens.empty()) {
        if (!o.n) throw ConfigError("--n is required with --poly, --ideal, or --family");
        out.push_back(VarietySource{*o.n, std::move(gens), cli_primes});
    }
    if (out.empty()) throw ConfigError("no variety given (use --poly, --ideal, --family, or --input)");
    for (const auto& s : out)
        if (s.primes.empty()) throw ConfigError("no prime given (use --p)");
    return out;
}

inline Variety build_variety(const VarietySource& src, std::uint32_t p) {
    RingSpec ring(src.n + 1, p);
    std::vector<HomogPoly> fs;
    for (const auto& g : src.generators) fs.push_back(parse_poly(g, ring));
    return Variety(std::move(fs));
}

inline std::size_t resolve_threads(const Options& o) {
    if (o.threads) return std::max<std::size_t>(1, *o.threads);
    if (const char* env = std::getenv("FROBTHICK_THREADS")) {
        try {
            return std::max<std::size_t>(1, std::stoul(env));
        } catch (const std::exception&) {
            throw ConfigError("FROBTHICK_THREADS must be a positive integer");
        }
    }
    return std::max<unsigned>(1, std::thread::hardware_concurrency());
}

inline void guard(const Options& o, double estimate, const std::string& what) {
    if (estimate > o.max_codomain && !o.force)
        throw GuardrailError(what + ": predicted " + std::to_string(static_cast<long long>(estimate)) +
                                 " codomain monomials exceeds the limit of " +
                                 std::to_string(static_cast<long long>(o.max_codomain)) + " (use --force)",
                             estimate);
}

inline double query_estimate(const Variety& v, const ThickeningQuery& q) {
    const auto level =
        q.level.value_or(CohomologyPiece(v.ring(), q.twist - std::int64_t(v.total_degree())).min_level());
    return predicted_codomain_monomials(v.ring().n(), v.total_degree(), v.ring().p(), q.t, q.twist, level);
}

struct Task {
    Variety variety;
    ThickeningQuery query;
};

inline std::vector<std::string> run_thickenings(const Options& o, bool sweep) {
    const auto mode = parse_mode(o.mode);
    std::optional<std::pair<std::uint32_t, std::uint32_t>> range;
    if (!o.t_range.empty()) range = parse_range(o.t_range);
    if (!sweep && !range && !o.t) throw ConfigError("analyze needs --t or --t-range");
    std::vector<Task> tasks;
    for (const auto& src : load_sources(o)) {
        for (auto p : src.primes) {
            auto v = build_variety(src, p);
            std::vector<std::uint32_t> ts;
            if (range) {
                for (auto t = range->first; t <= std::min(range->second, p); ++t) ts.push_back(t);
            } else if (o.t && !sweep) {
                if (*o.t > p) throw ConfigError("t=" + std::to_string(*o.t) + " exceeds p=" + std::to_string(p));
                ts.push_back(*o.t);
            } else if (o.t) {
                if (*o.t <= p) ts.push_back(*o.t);
            } else {
                for (std::uint32_t t = 1; t <= p; ++t) ts.push_back(t);
            }
            for (auto t : ts) {
                ThickeningQuery q{t, o.twist, mode, o.level};
                if (q.t < 1) throw ConfigError("t must be at least 1");
                if (mode == ThickeningMode::power && v.codim() > 1)
                    throw ConfigError("power mode is only available for hypersurfaces");
                guard(o, query_estimate(v, q), "p=" + std::to_string(p) + " t=" + std::to_string(t));
                tasks.push_back(Task{v, q});
            }
        }
    }
    auto reports = parallel_map(tasks.size(), resolve_threads(o),
                                [&](std::size_t i) { return is_injective(tasks[i].variety, tasks[i].query); });
    std::vector<std::string> lines;
    const std::string fmt = o.format.empty() ? (sweep ? "csv" : "human") : o.format;
    if (fmt == "csv") lines.push_back(report_csv_header());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (fmt == "json") lines.push_back(report_json(tasks[i].variety, reports[i]).dump());
        else if (fmt == "csv") lines.push_back(report_csv(tasks[i].variety, reports[i]));
        else lines.push_back(report_human(tasks[i].variety, reports[i]));
    }
    return lines;
}

template <class Fn>
std::vector<std::string> run_per_variety(const Options& o, const std::string& csv_header, Fn&& fn) {
    std::vector<Variety> vs;
    for (const auto& src : load_sources(o))
        for (auto p : src.primes) vs.push_back(build_variety(src, p));
    for (const auto& v : vs) fn.guard(v);
    auto rows = parallel_map(vs.size(), resolve_threads(o), [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        Json result = fn.compute(vs[i]);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return std::pair<Json, double>{std::move(result), ms};
    });
    const std::string fmt = o.format.empty() ? "human" : o.format;
    std::vector<std::string> lines;
    if (fmt == "csv") lines.push_back(csv_header);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto& [result, ms] = rows[i];
        if (fmt == "json") {
            Json rep{{"variety", variety_json(vs[i])}};
            rep["query"] = fn.query_json();
            rep["result"] = result;
            rep["elapsed_ms"] = round_ms(ms);
            lines.push_back(rep.dump());
        } else if (fmt == "csv") {
            lines.push_back(fn.csv(vs[i], result, round_ms(ms)));
        } else {
            lines.push_back(fn.human(vs[i], result));
        }
    }
    return lines;
}

inline std::string json_scalar(const Json& j) { return j.is_null() ? "" : j.dump(); }

inline std::vector<std::string> run_minimal_t(const Options& o) {
    const auto mode = parse_mode(o.mode);
    struct {
        const Options& o;
        ThickeningMode mode;
        void guard(const Variety& v) const {
            if (mode == ThickeningMode::power && v.codim() > 1)
                throw ConfigError("power mode is only available for hypersurfaces");
            ThickeningQuery q{1, o.twist, mode, {}};
            detail::guard(o, query_estimate(v, q), "p=" + std::to_string(v.ring().p()));
        }
        Json compute(const Variety& v) const {
            auto t = minimal_t(v, o.twist, o.validate, mode);
            return Json{{"t_min", t ? Json(*t) : Json(nullptr)}, {"validated", o.validate}};
        }
        Json query_json() const { return Json{{"twist", o.twist}, {"mode", to_string(mode)}}; }
        std::string csv(const Variety& v, const Json& r, double ms) const {
            return std::to_string(v.ring().p()) + "," + std::to_string(o.twist) + "," + json_scalar(r["t_min"]) +
                   "," + Json(ms).dump();
        }
        std::string human(const Variety& v, const Json& r) const {
            return "p=" + std::to_string(v.ring().p()) + " twist=" + std::to_string(o.twist) + ": minimal t = " +
                   (r["t_min"].is_null() ? std::string("none (t = p is not injective)") : r["t_min"].dump());
        }
    } fn{o, mode};
    return run_per_variety(o, "p,twist,t_min,elapsed_ms", fn);
}

inline std::vector<std::string> run_fpt(const Options& o) {
    if (o.e < 1) throw ConfigError("--e must be at least 1");
    struct {
        const Options& o;
        void guard(const Variety& v) const {
            if (v.codim() != 1) throw ConfigError("fpt needs a single generator");
            const double q = std::pow(double(v.ring().p()), o.e);
            if (q > double(1u << 31)) throw ConfigError("p^e is too large");
            detail::guard(o, std::pow(q, double(v.ring().n())), "p^e=" + std::to_string((long long)q));
        }
        Json compute(const Variety& v) const {
            const auto& f = v.generators().front();
            auto k = nu(f, o.e);
            auto r = fpt_estimate(f, o.e);
            return Json{{"e", o.e}, {"nu", k}, {"fpt", to_string(r)}};
        }
        Json query_json() const { return Json{{"e", o.e}}; }
        std::string csv(const Variety& v, const Json& r, double ms) const {
            return std::to_string(v.ring().p()) + "," + r["e"].dump() + "," + r["nu"].dump() + "," +
                   r["fpt"].get<std::string>() + "," + Json(ms).dump();
        }
        std::string human(const Variety& v, const Json& r) const {
            return "p=" + std::to_string(v.ring().p()) + " e=" + r["e"].dump() + ": nu = " + r["nu"].dump() +
                   ", fpt estimate = " + r["fpt"].get<std::string>();
        }
    } fn{o};
    return run_per_variety(o, "p,e,nu,fpt,elapsed_ms", fn);
}

inline std::vector<std::string> run_smooth(const Options& o) {
    struct {
        const Options& o;
        void guard(const Variety& v) const {
            const auto B = smoothness_degree_bound(v.ring().n(), v.degrees());
            detail::guard(o, binomial(B + v.ring().n(), v.ring().n()), "degree-" + std::to_string(B) + " piece");
        }
        Json compute(const Variety& v) const {
            const auto B = smoothness_degree_bound(v.ring().n(), v.degrees());
            auto jac = jacobian_ideal(v.generators());
            std::optional<std::uint32_t> first;
            if (!jac.generators().empty())
                first = first_vanishing_degree(jac.plus(HomogIdeal(v.ring(), v.generators())), B);
            return Json{{"smooth", v.smooth()},
                        {"degree_bound", B},
                        {"first_vanishing_degree", first ? Json(*first) : Json(nullptr)},
                        {"regular_sequence_probe", regular_sequence_probe(v.generators())}};
        }
        Json query_json() const { return Json::object(); }
        std::string csv(const Variety& v, const Json& r, double ms) const {
            return std::to_string(v.ring().p()) + "," + r["smooth"].dump() + "," + r["degree_bound"].dump() + "," +
                   json_scalar(r["first_vanishing_degree"]) + "," + r["regular_sequence_probe"].dump() + "," +
                   Json(ms).dump();
        }
        std::string human(const Variety& v, const Json& r) const {
            std::string s = "p=" + std::to_string(v.ring().p()) + ": " +
                            (r["smooth"].get<bool>() ? "smooth" : "not certified smooth") + " (J + I contains m^" +
                            r["degree_bound"].dump() + ": " + (r["smooth"].get<bool>() ? "yes" : "no");
            if (!r["first_vanishing_degree"].is_null())
                s += ", first vanishing degree " + r["first_vanishing_degree"].dump();
            s += std::string("); regular-sequence probe ") +
                 (r["regular_sequence_probe"].get<bool>() ? "passed" : "failed");
            return s;
        }
    } fn{o};
    return run_per_variety(o, "p,smooth,degree_bound,first_vanishing_degree,regular_sequence_probe,elapsed_ms", fn);
}

inline std::pair<std::vector<std::string>, bool> run_verify(const Options& o) {
    std::vector<std::string> ids;
    if (o.check == "all") ids = check_ids();
    else ids.push_back(o.check);
    VerifyParams params;
    if (!o.primes.empty()) params.primes = parse_primes(o.primes);
    params.n = o.n;
    params.degree = o.degree;
    params.samples = o.samples;
    params.seed = o.seed;
    params.max_cost = o.max_codomain;
    params.force = o.force;
    for (const auto& id : ids)
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
            throw ConfigError("unknown check '" + id + "'");
    auto results =
        parallel_map(ids.size(), resolve_threads(o), [&](std::size_t i) { return verify_named(ids[i], params); });
    std::vector<std::string> lines;
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        lines.push_back(o.format == "json" ? check_json(r).dump() : check_human(r));
    }
    return {lines, all_pass};
}

inline void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "projective dimension n (ring has n+1 variables)");
    sub->add_option("--p,--p-list", o.primes, "prime or comma-separated primes, e.g. 5,7,11");
    sub->add_option("--poly", o.polys, "generator (repeatable)");
    sub->add_option("--ideal", o.ideal, "comma-separated generators");
    sub->add_option("--input", o.input, "JSON corpus file: {\"n\", \"p\", \"generators\"} or a list of them");
    sub->add_option("--format", o.format, "human, json, or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("--threads", o.threads, "worker threads (default: FROBTHICK_THREADS or core count)");
    sub->add_flag("--force", o.force, "ignore the size guardrail");
    sub->add_option("--max-codomain", o.max_codomain, "guardrail ceiling on predicted monomial counts");
    sub->add_option("--out", o.out, "write output to this file");
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Frobenius actions on cohomology of thickenings of projective varieties over F_p", "frobthick"};
    app.require_subcommand(1, 1);

    auto* analyze = app.add_subcommand("analyze", "injectivity of the thickening map at given t");
    auto* mint = app.add_subcommand("minimal-t", "least t with an injective thickening map");
    auto* sweep = app.add_subcommand("sweep", "table of injectivity over primes and t");
    auto* fpt = app.add_subcommand("fpt", "nu_f(p^e) and the F-pure threshold estimate");
    auto* smooth = app.add_subcommand("smooth", "Jacobian smoothness certificate");
    auto* verify = app.add_subcommand("verify", "named consistency checks");

    for (auto* sub : {analyze, mint, sweep, fpt, smooth}) detail::add_common(sub, o);
    for (auto* sub : {analyze, sweep}) {
        sub->add_option("--t", o.t, "thickening exponent");
        sub->add_option("--t-range", o.t_range, "inclusive range a:b, clipped to p");
    }
    for (auto* sub : {analyze, mint, sweep}) {
        sub->add_option("--twist", o.twist, "sheaf twist j");
        sub->add_option("--mode", o.mode, "bracket or power")->check(CLI::IsMember({"bracket", "power"}));
    }
    analyze->add_option("--level", o.level, "domain Cech level (at least the minimal one)");
    mint->add_flag("--validate", o.validate, "also scan every t and check the up-set property");
    sweep->add_option("--family", o.family, "generated family (fermat)");
    sweep->add_option("--degree", o.degree, "family degree");
    fpt->add_option("--e", o.e, "Frobenius exponent e (q = p^e)");

    verify->add_option("check", o.check, "check id or 'all'")->required();
    verify->add_option("--p,--p-list", o.primes, "primes for the check grid");
    verify->add_option("--n", o.n, "projective dimension override");
    verify->add_option("--degree", o.degree, "degree override");
    verify->add_option("--samples", o.samples, "random smooth forms per grid point");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--format", o.format, "human or json")->check(CLI::IsMember({"human", "json"}));
    verify->add_option("--threads", o.threads, "worker threads");
    verify->add_flag("--force", o.force, "ignore the size guardrail");
    verify->add_option("--max-codomain,--max-cost", o.max_codomain, "guardrail ceiling");
    verify->add_option("--out", o.out, "write output to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    }

    try {
        std::vector<std::string> lines;
        int code = kOk;
        if (analyze->parsed()) lines = detail::run_thickenings(o, false);
        else if (sweep->parsed()) lines = detail::run_thickenings(o, true);
        else if (mint->parsed()) lines = detail::run_minimal_t(o);
        else if (fpt->parsed()) lines = detail::run_fpt(o);
        else if (smooth->parsed()) lines = detail::run_smooth(o);
        else {
            auto [l, pass] = detail::run_verify(o);
            lines = std::move(l);
            if (!pass) code = kVerifyFailed;
        }
        std::ofstream file;
        if (!o.out.empty()) {
            file.open(o.out);
            if (!file) throw ConfigError("cannot open output file " + o.out);
        }
        std::ostream& sink = o.out.empty() ? out : file;
        for (const auto& line : lines) sink << line << "\n";
        return code;
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return kUsage;
    } catch (const GuardrailError& ex) {
        err << "refused: " << ex.what() << "\n";
        return kGuardrail;
    } catch (const InvariantViolation& ex) {
        err << "invariant violation: " << ex.what() << "\n";
        return kInvariant;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return kInvariant;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace frobthick::cli

#endif
