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

#ifndef FROBTHICK_VERIFY_HPP
#define FROBTHICK_VERIFY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "errors.hpp"
#include "graded_ideal.hpp"
#include "monomial_ideal.hpp"
#include "parser.hpp"
#include "polynomial.hpp"

namespace frobthick {

struct VerifyParams {
    std::vector<std::uint32_t> primes;    ///< empty selects the check's default grid
    std::optional<std::uint32_t> n;       ///< ambient dimension override
    std::optional<std::uint32_t> degree;  ///< degree override
    std::size_t samples = 3;              ///< random smooth forms per grid point
    std::uint64_t seed = 20260101;
    double max_cost = 5e5;                ///< largest admissible monomial count
    bool force = false;
};

struct CheckResult {
    std::string id;
    bool pass = true;
    std::vector<std::string> transcript;
};

inline const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{"colon-lemma",       "socle-bound",           "sharp-example",
                                              "cusp-formula",      "quartic-twist-formula", "main-hypersurface",
                                              "ci-theorem",        "factorization"};
    return ids;
}

/// Number of degree-D monomials the codomain of a thickening query ranges
/// over: C((n+1)ep - dt + pj + n, n).
inline double predicted_codomain_monomials(std::size_t n, std::uint32_t d, std::uint32_t p, std::uint32_t t,
                                           std::int64_t twist, std::uint32_t level) {
    const auto deg = static_cast<std::int64_t>(n + 1) * level * p - static_cast<std::int64_t>(d) * t +
                     static_cast<std::int64_t>(p) * twist;
    if (deg < 0) return 0;
    return binomial(deg + static_cast<std::int64_t>(n), static_cast<std::int64_t>(n));
}

namespace detail {

class Checker {
   public:
    Checker(std::string id, const VerifyParams& params) : params_(params) { result_.id = std::move(id); }

    void expect(bool ok, const std::string& line) {
        result_.transcript.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
        if (!ok) result_.pass = false;
    }
    void note(const std::string& line) { result_.transcript.push_back("     " + line); }

    void guard(double estimate, const std::string& what) {
        if (estimate > params_.max_cost && !params_.force)
            throw GuardrailError(result_.id + ": " + what + " needs about " + std::to_string(estimate) +
                                     " monomials (limit " + std::to_string(params_.max_cost) + ")",
                                 estimate);
    }

    std::vector<std::uint32_t> primes(std::vector<std::uint32_t> fallback) const {
        return params_.primes.empty() ? fallback : params_.primes;
    }
    const VerifyParams& params() const { return params_; }
    CheckResult take() { return std::move(result_); }

   private:
    const VerifyParams& params_;
    CheckResult result_;
};

template <class... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

inline CheckResult check_colon_lemma(const VerifyParams& params) {
    Checker ck("colon-lemma", params);
    const std::uint32_t n_max = params.n.value_or(3);
    for (std::uint32_t p : ck.primes({2, 3, 5})) {
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            for (std::uint32_t q : {p, p * p}) {
                ck.guard(std::pow(double(q) + 1, n + 1), cat("box for n=", n, " q=", q));
                std::size_t mismatches = 0, cases = 0;
                for (std::uint32_t N = 0; N <= 2 * (n + 1) * q; ++N) {
                    const std::int64_t k = std::int64_t(n + 1) * q - n - N;
                    auto computed = colon_bracket_by_power(n, q, N);
                    auto expected = ideal_sum(MonomialIdeal::max_ideal_power(n + 1, k),
                                              MonomialIdeal::bracket_power(n + 1, q));
                    ++cases;
                    if (!(computed == expected)) ++mismatches;
                }
                ck.expect(mismatches == 0, cat("n=", n, " q=", q, ": ", cases - mismatches, "/", cases,
                                               " colon ideals equal m^{(n+1)q-n-N} + m^[q]"));
            }
        }
    }
    return ck.take();
}

inline std::vector<HomogPoly> smooth_corpus(const RingSpec& ring, std::uint32_t d, std::size_t samples,
                                            std::mt19937_64& rng) {
    std::vector<HomogPoly> out;
    auto fermat = fermat_form(ring, d);
    std::vector<HomogPoly> single{fermat};
    if (is_smooth_projective_ci(single)) out.push_back(fermat);
    for (std::size_t i = 0; i < samples; ++i) out.push_back(random_smooth_form(ring, d, rng));
    return out;
}

inline CheckResult check_socle_bound(const VerifyParams& params) {
    Checker ck("socle-bound", params);
    std::mt19937_64 rng(params.seed);
    std::vector<std::uint32_t> ns = params.n ? std::vector<std::uint32_t>{*params.n} : std::vector<std::uint32_t>{2, 3};
    std::vector<std::uint32_t> ds =
        params.degree ? std::vector<std::uint32_t>{*params.degree} : std::vector<std::uint32_t>{3, 4, 5};
    for (std::uint32_t p : ck.primes({5, 7})) {
        for (auto n : ns) {
            for (auto d : ds) {
                const std::uint32_t B = n * (d - 2) + d;
                ck.guard(binomial(B + n, n), cat("degree-", B, " piece"));
                RingSpec ring(n + 1, p);
                std::size_t ok = 0, total = 0;
                for (const auto& f : smooth_corpus(ring, d, params.samples, rng)) {
                    std::vector<HomogPoly> single{f};
                    HomogIdeal ideal = jacobian_ideal(single).plus(HomogIdeal(ring, single));
                    ++total;
                    if (contains_power_of_max_ideal(ideal, B)) ++ok;
                }
                ck.expect(ok == total, cat("p=", p, " n=", n, " d=", d, ": m^", B, " in J+fS for ", ok, "/", total,
                                           " smooth forms"));
            }
        }
    }
    RingSpec r7(3, 7);
    std::vector<HomogPoly> cusp{parse_poly("x0^3 - x1^2*x2", r7)};
    auto cusp_ideal = jacobian_ideal(cusp).plus(HomogIdeal(r7, cusp));
    ck.expect(!contains_power_of_max_ideal(cusp_ideal, 5), "cusp over F_7: m^5 not in J+fS");
    return ck.take();
}

inline CheckResult check_sharp_example(const VerifyParams& params) {
    Checker ck("sharp-example", params);
    std::vector<std::array<std::uint32_t, 3>> grid{{2, 3, 5}, {2, 4, 7}, {3, 4, 7}, {2, 3, 11}, {3, 4, 11}};
    if (params.n && params.degree && !params.primes.empty()) {
        grid.clear();
        for (auto p : params.primes) grid.push_back({*params.n, *params.degree, p});
    }
    for (auto [n, d, p] : grid) {
        if ((p + 1) % d != 0) {
            ck.expect(false, cat("(n,d,p)=(", n, ",", d, ",", p, ") does not satisfy p = -1 mod d"));
            continue;
        }
        if (n < 2) {
            ck.expect(false, cat("n=", n, " needs n >= 2"));
            continue;
        }
        const std::uint32_t e = std::max<std::int64_t>(1, std::int64_t(d) - n);
        ck.guard(predicted_codomain_monomials(n, d, p, n - 1, 0, e), cat("p=", p, " codomain"));
        ck.guard(binomial(n * p + n, n), cat("membership degree ", n * p));
        RingSpec ring(n + 1, p);
        auto f = fermat_form(ring, d);
        Variety v({f});
        auto rep = is_injective(v, ThickeningQuery{n - 1, 0, ThickeningMode::bracket, {}});
        ck.expect(!rep.injective, cat("(n,d,p)=(", n, ",", d, ",", p, "): F_", n - 1, " has rank ", rep.rank,
                                      " on a domain of dimension ", rep.domain_dim));
        std::vector<HomogPoly> gens;
        for (std::uint32_t i = 1; i <= n; ++i) gens.push_back(pow(HomogPoly::variable(ring, i), p));
        gens.push_back(pow(f, n - 1));
        auto target = pow(HomogPoly::variable(ring, 0), std::uint64_t(n) * p);
        ck.expect(membership(target, HomogIdeal(ring, gens)),
                  cat("x0^", n * p, " in (x1^", p, ",...,x", n, "^", p, ", f^", n - 1, ")"));
    }
    return ck.take();
}

inline CheckResult check_cusp_formula(const VerifyParams& params) {
    Checker ck("cusp-formula", params);
    for (std::uint32_t p : ck.primes({5, 7, 11, 13, 17, 19})) {
        if (p % 6 != 1 && p % 6 != 5) {
            ck.expect(false, cat("p=", p, " is not congruent to 1 or 5 mod 6"));
            continue;
        }
        ck.guard(predicted_codomain_monomials(2, 3, p, 1, 0, 1), cat("p=", p, " codomain"));
        RingSpec ring(3, p);
        Variety v({parse_poly("x0^3 - x1^2*x2", ring)});
        const std::uint32_t expected = p % 6 == 1 ? (p + 5) / 6 : (p + 7) / 6;
        auto got = minimal_t(v, 0);
        ck.expect(got == expected, cat("p=", p, ": minimal t = ", got ? std::to_string(*got) : "none",
                                       ", predicted ", expected));
    }
    return ck.take();
}

inline CheckResult check_quartic_twist(const VerifyParams& params) {
    Checker ck("quartic-twist-formula", params);
    for (std::uint32_t p : ck.primes({5, 7, 11, 13})) {
        if (p % 2 == 0) {
            ck.expect(false, cat("p=", p, " must be odd"));
            continue;
        }
        ck.guard(predicted_codomain_monomials(2, 4, p, 1, 1, 1), cat("p=", p, " codomain"));
        RingSpec ring(3, p);
        Variety v({fermat_form(ring, 4)});
        const std::uint32_t expected = p % 4 == 1 ? (p + 3) / 4 : (p + 9) / 4;
        auto got = minimal_t(v, 1);
        ck.expect(got == expected, cat("p=", p, ": minimal t at twist 1 = ", got ? std::to_string(*got) : "none",
                                       ", predicted ", expected));
    }
    return ck.take();
}

inline CheckResult check_main_hypersurface(const VerifyParams& params) {
    Checker ck("main-hypersurface", params);
    std::mt19937_64 rng(params.seed);
    const std::uint32_t n = params.n.value_or(2);
    std::vector<std::uint32_t> ds =
        params.degree ? std::vector<std::uint32_t>{*params.degree} : std::vector<std::uint32_t>{3, 4, 5};
    for (std::uint32_t p : ck.primes({5, 7, 11})) {
        if (p < n) {
            ck.note(cat("p=", p, " skipped: needs p >= n"));
            continue;
        }
        for (auto d : ds) {
            const std::uint32_t e = std::max<std::int64_t>(1, std::int64_t(d) - n);
            ck.guard(predicted_codomain_monomials(n, d, p, n, 0, e), cat("p=", p, " d=", d, " codomain"));
            RingSpec ring(n + 1, p);
            std::size_t ok = 0, total = 0;
            for (const auto& f : smooth_corpus(ring, d, params.samples, rng)) {
                ++total;
                auto rep = is_injective(Variety({f}), ThickeningQuery{n, 0, ThickeningMode::bracket, {}});
                if (rep.injective) ++ok;
                else ck.note(cat("counterexample: ", format_poly(f)));
            }
            ck.expect(ok == total, cat("p=", p, " n=", n, " d=", d, ": F_", n, " injective for ", ok, "/", total,
                                       " smooth forms"));
        }
    }
    return ck.take();
}

inline CheckResult check_ci_theorem(const VerifyParams& params) {
    Checker ck("ci-theorem", params);
    for (std::uint32_t p : ck.primes({5, 7, 11})) {
        RingSpec ring(4, p);
        std::vector<HomogPoly> fs{parse_poly("x0^2 + x1^2 + x2^2 + x3^2", ring),
                                  parse_poly("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", ring)};
        const std::vector<std::uint32_t> degrees{2, 2};
        const auto t0 = ci_bound_t0(3, degrees);
        ck.expect(t0 == 3, cat("p=", p, ": t0 = ", t0));
        if (t0 > p) {
            ck.expect(false, cat("p=", p, ": t0 exceeds p"));
            continue;
        }
        ck.guard(predicted_codomain_monomials(3, 4, p, t0, 0, 1), cat("p=", p, " codomain"));
        ck.expect(regular_sequence_probe(fs), cat("p=", p, ": Hilbert function matches a complete intersection"));
        Variety v(fs);
        ck.expect(v.smooth(), cat("p=", p, ": Jacobian certificate of smoothness"));
        auto rep = is_injective(v, ThickeningQuery{t0, 0, ThickeningMode::bracket, {}});
        ck.expect(rep.domain_dim == 1, cat("p=", p, ": annihilator dimension ", rep.domain_dim));
        ck.expect(rep.injective, cat("p=", p, ": bracket thickening with t=", t0, " has rank ", rep.rank));
    }
    return ck.take();
}

inline CheckResult check_factorization(const VerifyParams& params) {
    Checker ck("factorization", params);
    std::mt19937_64 rng(params.seed);
    for (std::uint32_t p : ck.primes({5, 7})) {
        RingSpec ring(3, p);
        std::vector<std::pair<std::string, HomogPoly>> forms{{"fermat cubic", fermat_form(ring, 3)},
                                                             {"cusp", parse_poly("x0^3 - x1^2*x2", ring)},
                                                             {"random cubic", random_form(ring, 3, rng)}};
        for (auto& [name, f] : forms) {
            if (f.is_zero()) continue;
            bool ok = true;
            try {
                minimal_t(Variety({f}), 0, true);
            } catch (const InvariantViolation&) {
                ok = false;
            }
            ck.expect(ok, cat("p=", p, " ", name, ": injective t form an up-set matching the binary search"));
        }
        RingSpec r4(4, p);
        std::vector<HomogPoly> fs{parse_poly("x0^2 + x1^2 + x2^2 + x3^2", r4),
                                  parse_poly("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", r4)};
        const auto t0 = ci_bound_t0(3, std::vector<std::uint32_t>{2, 2});
        const auto t = ordinary_power_bound(2, t0);
        ck.expect(power_containment(fs, t, t0, 8), cat("p=", p, ": (f1,f2)^", t, " in (f1^", t0, ", f2^", t0, ")"));
        ck.expect(!power_containment(fs, t - 1, t0, 8),
                  cat("p=", p, ": (f1,f2)^", t - 1, " not in (f1^", t0, ", f2^", t0, ")"));
    }
    return ck.take();
}

}  // namespace detail

/// Runs one named check. Unknown ids raise PreconditionError; grids whose
/// cost estimate exceeds params.max_cost raise GuardrailError unless forced.
inline CheckResult verify_named(const std::string& id, const VerifyParams& params = {}) {
    if (id == "colon-lemma") return detail::check_colon_lemma(params);
    if (id == "socle-bound") return detail::check_socle_bound(params);
    if (id == "sharp-example") return detail::check_sharp_example(params);
    if (id == "cusp-formula") return detail::check_cusp_formula(params);
    if (id == "quartic-twist-formula") return detail::check_quartic_twist(params);
    if (id == "main-hypersurface") return detail::check_main_hypersurface(params);
    if (id == "ci-theorem") return detail::check_ci_theorem(params);
    if (id == "factorization") return detail::check_factorization(params);
    throw PreconditionError("unknown check id: " + id);
}

}  // namespace frobthick

#endif
