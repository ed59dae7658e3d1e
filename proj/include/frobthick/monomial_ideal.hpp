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

#ifndef FROBTHICK_MONOMIAL_IDEAL_HPP
#define FROBTHICK_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace frobthick {

/// Whether x^mono lies in m^[q] = (x_0^q, ..., x_n^q).
inline bool in_bracket(const Exponent& mono, std::uint32_t q) { return exceeds(mono, q); }

/// Drops every term of f lying in m^[q]; f is in m^[q] iff the result is zero.
inline HomogPoly reduce_mod_bracket(const HomogPoly& f, std::uint32_t q) {
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (!exceeds(t.exponent, q)) kept.push_back(t);
    return HomogPoly::from_terms(f.ring(), f.degree(), std::move(kept));
}

/// Monomial ideal held by its minimal generators, sorted ascending in graded-lex
/// order. The zero ideal has no generators; the unit ideal has the generator 1.
class MonomialIdeal {
   public:
    explicit MonomialIdeal(std::size_t num_vars, std::vector<Exponent> generators = {})
        : num_vars_(num_vars), gens_(std::move(generators)) {
        for (const auto& g : gens_)
            if (g.size() != num_vars_) throw ShapeError("generator length does not match variable count");
        minimalize();
    }

    static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars); }
    static MonomialIdeal unit(std::size_t num_vars) { return MonomialIdeal(num_vars, {Exponent(num_vars)}); }

    /// m^[q] = (x_0^q, ..., x_n^q).
    static MonomialIdeal bracket_power(std::size_t num_vars, std::uint32_t q) {
        if (q < 1) throw PreconditionError("bracket power needs q >= 1");
        std::vector<Exponent> gens;
        for (std::size_t i = 0; i < num_vars; ++i) gens.push_back(q * unit_exponent(num_vars, i));
        return MonomialIdeal(num_vars, std::move(gens));
    }

    /// m^N, with m^N = S for N <= 0.
    static MonomialIdeal max_ideal_power(std::size_t num_vars, std::int64_t N) {
        if (N <= 0) return unit(num_vars);
        return MonomialIdeal(num_vars, enumerate_monomials(num_vars, static_cast<std::uint32_t>(N)));
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<Exponent>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().degree() == 0; }

    bool contains(const Exponent& mono) const {
        for (const auto& g : gens_)
            if (g.divides(mono)) return true;
        return false;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

   private:
    // Sort, dedupe, then drop anything divisible by a generator of strictly
    // smaller degree (equal-degree divisibility means equality).
    void minimalize() {
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        std::vector<Exponent> kept;
        std::size_t lower_end = 0;
        std::uint32_t current_degree = 0;
        for (const auto& g : gens_) {
            if (kept.empty() || g.degree() != current_degree) {
                lower_end = kept.size();
                current_degree = g.degree();
            }
            bool redundant = false;
            for (std::size_t i = 0; i < lower_end; ++i)
                if (kept[i].divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(g);
        }
        gens_ = std::move(kept);
    }

    std::size_t num_vars_;
    std::vector<Exponent> gens_;
};

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) throw ShapeError("ideals in different rings");
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.num_vars(), std::move(gens));
}

inline MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) throw ShapeError("ideals in different rings");
    std::vector<Exponent> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) {
            Exponent l(a.num_vars());
            for (std::size_t i = 0; i < a.num_vars(); ++i) l[i] = std::max(g[i], h[i]);
            gens.push_back(l);
        }
    return MonomialIdeal(a.num_vars(), std::move(gens));
}

/// I : x^b, generated by the componentwise max(g - b, 0) over generators g.
inline MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Exponent& b) {
    std::vector<Exponent> gens;
    for (const auto& g : ideal.generators()) {
        Exponent c(ideal.num_vars());
        for (std::size_t i = 0; i < ideal.num_vars(); ++i) c[i] = g[i] > b[i] ? g[i] - b[i] : 0;
        gens.push_back(c);
    }
    return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

/// I : m^N as the intersection of I : x^b over all degree-N monomials b.
/// Exact for any monomial ideal, but the number of intersections grows like N^n.
inline MonomialIdeal colon_by_max_power_generic(const MonomialIdeal& ideal, std::uint32_t N) {
    auto result = MonomialIdeal::unit(ideal.num_vars());
    for (const auto& b : enumerate_monomials(ideal.num_vars(), N)) result = ideal_intersection(result, ideal_colon(ideal, b));
    return result;
}

/// m^[q] : m^N in n+1 variables.
///
/// Works with the standard monomials inside the box [0, q)^{n+1}: the standard
/// monomials of m^[q] : x^b form the sub-box below the corner (q-1) - b, the
/// colon by m^N is the intersection over all degree-N monomials b, and so its
/// standard set is the union of those sub-boxes. Monomials b with some b_i >= q
/// contribute the unit ideal and are skipped.
inline MonomialIdeal colon_bracket_by_power(std::size_t n, std::uint32_t q, std::uint32_t N) {
    if (q < 1) throw PreconditionError("bracket power needs q >= 1");
    const std::size_t nv = n + 1;
    std::vector<std::size_t> stride(nv);
    std::size_t size = 1;
    for (std::size_t i = nv; i-- > 0;) {
        stride[i] = size;
        size *= q;
    }
    std::vector<char> standard(size, 0);
    for (const auto& b : enumerate_monomials(nv, N, q)) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < nv; ++i) idx += (q - 1 - b[i]) * stride[i];
        standard[idx] = 1;
    }
    // down-closure, one axis at a time
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t idx = size; idx-- > 0;) {
            if (!standard[idx]) continue;
            if ((idx / stride[i]) % q > 0) standard[idx - stride[i]] = 1;
        }
    }

    auto in_ideal = [&](const Exponent& s) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < nv; ++i) {
            if (s[i] >= q) return true;
            idx += s[i] * stride[i];
        }
        return !standard[idx];
    };

    // minimal generators live in [0, q]^{n+1}
    std::vector<Exponent> gens;
    Exponent s(nv);
    std::size_t total = 1;
    for (std::size_t i = 0; i < nv; ++i) total *= (q + 1);
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rest = lin;
        for (std::size_t i = nv; i-- > 0;) {
            s[i] = static_cast<std::uint32_t>(rest % (q + 1));
            rest /= (q + 1);
        }
        if (!in_ideal(s)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < nv && minimal; ++i) {
            if (s[i] == 0) continue;
            Exponent t = s;
            t[i] -= 1;
            if (in_ideal(t)) minimal = false;
        }
        if (minimal) gens.push_back(s);
    }
    return MonomialIdeal(nv, std::move(gens));
}

/// dim_F [S / ideal]_D: the number of degree-D monomials outside the ideal.
inline std::size_t graded_dim_complement(const MonomialIdeal& ideal, std::uint32_t D) {
    std::size_t count = 0;
    for (const auto& m : enumerate_monomials(ideal.num_vars(), D))
        if (!ideal.contains(m)) ++count;
    return count;
}

}  // namespace frobthick

#endif
