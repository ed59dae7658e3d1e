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

#ifndef FROBTHICK_POLYNOMIAL_HPP
#define FROBTHICK_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

namespace frobthick {

inline constexpr std::size_t kMaxVars = 8;

/// S = F_p[x_0, ..., x_n], described by its variable count n+1 and its characteristic.
class RingSpec {
   public:
    RingSpec(std::size_t num_vars, PrimeModulus modulus) : num_vars_(num_vars), modulus_(modulus) {
        if (num_vars < 1 || num_vars > kMaxVars)
            throw ShapeError("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
    }
    RingSpec(std::size_t num_vars, std::uint64_t p) : RingSpec(num_vars, PrimeModulus(p)) {}

    std::size_t num_vars() const noexcept { return num_vars_; }
    /// n, the dimension of the ambient projective space.
    std::size_t n() const noexcept { return num_vars_ - 1; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    std::uint32_t p() const noexcept { return modulus_.value(); }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

   private:
    std::size_t num_vars_;
    PrimeModulus modulus_;
};

/// Exponent tuple of a monomial, stored inline.
class Exponent {
   public:
    Exponent() = default;
    explicit Exponent(std::size_t size) : size_(static_cast<std::uint8_t>(size)) {
        if (size > kMaxVars) throw ShapeError("too many variables");
    }
    Exponent(std::initializer_list<std::uint32_t> values) : Exponent(values.size()) {
        std::copy(values.begin(), values.end(), e_.begin());
    }
    explicit Exponent(std::span<const std::uint32_t> values) : Exponent(values.size()) {
        std::copy(values.begin(), values.end(), e_.begin());
    }

    std::size_t size() const noexcept { return size_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) noexcept { return e_[i]; }
    const std::uint32_t* begin() const noexcept { return e_.data(); }
    const std::uint32_t* end() const noexcept { return e_.data() + size_; }

    std::uint32_t degree() const noexcept {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < size_; ++i) s += e_[i];
        return s;
    }
    std::uint32_t max_entry() const noexcept {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < size_; ++i) m = std::max(m, e_[i]);
        return m;
    }

    bool divides(const Exponent& other) const noexcept {
        for (std::size_t i = 0; i < size_; ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    friend Exponent operator+(Exponent a, const Exponent& b) noexcept {
        for (std::size_t i = 0; i < a.size_; ++i) a.e_[i] += b.e_[i];
        return a;
    }
    friend Exponent operator*(std::uint32_t k, Exponent a) noexcept {
        for (std::size_t i = 0; i < a.size_; ++i) a.e_[i] *= k;
        return a;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
        return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
    }
    /// Graded lexicographic order: total degree first, then larger x_0 exponent is larger.
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        for (std::size_t i = 0; i < a.size_; ++i)
            if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

   private:
    std::array<std::uint32_t, kMaxVars> e_{};
    std::uint8_t size_ = 0;
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : e) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

/// Exponent with a 1 in position i.
inline Exponent unit_exponent(std::size_t num_vars, std::size_t i) {
    Exponent e(num_vars);
    e[i] = 1;
    return e;
}

/// Whether some coordinate is >= q, i.e. the monomial lies in (x_0^q, ..., x_n^q).
inline bool exceeds(const Exponent& e, std::uint32_t q) noexcept {
    for (auto v : e)
        if (v >= q) return true;
    return false;
}

/// All exponents of total degree `degree` with every entry below `bound`
/// (no bound when absent), in descending graded-lex order.
inline std::vector<Exponent> enumerate_monomials(std::size_t num_vars, std::uint32_t degree,
                                                 std::optional<std::uint32_t> bound = std::nullopt) {
    std::vector<Exponent> out;
    Exponent cur(num_vars);
    const std::uint32_t cap = bound ? (*bound == 0 ? 0 : *bound - 1) : degree;
    if (bound && *bound == 0) return out;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == num_vars) {
            if (left <= cap) {
                cur[i] = left;
                out.push_back(cur);
            }
            return;
        }
        // remaining variables can absorb at most cap each
        const std::uint64_t rest = std::uint64_t{cap} * (num_vars - i - 1);
        for (std::int64_t v = std::min(left, cap); v >= 0; --v) {
            if (left - static_cast<std::uint32_t>(v) > rest) break;
            cur[i] = static_cast<std::uint32_t>(v);
            rec(i + 1, left - static_cast<std::uint32_t>(v));
        }
    };
    rec(0, degree);
    return out;
}

/// C(n, k) as a double (used for size estimates); 0 when k < 0 or k > n.
inline double binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

/// Position lookup for a fixed list of same-degree exponents.
class MonomialIndex {
   public:
    explicit MonomialIndex(std::span<const Exponent> monomials) {
        index_.reserve(monomials.size());
        for (std::size_t i = 0; i < monomials.size(); ++i) index_.emplace(monomials[i], i);
    }
    std::optional<std::size_t> find(const Exponent& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const noexcept { return index_.size(); }

   private:
    std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

struct Term {
    Exponent exponent;
    std::uint32_t coeff;  ///< nonzero residue
    friend bool operator==(const Term&, const Term&) = default;
};

/// Homogeneous polynomial in S with a declared degree. Terms are kept in
/// descending graded-lex order with nonzero coefficients; the zero polynomial
/// has no terms but still carries its degree.
class HomogPoly {
   public:
    HomogPoly(RingSpec ring, std::uint32_t degree) : ring_(ring), degree_(degree) {}

    static HomogPoly zero(RingSpec ring, std::uint32_t degree) { return HomogPoly(ring, degree); }
    static HomogPoly one(RingSpec ring) { return monomial(ring, Exponent(ring.num_vars()), 1); }
    static HomogPoly monomial(RingSpec ring, const Exponent& e, std::int64_t coeff = 1) {
        return from_terms(ring, e.degree(), {{e, ring.modulus().reduce(coeff)}});
    }
    static HomogPoly variable(RingSpec ring, std::size_t i) {
        if (i >= ring.num_vars()) throw ShapeError("variable index out of range");
        return monomial(ring, unit_exponent(ring.num_vars(), i));
    }

    /// Builds a polynomial from arbitrary terms: coefficients are reduced,
    /// duplicates combined, zeros dropped. Every exponent must have the given degree.
    static HomogPoly from_terms(RingSpec ring, std::uint32_t degree, std::vector<Term> terms) {
        HomogPoly f(ring, degree);
        for (auto& t : terms) {
            if (t.exponent.size() != ring.num_vars()) throw ShapeError("exponent length does not match ring");
            if (t.exponent.degree() != degree) throw ShapeError("term degree differs from declared degree");
            t.coeff %= ring.p();
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
        for (auto& t : terms) {
            if (!f.terms_.empty() && f.terms_.back().exponent == t.exponent) {
                f.terms_.back().coeff = ring.modulus().add(f.terms_.back().coeff, t.coeff);
            } else {
                f.terms_.push_back(t);
            }
        }
        std::erase_if(f.terms_, [](const Term& t) { return t.coeff == 0; });
        return f;
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::uint32_t degree() const noexcept { return degree_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of x^e (0 if absent).
    std::uint32_t coeff(const Exponent& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponent& x) { return t.exponent > x; });
        return (it != terms_.end() && it->exponent == e) ? it->coeff : 0;
    }

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

   private:
    friend class TermAccumulator;
    RingSpec ring_;
    std::uint32_t degree_;
    std::vector<Term> terms_;
};

/// Sums coefficients of same-degree monomials. Uses a dense array indexed by
/// the first n exponents (the last is implied by the degree) when the box is
/// small enough, and a hash map otherwise.
class TermAccumulator {
   public:
    TermAccumulator(RingSpec ring, std::uint32_t degree, std::uint32_t bound)
        : ring_(ring), degree_(degree), radix_(std::min(bound, degree + 1)) {
        std::uint64_t size = 1;
        for (std::size_t i = 0; i + 1 < ring.num_vars(); ++i) {
            size *= radix_;
            if (size > kDenseLimit) break;
        }
        if (size <= kDenseLimit) dense_.assign(size, 0);
        else use_map_ = true;
    }

    void add(const Exponent& e, std::uint64_t value) {
        if (use_map_) {
            map_[e] += value;
            return;
        }
        std::size_t idx = 0;
        for (std::size_t i = 0; i + 1 < ring_.num_vars(); ++i) idx = idx * radix_ + e[i];
        dense_[idx] += value;
    }

    HomogPoly finish() {
        HomogPoly f(ring_, degree_);
        const auto p = ring_.p();
        if (use_map_) {
            for (auto& [e, v] : map_)
                if (v % p) f.terms_.push_back({e, static_cast<std::uint32_t>(v % p)});
            std::sort(f.terms_.begin(), f.terms_.end(),
                      [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
            return f;
        }
        const std::size_t nv = ring_.num_vars();
        // descending index order is descending lex order at fixed degree
        for (std::size_t idx = dense_.size(); idx-- > 0;) {
            auto v = dense_[idx] % p;
            if (!v) continue;
            Exponent e(nv);
            std::size_t rest = idx;
            std::uint32_t used = 0;
            for (std::size_t i = nv - 1; i-- > 0;) {
                e[i] = static_cast<std::uint32_t>(rest % radix_);
                rest /= radix_;
                used += e[i];
            }
            e[nv - 1] = degree_ - used;
            f.terms_.push_back({e, static_cast<std::uint32_t>(v)});
        }
        return f;
    }

   private:
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
    RingSpec ring_;
    std::uint32_t degree_;
    std::uint32_t radix_;
    bool use_map_ = false;
    std::vector<std::uint64_t> dense_;
    std::unordered_map<Exponent, std::uint64_t, ExponentHash> map_;
};

namespace detail {
inline void require_same_ring(const HomogPoly& f, const HomogPoly& g) {
    if (!(f.ring() == g.ring())) throw ShapeError("polynomials live in different rings");
}
}  // namespace detail

inline HomogPoly scale(const HomogPoly& f, std::int64_t c) {
    const auto& mod = f.ring().modulus();
    auto cc = mod.reduce(c);
    std::vector<Term> terms;
    if (cc != 0)
        for (const auto& t : f.terms()) terms.push_back({t.exponent, mod.mul(t.coeff, cc)});
    return HomogPoly::from_terms(f.ring(), f.degree(), std::move(terms));
}

inline HomogPoly add(const HomogPoly& f, const HomogPoly& g) {
    detail::require_same_ring(f, g);
    if (f.degree() != g.degree()) throw ShapeError("cannot add polynomials of different degrees");
    std::vector<Term> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return HomogPoly::from_terms(f.ring(), f.degree(), std::move(terms));
}

inline HomogPoly sub(const HomogPoly& f, const HomogPoly& g) { return add(f, scale(g, -1)); }

/// Product f*g; with `trunc` = q, terms in (x_0^q, ..., x_n^q) are discarded as
/// they are produced (the result is the product reduced modulo that ideal).
inline HomogPoly mul(const HomogPoly& f, const HomogPoly& g, std::optional<std::uint32_t> trunc = std::nullopt) {
    detail::require_same_ring(f, g);
    if (trunc && *trunc == 0) throw PreconditionError("truncation bound must be positive");
    const auto& ring = f.ring();
    const std::uint32_t degree = f.degree() + g.degree();
    const std::uint32_t bound = trunc ? *trunc : degree + 1;
    const std::uint64_t p = ring.p();

    auto keep = [&](const HomogPoly& h) {
        std::vector<const Term*> out;
        for (const auto& t : h.terms())
            if (!trunc || !exceeds(t.exponent, *trunc)) out.push_back(&t);
        return out;
    };
    auto fs = keep(f), gs = keep(g);
    TermAccumulator acc(ring, degree, bound);
    const std::size_t nv = ring.num_vars();
    for (const Term* a : fs) {
        for (const Term* b : gs) {
            Exponent e = a->exponent + b->exponent;
            if (trunc) {
                bool out = false;
                for (std::size_t i = 0; i < nv; ++i)
                    if (e[i] >= *trunc) {
                        out = true;
                        break;
                    }
                if (out) continue;
            }
            acc.add(e, std::uint64_t{a->coeff} * b->coeff % p);
        }
    }
    return acc.finish();
}

inline HomogPoly operator+(const HomogPoly& f, const HomogPoly& g) { return add(f, g); }
inline HomogPoly operator-(const HomogPoly& f, const HomogPoly& g) { return sub(f, g); }
inline HomogPoly operator*(const HomogPoly& f, const HomogPoly& g) { return mul(f, g); }

/// Termwise map c*x^a -> c*x^(k*a). For k a power of p this is f^k over F_p.
inline HomogPoly stretch_exponents(const HomogPoly& f, std::uint32_t k,
                                   std::optional<std::uint32_t> trunc = std::nullopt) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Exponent e = k * t.exponent;
        if (trunc && exceeds(e, *trunc)) continue;
        terms.push_back({e, t.coeff});
    }
    return HomogPoly::from_terms(f.ring(), f.degree() * k, std::move(terms));
}

/// f^(p^i) by the Frobenius rule.
inline HomogPoly frobenius_power(const HomogPoly& f, std::uint32_t i = 1,
                                 std::optional<std::uint32_t> trunc = std::nullopt) {
    std::uint64_t q = 1;
    for (std::uint32_t k = 0; k < i; ++k) q *= f.ring().p();
    return stretch_exponents(f, static_cast<std::uint32_t>(q), trunc);
}

/// f^k by plain repeated multiplication.
inline HomogPoly pow_naive(const HomogPoly& f, std::uint64_t k, std::optional<std::uint32_t> trunc = std::nullopt) {
    auto acc = HomogPoly::one(f.ring());
    for (std::uint64_t i = 0; i < k; ++i) acc = mul(acc, f, trunc);
    return acc;
}

/// f^k via the base-p expansion k = sum k_i p^i: f^k = prod (f^{k_i})^{[p^i]}.
/// With `trunc` = q every intermediate product is reduced modulo m^[q].
inline HomogPoly pow(const HomogPoly& f, std::uint64_t k, std::optional<std::uint32_t> trunc = std::nullopt) {
    const std::uint64_t p = f.ring().p();
    const std::uint32_t degree = static_cast<std::uint32_t>(f.degree() * k);
    if (trunc && *trunc == 0) throw PreconditionError("truncation bound must be positive");
    auto result = HomogPoly::one(f.ring());
    std::uint64_t scale_pi = 1;  // p^i
    while (k > 0) {
        const std::uint64_t digit = k % p;
        k /= p;
        if (digit) {
            // a term x^a survives stretching by p^i iff p^i * a_j < q for all j
            std::optional<std::uint32_t> inner;
            if (trunc) inner = static_cast<std::uint32_t>((*trunc + scale_pi - 1) / scale_pi);
            auto small = pow_naive(f, digit, inner);
            auto piece = stretch_exponents(small, static_cast<std::uint32_t>(scale_pi), trunc);
            result = mul(result, piece, trunc);
        }
        if (k > 0) {
            scale_pi *= p;
            if (trunc && scale_pi >= *trunc && f.degree() > 0) {
                // every remaining factor is stretched past the bound
                return HomogPoly::zero(f.ring(), degree);
            }
        }
    }
    return result;
}

/// Formal partial derivative with respect to x_i.
inline HomogPoly partial_derivative(const HomogPoly& f, std::size_t i) {
    const auto& ring = f.ring();
    if (i >= ring.num_vars()) throw ShapeError("variable index out of range");
    if (f.degree() == 0) throw PreconditionError("cannot differentiate a constant form");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.exponent[i] == 0) continue;
        Exponent e = t.exponent;
        const auto factor = ring.modulus().reduce(e[i]);
        e[i] -= 1;
        terms.push_back({e, ring.modulus().mul(t.coeff, factor)});
    }
    return HomogPoly::from_terms(ring, f.degree() - 1, std::move(terms));
}

/// Product of a list of forms (1 for the empty list).
inline HomogPoly product(RingSpec ring, std::span<const HomogPoly> fs,
                         std::optional<std::uint32_t> trunc = std::nullopt) {
    auto acc = HomogPoly::one(ring);
    for (const auto& f : fs) acc = mul(acc, f, trunc);
    return acc;
}

}  // namespace frobthick

#endif
