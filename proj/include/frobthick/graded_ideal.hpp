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

#ifndef FROBTHICK_GRADED_IDEAL_HPP
#define FROBTHICK_GRADED_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "fp_matrix.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace frobthick {

/// Homogeneous ideal given by nonzero homogeneous generators.
class HomogIdeal {
   public:
    HomogIdeal(RingSpec ring, std::vector<HomogPoly> generators) : ring_(ring), gens_(std::move(generators)) {
        for (const auto& g : gens_) {
            if (!(g.ring() == ring_)) throw ShapeError("generator from a different ring");
            if (g.is_zero()) throw PreconditionError("ideal generators must be nonzero");
        }
    }

    const RingSpec& ring() const noexcept { return ring_; }
    const std::vector<HomogPoly>& generators() const noexcept { return gens_; }

    HomogIdeal plus(const HomogIdeal& other) const {
        if (!(other.ring_ == ring_)) throw ShapeError("ideals in different rings");
        auto gens = gens_;
        gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
        return HomogIdeal(ring_, std::move(gens));
    }

   private:
    RingSpec ring_;
    std::vector<HomogPoly> gens_;
};

/// [I]_D as an explicit spanning matrix: the columns are the coordinates of
/// g * x^a over all generators g and monomials x^a of degree D - deg g, on the
/// descending graded-lex basis of degree-D monomials.
struct GradedPiece {
    std::uint32_t degree;
    std::vector<Exponent> basis;
    FpMatrix span;
};

inline GradedPiece graded_piece(const HomogIdeal& ideal, std::uint32_t D) {
    const auto& ring = ideal.ring();
    auto basis = enumerate_monomials(ring.num_vars(), D);
    MonomialIndex index(basis);
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& g : ideal.generators()) {
        if (g.degree() > D) continue;
        for (const auto& u : enumerate_monomials(ring.num_vars(), D - g.degree())) {
            std::vector<std::uint32_t> col(basis.size(), 0);
            for (const auto& t : g.terms()) col[*index.find(t.exponent + u)] = t.coeff;
            cols.push_back(std::move(col));
        }
    }
    FpMatrix span(ring.modulus(), basis.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < basis.size(); ++r) span.set(r, c, cols[c][r]);
    return GradedPiece{D, std::move(basis), std::move(span)};
}

namespace detail {

// Degree-D slice of I worked modulo the monomial generators of I: coordinates
// are the degree-D monomials outside that monomial ideal M, and the remaining
// generators contribute g * x^u reduced mod M. Since M_D is spanned by
// monomials, dim [S/I]_D = #coordinates - rank of the reduced vectors.
class ReducedSlice {
   public:
    ReducedSlice(const HomogIdeal& ideal, std::uint32_t D) : ring_(ideal.ring()), degree_(D) {
        std::vector<Exponent> mono_gens;
        for (const auto& g : ideal.generators()) {
            if (g.size() == 1) mono_gens.push_back(g.terms().front().exponent);
            else others_.push_back(&g);
        }
        monomial_part_ = MonomialIdeal(ring_.num_vars(), std::move(mono_gens));
        for (const auto& m : enumerate_monomials(ring_.num_vars(), D))
            if (!monomial_part_.contains(m)) coords_.push_back(m);
        index_.emplace(coords_);
        echelon_.emplace(ring_.modulus(), coords_.size());
    }

    std::size_t dim() const noexcept { return coords_.size(); }
    std::size_t rank() const noexcept { return echelon_->rank(); }

    /// Coordinates of f reduced mod the monomial part (f must have degree D).
    std::vector<std::uint32_t> coordinates(const HomogPoly& f) const {
        std::vector<std::uint32_t> v(coords_.size(), 0);
        for (const auto& t : f.terms())
            if (auto i = index_->find(t.exponent)) v[*i] = t.coeff;
        return v;
    }

    /// Inserts spanning vectors until exhausted or `stop` returns true
    /// (checked every `check_every` insertions). Returns whether it stopped early.
    template <class Stop>
    bool fill(Stop&& stop, std::size_t check_every = 256) {
        std::size_t since = 0;
        std::vector<std::uint32_t> v(coords_.size());
        for (const HomogPoly* g : others_) {
            if (g->degree() > degree_) continue;
            for (const auto& u : enumerate_monomials(ring_.num_vars(), degree_ - g->degree())) {
                if (echelon_->full()) return true;
                std::fill(v.begin(), v.end(), 0);
                bool any = false;
                for (const auto& t : g->terms()) {
                    if (auto i = index_->find(t.exponent + u)) {
                        v[*i] = t.coeff;
                        any = true;
                    }
                }
                if (!any) continue;
                echelon_->insert(v);
                if (++since >= check_every) {
                    since = 0;
                    if (stop(*echelon_)) return true;
                }
            }
        }
        return false;
    }

    RowEchelon& echelon() { return *echelon_; }

   private:
    RingSpec ring_;
    std::uint32_t degree_;
    std::vector<const HomogPoly*> others_;
    MonomialIdeal monomial_part_{1};
    std::vector<Exponent> coords_;
    std::optional<MonomialIndex> index_;
    std::optional<RowEchelon> echelon_;
};

}  // namespace detail

/// Whether f lies in I, decided by linear algebra in degree deg f.
inline bool membership(const HomogPoly& f, const HomogIdeal& ideal) {
    if (!(f.ring() == ideal.ring())) throw ShapeError("polynomial and ideal in different rings");
    if (f.is_zero()) return true;
    detail::ReducedSlice slice(ideal, f.degree());
    auto target = slice.coordinates(f);
    if (std::all_of(target.begin(), target.end(), [](auto x) { return x == 0; })) return true;
    slice.fill([&](RowEchelon& e) { return e.contains(target); });
    return slice.echelon().contains(target);
}

/// dim_F [S/I]_D.
inline std::size_t hilbert_function(const HomogIdeal& ideal, std::uint32_t D) {
    detail::ReducedSlice slice(ideal, D);
    slice.fill([](RowEchelon&) { return false; });
    return slice.dim() - slice.rank();
}

/// m^N is contained in I iff [S/I]_N = 0 (a vanishing piece of a standard
/// graded quotient forces all higher pieces to vanish).
inline bool contains_power_of_max_ideal(const HomogIdeal& ideal, std::uint32_t N) {
    return hilbert_function(ideal, N) == 0;
}

/// Least D <= max_degree with [S/I]_D = 0, if any.
inline std::optional<std::uint32_t> first_vanishing_degree(const HomogIdeal& ideal, std::uint32_t max_degree) {
    for (std::uint32_t D = 0; D <= max_degree; ++D)
        if (hilbert_function(ideal, D) == 0) return D;
    return std::nullopt;
}

namespace detail {

inline HomogPoly determinant(const std::vector<std::vector<HomogPoly>>& m, RingSpec ring, std::uint32_t degree) {
    const std::size_t c = m.size();
    std::vector<std::size_t> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    auto acc = HomogPoly::zero(ring, degree);
    do {
        // sign from the inversion count
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = i + 1; j < c; ++j)
                if (perm[i] > perm[j]) ++inversions;
        auto term = HomogPoly::one(ring);
        for (std::size_t i = 0; i < c; ++i) term = mul(term, m[i][perm[i]]);
        acc = add(acc, inversions % 2 ? scale(term, -1) : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace detail

/// Ideal of the c x c minors of the (n+1) x c matrix (d f_j / d x_i). Zero
/// minors are dropped, so the result may be the zero ideal.
inline HomogIdeal jacobian_ideal(std::span<const HomogPoly> fs) {
    if (fs.empty()) throw ShapeError("jacobian ideal of an empty list");
    const auto ring = fs.front().ring();
    const std::size_t c = fs.size(), nv = ring.num_vars();
    if (c > nv) throw ShapeError("more forms than variables");
    std::vector<std::vector<HomogPoly>> partials(nv);  // [i][j] = d f_j / d x_i
    std::uint32_t minor_degree = 0;
    for (const auto& f : fs) {
        if (!(f.ring() == ring)) throw ShapeError("forms from different rings");
        minor_degree += f.degree() - 1;
    }
    for (std::size_t i = 0; i < nv; ++i)
        for (const auto& f : fs) partials[i].push_back(partial_derivative(f, i));

    std::vector<HomogPoly> minors;
    std::vector<bool> pick(nv, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(c), true);
    do {
        std::vector<std::vector<HomogPoly>> sub;
        for (std::size_t i = 0; i < nv; ++i)
            if (pick[i]) sub.push_back(partials[i]);
        auto det = detail::determinant(sub, ring, minor_degree);
        if (!det.is_zero()) minors.push_back(std::move(det));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return HomogIdeal(ring, std::move(minors));
}

/// Degree by which J + (f_1..f_c) must contain a power of m when the
/// projective complete intersection is smooth:
/// sum(d_i - 1) + (n+1-c)(d-c-1) + 1, clamped at 0.
inline std::uint32_t smoothness_degree_bound(std::size_t n, std::span<const std::uint32_t> degrees) {
    const std::int64_t c = static_cast<std::int64_t>(degrees.size());
    std::int64_t d = 0, s = 0;
    for (auto di : degrees) {
        d += di;
        s += static_cast<std::int64_t>(di) - 1;
    }
    const std::int64_t B = s + (static_cast<std::int64_t>(n) + 1 - c) * (d - c - 1) + 1;
    return static_cast<std::uint32_t>(std::max<std::int64_t>(B, 0));
}

/// Jacobian criterion certificate: J + I contains m^B for the bound above.
/// The forms are assumed to be a regular sequence (see regular_sequence_probe).
inline bool is_smooth_projective_ci(std::span<const HomogPoly> fs) {
    auto jac = jacobian_ideal(fs);
    if (jac.generators().empty()) return false;
    std::vector<std::uint32_t> degrees;
    for (const auto& f : fs) degrees.push_back(f.degree());
    const auto& ring = fs.front().ring();
    auto ideal = jac.plus(HomogIdeal(ring, std::vector<HomogPoly>(fs.begin(), fs.end())));
    return contains_power_of_max_ideal(ideal, smoothness_degree_bound(ring.n(), degrees));
}

/// Coefficients of prod(1 - t^{d_i}) / (1 - t)^{n+1} up to max_degree: the
/// Hilbert function of a complete intersection with these degrees.
inline std::vector<std::int64_t> complete_intersection_hilbert(std::size_t num_vars,
                                                               std::span<const std::uint32_t> degrees,
                                                               std::uint32_t max_degree) {
    std::vector<std::int64_t> num(max_degree + 1, 0);
    num[0] = 1;
    for (auto di : degrees)
        for (std::size_t k = max_degree + 1; k-- > di;) num[k] -= num[k - di];
    std::vector<std::int64_t> out(max_degree + 1, 0);
    for (std::uint32_t D = 0; D <= max_degree; ++D)
        for (std::uint32_t k = 0; k <= D; ++k)
            out[D] += num[k] * static_cast<std::int64_t>(binomial(D - k + num_vars - 1, num_vars - 1));
    return out;
}

/// Heuristic regular-sequence check: the Hilbert function of S/(f_1..f_c)
/// matches that of a complete intersection of the same degrees in every
/// degree up to max_degree (default 2 * sum of degrees). Agreement in all
/// degrees is equivalent to regularity; a finite window is only a probe.
inline bool regular_sequence_probe(std::span<const HomogPoly> fs, std::optional<std::uint32_t> max_degree = {}) {
    if (fs.empty()) return true;
    const auto& ring = fs.front().ring();
    std::vector<std::uint32_t> degrees;
    std::uint32_t d = 0;
    for (const auto& f : fs) {
        degrees.push_back(f.degree());
        d += f.degree();
    }
    const auto top = max_degree.value_or(2 * d);
    auto expected = complete_intersection_hilbert(ring.num_vars(), degrees, top);
    HomogIdeal ideal(ring, std::vector<HomogPoly>(fs.begin(), fs.end()));
    for (std::uint32_t D = 0; D <= top; ++D)
        if (static_cast<std::int64_t>(hilbert_function(ideal, D)) != expected[D]) return false;
    return true;
}

/// Whether (f_1..f_c)^t lies in (f_1^{t0}, ..., f_c^{t0}).
///
/// Decided by pigeonhole: every product f^a with |a| = t has some a_i >= t0
/// exactly when t >= c(t0 - 1) + 1. When `cross_check_limit` is nonzero, up to
/// that many products f^a are also tested by degreewise membership (for a
/// regular sequence f^a is in the ideal iff some a_i >= t0), and a
/// disagreement raises InvariantViolation.
inline bool power_containment(std::span<const HomogPoly> fs, std::uint32_t t, std::uint32_t t0,
                              std::size_t cross_check_limit = 32) {
    if (t < 1 || t0 < 1) throw PreconditionError("t and t0 must be positive");
    if (fs.empty()) throw ShapeError("empty generator list");
    const std::size_t c = fs.size();
    const bool verdict = t >= c * (t0 - 1) + 1;
    if (cross_check_limit == 0) return verdict;

    const auto& ring = fs.front().ring();
    std::vector<HomogPoly> powered;
    for (const auto& f : fs) powered.push_back(pow(f, t0));
    HomogIdeal target(ring, powered);

    std::size_t checked = 0;
    std::vector<std::uint32_t> a(c, 0);
    // compositions of t into c nonnegative parts, witnesses (all a_i < t0) first
    std::vector<std::vector<std::uint32_t>> tuples;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == c) {
            a[i] = left;
            tuples.push_back(a);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, t);
    std::stable_partition(tuples.begin(), tuples.end(), [&](const auto& tup) {
        return std::all_of(tup.begin(), tup.end(), [&](auto x) { return x < t0; });
    });
    for (const auto& tup : tuples) {
        if (checked++ >= cross_check_limit) break;
        auto prod = HomogPoly::one(ring);
        for (std::size_t i = 0; i < c; ++i) prod = mul(prod, pow(fs[i], tup[i]));
        const bool expected = std::any_of(tup.begin(), tup.end(), [&](auto x) { return x >= t0; });
        if (membership(prod, target) != expected)
            throw InvariantViolation("power containment cross-check disagrees with pigeonhole count");
    }
    return verdict;
}

}  // namespace frobthick

#endif
