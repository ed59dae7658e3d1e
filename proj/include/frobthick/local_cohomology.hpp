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

#ifndef FROBTHICK_LOCAL_COHOMOLOGY_HPP
#define FROBTHICK_LOCAL_COHOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "errors.hpp"
#include "fp_matrix.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace frobthick {

/// Graded piece [H^{n+1}_m(S)]_m of the top local cohomology of S.
class CohomologyPiece {
   public:
    CohomologyPiece(RingSpec ring, std::int64_t internal_degree) : ring_(ring), m_(internal_degree) {}

    const RingSpec& ring() const noexcept { return ring_; }
    std::int64_t internal_degree() const noexcept { return m_; }

    /// C(-m-1, n); zero unless m <= -(n+1).
    std::size_t dimension() const {
        const auto n = static_cast<std::int64_t>(ring_.n());
        if (m_ > -(n + 1)) return 0;
        return static_cast<std::size_t>(binomial(-m_ - 1, n));
    }
    bool is_zero() const { return dimension() == 0; }

    /// Smallest level at which every standard class has a monomial numerator.
    std::uint32_t min_level() const {
        const auto n = static_cast<std::int64_t>(ring_.n());
        return static_cast<std::uint32_t>(std::max<std::int64_t>(1, -m_ - n));
    }

    /// Numerator degree (n+1)e + m of a class at level e.
    std::int64_t numerator_degree(std::uint32_t e) const {
        return static_cast<std::int64_t>(ring_.num_vars()) * e + m_;
    }

    /// Quotient coordinates at level e: monomials of degree (n+1)e + m with
    /// every exponent below e, in descending graded-lex order. These are the
    /// numerators x^{e(1,...,1) - a} of the standard classes.
    std::vector<Exponent> basis(std::uint32_t e) const {
        if (e < 1) throw LevelError("level must be at least 1");
        if (is_zero()) return {};
        if (e < min_level()) throw LevelError("level below the minimal faithful level of the piece");
        return enumerate_monomials(ring_.num_vars(), static_cast<std::uint32_t>(numerator_degree(e)), e);
    }

    friend bool operator==(const CohomologyPiece&, const CohomologyPiece&) = default;

   private:
    RingSpec ring_;
    std::int64_t m_;
};

/// Class [s / (x_0...x_n)^e] in H^{n+1}_m(S). The numerator is kept reduced
/// modulo m^[e], so two classes at the same level are equal iff their
/// numerators are.
class CechClass {
   public:
    CechClass(HomogPoly numerator, std::uint32_t level)
        : numerator_(reduce_mod_bracket(numerator, check_level(level))), level_(level) {}

    const RingSpec& ring() const noexcept { return numerator_.ring(); }
    const HomogPoly& numerator() const noexcept { return numerator_; }
    std::uint32_t level() const noexcept { return level_; }
    std::int64_t internal_degree() const {
        return static_cast<std::int64_t>(numerator_.degree()) -
               static_cast<std::int64_t>(ring().num_vars()) * level_;
    }
    CohomologyPiece piece() const { return CohomologyPiece(ring(), internal_degree()); }

    friend bool operator==(const CechClass&, const CechClass&) = default;

   private:
    static std::uint32_t check_level(std::uint32_t e) {
        if (e < 1) throw LevelError("level must be at least 1");
        return e;
    }

    HomogPoly numerator_;
    std::uint32_t level_;
};

/// Standard basis classes [x^{-a}] (a_i >= 1, sum a = -m) at the minimal level.
inline std::vector<CechClass> std_basis(const CohomologyPiece& piece) {
    std::vector<CechClass> out;
    if (piece.is_zero()) return out;
    const auto e = piece.min_level();
    for (const auto& mono : piece.basis(e)) out.emplace_back(HomogPoly::monomial(piece.ring(), mono), e);
    return out;
}

inline bool is_zero(const CechClass& c) { return c.numerator().is_zero(); }

/// Image under the transition map to level e_new: s -> s * (x_0...x_n)^{e_new - e}.
inline CechClass raise_level(const CechClass& c, std::uint32_t e_new) {
    if (e_new < c.level()) throw LevelError("cannot lower the level of a class");
    const auto nv = c.ring().num_vars();
    Exponent shift(nv);
    for (std::size_t i = 0; i < nv; ++i) shift[i] = e_new - c.level();
    std::vector<Term> terms;
    for (const auto& t : c.numerator().terms()) terms.push_back({t.exponent + shift, t.coeff});
    auto s = HomogPoly::from_terms(c.ring(), c.numerator().degree() + shift.degree(), std::move(terms));
    return CechClass(std::move(s), e_new);
}

/// Frobenius: [s / x^e] -> [s^p / x^{ep}].
inline CechClass frobenius(const CechClass& c) {
    const auto q = c.level() * c.ring().p();
    return CechClass(stretch_exponents(c.numerator(), c.ring().p(), q), q);
}

/// g * [s / x^e] = [g s / x^e].
inline CechClass multiply(const HomogPoly& g, const CechClass& c) {
    if (!(g.ring() == c.ring())) throw ShapeError("polynomial and class in different rings");
    return CechClass(mul(g, c.numerator(), c.level()), c.level());
}

/// Sum of two classes of the same internal degree, taken at the larger level.
inline CechClass add(const CechClass& a, const CechClass& b) {
    if (a.internal_degree() != b.internal_degree()) throw ShapeError("classes of different internal degree");
    const auto e = std::max(a.level(), b.level());
    return CechClass(add(raise_level(a, e).numerator(), raise_level(b, e).numerator()), e);
}

/// Coordinates of c on piece.basis(e); the class is raised to level e first.
inline std::vector<std::uint32_t> coordinates(const CechClass& c, std::uint32_t e) {
    auto piece = c.piece();
    auto basis = piece.basis(e);
    std::vector<std::uint32_t> v(basis.size(), 0);
    if (basis.empty()) return v;
    MonomialIndex index(basis);
    const auto raised = raise_level(c, e);
    for (const auto& t : raised.numerator().terms()) v[*index.find(t.exponent)] = t.coeff;
    return v;
}

/// Class with the given coordinates on piece.basis(e).
inline CechClass from_coordinates(const CohomologyPiece& piece, std::uint32_t e, std::span<const std::uint32_t> v) {
    auto basis = piece.basis(e);
    if (v.size() != basis.size()) throw ShapeError("coordinate vector length does not match the piece");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] % piece.ring().p()) terms.push_back({basis[i], v[i]});
    const auto deg = piece.numerator_degree(e);
    if (deg < 0) return CechClass(HomogPoly::zero(piece.ring(), 0), e);  // only reachable for empty bases
    return CechClass(HomogPoly::from_terms(piece.ring(), static_cast<std::uint32_t>(deg), std::move(terms)), e);
}

/// Subspace of a piece, given by independent coordinate columns at a level.
struct Subspace {
    CohomologyPiece piece;
    std::uint32_t level;
    FpMatrix basis;  ///< piece.basis(level).size() x dim

    std::size_t dim() const noexcept { return basis.cols(); }

    CechClass element(std::size_t k) const {
        auto col = basis.column(k);
        return from_coordinates(piece, level, col);
    }
};

/// Matrix of multiplication by g from piece m to piece m + deg g, both on
/// their level-e quotient coordinates.
inline FpMatrix multiplication_matrix(const HomogPoly& g, const CohomologyPiece& piece, std::uint32_t e) {
    const auto& ring = piece.ring();
    if (!(g.ring() == ring)) throw ShapeError("polynomial and piece in different rings");
    CohomologyPiece target(ring, piece.internal_degree() + g.degree());
    auto src = piece.basis(e);
    auto dst = target.is_zero() ? std::vector<Exponent>{} : target.basis(e);
    FpMatrix out(ring.modulus(), dst.size(), src.size());
    if (dst.empty() || src.empty()) return out;
    MonomialIndex index(dst);
    for (std::size_t col = 0; col < src.size(); ++col) {
        for (const auto& t : g.terms()) {
            auto mono = t.exponent + src[col];
            if (exceeds(mono, e)) continue;
            out.add_to(*index.find(mono), col, t.coeff);
        }
    }
    return out;
}

/// {eta in the piece : f_i eta = 0 for all i}, as the joint kernel of the
/// multiplication matrices at level e.
inline Subspace annihilator_subspace(std::span<const HomogPoly> fs, const CohomologyPiece& piece, std::uint32_t e) {
    const auto& mod = piece.ring().modulus();
    const auto dim = piece.basis(e).size();
    std::vector<FpMatrix> blocks;
    std::size_t rows = 0;
    for (const auto& f : fs) {
        blocks.push_back(multiplication_matrix(f, piece, e));
        rows += blocks.back().rows();
    }
    if (rows == 0) return Subspace{piece, e, FpMatrix::identity(mod, dim)};
    FpMatrix stacked(mod, rows, dim);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < dim; ++c) stacked.set(r0 + r, c, b(r, c));
        r0 += b.rows();
    }
    return Subspace{piece, e, rref(stacked).kernel_basis};
}

}  // namespace frobthick

#endif
