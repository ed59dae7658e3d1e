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

#ifndef FROBTHICK_ANALYZER_HPP
#define FROBTHICK_ANALYZER_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "fp_matrix.hpp"
#include "graded_ideal.hpp"
#include "local_cohomology.hpp"
#include "polynomial.hpp"

namespace frobthick {

/// Projective scheme Proj S/(f_1, ..., f_c) with 1 <= c <= n.
class Variety {
   public:
    explicit Variety(std::vector<HomogPoly> generators) : gens_(std::move(generators)) {
        if (gens_.empty()) throw ShapeError("a variety needs at least one generator");
        const auto& ring = gens_.front().ring();
        if (gens_.size() > ring.n()) throw ShapeError("codimension must be at most n");
        for (const auto& g : gens_) {
            if (!(g.ring() == ring)) throw ShapeError("generators from different rings");
            if (g.is_zero()) throw PreconditionError("generators must be nonzero");
            if (g.degree() == 0) throw PreconditionError("generators must have positive degree");
        }
    }

    const RingSpec& ring() const noexcept { return gens_.front().ring(); }
    const std::vector<HomogPoly>& generators() const noexcept { return gens_; }
    std::size_t codim() const noexcept { return gens_.size(); }
    std::vector<std::uint32_t> degrees() const {
        std::vector<std::uint32_t> d;
        for (const auto& g : gens_) d.push_back(g.degree());
        return d;
    }
    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& g : gens_) d += g.degree();
        return d;
    }

    /// Cached Jacobian-criterion certificate.
    bool smooth() const {
        if (!smooth_) smooth_ = is_smooth_projective_ci(gens_);
        return *smooth_;
    }
    const std::optional<bool>& smooth_certificate() const noexcept { return smooth_; }

   private:
    std::vector<HomogPoly> gens_;
    mutable std::optional<bool> smooth_;
};

enum class ThickeningMode { bracket, power };

inline const char* to_string(ThickeningMode m) { return m == ThickeningMode::bracket ? "bracket" : "power"; }

struct ThickeningQuery {
    std::uint32_t t = 1;
    std::int64_t twist = 0;
    ThickeningMode mode = ThickeningMode::bracket;
    std::optional<std::uint32_t> level;  ///< domain level; defaults to max(1, d - j - n)
};

struct InjectivityReport {
    ThickeningQuery query;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t rank = 0;
    bool injective = true;
    bool codomain_zero = false;
    std::optional<CechClass> kernel_witness;
    std::uint32_t level = 1;
    double elapsed_ms = 0;
};

/// Everything needed to evaluate eta -> (f_1...f_c)^{p-t} F(eta) on one
/// graded piece.
struct ThickeningMap {
    Subspace domain;             ///< annihilator in piece j - d at level e
    CohomologyPiece codomain;    ///< piece pj - dt, evaluated at level e p
    std::uint32_t codomain_level;
    HomogPoly multiplier;        ///< (f_1...f_c)^{p-t} reduced mod m^[ep]
    FpMatrix matrix;             ///< rows: codomain coordinates that occur; cols: domain basis
};

namespace detail {

inline void check_query(const Variety& v, const ThickeningQuery& q) {
    const auto p = v.ring().p();
    if (q.t < 1) throw PreconditionError("thickening exponent t must be at least 1");
    if (q.t > p) throw PreconditionError("thickening exponent t must not exceed p");
    if (q.mode == ThickeningMode::power && v.codim() > 1)
        throw PreconditionError("power mode is only available for hypersurfaces");
}

inline std::uint32_t default_level(const Variety& v, std::int64_t twist) {
    return CohomologyPiece(v.ring(), twist - static_cast<std::int64_t>(v.total_degree())).min_level();
}

}  // namespace detail

/// Builds the map of the thickening query. Matrix rows are only the codomain
/// coordinates hit by some domain basis vector; the omitted rows are zero.
inline ThickeningMap thickening_map(const Variety& v, const ThickeningQuery& q) {
    detail::check_query(v, q);
    const auto& ring = v.ring();
    const std::uint32_t p = ring.p();
    const auto n = static_cast<std::int64_t>(ring.n());
    const auto d = static_cast<std::int64_t>(v.total_degree());
    const std::int64_t j = q.twist;

    CohomologyPiece source(ring, j - d);
    const std::uint32_t e_min = source.min_level();
    const std::uint32_t e = q.level.value_or(e_min);
    if (e < e_min) throw LevelError("requested level is below the minimal faithful level");
    const std::uint32_t ep = e * p;

    Subspace domain = (v.codim() == 1 && j >= -n)
                          ? Subspace{source, e, FpMatrix::identity(ring.modulus(), source.basis(e).size())}
                          : annihilator_subspace(v.generators(), source, e);

    CohomologyPiece target(ring, static_cast<std::int64_t>(p) * j - d * q.t);
    auto multiplier = pow(product(ring, v.generators(), ep), p - q.t, ep);

    auto src = source.basis(e);
    std::unordered_map<Exponent, std::size_t, ExponentHash> row_of;
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> cols(src.size());
    if (!target.is_zero()) {
        for (std::size_t c = 0; c < src.size(); ++c) {
            const Exponent pu = p * src[c];
            for (const auto& term : multiplier.terms()) {
                Exponent mono = term.exponent + pu;
                if (exceeds(mono, ep)) continue;
                auto [it, fresh] = row_of.try_emplace(mono, row_of.size());
                cols[c].emplace_back(it->second, term.coeff);
            }
        }
    }
    FpMatrix full(ring.modulus(), row_of.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
        for (auto [r, val] : cols[c]) full.add_to(r, c, val);

    FpMatrix matrix = full * domain.basis;
    return ThickeningMap{std::move(domain), target, ep, std::move(multiplier), std::move(matrix)};
}

/// Matrix of the thickening map from the annihilator basis to the codomain
/// coordinates that occur.
inline FpMatrix thickening_matrix(const Variety& v, const ThickeningQuery& q) { return thickening_map(v, q).matrix; }

/// Decides injectivity. A non-injective verdict carries a kernel class that
/// is re-checked by direct class arithmetic.
inline InjectivityReport is_injective(const Variety& v, const ThickeningQuery& q) {
    const auto start = std::chrono::steady_clock::now();
    auto map = thickening_map(v, q);
    InjectivityReport rep;
    rep.query = q;
    rep.level = map.domain.level;
    rep.domain_dim = map.domain.dim();
    rep.codomain_dim = map.codomain.dimension();
    rep.codomain_zero = rep.codomain_dim == 0 && rep.domain_dim > 0;

    auto red = rref(map.matrix);
    rep.rank = red.rank;
    rep.injective = rep.rank == rep.domain_dim;
    if (!rep.injective) {
        auto kernel = red.kernel_basis.column(0);
        auto coords = map.domain.basis * std::span<const std::uint32_t>(kernel);
        auto witness = from_coordinates(map.domain.piece, map.domain.level, coords);
        if (is_zero(witness)) throw InvariantViolation("kernel vector maps to the zero class");
        for (const auto& f : v.generators())
            if (!is_zero(multiply(f, witness))) throw InvariantViolation("kernel witness is not annihilated");
        if (!is_zero(multiply(map.multiplier, frobenius(witness))))
            throw InvariantViolation("kernel witness has a nonzero image");
        rep.kernel_witness = std::move(witness);
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// Least t in [1, p] for which the twist-j map is injective, by binary search
/// over the up-set of injective t. With `validate`, every t is evaluated and
/// a set that is not an up-set raises InvariantViolation.
inline std::optional<std::uint32_t> minimal_t(const Variety& v, std::int64_t twist = 0, bool validate = false,
                                              ThickeningMode mode = ThickeningMode::bracket) {
    const std::uint32_t p = v.ring().p();
    auto inj = [&](std::uint32_t t) { return is_injective(v, ThickeningQuery{t, twist, mode, {}}).injective; };
    std::optional<std::uint32_t> found;
    if (inj(p)) {
        std::uint32_t lo = 1, hi = p;  // hi injective
        while (lo < hi) {
            const std::uint32_t mid = lo + (hi - lo) / 2;
            if (inj(mid)) hi = mid;
            else lo = mid + 1;
        }
        found = hi;
    }
    if (validate) {
        std::optional<std::uint32_t> scanned;
        for (std::uint32_t t = 1; t <= p; ++t) {
            const bool ok = inj(t);
            if (ok && !scanned) scanned = t;
            if (!ok && scanned) throw InvariantViolation("injective exponents do not form an up-set");
        }
        if (scanned != found) throw InvariantViolation("binary search disagrees with the full scan");
    }
    return found;
}

/// nu_f(p^e) = max{k >= 0 : f^k not in m^[p^e]}.
inline std::uint64_t nu(const HomogPoly& f, std::uint32_t e) {
    if (e < 1) throw PreconditionError("exponent e must be at least 1");
    if (f.is_zero() || f.degree() == 0) throw PreconditionError("f must be a nonzero form of positive degree");
    const auto& ring = f.ring();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= ring.p();
        if (q > (std::uint64_t{1} << 31)) throw PreconditionError("p^e too large");
    }
    const auto qq = static_cast<std::uint32_t>(q);
    // f^k outside m^[q] needs a monomial of degree k deg f with all exponents < q
    std::uint64_t lo = 0, hi = ring.num_vars() * (q - 1) / f.degree();
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (!pow(f, mid, qq).is_zero()) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

/// nu_f(p^e) / p^e in lowest terms.
inline Rational fpt_estimate(const HomogPoly& f, std::uint32_t e) {
    const auto k = nu(f, e);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= f.ring().p();
    const auto g = std::gcd(k, q);
    return Rational{k / g, q / g};
}

/// Least t0 >= 1 with t0 * min d_i >= (n+1-c)(d-c) + 1.
inline std::uint32_t ci_bound_t0(std::size_t n, std::span<const std::uint32_t> degrees) {
    if (degrees.empty()) throw PreconditionError("need at least one degree");
    const auto c = static_cast<std::int64_t>(degrees.size());
    std::int64_t d = 0, dmin = degrees.front();
    for (auto di : degrees) {
        if (di < 1) throw PreconditionError("degrees must be positive");
        d += di;
        dmin = std::min<std::int64_t>(dmin, di);
    }
    const std::int64_t need = (static_cast<std::int64_t>(n) + 1 - c) * (d - c) + 1;
    return static_cast<std::uint32_t>(std::max<std::int64_t>(1, (need + dmin - 1) / dmin));
}

/// c(t0 - 1) + 1.
inline std::uint32_t ordinary_power_bound(std::uint32_t c, std::uint32_t t0) {
    if (c < 1 || t0 < 1) throw PreconditionError("c and t0 must be positive");
    return c * (t0 - 1) + 1;
}

/// x_0^d + ... + x_n^d.
inline HomogPoly fermat_form(const RingSpec& ring, std::uint32_t d) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < ring.num_vars(); ++i) terms.push_back({d * unit_exponent(ring.num_vars(), i), 1});
    return HomogPoly::from_terms(ring, d, std::move(terms));
}

/// Form of degree d with independent uniform coefficients.
inline HomogPoly random_form(const RingSpec& ring, std::uint32_t d, std::mt19937_64& rng) {
    std::vector<Term> terms;
    for (const auto& mono : enumerate_monomials(ring.num_vars(), d))
        terms.push_back({mono, static_cast<std::uint32_t>(rng() % ring.p())});
    return HomogPoly::from_terms(ring, d, std::move(terms));
}

/// Draws random forms until one has a smoothness certificate.
inline HomogPoly random_smooth_form(const RingSpec& ring, std::uint32_t d, std::mt19937_64& rng,
                                    std::size_t max_tries = 1000) {
    for (std::size_t i = 0; i < max_tries; ++i) {
        auto f = random_form(ring, d, rng);
        if (f.is_zero()) continue;
        std::vector<HomogPoly> one{f};
        if (is_smooth_projective_ci(one)) return f;
    }
    throw PreconditionError("no smooth form found within the try budget");
}

}  // namespace frobthick

#endif
