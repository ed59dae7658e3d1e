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

#include <gtest/gtest.h>

#include <random>

#include "frobthick/analyzer.hpp"
#include "frobthick/graded_ideal.hpp"
#include "frobthick/monomial_ideal.hpp"
#include "frobthick/parser.hpp"
#include "support/oracles.hpp"

using namespace frobthick;

namespace {

HomogPoly P(const char* text, const RingSpec& r) { return parse_poly(text, r); }

HomogIdeal ideal_of(const RingSpec& r, std::initializer_list<const char*> gens) {
    std::vector<HomogPoly> fs;
    for (auto g : gens) fs.push_back(P(g, r));
    return HomogIdeal(r, fs);
}

HomogIdeal jacobian_plus(const std::vector<HomogPoly>& fs) {
    return jacobian_ideal(fs).plus(HomogIdeal(fs.front().ring(), fs));
}

std::vector<oracle::Poly> oracle_gens(const HomogIdeal& I) {
    std::vector<oracle::Poly> out;
    for (const auto& g : I.generators()) out.push_back(oracle::from(g));
    return out;
}

}  // namespace

TEST(HomogIdeal, RejectsZeroGenerators) {
    RingSpec r(3, 5);
    EXPECT_THROW(HomogIdeal(r, {HomogPoly::zero(r, 2)}), PreconditionError);
    EXPECT_THROW(HomogIdeal(r, {P("x0", RingSpec(2, 5))}), ShapeError);
}

TEST(Membership, Examples) {
    RingSpec r(3, 5);
    auto f = P("x0^3 + x1^3 + x2^3", r);
    HomogIdeal I(r, {P("x1^5", r), P("x2^5", r), f});
    EXPECT_TRUE(membership(P("x0^10", r), I));
    EXPECT_FALSE(membership(P("x0", r), ideal_of(r, {"x1"})));
    EXPECT_TRUE(membership(f, HomogIdeal(r, {f})));
    EXPECT_TRUE(membership(HomogPoly::zero(r, 4), ideal_of(r, {"x1"})));
    EXPECT_FALSE(membership(P("x0^2", r), ideal_of(r, {"x0^3"})));
}

TEST(Membership, AgreesWithMonomialIdealWhenGeneratorsAreMonomials) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        RingSpec r(2 + rng() % 2, 5);
        std::vector<HomogPoly> gens;
        std::vector<Exponent> monos;
        for (int k = 0; k < 3; ++k) {
            auto all = enumerate_monomials(r.num_vars(), 1 + rng() % 3);
            auto m = all[rng() % all.size()];
            monos.push_back(m);
            gens.push_back(HomogPoly::monomial(r, m, 1 + rng() % 4));
        }
        HomogIdeal I(r, gens);
        MonomialIdeal M(r.num_vars(), monos);
        for (const auto& m : enumerate_monomials(r.num_vars(), 4))
            EXPECT_EQ(membership(HomogPoly::monomial(r, m), I), M.contains(m));
    }
}

TEST(HilbertFunction, Examples) {
    RingSpec r(3, 5);
    EXPECT_EQ(hilbert_function(ideal_of(r, {"x0^2", "x1^2", "x2^2"}), 3), 1u);
    EXPECT_EQ(hilbert_function(HomogIdeal(r, {}), 2), 6u);
    std::vector<HomogPoly> fermat{P("x0^3 + x1^3 + x2^3", r)};
    EXPECT_EQ(hilbert_function(jacobian_plus(fermat), 5), 0u);
}

TEST(HilbertFunction, MatchesFullSpanOracle) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 7}[rng() % 3];
        RingSpec r(2 + rng() % 2, p);
        std::vector<HomogPoly> gens;
        const int count = 1 + rng() % 3;
        for (int k = 0; k < count; ++k) {
            auto f = random_form(r, 1 + rng() % 3, rng);
            if (rng() % 3 == 0) f = HomogPoly::monomial(r, enumerate_monomials(r.num_vars(), f.degree()).back());
            if (!f.is_zero()) gens.push_back(f);
        }
        HomogIdeal I(r, gens);
        for (std::uint32_t D = 0; D <= 5; ++D) {
            const auto hf = hilbert_function(I, D);
            EXPECT_EQ(hf, oracle::hilbert(oracle_gens(I), r.num_vars(), D, p));
            auto piece = graded_piece(I, D);
            EXPECT_EQ(hf, piece.basis.size() - rank(piece.span));
        }
    }
}

TEST(HilbertFunction, VanishingPropagatesUpward) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        RingSpec r(3, 7);
        std::vector<HomogPoly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_form(r, 2, rng));
        std::erase_if(gens, [](const HomogPoly& g) { return g.is_zero(); });
        if (gens.empty()) continue;
        HomogIdeal I(r, gens);
        bool vanished = false;
        for (std::uint32_t D = 0; D <= 7; ++D) {
            const bool zero = hilbert_function(I, D) == 0;
            if (vanished) {
                EXPECT_TRUE(zero);
            }
            vanished = vanished || zero;
        }
    }
}

TEST(MaxIdealPower, Examples) {
    RingSpec r5(3, 5), r7(3, 7), r2(2, 5);
    std::vector<HomogPoly> fermat{P("x0^3 + x1^3 + x2^3", r5)};
    EXPECT_TRUE(contains_power_of_max_ideal(jacobian_plus(fermat), 5));
    EXPECT_FALSE(contains_power_of_max_ideal(ideal_of(r2, {"x0"}), 9));
    std::vector<HomogPoly> cusp{P("x0^3 - x1^2*x2", r7)};
    EXPECT_FALSE(contains_power_of_max_ideal(jacobian_plus(cusp), 5));
    EXPECT_FALSE(first_vanishing_degree(jacobian_plus(cusp), 12).has_value());
}

TEST(Jacobian, Hypersurface) {
    RingSpec r(3, 5);
    std::vector<HomogPoly> f{P("x0^3 + x1^3 + x2^3", r)};
    auto J = jacobian_ideal(f);
    ASSERT_EQ(J.generators().size(), 3u);
    EXPECT_EQ(J.generators()[0], P("3*x0^2", r));
    EXPECT_EQ(J.generators()[2], P("3*x2^2", r));
    RingSpec r3(3, 3);
    std::vector<HomogPoly> g{P("x0^3", r3)};
    EXPECT_TRUE(jacobian_ideal(g).generators().empty());
    EXPECT_FALSE(is_smooth_projective_ci(g));
}

TEST(Jacobian, TwoQuadricMinors) {
    RingSpec r(4, 7);
    std::vector<HomogPoly> fs{P("x0^2 + x1^2 + x2^2 + x3^2", r), P("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", r)};
    auto J = jacobian_ideal(fs);
    ASSERT_EQ(J.generators().size(), 6u);
    // the minor on rows i < k is 4(k - i) x_i x_k
    std::vector<HomogPoly> expected;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = i + 1; k < 4; ++k)
            expected.push_back(scale(HomogPoly::variable(r, i) * HomogPoly::variable(r, k), 4 * (k - i)));
    for (const auto& e : expected)
        EXPECT_NE(std::find(J.generators().begin(), J.generators().end(), e), J.generators().end()) << format_poly(e);
    EXPECT_THROW(jacobian_ideal(std::vector<HomogPoly>(5, fs[0])), ShapeError);
}

TEST(Jacobian, EulerRelation) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        RingSpec r(3, 7);
        auto f = random_form(r, 2 + rng() % 4, rng);
        if (f.is_zero() || f.degree() % 7 == 0) continue;
        std::vector<HomogPoly> one{f};
        EXPECT_TRUE(membership(scale(f, f.degree()), jacobian_ideal(one)));
    }
}

TEST(Smoothness, Examples) {
    RingSpec r5(3, 5), r7(3, 7), r7b(4, 7);
    std::vector<HomogPoly> fermat{P("x0^3 + x1^3 + x2^3", r5)};
    std::vector<HomogPoly> cusp{P("x0^3 - x1^2*x2", r7)};
    std::vector<HomogPoly> quartic{P("x0^4 + x1^4 + x2^4 + x3^4", r7b)};
    EXPECT_TRUE(is_smooth_projective_ci(fermat));
    EXPECT_FALSE(is_smooth_projective_ci(cusp));
    EXPECT_TRUE(is_smooth_projective_ci(quartic));
    std::vector<HomogPoly> two{P("x0^2 + x1^2 + x2^2 + x3^2", r7b), P("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", r7b)};
    EXPECT_TRUE(is_smooth_projective_ci(two));
    EXPECT_TRUE(contains_power_of_max_ideal(jacobian_plus(two), 3));
    EXPECT_EQ(smoothness_degree_bound(2, std::vector<std::uint32_t>{3}), 5u);
    EXPECT_EQ(smoothness_degree_bound(3, std::vector<std::uint32_t>{2, 2}), 5u);
}

TEST(RegularSequence, Probe) {
    RingSpec r(4, 7);
    std::vector<HomogPoly> ci{P("x0^2 + x1^2 + x2^2 + x3^2", r), P("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", r)};
    EXPECT_TRUE(regular_sequence_probe(ci));
    std::vector<HomogPoly> not_ci{P("x0*x1", r), P("x0*x2", r)};
    EXPECT_FALSE(regular_sequence_probe(not_ci));
    auto hs = complete_intersection_hilbert(4, std::vector<std::uint32_t>{2, 2}, 6);
    EXPECT_EQ(hs, (std::vector<std::int64_t>{1, 4, 8, 12, 16, 20, 24}));
}

TEST(PowerContainment, Pigeonhole) {
    RingSpec r(4, 7);
    std::vector<HomogPoly> fs{P("x0^2 + x1^2 + x2^2 + x3^2", r), P("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", r)};
    EXPECT_TRUE(power_containment(fs, 3, 2));
    EXPECT_FALSE(power_containment(fs, 2, 2));
    std::vector<HomogPoly> one{fs[0]};
    for (std::uint32_t t0 = 1; t0 <= 3; ++t0)
        for (std::uint32_t t = t0; t <= 4; ++t) EXPECT_TRUE(power_containment(one, t, t0));
    EXPECT_THROW(power_containment(fs, 0, 2), PreconditionError);
}

TEST(PowerContainment, CrossCheckCatchesNonRegularInput) {
    // (x0*x1, x0*x2) is not a regular sequence, so membership and pigeonhole disagree
    RingSpec r(3, 5);
    std::vector<HomogPoly> fs{P("x0*x1", r), P("x0*x1", r)};
    EXPECT_THROW(power_containment(fs, 2, 2), InvariantViolation);
}
