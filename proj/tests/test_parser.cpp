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
#include <string>

#include "frobthick/parser.hpp"

using namespace frobthick;

TEST(Parser, FermatCubic) {
    RingSpec r(3, 5);
    auto f = parse_poly("x0^3+x1^3+x2^3", r);
    EXPECT_EQ(f.degree(), 3u);
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(f.coeff(Exponent{0, 3, 0}), 1u);
}

TEST(Parser, CancellationKeepsDegree) {
    RingSpec r(2, 5);
    auto f = parse_poly("x0 - x0", r);
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.degree(), 1u);
}

TEST(Parser, CuspCoefficientsReduced) {
    RingSpec r(3, 7);
    auto f = parse_poly("x0^3 - x1^2*x2", r);
    EXPECT_EQ(f.coeff(Exponent{0, 2, 1}), 6u);
    EXPECT_EQ(f.coeff(Exponent{3, 0, 0}), 1u);
}

TEST(Parser, SyntaxVariants) {
    RingSpec r(3, 7);
    auto base = parse_poly("3*x0*x1^2 + x2^3", r);
    EXPECT_EQ(parse_poly("3 x0 x1^2 + x2^3", r), base);
    EXPECT_EQ(parse_poly("  3*x0*x1*x1+x2*x2^2 ", r), base);
    EXPECT_EQ(parse_poly("10*x0*x1^2 + x2^3", r), base);
    const std::string big = "123456789012345678901234567890";
    int residue = 0;
    for (char c : big) residue = (residue * 10 + (c - '0')) % 7;
    EXPECT_EQ(parse_poly(big + "*x0", r), HomogPoly::monomial(r, Exponent{1, 0, 0}, residue));
    EXPECT_EQ(parse_poly("-x0 + x1", r), parse_poly("6*x0 + x1", r));
    EXPECT_EQ(parse_poly("(x0 + x1)^2", r), parse_poly("x0^2 + 2*x0*x1 + x1^2", r));
    EXPECT_EQ(parse_poly("5", r), HomogPoly::monomial(r, Exponent{0, 0, 0}, 5));
}

TEST(Parser, Errors) {
    RingSpec r(3, 7);
    EXPECT_THROW(parse_poly("x0^2 + x1", r), DegreeMixtureError);
    EXPECT_THROW(parse_poly("x3", r), NameError);
    EXPECT_THROW(parse_poly("x0 +", r), ParseError);
    EXPECT_THROW(parse_poly("(x0 + x1", r), ParseError);
    EXPECT_THROW(parse_poly("x0 + x1)", r), ParseError);
    EXPECT_THROW(parse_poly("", r), ParseError);
    EXPECT_THROW(parse_poly("y0", r), ParseError);
    EXPECT_THROW(parse_poly("x0^", r), ParseError);
    try {
        parse_poly("x0 + x1 * ", r);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GE(e.position(), 8u);
    }
}

TEST(Formatter, CanonicalForms) {
    RingSpec r(2, 5);
    EXPECT_EQ(format_poly(HomogPoly::zero(r, 3)), "0");
    EXPECT_EQ(format_poly(parse_poly("4*x1^2 + x0^2", r)), "x0^2 + 4*x1^2");
    RingSpec r3(3, 7);
    EXPECT_EQ(format_poly(parse_poly("x0^3 - x1^2*x2", r3)), "x0^3 + 6*x1^2*x2");
}

TEST(FormatterProperty, RoundTrip) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 101}[rng() % 5];
        RingSpec r(1 + rng() % 5, p);
        const std::uint32_t d = rng() % 5;
        std::vector<Term> terms;
        for (const auto& m : enumerate_monomials(r.num_vars(), d))
            if (rng() % 3 == 0) terms.push_back({m, static_cast<std::uint32_t>(rng() % p)});
        auto f = HomogPoly::from_terms(r, d, terms);
        auto text = format_poly(f);
        if (f.is_zero()) continue;  // "0" carries no degree
        EXPECT_EQ(parse_poly(text, r), f) << text;
        EXPECT_EQ(format_poly(parse_poly(text, r)), text);
    }
}

TEST(ParserProperty, RejectsUnbalancedAndTrailingOperators) {
    RingSpec r(3, 5);
    std::mt19937_64 rng(88);
    const std::vector<std::string> atoms{"x0", "x1", "x2", "3", "x0^2"};
    for (int trial = 0; trial < 300; ++trial) {
        std::string s;
        const int len = 1 + rng() % 4;
        for (int i = 0; i < len; ++i) {
            if (i) s += rng() % 2 ? " + " : "*";
            s += atoms[rng() % atoms.size()];
        }
        switch (rng() % 4) {
            case 0: s = "(" + s; break;
            case 1: s += ")"; break;
            case 2: s += " +"; break;
            default: s += "*"; break;
        }
        EXPECT_THROW(parse_poly(s, r), ParseError) << s;
    }
}
