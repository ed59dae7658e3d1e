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
#include <vector>

#include "frobthick/fp_matrix.hpp"
#include "frobthick/prime_field.hpp"
#include "support/oracles.hpp"

using namespace frobthick;

TEST(PrimeField, RejectsComposites) {
    EXPECT_THROW(PrimeModulus(1), PreconditionError);
    EXPECT_THROW(PrimeModulus(9), PreconditionError);
    EXPECT_THROW(PrimeModulus(std::uint64_t{1} << 31), PreconditionError);
    EXPECT_EQ(PrimeModulus(2).value(), 2u);
    EXPECT_EQ(PrimeModulus(2147483629).value(), 2147483629u);
}

TEST(PrimeField, ScalarInverse) {
    EXPECT_EQ(scalar_inv(Scalar(3, PrimeModulus(7))).value(), 5u);
    EXPECT_EQ(scalar_inv(Scalar(1, PrimeModulus(5))).value(), 1u);
    EXPECT_EQ(scalar_inv(Scalar(2, PrimeModulus(13))).value(), 7u);
    EXPECT_THROW(scalar_inv(Scalar(0, PrimeModulus(13))), DivisionByZero);
    EXPECT_THROW(scalar_inv(Scalar(26, PrimeModulus(13))), DivisionByZero);
}

TEST(PrimeField, InverseOfEveryUnit) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 101u, 65521u}) {
        PrimeModulus m(p);
        for (std::uint32_t a = 1; a < std::min<std::uint64_t>(p, 500); ++a) EXPECT_EQ(m.mul(a, m.inv(a)), 1u);
    }
}

TEST(PrimeField, ScalarsStayReduced) {
    PrimeModulus m(7);
    Scalar a(-1, m), b(20, m);
    EXPECT_EQ(a.value(), 6u);
    EXPECT_EQ(b.value(), 6u);
    EXPECT_EQ((a + b).value(), 5u);
    EXPECT_EQ((a * b).value(), 1u);
    EXPECT_EQ((a - b).value(), 0u);
    EXPECT_THROW(a + Scalar(1, PrimeModulus(5)), ShapeError);
}

TEST(Rref, Identity) {
    auto r = rref(FpMatrix::identity(PrimeModulus(5), 3));
    EXPECT_EQ(r.rank, 3u);
    EXPECT_EQ(r.kernel_basis.cols(), 0u);
}

TEST(Rref, ZeroMatrix) {
    auto r = rref(FpMatrix(PrimeModulus(7), 2, 4));
    EXPECT_EQ(r.rank, 0u);
    EXPECT_EQ(r.kernel_basis.cols(), 4u);
}

TEST(Rref, RankOneKernelMatchesEnumeration) {
    PrimeModulus m(5);
    std::vector<std::int64_t> e{1, 2, 2, 4};
    FpMatrix a(m, 2, 2, e);
    auto r = rref(a);
    EXPECT_EQ(r.rank, 1u);
    ASSERT_EQ(r.kernel_basis.cols(), 1u);
    auto k = r.kernel_basis.column(0);
    // the null space found by enumerating all 25 vectors is exactly the span of k
    std::size_t null_count = 0;
    for (std::uint32_t x = 0; x < 5; ++x)
        for (std::uint32_t y = 0; y < 5; ++y) {
            const bool null = (x + 2 * y) % 5 == 0 && (2 * x + 4 * y) % 5 == 0;
            const bool in_span = m.mul(x, k[1]) == m.mul(y, k[0]);
            EXPECT_EQ(null, in_span);
            null_count += null;
        }
    EXPECT_EQ(null_count, 5u);
    EXPECT_EQ(m.mul(k[0], m.inv(k[1])), 3u);
}

TEST(Rref, PropertyRankNullityAndKernel) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 13}[rng() % 5];
        PrimeModulus m(p);
        const std::size_t rows = rng() % 7, cols = rng() % 7;
        FpMatrix a(m, rows, cols);
        std::vector<std::vector<std::int64_t>> dense(rows, std::vector<std::int64_t>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                // sparse-ish entries make rank deficiency common
                const std::int64_t v = rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % p) : 0;
                a.set(i, j, v);
                dense[i][j] = v;
            }
        auto r = rref(a);
        EXPECT_EQ(r.rank + r.kernel_basis.cols(), cols);
        EXPECT_EQ(r.rank, oracle::rank(dense, p));
        EXPECT_TRUE((a * r.kernel_basis).is_zero());
        EXPECT_EQ(rref(r.kernel_basis).rank, r.kernel_basis.cols());
        // re-reducing the reduced form is a no-op
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    }
}

TEST(RowEchelon, AgreesWithRref) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 7, 65521}[rng() % 4];
        PrimeModulus m(p);
        const std::size_t dim = 1 + rng() % 8, count = rng() % 10;
        RowEchelon ech(m, dim);
        FpMatrix cols(m, dim, count);
        for (std::size_t c = 0; c < count; ++c) {
            std::vector<std::uint32_t> v(dim);
            for (auto& x : v) x = rng() % 2 ? static_cast<std::uint32_t>(rng() % p) : 0;
            for (std::size_t r = 0; r < dim; ++r) cols.set(r, c, v[r]);
            ech.insert(v);
            EXPECT_TRUE(ech.contains(v));
        }
        EXPECT_EQ(ech.rank(), rank(cols));
        EXPECT_EQ(ech.full(), ech.rank() == dim);
    }
}

TEST(RowEchelon, LongReductionsStayExact) {
    // many dependent insertions with a large prime exercise the lazy reduction budget
    PrimeModulus m(2147483629);
    const std::size_t dim = 40;
    RowEchelon ech(m, dim);
    std::mt19937_64 rng(3);
    std::vector<std::vector<std::uint32_t>> basis;
    for (int i = 0; i < 20; ++i) {
        std::vector<std::uint32_t> v(dim);
        for (auto& x : v) x = static_cast<std::uint32_t>(rng() % m.value());
        basis.push_back(v);
        ech.insert(v);
    }
    for (int i = 0; i < 50; ++i) {
        std::vector<std::uint32_t> combo(dim, 0);
        for (const auto& b : basis) {
            auto c = static_cast<std::uint32_t>(rng() % m.value());
            for (std::size_t j = 0; j < dim; ++j) combo[j] = m.add(combo[j], m.mul(c, b[j]));
        }
        EXPECT_TRUE(ech.contains(combo));
        EXPECT_FALSE(ech.insert(combo));
    }
    EXPECT_EQ(ech.rank(), 20u);
}
