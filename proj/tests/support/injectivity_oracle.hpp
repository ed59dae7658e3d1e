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

#ifndef FROBTHICK_TESTS_INJECTIVITY_ORACLE_HPP
#define FROBTHICK_TESTS_INJECTIVITY_ORACLE_HPP

#include "frobthick/analyzer.hpp"
#include "support/oracles.hpp"

namespace oracle {

// Injectivity decided by enumerating every vector of the cohomology piece:
// annihilated vectors are found by class arithmetic, and images use the
// untruncated expansion of (f_1...f_c)^{p-t} s^p with a termwise zero test.
inline bool brute_force_injective(const frobthick::Variety& v, std::uint32_t t, std::int64_t twist) {
    using namespace frobthick;
    const auto& ring = v.ring();
    const std::uint32_t p = ring.p();
    CohomologyPiece piece(ring, twist - static_cast<std::int64_t>(v.total_degree()));
    if (piece.is_zero()) return true;
    const auto e = piece.min_level();
    const auto dim = piece.basis(e).size();
    oracle::Poly g{{oracle::Mono(ring.num_vars(), 0), 1}};
    for (const auto& f : v.generators()) g = oracle::mul(g, oracle::from(f), p);
    g = oracle::power(g, p - t, ring.num_vars(), p);
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= p;
    std::vector<std::uint32_t> coords(dim);
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t rest = code;
        for (auto& x : coords) {
            x = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        auto eta = from_coordinates(piece, e, coords);
        bool annihilated = true;
        for (const auto& f : v.generators()) annihilated = annihilated && is_zero(multiply(f, eta));
        if (!annihilated) continue;
        auto s = oracle::from(eta.numerator());
        auto image = oracle::mul(g, oracle::power(s, p, ring.num_vars(), p), p);
        if (oracle::drop_bracket(image, e * p).empty()) return false;
    }
    return true;
}

}  // namespace oracle

#endif
