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

#ifndef FROBTHICK_PRIME_FIELD_HPP
#define FROBTHICK_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace frobthick {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t k = 3; k * k <= n; k += 2) {
        if (n % k == 0) return false;
    }
    return true;
}

/// The characteristic of the coefficient field. Primes are limited to 31 bits so
/// that a product of two residues always fits in 64 bits.
class PrimeModulus {
   public:
    explicit PrimeModulus(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p >= (std::uint64_t{1} << 31)) throw PreconditionError("modulus " + std::to_string(p) + " exceeds 31 bits");
        if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t value() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t a) const noexcept {
        auto r = a % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t reduce_u(std::uint64_t a) const noexcept { return static_cast<std::uint32_t>(a % p_); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const noexcept {
        std::uint64_t base = a % p_, acc = 1 % p_;
        while (k) {
            if (k & 1) acc = acc * base % p_;
            base = base * base % p_;
            k >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw DivisionByZero();
        // extended Euclid on (a, p)
        std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            std::int64_t s2 = s0 - q * s1;
            s0 = s1;
            s1 = s2;
        }
        return reduce(s0);
    }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

   private:
    std::uint32_t p_;
};

/// A fully reduced element of F_p that remembers its modulus.
class Scalar {
   public:
    Scalar(std::int64_t value, PrimeModulus modulus) : modulus_(modulus), value_(modulus.reduce(value)) {}

    std::uint32_t value() const noexcept { return value_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check(a, b);
        return Scalar(a.modulus_.add(a.value_, b.value_), a.modulus_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check(a, b);
        return Scalar(a.modulus_.sub(a.value_, b.value_), a.modulus_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check(a, b);
        return Scalar(a.modulus_.mul(a.value_, b.value_), a.modulus_);
    }
    Scalar operator-() const { return Scalar(modulus_.neg(value_), modulus_); }

    friend bool operator==(const Scalar&, const Scalar&) = default;

   private:
    static void check(const Scalar& a, const Scalar& b) {
        if (!(a.modulus_ == b.modulus_)) throw ShapeError("scalars from different prime fields");
    }

    PrimeModulus modulus_;
    std::uint32_t value_;
};

/// Multiplicative inverse; throws DivisionByZero on 0.
inline Scalar scalar_inv(const Scalar& a) { return Scalar(a.modulus().inv(a.value()), a.modulus()); }

}  // namespace frobthick

#endif
