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

#ifndef FROBTHICK_PARSER_HPP
#define FROBTHICK_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace frobthick {

// Grammar (whitespace is ignored):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := coeff? ('*'? factor)*          at least one of coeff / factor
//   factor := (var | '(' expr ')') ('^' nat)?
//   var    := 'x' nat
//   coeff  := nat                             any size, reduced mod p
//
// Every summand must have the same degree; cancellation is allowed, so
// "x0 - x0" is the zero form of degree 1.

namespace detail {

class PolyParser {
   public:
    PolyParser(std::string_view text, RingSpec ring) : text_(text), ring_(ring) {}

    HomogPoly parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        std::vector<Term> terms;
        for (auto& [e, c] : v.terms)
            if (c) terms.push_back({e, c});
        return HomogPoly::from_terms(ring_, v.degree, std::move(terms));
    }

   private:
    // Homogeneous intermediate value; degree is tracked syntactically so that
    // cancelled sums keep their degree.
    struct Value {
        std::uint32_t degree = 0;
        std::map<Exponent, std::uint32_t> terms;
    };

    Value expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Value acc = term();
        if (negate) acc = scaled(acc, ring_.p() - 1);
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            Value rhs = term();
            if (rhs.degree != acc.degree)
                throw DegreeMixtureError("summand of degree " + std::to_string(rhs.degree) +
                                             " mixed with degree " + std::to_string(acc.degree),
                                         at);
            if (c == '-') rhs = scaled(rhs, ring_.p() - 1);
            for (auto& [e, v] : rhs.terms) {
                auto& slot = acc.terms[e];
                slot = ring_.modulus().add(slot, v);
            }
        }
        return acc;
    }

    Value term() {
        skip_ws();
        const std::size_t start = pos_;
        Value acc;
        acc.terms[Exponent(ring_.num_vars())] = 1 % ring_.p();
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = scaled(acc, coeff());
            any = true;
        }
        while (true) {
            skip_ws();
            std::size_t save = pos_;
            bool star = false;
            if (peek() == '*') {
                star = true;
                ++pos_;
                skip_ws();
            }
            char c = peek();
            if (c == 'x' || c == '(') {
                acc = product(acc, factor());
                any = true;
                continue;
            }
            if (star) throw ParseError("expected a variable or '(' after '*'", pos_);
            pos_ = save;
            break;
        }
        if (!any) {
            if (pos_ == text_.size()) throw ParseError("expression ends where a term was expected", pos_);
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", start);
        }
        return acc;
    }

    Value factor() {
        Value base;
        if (peek() == '(') {
            const std::size_t open = pos_;
            ++pos_;
            base = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced '(' opened", open);
            ++pos_;
        } else {
            const std::size_t at = pos_;
            ++pos_;  // 'x'
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
            auto idx = nat();
            if (idx >= ring_.num_vars())
                throw NameError("unknown variable x" + std::to_string(idx) + " (ring has x0..x" +
                                    std::to_string(ring_.num_vars() - 1) + ")",
                                at);
            Exponent e(ring_.num_vars());
            e[static_cast<std::size_t>(idx)] = 1;
            base.degree = 1;
            base.terms[e] = 1;
        }
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent after '^'", pos_);
            auto k = nat();
            Value acc;
            acc.terms[Exponent(ring_.num_vars())] = 1 % ring_.p();
            for (std::uint64_t i = 0; i < k; ++i) acc = product(acc, base);
            return acc;
        }
        return base;
    }

    std::uint64_t nat() {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::uint64_t{1} << 32)) throw ParseError("number too large", start);
            ++pos_;
        }
        return v;
    }

    // Coefficients may have any number of digits; reduce while reading.
    std::uint32_t coeff() {
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % ring_.p();
            ++pos_;
        }
        return static_cast<std::uint32_t>(v);
    }

    Value scaled(const Value& v, std::uint32_t c) const {
        Value out{v.degree, {}};
        for (auto& [e, x] : v.terms) out.terms[e] = ring_.modulus().mul(x, c);
        return out;
    }

    Value product(const Value& a, const Value& b) const {
        Value out{a.degree + b.degree, {}};
        for (auto& [ea, ca] : a.terms) {
            if (!ca) continue;
            for (auto& [eb, cb] : b.terms) {
                if (!cb) continue;
                auto& slot = out.terms[ea + eb];
                slot = ring_.modulus().add(slot, ring_.modulus().mul(ca, cb));
            }
        }
        return out;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    RingSpec ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a homogeneous form such as "x0^3 - x1^2*x2" in the given ring.
inline HomogPoly parse_poly(std::string_view text, const RingSpec& ring) {
    return detail::PolyParser(text, ring).parse();
}

/// Canonical rendering: descending graded-lex terms joined by " + ", residues
/// as coefficients, unit coefficients omitted. The zero form prints as "0".
inline std::string format_poly(const HomogPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < t.exponent.size(); ++i) {
            if (t.exponent[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (t.exponent[i] > 1) mono += "^" + std::to_string(t.exponent[i]);
        }
        if (mono.empty()) out += std::to_string(t.coeff);
        else if (t.coeff == 1) out += mono;
        else out += std::to_string(t.coeff) + "*" + mono;
    }
    return out;
}

}  // namespace frobthick

#endif
