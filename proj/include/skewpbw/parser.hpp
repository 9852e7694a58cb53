/*
   Copyright 2026 The skewpbw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWPBW_PARSER_HPP
#define SKEWPBW_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "element.hpp"

namespace skewpbw {

/*
 * Element expressions:
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' nonneg_int)?
 *   atom   := integer | integer '/' integer | symbol | '(' expr ')'
 *
 * Symbols are the presentation's generator names plus the base-ring
 * generator.  Products are noncommutative, applied left to right.  The
 * leading '-' accepts the printer's own output ("-x + 1"); everything parses
 * into normal form, so parse(print(a)) == a.
 */

namespace detail {

class ElementParser {
public:
    ElementParser(PresentationPtr pres, std::string_view text)
        : pres_(std::move(pres)), text_(text) {}

    AlgebraElement run() {
        AlgebraElement e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    // Exponents feed a repeated-multiplication loop; an absurd power is a
    // typo, not a computation worth hanging on.
    static constexpr long long kMaxExponent = 1'000'000;

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    AlgebraElement parse_expr() {
        bool neg = false;
        if (peek() == '-') { ++pos_; neg = true; }
        AlgebraElement acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            const char ch = peek();
            if (ch != '+' && ch != '-') break;
            ++pos_;
            const AlgebraElement t = parse_term();
            acc = (ch == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    AlgebraElement parse_term() {
        AlgebraElement acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    AlgebraElement parse_factor() {
        AlgebraElement a = parse_atom();
        if (peek() != '^') return a;
        ++pos_;
        const std::size_t at = pos_;
        const long long k = parse_uint();
        if (k > kMaxExponent) throw ParseError("exponent too large", at);
        return a.pow(static_cast<int>(k));
    }

    AlgebraElement parse_atom() {
        const char ch = peek();
        const std::size_t at = pos_;
        if (ch == '(') {
            ++pos_;
            AlgebraElement e = parse_expr();
            if (peek() != ')') throw ParseError("missing ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const BigInt num = parse_bigint();
            if (peek() != '/')
                return AlgebraElement::from_field_scalar(
                    pres_, FieldElement::from_integer(pres_->field(), num));
            ++pos_;
            const std::size_t dat = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator digits", dat);
            const BigInt den = parse_bigint();
            if (den == 0) throw ParseError("zero denominator", dat);
            return AlgebraElement::from_field_scalar(
                pres_, FieldElement::from_ratio(pres_->field(), num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::string name = parse_identifier();
            if (auto idx = pres_->generator_index(name))
                return AlgebraElement::generator(pres_, *idx);
            if (pres_->base()->has_generator() && name == pres_->base()->generator_name())
                return AlgebraElement::base_generator(pres_);
            throw ParseError("unknown symbol '" + name + "'", at);
        }
        if (ch == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }

    long long parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a nonnegative integer", pos_);
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > kMaxExponent) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return v;
    }

    BigInt parse_bigint() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digits", pos_);
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return BigInt(digits);
    }

    std::string parse_identifier() {
        std::string name;
        name += text_[pos_++];
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        return name;
    }

    PresentationPtr pres_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline AlgebraElement parse_element(const PresentationPtr& pres, std::string_view text) {
    return detail::ElementParser(pres, text).run();
}

// Base-ring elements reuse the same grammar through a degenerate presentation
// with no skew generators, so "t^2 + 1" and "3/4" parse uniformly.
inline BaseRingElement parse_base_element(const BaseRingPtr& ring, std::string_view text) {
    const auto pres = PresentationBuilder(ring).build();
    const AlgebraElement e = detail::ElementParser(pres, text).run();
    if (e.is_zero()) return BaseRingElement::zero(ring);
    return e.terms().begin()->second;
}

} // namespace skewpbw

#endif // SKEWPBW_PARSER_HPP
