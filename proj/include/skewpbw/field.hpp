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

#ifndef SKEWPBW_FIELD_HPP
#define SKEWPBW_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"

namespace skewpbw {

using BigInt      = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/*
 * Coefficient fields.
 *
 * Exactly two kinds are supported: the rationals Q (arbitrary precision,
 * always stored as a reduced fraction with positive denominator -- the
 * canonical form cpp_rational maintains) and prime fields F_p (residues stored
 * canonically in [0, p)).  Every FieldElement carries its FieldSpec, and all
 * binary operations insist the specs agree.
 */

class FieldSpec {
public:
    enum class Kind { rationals, prime_field };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

    // p must be a prime below 2^31 (residue products must fit in int64).
    static FieldSpec prime_field(std::int64_t p) {
        if (p < 2 || p >= (std::int64_t{1} << 31))
            throw InvalidParams("prime field characteristic out of range: " + std::to_string(p));
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw InvalidParams("prime field characteristic is composite: " + std::to_string(p));
        return FieldSpec(Kind::prime_field, p);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
    bool is_prime_field() const noexcept { return kind_ == Kind::prime_field; }

    // 0 for Q, p for F_p.
    std::int64_t characteristic() const noexcept { return p_; }
    std::int64_t p() const noexcept { return p_; }

    bool operator==(const FieldSpec& other) const noexcept {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const FieldSpec& other) const noexcept { return !(*this == other); }

    std::string description() const {
        return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
    }

private:
    FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

class FieldElement {
public:
    // Default-constructed elements are rational zero; containers need this.
    FieldElement() : spec_(FieldSpec::rationals()), rat_(0), res_(0) {}

    static FieldElement zero(const FieldSpec& spec) { return from_integer(spec, 0); }
    static FieldElement one(const FieldSpec& spec) { return from_integer(spec, 1); }

    static FieldElement from_integer(const FieldSpec& spec, const BigInt& n) {
        FieldElement e(spec);
        if (spec.is_rationals()) {
            e.rat_ = n;
        } else {
            BigInt r = n % spec.p();
            if (r < 0) r += spec.p();
            e.res_ = static_cast<std::int64_t>(r);
        }
        return e;
    }

    static FieldElement from_integer(const FieldSpec& spec, std::int64_t n) {
        return from_integer(spec, BigInt(n));
    }

    // num/den with den != 0.  Over F_p this is num * den^{-1}; den must be a
    // unit mod p.
    static FieldElement from_ratio(const FieldSpec& spec, const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error("division by zero in field literal");
        if (spec.is_rationals()) {
            FieldElement e(spec);
            // The backend requires a positive denominator.
            e.rat_ = den < 0 ? BigRational(-num, BigInt(-den)) : BigRational(num, den);
            return e;
        }
        return from_integer(spec, num) / from_integer(spec, den);
    }

    // Accepts "123", "-7" and "3/4" (optionally signed numerator).
    static FieldElement parse(const FieldSpec& spec, const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return from_integer(spec, BigInt(text));
            return from_ratio(spec, BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::runtime_error& e) {
            throw ParseError("bad field literal '" + text + "'", 0);
        }
    }

    const FieldSpec& field() const noexcept { return spec_; }

    bool is_zero() const noexcept { return spec_.is_rationals() ? rat_.is_zero() : res_ == 0; }
    bool is_one() const noexcept { return spec_.is_rationals() ? rat_ == 1 : res_ == 1; }

    FieldElement operator-() const {
        FieldElement r(*this);
        if (spec_.is_rationals())
            r.rat_ = -rat_;
        else if (res_ != 0)
            r.res_ = spec_.p() - res_;
        return r;
    }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        FieldElement r(spec_);
        if (spec_.is_rationals())
            r.rat_ = rat_ + o.rat_;
        else
            r.res_ = (res_ + o.res_) % spec_.p();
        return r;
    }

    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        FieldElement r(spec_);
        if (spec_.is_rationals())
            r.rat_ = rat_ * o.rat_;
        else
            r.res_ = mul_mod(res_, o.res_, spec_.p());
        return r;
    }

    FieldElement inverse() const {
        if (is_zero()) throw Error("inverse of zero field element");
        FieldElement r(spec_);
        if (spec_.is_rationals())
            r.rat_ = 1 / rat_;
        else
            r.res_ = inv_mod(res_, spec_.p());
        return r;
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    // e may be negative (inverts first).
    FieldElement pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement acc = one(spec_);
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Order of this element in the multiplicative group, searched up to `cap`;
    // nullopt if no power <= cap equals one (for Q that means q != +-1).
    std::optional<std::int64_t> multiplicative_order(std::int64_t cap = 1 << 20) const {
        if (is_zero()) throw Error("multiplicative order of zero");
        FieldElement acc = *this;
        for (std::int64_t k = 1; k <= cap; ++k) {
            if (acc.is_one()) return k;
            acc *= *this;
        }
        return std::nullopt;
    }

    bool operator==(const FieldElement& o) const {
        if (spec_ != o.spec_) return false;
        return spec_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // "5", "-3/2" for Q; the canonical residue for F_p.
    std::string str() const {
        if (spec_.is_rationals()) {
            std::string s = numerator(rat_).str();
            if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
            return s;
        }
        return std::to_string(res_);
    }

    // True for rationals with negative numerator; residues are never negative.
    bool is_negative() const noexcept { return spec_.is_rationals() && rat_ < 0; }

    const BigRational& rational_value() const {
        if (!spec_.is_rationals()) throw Error("rational_value on prime-field element");
        return rat_;
    }

    std::int64_t residue() const {
        if (!spec_.is_prime_field()) throw Error("residue on rational element");
        return res_;
    }

private:
    explicit FieldElement(const FieldSpec& spec) : spec_(spec), rat_(0), res_(0) {}

    void check_same(const FieldElement& o) const {
        if (spec_ != o.spec_)
            throw IncompatibleRings("field elements over " + spec_.description() + " and " +
                                    o.spec_.description());
    }

    static std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
        // p < 2^31, so the product fits in int64.
        return (a * b) % p;
    }

    static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
        // Extended Euclid; a is nonzero mod the prime p, so gcd is 1.
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        return t < 0 ? t + p : t;
    }

    FieldSpec spec_;
    BigRational rat_;
    std::int64_t res_;
};

} // namespace skewpbw

#endif // SKEWPBW_FIELD_HPP
