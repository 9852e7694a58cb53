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

#ifndef SKEWPBW_BASE_RING_HPP
#define SKEWPBW_BASE_RING_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace skewpbw {

/*
 * Coefficient rings R for skew PBW extensions.  Three shapes:
 *
 *   field_itself      R = K
 *   univariate_poly   R = K[t]
 *   simple_extension  R = K[u]/(f) with f monic irreducible
 *
 * Elements are coefficient vectors over K in the ring generator, stored with
 * no trailing zeros (the zero element is the empty vector); simple-extension
 * representatives always have degree < deg f.  All rings here are
 * commutative, which the rewriting engine silently relies on.
 */

class BaseRingSpec;
using BaseRingPtr = std::shared_ptr<const BaseRingSpec>;

class BaseRingSpec {
public:
    enum class Kind { field_itself, univariate_poly, simple_extension };

    static BaseRingPtr field_itself(const FieldSpec& field) {
        return BaseRingPtr(new BaseRingSpec(field, Kind::field_itself, "", {}, true));
    }

    static BaseRingPtr univariate_poly(const FieldSpec& field, const std::string& generator) {
        check_name(generator);
        return BaseRingPtr(new BaseRingSpec(field, Kind::univariate_poly, generator, {}, true));
    }

    // modulus = coefficients of f, ascending, monic, degree >= 2.
    // Irreducibility is verified exhaustively when feasible (F_p of small
    // degree, Q up to cubics via the rational root test); otherwise the
    // modulus is accepted and irreducibility_verified() reports false.
    static BaseRingPtr simple_extension(const FieldSpec& field, const std::string& generator,
                                        std::vector<FieldElement> modulus) {
        check_name(generator);
        while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
        if (modulus.size() < 3)
            throw InvalidParams("extension modulus must have degree >= 2");
        for (const auto& c : modulus)
            if (c.field() != field) throw IncompatibleRings("modulus coefficients over wrong field");
        if (!modulus.back().is_one())
            throw InvalidParams("extension modulus must be monic");
        const int verdict = irreducibility_verdict(field, modulus);
        if (verdict < 0)
            throw InvalidParams("extension modulus is reducible");
        return BaseRingPtr(new BaseRingSpec(field, Kind::simple_extension, generator,
                                            std::move(modulus), verdict > 0));
    }

    const FieldSpec& field() const noexcept { return field_; }
    Kind kind() const noexcept { return kind_; }
    bool has_generator() const noexcept { return kind_ != Kind::field_itself; }
    const std::string& generator_name() const noexcept { return generator_name_; }
    const std::vector<FieldElement>& modulus() const noexcept { return modulus_; }
    int extension_degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
    bool irreducibility_verified() const noexcept { return irreducibility_verified_; }

    bool same_as(const BaseRingSpec& other) const {
        return field_ == other.field_ && kind_ == other.kind_ &&
               generator_name_ == other.generator_name_ && modulus_ == other.modulus_;
    }

    std::string description() const {
        switch (kind_) {
            case Kind::field_itself: return field_.description();
            case Kind::univariate_poly: return field_.description() + "[" + generator_name_ + "]";
            default: break;
        }
        return field_.description() + "[" + generator_name_ + "]/(modulus deg " +
               std::to_string(extension_degree()) + ")";
    }

    static void check_name(const std::string& name) {
        if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
            throw InvalidParams("bad symbol name '" + name + "'");
        for (char c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw InvalidParams("bad symbol name '" + name + "'");
    }

private:
    BaseRingSpec(const FieldSpec& field, Kind kind, std::string generator,
                 std::vector<FieldElement> modulus, bool verified)
        : field_(field), kind_(kind), generator_name_(std::move(generator)),
          modulus_(std::move(modulus)), irreducibility_verified_(verified) {}

    // +1 verified irreducible, 0 accepted unverified, -1 reducible.
    static int irreducibility_verdict(const FieldSpec& field, const std::vector<FieldElement>& f);

    FieldSpec field_;
    Kind kind_;
    std::string generator_name_;
    std::vector<FieldElement> modulus_;
    bool irreducibility_verified_;
};

namespace detail {

// Plain dense polynomial helpers on raw ascending coefficient vectors.
// Vectors are kept trailing-zero free; {} is the zero polynomial.

inline void poly_trim(std::vector<FieldElement>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline std::vector<FieldElement> poly_add(const std::vector<FieldElement>& a,
                                          const std::vector<FieldElement>& b,
                                          const FieldSpec& field) {
    std::vector<FieldElement> r(std::max(a.size(), b.size()), FieldElement::zero(field));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline std::vector<FieldElement> poly_neg(std::vector<FieldElement> a) {
    for (auto& c : a) c = -c;
    return a;
}

inline std::vector<FieldElement> poly_mul(const std::vector<FieldElement>& a,
                                          const std::vector<FieldElement>& b,
                                          const FieldSpec& field) {
    if (a.empty() || b.empty()) return {};
    std::vector<FieldElement> r(a.size() + b.size() - 1, FieldElement::zero(field));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Division with remainder by a nonzero divisor; returns {quotient, remainder}.
inline std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
poly_divmod(std::vector<FieldElement> a, const std::vector<FieldElement>& b, const FieldSpec& field) {
    if (b.empty()) throw Error("polynomial division by zero");
    const auto lead_inv = b.back().inverse();
    std::vector<FieldElement> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FieldElement::zero(field));
    while (a.size() >= b.size()) {
        const FieldElement factor = a.back() * lead_inv;
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        poly_trim(a);
        if (a.size() < b.size()) break;
        // a.back() is now exact-zero-trimmed, so the loop strictly shrinks a.
    }
    poly_trim(q);
    return {std::move(q), std::move(a)};
}

// Extended gcd: returns (g, s) with s*a = g mod b and g = gcd(a, b) monic.
// Only the Bezout coefficient of `a` is tracked (enough for inverses mod b).
inline std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
poly_half_ext_gcd(std::vector<FieldElement> a, std::vector<FieldElement> b, const FieldSpec& field) {
    std::vector<FieldElement> s0{FieldElement::one(field)}, s1;
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, field);
        a = std::move(b);
        b = std::move(r);
        auto s2 = poly_add(s0, poly_neg(poly_mul(q, s1, field)), field);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!a.empty() && !a.back().is_one()) {
        const auto inv = a.back().inverse();
        for (auto& c : a) c *= inv;
        for (auto& c : s0) c *= inv;
    }
    return {std::move(a), std::move(s0)};
}

} // namespace detail

class BaseRingElement {
public:
    BaseRingElement() = default; // zero over an unset ring; containers only

    static BaseRingElement zero(const BaseRingPtr& ring) { return BaseRingElement(ring, {}); }

    static BaseRingElement one(const BaseRingPtr& ring) {
        return BaseRingElement(ring, {FieldElement::one(ring->field())});
    }

    static BaseRingElement from_scalar(const BaseRingPtr& ring, const FieldElement& k) {
        if (k.field() != ring->field()) throw IncompatibleRings("scalar over wrong field");
        if (k.is_zero()) return zero(ring);
        return BaseRingElement(ring, {k});
    }

    static BaseRingElement from_integer(const BaseRingPtr& ring, std::int64_t n) {
        return from_scalar(ring, FieldElement::from_integer(ring->field(), n));
    }

    static BaseRingElement generator(const BaseRingPtr& ring) {
        if (!ring->has_generator())
            throw Error("base ring " + ring->description() + " has no generator");
        return BaseRingElement(ring, {FieldElement::zero(ring->field()),
                                      FieldElement::one(ring->field())});
    }

    // Ascending coefficients; reduced mod the modulus for simple extensions.
    static BaseRingElement from_coeffs(const BaseRingPtr& ring, std::vector<FieldElement> coeffs) {
        for (const auto& c : coeffs)
            if (c.field() != ring->field())
                throw IncompatibleRings("coefficient over wrong field");
        detail::poly_trim(coeffs);
        if (ring->kind() == BaseRingSpec::Kind::field_itself && coeffs.size() > 1)
            throw Error("nonscalar element of " + ring->description());
        BaseRingElement e(ring, std::move(coeffs));
        e.reduce();
        return e;
    }

    const BaseRingPtr& ring() const noexcept { return ring_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    // -1 for zero (callers treat that as "minus infinity").
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    FieldElement coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(ring_->field());
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_scalar() const noexcept { return coeffs_.size() <= 1; }

    FieldElement as_field_scalar() const {
        if (!is_scalar()) throw Error("base-ring element is not a field scalar");
        return coeff(0);
    }

    bool is_unit() const {
        if (is_zero()) return false;
        if (ring_->kind() == BaseRingSpec::Kind::univariate_poly) return degree() == 0;
        return true; // K and K[u]/(f) are fields
    }

    BaseRingElement inverse() const {
        if (!is_unit()) throw Error("base-ring element is not a unit");
        if (degree() == 0)
            return BaseRingElement(ring_, {coeffs_[0].inverse()});
        auto [g, s] = detail::poly_half_ext_gcd(coeffs_, ring_->modulus(), ring_->field());
        // modulus irreducible and *this nonzero of lower degree => g == 1
        if (!(g.size() == 1 && g[0].is_one()))
            throw Error("modulus is not coprime to element (reducible modulus?)");
        BaseRingElement r(ring_, std::move(s));
        r.reduce();
        return r;
    }

    BaseRingElement operator-() const { return BaseRingElement(ring_, detail::poly_neg(coeffs_)); }

    BaseRingElement operator+(const BaseRingElement& o) const {
        check_same(o);
        return BaseRingElement(ring_, detail::poly_add(coeffs_, o.coeffs_, ring_->field()));
    }

    BaseRingElement operator-(const BaseRingElement& o) const { return *this + (-o); }

    BaseRingElement operator*(const BaseRingElement& o) const {
        check_same(o);
        BaseRingElement r(ring_, detail::poly_mul(coeffs_, o.coeffs_, ring_->field()));
        r.reduce();
        return r;
    }

    BaseRingElement operator*(const FieldElement& k) const {
        if (k.is_zero()) return zero(ring_);
        auto c = coeffs_;
        for (auto& x : c) x *= k;
        return BaseRingElement(ring_, std::move(c));
    }

    BaseRingElement& operator+=(const BaseRingElement& o) { return *this = *this + o; }
    BaseRingElement& operator-=(const BaseRingElement& o) { return *this = *this - o; }
    BaseRingElement& operator*=(const BaseRingElement& o) { return *this = *this * o; }

    // Substitutes `value` for the ring generator (Horner).  The workhorse
    // behind endomorphism application.
    BaseRingElement eval_at(const BaseRingElement& value) const {
        check_same(value);
        BaseRingElement acc = zero(ring_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * value + from_scalar(ring_, *it);
        return acc;
    }

    bool operator==(const BaseRingElement& o) const {
        if (!compatible(o)) return false;
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const BaseRingElement& o) const { return !(*this == o); }

    // Descending powers: "t^2+t", "-1/2*t+3".  "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const FieldElement& k = coeffs_[i];
            if (k.is_zero()) continue;
            FieldElement mag = k;
            if (out.empty()) {
                if (k.is_negative()) { out += "-"; mag = -k; }
            } else {
                out += k.is_negative() ? " - " : " + ";
                if (k.is_negative()) mag = -k;
            }
            const bool is_const = (i == 0);
            if (!mag.is_one() || is_const) {
                out += mag.str();
                if (!is_const) out += "*";
            }
            if (!is_const) {
                out += ring_->generator_name();
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    BaseRingElement(BaseRingPtr ring, std::vector<FieldElement> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        detail::poly_trim(coeffs_);
    }

    void reduce() {
        if (ring_->kind() == BaseRingSpec::Kind::simple_extension &&
            degree() >= ring_->extension_degree()) {
            coeffs_ = detail::poly_divmod(coeffs_, ring_->modulus(), ring_->field()).second;
        }
    }

    bool compatible(const BaseRingElement& o) const {
        return ring_ == o.ring_ || (ring_ && o.ring_ && ring_->same_as(*o.ring_));
    }

    void check_same(const BaseRingElement& o) const {
        if (!compatible(o))
            throw IncompatibleRings("base-ring elements over " + ring_->description() + " and " +
                                    (o.ring_ ? o.ring_->description() : std::string("<unset>")));
    }

    BaseRingPtr ring_;
    std::vector<FieldElement> coeffs_;
};

inline BaseRingElement operator*(const FieldElement& k, const BaseRingElement& a) { return a * k; }

inline int BaseRingSpec::irreducibility_verdict(const FieldSpec& field,
                                                const std::vector<FieldElement>& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (f[0].is_zero()) return -1; // the generator itself divides f
    if (field.is_prime_field()) {
        // Exhaustive search over monic divisors of degree <= deg/2, bounded by
        // sheer candidate count; larger searches are accepted unverified.
        double candidates = 0;
        for (int d = 1; 2 * d <= deg; ++d) {
            double c = 1;
            for (int i = 0; i < d; ++i) c *= static_cast<double>(field.p());
            candidates += c;
        }
        if (deg > 8 || candidates > 2e6) return 0;
        std::vector<FieldElement> candidate;
        for (int d = 1; 2 * d <= deg; ++d) {
            std::vector<std::int64_t> digits(d, 0);
            while (true) {
                candidate.clear();
                for (int i = 0; i < d; ++i)
                    candidate.push_back(FieldElement::from_integer(field, digits[i]));
                candidate.push_back(FieldElement::one(field));
                if (detail::poly_divmod(f, candidate, field).second.empty()) return -1;
                int pos = 0;
                while (pos < d && ++digits[pos] == field.p()) digits[pos++] = 0;
                if (pos == d) break;
            }
        }
        return 1;
    }
    // Q: the rational root test.  Complete for deg <= 3; for higher degrees it
    // only rules out linear factors, so we accept unverified.
    BigInt lcm = 1;
    for (const auto& c : f) lcm = boost::multiprecision::lcm(lcm, denominator(c.rational_value()));
    std::vector<BigInt> zf;
    for (const auto& c : f) zf.push_back(numerator(BigRational(c.rational_value() * lcm)));
    auto divisors = [](BigInt n) {
        std::vector<BigInt> out;
        if (n < 0) n = -n;
        if (n > 1000000000) return out; // give up, caller treats as unverifiable
        for (BigInt d = 1; d * d <= n; ++d)
            if (n % d == 0) { out.push_back(d); out.push_back(n / d); }
        return out;
    };
    const auto nums = divisors(zf.front());
    const auto dens = divisors(zf.back());
    if (nums.empty() || dens.empty()) return 0;
    for (const auto& num : nums)
        for (const auto& den : dens)
            for (int sign = -1; sign <= 1; sign += 2) {
                const BigRational root(sign * num, den);
                BigRational acc = 0;
                for (auto it = zf.rbegin(); it != zf.rend(); ++it) acc = acc * root + *it;
                if (acc == 0) return -1;
            }
    return deg <= 3 ? 1 : 0;
}

} // namespace skewpbw

#endif // SKEWPBW_BASE_RING_HPP
