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

#ifndef SKEWPBW_ELEMENT_HPP
#define SKEWPBW_ELEMENT_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "presentation.hpp"

namespace skewpbw {

/*
 * Elements of a skew PBW extension in normal form: finitely many standard
 * monomials, each with a left coefficient from the base ring.  Multiplication
 * rewrites products back into normal form using the commutation rules
 *
 *   x_i r   -> sigma_i(r) x_i + delta_i(r)
 *   x_j x_i -> c_ij x_i x_j + (linear tail)        for i < j
 *
 * applied recursively.  The recursion terminates because every step either
 * strictly drops the number of generator symbols in play or moves a strictly
 * smaller generator index to the front with no new inversions; no confluence
 * assumption is needed for termination (check_pbw_consistency below tests
 * confluence separately, and deliberately works on broken presentations too).
 */

class AlgebraElement {
public:
    using TermMap = std::map<Monomial, BaseRingElement, MonomialOrder>;

    static AlgebraElement zero(const PresentationPtr& pres) { return AlgebraElement(pres); }

    static AlgebraElement scalar(const PresentationPtr& pres, const BaseRingElement& r) {
        AlgebraElement e(pres);
        e.add_term(Monomial(pres->num_generators()), r);
        return e;
    }

    static AlgebraElement one(const PresentationPtr& pres) {
        return scalar(pres, BaseRingElement::one(pres->base()));
    }

    static AlgebraElement from_field_scalar(const PresentationPtr& pres, const FieldElement& k) {
        return scalar(pres, BaseRingElement::from_scalar(pres->base(), k));
    }

    static AlgebraElement generator(const PresentationPtr& pres, std::size_t i) {
        if (i >= pres->num_generators()) throw Error("generator index out of range");
        AlgebraElement e(pres);
        e.add_term(Monomial::unit(pres->num_generators(), i),
                   BaseRingElement::one(pres->base()));
        return e;
    }

    // The base-ring generator t (or u) as an element of A.
    static AlgebraElement base_generator(const PresentationPtr& pres) {
        return scalar(pres, BaseRingElement::generator(pres->base()));
    }

    static AlgebraElement term(const PresentationPtr& pres, const Monomial& m,
                               const BaseRingElement& r) {
        if (m.size() != pres->num_generators()) throw Error("monomial arity mismatch");
        AlgebraElement e(pres);
        e.add_term(m, r);
        return e;
    }

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Max over terms of |monomial| + deg_R(coefficient); nullopt for zero
    // (read it as minus infinity).  The base-ring generator counts toward the
    // degree, so t^2 x has total degree 3.
    std::optional<int> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        int best = 0;
        bool first = true;
        for (const auto& [m, r] : terms_) {
            const int d = m.total() + r.degree();
            if (first || d > best) { best = d; first = false; }
        }
        return best;
    }

    AlgebraElement operator-() const {
        AlgebraElement e(pres_);
        for (const auto& [m, r] : terms_) e.terms_.emplace(m, -r);
        return e;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        check_same(o);
        AlgebraElement e(*this);
        for (const auto& [m, r] : o.terms_) e.add_term(m, r);
        return e;
    }

    AlgebraElement operator-(const AlgebraElement& o) const { return *this + (-o); }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_same(o);
        for (const auto& [m, r] : o.terms_) add_term(m, r);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) { return *this += -o; }

    // Left scalar action r * a (coefficients multiply inside R).
    friend AlgebraElement operator*(const BaseRingElement& r, const AlgebraElement& a) {
        AlgebraElement e(a.pres_);
        if (r.is_zero()) return e;
        for (const auto& [m, c] : a.terms_) e.add_term(m, r * c);
        return e;
    }

    AlgebraElement operator*(const AlgebraElement& o) const;

    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    AlgebraElement pow(int k) const {
        if (k < 0) throw Error("negative power of an algebra element");
        AlgebraElement acc = one(pres_);
        for (int s = 0; s < k; ++s) acc = acc * *this;
        return acc;
    }

    bool operator==(const AlgebraElement& o) const {
        if (!compatible(o)) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // Canonical text form; parse_element inverts this exactly.  Terms appear
    // in the monomial order (degree-descending), multi-term coefficients are
    // parenthesized: "x^2 + 3*x*y + y^2", "(t^2 + t)*x_h^2", "t*x + 1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, r] : terms_) {
            BaseRingElement coeff = r;
            bool negative = false;
            const FieldElement lead = r.coeff(static_cast<std::size_t>(std::max(r.degree(), 0)));
            if (lead.is_negative()) { negative = true; coeff = -r; }
            if (negative && is_constant_monomial(m) && term_count(r) > 1) {
                // A bare negated sum would reassociate: "-" + "4*u - 1" reads
                // as (-4u) - 1, not -(4u - 1).  Print the sum itself up front
                // or parenthesize it after a minus.
                if (out.empty())
                    out += r.str();
                else
                    out += " - (" + coeff.str() + ")";
                continue;
            }
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            out += render_term(m, coeff);
        }
        return out;
    }

    // Internal-but-shared: adds r * x^m, erasing the term if it cancels.
    void add_term(const Monomial& m, const BaseRingElement& r) {
        if (r.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, r);
        } else {
            it->second += r;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    explicit AlgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {}

    bool compatible(const AlgebraElement& o) const {
        return pres_ == o.pres_ || (pres_ && o.pres_ && pres_->same_as(*o.pres_));
    }

    void check_same(const AlgebraElement& o) const {
        if (!compatible(o)) throw IncompatibleAlgebras("elements of different presentations");
    }

    static bool is_constant_monomial(const Monomial& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) return false;
        return true;
    }

    static int term_count(const BaseRingElement& r) {
        int nz = 0;
        for (int i = 0; i <= r.degree(); ++i)
            if (!r.coeff(static_cast<std::size_t>(i)).is_zero()) ++nz;
        return nz;
    }

    std::string render_term(const Monomial& m, const BaseRingElement& coeff) const {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += pres_->generator_name(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) return coeff.str();
        if (coeff.is_one()) return mono;
        const bool multi_term = [&] {
            int nz = 0;
            for (int i = 0; i <= coeff.degree(); ++i)
                if (!coeff.coeff(static_cast<std::size_t>(i)).is_zero()) ++nz;
            return nz > 1;
        }();
        if (multi_term) return "(" + coeff.str() + ")*" + mono;
        return coeff.str() + "*" + mono;
    }

    PresentationPtr pres_;
    TermMap terms_;
};

namespace detail {

// One product's worth of rewriting state; the memo keeps x_i * x^m normal
// forms, which repeat heavily inside a single multiplication.
class Multiplier {
public:
    explicit Multiplier(const PresentationPtr& pres) : pres_(pres) {}

    // x_i * e
    AlgebraElement gen_times(std::size_t i, const AlgebraElement& e) {
        AlgebraElement res = AlgebraElement::zero(pres_);
        for (const auto& [m, r] : e.terms()) {
            const BaseRingElement sr = pres_->sigma(i).apply(r);
            const BaseRingElement dr = pres_->delta(i).apply(r);
            if (!dr.is_zero()) res.add_term(m, dr);
            if (!sr.is_zero()) res += sr * gen_times_monomial(i, m);
        }
        return res;
    }

    // x^m * e, peeling generators off m from the right.
    AlgebraElement monomial_times(const Monomial& m, const AlgebraElement& e) {
        AlgebraElement res = e;
        for (std::size_t i = m.size(); i-- > 0;)
            for (std::uint32_t k = 0; k < m[i]; ++k) res = gen_times(i, res);
        return res;
    }

private:
    // Normal form of x_i * x^m.
    const AlgebraElement& gen_times_monomial(std::size_t i, const Monomial& m) {
        const auto key = std::make_pair(i, m.exponents());
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        AlgebraElement res = AlgebraElement::zero(pres_);
        const auto support = m.first_support();
        if (!support || i <= *support) {
            // Already ordered: x_i slides into place.
            res.add_term(m.plus(i), BaseRingElement::one(pres_->base()));
        } else {
            // m = x_j * m' with j < i: apply x_i x_j = c x_j x_i + tail.
            const std::size_t j = *support;
            const Monomial rest = m.minus(j);
            const AlgebraElement inner = gen_times_monomial(i, rest); // copy: cache may move
            res += pres_->c(j, i) * gen_times(j, inner);
            for (std::size_t k = 0; k < pres_->num_generators(); ++k) {
                const BaseRingElement& tk = pres_->tail_lin(j, i, k);
                if (!tk.is_zero()) res += tk * gen_times_monomial(k, rest);
            }
            const BaseRingElement& t0 = pres_->tail_const(j, i);
            if (!t0.is_zero()) res.add_term(rest, t0);
        }
        return cache_.emplace(key, std::move(res)).first->second;
    }

    PresentationPtr pres_;
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, AlgebraElement> cache_;
};

} // namespace detail

inline AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same(o);
    detail::Multiplier mult(pres_);
    AlgebraElement res = zero(pres_);
    for (const auto& [m, r] : terms_)
        res += r * mult.monomial_times(m, o);
    return res;
}

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

/*
 * PBW consistency: the defining data must make the rewriting confluent.
 * This checker compares the two association orders of concrete triple
 * products: all generator triples, all generator pairs against the base-ring
 * generator, and a fixed seeded sample of monomial triples up to
 * degree_bound.  A presentation that fails here is not a skew PBW extension
 * (standard monomials would not be a free basis), and the witness shows one
 * offending triple with both normal forms.
 */

struct ConsistencyReport {
    bool consistent = true;
    std::string witness; // empty iff consistent
};

inline ConsistencyReport check_pbw_consistency(const PresentationPtr& pres, int degree_bound) {
    if (degree_bound < 3) throw Error("consistency check needs degree bound >= 3");
    const std::size_t n = pres->num_generators();

    std::vector<std::pair<std::string, AlgebraElement>> atoms;
    for (std::size_t i = 0; i < n; ++i)
        atoms.emplace_back(pres->generator_name(i), AlgebraElement::generator(pres, i));
    if (pres->base()->has_generator())
        atoms.emplace_back(pres->base()->generator_name(), AlgebraElement::base_generator(pres));

    auto probe = [&](const std::pair<std::string, AlgebraElement>& a,
                     const std::pair<std::string, AlgebraElement>& b,
                     const std::pair<std::string, AlgebraElement>& c) -> std::optional<std::string> {
        const AlgebraElement left = (a.second * b.second) * c.second;
        const AlgebraElement right = a.second * (b.second * c.second);
        if (left == right) return std::nullopt;
        return "(" + a.first + " * " + b.first + ") * " + c.first + " = " + left.str() +
               "   but   " + a.first + " * (" + b.first + " * " + c.first + ") = " + right.str();
    };

    for (const auto& a : atoms)
        for (const auto& b : atoms)
            for (const auto& c : atoms)
                if (auto w = probe(a, b, c)) return {false, *w};

    // Deterministic random monomial triples; exercises longer overlaps that
    // the generator triples alone would miss.
    std::mt19937_64 rng(0);
    const int samples = 64;
    for (int s = 0; s < samples; ++s) {
        auto random_monomial = [&] {
            Monomial m(n);
            if (n == 0) return m;
            const int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(degree_bound + 1));
            for (int b = 0; b < budget; ++b) m = m.plus(rng() % n);
            return m;
        };
        const auto lift = [&](const Monomial& m) {
            return std::make_pair(std::string("monomial"),
                                  AlgebraElement::term(pres, m, BaseRingElement::one(pres->base())));
        };
        auto a = lift(random_monomial()), b = lift(random_monomial()), c = lift(random_monomial());
        a.first = a.second.str(); b.first = b.second.str(); c.first = c.second.str();
        if (auto w = probe(a, b, c)) return {false, *w};
    }
    return {};
}

} // namespace skewpbw

#endif // SKEWPBW_ELEMENT_HPP
