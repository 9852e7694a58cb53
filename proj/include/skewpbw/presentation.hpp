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

#ifndef SKEWPBW_PRESENTATION_HPP
#define SKEWPBW_PRESENTATION_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "maps.hpp"

namespace skewpbw {

/*
 * A skew PBW extension A = sigma(R)<x_1, ..., x_n> is presented by
 *
 *   - a base ring R (see base_ring.hpp) over a field K,
 *   - per generator: an endomorphism sigma_i and sigma_i-derivation delta_i
 *     with the commutation rule  x_i r = sigma_i(r) x_i + delta_i(r),
 *   - per pair i < j: a unit c_ij and an affine tail, with
 *     x_j x_i = c_ij x_i x_j + sum_k t_ijk x_k + t_ij0   (coefficients in R).
 *
 * Left coefficients throughout: elements are R-combinations of standard
 * monomials x_1^{a_1} ... x_n^{a_n} with the coefficient written on the left.
 * Only the bijective case is supported: every sigma_i must be bijective and
 * every c_ij a unit of R, which validation enforces.
 */

class Monomial {
public:
    explicit Monomial(std::size_t n) : e_(n, 0) {}

    static Monomial unit(std::size_t n, std::size_t i) {
        Monomial m(n);
        m.e_[i] = 1;
        return m;
    }

    std::size_t size() const noexcept { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

    int total() const noexcept {
        return std::accumulate(e_.begin(), e_.end(), 0,
                               [](int a, std::uint32_t b) { return a + static_cast<int>(b); });
    }

    bool is_one() const noexcept {
        for (auto v : e_) if (v) return false;
        return true;
    }

    std::optional<std::size_t> first_support() const noexcept {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i]) return i;
        return std::nullopt;
    }

    Monomial plus(std::size_t i, std::uint32_t k = 1) const {
        Monomial m(*this);
        m.e_[i] += k;
        return m;
    }

    Monomial minus(std::size_t i) const {
        Monomial m(*this);
        if (m.e_[i] == 0) throw Error("negative exponent in monomial");
        --m.e_[i];
        return m;
    }

    Monomial operator+(const Monomial& o) const {
        Monomial m(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
        return m;
    }

    bool operator==(const Monomial& o) const noexcept { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const noexcept { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
};

// Canonical term order, which is also the printing order: higher total degree
// first; ties broken lexicographically with earlier generators weighted
// heavier (so x^2 before x*y before y^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int ta = a.total(), tb = b.total();
        if (ta != tb) return ta > tb;
        return a.exponents() > b.exponents();
    }
};

class AlgebraPresentation;
using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

class PresentationBuilder;

class AlgebraPresentation {
public:
    const FieldSpec& field() const noexcept { return base_->field(); }
    const BaseRingPtr& base() const noexcept { return base_; }
    std::size_t num_generators() const noexcept { return names_.size(); }
    const std::vector<std::string>& generator_names() const noexcept { return names_; }
    const std::string& generator_name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    const BaseRingMap& sigma(std::size_t i) const { return sigma_.at(i); }
    const BaseRingMap& delta(std::size_t i) const { return delta_.at(i); }

    // Relation data for i < j in  x_j x_i = c x_i x_j + sum_k t_k x_k + t_0.
    const BaseRingElement& c(std::size_t i, std::size_t j) const {
        check_pair(i, j);
        return c_[i * num_generators() + j];
    }
    const BaseRingElement& tail_const(std::size_t i, std::size_t j) const {
        check_pair(i, j);
        return tail0_[i * num_generators() + j];
    }
    const BaseRingElement& tail_lin(std::size_t i, std::size_t j, std::size_t k) const {
        check_pair(i, j);
        return tailk_[(i * num_generators() + j) * num_generators() + k];
    }

    // Structural fingerprint; elements of two presentations interoperate only
    // when the signatures agree byte for byte.
    const std::string& signature() const noexcept { return signature_; }

    bool same_as(const AlgebraPresentation& o) const { return signature_ == o.signature_; }

private:
    friend class PresentationBuilder;
    AlgebraPresentation() = default;

    void check_pair(std::size_t i, std::size_t j) const {
        if (!(i < j && j < num_generators())) throw Error("relation index out of range");
    }

    BaseRingPtr base_;
    std::vector<std::string> names_;
    std::vector<BaseRingMap> sigma_, delta_;
    std::vector<BaseRingElement> c_, tail0_, tailk_;
    std::string signature_;
};

class PresentationBuilder {
public:
    explicit PresentationBuilder(BaseRingPtr base) : base_(std::move(base)) {}

    // Defaults: sigma = id, delta = 0.
    PresentationBuilder& add_generator(const std::string& name) {
        return add_generator(name, BaseRingMap::identity(base_),
                             BaseRingMap::zero_derivation(base_));
    }

    PresentationBuilder& add_generator(const std::string& name, const BaseRingMap& sigma,
                                       const BaseRingMap& delta) {
        BaseRingSpec::check_name(name);
        names_.push_back(name);
        sigma_.push_back(sigma);
        delta_.push_back(delta);
        return *this;
    }

    // x_j x_i = c x_i x_j + t0, for i < j.  Unset pairs commute.
    PresentationBuilder& set_relation(std::size_t i, std::size_t j, const BaseRingElement& c,
                                      const BaseRingElement& t0) {
        relations_.push_back({i, j, c, t0, {}});
        return *this;
    }

    // Adds a linear tail coefficient:  ... + t_k x_k  on the relation (i, j).
    PresentationBuilder& set_relation_tail(std::size_t i, std::size_t j, std::size_t k,
                                           const BaseRingElement& tk) {
        for (auto& r : relations_)
            if (r.i == i && r.j == j) {
                r.tails.push_back({k, tk});
                return *this;
            }
        relations_.push_back({i, j, BaseRingElement::one(base_), BaseRingElement::zero(base_),
                              {{k, tk}}});
        return *this;
    }

    PresentationPtr build() const {
        const std::size_t n = names_.size();
        auto p = std::shared_ptr<AlgebraPresentation>(new AlgebraPresentation());
        p->base_ = base_;
        p->names_ = names_;
        p->sigma_ = sigma_;
        p->delta_ = delta_;

        // Generator names: unique, and distinct from the base generator.
        for (std::size_t i = 0; i < n; ++i) {
            if (base_->has_generator() && names_[i] == base_->generator_name())
                throw InvalidPresentation("generator '" + names_[i] + "' shadows the base-ring generator");
            for (std::size_t j = i + 1; j < n; ++j)
                if (names_[i] == names_[j])
                    throw InvalidPresentation("duplicate generator name '" + names_[i] + "'");
        }

        // Maps: sigma_i bijective, delta_i a sigma_i-derivation.
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = sigma_[i];
            if (s.kind() != BaseRingMap::Kind::endomorphism || !s.ring()->same_as(*base_))
                throw InvalidPresentation("sigma_" + names_[i] + " is not an endomorphism of the base ring");
            if (base_->kind() == BaseRingSpec::Kind::univariate_poly &&
                s.generator_image().degree() != 1)
                throw InvalidPresentation("sigma_" + names_[i] + " is not bijective (image must be degree 1)");
            const auto& d = delta_[i];
            if (d.kind() != BaseRingMap::Kind::sigma_derivation || !d.ring()->same_as(*base_))
                throw InvalidPresentation("delta_" + names_[i] + " is not a derivation of the base ring");
            if (!d.is_zero_map() && !(d.paired_sigma().generator_image() == s.generator_image()))
                throw InvalidPresentation("delta_" + names_[i] + " is not paired with sigma_" + names_[i]);
        }

        // Relations: units for c, and everything living in R.
        p->c_.assign(n * n, BaseRingElement::one(base_));
        p->tail0_.assign(n * n, BaseRingElement::zero(base_));
        p->tailk_.assign(n * n * n, BaseRingElement::zero(base_));
        for (const auto& r : relations_) {
            if (!(r.i < r.j && r.j < n))
                throw InvalidPresentation("relation indices must satisfy i < j < n");
            if (!r.c.is_unit())
                throw InvalidPresentation("relation coefficient c_" + std::to_string(r.i + 1) + "," +
                                          std::to_string(r.j + 1) + " is not a unit");
            p->c_[r.i * n + r.j] = r.c;
            p->tail0_[r.i * n + r.j] = r.t0;
            for (const auto& [k, tk] : r.tails) {
                if (k >= n) throw InvalidPresentation("tail index out of range");
                p->tailk_[(r.i * n + r.j) * n + k] = tk;
            }
        }

        p->signature_ = fingerprint(*p);
        return p;
    }

private:
    struct Relation {
        std::size_t i, j;
        BaseRingElement c, t0;
        std::vector<std::pair<std::size_t, BaseRingElement>> tails;
    };

    static std::string fingerprint(const AlgebraPresentation& p) {
        std::string s = "field=" + p.field().description() + ";base=" + p.base()->description();
        if (p.base()->kind() == BaseRingSpec::Kind::simple_extension) {
            s += ";mod=";
            for (const auto& c : p.base()->modulus()) s += c.str() + ",";
        }
        s += ";gens=";
        for (const auto& g : p.generator_names()) s += g + ",";
        for (std::size_t i = 0; i < p.num_generators(); ++i) {
            s += ";s" + std::to_string(i) + "=" + p.sigma(i).generator_image().str();
            s += ";d" + std::to_string(i) + "=" + p.delta(i).generator_image().str();
        }
        for (std::size_t i = 0; i < p.num_generators(); ++i)
            for (std::size_t j = i + 1; j < p.num_generators(); ++j) {
                s += ";r" + std::to_string(i) + "," + std::to_string(j) + "=" +
                     p.c(i, j).str() + "|" + p.tail_const(i, j).str();
                for (std::size_t k = 0; k < p.num_generators(); ++k)
                    s += "|" + p.tail_lin(i, j, k).str();
            }
        return s;
    }

    BaseRingPtr base_;
    std::vector<std::string> names_;
    std::vector<BaseRingMap> sigma_, delta_;
    std::vector<Relation> relations_;
};

} // namespace skewpbw

#endif // SKEWPBW_PRESENTATION_HPP
