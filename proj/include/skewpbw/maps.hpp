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

#ifndef SKEWPBW_MAPS_HPP
#define SKEWPBW_MAPS_HPP

#include <memory>
#include <optional>
#include <utility>

#include "base_ring.hpp"
#include "errors.hpp"

namespace skewpbw {

/*
 * Maps on a base ring R: K-algebra endomorphisms sigma and sigma-derivations
 * delta (delta(ab) = sigma(a) delta(b) + delta(a) b).  Both are pinned down by
 * the image of the ring generator; everything else follows from K-linearity
 * and the multiplication rule.  For R = K the only choices are the identity
 * and the zero map.
 */

class BaseRingMap {
public:
    enum class Kind { endomorphism, sigma_derivation };

    static BaseRingMap identity(const BaseRingPtr& ring) {
        BaseRingMap m(ring, Kind::endomorphism);
        if (ring->has_generator()) m.image_ = BaseRingElement::generator(ring);
        else m.image_ = BaseRingElement::zero(ring);
        return m;
    }

    // sigma with sigma(generator) = image.  For simple extensions the image
    // must be another root of the modulus, which makes sigma an automorphism.
    static BaseRingMap endomorphism(const BaseRingPtr& ring, const BaseRingElement& image) {
        if (!ring->has_generator()) {
            if (!image.is_zero() && !(image.is_scalar() && image.coeff(0).is_zero()))
                throw InvalidParams("endomorphism of " + ring->description() +
                                    " admits no generator image");
            return identity(ring);
        }
        if (!image.ring()->same_as(*ring)) throw IncompatibleRings("generator image in wrong ring");
        if (ring->kind() == BaseRingSpec::Kind::simple_extension) {
            BaseRingElement value = BaseRingElement::zero(ring);
            for (auto it = ring->modulus().rbegin(); it != ring->modulus().rend(); ++it)
                value = value * image + BaseRingElement::from_scalar(ring, *it);
            if (!value.is_zero())
                throw InvalidParams("generator image is not a root of the extension modulus");
        }
        BaseRingMap m(ring, Kind::endomorphism);
        m.image_ = image;
        return m;
    }

    static BaseRingMap zero_derivation(const BaseRingPtr& ring) {
        return sigma_derivation(ring, BaseRingElement::zero(ring), identity(ring));
    }

    // delta with delta(generator) = image, extended along the given sigma.
    static BaseRingMap sigma_derivation(const BaseRingPtr& ring, const BaseRingElement& image,
                                        const BaseRingMap& sigma) {
        if (sigma.kind() != Kind::endomorphism)
            throw InvalidParams("paired map of a derivation must be an endomorphism");
        if (!ring->has_generator()) {
            if (!image.is_zero())
                throw InvalidParams("derivations of " + ring->description() + " are zero");
            BaseRingMap m(ring, Kind::sigma_derivation);
            m.image_ = BaseRingElement::zero(ring);
            m.paired_sigma_ = std::make_shared<BaseRingMap>(sigma);
            return m;
        }
        if (!image.ring()->same_as(*ring)) throw IncompatibleRings("generator image in wrong ring");
        BaseRingMap m(ring, Kind::sigma_derivation);
        m.image_ = image;
        m.paired_sigma_ = std::make_shared<BaseRingMap>(sigma);
        if (ring->kind() == BaseRingSpec::Kind::simple_extension && !image.is_zero()) {
            // Well-definedness on K[u]/(f): the extension formula must kill f.
            BaseRingElement value = BaseRingElement::zero(ring);
            const auto& f = ring->modulus();
            for (std::size_t i = 1; i < f.size(); ++i)
                value += m.power_image(static_cast<int>(i)) * f[i];
            if (!value.is_zero())
                throw InvalidParams("derivation does not descend to the quotient ring");
        }
        return m;
    }

    Kind kind() const noexcept { return kind_; }
    const BaseRingPtr& ring() const noexcept { return ring_; }
    const BaseRingElement& generator_image() const noexcept { return image_; }

    const BaseRingMap& paired_sigma() const {
        if (!paired_sigma_) throw Error("map has no paired endomorphism");
        return *paired_sigma_;
    }

    bool is_identity() const {
        return kind_ == Kind::endomorphism &&
               (!ring_->has_generator() || image_ == BaseRingElement::generator(ring_));
    }

    bool is_zero_map() const { return kind_ == Kind::sigma_derivation && image_.is_zero(); }

    BaseRingElement apply(const BaseRingElement& a) const {
        if (!a.ring()->same_as(*ring_)) throw IncompatibleRings("map applied across rings");
        if (kind_ == Kind::endomorphism) {
            if (!ring_->has_generator() || is_identity()) return a;
            return a.eval_at(image_);
        }
        // sigma-derivation: delta(sum k_i t^i) = sum k_i delta(t^i) with
        // delta(t^i) = sigma(t) delta(t^{i-1}) + delta(t) t^{i-1}.
        if (image_.is_zero() || a.is_scalar()) return BaseRingElement::zero(ring_);
        BaseRingElement acc = BaseRingElement::zero(ring_);
        for (int i = 1; i <= a.degree(); ++i)
            acc += power_image(i) * a.coeff(static_cast<std::size_t>(i));
        return acc;
    }

private:
    BaseRingMap(BaseRingPtr ring, Kind kind) : ring_(std::move(ring)), kind_(kind) {}

    // delta(t^i) for a derivation, by the recurrence above.
    BaseRingElement power_image(int i) const {
        const BaseRingElement t = BaseRingElement::generator(ring_);
        const BaseRingElement sigma_t = paired_sigma().apply(t);
        BaseRingElement dpow = BaseRingElement::zero(ring_); // delta(t^0)
        BaseRingElement tpow = BaseRingElement::one(ring_);  // t^0
        for (int k = 1; k <= i; ++k) {
            dpow = sigma_t * dpow + image_ * tpow;
            if (k < i) tpow *= t;
        }
        return dpow;
    }

    BaseRingPtr ring_;
    Kind kind_;
    BaseRingElement image_;
    std::shared_ptr<const BaseRingMap> paired_sigma_; // derivations only
};

inline BaseRingElement apply_endo(const BaseRingMap& sigma, const BaseRingElement& a) {
    if (sigma.kind() != BaseRingMap::Kind::endomorphism)
        throw Error("apply_endo on a derivation");
    return sigma.apply(a);
}

inline BaseRingElement apply_sigma_derivation(const BaseRingMap& delta, const BaseRingElement& a) {
    if (delta.kind() != BaseRingMap::Kind::sigma_derivation)
        throw Error("apply_sigma_derivation on an endomorphism");
    return delta.apply(a);
}

// Smallest v >= 1 with sigma^v = id, searched up to `cap`; nullopt if none
// found within the cap (sigma may have infinite order, or just a large one).
inline std::optional<int> endo_order(const BaseRingMap& sigma, int cap) {
    if (sigma.kind() != BaseRingMap::Kind::endomorphism)
        throw Error("endo_order on a derivation");
    if (!sigma.ring()->has_generator()) return 1;
    const BaseRingElement t = BaseRingElement::generator(sigma.ring());
    BaseRingElement cur = sigma.generator_image();
    for (int v = 1; v <= cap; ++v) {
        if (cur == t) return v;
        cur = sigma.apply(cur);
    }
    return std::nullopt;
}

} // namespace skewpbw

#endif // SKEWPBW_MAPS_HPP
