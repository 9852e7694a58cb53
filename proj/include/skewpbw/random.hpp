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

#ifndef SKEWPBW_RANDOM_HPP
#define SKEWPBW_RANDOM_HPP

#include <random>

#include "element.hpp"

namespace skewpbw {

/*
 * Seed-stable sampling helpers.  All draws go through mt19937_64 with plain
 * modulo reduction; the standard distributions are implementation-defined and
 * would break cross-platform reproducibility of recorded seeds.
 */

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

inline FieldElement random_field_element(const FieldSpec& field, std::mt19937_64& rng) {
    if (field.kind() == FieldSpec::Kind::prime_field)
        return FieldElement::from_integer(field, static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(field.p()))));
    // Rationals: small integers keep downstream exact arithmetic small.
    return FieldElement::from_integer(field, static_cast<std::int64_t>(draw(rng, 9)) - 4);
}

inline FieldElement random_nonzero_field_element(const FieldSpec& field, std::mt19937_64& rng) {
    for (;;) {
        FieldElement k = random_field_element(field, rng);
        if (!k.is_zero()) return k;
    }
}

inline BaseRingElement random_base_element(const BaseRingPtr& ring, std::mt19937_64& rng,
                                           int max_degree) {
    int top = 0;
    switch (ring->kind()) {
        case BaseRingSpec::Kind::field_itself: top = 0; break;
        case BaseRingSpec::Kind::univariate_poly: top = max_degree; break;
        case BaseRingSpec::Kind::simple_extension:
            top = std::min<int>(max_degree, static_cast<int>(ring->extension_degree()) - 1);
            break;
    }
    std::vector<FieldElement> coeffs;
    for (int j = 0; j <= top; ++j) coeffs.push_back(random_field_element(ring->field(), rng));
    return BaseRingElement::from_coeffs(ring, coeffs);
}

// Random element with a few terms of total degree <= max_degree (always
// counting base-generator degree); retries until nonzero.
inline AlgebraElement random_element(const PresentationPtr& pres, std::mt19937_64& rng,
                                     int max_degree, int max_terms = 3) {
    const std::size_t n = pres->num_generators();
    for (;;) {
        AlgebraElement acc = AlgebraElement::zero(pres);
        const int terms = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_terms)));
        for (int t = 0; t < terms; ++t) {
            Monomial m(n);
            int budget = static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_degree) + 1));
            if (n > 0)
                while (budget > 0 && draw(rng, 4) != 0) {
                    m = m.plus(draw(rng, n));
                    --budget;
                }
            const BaseRingElement c = random_base_element(pres->base(), rng, budget);
            acc.add_term(m, c);
        }
        if (!acc.is_zero()) return acc;
    }
}

} // namespace skewpbw

#endif // SKEWPBW_RANDOM_HPP
