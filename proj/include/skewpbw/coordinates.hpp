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

#ifndef SKEWPBW_COORDINATES_HPP
#define SKEWPBW_COORDINATES_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "element.hpp"
#include "matrix.hpp"

namespace skewpbw {

/*
 * A as a K-vector space: the basis {t^j x^alpha} of base-generator powers
 * times standard monomials, truncated at a total degree.  Entry order is
 * ascending in degree (ties: base power, then the canonical monomial order),
 * which matters downstream: nullspace bases over these coordinates are then
 * automatically compatible with the degree filtration, so per-degree
 * dimensions can be read off the solution supports without extra solves.
 */

struct BasisEntry {
    int base_power; // exponent of the base-ring generator (0 when R = K)
    Monomial mono;
    int degree;     // base_power + |mono|
};

class DegreeBasis {
public:
    DegreeBasis(PresentationPtr pres, int max_degree)
        : pres_(std::move(pres)), max_degree_(max_degree) {
        if (max_degree < 0) throw Error("degree bound must be nonnegative");
        const std::size_t n = pres_->num_generators();
        const auto& base = pres_->base();

        // Base-power ceiling per total degree: unbounded for K[t] (cut by the
        // degree), 0 for K, ext-degree-1 for K[u]/(f).
        const auto max_base_power = [&](int remaining) -> int {
            switch (base->kind()) {
                case BaseRingSpec::Kind::field_itself: return 0;
                case BaseRingSpec::Kind::univariate_poly: return remaining;
                case BaseRingSpec::Kind::simple_extension:
                    return std::min<int>(remaining, static_cast<int>(base->extension_degree()) - 1);
            }
            return 0;
        };

        for (int d = 0; d <= max_degree; ++d) {
            std::vector<Monomial> monos;
            for (int j = 0; j <= max_base_power(d); ++j) {
                monos.clear();
                collect_monomials(n, d - j, Monomial(n), 0, monos);
                std::sort(monos.begin(), monos.end(), MonomialOrder{});
                for (const auto& m : monos) {
                    index_.emplace(std::make_pair(j, m.exponents()), entries_.size());
                    entries_.push_back({j, m, d});
                }
            }
            cum_.push_back(entries_.size());
        }
    }

    const PresentationPtr& presentation() const noexcept { return pres_; }
    int max_degree() const noexcept { return max_degree_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const BasisEntry& entry(std::size_t idx) const { return entries_.at(idx); }

    std::optional<std::size_t> index_of(int base_power, const Monomial& m) const {
        const auto it = index_.find(std::make_pair(base_power, m.exponents()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Count of basis entries of degree <= d.
    std::size_t count_up_to(int d) const {
        if (d < 0) return 0;
        return cum_[static_cast<std::size_t>(std::min(d, max_degree_))];
    }

    AlgebraElement element_at(std::size_t idx) const {
        const auto& e = entries_.at(idx);
        return AlgebraElement::term(pres_, e.mono, base_power_element(e.base_power));
    }

    bool fits(const AlgebraElement& a) const {
        const auto d = a.total_degree();
        return !d || *d <= max_degree_;
    }

    std::vector<FieldElement> coordinates(const AlgebraElement& a) const {
        std::vector<FieldElement> v(size(), FieldElement::zero(pres_->field()));
        for (const auto& [m, r] : a.terms()) {
            for (int j = 0; j <= r.degree(); ++j) {
                const FieldElement c = r.coeff(static_cast<std::size_t>(j));
                if (c.is_zero()) continue;
                const auto idx = index_of(j, m);
                if (!idx) throw CapExceeded("element does not fit the degree-bounded basis", max_degree_);
                v[*idx] = c;
            }
        }
        return v;
    }

    AlgebraElement combine(const std::vector<FieldElement>& coords) const {
        if (coords.size() != size()) throw Error("coordinate vector has wrong length");
        AlgebraElement acc = AlgebraElement::zero(pres_);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            const auto& e = entries_[i];
            acc.add_term(e.mono, coords[i] * base_power_element(e.base_power));
        }
        return acc;
    }

private:
    static void collect_monomials(std::size_t n, int budget, Monomial cur, std::size_t at,
                                  std::vector<Monomial>& out) {
        if (budget < 0) return;
        if (at == n) {
            if (budget == 0) out.push_back(cur);
            return;
        }
        if (at + 1 == n) {
            out.push_back(cur.plus(at, static_cast<std::uint32_t>(budget)));
            return;
        }
        for (int k = 0; k <= budget; ++k)
            collect_monomials(n, budget - k, cur.plus(at, static_cast<std::uint32_t>(k)), at + 1, out);
    }

    BaseRingElement base_power_element(int j) const {
        std::vector<FieldElement> coeffs(static_cast<std::size_t>(j) + 1,
                                         FieldElement::zero(pres_->field()));
        coeffs.back() = FieldElement::one(pres_->field());
        return BaseRingElement::from_coeffs(pres_->base(), coeffs);
    }

    PresentationPtr pres_;
    int max_degree_;
    std::vector<BasisEntry> entries_;
    std::vector<std::size_t> cum_;
    std::map<std::pair<int, std::vector<std::uint32_t>>, std::size_t> index_;
};

} // namespace skewpbw

#endif // SKEWPBW_COORDINATES_HPP
