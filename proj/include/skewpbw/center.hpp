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

#ifndef SKEWPBW_CENTER_HPP
#define SKEWPBW_CENTER_HPP

#include <string>
#include <vector>

#include "coordinates.hpp"
#include "maps.hpp"

namespace skewpbw {

/*
 * Degree-bounded center computation.  Centrality is decided against the
 * algebra's generating set (the n skew generators plus the base-ring
 * generator when R != K): the centralizer of a generating set is a subring
 * containing K, so commuting with the generators is equivalent to commuting
 * with everything.
 */

struct CenterBasis {
    int degree_bound = 0;
    std::vector<AlgebraElement> basis;
    // dims_by_degree[e] = dim_K { z central : total_degree(z) <= e }, e = 0..degree_bound.
    std::vector<std::size_t> dims_by_degree;
};

// The elements every centrality test commutes against.
inline std::vector<AlgebraElement> generating_probes(const PresentationPtr& pres) {
    std::vector<AlgebraElement> probes;
    for (std::size_t i = 0; i < pres->num_generators(); ++i)
        probes.push_back(AlgebraElement::generator(pres, i));
    if (pres->base()->has_generator())
        probes.push_back(AlgebraElement::base_generator(pres));
    return probes;
}

inline bool is_central(const AlgebraElement& a) {
    for (const auto& g : generating_probes(a.presentation()))
        if (!commutator(a, g).is_zero()) return false;
    return true;
}

/*
 * Exact K-basis of the central elements of total degree <= d: write a generic
 * K-combination of the degree-<= d basis monomials, impose vanishing of the
 * commutator with every probe, and take the nullspace.  Because the unknown
 * columns are ordered by ascending degree and the nullspace basis is in
 * canonical (echelon) form, each solution's trailing support column tells
 * which filtration step it first appears in; dims_by_degree falls out without
 * any further solves.
 */
inline CenterBasis central_space(const PresentationPtr& pres, int d) {
    if (d < 0) throw Error("degree bound must be nonnegative");
    const DegreeBasis cols(pres, d);
    const auto probes = generating_probes(pres);

    // Pass 1: commutators of every candidate basis monomial with every probe.
    std::vector<std::vector<AlgebraElement>> comms(probes.size());
    int row_degree = 0;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        comms[p].reserve(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            AlgebraElement c = commutator(cols.element_at(k), probes[p]);
            if (const auto deg = c.total_degree(); deg && *deg > row_degree) row_degree = *deg;
            comms[p].push_back(std::move(c));
        }
    }

    // Pass 2: coordinatize in a row space wide enough for every commutator.
    const DegreeBasis rows(pres, row_degree);
    ExactMatrix m(pres->field(), probes.size() * rows.size(), cols.size());
    for (std::size_t p = 0; p < probes.size(); ++p)
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (comms[p][k].is_zero()) continue;
            const auto v = rows.coordinates(comms[p][k]);
            for (std::size_t r = 0; r < v.size(); ++r)
                if (!v[r].is_zero()) m.at(p * rows.size() + r, k) = v[r];
        }

    CenterBasis out;
    out.degree_bound = d;
    const auto null_vecs = nullspace_basis(m);

    std::vector<std::size_t> leading;
    for (const auto& v : null_vecs) {
        std::size_t first = v.size(), last = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                if (first == v.size()) first = i;
                last = i;
            }
        leading.push_back(last);
        // Normalize: least-index (degree-lex-least) coordinate becomes 1.
        std::vector<FieldElement> w = v;
        const FieldElement scale = w[first].inverse();
        for (auto& x : w) x = x * scale;
        out.basis.push_back(cols.combine(w));
    }

    for (int e = 0; e <= d; ++e) {
        const std::size_t cutoff = cols.count_up_to(e);
        std::size_t dim = 0;
        for (const auto l : leading)
            if (l < cutoff) ++dim;
        out.dims_by_degree.push_back(dim);
    }
    return out;
}

// K-basis of { r in R : sigma(r) = r, deg r <= d }.
inline std::vector<BaseRingElement> fixed_subring_basis(const BaseRingMap& sigma, int d) {
    if (sigma.kind() != BaseRingMap::Kind::endomorphism)
        throw InvalidParams("fixed subring requires an endomorphism");
    if (d < 0) throw Error("degree bound must be nonnegative");
    const auto& ring = sigma.ring();

    int top = 0; // highest t-power among the unknowns
    switch (ring->kind()) {
        case BaseRingSpec::Kind::field_itself: top = 0; break;
        case BaseRingSpec::Kind::univariate_poly: top = d; break;
        case BaseRingSpec::Kind::simple_extension:
            top = std::min<int>(d, static_cast<int>(ring->extension_degree()) - 1);
            break;
    }

    // Columns: unknown coefficients of 1, t, ..., t^top.  Rows: coefficients
    // of sigma(t^j) - t^j (degree <= top for bijective sigma and quotients).
    std::vector<BaseRingElement> images;
    int row_top = top;
    for (int j = 0; j <= top; ++j) {
        BaseRingElement tj = BaseRingElement::one(ring);
        for (int s = 0; s < j; ++s) tj = tj * BaseRingElement::generator(ring);
        const BaseRingElement diff = sigma.apply(tj) - tj;
        row_top = std::max(row_top, diff.degree());
        images.push_back(diff);
    }

    ExactMatrix m(ring->field(), static_cast<std::size_t>(row_top) + 1,
                  static_cast<std::size_t>(top) + 1);
    for (int j = 0; j <= top; ++j)
        for (int r = 0; r <= images[static_cast<std::size_t>(j)].degree(); ++r)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) =
                images[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(r));

    std::vector<BaseRingElement> out;
    for (const auto& v : nullspace_basis(m)) {
        std::vector<FieldElement> w = v;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) {
                const FieldElement scale = w[i].inverse();
                for (auto& x : w) x = x * scale;
                break;
            }
        out.push_back(BaseRingElement::from_coeffs(ring, w));
    }
    return out;
}

/*
 * Skew polynomial rings R[x; sigma]: when sigma has finite order v the center
 * is R^sigma[x^v]; when the order exceeds every power in range it is R^sigma.
 * The check compares the computed degree-bounded center against that
 * prediction: the predicted elements are independent by construction and
 * individually verified central, so equal counts force equal spans.
 */
struct Prop128Report {
    bool pass = false;
    std::optional<int> order; // sigma's order if found within the degree bound
    std::vector<AlgebraElement> computed;
    std::vector<AlgebraElement> predicted;
    std::string detail;
};

inline Prop128Report verify_prop_1_2_8(const BaseRingPtr& ring, const BaseRingMap& sigma, int d) {
    Prop128Report rep;
    const auto pres = PresentationBuilder(ring)
                          .add_generator("x", sigma, BaseRingMap::zero_derivation(ring))
                          .build();
    CenterBasis cb = central_space(pres, d);
    rep.computed = cb.basis;
    rep.order = endo_order(sigma, d > 0 ? d : 1);

    const auto fixed = fixed_subring_basis(sigma, d);
    if (rep.order) {
        const int v = *rep.order;
        for (int k = 0; v * k <= d; ++k)
            for (const auto& r : fixed) {
                if (r.degree() + v * k > d) continue;
                rep.predicted.push_back(
                    AlgebraElement::term(pres, Monomial(1).plus(0, static_cast<std::uint32_t>(v * k)), r));
            }
    } else {
        for (const auto& r : fixed)
            rep.predicted.push_back(AlgebraElement::scalar(pres, r));
    }

    bool all_central = true;
    for (const auto& z : rep.predicted)
        if (!is_central(z)) {
            all_central = false;
            rep.detail = "predicted element " + z.str() + " is not central";
            break;
        }
    if (all_central && rep.predicted.size() != rep.computed.size())
        rep.detail = "computed center dimension " + std::to_string(rep.computed.size()) +
                     " != predicted " + std::to_string(rep.predicted.size());
    rep.pass = all_central && rep.predicted.size() == rep.computed.size();
    if (rep.pass)
        rep.detail = "center of dimension " + std::to_string(rep.computed.size()) +
                     (rep.order ? " matches the fixed-subring span with order " + std::to_string(*rep.order)
                                : " matches the fixed subring (no finite order within bound)");
    return rep;
}

} // namespace skewpbw

#endif // SKEWPBW_CENTER_HPP
