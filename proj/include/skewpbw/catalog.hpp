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

#ifndef SKEWPBW_CATALOG_HPP
#define SKEWPBW_CATALOG_HPP

#include <charconv>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "base_ring.hpp"
#include "center.hpp"
#include "coordinates.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "maps.hpp"
#include "matrix.hpp"
#include "presentation.hpp"

namespace skewpbw {

/*
 * Built-in example algebras.  Each entry builds a validated presentation from
 * a handful of named parameters and, where a closed-form description of the
 * center is known, records a generating set for it, so that tests and the CLI
 * can compare the computed center against the expectation.
 *
 * expected_center distinguishes three situations:
 *   - a nonempty list: the center should equal the span of products of the
 *     listed elements, up to the degree bound used for the comparison;
 *   - an empty list: the center should consist of the scalars alone;
 *   - nullopt: no particular center is asserted for these parameters, and
 *     center_note says why.
 */

struct CatalogParam {
    std::string name;
    std::string description;
    std::string default_value;
};

struct CatalogInfo {
    std::string name;
    std::string summary;
    std::vector<CatalogParam> params;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> params; // resolved values
    PresentationPtr presentation;
    std::optional<std::vector<AlgebraElement>> expected_center;
    std::string center_note;
    // True for the operator algebras whose defining relations are adopted
    // from the standard literature rather than fixed by this project.
    bool literature_presentation = false;
};

namespace detail {

// Expected-center generators are written out explicitly, so their exponents
// must stay small enough to materialize.  Entries whose formulas would need a
// larger power simply omit the metadata with an explanatory note.
inline constexpr std::int64_t kMaxExpectedPower = 4096;

// Order of q in the multiplicative group of its field, or nullopt when it is
// infinite.  Over Q only 1 and -1 are roots of unity, so no power iteration
// is needed (and iterating would blow up exact rationals); over F_p the order
// divides p - 1, which bounds the search exactly.
inline std::optional<std::int64_t> unit_order(const FieldElement& q) {
    if (q.is_zero()) throw InvalidParams("multiplicative order of zero requested");
    const FieldSpec& field = q.field();
    if (field.is_rationals()) {
        if (q.is_one()) return 1;
        if ((-q).is_one()) return 2;
        return std::nullopt;
    }
    return q.multiplicative_order(field.characteristic() - 1);
}

inline FieldElement field_power(const FieldElement& a, std::int64_t k) {
    FieldElement acc = FieldElement::one(a.field());
    FieldElement base = a;
    for (std::int64_t e = k; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

// x_i^k as an element of the algebra.
inline AlgebraElement generator_power(const PresentationPtr& pres, std::size_t i, std::int64_t k) {
    Monomial m(pres->num_generators());
    return AlgebraElement::term(pres, m.plus(i, static_cast<std::uint32_t>(k)),
                                BaseRingElement::one(pres->base()));
}

// t^k in the base ring, built directly from its coefficient vector.
inline BaseRingElement base_power(const BaseRingPtr& ring, std::int64_t k) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(k) + 1,
                                     FieldElement::zero(ring->field()));
    coeffs.back() = FieldElement::one(ring->field());
    return BaseRingElement::from_coeffs(ring, std::move(coeffs));
}

// Resolves named string parameters against per-entry defaults, remembers the
// resolved values for display, and rejects unknown or malformed input.
class ParamReader {
public:
    ParamReader(std::string entry, std::map<std::string, std::string> given)
        : entry_(std::move(entry)), given_(std::move(given)) {}

    std::string text(const std::string& key, const std::string& fallback) {
        used_.insert(key);
        std::string value = fallback;
        if (auto it = given_.find(key); it != given_.end()) value = it->second;
        resolved_.emplace_back(key, value);
        return value;
    }

    std::int64_t integer(const std::string& key, std::int64_t fallback,
                         std::int64_t lo, std::int64_t hi) {
        const std::string v = text(key, std::to_string(fallback));
        std::int64_t out = 0;
        const char* const b = v.data();
        const char* const e = b + v.size();
        auto [p, ec] = std::from_chars(b, e, out);
        if (ec != std::errc{} || p != e)
            throw InvalidParams(entry_ + ": parameter '" + key + "' must be an integer, got '" + v + "'");
        if (out < lo || out > hi)
            throw InvalidParams(entry_ + ": parameter '" + key + "' must lie in [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "], got " + v);
        return out;
    }

    FieldElement field_value(const FieldSpec& field, const std::string& key,
                             const std::string& fallback) {
        const std::string v = text(key, fallback);
        try {
            return FieldElement::parse(field, v);
        } catch (const Error& err) {
            throw InvalidParams(entry_ + ": parameter '" + key + "' is not an element of " +
                                field.description() + ": " + err.what());
        }
    }

    FieldElement nonzero_field_value(const FieldSpec& field, const std::string& key,
                                     const std::string& fallback) {
        FieldElement v = field_value(field, key, fallback);
        if (v.is_zero())
            throw InvalidParams(entry_ + ": parameter '" + key + "' must be nonzero");
        return v;
    }

    void finish() const {
        for (const auto& [k, v] : given_)
            if (!used_.count(k))
                throw InvalidParams(entry_ + ": unknown parameter '" + k + "'");
    }

    const std::vector<std::pair<std::string, std::string>>& resolved() const noexcept {
        return resolved_;
    }

private:
    std::string entry_;
    std::map<std::string, std::string> given_;
    std::set<std::string> used_;
    std::vector<std::pair<std::string, std::string>> resolved_;
};

inline std::string big_power_note(std::int64_t p) {
    return "expected-center metadata is omitted: the generating elements at characteristic " +
           std::to_string(p) + " are too large to materialize";
}

inline std::vector<std::string> indexed_names(const std::string& stem, std::int64_t n) {
    std::vector<std::string> out;
    for (std::int64_t i = 1; i <= n; ++i) out.push_back(stem + "_" + std::to_string(i));
    return out;
}

// --- entry builders -------------------------------------------------------

// Q(i)[x; conjugation]: base ring Q[u]/(u^2 + 1), sigma(u) = -u, delta = 0.
inline CatalogEntry build_skew_poly_extension(const FieldSpec& field, ParamReader&) {
    if (!field.is_rationals())
        throw InvalidParams("skew_poly_extension: this entry is defined over Q "
                            "(its base ring is Q[u]/(u^2 + 1))");
    const FieldElement one = FieldElement::one(field);
    const FieldElement zero = FieldElement::zero(field);
    BaseRingPtr ring = BaseRingSpec::simple_extension(field, "u", {one, zero, one});
    BaseRingMap sigma = BaseRingMap::endomorphism(ring, -BaseRingElement::generator(ring));
    PresentationPtr pres = PresentationBuilder(ring)
                               .add_generator("x", sigma, BaseRingMap::zero_derivation(ring))
                               .build();
    CatalogEntry e;
    e.presentation = pres;
    e.expected_center = std::vector<AlgebraElement>{generator_power(pres, 0, 2)};
    e.center_note = "the conjugation fixes exactly Q, so the center is generated by x^2";
    return e;
}

// K[t][x_h; sigma_h] with sigma_h(t) = t - h.
inline CatalogEntry build_shift_operators(const FieldSpec& field, ParamReader& pr) {
    const FieldElement h = pr.field_value(field, "h", "1");
    BaseRingPtr ring = BaseRingSpec::univariate_poly(field, "t");
    const BaseRingElement t = BaseRingElement::generator(ring);
    BaseRingMap sigma = BaseRingMap::endomorphism(ring, t - BaseRingElement::from_scalar(ring, h));
    PresentationPtr pres = PresentationBuilder(ring)
                               .add_generator("x_h", sigma, BaseRingMap::zero_derivation(ring))
                               .build();
    CatalogEntry e;
    e.presentation = pres;
    const std::int64_t p = field.characteristic();
    if (h.is_zero()) {
        e.expected_center = std::vector<AlgebraElement>{AlgebraElement::base_generator(pres),
                                                        AlgebraElement::generator(pres, 0)};
        e.center_note = "h = 0 makes this the commutative polynomial ring K[t, x_h]";
    } else if (p == 0) {
        e.expected_center = std::vector<AlgebraElement>{};
        e.center_note = "in characteristic zero the shift has infinite order and only scalars are central";
    } else if (p <= kMaxExpectedPower) {
        // The fixed subring of sigma_h is K[t^p - h^{p-1} t].
        const BaseRingElement fixed = base_power(ring, p) - field_power(h, p - 1) * t;
        e.expected_center = std::vector<AlgebraElement>{AlgebraElement::scalar(pres, fixed),
                                                        generator_power(pres, 0, p)};
    } else {
        e.center_note = big_power_note(p);
    }
    return e;
}

// K[t][x; id, d/dt][x_h; sigma_h]: the two operators commute with each other.
inline CatalogEntry build_shift_differential(const FieldSpec& field, ParamReader& pr) {
    const FieldElement h = pr.field_value(field, "h", "1");
    if (h.is_zero())
        throw InvalidParams("shift_differential: parameter 'h' must be nonzero");
    BaseRingPtr ring = BaseRingSpec::univariate_poly(field, "t");
    const BaseRingElement t = BaseRingElement::generator(ring);
    BaseRingMap id = BaseRingMap::identity(ring);
    BaseRingMap ddt = BaseRingMap::sigma_derivation(ring, BaseRingElement::one(ring), id);
    BaseRingMap sigma = BaseRingMap::endomorphism(ring, t - BaseRingElement::from_scalar(ring, h));
    PresentationPtr pres = PresentationBuilder(ring)
                               .add_generator("x", id, ddt)
                               .add_generator("x_h", sigma, BaseRingMap::zero_derivation(ring))
                               .build();
    CatalogEntry e;
    e.presentation = pres;
    const std::int64_t p = field.characteristic();
    if (p == 0) {
        e.expected_center = std::vector<AlgebraElement>{};
        e.center_note = "in characteristic zero only scalars are central";
    } else if (p * p <= kMaxExpectedPower) {
        // t^{p^2} - t^p is fixed by the shift (h lies in the prime field) and
        // killed by d/dt, so it joins x^p and x_h^p.
        e.expected_center = std::vector<AlgebraElement>{
            generator_power(pres, 0, p), generator_power(pres, 1, p),
            AlgebraElement::scalar(pres, base_power(ring, p * p) - base_power(ring, p))};
    } else {
        e.center_note = big_power_note(p);
    }
    return e;
}

// A_n(K): generators t_1..t_n, x_1..x_n with x_i t_i = t_i x_i + 1.
inline CatalogEntry build_weyl(const FieldSpec& field, ParamReader& pr) {
    const std::int64_t n = pr.integer("n", 1, 1, 4);
    BaseRingPtr ring = BaseRingSpec::field_itself(field);
    PresentationBuilder builder(ring);
    const auto ts = n == 1 ? std::vector<std::string>{"t"} : indexed_names("t", n);
    const auto xs = n == 1 ? std::vector<std::string>{"x"} : indexed_names("x", n);
    for (const auto& name : ts) builder.add_generator(name);
    for (const auto& name : xs) builder.add_generator(name);
    const BaseRingElement one = BaseRingElement::one(ring);
    for (std::int64_t i = 0; i < n; ++i)
        builder.set_relation(static_cast<std::size_t>(i), static_cast<std::size_t>(n + i), one, one);
    PresentationPtr pres = builder.build();
    CatalogEntry e;
    e.presentation = pres;
    const std::int64_t p = field.characteristic();
    if (p == 0) {
        e.expected_center = std::vector<AlgebraElement>{};
        e.center_note = "the Weyl algebra in characteristic zero has trivial center";
    } else if (p <= kMaxExpectedPower) {
        std::vector<AlgebraElement> gens;
        for (std::int64_t i = 0; i < 2 * n; ++i)
            gens.push_back(generator_power(pres, static_cast<std::size_t>(i), p));
        e.expected_center = std::move(gens);
    } else {
        e.center_note = big_power_note(p);
    }
    return e;
}

// Jordan plane: K[x][y; id, delta] with delta(x) = x^2, i.e. yx = xy + x^2.
inline CatalogEntry build_jordan(const FieldSpec& field, ParamReader&) {
    BaseRingPtr ring = BaseRingSpec::univariate_poly(field, "x");
    BaseRingMap id = BaseRingMap::identity(ring);
    const BaseRingElement x = BaseRingElement::generator(ring);
    BaseRingMap delta = BaseRingMap::sigma_derivation(ring, x * x, id);
    PresentationPtr pres = PresentationBuilder(ring).add_generator("y", id, delta).build();
    CatalogEntry e;
    e.presentation = pres;
    const std::int64_t p = field.characteristic();
    if (p == 0) {
        e.expected_center = std::vector<AlgebraElement>{};
        e.center_note = "in characteristic zero only scalars are central";
    } else if (p <= kMaxExpectedPower) {
        e.expected_center = std::vector<AlgebraElement>{
            AlgebraElement::scalar(pres, base_power(ring, p)), generator_power(pres, 0, p)};
    } else {
        e.center_note = big_power_note(p);
    }
    return e;
}

inline void note_for_unit_order(CatalogEntry& e, const std::optional<std::int64_t>& order,
                                std::int64_t min_order) {
    if (!order) {
        e.center_note = "q is not a root of unity, so no finite expected generating set is recorded";
    } else if (*order < min_order) {
        e.center_note = "q = 1 specializes this algebra to a Weyl-type algebra; the expected "
                        "center applies only when q has finite order at least 2";
    } else {
        e.center_note = big_power_note(*order);
    }
}

// Quantum plane: y x = q x y.
inline CatalogEntry build_quantum_plane(const FieldSpec& field, ParamReader& pr) {
    const FieldElement q = pr.nonzero_field_value(field, "q", "2");
    BaseRingPtr ring = BaseRingSpec::field_itself(field);
    PresentationPtr pres = PresentationBuilder(ring)
                               .add_generator("x")
                               .add_generator("y")
                               .set_relation(0, 1, BaseRingElement::from_scalar(ring, q),
                                             BaseRingElement::zero(ring))
                               .build();
    CatalogEntry e;
    e.presentation = pres;
    const auto m = unit_order(q);
    if (m && *m <= kMaxExpectedPower)
        e.expected_center = std::vector<AlgebraElement>{generator_power(pres, 0, *m),
                                                        generator_power(pres, 1, *m)};
    else
        note_for_unit_order(e, m, 1);
    return e;
}

// Quantum polynomials: x_j x_i = q x_i x_j for all i < j.
inline CatalogEntry build_quantum_polynomials(const FieldSpec& field, ParamReader& pr) {
    const FieldElement q = pr.nonzero_field_value(field, "q", "2");
    const std::int64_t n = pr.integer("n", 2, 2, 6);
    BaseRingPtr ring = BaseRingSpec::field_itself(field);
    PresentationBuilder builder(ring);
    for (const auto& name : indexed_names("x", n)) builder.add_generator(name);
    const BaseRingElement qq = BaseRingElement::from_scalar(ring, q);
    const BaseRingElement zero = BaseRingElement::zero(ring);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j)
            builder.set_relation(i, j, qq, zero);
    PresentationPtr pres = builder.build();
    CatalogEntry e;
    e.presentation = pres;
    const auto m = unit_order(q);
    if (n % 2 != 0) {
        e.center_note = "no closed-form center is recorded for an odd number of generators";
    } else if (m && *m <= kMaxExpectedPower) {
        std::vector<AlgebraElement> gens;
        for (std::int64_t i = 0; i < n; ++i)
            gens.push_back(generator_power(pres, static_cast<std::size_t>(i), *m));
        e.expected_center = std::move(gens);
    } else {
        note_for_unit_order(e, m, 1);
    }
    return e;
}

// Quantum Weyl algebra: y x = q x y + a.
inline CatalogEntry build_quantum_weyl(const FieldSpec& field, ParamReader& pr) {
    const FieldElement q = pr.nonzero_field_value(field, "q", "2");
    const FieldElement a = pr.nonzero_field_value(field, "a", "1");
    BaseRingPtr ring = BaseRingSpec::field_itself(field);
    PresentationPtr pres = PresentationBuilder(ring)
                               .add_generator("x")
                               .add_generator("y")
                               .set_relation(0, 1, BaseRingElement::from_scalar(ring, q),
                                             BaseRingElement::from_scalar(ring, a))
                               .build();
    CatalogEntry e;
    e.presentation = pres;
    const auto m = unit_order(q);
    if (m && *m >= 2 && *m <= kMaxExpectedPower)
        e.expected_center = std::vector<AlgebraElement>{generator_power(pres, 0, *m),
                                                        generator_power(pres, 1, *m)};
    else
        note_for_unit_order(e, m, 2);
    return e;
}

// Shared shape for the two-generator operator algebras y x = q x y + tail and
// their n-copy versions: pairs (first_i, second_i) carry the q-relation, all
// other pairs commute.
inline CatalogEntry build_q_pairs(const FieldSpec& field, ParamReader& pr,
                                  const std::string& first_stem, const std::string& second_stem,
                                  bool unit_tail, bool with_n) {
    const FieldElement q = pr.nonzero_field_value(field, "q", "2");
    const std::int64_t n = with_n ? pr.integer("n", 1, 1, 4) : 1;
    BaseRingPtr ring = BaseRingSpec::field_itself(field);
    PresentationBuilder builder(ring);
    const auto firsts = n == 1 ? std::vector<std::string>{first_stem} : indexed_names(first_stem, n);
    const auto seconds = n == 1 ? std::vector<std::string>{second_stem} : indexed_names(second_stem, n);
    for (const auto& name : firsts) builder.add_generator(name);
    for (const auto& name : seconds) builder.add_generator(name);
    const BaseRingElement qq = BaseRingElement::from_scalar(ring, q);
    const BaseRingElement tail = unit_tail ? BaseRingElement::one(ring) : BaseRingElement::zero(ring);
    for (std::int64_t i = 0; i < n; ++i)
        builder.set_relation(static_cast<std::size_t>(i), static_cast<std::size_t>(n + i), qq, tail);
    PresentationPtr pres = builder.build();
    CatalogEntry e;
    e.presentation = pres;
    e.literature_presentation = true;
    const auto l = unit_order(q);
    const std::int64_t min_order = unit_tail ? 2 : 1;
    if (l && *l >= min_order && *l <= kMaxExpectedPower) {
        std::vector<AlgebraElement> gens;
        for (std::int64_t i = 0; i < 2 * n; ++i)
            gens.push_back(generator_power(pres, static_cast<std::size_t>(i), *l));
        e.expected_center = std::move(gens);
    } else {
        note_for_unit_order(e, l, min_order);
    }
    return e;
}

inline CatalogEntry build_q_differential(const FieldSpec& field, ParamReader& pr) {
    return build_q_pairs(field, pr, "x", "y", true, false);
}

inline CatalogEntry build_additive_weyl(const FieldSpec& field, ParamReader& pr) {
    return build_q_pairs(field, pr, "x", "y", true, true);
}

inline CatalogEntry build_q_dilation(const FieldSpec& field, ParamReader& pr) {
    return build_q_pairs(field, pr, "t", "H", false, true);
}

inline CatalogEntry build_q_partial_differential(const FieldSpec& field, ParamReader& pr) {
    return build_q_pairs(field, pr, "t", "D", true, true);
}

// U(sl_2) over F_2: f e = e f - h with h central; -1 = 1 in characteristic 2.
inline CatalogEntry build_usl2_char2(const FieldSpec& field, ParamReader&) {
    if (!field.is_prime_field() || field.characteristic() != 2)
        throw InvalidParams("usl2_char2: this entry requires the field fp:2");
    BaseRingPtr ring = BaseRingSpec::field_itself(field);
    PresentationBuilder builder(ring);
    builder.add_generator("e").add_generator("f").add_generator("h");
    builder.set_relation_tail(0, 1, 2, BaseRingElement::one(ring));
    PresentationPtr pres = builder.build();
    CatalogEntry e;
    e.presentation = pres;
    e.expected_center = std::vector<AlgebraElement>{generator_power(pres, 0, 2),
                                                    generator_power(pres, 1, 2),
                                                    AlgebraElement::generator(pres, 2)};
    return e;
}

struct CatalogRow {
    CatalogInfo info;
    CatalogEntry (*build)(const FieldSpec&, ParamReader&);
};

inline const std::vector<CatalogRow>& catalog_rows() {
    static const std::vector<CatalogRow> rows = [] {
        const CatalogParam q{"q", "commutation scalar, parsed in the chosen field", "2"};
        const CatalogParam h{"h", "shift step, parsed in the chosen field", "1"};
        const CatalogParam a{"a", "affine term, parsed in the chosen field", "1"};
        auto nparam = [](std::int64_t hi, const char* what) {
            return CatalogParam{"n", std::string("number of ") + what + " (at most " +
                                         std::to_string(hi) + ")",
                                "1"};
        };
        std::vector<CatalogRow> r;
        r.push_back({{"skew_poly_extension",
                      "skew polynomial ring Q(i)[x; conjugation] over the Gaussian rationals",
                      {}},
                     &build_skew_poly_extension});
        r.push_back({{"shift_operators",
                      "shift operator algebra K[t][x_h; sigma_h] with sigma_h(t) = t - h",
                      {h}},
                     &build_shift_operators});
        r.push_back({{"shift_differential",
                      "mixed differential/shift operator algebra K[t][x; d/dt][x_h; sigma_h]",
                      {h}},
                     &build_shift_differential});
        r.push_back({{"weyl",
                      "n-th Weyl algebra A_n(K) with x_i t_i = t_i x_i + 1",
                      {nparam(4, "canonical pairs")}},
                     &build_weyl});
        r.push_back({{"jordan",
                      "Jordan plane K[x][y; delta] with y x = x y + x^2",
                      {}},
                     &build_jordan});
        r.push_back({{"quantum_plane",
                      "quantum plane with y x = q x y",
                      {q}},
                     &build_quantum_plane});
        r.push_back({{"quantum_polynomials",
                      "quantum polynomial algebra with x_j x_i = q x_i x_j for i < j",
                      {q, CatalogParam{"n", "number of generators (2 to 6)", "2"}}},
                     &build_quantum_polynomials});
        r.push_back({{"quantum_weyl",
                      "quantum Weyl algebra with y x = q x y + a",
                      {q, a}},
                     &build_quantum_weyl});
        r.push_back({{"q_differential",
                      "q-differential operator algebra with y x = q x y + 1",
                      {q}},
                     &build_q_differential});
        r.push_back({{"additive_weyl",
                      "additive analogue of the Weyl algebra: y_i x_i = q x_i y_i + 1",
                      {q, nparam(4, "canonical pairs")}},
                     &build_additive_weyl});
        r.push_back({{"q_dilation",
                      "algebra of q-dilation operators: H_i t_i = q t_i H_i",
                      {q, nparam(4, "dilation pairs")}},
                     &build_q_dilation});
        r.push_back({{"q_partial_differential",
                      "algebra of q-differential partial operators: D_i t_i = q t_i D_i + 1",
                      {q, nparam(4, "operator pairs")}},
                     &build_q_partial_differential});
        r.push_back({{"usl2_char2",
                      "enveloping algebra of sl_2 over F_2: f e = e f + h with h central",
                      {}},
                     &build_usl2_char2});
        return r;
    }();
    return rows;
}

} // namespace detail

// Entry names with parameter schemas, in a stable documented order.
inline std::vector<CatalogInfo> catalog_list() {
    std::vector<CatalogInfo> out;
    for (const auto& row : detail::catalog_rows()) out.push_back(row.info);
    return out;
}

inline CatalogEntry catalog_build(const std::string& name, const FieldSpec& field,
                                  const std::map<std::string, std::string>& params = {}) {
    for (const auto& row : detail::catalog_rows()) {
        if (row.info.name != name) continue;
        detail::ParamReader reader(name, params);
        CatalogEntry e = row.build(field, reader);
        reader.finish();
        e.name = row.info.name;
        e.summary = row.info.summary;
        e.params = reader.resolved();
        return e;
    }
    throw UnknownEntry("unknown catalog entry '" + name + "'");
}

// Rank comparison between the computed center and the span of products of the
// entry's expected generators, both restricted to total degree <= the bound
// of the given center basis.  Since every expected generator is central and
// they commute, the products in any order span the expected subalgebra.
struct CenterComparison {
    bool matches = false;
    std::size_t expected_rank = 0;
    std::size_t center_dim = 0;
    std::size_t joint_rank = 0;
    std::string detail;
};

inline CenterComparison compare_expected_center(const CatalogEntry& entry, const CenterBasis& cb) {
    if (!entry.expected_center)
        throw InvalidParams("entry '" + entry.name + "' records no expected center generators");
    const PresentationPtr& pres = entry.presentation;
    const int d = cb.degree_bound;
    const auto& gens = *entry.expected_center;

    std::vector<int> degree;
    for (const auto& g : gens) {
        const auto dg = g.total_degree();
        if (!dg || *dg < 1)
            throw InvalidParams("expected center generators must be nonscalar and nonzero");
        degree.push_back(*dg);
    }

    std::vector<AlgebraElement> products;
    std::function<void(std::size_t, AlgebraElement, int)> rec =
        [&](std::size_t i, AlgebraElement acc, int used) {
            if (i == gens.size()) {
                products.push_back(std::move(acc));
                return;
            }
            AlgebraElement cur = std::move(acc);
            int budget = used;
            while (true) {
                rec(i + 1, cur, budget);
                budget += degree[i];
                if (budget > d) break;
                cur = cur * gens[i];
            }
        };
    rec(0, AlgebraElement::one(pres), 0);

    const DegreeBasis rows(pres, d);
    std::vector<std::vector<FieldElement>> expected_rows;
    for (const auto& prod : products) expected_rows.push_back(rows.coordinates(prod));
    std::vector<std::vector<FieldElement>> joint_rows = expected_rows;
    for (const auto& z : cb.basis) joint_rows.push_back(rows.coordinates(z));

    CenterComparison out;
    out.center_dim = cb.basis.size();
    out.expected_rank = rank(ExactMatrix::from_rows(pres->field(), expected_rows));
    out.joint_rank = rank(ExactMatrix::from_rows(pres->field(), joint_rows));
    out.matches = out.expected_rank == out.center_dim && out.joint_rank == out.center_dim;
    if (out.matches) {
        out.detail = "expected generators span the computed center exactly (dimension " +
                     std::to_string(out.center_dim) + " at degree " + std::to_string(d) + ")";
    } else if (out.joint_rank > out.center_dim) {
        out.detail = "expected generators span elements outside the computed center";
    } else {
        out.detail = "expected span has rank " + std::to_string(out.expected_rank) +
                     " but the computed center has dimension " + std::to_string(out.center_dim) +
                     " at degree " + std::to_string(d);
    }
    return out;
}

} // namespace skewpbw

#endif // SKEWPBW_CATALOG_HPP
