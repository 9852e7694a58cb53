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

#include <catch2/catch_amalgamated.hpp>

#include "skewpbw/catalog.hpp"
#include "skewpbw/element.hpp"
#include "skewpbw/random.hpp"

using namespace skewpbw;

namespace {

PresentationPtr quantum_plane_f7() {
    const FieldSpec F7 = FieldSpec::prime_field(7);
    const BaseRingPtr R = BaseRingSpec::field_itself(F7);
    return PresentationBuilder(R)
        .add_generator("x")
        .add_generator("y")
        .set_relation(0, 1, BaseRingElement::from_integer(R, 2), BaseRingElement::zero(R))
        .build();
}

PresentationPtr weyl_rationals() {
    const FieldSpec Q = FieldSpec::rationals();
    const BaseRingPtr R = BaseRingSpec::univariate_poly(Q, "t");
    const BaseRingMap sigma = BaseRingMap::identity(R);
    const BaseRingMap delta =
        BaseRingMap::sigma_derivation(R, BaseRingElement::one(R), sigma);
    return PresentationBuilder(R).add_generator("x", sigma, delta).build();
}

} // namespace

TEST_CASE("quantum plane rewriting normalizes products", "[element]") {
    const PresentationPtr pres = quantum_plane_f7();
    const AlgebraElement x = AlgebraElement::generator(pres, 0);
    const AlgebraElement y = AlgebraElement::generator(pres, 1);
    CHECK((y * x).str() == "2*x*y");
    CHECK((x * y).str() == "x*y");
    CHECK((y * y * x).str() == "4*x*y^2");
    const AlgebraElement s = x + y;
    CHECK((s * s).str() == "x^2 + 3*x*y + y^2");
    CHECK(((s * s) * s) == (s * (s * s)));
    CHECK(commutator(x, y).str() == "6*x*y"); // xy - yx = (1 - 2) xy
    CHECK(check_pbw_consistency(pres, 4).consistent);
}

TEST_CASE("Weyl algebra rewriting applies the derivation", "[element]") {
    const PresentationPtr pres = weyl_rationals();
    const AlgebraElement x = AlgebraElement::generator(pres, 0);
    const AlgebraElement t = AlgebraElement::base_generator(pres);
    CHECK((x * t).str() == "t*x + 1");
    CHECK((t * x).str() == "t*x");
    CHECK(commutator(x, t).str() == "1");
    CHECK((x * x * t).str() == "t*x^2 + 2*x");
    CHECK((x.pow(3) * t).str() == "t*x^3 + 3*x^2");
    CHECK((x * t * t).str() == "t^2*x + 2*t");
    const AlgebraElement tx = t * x;
    CHECK((tx * tx).str() == "t^2*x^2 + t*x");
    CHECK(*(x * t).total_degree() == 2);
    CHECK(!AlgebraElement::zero(pres).total_degree().has_value());
    CHECK(check_pbw_consistency(pres, 5).consistent);
}

TEST_CASE("Jordan relation comes from the polynomial base derivation", "[element]") {
    const FieldSpec F3 = FieldSpec::prime_field(3);
    const BaseRingPtr Rx = BaseRingSpec::univariate_poly(F3, "x");
    const BaseRingMap sx = BaseRingMap::identity(Rx);
    const BaseRingElement xsq =
        BaseRingElement::generator(Rx) * BaseRingElement::generator(Rx);
    const BaseRingMap dx = BaseRingMap::sigma_derivation(Rx, xsq, sx);
    const PresentationPtr jordan = PresentationBuilder(Rx).add_generator("y", sx, dx).build();
    const AlgebraElement y = AlgebraElement::generator(jordan, 0);
    const AlgebraElement x = AlgebraElement::base_generator(jordan);
    CHECK((y * x).str() == "x*y + x^2");
    CHECK((x * y).str() == "x*y");
    CHECK((y * x * x).str() == "x^2*y + 2*x^3"); // delta(x^2) = 2 x^3
    CHECK(check_pbw_consistency(jordan, 4).consistent);
}

TEST_CASE("sigma twist on the base generator", "[element]") {
    const FieldSpec Q = FieldSpec::rationals();
    const BaseRingPtr R = BaseRingSpec::univariate_poly(Q, "t");
    const BaseRingElement two_t =
        BaseRingElement::from_integer(R, 2) * BaseRingElement::generator(R);
    const BaseRingMap sigma = BaseRingMap::endomorphism(R, two_t);
    const BaseRingMap delta = BaseRingMap::zero_derivation(R);
    const PresentationPtr pres = PresentationBuilder(R).add_generator("x", sigma, delta).build();
    const AlgebraElement x = AlgebraElement::generator(pres, 0);
    const AlgebraElement t = AlgebraElement::base_generator(pres);
    CHECK((x * t).str() == "2*t*x");
    CHECK((x * t * t).str() == "4*t^2*x");
    CHECK((x * x * t).str() == "4*t*x^2");
}

TEST_CASE("consistency checker finds a witness for a broken presentation", "[element]") {
    const FieldSpec Q = FieldSpec::rationals();
    const BaseRingPtr R = BaseRingSpec::field_itself(Q);
    const BaseRingElement q = BaseRingElement::from_integer(R, 3);

    PresentationBuilder good(R);
    good.add_generator("x1").add_generator("x2").add_generator("x3");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            good.set_relation(i, j, q, BaseRingElement::zero(R));
    CHECK(check_pbw_consistency(good.build(), 3).consistent);

    // Adding a constant tail to just one of the three relations breaks the
    // overlap x3 (x2 x1).
    PresentationBuilder bad(R);
    bad.add_generator("x1").add_generator("x2").add_generator("x3");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            bad.set_relation(i, j, q,
                             (i == 0 && j == 1) ? BaseRingElement::one(R)
                                                : BaseRingElement::zero(R));
    const auto rep = check_pbw_consistency(bad.build(), 3);
    CHECK(!rep.consistent);
    CHECK(!rep.witness.empty());
}

TEST_CASE("printer folds signs and scalar coefficients", "[element]") {
    const FieldSpec Q = FieldSpec::rationals();
    const BaseRingPtr R = BaseRingSpec::field_itself(Q);
    const PresentationPtr pres =
        PresentationBuilder(R).add_generator("x").add_generator("y").build();
    const AlgebraElement x = AlgebraElement::generator(pres, 0);
    const AlgebraElement y = AlgebraElement::generator(pres, 1);
    CHECK((x - y).str() == "x - y");
    CHECK((-x + AlgebraElement::one(pres)).str() == "-x + 1");
    const AlgebraElement half =
        AlgebraElement::from_field_scalar(pres, FieldElement::parse(Q, "-1/2"));
    CHECK((half * x).str() == "-1/2*x");
    CHECK((x * y - y * x).is_zero()); // unset pairs default to commuting
}

TEST_CASE("multiplication is associative and distributive in every catalog algebra",
          "[element]") {
    const FieldSpec Q = FieldSpec::rationals();
    const FieldSpec F2 = FieldSpec::prime_field(2);
    const FieldSpec F3 = FieldSpec::prime_field(3);
    const FieldSpec F7 = FieldSpec::prime_field(7);
    struct Probe {
        const char* name;
        FieldSpec field;
        std::map<std::string, std::string> params;
    };
    const std::vector<Probe> probes = {
        {"skew_poly_extension", Q, {}},
        {"shift_operators", F2, {}},
        {"shift_differential", F2, {}},
        {"weyl", F3, {}},
        {"weyl", Q, {{"n", "2"}}},
        {"jordan", F3, {}},
        {"quantum_plane", F7, {{"q", "2"}}},
        {"quantum_plane", Q, {{"q", "2"}}},
        {"quantum_polynomials", F7, {{"q", "2"}, {"n", "3"}}},
        {"quantum_weyl", F7, {{"q", "2"}}},
        {"q_differential", F7, {{"q", "2"}}},
        {"additive_weyl", F7, {{"q", "2"}}},
        {"q_dilation", F7, {{"q", "2"}, {"n", "2"}}},
        {"q_partial_differential", F7, {{"q", "2"}}},
        {"usl2_char2", F2, {}},
    };
    std::mt19937_64 rng(1);
    for (const auto& probe : probes) {
        const CatalogEntry entry = catalog_build(probe.name, probe.field, probe.params);
        const PresentationPtr& pres = entry.presentation;
        std::size_t assoc_fail = 0, distrib_fail = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const AlgebraElement a = random_element(pres, rng, 3);
            const AlgebraElement b = random_element(pres, rng, 3);
            const AlgebraElement c = random_element(pres, rng, 3);
            if ((a * b) * c != a * (b * c)) ++assoc_fail;
            if (a * (b + c) != a * b + a * c) ++distrib_fail;
            if ((a + b) * c != a * c + b * c) ++distrib_fail;
        }
        INFO(probe.name);
        CHECK(assoc_fail == 0);
        CHECK(distrib_fail == 0);
    }
}
