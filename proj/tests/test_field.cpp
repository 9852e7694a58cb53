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

#include "skewpbw/field.hpp"

using namespace skewpbw;

TEST_CASE("rational arithmetic is exact and normalized", "[field]") {
    const FieldSpec Q = FieldSpec::rationals();
    const FieldElement a = FieldElement::from_ratio(Q, 2, 4);
    CHECK(a.str() == "1/2");
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * FieldElement::from_integer(Q, 2)).is_one());
    CHECK(FieldElement::from_ratio(Q, -6, -4).str() == "3/2");
    CHECK(FieldElement::from_ratio(Q, 6, -4).str() == "-3/2");
    CHECK(FieldElement::parse(Q, "-3/2").str() == "-3/2");
    CHECK((-FieldElement::one(Q)).str() == "-1");
}

TEST_CASE("rational arithmetic stays exact at large magnitudes", "[field]") {
    const FieldSpec Q = FieldSpec::rationals();

    // Geometric series: sum_{k=0}^{40} 2^{-k} = 2 - 2^{-40}.
    FieldElement sum = FieldElement::zero(Q);
    FieldElement term = FieldElement::one(Q);
    const FieldElement half = FieldElement::from_ratio(Q, 1, 2);
    for (int k = 0; k <= 40; ++k) {
        sum += term;
        term *= half;
    }
    FieldElement expect = FieldElement::from_integer(Q, 2);
    FieldElement tiny = FieldElement::one(Q);
    for (int k = 0; k < 40; ++k) tiny *= half;
    expect -= tiny;
    CHECK(sum == expect);

    // 10^30 squared prints as 1 followed by 60 zeros: no overflow, no rounding.
    const std::string big30 = "1" + std::string(30, '0');
    const FieldElement big = FieldElement::parse(Q, big30);
    CHECK((big * big).str() == "1" + std::string(60, '0'));
    CHECK((big * big.inverse()).is_one());
}

TEST_CASE("prime field arithmetic reduces to canonical residues", "[field]") {
    const FieldSpec F7 = FieldSpec::prime_field(7);
    const FieldElement b = FieldElement::from_integer(F7, -3);
    CHECK(b.str() == "4");
    CHECK((b * b.inverse()).is_one());
    CHECK(FieldElement::parse(F7, "3/2").str() == "5"); // 3 * 2^{-1} = 3 * 4
    CHECK(FieldElement::from_integer(F7, 14).is_zero());
    const FieldSpec F2 = FieldSpec::prime_field(2);
    CHECK((FieldElement::one(F2) + FieldElement::one(F2)).is_zero());
    CHECK((-FieldElement::one(F2)).is_one());
}

TEST_CASE("multiplicative orders are computed with safe caps", "[field]") {
    const FieldSpec Q = FieldSpec::rationals();
    const FieldSpec F7 = FieldSpec::prime_field(7);
    CHECK(FieldElement::from_integer(F7, 2).multiplicative_order().value() == 3);
    CHECK(FieldElement::from_integer(F7, 3).multiplicative_order().value() == 6);
    CHECK(FieldElement::one(F7).multiplicative_order().value() == 1);
    CHECK(FieldElement::from_integer(Q, -1).multiplicative_order().value() == 2);
    CHECK(FieldElement::one(Q).multiplicative_order().value() == 1);
    // 2 has infinite order in Q; a bounded search must give up, not loop.
    CHECK(!FieldElement::from_integer(Q, 2).multiplicative_order(100).has_value());
}

TEST_CASE("field construction validates input", "[field]") {
    CHECK_THROWS_AS(FieldSpec::prime_field(6), InvalidParams);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), InvalidParams);
    CHECK_NOTHROW(FieldSpec::prime_field(2));
    CHECK_NOTHROW(FieldSpec::prime_field(101));
    const FieldSpec Q = FieldSpec::rationals();
    CHECK_THROWS_AS(FieldElement::one(Q) / FieldElement::zero(Q), Error);
    CHECK_THROWS_AS(FieldElement::zero(Q).inverse(), Error);
}

TEST_CASE("field elements compare and hash by value", "[field]") {
    const FieldSpec Q = FieldSpec::rationals();
    CHECK(FieldElement::from_ratio(Q, 1, 3) == FieldElement::from_ratio(Q, 2, 6));
    CHECK(FieldElement::from_ratio(Q, 1, 3) != FieldElement::from_ratio(Q, 1, 4));
    const FieldSpec F5 = FieldSpec::prime_field(5);
    CHECK(FieldElement::from_integer(F5, 7) == FieldElement::from_integer(F5, 2));
}
