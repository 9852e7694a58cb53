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
#include "skewpbw/center.hpp"
#include "skewpbw/element.hpp"

using namespace skewpbw;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF3 = FieldSpec::prime_field(3);
const FieldSpec kF7 = FieldSpec::prime_field(7);

CenterComparison compare_at(const CatalogEntry& entry, int degree) {
    const CenterBasis cb = central_space(entry.presentation, degree);
    return compare_expected_center(entry, cb);
}

} // namespace

TEST_CASE("catalog lists its entries in a stable order", "[catalog]") {
    const auto infos = catalog_list();
    REQUIRE(infos.size() == 13);
    CHECK(infos.front().name == "skew_poly_extension");
    CHECK(infos.back().name == "usl2_char2");
    bool has_qp = false, has_jordan = false, has_sd = false;
    for (const auto& info : infos) {
        CHECK(!info.summary.empty());
        if (info.name == "quantum_plane") has_qp = true;
        if (info.name == "jordan") has_jordan = true;
        if (info.name == "shift_differential") has_sd = true;
    }
    CHECK(has_qp);
    CHECK(has_jordan);
    CHECK(has_sd);
}

TEST_CASE("every entry is consistent and its expected generators are central", "[catalog]") {
    struct Probe {
        const char* name;
        FieldSpec field;
        std::map<std::string, std::string> params;
    };
    const std::vector<Probe> probes = {
        {"skew_poly_extension", kQ, {}},
        {"shift_operators", kF2, {}},
        {"shift_differential", kF2, {}},
        {"weyl", kF3, {}},
        {"weyl", kQ, {{"n", "2"}}},
        {"jordan", kF3, {}},
        {"quantum_plane", kF7, {{"q", "2"}}},
        {"quantum_plane", kQ, {{"q", "2"}}},
        {"quantum_polynomials", kF7, {{"q", "2"}, {"n", "3"}}},
        {"quantum_weyl", kF7, {{"q", "2"}}},
        {"q_differential", kF7, {{"q", "2"}}},
        {"additive_weyl", kF7, {{"q", "2"}}},
        {"q_dilation", kF7, {{"q", "2"}, {"n", "2"}}},
        {"q_partial_differential", kF7, {{"q", "2"}}},
        {"usl2_char2", kF2, {}},
    };
    for (const auto& probe : probes) {
        INFO(probe.name);
        const CatalogEntry e = catalog_build(probe.name, probe.field, probe.params);
        const auto rep = check_pbw_consistency(e.presentation, 4);
        CHECK(rep.consistent);
        if (e.expected_center)
            for (const auto& g : *e.expected_center) {
                INFO("generator " << g.str());
                CHECK(is_central(g));
            }
    }
}

TEST_CASE("quantum plane center comparisons", "[catalog]") {
    const CatalogEntry f7 = catalog_build("quantum_plane", kF7, {{"q", "2"}});
    REQUIRE(f7.expected_center.has_value());
    REQUIRE(f7.expected_center->size() == 2);
    CHECK((*f7.expected_center)[0].str() == "x^3");
    CHECK((*f7.expected_center)[1].str() == "y^3");
    const auto cmp = compare_at(f7, 6);
    CHECK(cmp.matches);
    CHECK(cmp.center_dim == 6);

    // Over Q the parameter has infinite order: no expected generators, only a note.
    const CatalogEntry overQ = catalog_build("quantum_plane", kQ, {{"q", "2"}});
    CHECK(!overQ.expected_center.has_value());
    CHECK(!overQ.center_note.empty());

    // q = 1 collapses to the commutative plane, where everything is central.
    const CatalogEntry comm = catalog_build("quantum_plane", kQ, {{"q", "1"}});
    REQUIRE(comm.expected_center.has_value());
    CHECK(comm.expected_center->size() == 2);
    const auto cmp1 = compare_at(comm, 3);
    CHECK(cmp1.matches);
    CHECK(cmp1.center_dim == 10);
}

TEST_CASE("Weyl entries distinguish characteristic", "[catalog]") {
    const CatalogEntry f3 = catalog_build("weyl", kF3, {});
    REQUIRE(f3.expected_center.has_value());
    REQUIRE(f3.expected_center->size() == 2);
    CHECK((*f3.expected_center)[0].str() == "t^3");
    CHECK((*f3.expected_center)[1].str() == "x^3");
    const auto cmp = compare_at(f3, 6);
    CHECK(cmp.matches);
    CHECK(cmp.center_dim == 6);

    // Characteristic zero: the expected list is empty, asserting a scalar center.
    const CatalogEntry overQ = catalog_build("weyl", kQ, {});
    REQUIRE(overQ.expected_center.has_value());
    CHECK(overQ.expected_center->empty());
    const auto cmpQ = compare_at(overQ, 4);
    CHECK(cmpQ.matches);
    CHECK(cmpQ.center_dim == 1);
}

TEST_CASE("remaining center comparisons match at low degree", "[catalog]") {
    struct Expect {
        const char* name;
        FieldSpec field;
        std::map<std::string, std::string> params;
        int degree;
        std::size_t dim;
    };
    const std::vector<Expect> cases = {
        {"usl2_char2", kF2, {}, 4, 14},
        {"skew_poly_extension", kQ, {}, 4, 3},
        {"shift_operators", kF2, {{"h", "1"}}, 4, 6},
        {"shift_differential", kF2, {}, 4, 7},
        {"jordan", kF3, {}, 4, 3},
        {"quantum_weyl", kF7, {}, 6, 6},
        {"additive_weyl", kF7, {}, 6, 6},
    };
    for (const auto& c : cases) {
        INFO(c.name);
        const CatalogEntry e = catalog_build(c.name, c.field, c.params);
        const auto cmp = compare_at(e, c.degree);
        CHECK(cmp.matches);
        CHECK(cmp.center_dim == c.dim);
    }
}

TEST_CASE("shift entries materialize their expected generators", "[catalog]") {
    const CatalogEntry so = catalog_build("shift_operators", kF2, {{"h", "1"}});
    REQUIRE(so.expected_center.has_value());
    REQUIRE(so.expected_center->size() == 2);
    CHECK((*so.expected_center)[0].str() == "t^2 + t");
    CHECK((*so.expected_center)[1].str() == "x_h^2");

    const CatalogEntry sd = catalog_build("shift_differential", kF2, {});
    REQUIRE(sd.expected_center.has_value());
    REQUIRE(sd.expected_center->size() == 3);
    CHECK((*sd.expected_center)[0].str() == "x^2");
    CHECK((*sd.expected_center)[1].str() == "x_h^2");
    CHECK((*sd.expected_center)[2].str() == "t^4 + t^2");
}

TEST_CASE("catalog parameters are validated", "[catalog]") {
    CHECK_THROWS_AS(catalog_build("nonsense", kQ, {}), UnknownEntry);
    CHECK_THROWS_AS(catalog_build("quantum_plane", kQ, {{"q", "0"}}), InvalidParams);
    CHECK_THROWS_AS(catalog_build("quantum_plane", kQ, {{"zz", "1"}}), InvalidParams);
    CHECK_THROWS_AS(catalog_build("usl2_char2", kF3, {}), InvalidParams);
    CHECK_THROWS_AS(catalog_build("skew_poly_extension", kF7, {}), InvalidParams);
    CHECK_THROWS_AS(catalog_build("weyl", kQ, {{"n", "9"}}), InvalidParams);
    CHECK_THROWS_AS(catalog_build("shift_differential", kF2, {{"h", "0"}}), InvalidParams);
    CHECK_THROWS_AS(catalog_build("quantum_weyl", kF7, {{"a", "0"}}), InvalidParams);
}

TEST_CASE("resolved parameters record their defaults in declaration order", "[catalog]") {
    const CatalogEntry e = catalog_build("quantum_weyl", kF7, {});
    REQUIRE(e.params.size() == 2);
    CHECK(e.params[0].first == "q");
    CHECK(e.params[0].second == "2");
    CHECK(e.params[1].first == "a");
    CHECK(e.params[1].second == "1");
}

TEST_CASE("comparison flags an expected list that misses the center", "[catalog]") {
    // Claiming Z = K[x] for the F_7 quantum plane is wrong in two ways: x is
    // not central, and the true center contains elements outside span{x^i}.
    CatalogEntry wrong = catalog_build("quantum_plane", kF7, {{"q", "2"}});
    wrong.expected_center =
        std::vector<AlgebraElement>{AlgebraElement::generator(wrong.presentation, 0)};
    const auto cmp = compare_at(wrong, 6);
    CHECK(!cmp.matches);
    CHECK(!cmp.detail.empty());

    // An expected list that spans only part of the center must also fail.
    CatalogEntry partial = catalog_build("quantum_plane", kF7, {{"q", "2"}});
    partial.expected_center = std::vector<AlgebraElement>{(*partial.expected_center)[0]};
    const auto cmp2 = compare_at(partial, 6);
    CHECK(!cmp2.matches);
    CHECK(cmp2.expected_rank < cmp2.center_dim);
}
