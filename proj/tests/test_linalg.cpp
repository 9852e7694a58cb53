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

#include "skewpbw/matrix.hpp"
#include "skewpbw/random.hpp"

using namespace skewpbw;

namespace {

FieldElement fe(const FieldSpec& f, long n, long d = 1) {
    return FieldElement::from_ratio(f, n, d);
}

bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

} // namespace

TEST_CASE("rref of a rank-one rational matrix", "[linalg]") {
    const FieldSpec Q = FieldSpec::rationals();
    const ExactMatrix m =
        ExactMatrix::from_rows(Q, {{fe(Q, 1), fe(Q, 2)}, {fe(Q, 2), fe(Q, 4)}});
    const auto rr = rref(m);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0});
    CHECK(rr.matrix.at(0, 0).is_one());
    CHECK(rr.matrix.at(0, 1) == fe(Q, 2));
    CHECK(rr.matrix.at(1, 0).is_zero());
    CHECK(rr.matrix.at(1, 1).is_zero());
    CHECK(rank(m) == 1);

    const auto ns = nullspace_basis(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == fe(Q, -2));
    CHECK(ns[0][1].is_one());
}

TEST_CASE("rref over F_2 reaches the identity on an invertible matrix", "[linalg]") {
    const FieldSpec F2 = FieldSpec::prime_field(2);
    const ExactMatrix m =
        ExactMatrix::from_rows(F2, {{fe(F2, 1), fe(F2, 1)}, {fe(F2, 1), fe(F2, 2)}});
    const auto rr = rref(m);
    CHECK(rr.pivot_columns == std::vector<std::size_t>({0, 1}));
    CHECK(rr.matrix.at(0, 0).is_one());
    CHECK(rr.matrix.at(0, 1).is_zero());
    CHECK(rank(m) == 2);
    CHECK(nullspace_basis(m).empty());
}

TEST_CASE("nullspace vectors solve the system with fractional entries", "[linalg]") {
    const FieldSpec Q = FieldSpec::rationals();
    const ExactMatrix m = ExactMatrix::from_rows(
        Q, {{fe(Q, 1, 2), fe(Q, 1, 3), fe(Q, 1)}, {fe(Q, 1), fe(Q, 2, 3), fe(Q, 3)}});
    const auto ns = nullspace_basis(m);
    REQUIRE(ns.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) {
        FieldElement acc = FieldElement::zero(Q);
        for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * ns[0][j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("zero matrix has full nullspace and rank zero", "[linalg]") {
    const FieldSpec Q = FieldSpec::rationals();
    const ExactMatrix z(Q, 2, 3);
    CHECK(nullspace_basis(z).size() == 3);
    CHECK(rank(z) == 0);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices", "[linalg]") {
    std::mt19937_64 rng(7);
    const FieldSpec F7 = FieldSpec::prime_field(7);
    const FieldSpec Q = FieldSpec::rationals();
    for (int trial = 0; trial < 50; ++trial) {
        const FieldSpec& field = (trial % 2 == 0) ? F7 : Q;
        std::vector<std::vector<FieldElement>> rows(4);
        for (auto& row : rows)
            for (std::size_t j = 0; j < 6; ++j) row.push_back(random_field_element(field, rng));
        const ExactMatrix m = ExactMatrix::from_rows(field, rows);

        const auto ns = nullspace_basis(m);
        CHECK(rank(m) + ns.size() == 6);
        for (const auto& v : ns) {
            for (std::size_t i = 0; i < 4; ++i) {
                FieldElement acc = FieldElement::zero(field);
                for (std::size_t j = 0; j < 6; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }

        const auto once = rref(m);
        const auto twice = rref(once.matrix);
        CHECK(matrices_equal(once.matrix, twice.matrix));
        CHECK(once.pivot_columns == twice.pivot_columns);
    }
}
