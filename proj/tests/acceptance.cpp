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

/*
 * Acceptance harness: one verdict line per criterion, machine-readable,
 * with pinned numeric tolerances and wall-clock budgets where stated.
 * Exit status 0 iff every criterion passes.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewpbw/skewpbw.hpp"

using namespace skewpbw;

namespace {

int g_failures = 0;

void run_criterion(int id, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += "time budget exceeded";
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", elapsed);
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label << " ("
              << timing << ")";
    if (!note.empty()) std::cout << " -- " << note;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

PresentationPtr quantum_plane_f7() {
    return catalog_build("quantum_plane", FieldSpec::prime_field(7), {{"q", "2"}})
        .presentation;
}

PresentationPtr weyl_f3() {
    return catalog_build("weyl", FieldSpec::prime_field(3), {}).presentation;
}

struct Probe {
    const char* name;
    FieldSpec field;
    std::map<std::string, std::string> params;
};

std::vector<Probe> catalog_probes() {
    const FieldSpec Q = FieldSpec::rationals();
    const FieldSpec F2 = FieldSpec::prime_field(2);
    const FieldSpec F3 = FieldSpec::prime_field(3);
    const FieldSpec F7 = FieldSpec::prime_field(7);
    return {
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
}

} // namespace

int main() {
    // 1. Quantum plane over F_7 with q of multiplicative order 3: the center
    //    up to degree d has dimension C(floor(d/3)+2, 2) and is spanned by
    //    the monomials x^{3i} y^{3j}.
    run_criterion(1, "quantum plane F_7 center dims 3/6/10 and monomial span", 10.0,
                  [](std::string& note) {
                      const PresentationPtr qp = quantum_plane_f7();
                      const CenterBasis cb = central_space(qp, 9);
                      bool ok = cb.dims_by_degree[3] == 3 && cb.dims_by_degree[6] == 6 &&
                                cb.dims_by_degree[9] == 10;
                      // Ten linearly independent central monomials inside a
                      // ten-dimensional space force span equality.
                      int central_monomials = 0;
                      const AlgebraElement x = AlgebraElement::generator(qp, 0);
                      const AlgebraElement y = AlgebraElement::generator(qp, 1);
                      for (int i = 0; 3 * i <= 9; ++i)
                          for (int j = 0; 3 * (i + j) <= 9; ++j)
                              if (is_central(x.pow(3 * i) * y.pow(3 * j)))
                                  ++central_monomials;
                      ok = ok && central_monomials == 10 && cb.basis.size() == 10;
                      std::ostringstream os;
                      os << "dims " << cb.dims_by_degree[3] << "/" << cb.dims_by_degree[6]
                         << "/" << cb.dims_by_degree[9] << ", " << central_monomials
                         << " central monomials";
                      note = os.str();
                      return ok;
                  });

    // 2. Weyl algebra over F_3: center at degree 6 is span{t^{3i} x^{3j}}.
    run_criterion(2, "Weyl algebra F_3 center equals span of t^{3i} x^{3j}", 0.0,
                  [](std::string& note) {
                      const PresentationPtr w = weyl_f3();
                      const CenterBasis cb = central_space(w, 6);
                      bool ok = cb.basis.size() == 6;
                      const AlgebraElement t = AlgebraElement::generator(w, 0);
                      const AlgebraElement x = AlgebraElement::generator(w, 1);
                      ok = ok && is_central(x.pow(3)) && is_central(t.pow(3));
                      int central_monomials = 0;
                      for (int i = 0; i <= 2; ++i)
                          for (int j = 0; i + j <= 2; ++j)
                              if (is_central(t.pow(3 * i) * x.pow(3 * j)))
                                  ++central_monomials;
                      ok = ok && central_monomials == 6;
                      note = "dimension " + std::to_string(cb.basis.size());
                      return ok;
                  });

    // 3. Jordan algebra over F_3: x^3 and y^3 are central and nothing of
    //    degree <= 2 is except the scalars.
    run_criterion(3, "Jordan algebra F_3 central cubes, trivial low degrees", 0.0,
                  [](std::string& note) {
                      const PresentationPtr j =
                          catalog_build("jordan", FieldSpec::prime_field(3), {}).presentation;
                      const bool cubes = is_central(parse_element(j, "x^3")) &&
                                         is_central(parse_element(j, "y^3"));
                      const std::size_t low_dim = central_space(j, 2).basis.size();
                      note = "dim Z_{<=2} = " + std::to_string(low_dim);
                      return cubes && low_dim == 1;
                  });

    // 4. Shift differential operators over F_2 with h = 1: x^2, x_h^2, and
    //    t^4 + t^2 are all central.
    run_criterion(4, "shift differential operators F_2 central generators", 0.0,
                  [](std::string& note) {
                      const PresentationPtr sd =
                          catalog_build("shift_differential", FieldSpec::prime_field(2), {})
                              .presentation;
                      const bool ok = is_central(parse_element(sd, "x^2")) &&
                                      is_central(parse_element(sd, "x_h^2")) &&
                                      is_central(parse_element(sd, "t^4 + t^2"));
                      note = "x^2, x_h^2, t^4 + t^2";
                      return ok;
                  });

    // 5. Pure sigma extensions R[x; sigma]: the center is R^sigma[x^v] where
    //    v is the order of sigma; verified on Q(i) with conjugation and on
    //    F_2[t] with the shift.
    run_criterion(5, "pure sigma extensions have center R^sigma[x^v]", 0.0,
                  [](std::string& note) {
                      const FieldSpec Q = FieldSpec::rationals();
                      std::vector<FieldElement> mod{FieldElement::one(Q),
                                                    FieldElement::zero(Q),
                                                    FieldElement::one(Q)};
                      const BaseRingPtr Qi = BaseRingSpec::simple_extension(Q, "u", mod);
                      const BaseRingMap conj =
                          BaseRingMap::endomorphism(Qi, -BaseRingElement::generator(Qi));
                      const auto rep = verify_prop_1_2_8(Qi, conj, 4);
                      bool ok = rep.pass && rep.computed.size() == 3 &&
                                rep.computed[0].str() == "1" &&
                                rep.computed[1].str() == "x^2" &&
                                rep.computed[2].str() == "x^4";

                      const FieldSpec F2 = FieldSpec::prime_field(2);
                      const BaseRingPtr Rt = BaseRingSpec::univariate_poly(F2, "t");
                      const BaseRingMap sh = BaseRingMap::endomorphism(
                          Rt, BaseRingElement::generator(Rt) + BaseRingElement::one(Rt));
                      const auto rep2 = verify_prop_1_2_8(Rt, sh, 4);
                      ok = ok && rep2.pass && rep2.computed.size() == 6;
                      note = rep.detail + "; " + rep2.detail;
                      return ok;
                  });

    // 6. Quantum Weyl algebra and its additive analogue over F_7 with q = 2
    //    (order 3): x^3 and y^3 are central in both.
    run_criterion(6, "quantum Weyl and additive analogue central cubes", 0.0,
                  [](std::string& note) {
                      const FieldSpec F7 = FieldSpec::prime_field(7);
                      const PresentationPtr qw =
                          catalog_build("quantum_weyl", F7, {{"q", "2"}, {"a", "1"}})
                              .presentation;
                      bool ok = is_central(parse_element(qw, "x^3")) &&
                                is_central(parse_element(qw, "y^3"));
                      const PresentationPtr aw =
                          catalog_build("additive_weyl", F7, {{"q", "2"}, {"n", "1"}})
                              .presentation;
                      ok = ok && is_central(parse_element(aw, "x^3")) &&
                           is_central(parse_element(aw, "y^3"));
                      note = "both algebras";
                      return ok;
                  });

    // 7. U(sl_2) in characteristic 2: e^2, f^2, h are central and span the
    //    whole center at degree 4 together with their products.
    run_criterion(7, "U(sl2) char 2 center spanned by e^2, f^2, h", 0.0,
                  [](std::string& note) {
                      const CatalogEntry entry =
                          catalog_build("usl2_char2", FieldSpec::prime_field(2), {});
                      const PresentationPtr& u = entry.presentation;
                      bool ok = is_central(parse_element(u, "e^2")) &&
                                is_central(parse_element(u, "f^2")) &&
                                is_central(parse_element(u, "h"));
                      const CenterBasis cb = central_space(u, 4);
                      const auto cmp = compare_expected_center(entry, cb);
                      ok = ok && cmp.matches;
                      note = cmp.detail;
                      return ok;
                  });

    // 8. Growth machinery: exact filtration dimensions C(n+2, 2), estimates
    //    within +-0.2 of 2 at N = 12, and the three hypothesis verdicts.
    run_criterion(8, "growth dims, estimates within +-0.2, hypothesis verdicts", 60.0,
                  [](std::string& note) {
                      const PresentationPtr qp = quantum_plane_f7();
                      const PresentationPtr w = weyl_f3();
                      bool ok = true;
                      for (const PresentationPtr& pres : {qp, w}) {
                          const GrowthTable t = filtration_dims(pres, 10);
                          for (const auto& [n, d] : t.dims)
                              ok = ok &&
                                   d == static_cast<std::size_t>((n + 1) * (n + 2) / 2);
                      }
                      const GrowthTable t12 = filtration_dims(qp, 12);
                      const GrowthTable w12 = filtration_dims(w, 12);
                      ok = ok && std::abs(t12.estimate - 2.0) < 0.2 &&
                           std::abs(w12.estimate - 2.0) < 0.2;

                      const auto v1 = hypothesis_check(qp, 12, 9);
                      const auto v2 = hypothesis_check(w, 12, 9);
                      const PresentationPtr qpQ =
                          catalog_build("quantum_plane", FieldSpec::rationals(),
                                        {{"q", "2"}})
                              .presentation;
                      const auto v3 = hypothesis_check(qpQ, 10, 8);
                      ok = ok && v1.holds && *v1.holds && v2.holds && *v2.holds &&
                           v3.holds && !*v3.holds;
                      std::ostringstream os;
                      os << "estimates " << t12.estimate << " and " << w12.estimate
                         << "; verdicts holds/holds/fails";
                      note = os.str();
                      return ok;
                  });

    // 9. RightFraction suites at seed 0: identity suite, 100 membership round
    //    trips with 50 rejected non-central inputs, and x/y is not central.
    run_criterion(9, "fraction identity and membership suites, seed 0", 120.0,
                  [](std::string& note) {
                      const PresentationPtr qp = quantum_plane_f7();
                      const auto identity = prop_351_suite(qp, 100, 0);
                      const auto membership = membership_roundtrip_suite(qp, 100, 0);
                      const AlgebraElement x = parse_element(qp, "x");
                      const AlgebraElement y = parse_element(qp, "y");
                      const RightFraction xy = make_fraction(x, y);
                      const bool xy_rejected = !is_central_fraction(xy) &&
                                               !membership_characterization(xy).central;
                      note = identity.detail + "; " + membership.detail;
                      return identity.pass && membership.pass && xy_rejected;
                  });

    // 10. Ore solver: 50 random pairs of degree <= 3 per algebra are solved
    //     and verified within cap 12; central_multiple(x) reaches x^3.
    run_criterion(10, "Ore solver on 100 random pairs and central_multiple(x)", 0.0,
                  [](std::string& note) {
                      std::mt19937_64 rng(0);
                      int solved = 0;
                      for (const PresentationPtr& pres : {quantum_plane_f7(), weyl_f3()}) {
                          for (int trial = 0; trial < 50; ++trial) {
                              const AlgebraElement a = random_element(pres, rng, 3);
                              const AlgebraElement s = random_element(pres, rng, 3);
                              const OrePair w = ore_solve(a, s, 12);
                              if (a * w.u == s * w.v && !w.u.is_zero()) ++solved;
                          }
                      }
                      const PresentationPtr qp = quantum_plane_f7();
                      const AlgebraElement x = parse_element(qp, "x");
                      const AlgebraElement x3 = parse_element(qp, "x^3");
                      const CentralPair cm = central_multiple(x);
                      const bool cm_ok = x * cm.p == cm.q && is_central(cm.q) &&
                                         (cm.q == x3 || frac_eq(whole(cm.q), whole(x3)));
                      note = std::to_string(solved) + "/100 pairs verified, q = " +
                             cm.q.str();
                      return solved == 100 && cm_ok;
                  });

    // 11. The consistency checker accepts every catalog entry at degree 4 and
    //     pinpoints a witness when one relation of a three-generator
    //     quantum-plane-style presentation gains a spurious constant tail.
    run_criterion(11, "PBW consistency across the catalog plus a broken mutant", 0.0,
                  [](std::string& note) {
                      bool ok = true;
                      for (const auto& probe : catalog_probes()) {
                          const CatalogEntry e =
                              catalog_build(probe.name, probe.field, probe.params);
                          if (!check_pbw_consistency(e.presentation, 4).consistent) {
                              ok = false;
                              note = std::string(probe.name) + " reported inconsistent";
                          }
                      }
                      const FieldSpec Q = FieldSpec::rationals();
                      const BaseRingPtr R = BaseRingSpec::field_itself(Q);
                      const BaseRingElement q = BaseRingElement::from_integer(R, 3);
                      PresentationBuilder bad(R);
                      bad.add_generator("x1").add_generator("x2").add_generator("x3");
                      for (std::size_t i = 0; i < 3; ++i)
                          for (std::size_t j = i + 1; j < 3; ++j)
                              bad.set_relation(i, j, q,
                                               (i == 0 && j == 1)
                                                   ? BaseRingElement::one(R)
                                                   : BaseRingElement::zero(R));
                      const auto rep = check_pbw_consistency(bad.build(), 3);
                      ok = ok && !rep.consistent && !rep.witness.empty();
                      if (ok) note = "witness: " + rep.witness;
                      return ok;
                  });

    // 12. Printer/parser round trip on 200 seeded random elements per
    //     catalog entry.
    run_criterion(12, "parser round trip, 200 random elements per entry", 0.0,
                  [](std::string& note) {
                      std::mt19937_64 rng(12);
                      std::size_t failures = 0, total = 0;
                      for (const auto& probe : catalog_probes()) {
                          const CatalogEntry e =
                              catalog_build(probe.name, probe.field, probe.params);
                          for (int trial = 0; trial < 200; ++trial) {
                              const AlgebraElement a = random_element(e.presentation, rng, 4);
                              ++total;
                              if (parse_element(e.presentation, a.str()) != a) ++failures;
                          }
                      }
                      note = std::to_string(total - failures) + "/" +
                             std::to_string(total) + " round trips";
                      return failures == 0;
                  });

    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
