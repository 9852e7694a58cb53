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

#ifndef SKEWPBW_FRACTIONS_HPP
#define SKEWPBW_FRACTIONS_HPP

#include <mutex>
#include <string>
#include <utility>

#include "center.hpp"
#include "random.hpp"

namespace skewpbw {

/*
 * Right Ore fractions num * den^{-1}.  The ring is a domain (base ring a
 * domain, the c coefficients units), so nonzero elements admit common right
 * multiples and the right quotient ring exists; fractions here always carry
 * an explicit denominator and are never reduced - equality is the semantic
 * test, because lowest terms are not canonically defined in this setting.
 */

inline constexpr int kDefaultFractionCap = 12;

struct RightFraction {
    AlgebraElement num;
    AlgebraElement den;
    bool central_den = false;
};

inline RightFraction make_fraction(AlgebraElement num, AlgebraElement den) {
    if (den.is_zero()) throw Error("fraction denominator must be nonzero");
    RightFraction f{std::move(num), std::move(den), false};
    f.central_den = is_central(f.den);
    return f;
}

inline RightFraction whole(const AlgebraElement& a) {
    return make_fraction(a, AlgebraElement::one(a.presentation()));
}

inline std::string fraction_str(const RightFraction& f) {
    return "(" + f.num.str() + ") / (" + f.den.str() + ")";
}

struct OrePair {
    AlgebraElement u, v; // a*u = s*v, both nonzero
};

struct CentralPair {
    AlgebraElement p, q; // a*p = q with q central nonzero
};

namespace detail {

// Degree-bounded centers are recomputed constantly on the fraction paths;
// memoize per (presentation, degree).  Guarded for concurrent suites.
inline const CenterBasis& central_space_cached(const PresentationPtr& pres, int d) {
    static std::map<std::pair<std::string, int>, CenterBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(pres->signature(), d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, central_space(pres, d)).first;
    return it->second;
}

} // namespace detail

/*
 * Right Ore condition, degree-bounded: find nonzero u, v with a*u = s*v.
 * For each product degree T (starting at the smallest possible), u ranges
 * over the basis up to T - deg a and v up to T - deg s; the kernel of the
 * combined linear system gives the witnesses.  Any nonzero kernel vector has
 * both parts nonzero automatically: a*u = s*v with one side zero forces the
 * other to zero because A is a domain.
 */
inline OrePair ore_solve(const AlgebraElement& a, const AlgebraElement& s,
                         int cap = kDefaultFractionCap) {
    if (a.is_zero() || s.is_zero()) throw Error("ore_solve needs nonzero inputs");
    const auto& pres = a.presentation();
    if (a == s) return {AlgebraElement::one(pres), AlgebraElement::one(pres)};
    if (s == AlgebraElement::one(pres)) return {AlgebraElement::one(pres), a};

    const int da = *a.total_degree(), ds = *s.total_degree();
    for (int T = std::max(da, ds); T <= cap + std::min(da, ds); ++T) {
        const DegreeBasis ubasis(pres, T - da), vbasis(pres, T - ds);
        const DegreeBasis rows(pres, T);
        ExactMatrix m(pres->field(), rows.size(), ubasis.size() + vbasis.size());
        for (std::size_t k = 0; k < ubasis.size(); ++k) {
            const auto col = rows.coordinates(a * ubasis.element_at(k));
            for (std::size_t r = 0; r < col.size(); ++r)
                if (!col[r].is_zero()) m.at(r, k) = col[r];
        }
        for (std::size_t k = 0; k < vbasis.size(); ++k) {
            const auto col = rows.coordinates(s * vbasis.element_at(k));
            for (std::size_t r = 0; r < col.size(); ++r)
                if (!col[r].is_zero()) m.at(r, ubasis.size() + k) = -col[r];
        }
        const auto null_vecs = nullspace_basis(m);
        if (null_vecs.empty()) continue;
        const auto& w = null_vecs.front();
        const AlgebraElement u = ubasis.combine(
            std::vector<FieldElement>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(ubasis.size())));
        const AlgebraElement v = vbasis.combine(
            std::vector<FieldElement>(w.begin() + static_cast<std::ptrdiff_t>(ubasis.size()), w.end()));
        if (u.is_zero() || v.is_zero() || !(a * u == s * v))
            throw Error("internal: ore witness failed verification");
        return {u, v};
    }
    throw CapExceeded("no common right multiple found within degree", cap);
}

/*
 * Central multiple: p with a*p = q, q a nonzero central element.  This is the
 * invertibility workhorse for the central localization: every nonzero a
 * divides a central element, so a becomes a unit once central denominators
 * are inverted.  Solved per product degree T <= cap by pairing the image of
 * left-multiplication-by-a against the degree-T slice of the center.
 */
inline CentralPair central_multiple(const AlgebraElement& a, int cap = kDefaultFractionCap) {
    if (a.is_zero()) throw Error("central_multiple needs a nonzero input");
    const auto& pres = a.presentation();
    const int da = *a.total_degree();
    const CenterBasis& cb = detail::central_space_cached(pres, cap);

    for (int T = da; T <= cap; ++T) {
        const DegreeBasis pbasis(pres, T - da);
        const DegreeBasis rows(pres, T);
        std::vector<const AlgebraElement*> zslice;
        for (const auto& z : cb.basis)
            if (*z.total_degree() <= T) zslice.push_back(&z);
        if (zslice.empty()) continue;

        ExactMatrix m(pres->field(), rows.size(), pbasis.size() + zslice.size());
        for (std::size_t k = 0; k < pbasis.size(); ++k) {
            const auto col = rows.coordinates(a * pbasis.element_at(k));
            for (std::size_t r = 0; r < col.size(); ++r)
                if (!col[r].is_zero()) m.at(r, k) = col[r];
        }
        for (std::size_t k = 0; k < zslice.size(); ++k) {
            const auto col = rows.coordinates(*zslice[k]);
            for (std::size_t r = 0; r < col.size(); ++r)
                if (!col[r].is_zero()) m.at(r, pbasis.size() + k) = -col[r];
        }
        const auto null_vecs = nullspace_basis(m);
        if (null_vecs.empty()) continue;
        const auto& w = null_vecs.front();
        const AlgebraElement p = pbasis.combine(
            std::vector<FieldElement>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pbasis.size())));
        AlgebraElement q = AlgebraElement::zero(pres);
        for (std::size_t k = 0; k < zslice.size(); ++k)
            q += AlgebraElement::from_field_scalar(pres, w[pbasis.size() + k]) * *zslice[k];
        if (p.is_zero() || q.is_zero() || !(a * p == q) || !is_central(q))
            throw Error("internal: central multiple failed verification");
        return {p, q};
    }
    throw CapExceeded("no central multiple found within degree", cap);
}

inline bool frac_eq(const RightFraction& f, const RightFraction& g,
                    int cap = kDefaultFractionCap) {
    if (f.num.is_zero() || g.num.is_zero()) return f.num.is_zero() && g.num.is_zero();
    if (f.central_den && g.central_den) return f.num * g.den == g.num * f.den;
    const OrePair w = ore_solve(f.den, g.den, cap);
    return f.num * w.u == g.num * w.v;
}

inline RightFraction frac_neg(const RightFraction& f) {
    return RightFraction{-f.num, f.den, f.central_den};
}

inline RightFraction frac_add(const RightFraction& f, const RightFraction& g,
                              int cap = kDefaultFractionCap) {
    if (f.central_den && g.central_den) {
        // Central denominators commute with everything; the schoolbook
        // formula is exact and keeps the flag without a recheck.
        return RightFraction{f.num * g.den + g.num * f.den, f.den * g.den, true};
    }
    const OrePair w = ore_solve(f.den, g.den, cap);
    return make_fraction(f.num * w.u + g.num * w.v, f.den * w.u);
}

inline RightFraction frac_mul(const RightFraction& f, const RightFraction& g,
                              int cap = kDefaultFractionCap) {
    const auto& pres = f.num.presentation();
    if (f.num.is_zero() || g.num.is_zero())
        return RightFraction{AlgebraElement::zero(pres), AlgebraElement::one(pres), true};
    if (f.central_den && g.central_den)
        return RightFraction{f.num * g.num, f.den * g.den, true};
    if (f.den == AlgebraElement::one(pres))
        return make_fraction(f.num * g.num, g.den);
    // General rewrite: den_f^{-1} * num_g = v * u^{-1} with num_g * u = den_f * v.
    const OrePair w = ore_solve(g.num, f.den, cap);
    return make_fraction(f.num * w.v, g.den * w.u);
}

/*
 * Fraction centrality against the generating set: f is central iff it
 * commutes with g/1 for the n generators and the base-ring generator, since
 * those generate the whole quotient ring over the fraction field of K's
 * image.  With a central denominator this collapses to centrality of the
 * numerator: p/q commutes with everything iff p does, once q is central.
 */
inline bool is_central_fraction(const RightFraction& f, int cap = kDefaultFractionCap) {
    if (f.num.is_zero()) return true;
    if (f.central_den) return is_central(f.num);
    for (const auto& g : generating_probes(f.num.presentation())) {
        const RightFraction gw = whole(g);
        if (!frac_eq(frac_mul(f, gw, cap), frac_mul(gw, f, cap), cap)) return false;
    }
    return true;
}

struct MembershipResult {
    bool central = false;
    std::optional<CentralPair> pair; // f = pair.p / pair.q with both central
};

/*
 * Membership characterization of the central fractions: every central f can
 * be rewritten with central numerator and denominator.  The
 * witness comes from a central multiple of the denominator: f.den * c = q
 * gives f = (f.num * c) / q, and centrality of f then forces the new
 * numerator central (commutation with q can be divided away in a domain).
 */
inline MembershipResult membership_characterization(const RightFraction& f,
                                                    int cap = kDefaultFractionCap) {
    if (!is_central_fraction(f, cap)) return {};
    if (f.num.is_zero()) {
        const auto& pres = f.num.presentation();
        return {true,
                CentralPair{AlgebraElement::zero(pres), AlgebraElement::one(pres)}};
    }
    const CentralPair cm = central_multiple(f.den, cap);
    const AlgebraElement p = f.num * cm.p;
    if (!is_central(p)) throw Error("internal: membership witness failed verification");
    return {true, CentralPair{p, cm.q}};
}

struct Prop351Report {
    bool pass = false;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string detail;
};

/*
 * The basic fraction identities for central p, q: pq = qp, psq = qsp for all
 * s, and p/1 central exactly when p is.  The negative control turns the
 * second identity around: for a non-central p the identity psq = qsp must
 * fail for some s (q is central and A a domain, so psq - qsp = q(ps - sp)),
 * and the suite must find such a witness s.
 */
inline Prop351Report prop_351_suite(const PresentationPtr& pres, int trials,
                                    std::uint64_t seed = 0, int cap = kDefaultFractionCap) {
    if (trials < 1) throw Error("suite needs at least one trial");
    Prop351Report rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);

    const int center_degree = 6;
    const CenterBasis& cb = detail::central_space_cached(pres, center_degree);
    const auto random_central = [&](bool nonzero) {
        for (;;) {
            AlgebraElement z = AlgebraElement::zero(pres);
            for (const auto& b : cb.basis)
                if (draw(rng, 2) == 0)
                    z += AlgebraElement::from_field_scalar(pres, random_field_element(pres->field(), rng)) * b;
            if (!nonzero || !z.is_zero()) return z;
        }
    };

    for (int t = 0; t < trials; ++t) {
        const AlgebraElement p = random_central(false);
        const AlgebraElement q = random_central(true);
        const AlgebraElement s = random_element(pres, rng, 3);
        if (!(p * q == q * p)) {
            rep.detail = "pq != qp for p = " + p.str() + ", q = " + q.str();
            return rep;
        }
        if (!(p * s * q == q * s * p)) {
            rep.detail = "psq != qsp for p = " + p.str() + ", q = " + q.str() + ", s = " + s.str();
            return rep;
        }
        if (!p.is_zero() && !is_central_fraction(whole(p), cap)) {
            rep.detail = "p/1 not central for central p = " + p.str();
            return rep;
        }
    }

    // Negative control: a non-central p must break psq = qsp at some s.
    AlgebraElement w = AlgebraElement::zero(pres);
    for (const auto& g : generating_probes(pres))
        if (!is_central(g)) { w = g; break; }
    if (w.is_zero()) {
        rep.pass = true;
        rep.detail = "all identities held over " + std::to_string(trials) +
                     " trials; negative control skipped (every generator is central)";
        return rep;
    }
    if (is_central_fraction(whole(w), cap)) {
        rep.detail = "non-central " + w.str() + " reported central as a fraction";
        return rep;
    }
    const AlgebraElement q = random_central(true);
    std::string witness;
    for (const auto& g : generating_probes(pres))
        if (!(w * g * q == q * g * w)) { witness = g.str(); break; }
    for (int attempt = 0; witness.empty() && attempt < 50; ++attempt) {
        const AlgebraElement s = random_element(pres, rng, 3);
        if (!(w * s * q == q * s * w)) witness = s.str();
    }
    if (witness.empty()) {
        rep.detail = "no witness s found with psq != qsp for non-central p = " + w.str();
        return rep;
    }
    rep.pass = true;
    rep.detail = "all identities held over " + std::to_string(trials) +
                 " trials; negative control witnessed by s = " + witness;
    return rep;
}

struct MembershipSuiteReport {
    bool pass = false;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string detail;
};

/*
 * Round trip for the membership characterization.  Fractions f = (p s)/(q s)
 * with p, q central cancel to p/q, so they are central in the quotient ring;
 * the characterization must confirm that and recover a central pair equal to
 * f.  On alternating trials a fraction (w s)/s with non-central w -- equal to
 * w itself -- must be rejected.
 */
inline MembershipSuiteReport membership_roundtrip_suite(const PresentationPtr& pres, int trials,
                                                        std::uint64_t seed = 0,
                                                        int cap = kDefaultFractionCap) {
    if (trials < 1) throw Error("suite needs at least one trial");
    MembershipSuiteReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);

    const int center_degree = 6;
    const CenterBasis& cb = detail::central_space_cached(pres, center_degree);
    const auto random_central = [&](bool nonzero) {
        for (;;) {
            AlgebraElement z = AlgebraElement::zero(pres);
            for (const auto& b : cb.basis)
                if (draw(rng, 2) == 0)
                    z += AlgebraElement::from_field_scalar(pres, random_field_element(pres->field(), rng)) * b;
            if (!nonzero || !z.is_zero()) return z;
        }
    };

    AlgebraElement noncentral_probe = AlgebraElement::zero(pres);
    for (const auto& g : generating_probes(pres))
        if (!is_central(g)) { noncentral_probe = g; break; }

    int negatives = 0;
    for (int t = 0; t < trials; ++t) {
        const AlgebraElement p = random_central(false);
        const AlgebraElement q = random_central(true);
        const AlgebraElement s = random_element(pres, rng, 2);
        const RightFraction f = make_fraction(p * s, q * s);
        if (!is_central_fraction(f, cap)) {
            rep.detail = "central input reported non-central: " + fraction_str(f);
            return rep;
        }
        const MembershipResult mr = membership_characterization(f, cap);
        if (!mr.central || !mr.pair) {
            rep.detail = "characterization failed on central input " + fraction_str(f);
            return rep;
        }
        if (!is_central(mr.pair->p) || !is_central(mr.pair->q)) {
            rep.detail = "characterization returned a non-central pair for " + fraction_str(f);
            return rep;
        }
        if (!frac_eq(make_fraction(mr.pair->p, mr.pair->q), make_fraction(p, q), cap)) {
            rep.detail = "recovered pair differs from p/q for p = " + p.str() + ", q = " + q.str() +
                         ", s = " + s.str();
            return rep;
        }

        if (!noncentral_probe.is_zero() && t % 2 == 0) {
            AlgebraElement w = random_element(pres, rng, 2);
            if (is_central(w)) w = noncentral_probe;
            const RightFraction g = make_fraction(w * s, s); // equals w
            if (is_central_fraction(g, cap)) {
                rep.detail = "non-central input reported central: " + fraction_str(g);
                return rep;
            }
            const MembershipResult neg = membership_characterization(g, cap);
            if (neg.central || neg.pair) {
                rep.detail = "characterization accepted non-central input " + fraction_str(g);
                return rep;
            }
            ++negatives;
        }
    }
    rep.pass = true;
    rep.detail = std::to_string(trials) + " central round trips recovered";
    if (negatives > 0)
        rep.detail += "; " + std::to_string(negatives) + " non-central inputs rejected";
    return rep;
}

} // namespace skewpbw

#endif // SKEWPBW_FRACTIONS_HPP
