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

#ifndef SKEWPBW_SPEC_FILE_HPP
#define SKEWPBW_SPEC_FILE_HPP

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "base_ring.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "maps.hpp"
#include "parser.hpp"
#include "presentation.hpp"

namespace skewpbw {

/*
 * Algebra spec files: a JSON document describing a presentation, so algebras
 * beyond the built-in catalog can be fed to the CLI.  Schema (version 1):
 *
 *   {
 *     "schema_version": 1,
 *     "field": {"kind": "q"} | {"kind": "fp", "p": 7},
 *     "base": {"kind": "field"}
 *           | {"kind": "polynomial", "generator": "t"}
 *           | {"kind": "extension", "generator": "u", "modulus": ["1", "0", "1"]},
 *     "generators": [{"name": "x", "sigma_image": "t + 6", "delta_image": "1"}, ...],
 *     "relations": [{"j": 1, "i": 0, "c": "2", "tail0": "0",
 *                    "tail_coeffs": [{"k": 2, "coeff": "1"}]}, ...]
 *   }
 *
 * All coefficients are element text in the canonical grammar, parsed over the
 * declared base ring.  The modulus lists field coefficients from degree 0
 * upward.  sigma_image/delta_image appear only when the base ring has a
 * generator; relations list only pairs that differ from plain commutation.
 * Serialization is canonical, so parse -> serialize is a fixed point.
 */

namespace detail {

using SpecJson = nlohmann::ordered_json;

inline void check_spec_keys(const SpecJson& obj, std::initializer_list<const char*> allowed,
                            const std::string& where) {
    if (!obj.is_object()) throw InvalidParams("spec file: " + where + " must be an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) { known = true; break; }
        if (!known)
            throw InvalidParams("spec file: unknown key '" + item.key() + "' in " + where);
    }
}

inline const SpecJson& spec_member(const SpecJson& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw InvalidParams("spec file: missing key '" + std::string(key) + "' in " + where);
    return *it;
}

inline std::string spec_string(const SpecJson& obj, const char* key, const std::string& where) {
    const SpecJson& v = spec_member(obj, key, where);
    if (!v.is_string())
        throw InvalidParams("spec file: key '" + std::string(key) + "' in " + where +
                            " must be a string");
    return v.get<std::string>();
}

inline std::int64_t spec_int(const SpecJson& obj, const char* key, const std::string& where) {
    const SpecJson& v = spec_member(obj, key, where);
    if (!v.is_number_integer())
        throw InvalidParams("spec file: key '" + std::string(key) + "' in " + where +
                            " must be an integer");
    return v.get<std::int64_t>();
}

inline BaseRingElement spec_base_element(const BaseRingPtr& ring, const SpecJson& obj,
                                         const char* key, const std::string& where) {
    const std::string text = spec_string(obj, key, where);
    try {
        return parse_base_element(ring, text);
    } catch (const Error& e) {
        throw InvalidParams("spec file: key '" + std::string(key) + "' in " + where + ": " +
                            e.what());
    }
}

} // namespace detail

inline nlohmann::ordered_json presentation_to_json(const PresentationPtr& pres) {
    using detail::SpecJson;
    SpecJson j;
    j["schema_version"] = 1;

    const FieldSpec& field = pres->field();
    SpecJson jf;
    if (field.is_rationals()) {
        jf["kind"] = "q";
    } else {
        jf["kind"] = "fp";
        jf["p"] = field.characteristic();
    }
    j["field"] = std::move(jf);

    const BaseRingPtr& ring = pres->base();
    SpecJson jb;
    switch (ring->kind()) {
        case BaseRingSpec::Kind::field_itself:
            jb["kind"] = "field";
            break;
        case BaseRingSpec::Kind::univariate_poly:
            jb["kind"] = "polynomial";
            jb["generator"] = ring->generator_name();
            break;
        case BaseRingSpec::Kind::simple_extension: {
            jb["kind"] = "extension";
            jb["generator"] = ring->generator_name();
            SpecJson mod = SpecJson::array();
            for (const auto& ck : ring->modulus()) mod.push_back(ck.str());
            jb["modulus"] = std::move(mod);
            break;
        }
    }
    j["base"] = std::move(jb);

    SpecJson gens = SpecJson::array();
    for (std::size_t i = 0; i < pres->num_generators(); ++i) {
        SpecJson g;
        g["name"] = pres->generator_name(i);
        if (ring->has_generator()) {
            g["sigma_image"] = pres->sigma(i).generator_image().str();
            g["delta_image"] = pres->delta(i).generator_image().str();
        }
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);

    SpecJson rels = SpecJson::array();
    const std::size_t n = pres->num_generators();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t jj = i + 1; jj < n; ++jj) {
            const BaseRingElement& c = pres->c(i, jj);
            const BaseRingElement& t0 = pres->tail_const(i, jj);
            SpecJson tails = SpecJson::array();
            for (std::size_t k = 0; k < n; ++k) {
                const BaseRingElement& tk = pres->tail_lin(i, jj, k);
                if (tk.is_zero()) continue;
                SpecJson entry;
                entry["k"] = k;
                entry["coeff"] = tk.str();
                tails.push_back(std::move(entry));
            }
            if (c.is_one() && t0.is_zero() && tails.empty()) continue;
            SpecJson r;
            r["j"] = jj;
            r["i"] = i;
            r["c"] = c.str();
            r["tail0"] = t0.str();
            if (!tails.empty()) r["tail_coeffs"] = std::move(tails);
            rels.push_back(std::move(r));
        }
    }
    j["relations"] = std::move(rels);
    return j;
}

inline std::string presentation_to_spec_text(const PresentationPtr& pres) {
    return presentation_to_json(pres).dump(2) + "\n";
}

inline PresentationPtr presentation_from_json(const nlohmann::ordered_json& j) {
    using detail::SpecJson;
    detail::check_spec_keys(j, {"schema_version", "field", "base", "generators", "relations"},
                            "the top-level object");
    const std::int64_t version = detail::spec_int(j, "schema_version", "the top-level object");
    if (version != 1)
        throw InvalidParams("spec file: unsupported schema_version " + std::to_string(version) +
                            " (expected 1)");

    const SpecJson& jf = detail::spec_member(j, "field", "the top-level object");
    detail::check_spec_keys(jf, {"kind", "p"}, "field");
    const std::string fkind = detail::spec_string(jf, "kind", "field");
    FieldSpec field = FieldSpec::rationals();
    if (fkind == "q") {
        if (jf.contains("p")) throw InvalidParams("spec file: field kind 'q' takes no 'p'");
    } else if (fkind == "fp") {
        field = FieldSpec::prime_field(detail::spec_int(jf, "p", "field"));
    } else {
        throw InvalidParams("spec file: field kind must be 'q' or 'fp', got '" + fkind + "'");
    }

    const SpecJson& jb = detail::spec_member(j, "base", "the top-level object");
    detail::check_spec_keys(jb, {"kind", "generator", "modulus"}, "base");
    const std::string bkind = detail::spec_string(jb, "kind", "base");
    BaseRingPtr ring;
    if (bkind == "field") {
        if (jb.contains("generator") || jb.contains("modulus"))
            throw InvalidParams("spec file: base kind 'field' takes no generator or modulus");
        ring = BaseRingSpec::field_itself(field);
    } else if (bkind == "polynomial") {
        if (jb.contains("modulus"))
            throw InvalidParams("spec file: base kind 'polynomial' takes no modulus");
        ring = BaseRingSpec::univariate_poly(field, detail::spec_string(jb, "generator", "base"));
    } else if (bkind == "extension") {
        const SpecJson& jm = detail::spec_member(jb, "modulus", "base");
        if (!jm.is_array())
            throw InvalidParams("spec file: base modulus must be an array of coefficients");
        std::vector<FieldElement> modulus;
        for (const auto& ck : jm) {
            if (!ck.is_string())
                throw InvalidParams("spec file: modulus coefficients must be strings");
            try {
                modulus.push_back(FieldElement::parse(field, ck.get<std::string>()));
            } catch (const Error& e) {
                throw InvalidParams(std::string("spec file: bad modulus coefficient: ") + e.what());
            }
        }
        ring = BaseRingSpec::simple_extension(field, detail::spec_string(jb, "generator", "base"),
                                              modulus);
    } else {
        throw InvalidParams("spec file: base kind must be 'field', 'polynomial' or 'extension', "
                            "got '" + bkind + "'");
    }

    const SpecJson& jg = detail::spec_member(j, "generators", "the top-level object");
    if (!jg.is_array() || jg.empty())
        throw InvalidParams("spec file: 'generators' must be a nonempty array");
    PresentationBuilder builder(ring);
    for (const auto& g : jg) {
        const std::string where = "generator #" + std::to_string(&g - &jg[0]);
        detail::check_spec_keys(g, {"name", "sigma_image", "delta_image"}, where);
        const std::string name = detail::spec_string(g, "name", where);
        if (!ring->has_generator()) {
            if (g.contains("sigma_image") || g.contains("delta_image"))
                throw InvalidParams("spec file: " + where +
                                    ": the base ring has no generator, so sigma_image and "
                                    "delta_image must be omitted");
            builder.add_generator(name);
            continue;
        }
        const BaseRingElement sigma_image = detail::spec_base_element(ring, g, "sigma_image", where);
        const BaseRingElement delta_image = detail::spec_base_element(ring, g, "delta_image", where);
        BaseRingMap sigma = BaseRingMap::endomorphism(ring, sigma_image);
        BaseRingMap delta = delta_image.is_zero()
                                ? BaseRingMap::zero_derivation(ring)
                                : BaseRingMap::sigma_derivation(ring, delta_image, sigma);
        builder.add_generator(name, sigma, delta);
    }

    const SpecJson& jr = detail::spec_member(j, "relations", "the top-level object");
    if (!jr.is_array())
        throw InvalidParams("spec file: 'relations' must be an array");
    for (const auto& r : jr) {
        const std::string where = "relation #" + std::to_string(&r - &jr[0]);
        detail::check_spec_keys(r, {"j", "i", "c", "tail0", "tail_coeffs"}, where);
        const std::int64_t i = detail::spec_int(r, "i", where);
        const std::int64_t jj = detail::spec_int(r, "j", where);
        if (i < 0 || jj < 0)
            throw InvalidParams("spec file: " + where + ": indices must be nonnegative");
        builder.set_relation(static_cast<std::size_t>(i), static_cast<std::size_t>(jj),
                             detail::spec_base_element(ring, r, "c", where),
                             detail::spec_base_element(ring, r, "tail0", where));
        if (r.contains("tail_coeffs")) {
            const SpecJson& tails = r["tail_coeffs"];
            if (!tails.is_array())
                throw InvalidParams("spec file: " + where + ": tail_coeffs must be an array");
            for (const auto& t : tails) {
                detail::check_spec_keys(t, {"k", "coeff"}, where + " tail");
                const std::int64_t k = detail::spec_int(t, "k", where + " tail");
                if (k < 0)
                    throw InvalidParams("spec file: " + where + ": tail index must be nonnegative");
                builder.set_relation_tail(static_cast<std::size_t>(i), static_cast<std::size_t>(jj),
                                          static_cast<std::size_t>(k),
                                          detail::spec_base_element(ring, t, "coeff", where));
            }
        }
    }

    return builder.build();
}

inline PresentationPtr load_spec_text(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("spec file is not valid JSON: ") + e.what(), e.byte);
    }
    return presentation_from_json(j);
}

inline PresentationPtr load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_spec_text(buffer.str());
}

inline void save_spec_file(const std::string& path, const PresentationPtr& pres) {
    std::ofstream out(path);
    if (!out) throw InvalidParams("cannot write spec file '" + path + "'");
    out << presentation_to_spec_text(pres);
}

} // namespace skewpbw

#endif // SKEWPBW_SPEC_FILE_HPP
