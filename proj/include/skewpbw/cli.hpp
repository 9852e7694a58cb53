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

#ifndef SKEWPBW_CLI_HPP
#define SKEWPBW_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "center.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "fractions.hpp"
#include "growth.hpp"
#include "parser.hpp"
#include "presentation.hpp"
#include "spec_file.hpp"

namespace skewpbw {

/*
 * Command-line surface.  run_cli takes the argument vector (without the
 * program name) and writes to the given streams, which keeps the whole CLI
 * testable in-process.  Exit codes are stable across commands:
 *   0 success / verdict pass      1 verification mismatch
 *   2 usage or input error        3 degree cap exceeded
 */

namespace cli_detail {

using Json = nlohmann::ordered_json;

inline void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline FieldSpec parse_field_flag(const std::string& text) {
    if (text == "q") return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidParams("--field fp:<p> needs a positive integer, got '" + text + "'");
        return FieldSpec::prime_field(std::stoll(digits));
    }
    throw InvalidParams("--field must be 'q' or 'fp:<p>', got '" + text + "'");
}

struct AlgebraFlags {
    std::string algebra;
    std::string field_text = "q";
    bool field_given = false;
    std::map<std::string, std::string> params; // only flags the user passed
};

inline void add_field_and_params(CLI::App* cmd, AlgebraFlags& flags) {
    cmd->add_option_function<std::string>(
           "--field",
           [&flags](const std::string& v) {
               flags.field_text = v;
               flags.field_given = true;
           },
           "scalar field: q (rationals) or fp:<p> (default q)");
    static const std::vector<std::pair<const char*, const char*>> kParams = {
        {"q", "entry parameter q"},
        {"h", "entry parameter h"},
        {"a", "entry parameter a"},
        {"n", "entry parameter n"},
    };
    for (const auto& [name, desc] : kParams) {
        const std::string key = name;
        cmd->add_option_function<std::string>(
            "--" + key, [&flags, key](const std::string& v) { flags.params[key] = v; }, desc);
    }
}

inline void add_algebra_flags(CLI::App* cmd, AlgebraFlags& flags) {
    cmd->add_option("--algebra", flags.algebra, "catalog entry name or path to an algebra spec file")
        ->required();
    add_field_and_params(cmd, flags);
}

struct AlgebraSelection {
    PresentationPtr pres;
    std::optional<CatalogEntry> entry; // engaged for catalog algebras
    std::string display;
};

inline bool is_catalog_name(const std::string& name) {
    for (const auto& info : catalog_list())
        if (info.name == name) return true;
    return false;
}

inline AlgebraSelection resolve_algebra(const AlgebraFlags& flags) {
    AlgebraSelection sel;
    if (is_catalog_name(flags.algebra)) {
        const FieldSpec field = parse_field_flag(flags.field_text);
        CatalogEntry entry = catalog_build(flags.algebra, field, flags.params);
        sel.display = flags.algebra + " over " + field.description();
        if (!entry.params.empty()) {
            sel.display += " (";
            bool first = true;
            for (const auto& [k, v] : entry.params) {
                if (!first) sel.display += ", ";
                sel.display += k + " = " + v;
                first = false;
            }
            sel.display += ")";
        }
        sel.pres = entry.presentation;
        sel.entry = std::move(entry);
        return sel;
    }
    if (std::filesystem::exists(flags.algebra)) {
        if (!flags.params.empty())
            throw InvalidParams("parameter flags (--q/--h/--a/--n) apply only to catalog entries");
        if (flags.field_given)
            throw InvalidParams("the spec file fixes the field; omit --field");
        sel.pres = load_spec_file(flags.algebra);
        sel.display = flags.algebra + " over " + sel.pres->field().description();
        return sel;
    }
    throw UnknownEntry("unknown algebra '" + flags.algebra +
                       "': not a catalog entry and not a readable file (see 'catalog list')");
}

inline std::string fmt4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

inline std::string dims_text(const GrowthTable& t) {
    std::string s;
    for (const auto& [n, dim] : t.dims) {
        (void)n;
        if (!s.empty()) s += " ";
        s += std::to_string(dim);
    }
    return s;
}

inline Json growth_json(const GrowthTable& t) {
    Json j;
    Json dims = Json::array();
    for (const auto& [n, dim] : t.dims) {
        Json row = Json::array();
        row.push_back(n);
        row.push_back(dim);
        dims.push_back(std::move(row));
    }
    j["dims"] = std::move(dims);
    j["estimate"] = t.estimate;
    j["window"] = Json::array({t.window_lo, t.window_hi});
    return j;
}

inline Json comparison_json(const CenterComparison& cmp) {
    Json j;
    j["matches"] = cmp.matches;
    j["expected_rank"] = cmp.expected_rank;
    j["center_dim"] = cmp.center_dim;
    j["joint_rank"] = cmp.joint_rank;
    j["detail"] = cmp.detail;
    return j;
}

inline std::string verdict_text(const HypothesisVerdict& v) {
    const long long a = std::llround(v.gk_A);
    const long long z = std::llround(v.gk_Z);
    if (v.holds.has_value() && *v.holds)
        return "holds (" + std::to_string(a) + " < " + std::to_string(z) + "+1)";
    if (v.holds.has_value())
        return "fails (" + std::to_string(a) + " >= " + std::to_string(z) + "+1)";
    return "unknown (" + v.caveat + ")";
}

// Human-readable relation lines, one per nontrivial rule, in the canonical
// element grammar (so they can be pasted back into eval/mul).
inline std::vector<std::string> relation_lines(const PresentationPtr& pres) {
    std::vector<std::string> lines;
    const std::size_t n = pres->num_generators();
    const BaseRingPtr& ring = pres->base();
    if (ring->has_generator()) {
        const AlgebraElement t = AlgebraElement::base_generator(pres);
        for (std::size_t i = 0; i < n; ++i) {
            if (pres->sigma(i).is_identity() && pres->delta(i).is_zero_map()) continue;
            const AlgebraElement xi = AlgebraElement::generator(pres, i);
            lines.push_back(pres->generator_name(i) + "*" + ring->generator_name() + " = " +
                            (xi * t).str());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool trivial = pres->c(i, j).is_one() && pres->tail_const(i, j).is_zero();
            if (trivial)
                for (std::size_t k = 0; k < n && trivial; ++k)
                    if (!pres->tail_lin(i, j, k).is_zero()) trivial = false;
            if (trivial) continue;
            lines.push_back(pres->generator_name(j) + "*" + pres->generator_name(i) + " = " +
                            (AlgebraElement::generator(pres, j) * AlgebraElement::generator(pres, i))
                                .str());
        }
    }
    return lines;
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::Json;
    int rc = 0;

    CLI::App app{"exact computations in skew PBW extensions"};
    app.name("spbw");
    app.require_subcommand(1);
    // The entry parameter --h would collide with a short -h help flag, so
    // help is long-form only, everywhere.
    app.set_help_flag("--help", "print help and exit");
    auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };

    // --- catalog ---------------------------------------------------------
    auto* cat = add_sub(&app, "catalog", "inspect the built-in algebra catalog");
    cat->require_subcommand(1);

    auto* cat_list = add_sub(cat, "list", "list entries with parameter schemas");
    bool cat_list_json = false;
    cat_list->add_flag("--json", cat_list_json, "emit JSON");
    cat_list->callback([&] {
        const auto infos = catalog_list();
        if (cat_list_json) {
            Json j = Json::array();
            for (const auto& info : infos) {
                Json e;
                e["name"] = info.name;
                e["summary"] = info.summary;
                Json params = Json::array();
                for (const auto& p : info.params) {
                    Json q;
                    q["name"] = p.name;
                    q["description"] = p.description;
                    q["default"] = p.default_value;
                    params.push_back(std::move(q));
                }
                e["params"] = std::move(params);
                j.push_back(std::move(e));
            }
            cli_detail::emit_json(out, j);
            return;
        }
        for (const auto& info : infos) {
            out << info.name << "\n    " << info.summary << "\n";
            for (const auto& p : info.params)
                out << "    --" << p.name << " (default " << p.default_value << "): "
                    << p.description << "\n";
        }
    });

    auto* cat_show = add_sub(cat, "show", "show one entry in full");
    std::string show_name;
    cat_show->add_option("name", show_name, "catalog entry name")->required();
    cli_detail::AlgebraFlags show_flags;
    cli_detail::add_field_and_params(cat_show, show_flags);
    bool cat_show_json = false;
    cat_show->add_flag("--json", cat_show_json, "emit JSON");
    cat_show->callback([&] {
        if (!cli_detail::is_catalog_name(show_name))
            throw UnknownEntry("unknown catalog entry '" + show_name + "'");
        const FieldSpec field = cli_detail::parse_field_flag(show_flags.field_text);
        const CatalogEntry entry = catalog_build(show_name, field, show_flags.params);
        const auto lines = cli_detail::relation_lines(entry.presentation);
        if (cat_show_json) {
            Json j;
            j["name"] = entry.name;
            j["summary"] = entry.summary;
            j["field"] = field.description();
            j["base"] = entry.presentation->base()->description();
            Json params = Json::object();
            for (const auto& [k, v] : entry.params) params[k] = v;
            j["params"] = std::move(params);
            j["generators"] = entry.presentation->generator_names();
            j["relations"] = lines;
            if (entry.expected_center) {
                Json gens = Json::array();
                for (const auto& g : *entry.expected_center) gens.push_back(g.str());
                j["expected_center"] = std::move(gens);
            } else {
                j["expected_center"] = nullptr;
            }
            j["center_note"] = entry.center_note;
            j["literature_presentation"] = entry.literature_presentation;
            j["spec"] = presentation_to_json(entry.presentation);
            cli_detail::emit_json(out, j);
            return;
        }
        out << "entry: " << entry.name << "\n";
        out << "summary: " << entry.summary << "\n";
        out << "field: " << field.description() << "\n";
        out << "base ring: " << entry.presentation->base()->description() << "\n";
        if (!entry.params.empty()) {
            out << "params:";
            for (const auto& [k, v] : entry.params) out << " " << k << " = " << v << ";";
            out << "\n";
        }
        out << "generators:";
        for (const auto& name : entry.presentation->generator_names()) out << " " << name;
        out << "\n";
        if (lines.empty()) {
            out << "relations: all generators commute\n";
        } else {
            out << "relations:\n";
            for (const auto& line : lines) out << "  " << line << "\n";
        }
        if (entry.expected_center) {
            if (entry.expected_center->empty()) {
                out << "expected center: scalars only\n";
            } else {
                out << "expected center generators:";
                for (const auto& g : *entry.expected_center) out << " " << g.str() << ";";
                out << "\n";
            }
        }
        if (!entry.center_note.empty()) out << "note: " << entry.center_note << "\n";
        if (entry.literature_presentation)
            out << "note: presentation adopted from cited literature\n";
    });

    // --- center ----------------------------------------------------------
    auto* center_cmd = add_sub(&app, "center", "degree-bounded center basis");
    cli_detail::AlgebraFlags center_flags;
    cli_detail::add_algebra_flags(center_cmd, center_flags);
    int center_degree = 6;
    center_cmd->add_option("--max-degree", center_degree, "degree bound (default 6)");
    bool center_json = false;
    center_cmd->add_flag("--json", center_json, "emit JSON");
    center_cmd->callback([&] {
        if (center_degree < 0) throw InvalidParams("--max-degree must be nonnegative");
        const auto sel = cli_detail::resolve_algebra(center_flags);
        const CenterBasis cb = central_space(sel.pres, center_degree);
        std::optional<CenterComparison> cmp;
        if (sel.entry && sel.entry->expected_center)
            cmp = compare_expected_center(*sel.entry, cb);
        std::vector<std::string> notes;
        if (cb.basis.size() == 1)
            notes.push_back("center is K up to degree " + std::to_string(center_degree));
        if (sel.entry && !sel.entry->center_note.empty())
            notes.push_back(sel.entry->center_note);
        if (center_json) {
            Json j;
            j["algebra"] = sel.display;
            j["max_degree"] = center_degree;
            j["dimension"] = cb.basis.size();
            Json basis = Json::array();
            for (const auto& z : cb.basis) basis.push_back(z.str());
            j["basis"] = std::move(basis);
            j["dims_by_degree"] = cb.dims_by_degree;
            j["notes"] = notes;
            if (cmp) j["comparison"] = cli_detail::comparison_json(*cmp);
            cli_detail::emit_json(out, j);
        } else {
            out << "algebra: " << sel.display << "\n";
            out << "center basis up to degree " << center_degree << " (dimension "
                << cb.basis.size() << "):\n";
            for (const auto& z : cb.basis) out << "  " << z.str() << "\n";
            out << "dims by degree (0.." << center_degree << "):";
            for (const auto d : cb.dims_by_degree) out << " " << d;
            out << "\n";
            for (const auto& note : notes) out << "note: " << note << "\n";
            if (cmp)
                out << "expected-center comparison: "
                    << (cmp->matches ? "matches expected" : "MISMATCH") << " (" << cmp->detail
                    << ")\n";
        }
        if (cmp && !cmp->matches) rc = 1;
    });

    // --- gkdim -----------------------------------------------------------
    auto* gk_cmd = add_sub(&app, "gkdim", "empirical Gelfand-Kirillov dimension estimate");
    cli_detail::AlgebraFlags gk_flags;
    cli_detail::add_algebra_flags(gk_cmd, gk_flags);
    int gk_steps = 10;
    gk_cmd->add_option("--max-step", gk_steps, "filtration steps (default 10)");
    bool gk_json = false;
    gk_cmd->add_flag("--json", gk_json, "emit JSON");
    gk_cmd->callback([&] {
        if (gk_steps < 4) throw InvalidParams("--max-step must be at least 4");
        const auto sel = cli_detail::resolve_algebra(gk_flags);
        const GrowthTable t = filtration_dims(sel.pres, gk_steps);
        if (gk_json) {
            Json j;
            j["algebra"] = sel.display;
            j["max_step"] = gk_steps;
            j["growth"] = cli_detail::growth_json(t);
            cli_detail::emit_json(out, j);
        } else {
            out << "algebra: " << sel.display << "\n";
            out << "filtration dims (n = 1.." << gk_steps << "): " << cli_detail::dims_text(t)
                << "\n";
            out << "gk estimate: " << cli_detail::fmt4(t.estimate) << " (fit window n = "
                << t.window_lo << ".." << t.window_hi << ")\n";
        }
    });

    // --- hypothesis ------------------------------------------------------
    auto* hyp_cmd = add_sub(
        &app, "hypothesis", "growth comparison of the algebra against its center");
    cli_detail::AlgebraFlags hyp_flags;
    cli_detail::add_algebra_flags(hyp_cmd, hyp_flags);
    int hyp_steps = 12;
    int hyp_degree = 9;
    hyp_cmd->add_option("--max-step", hyp_steps, "filtration steps for the algebra (default 12)");
    hyp_cmd->add_option("--max-degree", hyp_degree, "degree bound for the center (default 9)");
    bool hyp_json = false;
    hyp_cmd->add_flag("--json", hyp_json, "emit JSON");
    hyp_cmd->callback([&] {
        if (hyp_steps < 4 || hyp_degree < 4)
            throw InvalidParams("--max-step and --max-degree must be at least 4");
        const auto sel = cli_detail::resolve_algebra(hyp_flags);
        const HypothesisVerdict v = hypothesis_check(sel.pres, hyp_steps, hyp_degree);
        if (hyp_json) {
            Json j;
            j["algebra"] = sel.display;
            j["max_step"] = hyp_steps;
            j["max_degree"] = hyp_degree;
            j["algebra_growth"] = cli_detail::growth_json(v.algebra_table);
            j["center_growth"] = cli_detail::growth_json(v.center_table);
            j["gk_algebra"] = v.gk_A;
            j["gk_center"] = v.gk_Z;
            if (v.holds.has_value())
                j["holds"] = *v.holds;
            else
                j["holds"] = nullptr;
            j["verdict"] = cli_detail::verdict_text(v);
            j["caveat"] = v.caveat;
            cli_detail::emit_json(out, j);
        } else {
            out << "algebra: " << sel.display << "\n";
            out << "algebra dims (n = 1.." << hyp_steps << "): "
                << cli_detail::dims_text(v.algebra_table) << "\n";
            out << "gk estimate for A: " << cli_detail::fmt4(v.gk_A) << " (window "
                << v.algebra_table.window_lo << ".." << v.algebra_table.window_hi << ")\n";
            out << "center dims (e = 1.." << hyp_degree << "): "
                << cli_detail::dims_text(v.center_table) << "\n";
            out << "gk estimate for Z(A): " << cli_detail::fmt4(v.gk_Z) << " (window "
                << v.center_table.window_lo << ".." << v.center_table.window_hi << ")\n";
            out << "verdict: " << cli_detail::verdict_text(v) << "\n";
            if (v.holds.has_value() && !v.caveat.empty()) out << "note: " << v.caveat << "\n";
        }
    });

    // --- expression commands ---------------------------------------------
    struct ExprCommand {
        const char* name;
        const char* help;
        int arity;
    };
    static const std::vector<ExprCommand> kExprCommands = {
        {"eval", "parse an expression and print its normal form", 1},
        {"mul", "multiply two elements", 2},
        {"commutator", "commutator [a, b] = ab - ba", 2},
        {"is-central", "test whether an element is central", 1},
    };
    struct ExprState {
        cli_detail::AlgebraFlags flags;
        std::vector<std::string> exprs;
        bool json = false;
    };
    std::vector<std::unique_ptr<ExprState>> expr_states;
    for (const auto& spec : kExprCommands) {
        auto* cmd = add_sub(&app, spec.name, spec.help);
        expr_states.push_back(std::make_unique<ExprState>());
        ExprState& state = *expr_states.back();
        cli_detail::add_algebra_flags(cmd, state.flags);
        cmd->add_option("expr", state.exprs, "element expression")
            ->required()
            ->expected(spec.arity);
        cmd->add_flag("--json", state.json, "emit JSON");
        const std::string name = spec.name;
        cmd->callback([&state, &out, name] {
            const auto sel = cli_detail::resolve_algebra(state.flags);
            std::vector<AlgebraElement> elems;
            for (const auto& text : state.exprs) elems.push_back(parse_element(sel.pres, text));
            std::string result;
            bool central = false;
            if (name == "eval") {
                result = elems[0].str();
            } else if (name == "mul") {
                result = (elems[0] * elems[1]).str();
            } else if (name == "commutator") {
                result = commutator(elems[0], elems[1]).str();
            } else {
                central = is_central(elems[0]);
                result = central ? "true" : "false";
            }
            if (state.json) {
                Json j;
                j["algebra"] = sel.display;
                j["input"] = state.exprs;
                if (name == "is-central")
                    j["central"] = central;
                else
                    j["result"] = result;
                cli_detail::emit_json(out, j);
            } else {
                out << result << "\n";
            }
        });
    }

    // --- ore-solve -------------------------------------------------------
    auto* ore_cmd = add_sub(&app, "ore-solve", "common right multiple a*u = s*v");
    cli_detail::AlgebraFlags ore_flags;
    cli_detail::add_algebra_flags(ore_cmd, ore_flags);
    std::vector<std::string> ore_exprs;
    ore_cmd->add_option("expr", ore_exprs, "elements a and s")->required()->expected(2);
    int ore_cap = kDefaultFractionCap;
    ore_cmd->add_option("--cap", ore_cap, "degree cap for the search (default 12)");
    bool ore_json = false;
    ore_cmd->add_flag("--json", ore_json, "emit JSON");
    ore_cmd->callback([&] {
        if (ore_cap < 0) throw InvalidParams("--cap must be nonnegative");
        const auto sel = cli_detail::resolve_algebra(ore_flags);
        const AlgebraElement a = parse_element(sel.pres, ore_exprs[0]);
        const AlgebraElement s = parse_element(sel.pres, ore_exprs[1]);
        if (a.is_zero() || s.is_zero())
            throw InvalidParams("ore-solve needs nonzero elements");
        const OrePair pair = ore_solve(a, s, ore_cap);
        if (ore_json) {
            Json j;
            j["algebra"] = sel.display;
            j["a"] = a.str();
            j["s"] = s.str();
            j["cap"] = ore_cap;
            j["u"] = pair.u.str();
            j["v"] = pair.v.str();
            j["common"] = (a * pair.u).str();
            cli_detail::emit_json(out, j);
        } else {
            out << "u = " << pair.u.str() << "\n";
            out << "v = " << pair.v.str() << "\n";
            out << "a*u = s*v = " << (a * pair.u).str() << "\n";
        }
    });

    // --- fractions check -------------------------------------------------
    auto* frac = add_sub(&app, "fractions", "quotient-ring suites");
    frac->require_subcommand(1);
    auto* frac_check = add_sub(
        frac, "check", "randomized identity and membership suites for central fractions");
    cli_detail::AlgebraFlags frac_flags;
    cli_detail::add_algebra_flags(frac_check, frac_flags);
    int frac_trials = 100;
    frac_check->add_option("--trials", frac_trials, "number of random trials (default 100)");
    int frac_cap = kDefaultFractionCap;
    frac_check->add_option("--cap", frac_cap, "degree cap for fraction searches (default 12)");
    std::int64_t frac_seed = 0;
    frac_check->add_option("--seed", frac_seed, "seed for the random suites (default 0)");
    bool frac_json = false;
    frac_check->add_flag("--json", frac_json, "emit JSON");
    frac_check->callback([&] {
        if (frac_trials < 1) throw InvalidParams("--trials must be positive");
        if (frac_cap < 0) throw InvalidParams("--cap must be nonnegative");
        if (frac_seed < 0) throw InvalidParams("--seed must be nonnegative");
        const auto sel = cli_detail::resolve_algebra(frac_flags);
        const auto seed = static_cast<std::uint64_t>(frac_seed);
        const Prop351Report identity = prop_351_suite(sel.pres, frac_trials, seed, frac_cap);
        const MembershipSuiteReport membership =
            membership_roundtrip_suite(sel.pres, frac_trials, seed, frac_cap);
        const bool pass = identity.pass && membership.pass;
        if (frac_json) {
            Json j;
            j["algebra"] = sel.display;
            j["seed"] = seed;
            j["trials"] = frac_trials;
            j["cap"] = frac_cap;
            Json ji;
            ji["pass"] = identity.pass;
            ji["detail"] = identity.detail;
            j["identity_suite"] = std::move(ji);
            Json jm;
            jm["pass"] = membership.pass;
            jm["detail"] = membership.detail;
            j["membership_suite"] = std::move(jm);
            j["pass"] = pass;
            cli_detail::emit_json(out, j);
        } else {
            out << "algebra: " << sel.display << "\n";
            out << "seed: " << seed << ", trials: " << frac_trials << ", cap: " << frac_cap
                << "\n";
            out << "identity suite: " << (identity.pass ? "pass" : "FAIL") << " -- "
                << identity.detail << "\n";
            out << "membership suite: " << (membership.pass ? "pass" : "FAIL") << " -- "
                << membership.detail << "\n";
            out << "overall: " << (pass ? "pass" : "FAIL") << "\n";
        }
        if (!pass) rc = 1;
    });

    // --- parse and dispatch ----------------------------------------------
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* active = &app;
        for (;;) {
            const auto subs = active->get_subcommands();
            if (subs.empty()) break;
            active = subs.front();
        }
        out << active->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

} // namespace skewpbw

#endif // SKEWPBW_CLI_HPP
