// rootlab: exact-arithmetic toolkit for restricted root systems, Satake
// diagrams, real/imaginary root tables, the austere-orbit criterion and the
// symmetric-pair catalog.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"

#include "rootlab/austere.hpp"
#include "rootlab/catalog.hpp"
#include "rootlab/classify.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/involutions.hpp"
#include "rootlab/json_io.hpp"
#include "rootlab/recipe.hpp"
#include "rootlab/root_system.hpp"
#include "rootlab/verify.hpp"

namespace {

using namespace rootlab;

SatakeDiagram resolve_diagram(const std::string& label, int r, int l,
                              bool has_r, bool has_l) {
    int fr = 0, fl = 0;
    if (fixed_parameters(label, &fr, &fl)) {
        if ((has_r && r != fr) || (has_l && l != fl))
            throw InputError(label + " has fixed (rank, split) = (" +
                             std::to_string(fr) + ", " + std::to_string(fl) +
                             ")");
        return standard_diagram(label, fr, fl);
    }
    if (!has_r || !has_l)
        throw InputError("type " + label + " needs --rank and --split");
    return standard_diagram(label, r, l);
}

Vec parse_coeffs(const std::string& text, int rank, const std::string& flag) {
    Vec out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(Rat::parse(item));
    if ((int)out.size() != rank)
        throw InputError(flag + " needs " + std::to_string(rank) +
                         " comma-separated rationals, got " +
                         std::to_string(out.size()));
    return out;
}

Bindings parse_bindings(const std::string& text) {
    Bindings env;
    if (text.empty())
        return env;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("bad parameter binding '" + item +
                             "', expected name=integer");
        env[item.substr(0, eq)] = Rat::parse(item.substr(eq + 1)).as_integer();
    }
    return env;
}

MultiplicityMap load_multiplicities(const std::string& path, int rank) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open multiplicity file '" + path + "'");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const std::exception& ex) {
        throw InputError("bad JSON in '" + path + "': " + ex.what());
    }
    if (!doc.is_object())
        throw InputError("multiplicity file must be an object root -> count");
    auto table = std::make_shared<std::unordered_map<Root, int, RootHash>>();
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number_integer() || value.get<long long>() < 1)
            throw InputError("multiplicity of " + key +
                             " must be a positive integer");
        (*table)[parse_root(key, rank)] = (int)value.get<long long>();
    }
    return [table](const Root& a) {
        auto it = table->find(a);
        return it == table->end() ? 1 : it->second;
    };
}

ordered_json report_to_json(const AustereReport& rep) {
    ordered_json o;
    o["X"] = vec_to_json(rep.x);
    o["verdict"] = rep.verdict;
    ordered_json ms = ordered_json::array();
    for (const auto& [v, count] : rep.multiset) {
        ordered_json item;
        item["v"] = vec_to_json(v);
        item["count"] = count;
        ms.push_back(item);
    }
    o["multiset"] = ms;
    ordered_json pairing = ordered_json::array();
    for (auto [i, j] : rep.pairing)
        pairing.push_back(ordered_json::array({i, j}));
    o["pairing"] = pairing;
    if (!rep.verdict)
        o["failing"] = vec_to_json(rep.failing);
    return o;
}

ordered_json entry_to_json(const CatalogEntry& e) {
    ordered_json o;
    o["section"] = e.section;
    o["pair"] = ordered_json::array({e.pair_g, e.pair_h});
    o["label"] = e.label;
    o["rank"] = e.rank_src;
    o["srank"] = e.srank_src;
    o["cond"] = e.cond_src;
    if (!e.params.empty())
        o["params"] = e.params;
    if (!e.domain.empty()) {
        ordered_json dom = ordered_json::array();
        for (const Cond& c : e.domain)
            dom.push_back(print_condition(c));
        o["domain"] = dom;
    }
    if (e.flagged)
        o["flagged"] = true;
    return o;
}

// Catalog rows matching a pattern, with the distinct-pair requirement used
// by eval and --expect.
std::vector<const CatalogEntry*> unique_pair_rows(const Catalog& cat,
                                                  const std::string& pattern) {
    std::vector<const CatalogEntry*> rows = cat.lookup(pattern);
    if (rows.empty())
        throw InputError("no catalog row matches '" + pattern + "'");
    for (const CatalogEntry* e : rows)
        if (e->pair_str() != rows.front()->pair_str())
            throw InputError("pattern '" + pattern +
                             "' matches several pairs; first two: " +
                             rows.front()->pair_str() + " and " + e->pair_str());
    return rows;
}

int run(int argc, char** argv) {
    CLI::App app{"exact restricted-root-system toolkit"};
    app.require_subcommand(1);

    // roots gen --type <desc>
    auto* roots_cmd = app.add_subcommand("roots", "root system enumeration");
    roots_cmd->require_subcommand(1);
    auto* roots_gen = roots_cmd->add_subcommand("gen", "list all roots");
    std::string gen_type;
    roots_gen->add_option("--type", gen_type, "system descriptor, e.g. A3 or B2+G2")
        ->required();

    // satake show --type L [--rank r --split l]
    auto* satake_cmd = app.add_subcommand("satake", "Satake diagrams");
    satake_cmd->require_subcommand(1);
    auto* satake_show = satake_cmd->add_subcommand("show", "render a diagram");
    std::string sat_type;
    int sat_rank = 0, sat_split = 0;
    satake_show->add_option("--type", sat_type, "type label, e.g. AIII or EVI")
        ->required();
    auto* sat_rank_opt = satake_show->add_option("--rank", sat_rank, "rank r");
    auto* sat_split_opt = satake_show->add_option("--split", sat_split, "split rank l");

    // classify real|imaginary|table1
    auto* classify_cmd = app.add_subcommand("classify", "real/imaginary root tables");
    classify_cmd->require_subcommand(1);
    std::string cls_type, cls_format = "text";
    int cls_rank = 0, cls_split = 0, cls_max_rank = 8;
    auto* cls_real = classify_cmd->add_subcommand("real", "real restricted roots");
    auto* cls_imag = classify_cmd->add_subcommand("imaginary", "imaginary restricted roots");
    auto* cls_table = classify_cmd->add_subcommand("table1", "full real-root table");
    for (CLI::App* sub : {cls_real, cls_imag}) {
        sub->add_option("--type", cls_type, "type label")->required();
        sub->add_option("--rank", cls_rank, "rank r");
        sub->add_option("--split", cls_split, "split rank l");
        sub->add_option("--format", cls_format, "text|json|latex");
    }
    cls_table->add_option("--format", cls_format, "text|json|latex");
    cls_table->add_option("--max-rank", cls_max_rank, "classical sweep bound (default 8)");

    // austere check|survey
    auto* austere_cmd = app.add_subcommand("austere", "austere-orbit criterion");
    austere_cmd->require_subcommand(1);
    auto* aus_check = austere_cmd->add_subcommand("check", "decide one orbit");
    std::string aus_type, aus_root, aus_coeffs, aus_mult;
    int aus_rank = 0, aus_split = 0;
    aus_check->add_option("--type", aus_type, "type label")->required();
    auto* aus_rank_opt = aus_check->add_option("--rank", aus_rank, "rank r");
    auto* aus_split_opt = aus_check->add_option("--split", aus_split, "split rank l");
    auto* aus_root_opt =
        aus_check->add_option("--root", aus_root, "root aK: X = A_{alpha_K}");
    auto* aus_coeffs_opt =
        aus_check->add_option("--coeffs", aus_coeffs, "X coordinates, e.g. 3,1");
    aus_root_opt->excludes(aus_coeffs_opt);
    aus_coeffs_opt->excludes(aus_root_opt);
    aus_check->add_option("--mult", aus_mult, "JSON multiplicity file");
    auto* aus_survey = austere_cmd->add_subcommand("survey", "all root orbits of a type");
    std::string svy_type;
    int svy_rank = 0, svy_split = 0;
    aus_survey->add_option("--type", svy_type, "type label")->required();
    auto* svy_rank_opt = aus_survey->add_option("--rank", svy_rank, "rank r");
    auto* svy_split_opt = aus_survey->add_option("--split", svy_split, "split rank l");

    // spectrum --type L --x v --xi w
    auto* spectrum_cmd = app.add_subcommand("spectrum", "shape-operator spectrum");
    std::string spc_type, spc_x, spc_xi;
    int spc_rank = 0, spc_split = 0;
    spectrum_cmd->add_option("--type", spc_type, "type label")->required();
    auto* spc_rank_opt = spectrum_cmd->add_option("--rank", spc_rank, "rank r");
    auto* spc_split_opt = spectrum_cmd->add_option("--split", spc_split, "split rank l");
    spectrum_cmd->add_option("--x", spc_x, "base point coordinates")->required();
    spectrum_cmd->add_option("--xi", spc_xi, "normal direction coordinates")->required();

    // recipe run --input file [--expect key]
    auto* recipe_cmd = app.add_subcommand("recipe", "ambient restriction recipe");
    recipe_cmd->require_subcommand(1);
    auto* recipe_run = recipe_cmd->add_subcommand("run", "run the recipe on a JSON input");
    std::string rcp_input, rcp_expect;
    recipe_run->add_option("--input", rcp_input, "ambient JSON file")->required();
    recipe_run->add_option("--expect", rcp_expect,
                           "catalog key, e.g. '(sl(n,C), sl(n,R))@n=4'");

    // catalog lookup|eval
    auto* catalog_cmd = app.add_subcommand("catalog", "symmetric-pair catalog");
    catalog_cmd->require_subcommand(1);
    auto* cat_lookup = catalog_cmd->add_subcommand("lookup", "match rows by pair");
    std::string cat_pattern, cat_format = "text";
    cat_lookup->add_option("pattern", cat_pattern, "substring of \"(g, h)\"")
        ->required();
    cat_lookup->add_option("--format", cat_format, "text|json");
    auto* cat_eval = catalog_cmd->add_subcommand("eval", "instantiate one pair");
    std::string eval_pattern, eval_params, eval_format = "text";
    cat_eval->add_option("pattern", eval_pattern, "substring of \"(g, h)\"")
        ->required();
    cat_eval->add_option("--params", eval_params, "bindings, e.g. n=6,p=3");
    cat_eval->add_option("--format", eval_format, "text|json");

    // verify all [--max-rank N]
    auto* verify_cmd = app.add_subcommand("verify", "full verification suite");
    verify_cmd->require_subcommand(1);
    auto* verify_run = verify_cmd->add_subcommand("all", "run every check");
    int max_rank = 8;
    verify_run->add_option("--max-rank", max_rank, "classical sweep bound (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (roots_gen->parsed()) {
        RootSystem rs = RootSystem::build(gen_type);
        for (const Root& a : rs.roots())
            std::cout << root_str(a) << "\n";
        return 0;
    }

    if (satake_show->parsed()) {
        SatakeDiagram d = resolve_diagram(sat_type, sat_rank, sat_split,
                                          sat_rank_opt->count() > 0,
                                          sat_split_opt->count() > 0);
        std::cout << render_ascii(d);
        return 0;
    }

    if (cls_real->parsed() || cls_imag->parsed()) {
        CLI::App* sub = cls_real->parsed() ? cls_real : cls_imag;
        SatakeDiagram d = resolve_diagram(cls_type, cls_rank, cls_split,
                                          sub->count("--rank") > 0,
                                          sub->count("--split") > 0);
        Involution inv = induced_involution(d);
        RootSet set = cls_real->parsed() ? real_roots(d.rs, inv)
                                         : imaginary_roots(d.rs, inv);
        if (cls_format == "text") {
            std::cout << rootset_text(set) << "\n";
        } else if (cls_format == "latex") {
            std::cout << rootset_latex(set) << "\n";
        } else if (cls_format == "json") {
            ordered_json o;
            o["type"] = d.label;
            o["r"] = d.r;
            o["l"] = d.l;
            ordered_json arr = ordered_json::array();
            for (const Root& a : set.members)
                arr.push_back(a);
            o[cls_real->parsed() ? "real_roots" : "imaginary_roots"] = arr;
            std::cout << o.dump(1) << "\n";
        } else {
            throw InputError("unsupported format '" + cls_format + "'");
        }
        return 0;
    }

    if (cls_table->parsed()) {
        std::cout << emit_table(sweep_selections(cls_max_rank), cls_format);
        return 0;
    }

    if (aus_check->parsed()) {
        SatakeDiagram d = resolve_diagram(aus_type, aus_rank, aus_split,
                                          aus_rank_opt->count() > 0,
                                          aus_split_opt->count() > 0);
        BasePoint x;
        if (aus_root_opt->count() > 0)
            x = root_vector(d.rs, parse_root(aus_root, d.rs.rank()));
        else if (aus_coeffs_opt->count() > 0)
            x = make_base_point(d.rs, parse_coeffs(aus_coeffs, d.rs.rank(), "--coeffs"));
        else
            throw InputError("austere check needs --root or --coeffs");
        MultiplicityMap m = aus_mult.empty()
                                ? unit_multiplicity()
                                : load_multiplicities(aus_mult, d.rs.rank());
        AustereReport rep = is_austere(d.rs, x, m);
        std::cout << report_to_json(rep).dump(1) << "\n";
        return rep.verdict ? 0 : 1;
    }

    if (aus_survey->parsed()) {
        SatakeDiagram d = resolve_diagram(svy_type, svy_rank, svy_split,
                                          svy_rank_opt->count() > 0,
                                          svy_split_opt->count() > 0);
        SurveyReport rep = austere_orbit_survey(d, induced_involution(d));
        std::cout << "pseudo-sphere orbits (real roots):\n";
        bool all = true;
        if (rep.sphere.empty())
            std::cout << "  (none)\n";
        for (const SurveyEntry& e : rep.sphere) {
            std::cout << "  " << root_str(e.root) << ": "
                      << (e.verdict ? "austere" : "NOT austere") << "\n";
            all = all && e.verdict;
        }
        RootSet imag{RootKind::imaginary, rep.hyperbolic};
        std::cout << "pseudo-hyperbolic candidates (imaginary roots): "
                  << rootset_text(imag) << "\n";
        return all ? 0 : 1;
    }

    if (spectrum_cmd->parsed()) {
        SatakeDiagram d = resolve_diagram(spc_type, spc_rank, spc_split,
                                          spc_rank_opt->count() > 0,
                                          spc_split_opt->count() > 0);
        BasePoint x = make_base_point(d.rs, parse_coeffs(spc_x, d.rs.rank(), "--x"));
        Vec xi = parse_coeffs(spc_xi, d.rs.rank(), "--xi");
        std::vector<Rat> values = shape_spectrum(d.rs, x, xi, unit_multiplicity());
        ordered_json arr = ordered_json::array();
        for (const Rat& v : values)
            arr.push_back(rat_to_json(v));
        std::cout << arr.dump() << "\n";
        return 0;
    }

    if (recipe_run->parsed()) {
        AmbientData amb = load_ambient_file(rcp_input);
        RestrictionResult res = run_recipe(amb);
        std::cout << restriction_to_json(res).dump(1) << "\n";
        if (rcp_expect.empty())
            return 0;
        std::string pattern = rcp_expect;
        Bindings env;
        if (size_t at = rcp_expect.find('@'); at != std::string::npos) {
            pattern = rcp_expect.substr(0, at);
            env = parse_bindings(rcp_expect.substr(at + 1));
        }
        const Catalog& cat = Catalog::shipped();
        auto rows = unique_pair_rows(cat, pattern);
        std::string diff;
        bool ok = verify_against_catalog(cat, res, *rows.front(), env, &diff);
        if (ok)
            std::cout << "expect " << rows.front()->pair_str() << ": match\n";
        else
            std::cout << "expect " << rows.front()->pair_str()
                      << ": MISMATCH (" << diff << ")\n";
        return ok ? 0 : 1;
    }

    if (cat_lookup->parsed()) {
        auto rows = Catalog::shipped().lookup(cat_pattern);
        if (cat_format == "json") {
            ordered_json arr = ordered_json::array();
            for (const CatalogEntry* e : rows)
                arr.push_back(entry_to_json(*e));
            std::cout << arr.dump(1) << "\n";
        } else if (cat_format == "text") {
            if (rows.empty()) {
                std::cout << "(no matches)\n";
            } else {
                size_t w = 0;
                for (const CatalogEntry* e : rows)
                    w = std::max(w, e->pair_str().size());
                for (const CatalogEntry* e : rows) {
                    std::cout << e->pair_str()
                              << std::string(w - e->pair_str().size(), ' ')
                              << "  " << e->label << "  rank " << e->rank_src
                              << "  srank " << e->srank_src;
                    if (e->cond_src != "true")
                        std::cout << "  if " << e->cond_src;
                    if (e->flagged)
                        std::cout << "  [flagged]";
                    std::cout << "\n";
                }
            }
        } else {
            throw InputError("unsupported format '" + cat_format + "'");
        }
        return 0;
    }

    if (cat_eval->parsed()) {
        const Catalog& cat = Catalog::shipped();
        auto rows = unique_pair_rows(cat, eval_pattern);
        Catalog::Instantiated inst =
            cat.instantiate(*rows.front(), parse_bindings(eval_params));
        if (eval_format == "json") {
            ordered_json o;
            o["label"] = inst.label;
            o["r"] = inst.r;
            o["l"] = inst.l;
            std::cout << o.dump() << "\n";
        } else if (eval_format == "text") {
            std::cout << inst.label << "(" << inst.r << "," << inst.l << ")\n";
        } else {
            throw InputError("unsupported format '" + eval_format + "'");
        }
        return 0;
    }

    if (verify_run->parsed()) {
        std::vector<CriterionResult> results = verify_all(max_rank);
        int failures = 0;
        for (const CriterionResult& c : results) {
            std::cout << "criterion " << c.index << ": "
                      << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " ("
                      << c.detail << ")\n";
            failures += c.pass ? 0 : 1;
        }
        if (failures == 0)
            std::cout << "all " << results.size() << " criteria passed\n";
        else
            std::cout << failures << " of " << results.size()
                      << " criteria failed\n";
        return failures == 0 ? 0 : 1;
    }

    throw InputError("no subcommand executed");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rootlab::InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const rootlab::OverflowError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 2;
    }
}
