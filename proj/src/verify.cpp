#include "rootlab/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "rootlab/austere.hpp"
#include "rootlab/catalog.hpp"
#include "rootlab/embedded_data.hpp"
#include "rootlab/recipe.hpp"

namespace rootlab {

std::vector<TableSelection> sweep_selections(int max_rank) {
    std::vector<TableSelection> out;
    auto add = [&](const std::string& label, int r, int l) {
        out.push_back({label, r, l});
    };
    for (int r = 1; r <= max_rank; ++r)
        add("AI", r, r);
    for (int l = 1; 2 * l + 1 <= max_rank; ++l)
        add("AII", 2 * l + 1, l);
    for (int r = 1; r <= max_rank; ++r)
        for (int l = 1; 2 * l <= r + 1; ++l)
            add("AIII", r, l);
    for (int r = 1; r <= max_rank; ++r)
        for (int l = 1; l <= r; ++l) {
            add("BI", r, l);
            add("BCI", r, l);
            add("CI", r, l);
        }
    for (int r = 1; r <= max_rank; ++r)
        for (int l = 1; 2 * l <= r; ++l) {
            add("BCIII", r, l);
            add("CIII", r, l);
        }
    for (int r = 3; r <= max_rank; ++r)
        for (int l = 1; l <= r; ++l)
            add("DI", r, l);
    for (int r = 3; r <= max_rank; ++r)
        add("DIII", r, r / 2);
    for (const char* lab :
         {"EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX",
          "FI", "FII", "FIII", "G"}) {
        int r = 0, l = 0;
        fixed_parameters(lab, &r, &l);
        add(lab, r, l);
    }
    for (const std::string fam : {"A", "B", "C", "BC"})
        for (int l = 1; 2 * l <= max_rank; ++l)
            add(fam + "+" + fam, 2 * l, l);
    for (int l = 3; 2 * l <= max_rank; ++l)
        add("D+D", 2 * l, l);
    for (const char* lab : {"EI+EI", "EV+EV", "EVIII+EVIII", "FI+FI", "G+G"}) {
        int r = 0, l = 0;
        fixed_parameters(lab, &r, &l);
        if (r <= max_rank)
            add(lab, r, l);
    }
    return out;
}

namespace {

std::string sel_str(const TableSelection& s) {
    return s.label + "(" + std::to_string(s.r) + "," + std::to_string(s.l) + ")";
}

// Roots lying in the integer span of the black simple roots, i.e. with zero
// coefficient on every white node.
std::vector<Root> black_span_roots(const SatakeDiagram& d) {
    std::vector<Root> out;
    for (const Root& a : d.rs.roots()) {
        bool inside = true;
        for (int i = 0; inside && i < d.r; ++i)
            if (a[i] != 0 && !d.is_black(i))
                inside = false;
        if (inside)
            out.push_back(a);
    }
    return out;
}

struct Tally {
    bool pass = true;
    std::string first_failure;
    long long checked = 0;

    void fail(const std::string& what) {
        if (pass)
            first_failure = what;
        pass = false;
    }
};

CriterionResult table1_reproduction(const std::vector<TableSelection>& sweep) {
    Tally t;
    for (const TableSelection& s : sweep) {
        SatakeDiagram d = standard_diagram(s.label, s.r, s.l);
        Involution inv = induced_involution(d);
        RootSet brute = real_roots(d.rs, inv);
        RootSet closed = closed_form_real_roots(s.label, s.r, s.l);
        ++t.checked;
        if (brute.members != closed.members)
            t.fail(sel_str(s) + ": brute-force real set (" +
                   std::to_string(brute.members.size()) +
                   " roots) differs from the closed form (" +
                   std::to_string(closed.members.size()) + " roots)");
    }
    return {1, "real-root table closed form equals brute force", t.pass,
            t.pass ? std::to_string(t.checked) + " diagrams" : t.first_failure};
}

CriterionResult exact_cardinalities(const std::vector<TableSelection>& sweep) {
    Tally t;
    const std::vector<std::pair<std::string, size_t>> expected = {
        {"EII", 24}, {"EIII", 4}, {"EVI", 24}, {"EVII", 6},
        {"EIX", 24}, {"FII", 2},  {"FIII", 8},
    };
    for (const auto& [label, want] : expected) {
        int r = 0, l = 0;
        fixed_parameters(label, &r, &l);
        SatakeDiagram d = standard_diagram(label, r, l);
        RootSet real = real_roots(d.rs, induced_involution(d));
        ++t.checked;
        if (real.members.size() != want)
            t.fail(label + ": " + std::to_string(real.members.size()) +
                   " real roots, expected " + std::to_string(want));
    }
    for (const TableSelection& s : sweep) {
        if (s.label != "AII" && s.label.find('+') == std::string::npos)
            continue;
        SatakeDiagram d = standard_diagram(s.label, s.r, s.l);
        RootSet real = real_roots(d.rs, induced_involution(d));
        ++t.checked;
        if (!real.members.empty())
            t.fail(sel_str(s) + ": " + std::to_string(real.members.size()) +
                   " real roots, expected 0");
    }
    return {2, "exact real-root cardinalities", t.pass,
            t.pass ? std::to_string(t.checked) + " types" : t.first_failure};
}

CriterionResult real_roots_austere(const std::vector<TableSelection>& sweep) {
    Tally t;
    MultiplicityMap one = unit_multiplicity();
    for (const TableSelection& s : sweep) {
        SatakeDiagram d = standard_diagram(s.label, s.r, s.l);
        RootSet real = real_roots(d.rs, induced_involution(d));
        for (const Root& a : real.members) {
            ++t.checked;
            if (!is_austere(d.rs, root_vector(d.rs, a), one).verdict)
                t.fail(sel_str(s) + ": A_{" + root_str(a) + "} is not austere");
        }
    }
    return {3, "every real-root orbit point is austere", t.pass,
            t.pass ? std::to_string(t.checked) + " real roots" : t.first_failure};
}

CriterionResult negative_control() {
    Tally t;
    RootSystem a2 = RootSystem::build("A2");
    BasePoint x = make_base_point(a2, Vec{Rat(3), Rat(1)});
    MultiplicityMap one = unit_multiplicity();
    t.checked = 2;
    if (is_austere(a2, x, one).verdict)
        t.fail("X = (3,1) in A2 reported austere");
    std::vector<Rat> spec = shape_spectrum(a2, x, Vec{Rat(1), Rat(5)}, one);
    std::vector<Rat> want = {Rat(-3, 2), Rat(3, 5), Rat(9)};
    if (spec != want) {
        std::string got;
        for (const Rat& v : spec)
            got += (got.empty() ? "" : ", ") + v.str();
        t.fail("shape spectrum {" + got + "}, expected {-3/2, 3/5, 9}");
    }
    return {4, "negative control in A2 at X = (3,1)", t.pass,
            t.pass ? "verdict false, spectrum {-3/2, 3/5, 9}" : t.first_failure};
}

CriterionResult involution_laws(const std::vector<TableSelection>& sweep) {
    Tally t;
    for (const TableSelection& s : sweep) {
        SatakeDiagram d = standard_diagram(s.label, s.r, s.l);
        Involution closed = induced_involution(d);
        ++t.checked;
        if (closed.from_search) {
            t.fail(sel_str(s) + ": closed form fell back to search");
            continue;
        }
        ValidationReport rep = validate(d, closed.matrix);
        if (!rep.ok()) {
            t.fail(sel_str(s) + ": " + rep.summary());
            continue;
        }
        Involution searched = involution_by_search(d);
        if (searched.matrix != closed.matrix)
            t.fail(sel_str(s) + ": search result differs from the closed form");
    }
    return {5, "involution laws and closed-form-vs-search agreement", t.pass,
            t.pass ? std::to_string(t.checked) + " diagrams" : t.first_failure};
}

CriterionResult imaginary_law(const std::vector<TableSelection>& sweep) {
    Tally t;
    for (const TableSelection& s : sweep) {
        SatakeDiagram d = standard_diagram(s.label, s.r, s.l);
        RootSet imag = imaginary_roots(d.rs, induced_involution(d));
        ++t.checked;
        if (imag.members != black_span_roots(d))
            t.fail(sel_str(s) +
                   ": imaginary set differs from the black-span roots");
    }
    return {6, "imaginary roots are the black-span roots", t.pass,
            t.pass ? std::to_string(t.checked) + " diagrams" : t.first_failure};
}

CriterionResult recipe_checks() {
    Tally t;
    t.checked = 3;
    try {
        // (a) Riemannian input: sigma = theta.
        AmbientData riem = load_ambient(
            ordered_json::parse(embedded::ambient_riemannian_a3()));
        RestrictionResult res = run_recipe(riem);
        if (!res.black.empty() || !res.arrows.empty() ||
            res.split_rank != res.rank || res.rank != 3)
            t.fail("riemannian run: expected an all-white arrow-free rank-3 "
                   "diagram with split = rank, got " +
                   restriction_to_json(res).dump());

        // (b) sigma = -id, theta from the AIII(3,1) diagram.
        AmbientData dual =
            load_ambient(ordered_json::parse(embedded::ambient_aiii31_dual()));
        RestrictionResult res2 = run_recipe(dual);
        SatakeDiagram want = standard_diagram("AIII", 3, 1);
        bool same = res2.diagram && res2.diagram->label == want.label &&
                    res2.diagram->r == want.r && res2.diagram->l == want.l &&
                    res2.diagram->black == want.black &&
                    res2.diagram->arrows == want.arrows && res2.rank == 3 &&
                    res2.split_rank == 1;
        if (!same)
            t.fail("AIII(3,1) run: diagram not reproduced, got " +
                   restriction_to_json(res2).dump());

        // (c) fiber constancy on all shipped inputs (run_recipe checks every
        // fiber and throws StructuralError on any representative dependence).
        AmbientData bc1 = load_ambient(
            ordered_json::parse(embedded::ambient_bc1_restriction()));
        run_recipe(bc1);
    } catch (const std::exception& ex) {
        t.fail(std::string("recipe run failed: ") + ex.what());
    }
    return {7, "recipe reproduces the expected diagrams", t.pass,
            t.pass ? "3 shipped ambient inputs" : t.first_failure};
}

CriterionResult invariance_suite() {
    Tally t;
    MultiplicityMap one = unit_multiplicity();
    std::mt19937 gen(20260814);
    const std::vector<std::string> systems = {"A2",  "B2", "G2", "BC2",
                                              "C3",  "D4", "F4", "A2+B2"};
    for (const std::string& name : systems) {
        RootSystem rs = RootSystem::build(name);
        std::vector<Rat> factors;
        for (int c = 0; c < rs.component_count(); ++c)
            factors.push_back(c % 2 == 0 ? Rat(2) : Rat(1, 3));
        Mat regram = rs.rescaled_gram(factors);
        int samples = 0;
        while (samples < 100) {
            Vec x(rs.rank());
            for (int i = 0; i < rs.rank(); ++i) {
                long long num = (long long)(gen() % 19) - 9; // -9..9
                long long den = (long long)(gen() % 3) + 1;  // 1..3
                x[i] = Rat(num, den);
            }
            if (vec_is_zero(x))
                continue;
            ++samples;
            bool base = is_austere(rs, make_base_point(rs, x), one).verdict;
            for (const Rat& c : {Rat(-1), Rat(2), Rat(1, 3)}) {
                ++t.checked;
                bool scaled =
                    is_austere(rs, make_base_point(rs, vec_scale(c, x)), one)
                        .verdict;
                if (scaled != base)
                    t.fail(name + ": scaling X = (" + vec_str(x) + ") by " +
                           c.str() + " flipped the verdict");
            }
            for (int i = 0; i < rs.rank(); ++i) {
                ++t.checked;
                Vec sx = rs.reflect(rs.simple(i), x);
                bool reflected =
                    is_austere(rs, make_base_point(rs, sx), one).verdict;
                if (reflected != base)
                    t.fail(name + ": simple reflection s" + std::to_string(i + 1) +
                           " flipped the verdict at X = (" + vec_str(x) + ")");
            }
            ++t.checked;
            bool rescaled = is_austere_with_gram(regram, rs.positives(),
                                                 make_base_point(regram, x), one)
                                .verdict;
            if (rescaled != base)
                t.fail(name + ": Gram rescaling flipped the verdict at X = (" +
                       vec_str(x) + ")");
        }
    }
    return {8, "austere verdict invariances on random points", t.pass,
            t.pass ? std::to_string(t.checked) + " comparisons"
                   : t.first_failure};
}

CriterionResult catalog_checks() {
    Tally t;
    const Catalog& cat = Catalog::shipped();

    struct Quoted {
        std::string pattern, label;
        long long r, l;
        Bindings env;
    };
    const std::vector<Quoted> quoted = {
        {"(sl(n,R), so(p,n-p))", "AI", 3, 3, {{"n", 4}, {"p", 1}}},
        {"(e6(6), sp(4))", "EI", 6, 6, {}},
        {"(f4(-20), so(9))", "BCI", 1, 1, {}},
    };
    for (const Quoted& q : quoted) {
        ++t.checked;
        auto rows = cat.lookup(q.pattern);
        if (rows.size() != 1) {
            t.fail("lookup '" + q.pattern + "' matched " +
                   std::to_string(rows.size()) + " rows, expected 1");
            continue;
        }
        Catalog::Instantiated got = cat.instantiate(*rows[0], q.env);
        if (got.label != q.label || got.r != q.r || got.l != q.l)
            t.fail("lookup '" + q.pattern + "' gave (" + got.label + ", " +
                   std::to_string(got.r) + ", " + std::to_string(got.l) +
                   "), expected (" + q.label + ", " + std::to_string(q.r) +
                   ", " + std::to_string(q.l) + ")");
    }

    std::vector<std::string> violations = catalog_closure_violations(cat);
    ++t.checked;
    if (!violations.empty())
        t.fail("admissibility closure: " + violations.front() + " (and " +
               std::to_string(violations.size() - 1) + " more)");

    for (const CatalogEntry& e : cat.entries()) {
        ++t.checked;
        if (!expr_equal(parse_formula(print_formula(e.rank)), e.rank) ||
            !expr_equal(parse_formula(print_formula(e.srank)), e.srank) ||
            !cond_equal(parse_condition(print_condition(e.cond)), e.cond))
            t.fail("round-trip failed for " + e.pair_str());
        for (const Cond& dcond : e.domain) {
            ++t.checked;
            if (!cond_equal(parse_condition(print_condition(dcond)), dcond))
                t.fail("domain round-trip failed for " + e.pair_str());
        }
    }
    return {9, "catalog lookups, closure and formula round-trip", t.pass,
            t.pass ? std::to_string(t.checked) + " checks" : t.first_failure};
}

} // namespace

std::vector<CriterionResult> verify_all(int max_rank) {
    if (max_rank < 1)
        throw InputError("max rank must be at least 1");
    std::vector<TableSelection> sweep = sweep_selections(max_rank);
    std::vector<CriterionResult> out;
    out.push_back(table1_reproduction(sweep));
    out.push_back(exact_cardinalities(sweep));
    out.push_back(real_roots_austere(sweep));
    out.push_back(negative_control());
    out.push_back(involution_laws(sweep));
    out.push_back(imaginary_law(sweep));
    out.push_back(recipe_checks());
    out.push_back(invariance_suite());
    out.push_back(catalog_checks());
    return out;
}

} // namespace rootlab
