#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "rootlab/classify.hpp"

using namespace rootlab;

namespace {

std::vector<Root> positives_of(const std::string& label, int r, int l) {
    return closed_form_real_roots(label, r, l).positive_members();
}

std::vector<Root> sorted_roots(std::vector<Root> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("real and imaginary roots from a validated involution") {
    SatakeDiagram d = standard_diagram("AIII", 3, 1);
    Involution inv = induced_involution(d);

    RootSet real = real_roots(d.rs, inv);
    CHECK(real.members ==
          std::vector<Root>{{1, 1, 1}, {-1, -1, -1}});
    CHECK(real.positive_members() == std::vector<Root>{{1, 1, 1}});

    RootSet imag = imaginary_roots(d.rs, inv);
    CHECK(imag.members == std::vector<Root>{{0, 1, 0}, {0, -1, 0}});

    SatakeDiagram aii = standard_diagram("AII", 3, 1);
    Involution aii_inv = induced_involution(aii);
    CHECK(real_roots(aii.rs, aii_inv).members.empty());
    CHECK(imaginary_roots(aii.rs, aii_inv).members ==
          std::vector<Root>{{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}});

    // Split form: everything is real, nothing imaginary.
    SatakeDiagram g = standard_diagram("G", 2, 2);
    Involution g_inv = induced_involution(g);
    CHECK(real_roots(g.rs, g_inv).members.size() == 12);
    CHECK(imaginary_roots(g.rs, g_inv).members.empty());
}

TEST_CASE("closed-form real positives: frozen values") {
    CHECK(positives_of("CI", 3, 2) ==
          std::vector<Root>{{0, 2, 1}, {1, 0, 0}, {1, 2, 1}, {2, 2, 1}});
    CHECK(positives_of("CIII", 4, 2) ==
          std::vector<Root>{{0, 0, 1, 1}, {1, 2, 2, 1}});
    CHECK(positives_of("BI", 4, 2) ==
          std::vector<Root>{{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 1, 1, 1}, {1, 2, 2, 2}});
    CHECK(positives_of("EIII", 6, 2) ==
          std::vector<Root>{{1, 0, 1, 1, 1, 1}, {1, 2, 2, 3, 2, 1}});
    CHECK(positives_of("FII", 4, 1) == std::vector<Root>{{1, 2, 3, 2}});
    CHECK(positives_of("BCI", 2, 1) ==
          std::vector<Root>{{1, 1}, {2, 2}});
    CHECK(positives_of("AIII", 4, 2) ==
          std::vector<Root>{{0, 1, 1, 0}, {1, 1, 1, 1}});
    CHECK(positives_of("DI", 4, 2) ==
          std::vector<Root>{{1, 0, 0, 0}, {1, 2, 1, 1}});
    CHECK(positives_of("DIII", 5, 2) ==
          std::vector<Root>{{0, 0, 1, 1, 1}, {1, 2, 2, 1, 1}});
    CHECK(positives_of("BCIII", 5, 2) ==
          std::vector<Root>{{0, 0, 1, 2, 2}, {1, 2, 2, 2, 2}});
    CHECK(positives_of("EIV", 6, 2).empty());
    CHECK(positives_of("AII", 3, 1).empty());
    CHECK(positives_of("A+A", 4, 2).empty());
}

TEST_CASE("closed form equals brute force") {
    for (const auto& [label, r, l] :
         std::vector<std::tuple<std::string, int, int>>{
             {"AI", 4, 4},    {"AII", 5, 2},  {"AIII", 5, 2}, {"AIII", 4, 2},
             {"BI", 5, 3},    {"BCI", 4, 2},  {"CI", 4, 2},   {"BCIII", 6, 3},
             {"CIII", 6, 3},  {"DI", 5, 4},   {"DI", 5, 5},   {"DIII", 6, 3},
             {"EII", 6, 4},   {"EIII", 6, 2}, {"EIV", 6, 2},  {"EVI", 7, 4},
             {"EVII", 7, 3},  {"EIX", 8, 4},  {"FII", 4, 1},  {"FIII", 4, 2},
             {"G", 2, 2},     {"A+A", 4, 2},  {"BC+BC", 4, 2}}) {
        SatakeDiagram d = standard_diagram(label, r, l);
        Involution inv = induced_involution(d);
        RootSet brute = real_roots(d.rs, inv);
        RootSet closed = closed_form_real_roots(label, r, l);
        CHECK_MESSAGE(sorted_roots(brute.members) == sorted_roots(closed.members),
                      label << "(" << r << "," << l << ")");
        CHECK(brute.members == closed.members); // canonical order too
    }
}

TEST_CASE("l = 0 yields the empty set without admissibility checks") {
    CHECK(closed_form_real_roots("AIII", 3, 0).members.empty());
    CHECK(closed_form_real_roots("EIII", 6, 0).members.empty());
}

TEST_CASE("all_real_label") {
    for (const std::string& s : {"AI", "EI", "EV", "EVIII", "FI", "G"})
        CHECK(all_real_label(s));
    for (const std::string& s : {"AII", "AIII", "BI", "EII", "FII", "A+A"})
        CHECK_FALSE(all_real_label(s));
}

TEST_CASE("rootset renderers") {
    RootSet fii = closed_form_real_roots("FII", 4, 1);
    CHECK(rootset_text(fii) == "\u00b1(a1+2a2+3a3+2a4)");
    CHECK(rootset_latex(fii) ==
          "\\pm(\\alpha_{1}+2\\alpha_{2}+3\\alpha_{3}+2\\alpha_{4})");
    RootSet empty = closed_form_real_roots("EIV", 6, 2);
    CHECK(rootset_text(empty) == "(none)");
    CHECK(rootset_latex(empty) == "(none)");
    RootSet eiii = closed_form_real_roots("EIII", 6, 2);
    CHECK(rootset_text(eiii) ==
          "\u00b1(a1+a3+a4+a5+a6), \u00b1(a1+2a2+2a3+3a4+2a5+a6)");
}

TEST_CASE("emit_table text format") {
    std::string out = emit_table({{"EIII", 6, 2}, {"G", 2, 2}}, "text");
    CHECK(out ==
          "EIII  r=6  l=2  \u00b1(a1+a3+a4+a5+a6), "
          "\u00b1(a1+2a2+2a3+3a4+2a5+a6)\n"
          "G     r=2  l=2  all restricted roots (12 roots)\n");
}

TEST_CASE("emit_table latex format") {
    std::string out = emit_table({{"FII", 4, 1}}, "latex");
    CHECK(out ==
          "\\begin{tabular}{lccl}\n"
          "type & $r$ & $l$ & real restricted roots \\\\\n"
          "\\hline\n"
          "FII & 4 & 1 & \\pm(\\alpha_{1}+2\\alpha_{2}+3\\alpha_{3}+2\\alpha_{4})"
          " \\\\\n"
          "\\end{tabular}\n");
}

TEST_CASE("emit_table json format") {
    std::string out = emit_table({{"AIII", 3, 1}, {"EIV", 6, 2}}, "json");
    auto doc = nlohmann::ordered_json::parse(out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["type"] == "AIII");
    CHECK(doc[0]["r"] == 3);
    CHECK(doc[0]["l"] == 1);
    CHECK(doc[0]["real_roots"].size() == 2);
    CHECK(doc[0]["real_roots"][0] == nlohmann::ordered_json::array({1, 1, 1}));
    CHECK(doc[0]["real_roots"][1] ==
          nlohmann::ordered_json::array({-1, -1, -1}));
    CHECK(doc[1]["real_roots"].empty());
    // Byte-stable repeat call.
    CHECK(emit_table({{"AIII", 3, 1}, {"EIV", 6, 2}}, "json") == out);
    CHECK_THROWS_AS(emit_table({{"AI", 2, 2}}, "csv"), InputError);
}
