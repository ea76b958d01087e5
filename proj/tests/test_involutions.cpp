#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rootlab/involutions.hpp"

using namespace rootlab;

namespace {

Vec iv(std::vector<int> c) {
    Vec out(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        out[i] = Rat(c[i]);
    return out;
}

} // namespace

TEST_CASE("standard diagram shapes") {
    SatakeDiagram aiii = standard_diagram("AIII", 3, 1);
    CHECK(aiii.r == 3);
    CHECK(aiii.l == 1);
    CHECK(aiii.black == std::set<int>{1});
    CHECK(aiii.arrows == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(descriptor_str(aiii.rs.descriptor()) == "A3");
    CHECK(aiii.p(0) == 2);
    CHECK(aiii.p(2) == 0);
    CHECK(aiii.whites() == std::vector<int>{0, 2});

    SatakeDiagram aii = standard_diagram("AII", 3, 1);
    CHECK(aii.black == std::set<int>{0, 2});
    CHECK(aii.arrows.empty());

    SatakeDiagram ai = standard_diagram("AI", 3, 3);
    CHECK(ai.black.empty());
    CHECK(ai.arrows.empty());
    CHECK(ai.l == 3);

    SatakeDiagram bi = standard_diagram("BI", 5, 2);
    CHECK(bi.black == std::set<int>{2, 3, 4});
    CHECK(bi.arrows.empty());

    SatakeDiagram eiii = standard_diagram("EIII", 6, 2);
    CHECK(eiii.black == std::set<int>{2, 3, 4});
    CHECK(eiii.arrows == std::vector<std::pair<int, int>>{{0, 5}});

    SatakeDiagram eii = standard_diagram("EII", 6, 4);
    CHECK(eii.black.empty());
    CHECK(eii.arrows == std::vector<std::pair<int, int>>{{0, 5}, {2, 4}});

    SatakeDiagram eiv = standard_diagram("EIV", 6, 2);
    CHECK(eiv.black == std::set<int>{1, 2, 3, 4});
    CHECK(eiv.arrows.empty());

    SatakeDiagram fii = standard_diagram("FII", 4, 1);
    CHECK(fii.black == std::set<int>{0, 1, 2});

    SatakeDiagram aa = standard_diagram("A+A", 4, 2);
    CHECK(descriptor_str(aa.rs.descriptor()) == "A2+A2");
    CHECK(aa.black.empty());
    CHECK(aa.arrows == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
}

TEST_CASE("inadmissible parameters are rejected with InputError") {
    CHECK_THROWS_AS(standard_diagram("AI", 3, 2), InputError);
    CHECK_THROWS_AS(standard_diagram("AII", 4, 1), InputError);
    CHECK_THROWS_AS(standard_diagram("AIII", 3, 3), InputError);
    CHECK_THROWS_AS(standard_diagram("BCI", 2, 3), InputError);
    CHECK_THROWS_AS(standard_diagram("DII", 4, 2), InputError);
    CHECK_THROWS_AS(standard_diagram("D+D", 4, 2), InputError);
    CHECK_THROWS_AS(standard_diagram("EI", 6, 5), InputError);
    CHECK_THROWS_AS(standard_diagram("XI", 3, 1), InputError);
    CHECK_THROWS_AS(standard_diagram("AI", 0, 0), InputError);
}

TEST_CASE("fixed parameter labels") {
    int r = 0, l = 0;
    CHECK(fixed_parameters("EIII", &r, &l));
    CHECK(r == 6);
    CHECK(l == 2);
    CHECK(fixed_parameters("G", &r, &l));
    CHECK(r == 2);
    CHECK(l == 2);
    CHECK(fixed_parameters("G+G", &r, &l));
    CHECK(r == 4);
    CHECK(l == 2);
    CHECK(fixed_parameters("FII", &r, &l));
    CHECK(r == 4);
    CHECK(l == 1);
    CHECK_FALSE(fixed_parameters("AI", &r, &l));
    CHECK_FALSE(fixed_parameters("BII", &r, &l));
}

TEST_CASE("standard label list is canonical and complete") {
    const auto& labels = standard_labels();
    CHECK(labels.size() == 37);
    CHECK(labels.front() == "AI");
    // Every label admits at least one diagram.
    for (const std::string& lab : labels) {
        int r = 0, l = 0;
        if (!fixed_parameters(lab, &r, &l)) {
            bool found = false;
            for (r = 1; r <= 8 && !found; ++r)
                for (l = 1; l <= r && !found; ++l) {
                    try {
                        standard_diagram(lab, r, l);
                        found = true;
                    } catch (const InputError&) {
                    }
                }
            CHECK_MESSAGE(found, lab);
        } else {
            CHECK_NOTHROW(standard_diagram(lab, r, l));
        }
    }
    // BCI precedes BCII: the canonical pick for the rank-1 all-white BC shape.
    auto pos = [&](const std::string& s) {
        return std::find(labels.begin(), labels.end(), s) - labels.begin();
    };
    CHECK(pos("BCI") < pos("BCII"));
    CHECK(pos("AIII") < pos("DIII"));
    CHECK(pos("AI") < pos("DI"));
}

TEST_CASE("induced involution closed form: anchor images") {
    // Columns are images of the simple roots.
    Involution aii = induced_involution(standard_diagram("AII", 3, 1));
    CHECK(aii.validated);
    CHECK_FALSE(aii.from_search);
    CHECK(mat_col(aii.matrix, 0) == iv({-1, 0, 0}));
    CHECK(mat_col(aii.matrix, 1) == iv({1, 1, 1}));
    CHECK(mat_col(aii.matrix, 2) == iv({0, 0, -1}));

    Involution aiii = induced_involution(standard_diagram("AIII", 3, 1));
    CHECK(mat_col(aiii.matrix, 0) == iv({0, 1, 1}));
    CHECK(mat_col(aiii.matrix, 1) == iv({0, -1, 0}));
    CHECK(mat_col(aiii.matrix, 2) == iv({1, 1, 0}));

    Involution bi = induced_involution(standard_diagram("BI", 5, 2));
    CHECK(mat_col(bi.matrix, 0) == iv({1, 0, 0, 0, 0}));
    CHECK(mat_col(bi.matrix, 1) == iv({0, 1, 2, 2, 2}));

    Involution ciii = induced_involution(standard_diagram("CIII", 4, 2));
    CHECK(mat_col(ciii.matrix, 1) == iv({1, 1, 1, 0}));

    Involution eiii = induced_involution(standard_diagram("EIII", 6, 2));
    CHECK(mat_col(eiii.matrix, 0) == iv({0, 0, 1, 1, 1, 1}));
    CHECK(mat_col(eiii.matrix, 1) == iv({0, 1, 1, 2, 1, 0}));
    CHECK(mat_col(eiii.matrix, 2) == iv({0, 0, -1, 0, 0, 0}));
    CHECK(mat_col(eiii.matrix, 5) == iv({1, 0, 1, 1, 1, 0}));

    Involution eiv = induced_involution(standard_diagram("EIV", 6, 2));
    CHECK(mat_col(eiv.matrix, 0) == iv({1, 1, 2, 2, 1, 0}));
    CHECK(mat_col(eiv.matrix, 5) == iv({0, 1, 1, 2, 2, 1}));
}

TEST_CASE("validation report") {
    SatakeDiagram d = standard_diagram("AIII", 3, 1);
    Involution inv = induced_involution(d);
    ValidationReport rep = validate(d, inv.matrix);
    CHECK(rep.involutive);
    CHECK(rep.isometry);
    CHECK(rep.permutes_roots);
    CHECK(rep.neg_on_black);
    CHECK(rep.white_congruence);
    CHECK(rep.ok());

    // The identity is involutive and isometric but not -1 on the black node.
    ValidationReport bad = validate(d, mat_identity(3));
    CHECK(bad.involutive);
    CHECK(bad.isometry);
    CHECK_FALSE(bad.neg_on_black);
    CHECK_FALSE(bad.ok());
    CHECK(bad.summary().find("-id on black: FAIL") != std::string::npos);

    CHECK_THROWS_AS(validate(d, mat_identity(2)), InputError);
}

TEST_CASE("search agrees with the closed form") {
    for (const auto& [label, r, l] :
         std::vector<std::tuple<std::string, int, int>>{
             {"AIII", 3, 1}, {"AII", 3, 1}, {"BI", 5, 2}, {"CIII", 4, 2},
             {"DIII", 5, 2}, {"EIII", 6, 2}, {"EIV", 6, 2}}) {
        SatakeDiagram d = standard_diagram(label, r, l);
        Involution closed = induced_involution(d);
        Involution searched = involution_by_search(d);
        CHECK_MESSAGE(closed.matrix == searched.matrix, label);
        CHECK(searched.from_search);
        CHECK(searched.validated);
        CHECK(validate(d, searched.matrix).ok());
    }
}

TEST_CASE("search reports inconsistent diagrams") {
    // B2 with an arrow joining roots of different lengths admits no
    // involution: no root is congruent to the long node's partner.
    SatakeDiagram bad;
    bad.rs = RootSystem::build("B2");
    bad.label = "bad";
    bad.r = 2;
    bad.l = 2;
    bad.arrows = {{0, 1}};
    CHECK_THROWS_AS(involution_by_search(bad), StructuralError);
}

TEST_CASE("every standard diagram validates") {
    for (const auto& [label, r, l] :
         std::vector<std::tuple<std::string, int, int>>{
             {"AI", 4, 4},   {"AII", 5, 2},  {"AIII", 5, 2}, {"BI", 4, 3},
             {"BII", 4, 1},  {"BCI", 3, 3},  {"BCII", 4, 1}, {"BCIII", 5, 2},
             {"CI", 3, 3},   {"CII", 5, 1},  {"CIII", 4, 2}, {"DI", 5, 3},
             {"DII", 5, 1},  {"DIII", 6, 3}, {"EI", 6, 6},   {"EII", 6, 4},
             {"EIII", 6, 2}, {"EIV", 6, 2},  {"EV", 7, 7},   {"EVI", 7, 4},
             {"EVII", 7, 3}, {"EVIII", 8, 8}, {"EIX", 8, 4}, {"FI", 4, 4},
             {"FII", 4, 1},  {"FIII", 4, 2}, {"G", 2, 2},    {"A+A", 6, 3},
             {"B+B", 4, 2},  {"C+C", 6, 3},  {"BC+BC", 4, 2}, {"D+D", 6, 3},
             {"G+G", 4, 2},  {"FI+FI", 8, 4}}) {
        SatakeDiagram d = standard_diagram(label, r, l);
        CHECK(d.r == r);
        CHECK(d.l == l);
        Involution inv = induced_involution(d);
        CHECK_MESSAGE(validate(d, inv.matrix).ok(), label);
    }
}

TEST_CASE("render_ascii") {
    std::string out = render_ascii(standard_diagram("EIII", 6, 2));
    CHECK(out ==
          "EIII  r=6  l=2\n"
          "system: E6\n"
          "nodes: ○1 ○2 ●3 ●4 ●5 ○6\n"
          "arrows: 1 <-> 6\n");
    std::string ai = render_ascii(standard_diagram("AI", 2, 2));
    CHECK(ai ==
          "AI  r=2  l=2\n"
          "system: A2\n"
          "nodes: ○1 ○2\n"
          "arrows: (none)\n");
}
