#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootlab/recipe.hpp"

using namespace rootlab;

namespace {

#ifndef ROOTLAB_DATA_DIR
#error "ROOTLAB_DATA_DIR must point at the shipped data directory"
#endif

std::string data_path(const std::string& name) {
    return std::string(ROOTLAB_DATA_DIR) + "/ambient/" + name;
}

ordered_json a3_system() {
    return ordered_json::parse(
        R"({"components": [{"family": "A", "rank": 3}]})");
}

ordered_json neg_identity(int n) {
    ordered_json m = ordered_json::array();
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j)
            row.push_back(i == j ? -1 : 0);
        m.push_back(row);
    }
    return m;
}

Vec half_vec(std::vector<int> twice) {
    Vec out(twice.size());
    for (size_t i = 0; i < twice.size(); ++i)
        out[i] = Rat(twice[i], 2);
    return out;
}

} // namespace

TEST_CASE("riemannian input: all-white diagram, split rank = rank") {
    AmbientData amb = load_ambient_file(data_path("riemannian_a3.json"));
    RestrictionResult res = run_recipe(amb);
    CHECK(res.rank == 3);
    CHECK(res.split_rank == 3);
    CHECK_FALSE(res.degenerate);
    CHECK(res.black.empty());
    CHECK(res.arrows.empty());
    CHECK(res.restricted.size() == 12);
    for (const Vec& lam : res.restricted)
        CHECK(res.multiplicity(lam) == 1);
    REQUIRE(res.diagram.has_value());
    CHECK(res.diagram->label == "AI");
    CHECK(res.diagram->r == 3);
    CHECK(res.diagram->l == 3);
    // D3 realizes the same all-white path; AI is the canonical pick.
    REQUIRE(res.candidates.size() == 2);
    CHECK(res.candidates[0].label == "AI");
    CHECK(res.candidates[1].label == "DI");
}

TEST_CASE("dual reclassification input: AIII(3,1) reproduced") {
    AmbientData amb = load_ambient_file(data_path("aiii31_dual.json"));
    RestrictionResult res = run_recipe(amb);
    CHECK(res.rank == 3);
    CHECK(res.split_rank == 1);
    CHECK(res.fundamental ==
          std::vector<Vec>{Vec{Rat(0), Rat(0), Rat(1)},
                           Vec{Rat(0), Rat(1), Rat(0)},
                           Vec{Rat(1), Rat(0), Rat(0)}});
    CHECK(res.black == std::set<int>{1});
    CHECK(res.arrows == std::vector<std::pair<int, int>>{{0, 2}});
    REQUIRE(res.diagram.has_value());
    CHECK(res.diagram->label == "AIII");
    CHECK(res.diagram->r == 3);
    CHECK(res.diagram->l == 1);
    CHECK(res.diagram->black == std::set<int>{1});
    CHECK(res.diagram->arrows == std::vector<std::pair<int, int>>{{0, 2}});
    // A3 = D3 also matches as DIII(3,1); AIII precedes it.
    REQUIRE(res.candidates.size() >= 1);
    CHECK(res.candidates[0].label == "AIII");
    bool has_diii = false;
    for (const auto& c : res.candidates)
        has_diii = has_diii || c.label == "DIII";
    CHECK(has_diii);
}

TEST_CASE("proper restriction onto BC1 with fiber multiplicities") {
    AmbientData amb = load_ambient_file(data_path("bc1_restriction.json"));
    RestrictionResult res = run_recipe(amb);
    CHECK(res.rank == 1);
    CHECK(res.split_rank == 1);
    Vec u_half = half_vec({1, 1, 1});
    Vec u{Rat(1), Rat(1), Rat(1)};
    REQUIRE(res.restricted.size() == 4);
    CHECK(res.restricted[0] == u_half);
    CHECK(res.restricted[1] == vec_neg(u_half));
    CHECK(res.restricted[2] == u);
    CHECK(res.restricted[3] == vec_neg(u));
    CHECK(res.multiplicity(u_half) == 4);
    CHECK(res.multiplicity(vec_neg(u_half)) == 4);
    CHECK(res.multiplicity(u) == 1);
    CHECK(res.multiplicity(vec_neg(u)) == 1);
    CHECK(res.multiplicity(Vec{Rat(7), Rat(0), Rat(0)}) == 0);
    CHECK(res.fundamental == std::vector<Vec>{u_half});
    CHECK(res.black.empty());
    CHECK(res.arrows.empty());
    REQUIRE(res.diagram.has_value());
    CHECK(res.diagram->label == "BCI");
    CHECK(res.diagram->r == 1);
    CHECK(res.diagram->l == 1);
    CHECK(descriptor_str(res.diagram->rs.descriptor()) == "BC1");
    // The rank-1 all-white BC shape is also BCII's diagram.
    REQUIRE(res.candidates.size() == 2);
    CHECK(res.candidates[0].label == "BCI");
    CHECK(res.candidates[1].label == "BCII");
}

TEST_CASE("restriction only: fibers and reflection closure") {
    AmbientData amb = load_ambient_file(data_path("bc1_restriction.json"));
    RestrictionResult res = restrict_ambient(amb);
    CHECK(res.rank == 1);
    CHECK_FALSE(res.degenerate);
    // Fibers partition the ambient roots that restrict to nonzero values:
    // 10 of the 12 ambient roots (the two sigma-fixed ones drop out).
    size_t total = 0;
    for (const auto& [lam, fib] : res.fibers)
        total += fib.size();
    CHECK(total == 10);
    // No recognition fields yet.
    CHECK(res.fundamental.empty());
    CHECK_FALSE(res.diagram.has_value());
}

TEST_CASE("degenerate input is rejected by the full run") {
    ordered_json doc;
    doc["sigma_system"] =
        ordered_json::parse(R"({"components": [{"family": "A", "rank": 1}]})");
    doc["sigma_matrix"] = ordered_json::parse("[[1]]");
    doc["theta_matrix"] = ordered_json::parse("[[-1]]");
    AmbientData amb = load_ambient(doc);
    RestrictionResult res = restrict_ambient(amb);
    CHECK(res.degenerate);
    CHECK(res.rank == 0);
    CHECK(res.restricted.empty());
    CHECK_THROWS_AS(run_recipe(amb), InputError);
}

TEST_CASE("trivial rank-1 run") {
    ordered_json doc;
    doc["sigma_system"] =
        ordered_json::parse(R"({"components": [{"family": "A", "rank": 1}]})");
    doc["sigma_matrix"] = neg_identity(1);
    doc["theta_matrix"] = neg_identity(1);
    RestrictionResult res = run_recipe(load_ambient(doc));
    CHECK(res.rank == 1);
    CHECK(res.split_rank == 1);
    REQUIRE(res.diagram.has_value());
    CHECK(res.diagram->label == "AI");
    CHECK(res.diagram->r == 1);
}

TEST_CASE("doubled ambient, theta = -swap: doubled diagram with arrows") {
    ordered_json doc;
    doc["sigma_system"] = ordered_json::parse(
        R"({"components": [{"family": "A", "rank": 2},
                           {"family": "A", "rank": 2}]})");
    doc["sigma_matrix"] = neg_identity(4);
    doc["theta_matrix"] = ordered_json::parse(
        "[[0,0,-1,0],[0,0,0,-1],[-1,0,0,0],[0,-1,0,0]]");
    RestrictionResult res = run_recipe(load_ambient(doc));
    CHECK(res.rank == 4);
    CHECK(res.split_rank == 2);
    CHECK(res.black.empty());
    // Fundamental restricted roots in lexicographic order: e4, e3, e2, e1.
    CHECK(res.arrows == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    REQUIRE(res.diagram.has_value());
    CHECK(res.diagram->label == "A+A");
    CHECK(res.diagram->r == 4);
    CHECK(res.diagram->l == 2);
}

TEST_CASE("diagonal restriction of a doubled ambient") {
    ordered_json doc;
    doc["sigma_system"] = ordered_json::parse(
        R"({"components": [{"family": "A", "rank": 2},
                           {"family": "A", "rank": 2}]})");
    doc["sigma_matrix"] = ordered_json::parse(
        "[[0,0,-1,0],[0,0,0,-1],[-1,0,0,0],[0,-1,0,0]]");
    doc["theta_matrix"] = neg_identity(4);
    RestrictionResult res = run_recipe(load_ambient(doc));
    CHECK(res.rank == 2);
    CHECK(res.split_rank == 2);
    CHECK(res.restricted.size() == 6);
    CHECK(res.multiplicity(half_vec({1, 0, 1, 0})) == 2);
    CHECK(res.multiplicity(half_vec({0, 1, 0, 1})) == 2);
    CHECK(res.multiplicity(half_vec({1, 1, 1, 1})) == 2);
    CHECK(res.fundamental == std::vector<Vec>{half_vec({0, 1, 0, 1}),
                                              half_vec({1, 0, 1, 0})});
    REQUIRE(res.diagram.has_value());
    CHECK(res.diagram->label == "AI");
    CHECK(res.diagram->r == 2);
}

TEST_CASE("ambient loader rejects malformed documents") {
    ordered_json base;
    base["sigma_system"] = a3_system();
    base["sigma_matrix"] = neg_identity(3);
    base["theta_matrix"] = neg_identity(3);
    CHECK_NOTHROW(load_ambient(base));

    ordered_json doc = base;
    doc.erase("sigma_system");
    CHECK_THROWS_AS(load_ambient(doc), InputError);

    doc = base;
    doc.erase("theta_matrix");
    CHECK_THROWS_AS(load_ambient(doc), InputError);

    doc = base;
    doc["theta_diagram"] = ordered_json::parse(
        R"({"label": "AIII", "r": 3, "l": 1, "role": "theta"})");
    CHECK_THROWS_AS(load_ambient(doc), InputError); // both matrix and diagram

    doc = base;
    doc.erase("theta_matrix");
    doc["theta_diagram"] = ordered_json::parse(
        R"({"label": "AIII", "r": 3, "l": 1, "role": "sigma"})");
    CHECK_THROWS_AS(load_ambient(doc), InputError); // role mismatch

    doc = base;
    doc.erase("theta_matrix");
    doc["theta_diagram"] = ordered_json::parse(
        R"({"label": "AIII", "r": 4, "l": 1, "role": "theta"})");
    CHECK_THROWS_AS(load_ambient(doc), InputError); // system mismatch

    doc = base;
    doc["theta_matrix"] = ordered_json::parse("[[-1,0],[0,-1]]");
    CHECK_THROWS_AS(load_ambient(doc), InputError); // dimension mismatch
}

TEST_CASE("ambient loader rejects non-involutions and bad pairs") {
    ordered_json doc;
    doc["sigma_system"] =
        ordered_json::parse(R"({"components": [{"family": "A", "rank": 2}]})");
    doc["sigma_matrix"] = neg_identity(2);

    // A shear squares to a non-identity.
    doc["theta_matrix"] = ordered_json::parse("[[1,1],[0,1]]");
    CHECK_THROWS_AS(load_ambient(doc), InputError);

    // Simple reflections do not commute in A2.
    doc["sigma_matrix"] = ordered_json::parse("[[-1,1],[0,1]]");  // s1
    doc["theta_matrix"] = ordered_json::parse("[[1,0],[1,-1]]");  // s2
    CHECK_THROWS_AS(load_ambient(doc), InputError);

    // The B2 coordinate swap is involutive but not root-permuting.
    doc["sigma_system"] =
        ordered_json::parse(R"({"components": [{"family": "B", "rank": 2}]})");
    doc["sigma_matrix"] = ordered_json::parse("[[0,1],[1,0]]");
    doc["theta_matrix"] = neg_identity(2);
    CHECK_THROWS_AS(load_ambient(doc), InputError);

    CHECK_THROWS_AS(load_ambient_file("/nonexistent/path.json"), InputError);
}

TEST_CASE("restriction serializes with diagram, ranks and multiplicities") {
    AmbientData amb = load_ambient_file(data_path("bc1_restriction.json"));
    ordered_json o = restriction_to_json(run_recipe(amb));
    CHECK(o["label"] == "BCI");
    CHECK(o["r"] == 1);
    CHECK(o["l"] == 1);
    CHECK(o["rank"] == 1);
    CHECK(o["split_rank"] == 1);
    CHECK(o["black"] == ordered_json::array());
    CHECK(o["arrows"] == ordered_json::array());
    REQUIRE(o.contains("multiplicities"));
    const ordered_json& m = o["multiplicities"];
    CHECK(m.size() == 4);
    CHECK(m["1/2a1+1/2a2+1/2a3"] == 4);
    CHECK(m["-1/2a1-1/2a2-1/2a3"] == 4);
    CHECK(m["a1+a2+a3"] == 1);
    CHECK(m["-a1-a2-a3"] == 1);
    // Canonical key order survives serialization.
    auto it = m.begin();
    CHECK(it.key() == "1/2a1+1/2a2+1/2a3");
}

TEST_CASE("verification against the catalog") {
    const Catalog& cat = Catalog::shipped();

    RestrictionResult dual =
        run_recipe(load_ambient_file(data_path("aiii31_dual.json")));
    const CatalogEntry* grp = cat.lookup("(su(p,n-p)^2, su(p,n-p))").front();
    std::string diff;
    CHECK(verify_against_catalog(cat, dual, *grp, {{"n", 4}, {"p", 1}}, &diff));
    CHECK(diff.empty());

    const CatalogEntry* complexified = cat.lookup("(sl(n,C), sl(n,R))").front();
    CHECK_FALSE(
        verify_against_catalog(cat, dual, *complexified, {{"n", 4}}, &diff));
    CHECK(diff.find("split_rank") != std::string::npos);
    CHECK(diff.find("1") != std::string::npos);
    CHECK(diff.find("2") != std::string::npos);

    RestrictionResult riem =
        run_recipe(load_ambient_file(data_path("riemannian_a3.json")));
    const CatalogEntry* split = cat.lookup("(sl(n,R), so(p,n-p))").front();
    CHECK(verify_against_catalog(cat, riem, *split, {{"n", 4}, {"p", 1}}, &diff));
    CHECK_FALSE(
        verify_against_catalog(cat, riem, *complexified, {{"n", 4}}, &diff));
    CHECK(diff.find("label") != std::string::npos);
}
