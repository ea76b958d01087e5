#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "rootlab/root_system.hpp"

using namespace rootlab;

namespace {

Root highest_root(const RootSystem& rs) {
    // Unique maximizer of the coefficient sum among roots of an irreducible
    // reduced system; for BC it is the doubled highest short root.
    Root best;
    long long best_sum = -1;
    for (const Root& a : rs.roots()) {
        long long s = 0;
        for (int c : a)
            s += c;
        if (s > best_sum) {
            best_sum = s;
            best = a;
        }
    }
    return best;
}

} // namespace

TEST_CASE("descriptor parsing and printing") {
    Descriptor d = parse_descriptor("A3+BC2");
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].family == "A");
    CHECK(d.components[0].rank == 3);
    CHECK(d.components[1].family == "BC");
    CHECK(d.components[1].rank == 2);
    CHECK(d.total_rank() == 5);
    CHECK(descriptor_str(d) == "A3+BC2");
    CHECK(descriptor_str(parse_descriptor("G2")) == "G2");

    CHECK_THROWS_AS(parse_descriptor("A0"), InputError);
    CHECK_THROWS_AS(parse_descriptor("D2"), InputError);
    CHECK_THROWS_AS(parse_descriptor("E9"), InputError);
    CHECK_THROWS_AS(parse_descriptor("E5"), InputError);
    CHECK_THROWS_AS(parse_descriptor("F3"), InputError);
    CHECK_THROWS_AS(parse_descriptor("G3"), InputError);
    CHECK_THROWS_AS(parse_descriptor("H3"), InputError);
    CHECK_THROWS_AS(parse_descriptor(""), InputError);
    CHECK_THROWS_AS(parse_descriptor("A3+"), InputError);
}

TEST_CASE("root counts match the classical formulas") {
    const std::map<std::string, size_t> counts = {
        {"A2", 6},   {"A3", 12},  {"A7", 56},   {"B2", 8},   {"B5", 50},
        {"C3", 18},  {"D3", 12},  {"D4", 24},   {"D8", 112}, {"BC1", 4},
        {"BC2", 12}, {"BC8", 144}, {"E6", 72},  {"E7", 126}, {"E8", 240},
        {"F4", 48},  {"G2", 12},  {"A2+B2", 14}};
    for (const auto& [name, n] : counts) {
        RootSystem rs = RootSystem::build(name);
        CHECK_MESSAGE(rs.roots().size() == n, name);
        CHECK(rs.positives().size() == n / 2);
    }
}

TEST_CASE("canonical order: positives lexicographic, negatives interleaved") {
    RootSystem rs = RootSystem::build("B2");
    const auto& roots = rs.roots();
    REQUIRE(roots.size() == 8);
    for (size_t k = 0; k + 1 < roots.size(); k += 2) {
        CHECK(root_is_positive(roots[k]));
        Root neg = roots[k];
        for (int& c : neg)
            c = -c;
        CHECK(roots[k + 1] == neg);
    }
    for (size_t k = 2; k < roots.size(); k += 2)
        CHECK(std::lexicographical_compare(roots[k - 2].begin(), roots[k - 2].end(),
                                           roots[k].begin(), roots[k].end()));
    // B2 positives in ascending lex order: a2, a1, a1+a2, a1+2a2.
    CHECK(roots[0] == Root{0, 1});
    CHECK(roots[2] == Root{1, 0});
    CHECK(roots[4] == Root{1, 1});
    CHECK(roots[6] == Root{1, 2});
}

TEST_CASE("BC1 is the non-reduced rank-1 system") {
    RootSystem rs = RootSystem::build("BC1");
    CHECK(rs.roots() == std::vector<Root>{{1}, {-1}, {2}, {-2}});
    CHECK(rs.is_root(Root{2}));
    CHECK_FALSE(rs.is_root(Root{3}));
}

TEST_CASE("highest roots") {
    CHECK(highest_root(RootSystem::build("E8")) == Root{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(highest_root(RootSystem::build("F4")) == Root{2, 3, 4, 2});
    CHECK(highest_root(RootSystem::build("G2")) == Root{3, 2});
    CHECK(highest_root(RootSystem::build("BC2")) == Root{2, 2});
    CHECK(highest_root(RootSystem::build("C3")) == Root{2, 2, 1});
}

TEST_CASE("gram normalization: long roots have squared length 2") {
    RootSystem b2 = RootSystem::build("B2");
    CHECK(b2.inner(Root{1, 0}, Root{1, 0}) == Rat(2)); // long
    CHECK(b2.inner(Root{0, 1}, Root{0, 1}) == Rat(1)); // short
    CHECK(b2.inner(Root{1, 0}, Root{0, 1}) == Rat(-1));

    RootSystem g2 = RootSystem::build("G2");
    CHECK(g2.inner(Root{0, 1}, Root{0, 1}) == Rat(2));     // long
    CHECK(g2.inner(Root{1, 0}, Root{1, 0}) == Rat(2, 3)); // short
    CHECK(g2.inner(Root{1, 0}, Root{0, 1}) == Rat(-1));

    // Components are mutually orthogonal.
    RootSystem ab = RootSystem::build("A2+B2");
    CHECK(ab.inner(Root{1, 0, 0, 0}, Root{0, 0, 1, 0}) == Rat(0));
    CHECK(ab.component_of(0) == 0);
    CHECK(ab.component_of(2) == 1);
    CHECK(ab.component_range(0) == std::pair<int, int>{0, 2});
    CHECK(ab.component_range(1) == std::pair<int, int>{2, 4});
    CHECK(ab.component_count() == 2);

    // Mixed overloads agree.
    Vec half{Rat(1, 2), Rat(1, 2)};
    CHECK(b2.inner(Root{1, 0}, half) == b2.inner(Vec{Rat(1), Rat(0)}, half));
}

TEST_CASE("rescaled gram multiplies per component") {
    RootSystem ab = RootSystem::build("A2+B2");
    Mat g = ab.rescaled_gram({Rat(2), Rat(1, 3)});
    CHECK(g[0][0] == Rat(4));            // A2 long: 2 * 2
    CHECK(g[2][2] == Rat(2, 3));         // B2 long: 2 * 1/3
    CHECK(g[3][3] == Rat(1, 3));         // B2 short: 1 * 1/3
    CHECK(g[0][2] == Rat(0));
    CHECK_THROWS_AS(ab.rescaled_gram({Rat(2)}), InputError);
    CHECK_THROWS_AS(ab.rescaled_gram({Rat(2), Rat(0)}), InputError);
}

TEST_CASE("reflections") {
    RootSystem a2 = RootSystem::build("A2");
    CHECK(a2.reflect(Root{1, 0}, Root{0, 1}) == Root{1, 1});
    CHECK(a2.reflect(Root{1, 0}, Root{1, 0}) == Root{-1, 0});
    CHECK(a2.reflect(Root{1, 1}, Root{1, 0}) == Root{0, -1});
    // Reflection preserves the root set.
    for (const Root& b : a2.roots())
        for (const Root& v : a2.roots())
            CHECK(a2.is_root(a2.reflect(b, v)));
    // Vec overload agrees on non-root vectors too.
    Vec v{Rat(1, 2), Rat(0)};
    Vec w = a2.reflect(Root{1, 0}, v);
    CHECK(w == Vec{Rat(-1, 2), Rat(0)});
}

TEST_CASE("longest Weyl element") {
    RootSystem a2 = RootSystem::build("A2");
    Mat w0 = a2.longest_weyl({0, 1});
    // w0 = -opposition: a1 -> -a2, a2 -> -a1.
    CHECK(mat_col(w0, 0) == Vec{Rat(0), Rat(-1)});
    CHECK(mat_col(w0, 1) == Vec{Rat(-1), Rat(0)});
    CHECK(mat_mul(w0, w0) == mat_identity(2));

    // Empty subset: identity.
    CHECK(a2.longest_weyl({}) == mat_identity(2));

    // B2 is -1 on the full system.
    RootSystem b2 = RootSystem::build("B2");
    CHECK(b2.longest_weyl({0, 1}) == mat_neg(mat_identity(2)));

    // Sub-Weyl group of a single reflection.
    Mat s0 = a2.longest_weyl({0});
    CHECK(mat_col(s0, 0) == Vec{Rat(-1), Rat(0)});
    CHECK(mat_col(s0, 1) == Vec{Rat(1), Rat(1)});
}

TEST_CASE("is_root_vec accepts only integral root vectors") {
    RootSystem a2 = RootSystem::build("A2");
    CHECK(a2.is_root_vec(Vec{Rat(1), Rat(1)}));
    CHECK_FALSE(a2.is_root_vec(Vec{Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(a2.is_root_vec(Vec{Rat(2), Rat(2)}));
    CHECK_FALSE(a2.is_root_vec(Vec{Rat(0), Rat(0)}));
}

TEST_CASE("root printing") {
    CHECK(root_str(Root{1, 2, 3}) == "a1+2a2+3a3");
    CHECK(root_str(Root{-1, -1, 0}) == "-a1-a2");
    CHECK(root_str(Root{0, 0}) == "0");
    CHECK(root_str(Root{0, 2}) == "2a2");
    CHECK(vec_str(Vec{Rat(1, 2), Rat(0), Rat(-3, 2)}) == "1/2a1-3/2a3");
    CHECK(vec_str(Vec{Rat(0), Rat(0)}) == "0");
    CHECK(root_latex(Root{1, 2, 3, 2}) ==
          "\\alpha_{1}+2\\alpha_{2}+3\\alpha_{3}+2\\alpha_{4}");
    CHECK(root_latex(Root{-1, 0, -1, 0}) == "-\\alpha_{1}-\\alpha_{3}");
}

TEST_CASE("root parsing") {
    CHECK(parse_root("a1+2a2", 3) == Root{1, 2, 0});
    CHECK(parse_root("-a1-a2", 2) == Root{-1, -1});
    CHECK(parse_root("2a3", 3) == Root{0, 0, 2});
    CHECK(parse_root("a2", 4) == Root{0, 1, 0, 0});
    for (const Root& r : {Root{1, 2, 1}, Root{-2, 0, -1}, Root{0, 1, 0}})
        CHECK(parse_root(root_str(r), 3) == r);
    CHECK_THROWS_AS(parse_root("a4", 3), InputError);
    CHECK_THROWS_AS(parse_root("a0", 3), InputError);
    CHECK_THROWS_AS(parse_root("", 3), InputError);
    CHECK_THROWS_AS(parse_root("a1++a2", 3), InputError);
    CHECK_THROWS_AS(parse_root("b1", 3), InputError);
}

TEST_CASE("simple() returns unit coefficient vectors") {
    RootSystem c3 = RootSystem::build("C3");
    CHECK(c3.simple(0) == Root{1, 0, 0});
    CHECK(c3.simple(2) == Root{0, 0, 1});
}
