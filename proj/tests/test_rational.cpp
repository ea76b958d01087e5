#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "rootlab/rational.hpp"

using namespace rootlab;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, -7).den() == 1);
    CHECK(Rat(6).num() == 6);
    CHECK(Rat(6).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), InputError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(-Rat(5, 7) == Rat(-5, 7));
    Rat x(7, 10);
    x += Rat(3, 10);
    CHECK(x == Rat(1));
    x *= Rat(0);
    CHECK(x.is_zero());
    CHECK_THROWS_AS(Rat(1) / Rat(0), InputError);
}

TEST_CASE("overflow is detected, never wrapped") {
    Rat big(INT64_MAX);
    CHECK_THROWS_AS(big * Rat(2), OverflowError);
    CHECK_THROWS_AS(big + Rat(1), OverflowError);
    // Cancellation keeps intermediate 128-bit products representable.
    CHECK(big * Rat(2, INT64_MAX) == Rat(2));
}

TEST_CASE("ordering is the rational order") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(7, 1) > Rat(13, 2));
    std::vector<Rat> v{Rat(1), Rat(-3, 2), Rat(0), Rat(2, 3)};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Rat>{Rat(-3, 2), Rat(0), Rat(2, 3), Rat(1)});
}

TEST_CASE("str and parse round-trip") {
    CHECK(Rat(5, 3).str() == "5/3");
    CHECK(Rat(-5, 3).str() == "-5/3");
    CHECK(Rat(4).str() == "4");
    CHECK(Rat::parse("3") == Rat(3));
    CHECK(Rat::parse("-7/2") == Rat(-7, 2));
    CHECK(Rat::parse("+5") == Rat(5));
    CHECK(Rat::parse("004/6") == Rat(2, 3));
    for (const Rat& x : {Rat(0), Rat(-1), Rat(22, 7), Rat(-9, 4)})
        CHECK(Rat::parse(x.str()) == x);
    CHECK_THROWS_AS(Rat::parse(""), InputError);
    CHECK_THROWS_AS(Rat::parse("x"), InputError);
    CHECK_THROWS_AS(Rat::parse("1/"), InputError);
    CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rat::parse("1.5"), InputError);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), InputError);
}

TEST_CASE("vector helpers") {
    Vec a{Rat(1), Rat(-2), Rat(1, 2)};
    Vec b{Rat(0), Rat(2), Rat(1, 2)};
    CHECK(vec_add(a, b) == Vec{Rat(1), Rat(0), Rat(1)});
    CHECK(vec_sub(a, b) == Vec{Rat(1), Rat(-4), Rat(0)});
    CHECK(vec_scale(Rat(-2), a) == Vec{Rat(-2), Rat(4), Rat(-1)});
    CHECK(vec_neg(a) == vec_scale(Rat(-1), a));
    CHECK(vec_is_zero(vec_sub(a, a)));
    CHECK_FALSE(vec_is_zero(a));
}

TEST_CASE("matrix helpers use the column-as-image convention") {
    // m sends e0 -> e1 and e1 -> -e0 (a quarter turn): columns hold images.
    Mat m{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    CHECK(mat_col(m, 0) == Vec{Rat(0), Rat(1)});
    CHECK(mat_apply(m, Vec{Rat(1), Rat(0)}) == Vec{Rat(0), Rat(1)});
    CHECK(mat_apply(m, Vec{Rat(0), Rat(1)}) == Vec{Rat(-1), Rat(0)});
    Mat m2 = mat_mul(m, m);
    CHECK(m2 == mat_neg(mat_identity(2)));
    CHECK(mat_mul(m2, m2) == mat_identity(2));
    Mat id = mat_identity(3);
    Vec v{Rat(1, 2), Rat(-1, 3), Rat(5)};
    CHECK(mat_apply(id, v) == v);
    mat_set_col(id, 1, v);
    CHECK(mat_col(id, 1) == v);
}

TEST_CASE("span_dimension") {
    Vec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    CHECK(span_dimension({}) == 0);
    CHECK(span_dimension({e1, e2, vec_add(e1, e2)}) == 2);
    CHECK(span_dimension({vec_scale(Rat(1, 2), e1), e1}) == 1);
    CHECK(span_dimension({Vec{Rat(0), Rat(0)}}) == 0);
    Vec a{Rat(1), Rat(2), Rat(3)};
    Vec b{Rat(2), Rat(4), Rat(6)};
    Vec c{Rat(1), Rat(0), Rat(0)};
    CHECK(span_dimension({a, b}) == 1);
    CHECK(span_dimension({a, b, c}) == 2);
}
