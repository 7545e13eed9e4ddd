#include "pmf/eis.hpp"

#include <doctest.h>

using namespace pmf;

TEST_CASE("zeta is a primitive cube root of unity")
{
    EisInt w = EisInt::zeta();
    CHECK(w * w * w == EisInt(1));
    CHECK(w * w + w + EisInt(1) == EisInt(0));
    CHECK(w.conj() == w * w);
}

TEST_CASE("norms and sqrt(-3)")
{
    CHECK(EisInt(2, 1).norm() == 3);
    EisInt s = EisInt::sqrt_m3();
    CHECK(s * s == EisInt(-3));
    CHECK(EisInt(3).divisible_by(s));
    CHECK_FALSE(EisInt(1).divisible_by(s));
    EisInt q;
    REQUIRE(EisInt(7, 2).divide_by(EisInt(2, 1), q) == (EisInt(7, 2).norm() % 3 == 0));
}

TEST_CASE("units are the six powers of -w")
{
    auto u = units();
    REQUIRE(u.size() == 6);
    for (int k = 0; k < 6; ++k) {
        CHECK(u[k].is_unit());
        CHECK(unit_log(unit_power(k)) == k);
    }
    CHECK(unit_power(3) == EisInt(-1));
    CHECK(unit_log(EisInt(2)) == -1);
}

TEST_CASE("parse and print round trip")
{
    for (const char* s : {"4+6w", "-3-3w", "5w", "-9", "0", "-1+4w"}) {
        EisInt x = EisInt::parse(s);
        CHECK(EisInt::parse(x.str()) == x);
    }
    CHECK(EisInt::parse("5-5w") == EisInt(5, -5));
}

TEST_CASE("cyclotomic field arithmetic")
{
    CycRat a(mpq_class(1, 2), mpq_class(3)), b(mpq_class(-2), mpq_class(1, 3));
    CHECK(a * a.inverse() == CycRat(1));
    CHECK((a / b) * b == a);
    CHECK((a * b).norm() == a.norm() * b.norm());
    for (int k = 0; k < 6; ++k)
        CHECK(root_log(root6(k)) == k);
}

TEST_CASE("residues mod 3 and mod sqrt(-3)")
{
    Res3 x = Res3::from(EisInt(4, 5));
    CHECK(x == Res3(1, 2));
    CHECK(Res3::decode(x.code()) == x);
    CHECK(reduce_sqrt3(EisInt::zeta()) == ResSqrt3(1));
    CHECK(reduce_sqrt3(EisInt::sqrt_m3()) == ResSqrt3(0));
    CHECK(Res3::from(EisInt(2, 1) * EisInt(1, 1)) == Res3(2, 1) * Res3(1, 1));
}
