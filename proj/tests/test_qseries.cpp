#include "pmf/qseries.hpp"

#include <doctest.h>

using namespace pmf;

TEST_CASE("theta of the hexagonal lattice")
{
    QExp th = theta_binary(10);
    CHECK(th.coeff(0) == 1);
    CHECK(th.coeff(24) == 6);
    CHECK(th.coeff(48) == 0);
    CHECK(th.coeff(72) == 6);
    CHECK(th.coeff(96) == 6);
    CHECK(th.coeff(7 * 24) == 12);
    for (long n = 1; n <= 10; ++n)
        CHECK(th.coeff(24 * n) == mpq_class(theta_divisor_formula(n)));
}

TEST_CASE("theta equals -6E")
{
    auto t = verify_theta_identity(200);
    CHECK(t.ok);
    CHECK_FALSE(t.first_mismatch.has_value());
}

TEST_CASE("eta powers")
{
    QExp e = eta_pow(8, 24 * 3);
    REQUIRE(e.valuation().has_value());
    CHECK(*e.valuation() == 8);
    CHECK(e.coeff(8) == 1);
    CHECK(e.coeff(8 + 24) == -8);
    QExp e24 = eta_pow(24, 24 * 4);
    CHECK(e24.coeff(24) == 1);
    CHECK(e24.coeff(48) == -24);
    CHECK(e24.coeff(72) == 252);
}
