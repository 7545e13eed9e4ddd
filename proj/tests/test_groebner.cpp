#include "pmf/f4.hpp"
#include "pmf/groebner.hpp"
#include "pmf/hilbert.hpp"
#include "pmf/ratfun.hpp"

#include <doctest.h>

using namespace pmf;

namespace {
OrderPtr grevlex(int n) { return make_order(MonomialOrder::wdegrevlex(make_xy_ring(n))); }
}

TEST_CASE("Buchberger on a circle and a hyperbola")
{
    auto lex = make_order(MonomialOrder::lex(make_xy_ring(2)));
    std::vector<QPoly> F = {parse_qpoly("X1^2 + X2^2 - 4", lex), parse_qpoly("X1*X2 - 1", lex)};
    auto G = buchberger(F);
    CHECK(check_spairs(G).all_zero());
    // the eliminant in X2 alone
    bool found = false;
    for (auto& g : G)
        found = found || g == parse_qpoly("X2^4 - 4*X2^2 + 1", lex);
    CHECK(found);
    CHECK(normal_form(parse_qpoly("X1^3", lex), G).degree_in(0) <= 1);
}

TEST_CASE("graded basis mod p on a complete intersection")
{
    auto o = grevlex(3);
    GradedGB gb(o, default_primes(1)[0], 6);
    gb.add_generator(parse_qpoly("X1^2 - X2*X3", o));
    gb.add_generator(parse_qpoly("X2^2 - X1*X3", o));
    gb.compute(6);
    // two quadrics forming a complete intersection: 1, 3, 4, 4, 4, ...
    CHECK(gb.hilbert(0) == 1);
    CHECK(gb.hilbert(1) == 3);
    CHECK(gb.hilbert(2) == 4);
    CHECK(gb.hilbert(5) == 4);
    CHECK_FALSE(gb.is_member(parse_qpoly("X3^3", o)));
    CHECK(gb.is_member(parse_qpoly("X1^3 - X2^3", o)));
    CHECK(gb.is_member(parse_qpoly("X1^3 - X1*X2*X3", o)));
}

TEST_CASE("Macaulay ranks agree with the graded basis")
{
    auto o = grevlex(4);
    std::vector<QPoly> F = {parse_qpoly("X1*X2 - X3*X4", o), parse_qpoly("X1^3 + X2^3 - X4^3", o)};
    GradedGB gb(o, default_primes(1)[0], 6);
    for (auto& f : F)
        gb.add_generator(f);
    gb.compute(6);
    for (int k = 0; k <= 6; ++k) {
        auto m = macaulay_rank(F, k, default_primes(1)[0], o);
        CHECK(m.quotient_dim() == gb.hilbert(k));
    }
    CHECK(macaulay_member(F, parse_qpoly("X1^2*X2 - X1*X3*X4", o), default_primes(1)[0], o));
}

TEST_CASE("two primes agree")
{
    auto o = grevlex(4);
    std::vector<QPoly> F = {parse_qpoly("X1^2 - 3*X2*X3 + X4^2", o), parse_qpoly("X1*X4 - 5/7*X2^2", o)};
    auto ps = default_primes(2);
    CHECK(ps[0] != ps[1]);
    CHECK(ps[0] > (1u << 30));
    std::vector<long> h[2];
    for (int i = 0; i < 2; ++i) {
        GradedGB gb(o, ps[i], 6);
        for (auto& f : F)
            gb.add_generator(f);
        gb.compute(6);
        for (int k = 0; k <= 6; ++k)
            h[i].push_back(gb.hilbert(k));
    }
    CHECK(h[0] == h[1]);
}

TEST_CASE("Hilbert cubic interpolation")
{
    std::vector<std::pair<long, long>> pts;
    for (long k = 7; k <= 12; ++k)
        pts.push_back({k, 729 * (k - 1) * (k - 2) * (k - 3) / 2 + 810});
    auto f = hilbert_fit(pts);
    CHECK(f.consistent);
    CHECK(f.poly.c[0] == -1377);
    CHECK(f.poly.c[1] == mpq_class(8019, 2));
    CHECK(f.poly.c[2] == -2187);
    CHECK(f.poly.c[3] == mpq_class(729, 2));
    CHECK(f.poly(7) == 44550);
    pts.back().second += 1;
    CHECK_FALSE(hilbert_fit(pts).consistent);
    CHECK_THROWS(hilbert_fit({{1, 1}, {2, 2}}));
}

TEST_CASE("independent variables")
{
    auto r = make_xy_ring(15);
    auto o = make_order(MonomialOrder::wdegrevlex(r));
    uint32_t p = default_primes(1)[0];
    {
        GradedGB gb(o, p, 4);
        gb.add_generator(QPoly::variable(o, 0));
        gb.compute(4);
        CHECK_FALSE(independent_variables(gb, {0}, 4));
    }
    {
        GradedGB gb(o, p, 6);
        gb.add_generator(parse_qpoly("X2^3 - X10^3 + X11^3", o));
        gb.compute(6);
        CHECK(independent_variables(gb, {1}, 6));
        CHECK_FALSE(independent_variables(gb, {1, 9, 10}, 6));
    }
}

TEST_CASE("Buchberger over a rational function field")
{
    auto r = make_xy_ring(3);  // X1 is the parameter, X2, X3 remain
    RatFun::set_context(make_order(MonomialOrder::wdegrevlex(make_ring({"X1"}))));
    auto lex = make_order(MonomialOrder::lex(make_ring({"X2", "X3"})));
    auto o = make_order(MonomialOrder::wdegrevlex(r));
    KPoly f = to_kpoly(parse_qpoly("X1*X2 - X3^2", o), {0}, lex);
    KPoly g = to_kpoly(parse_qpoly("X2^2 - X1", o), {0}, lex);
    auto G = buchberger(std::vector<KPoly>{f, g});
    CHECK(check_spairs(G).all_zero());
    CHECK(normal_form(to_kpoly(parse_qpoly("X3^4 - X1^3", o), {0}, lex), G).is_zero());
}
