#include "pmf/bsgs.hpp"
#include "pmf/groups.hpp"

#include <doctest.h>

using namespace pmf;

TEST_CASE("symmetric group via Schreier-Sims")
{
    PermTraits::n = 6;
    Perm a = Perm::identity(6), b = Perm::identity(6);
    a.img = {1, 0, 2, 3, 4, 5};
    b.img = {1, 2, 3, 4, 5, 0};
    Bsgs<PermTraits> S(6, {a, b});
    CHECK(S.order() == 720);
    CHECK(S.contains(b));
    Bsgs<PermTraits> C(6, {b});
    CHECK(C.order() == 6);
    CHECK_FALSE(C.contains(a));
    CHECK(enumerate_group<PermTraits>({a, b}).size() == 720);
    PermTraits::n = 15;
}

TEST_CASE("group orders and cusps")
{
    auto G = build_group(group_generators_exact());
    auto S = build_group(stab_generators_exact());
    CHECK(G.order() == 85030560ull);
    CHECK(S.order() == 17496ull);
    auto c = cusp_counts(G, S);
    CHECK(c.cusp_classes == 4860);
    CHECK(c.boundary_points == 810);
    CHECK(c.orbit_of_e == 1620);
    CHECK(c.orbit_is_P);
    CHECK(c.stab_prime_order == 52488);
}

TEST_CASE("level sqrt(-3)")
{
    auto G = build_group(group_generators_exact());
    auto L = level_sqrt3_analysis(G, 100);
    CHECK(L.isotropic_points == 10);
    CHECK(L.norm_m1_classes == 15);
    CHECK(L.transitive_isotropic);
    CHECK(L.transitive_norm_m1);
    CHECK(L.kernel_index == 59049ull);
    CHECK(f3_isotropic_points().size() == 10);
}

TEST_CASE("transvections fix the cusp")
{
    Mat4 t = transvection(EisInt(1), EisInt(0), EisInt(1, 1));
    CHECK(is_unitary(Model::Hyp, t));
    Vec4 e{EisInt(1), EisInt(0), EisInt(0), EisInt(0)};
    CHECK(t * e == e);
}
