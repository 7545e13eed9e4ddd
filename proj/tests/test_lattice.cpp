#include "pmf/groups.hpp"
#include "pmf/lattice.hpp"
#include "pmf/paper.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pmf;

TEST_CASE("isometry between the two models")
{
    Mat4 U = find_isometry();
    CHECK(U.conj_transpose() * gram(Model::Diag) * U == gram(Model::Hyp));
    CHECK(U.det().is_unit());
}

TEST_CASE("hexflections are unitary of order 6")
{
    for (auto& g : group_generators_exact()) {
        CHECK(is_unitary(Model::Hyp, g));
        int o = matrix_order(g);
        CHECK((o == 6 || o == 2));
    }
}

TEST_CASE("reflections in the diagonal model transport to unitary matrices")
{
    Vec4 b{EisInt(0), EisInt(1), EisInt(0), EisInt(0)};
    REQUIRE(herm_norm(Model::Diag, b) == -1);
    Mat4 r = reflection_matrix(Model::Diag, b, root6(1));
    CHECK(is_unitary(Model::Diag, r));
    CHECK(matrix_order(r) == 6);
    CHECK(is_unitary(Model::Hyp, diag_to_hyp(r)));
}

TEST_CASE("discriminant form")
{
    DiscForm d = disc_form_build();
    CHECK(d.pm_class_count() == 41);
    int a = DiscForm::index({0, 1, 0, 0});
    CHECK(d.q3[a] == 2);
    CHECK(DiscForm::neg(DiscForm::neg(a)) == a);
    CHECK(d.q3[DiscForm::neg(a)] == d.q3[a]);
}

TEST_CASE("obstruction space for both support conventions")
{
    DiscForm d = disc_form_build();
    auto triples = disc_orthogonal_triples(d, 2);
    CHECK(triples.size() == 15);
    auto os = obstruction_space_solve(d, 2);
    CHECK(os.basis.size() == 5);
    for (auto& t : triples)
        CHECK(os.annihilates({t[0], t[1], t[2]}));
    int single = 0;
    for (int a = 0; a < DiscForm::size; ++a)
        if (d.q3[a] == 2 && a < DiscForm::neg(a))
            single += os.annihilates({a});
    CHECK(single == 0);
}

TEST_CASE("the 15 mirrors give exactly the tabulated triples")
{
    auto d = load_paper_data();
    auto t = orthogonal_triples(Model::Hyp, d.mirrors);
    CHECK(t.size() == 15);
    for (auto& m : d.mirrors)
        CHECK(herm_norm(Model::Hyp, m) == -1);
    for (auto x : d.triples) {
        std::sort(x.begin(), x.end());
        CHECK(std::find(t.begin(), t.end(), x) != t.end());
    }
}
