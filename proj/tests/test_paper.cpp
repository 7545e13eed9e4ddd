#include "pmf/f4.hpp"
#include "pmf/paper.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pmf;

namespace {

const PaperData& data()
{
    static PaperData d = load_paper_data();
    return d;
}

std::vector<MonomialAction> repaired_action()
{
    std::vector<MonomialAction> a;
    for (auto& g : data().repaired)
        a.push_back(*make_action(g, data()).action);
    return a;
}

const OrbitTable& table()
{
    static OrbitTable t = generate_all_orbits(data(), repaired_action());
    return t;
}

}  // namespace

TEST_CASE("data tables load with valid checksums")
{
    const auto& d = data();
    CHECK(d.mirrors.size() == 15);
    CHECK(d.triples.size() == 15);
    CHECK(d.cdefs.size() == 10);
    CHECK(d.seeds.size() == 12);
    CHECK(d.kbasis.polys.size() == 11);
    CHECK(d.checksums.size() >= 5);
}

TEST_CASE("transcribed action tables break binomial relations")
{
    auto b = make_action(data().transcribed[0], data());
    CHECK_FALSE(b.broken_binomials.empty());
    for (auto& g : data().repaired) {
        auto r = make_action(g, data());
        REQUIRE(r.action.has_value());
        CHECK(r.broken_binomials.empty());
    }
}

TEST_CASE("actions are invertible")
{
    auto o = rings().xy_grevlex;
    CPoly p = parse_xy("X1*X13*X15 - X3*X5*X7 + Y2*X4");
    for (auto& a : repaired_action()) {
        CHECK(act(inverse(a), act(a, p)) == p);
        auto perm = permutation_of(a);
        std::vector<int> s = perm;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < 15; ++i)
            CHECK(s[i] == i);
    }
    (void)o;
}

TEST_CASE("weight 3 type I orbit is the list of binomial cubics")
{
    const Orbit& o = table().get(3, "I");
    CHECK(o.size() == 10);
    CHECK(o.all_rational);
    CHECK(orbit_closed(o, repaired_action()));
}

TEST_CASE("weight 4 type III orbit covers every pair of Y's")
{
    const Orbit& o = table().get(4, "III");
    CHECK(o.size() == 45);
    CHECK(o.all_rational);
}

TEST_CASE("ideal generator counts")
{
    Ideals ids = build_ideals(table());
    CHECK(ids.substituted.size() == 15);
    CHECK(ids.Ihat.size() >= ids.I.size());
    for (auto& f : ids.I)
        CHECK(f.is_homogeneous());
}

TEST_CASE("mixed relation from the holomorphy argument")
{
    QPoly q = to_rational(parse_xy("Y2*X1 - X2*X5*X7"));
    QPoly x = clear_y(q, data());
    CHECK_FALSE(x.is_zero());
    CHECK(x.is_homogeneous());
    for (auto& t : x.terms())
        for (int i = 15; i < 25; ++i)
            CHECK(t.m.e[i] == 0);
}

TEST_CASE("dimensions of J through weight 6 do not depend on the generator order")
{
    Ideals ids = build_ideals(table());
    uint32_t p = default_primes(1)[0];
    auto dims = [&](const std::vector<QPoly>& gens) {
        GradedGB gb(rings().xy_grevlex, p, 6);
        for (auto& f : gens)
            gb.add_generator(f);
        gb.compute(6);
        std::vector<long> h;
        for (int k = 0; k <= 6; ++k)
            h.push_back(gb.hilbert(k));
        return h;
    };
    auto base = dims(ids.J);
    CHECK(base == std::vector<long>{1, 15, 130, 750, 3115, 9558, 22680});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2; ++t) {
        auto sh = ids.J;
        std::shuffle(sh.begin(), sh.end(), rng);
        CHECK(dims(sh) == base);
    }
}
