#include "pmf/properties.hpp"

#include "pmf/bsgs.hpp"
#include "pmf/f4.hpp"
#include "pmf/groups.hpp"
#include "verify_state.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pmf {

using nlohmann::json;

namespace {

struct Suite {
    PropertyResult r;
    explicit Suite(std::string name) { r.name = std::move(name); }
    void check(bool ok, const std::string& what)
    {
        ++r.cases;
        if (!ok) {
            if (!r.failures)
                r.first_failure = what;
            ++r.failures;
        }
    }
};

OrderPtr small_order(int n, std::vector<int> prio = {})
{
    return make_order(MonomialOrder::wdegrevlex(make_xy_ring(n), std::move(prio)));
}

QPoly random_poly(const OrderPtr& o, std::mt19937_64& rng, int max_deg, int terms, bool homogeneous = false)
{
    const Ring& r = o->ring();
    std::vector<Term<mpq_class>> t;
    for (int i = 0; i < terms; ++i) {
        int d = homogeneous ? max_deg : int(rng() % (max_deg + 1));
        std::vector<int> ex(r.nvars(), 0);
        for (int j = 0; j < d; ++j)
            ++ex[rng() % r.nvars()];
        long num = long(rng() % 19) - 9;
        long den = long(rng() % 4) + 1;
        if (num)
            t.push_back({r.make(ex), mpq_class(num, den)});
    }
    for (auto& x : t)
        x.c.canonicalize();
    return QPoly::from_terms(o, std::move(t));
}

// control ideal: a few sparse homogeneous forms of degree 2 and 3 in 4 variables
std::vector<QPoly> control_ideal(const OrderPtr& o, std::mt19937_64& rng)
{
    std::vector<QPoly> g;
    for (int d : {2, 2, 3}) {
        QPoly f(o);
        while (f.is_zero() || f.size() < 2)
            f = random_poly(o, rng, d, 3, true);
        g.push_back(f);
    }
    return g;
}

std::vector<long> hilbert_from_leading(const Ring& r, const std::vector<Mono>& lms, int top)
{
    std::vector<long> h;
    for (int d = 0; d <= top; ++d) {
        long c = 0;
        for (auto& m : r.monomials_of_degree(d))
            if (std::none_of(lms.begin(), lms.end(), [&](const Mono& l) { return r.divides(l, m); }))
                ++c;
        h.push_back(c);
    }
    return h;
}

std::vector<long> hilbert_graded(const std::vector<QPoly>& g, const OrderPtr& o, uint32_t p, int top)
{
    GradedGB gb(o, p, top);
    for (auto& f : g)
        gb.add_generator(f);
    gb.compute(top);
    std::vector<long> h;
    for (int d = 0; d <= top; ++d)
        h.push_back(gb.hilbert(d));
    return h;
}

QPoly reorder(const QPoly& f, const OrderPtr& o)
{
    return f.with_order(o);
}

}  // namespace

PropertyResult ring_axioms_suite(uint64_t seed, size_t cases)
{
    Suite s("ring-axioms");
    std::mt19937_64 rng(seed);
    auto o = small_order(4);
    QPoly zero(o), one = QPoly::constant(o, mpq_class(1));
    for (size_t i = 0; i < cases; ++i) {
        QPoly a = random_poly(o, rng, 3, 5), b = random_poly(o, rng, 3, 5), c = random_poly(o, rng, 2, 4);
        std::string tag = "case " + std::to_string(i);
        s.check(a + b == b + a, tag + ": addition commutes");
        s.check((a + b) + c == a + (b + c), tag + ": addition associates");
        s.check(a * b == b * a, tag + ": multiplication commutes");
        s.check((a * b) * c == a * (b * c), tag + ": multiplication associates");
        s.check(a * (b + c) == a * b + a * c, tag + ": distributivity");
        s.check(a - a == zero && a + zero == a && a * one == a, tag + ": identities");
        s.check((a * b).is_zero() == (a.is_zero() || b.is_zero()), tag + ": no zero divisors");
        if (!a.is_zero() && !b.is_zero())
            s.check((a * b).degree() == a.degree() + b.degree(), tag + ": degree is additive");
        s.check(a.pow(3) == a * a * a, tag + ": powers");
    }
    return s.r;
}

PropertyResult bsgs_brute_force_suite(uint64_t seed, size_t cases)
{
    Suite s("bsgs-brute-force");
    std::mt19937_64 rng(seed);
    for (size_t i = 0; i < cases; ++i) {
        int n = 4 + int(rng() % 4);
        PermTraits::n = n;
        std::vector<Perm> gens;
        int ng = 1 + int(rng() % 2);
        for (int j = 0; j < ng; ++j) {
            Perm p = Perm::identity(n);
            // random permutation with some fixed points, to vary the group sizes
            int moved = 2 + int(rng() % (n - 1));
            std::vector<uint16_t> pts(n);
            std::iota(pts.begin(), pts.end(), 0);
            std::shuffle(pts.begin(), pts.end(), rng);
            std::vector<uint16_t> sub(pts.begin(), pts.begin() + moved), img = sub;
            std::shuffle(img.begin(), img.end(), rng);
            for (int k = 0; k < moved; ++k)
                p.img[sub[k]] = img[k];
            gens.push_back(p);
        }
        Bsgs<PermTraits> B(n, gens, {}, seed + i);
        auto all = enumerate_group<PermTraits>(gens);
        std::string tag = "case " + std::to_string(i) + " degree " + std::to_string(n);
        s.check(B.order() == all.size(), tag + ": order");
        for (auto& g : all)
            if (!B.contains(g)) {
                s.check(false, tag + ": element not contained");
                break;
            }
        // random permutations: contained iff enumerated
        for (int t = 0; t < 10; ++t) {
            Perm q = Perm::identity(n);
            std::shuffle(q.img.begin(), q.img.end(), rng);
            bool listed = std::find(all.begin(), all.end(), q) != all.end();
            s.check(B.contains(q) == listed, tag + ": membership");
        }
    }
    PermTraits::n = 15;
    return s.r;
}

PropertyResult normal_form_idempotence_suite(uint64_t seed, size_t cases)
{
    Suite s("normal-form-idempotence");
    std::mt19937_64 rng(seed);
    auto o = small_order(4);
    std::vector<std::vector<QPoly>> bases;
    for (int b = 0; b < 3; ++b)
        bases.push_back(buchberger(control_ideal(o, rng)));
    for (size_t i = 0; i < cases; ++i) {
        auto& G = bases[i % bases.size()];
        QPoly f = random_poly(o, rng, 5, 6);
        QPoly r = normal_form(f, G);
        s.check(normal_form(r, G) == r, "case " + std::to_string(i) + ": NF is idempotent");
        // the remainder has no term divisible by a leading monomial
        bool reduced = true;
        for (auto& t : r.terms())
            for (auto& g : G)
                reduced = reduced && !o->ring().divides(g.lm(), t.m);
        s.check(reduced, "case " + std::to_string(i) + ": remainder is reduced");
        s.check(normal_form(f - r, G).is_zero(), "case " + std::to_string(i) + ": f - NF(f) lies in the ideal");
    }
    return s.r;
}

PropertyResult order_invariance_suite(uint64_t seed, size_t cases)
{
    Suite s("groebner-order-invariance");
    std::mt19937_64 rng(seed);
    auto o1 = small_order(4), o2 = small_order(4, {3, 1, 0, 2});
    auto lex = make_order(MonomialOrder::lex(o1->ring_ptr()));
    uint32_t p = default_primes(1)[0];
    for (size_t i = 0; i < cases; ++i) {
        auto g = control_ideal(o1, rng);
        std::string tag = "case " + std::to_string(i);
        auto h1 = hilbert_graded(g, o1, p, 6);
        std::vector<QPoly> g2;
        for (auto& f : g)
            g2.push_back(reorder(f, o2));
        auto h2 = hilbert_graded(g2, o2, p, 6);
        s.check(h1 == h2, tag + ": two graded orders");

        std::vector<QPoly> gl;
        for (auto& f : g)
            gl.push_back(reorder(f, lex));
        auto L = buchberger(gl);
        std::vector<Mono> lms;
        for (auto& f : L)
            lms.push_back(f.lm());
        s.check(hilbert_from_leading(lex->ring(), lms, 6) == h1, tag + ": lex basis");

        auto base = buchberger(g);
        for (int t = 0; t < 3; ++t) {
            auto sh = g;
            std::shuffle(sh.begin(), sh.end(), rng);
            for (auto& f : sh)
                f = mpq_class(long(rng() % 5) + 1) * f;
            s.check(buchberger(sh) == base, tag + ": generator order");
        }
    }
    return s.r;
}

PropertyResult multi_prime_suite(uint64_t seed, const std::vector<uint32_t>& primes, size_t cases)
{
    Suite s("multi-prime-agreement");
    std::mt19937_64 rng(seed);
    auto o = small_order(4);
    const int top = 6;
    for (size_t i = 0; i < cases; ++i) {
        auto g = control_ideal(o, rng);
        std::string tag = "case " + std::to_string(i);
        auto h0 = hilbert_graded(g, o, primes.at(0), top);
        for (size_t j = 1; j < primes.size(); ++j)
            s.check(hilbert_graded(g, o, primes[j], top) == h0, tag + ": prime " + std::to_string(primes[j]));
        // exact answer from a basis over Q
        auto G = buchberger(g);
        std::vector<Mono> lms;
        for (auto& f : G)
            lms.push_back(f.lm());
        s.check(hilbert_from_leading(o->ring(), lms, top) == h0, tag + ": agrees with the rational basis");
        for (int k = 0; k <= top; ++k) {
            auto m = macaulay_rank(g, k, primes.at(0), o);
            long total = long(o->ring().monomials_of_degree(k).size());
            s.check(long(m.cols) == total && long(m.rank) + h0[k] == total,
                    tag + ": dim R_k = dim I_k + dim (R/I)_k at k=" + std::to_string(k));
        }
    }
    return s.r;
}

std::vector<PropertyResult> all_property_suites(uint64_t seed, const std::vector<uint32_t>& primes)
{
    return {ring_axioms_suite(seed),
            bsgs_brute_force_suite(seed + 1),
            normal_form_idempotence_suite(seed + 2),
            order_invariance_suite(seed + 3),
            multi_prime_suite(seed + 4, primes)};
}

void Verifier::properties(Report& r)
{
    auto& s = *s_;
    Stopwatch w;
    auto res = all_property_suites(s.cfg.seed, s.primes);
    json c = json::object();
    bool ok = s.primes.size() >= 2;
    for (auto& x : res) {
        json e = {{"cases", x.cases}, {"failures", x.failures}};
        if (!x.first_failure.empty())
            e["first_failure"] = x.first_failure;
        c[x.name] = e;
        ok = ok && x.ok();
    }
    Check k = s.record("property-suites", 15, c, ok);
    if (s.primes.size() < 2)
        k.note = "multi-prime agreement needs at least two primes";
    k.seconds = w.seconds();
    r.add(std::move(k));
}

}  // namespace pmf
