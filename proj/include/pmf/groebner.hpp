#pragma once

#include "pmf/poly.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

namespace pmf {

inline uint64_t divmask(const Mono& m)
{
    uint64_t b = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i] >= 1)
            b |= 1ull << i;
        if (m.e[i] >= 2)
            b |= 1ull << (32 + i);
    }
    return b;
}

struct CritPair {
    int i = -1, j = -1;  // j == -1 marks an input generator
    Mono lcm;
};

// Gebauer-Moeller update: installs basis element h (index into lms),
// pruning pairs by the product and chain criteria. `active` holds the
// indices of the current reduced leading-term set. Pairs whose lcm exceeds
// max_degree are dropped when max_degree >= 0.
class PairSet {
public:
    explicit PairSet(const Ring& r) : r_(r) {}

    void insert(int h, const Mono& lm, int max_degree = -1);
    const std::vector<int>& active() const { return active_; }
    std::vector<CritPair>& pairs() { return pairs_; }
    const std::vector<Mono>& lms() const { return lms_; }
    size_t pruned() const { return pruned_; }

    // remove and return pairs of minimal lcm degree
    std::vector<CritPair> pop_min_degree();
    // remove and return the single pair with smallest lcm in the order
    std::optional<CritPair> pop_min(const MonomialOrder& o);
    bool empty() const { return pairs_.empty(); }
    int min_degree() const;

private:
    const Ring& r_;
    std::vector<Mono> lms_;
    std::vector<uint64_t> masks_;
    std::vector<int> active_;
    std::vector<CritPair> pairs_;
    size_t pruned_ = 0;

    bool mdiv(const Mono& a, uint64_t ma, const Mono& b) const
    {
        return !(ma & ~divmask(b)) && r_.divides(a, b);
    }
};

class ResourceExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GbLimits {
    size_t max_basis = 20000;
    size_t max_terms = 2000000;  // summed over the basis
    double seconds = 600.0;
};

// Remainder of f on division by G (full reduction of every term).
template <class C>
SparsePoly<C> normal_form(const SparsePoly<C>& f, const std::vector<SparsePoly<C>>& G)
{
    if (f.is_zero())
        return f;
    const Ring& r = f.ring();
    std::vector<uint64_t> gm(G.size());
    for (size_t i = 0; i < G.size(); ++i)
        gm[i] = divmask(G[i].lm());
    SparsePoly<C> rem = f;
    std::vector<Term<C>> out;
    while (!rem.is_zero()) {
        const Term<C>& lt = rem.lt();
        uint64_t lm = divmask(lt.m);
        int hit = -1;
        for (size_t i = 0; i < G.size(); ++i)
            if (!(gm[i] & ~lm) && r.divides(G[i].lm(), lt.m)) {
                hit = int(i);
                break;
            }
        if (hit < 0) {
            out.push_back(lt);
            rem.raw_terms().erase(rem.raw_terms().begin());
            continue;
        }
        const SparsePoly<C>& g = G[hit];
        C c = lt.c / g.lc();
        Mono m = r.div(lt.m, g.lm());
        rem -= g.mul_term(m, c);
    }
    return SparsePoly<C>::from_terms(f.order(), std::move(out));
}

template <class C>
SparsePoly<C> spoly(const SparsePoly<C>& f, const SparsePoly<C>& g)
{
    const Ring& r = f.ring();
    Mono l = r.lcm(f.lm(), g.lm());
    return f.mul_term(r.div(l, f.lm()), C(1) / f.lc()) - g.mul_term(r.div(l, g.lm()), C(1) / g.lc());
}

// Interreduce a Groebner basis: drop elements whose leading term is
// divisible by another, then fully reduce tails and make monic.
template <class C>
std::vector<SparsePoly<C>> reduce_basis(std::vector<SparsePoly<C>> G)
{
    if (G.empty())
        return G;
    const Ring& r = G[0].ring();
    std::vector<SparsePoly<C>> min;
    for (size_t i = 0; i < G.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < G.size() && !drop; ++j) {
            if (i == j)
                continue;
            if (r.divides(G[j].lm(), G[i].lm()) && (G[j].lm() != G[i].lm() || j < i))
                drop = true;
        }
        if (!drop)
            min.push_back(G[i].monic());
    }
    for (size_t i = 0; i < min.size(); ++i) {
        std::vector<SparsePoly<C>> others;
        for (size_t j = 0; j < min.size(); ++j)
            if (j != i)
                others.push_back(min[j]);
        SparsePoly<C> tail = min[i];
        Term<C> lead = tail.lt();
        tail.raw_terms().erase(tail.raw_terms().begin());
        tail = normal_form(tail, others);
        tail.raw_terms().insert(tail.raw_terms().begin(), lead);
        min[i] = SparsePoly<C>::from_terms(min[i].order(), tail.raw_terms());
    }
    const MonomialOrder& o = *min[0].order();
    std::sort(min.begin(), min.end(), [&](const SparsePoly<C>& a, const SparsePoly<C>& b) { return o.cmp(a.lm(), b.lm()) < 0; });
    return min;
}

struct GbStats {
    size_t pairs_reduced = 0, zero_reductions = 0, pruned = 0;
};

// Reduced Groebner basis by Buchberger's algorithm with Gebauer-Moeller
// pair pruning. Throws ResourceExceeded when a limit is hit.
template <class C>
std::vector<SparsePoly<C>> buchberger(const std::vector<SparsePoly<C>>& F, GbLimits lim = {}, GbStats* stats = nullptr)
{
    std::vector<SparsePoly<C>> basis;
    for (auto& f : F)
        if (!f.is_zero())
            basis.push_back(f.monic());
    if (basis.empty())
        return basis;
    const MonomialOrder& o = *basis[0].order();
    const Ring& r = o.ring();
    auto t0 = std::chrono::steady_clock::now();
    PairSet ps(r);
    std::vector<SparsePoly<C>> store;
    size_t terms = 0;
    auto install = [&](SparsePoly<C> h) {
        store.push_back(h.monic());
        terms += h.size();
        ps.insert(int(store.size() - 1), store.back().lm());
    };
    // reduce inputs against each other first
    std::sort(basis.begin(), basis.end(), [&](const SparsePoly<C>& a, const SparsePoly<C>& b) { return o.cmp(a.lm(), b.lm()) < 0; });
    for (auto& f : basis) {
        std::vector<SparsePoly<C>> cur;
        for (int a : ps.active())
            cur.push_back(store[a]);
        SparsePoly<C> h = normal_form(f, cur);
        if (!h.is_zero())
            install(h);
    }
    GbStats st;
    while (auto p = ps.pop_min(o)) {
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (el > lim.seconds || store.size() > lim.max_basis || terms > lim.max_terms)
            throw ResourceExceeded("buchberger: resource limit reached");
        std::vector<SparsePoly<C>> cur;
        for (int a : ps.active())
            cur.push_back(store[a]);
        SparsePoly<C> h = normal_form(spoly(store[p->i], store[p->j]), cur);
        ++st.pairs_reduced;
        if (h.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        install(h);
    }
    st.pruned = ps.pruned();
    if (stats)
        *stats = st;
    std::vector<SparsePoly<C>> out;
    for (int a : ps.active())
        out.push_back(store[a]);
    return reduce_basis(out);
}

struct SpairReport {
    size_t pairs = 0, product_criterion = 0, reduced_to_zero = 0, nonzero = 0;
    bool all_zero() const { return nonzero == 0; }
};

// Checks that G is a Groebner basis: every S-pair whose leading monomials
// are not coprime reduces to zero modulo G.
template <class C>
SpairReport check_spairs(const std::vector<SparsePoly<C>>& G)
{
    SpairReport rep;
    if (G.empty())
        return rep;
    const Ring& r = G[0].ring();
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            ++rep.pairs;
            if (r.coprime(G[i].lm(), G[j].lm())) {
                ++rep.product_criterion;
                continue;
            }
            if (normal_form(spoly(G[i], G[j]), G).is_zero())
                ++rep.reduced_to_zero;
            else
                ++rep.nonzero;
        }
    return rep;
}

// I : f via elimination of a tag variable t: (t*I + (1-t)*f) meet R, divided by f.
// `tagged` is an elimination order on the ring R[t] with t first in the
// priority list; `embed` maps R-polynomials to R[t], `restrict_` back.
template <class C>
std::vector<SparsePoly<C>> colon_ideal(const std::vector<SparsePoly<C>>& I, const SparsePoly<C>& f, const OrderPtr& tagged,
                                       int tag, const OrderPtr& base, GbLimits lim = {})
{
    const Ring& rt = tagged->ring();
    const Ring& rb = base->ring();
    auto up = [&](const SparsePoly<C>& p) {
        std::vector<Term<C>> t;
        for (auto& x : p.terms()) {
            std::vector<int> ex(rt.nvars(), 0);
            for (int v = 0, k = 0; v < rt.nvars(); ++v)
                if (v != tag)
                    ex[v] = x.m.e[k++];
            t.push_back({rt.make(ex), x.c});
        }
        return SparsePoly<C>::from_terms(tagged, std::move(t));
    };
    auto down = [&](const SparsePoly<C>& p) {
        std::vector<Term<C>> t;
        for (auto& x : p.terms()) {
            std::vector<int> ex;
            for (int v = 0; v < rt.nvars(); ++v)
                if (v != tag)
                    ex.push_back(x.m.e[v]);
            t.push_back({rb.make(ex), x.c});
        }
        return SparsePoly<C>::from_terms(base, std::move(t));
    };
    SparsePoly<C> t = SparsePoly<C>::variable(tagged, tag);
    SparsePoly<C> one = SparsePoly<C>::constant(tagged, C(1));
    std::vector<SparsePoly<C>> gens;
    for (auto& g : I)
        gens.push_back(t * up(g));
    gens.push_back((one - t) * up(f));
    std::vector<SparsePoly<C>> out;
    SparsePoly<C> fb = f.with_order(base);
    for (auto& g : buchberger(gens, lim))
        if (!g.involves(tag)) {
            SparsePoly<C> q = down(g);
            // exact division by f
            SparsePoly<C> rem = q, quo(base);
            while (!rem.is_zero()) {
                if (!rb.divides(fb.lm(), rem.lm()))
                    throw std::logic_error("colon_ideal: intersection element not divisible by f");
                Mono m = rb.div(rem.lm(), fb.lm());
                C c = rem.lc() / fb.lc();
                quo += SparsePoly<C>::monomial(base, m, c);
                rem -= fb.mul_term(m, c);
            }
            out.push_back(quo);
        }
    return buchberger(out, lim);
}

// I : f^infinity by iterating colons until the ideal stabilizes
template <class C>
std::vector<SparsePoly<C>> saturate(std::vector<SparsePoly<C>> I, const SparsePoly<C>& f, const OrderPtr& tagged, int tag,
                                    const OrderPtr& base, int max_rounds = 32, GbLimits lim = {})
{
    std::vector<SparsePoly<C>> cur = buchberger(I, lim);
    for (int k = 0; k < max_rounds; ++k) {
        std::vector<SparsePoly<C>> next = colon_ideal(cur, f, tagged, tag, base, lim);
        bool same = next.size() == cur.size();
        for (size_t i = 0; same && i < next.size(); ++i)
            same = next[i] == cur[i];
        if (same)
            return cur;
        cur = next;
    }
    throw ResourceExceeded("saturate: did not stabilize");
}

}  // namespace pmf
