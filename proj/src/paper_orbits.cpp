#include "pmf/linalg.hpp"
#include "pmf/paper.hpp"

#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pmf {

namespace {

using IVec = std::array<int, 15>;

IVec exps_of(const Mono& m)
{
    IVec v{};
    for (int i = 0; i < 15; ++i)
        v[i] = m.e[i];
    return v;
}

IVec laurent(const std::vector<int>& num, const std::vector<int>& den, const std::array<int, 15>* sigma = nullptr)
{
    IVec v{};
    for (int i : num)
        v[sigma ? (*sigma)[i - 1] : i - 1] += 1;
    for (int i : den)
        v[sigma ? (*sigma)[i - 1] : i - 1] -= 1;
    return v;
}

struct Lattice {
    std::vector<std::vector<mpq_class>> rows;
    size_t rank = 0;

    bool contains(const IVec& w) const
    {
        auto m = rows;
        m.push_back(std::vector<mpq_class>(w.begin(), w.end()));
        return pmf::rank(m) == rank;
    }
};

std::pair<Mono, Mono> binomial_terms(const QPoly& p)
{
    if (p.size() != 2)
        throw DataError("binomial relation with " + std::to_string(p.size()) + " terms: " + p.str());
    return {p.terms()[0].m, p.terms()[1].m};
}

int mod6(long x) { return int(((x % 6) + 6) % 6); }

}  // namespace

ActionBuild make_action(const BGen& g, const PaperData& d)
{
    ActionBuild out;
    MonomialAction a;
    a.sigma = g.sigma;
    a.k = g.k;

    Lattice L;
    std::vector<std::pair<Mono, Mono>> binoms;
    for (auto& s : d.binomial_cubics) {
        auto [m1, m2] = binomial_terms(parse_x(s));
        binoms.push_back({m1, m2});
        IVec v1 = exps_of(m1), v2 = exps_of(m2);
        std::vector<mpq_class> row(15);
        for (int i = 0; i < 15; ++i)
            row[i] = v1[i] - v2[i];
        L.rows.push_back(row);
    }
    L.rank = pmf::rank(L.rows);

    // binomial relations must map to binomial relations with equal scalars
    std::set<std::pair<IVec, IVec>> known;
    for (auto& [m1, m2] : binoms) {
        known.insert({exps_of(m1), exps_of(m2)});
        known.insert({exps_of(m2), exps_of(m1)});
    }
    for (size_t r = 0; r < binoms.size(); ++r) {
        IVec v1 = exps_of(binoms[r].first), v2 = exps_of(binoms[r].second), w1{}, w2{};
        long s1 = 0, s2 = 0;
        for (int i = 0; i < 15; ++i) {
            w1[g.sigma[i]] = v1[i];
            w2[g.sigma[i]] = v2[i];
            s1 += long(g.k[i]) * v1[i];
            s2 += long(g.k[i]) * v2[i];
        }
        if (mod6(s1) != mod6(s2) || !known.count({w1, w2}))
            out.broken_binomials.push_back(int(r));
    }

    std::vector<IVec> cv;
    for (auto& c : d.cdefs)
        cv.push_back(laurent(c.num, c.den));
    std::vector<char> hit(cv.size(), 0);
    for (size_t j = 0; j < d.cdefs.size(); ++j) {
        IVec w = laurent(d.cdefs[j].num, d.cdefs[j].den, &g.sigma);
        int found = -1, count = 0;
        for (size_t t = 0; t < cv.size(); ++t) {
            IVec diff;
            for (int i = 0; i < 15; ++i)
                diff[i] = w[i] - cv[t][i];
            if (L.contains(diff)) {
                found = int(t);
                ++count;
            }
        }
        if (count != 1) {
            out.error = "C" + std::to_string(j + 1) + " has " + std::to_string(count) + " candidate images";
            return out;
        }
        if (hit[found]) {
            out.error = "induced map on the C's is not a permutation";
            return out;
        }
        hit[found] = 1;
        a.ysigma[j] = found;
        long u = 0;
        for (int i : d.cdefs[j].num)
            u += g.k[i - 1];
        for (int i : d.cdefs[j].den)
            u -= g.k[i - 1];
        a.yk[j] = mod6(u);
    }
    out.action = a;
    return out;
}

MonomialAction inverse(const MonomialAction& a)
{
    MonomialAction b;
    for (int i = 0; i < 15; ++i) {
        b.sigma[a.sigma[i]] = i;
        b.k[a.sigma[i]] = mod6(-a.k[i]);
    }
    for (int j = 0; j < 10; ++j) {
        b.ysigma[a.ysigma[j]] = j;
        b.yk[a.ysigma[j]] = mod6(-a.yk[j]);
    }
    return b;
}

std::vector<int> permutation_of(const MonomialAction& a) { return std::vector<int>(a.sigma.begin(), a.sigma.end()); }

CPoly act(const MonomialAction& a, const CPoly& p)
{
    const Ring& r = *rings().xy;
    static const std::array<CycRat, 6> roots = {root6(0), root6(1), root6(2), root6(3), root6(4), root6(5)};
    std::vector<Term<CycRat>> t;
    t.reserve(p.size());
    for (auto& x : p.terms()) {
        std::vector<int> ex(25, 0);
        long s = 0;
        for (int i = 0; i < 15; ++i) {
            ex[a.sigma[i]] = x.m.e[i];
            s += long(a.k[i]) * x.m.e[i];
        }
        for (int j = 0; j < 10; ++j) {
            ex[15 + a.ysigma[j]] = x.m.e[15 + j];
            s += long(a.yk[j]) * x.m.e[15 + j];
        }
        t.push_back({r.make(ex), roots[mod6(s)] * x.c});
    }
    return CPoly::from_terms(p.order(), std::move(t));
}

CPoly normalize_scalar(const CPoly& p)
{
    if (p.is_zero())
        return p;
    return p.monic();
}

Orbit generate_orbit(const CPoly& seed, const std::vector<MonomialAction>& gens, size_t cap)
{
    Orbit o;
    std::unordered_set<std::string> seen;
    CPoly s = normalize_scalar(seed);
    seen.insert(s.str());
    o.members.push_back(s);
    for (size_t at = 0; at < o.members.size(); ++at) {
        for (auto& g : gens) {
            CPoly img = normalize_scalar(act(g, o.members[at]));
            if (seen.insert(img.str()).second) {
                o.members.push_back(img);
                if (o.members.size() >= cap) {
                    o.capped = true;
                    break;
                }
            }
        }
        if (o.capped)
            break;
    }
    o.all_rational = true;
    for (auto& m : o.members) {
        bool rat = true;
        for (auto& t : m.terms())
            rat = rat && t.c.is_rational();
        if (!rat) {
            o.all_rational = false;
            break;
        }
    }
    if (o.all_rational)
        for (auto& m : o.members)
            o.rational.push_back(to_rational(m));
    return o;
}

bool orbit_closed(const Orbit& o, const std::vector<MonomialAction>& gens)
{
    std::unordered_set<std::string> keys;
    for (auto& m : o.members)
        keys.insert(m.str());
    for (auto& m : o.members)
        for (auto& g : gens)
            if (!keys.count(normalize_scalar(act(g, m)).str()))
                return false;
    return true;
}

const Orbit& OrbitTable::get(int weight, const std::string& type) const
{
    for (size_t i = 0; i < seeds.size(); ++i)
        if (seeds[i].weight == weight && seeds[i].type == type)
            return orbits[i];
    throw std::out_of_range("no seed of weight " + std::to_string(weight) + " type " + type);
}

OrbitTable generate_all_orbits(const PaperData& d, const std::vector<MonomialAction>& gens)
{
    OrbitTable t;
    t.seeds = d.seeds;
    for (auto& s : d.seeds)
        t.orbits.push_back(generate_orbit(parse_xy(s.poly), gens));
    return t;
}

namespace {

int ydeg(const Mono& m)
{
    int d = 0;
    for (int j = 15; j < 25; ++j)
        d += m.e[j];
    return d;
}

const std::vector<QPoly>& need_rational(const Orbit& o, const char* what)
{
    if (!o.all_rational)
        throw std::runtime_error(std::string("orbit ") + what + " has irrational members");
    return o.rational;
}

}  // namespace

Ideals build_ideals(const OrbitTable& t)
{
    Ideals id;
    const Ring& r = *rings().xy;
    for (auto [w, ty] : {std::pair{3, "I"}, {3, "II"}, {4, "I"}})
        for (auto& p : need_rational(t.get(w, ty), ty))
            id.I.push_back(xy_to_x(primitive_normalize(p)));
    for (auto& o : t.orbits)
        for (auto& p : o.rational)
            id.J.push_back(primitive_normalize(p));

    // Y_a Y_b = -(X part)/c from the weight-4 type III relations
    std::map<std::pair<int, int>, QPoly> yy;
    for (auto& p : need_rational(t.get(4, "III"), "weight 4 type III")) {
        std::optional<Term<mpq_class>> lead;
        QPoly rest(p.order());
        for (auto& x : p.terms()) {
            if (ydeg(x.m) == 2) {
                if (lead)
                    throw std::runtime_error("weight-4 type III relation with two YY terms: " + p.str());
                lead = x;
            } else {
                if (ydeg(x.m))
                    throw std::runtime_error("weight-4 type III relation with a mixed term: " + p.str());
                rest += QPoly::monomial(p.order(), x.m, x.c);
            }
        }
        if (!lead)
            throw std::runtime_error("weight-4 type III relation without YY term: " + p.str());
        std::vector<int> ys;
        for (int j = 15; j < 25; ++j)
            for (int e = 0; e < lead->m.e[j]; ++e)
                ys.push_back(j);
        yy[{ys[0], ys[1]}] = mpq_class(-1) / lead->c * rest;
    }
    for (auto& p : need_rational(t.get(5, "III"), "weight 5 type III")) {
        QPoly s(p.order());
        for (auto& x : p.terms()) {
            Mono m = x.m;
            std::vector<int> ys;
            for (int j = 15; j < 25; ++j)
                for (int e = 0; e < m.e[j]; ++e)
                    ys.push_back(j);
            if (ys.empty()) {
                s += QPoly::monomial(p.order(), m, x.c);
                continue;
            }
            if (ys.size() != 2)
                throw std::runtime_error("weight-5 type III term is not a YY product: " + p.str());
            auto it = yy.find({ys[0], ys[1]});
            if (it == yy.end())
                throw std::runtime_error("no weight-4 relation for " + r.name(ys[0]) + "*" + r.name(ys[1]));
            Mono xpart = m;
            xpart.e[ys[0]]--;
            xpart.e[ys[1]]--;
            xpart.deg = uint16_t(xpart.deg - 4);
            s += it->second.mul_term(xpart, x.c);
        }
        QPoly sx = xy_to_x(primitive_normalize(s));
        id.substituted.push_back(sx);
    }
    id.Ihat = id.I;
    for (auto& p : id.substituted)
        if (!p.is_zero())
            id.Ihat.push_back(p);
    return id;
}

QPoly clear_y(const QPoly& rel, const PaperData& d)
{
    const Ring& r = *rings().xy;
    std::array<int, 15> lcm{};
    auto den_of = [&](const Mono& m) {
        std::array<int, 15> e{};
        for (int j = 0; j < 10; ++j)
            for (int i : d.cdefs[j].den)
                e[i - 1] += m.e[15 + j];
        return e;
    };
    for (auto& x : rel.terms()) {
        auto e = den_of(x.m);
        for (int i = 0; i < 15; ++i)
            lcm[i] = std::max(lcm[i], e[i] - int(x.m.e[i]) > 0 ? e[i] - int(x.m.e[i]) : 0);
    }
    std::vector<Term<mpq_class>> out;
    for (auto& x : rel.terms()) {
        auto den = den_of(x.m);
        std::vector<int> ex(25, 0);
        for (int i = 0; i < 15; ++i)
            ex[i] = x.m.e[i] + lcm[i];
        for (int j = 0; j < 10; ++j)
            for (int i : d.cdefs[j].num)
                ex[i - 1] += x.m.e[15 + j];
        for (int i = 0; i < 15; ++i) {
            ex[i] -= den[i];
            if (ex[i] < 0)
                throw std::logic_error("clear_y: denominator not cleared");
        }
        out.push_back({r.make(ex), x.c});
    }
    return xy_to_x(primitive_normalize(QPoly::from_terms(rel.order(), std::move(out))));
}

}  // namespace pmf
