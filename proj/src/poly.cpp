#include "pmf/poly.hpp"

namespace pmf {

uint32_t powmod(uint32_t a, uint64_t e, uint32_t p)
{
    uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return uint32_t(r);
}

uint32_t invmod(uint32_t a, uint32_t p)
{
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1)
        throw std::domain_error("invmod: not invertible");
    return uint32_t(t < 0 ? t + p : t);
}

uint32_t reduce_mod(const mpq_class& q, uint32_t p)
{
    mpz_class n = q.get_num() % p, d = q.get_den() % p;
    if (n < 0)
        n += p;
    if (d == 0)
        throw std::domain_error("reduce_mod: denominator divisible by p");
    uint64_t nv = n.get_ui(), dv = d.get_ui();
    return uint32_t(nv * invmod(uint32_t(dv), p) % p);
}

QPoly parse_qpoly(const std::string& s, const OrderPtr& o) { return PolyParser<mpq_class>(o).parse(s); }

CPoly parse_cpoly(const std::string& s, const OrderPtr& o)
{
    PolyParser<CycRat> p(o, [](const std::string& name, CycRat& out) {
        if (name == "w") {
            out = CycRat(0, 1);
            return true;
        }
        return false;
    });
    return p.parse(s);
}

QPoly to_rational(const CPoly& p)
{
    return map_coeffs<mpq_class>(p, [](const CycRat& c) {
        if (!c.is_rational())
            throw std::domain_error("to_rational: coefficient " + c.str() + " is not rational");
        return c.re();
    });
}

CPoly to_cyclotomic(const QPoly& p)
{
    return map_coeffs<CycRat>(p, [](const mpq_class& c) { return CycRat(c, 0); });
}

QPoly primitive_normalize(const QPoly& p)
{
    if (p.is_zero())
        return p;
    mpz_class g = 0, l = 1;
    for (auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    }
    mpq_class s(l, g);
    if (p.lc() < 0)
        s = -s;
    return s * p;
}

}  // namespace pmf
