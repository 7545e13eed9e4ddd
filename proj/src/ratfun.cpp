#include "pmf/ratfun.hpp"

#include <map>

namespace pmf {

namespace {

OrderPtr& ctx()
{
    static OrderPtr o;
    return o;
}

int first_var(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() && b.is_zero())
        return -1;
    const Ring& r = a.is_zero() ? b.ring() : a.ring();
    for (int v = 0; v < r.nvars(); ++v)
        if (a.involves(v) || b.involves(v))
            return v;
    return -1;
}

QPoly monomial_gcd(const QPoly& mono, const QPoly& f)
{
    const Ring& r = mono.ring();
    Mono g = mono.lm();
    for (auto& t : f.terms())
        for (int i = 0; i < r.nvars(); ++i)
            g.e[i] = std::min(g.e[i], t.m.e[i]);
    std::vector<int> ex(r.nvars());
    for (int i = 0; i < r.nvars(); ++i)
        ex[i] = g.e[i];
    return QPoly::monomial(mono.order(), r.make(ex));
}

QPoly make_monic(const QPoly& p)
{
    if (p.is_zero())
        return p;
    return p.monic();
}

QPoly primitive_part_in(const QPoly& a, int v)
{
    if (a.is_zero())
        return a;
    return mpoly_div_exact(a, mpoly_content_in(a, v));
}

}  // namespace

QPoly mpoly_coeff_in(const QPoly& a, int v, int k)
{
    std::vector<Term<mpq_class>> t;
    int w = a.ring().weight(v);
    for (auto& x : a.terms())
        if (x.m.e[v] == k) {
            Mono m = x.m;
            m.e[v] = 0;
            m.deg = uint16_t(m.deg - k * w);
            t.push_back({m, x.c});
        }
    return QPoly::from_terms(a.order(), std::move(t));
}

QPoly mpoly_content_in(const QPoly& a, int v)
{
    int d = a.degree_in(v);
    QPoly g(a.order());
    for (int k = 0; k <= d; ++k) {
        QPoly c = mpoly_coeff_in(a, v, k);
        if (c.is_zero())
            continue;
        g = g.is_zero() ? make_monic(c) : mpoly_gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

bool mpoly_divides(const QPoly& b, const QPoly& a, QPoly* quotient)
{
    if (b.is_zero())
        throw std::domain_error("mpoly_divides: division by zero");
    const Ring& r = b.ring();
    QPoly rem = a, q(b.order());
    while (!rem.is_zero()) {
        if (!r.divides(b.lm(), rem.lm()))
            return false;
        Mono m = r.div(rem.lm(), b.lm());
        mpq_class c = rem.lc() / b.lc();
        q += QPoly::monomial(b.order(), m, c);
        rem -= b.mul_term(m, c);
    }
    if (quotient)
        *quotient = q;
    return true;
}

QPoly mpoly_div_exact(const QPoly& a, const QPoly& b)
{
    QPoly q;
    if (!mpoly_divides(b, a, &q))
        throw std::domain_error("mpoly_div_exact: inexact division");
    return q;
}

QPoly mpoly_prem(const QPoly& a, const QPoly& b, int v)
{
    int db = b.degree_in(v);
    QPoly lb = mpoly_coeff_in(b, v, db);
    const Ring& r = b.ring();
    QPoly rem = a;
    for (int dr = rem.degree_in(v); !rem.is_zero() && dr >= db; dr = rem.degree_in(v)) {
        QPoly lr = mpoly_coeff_in(rem, v, dr);
        QPoly shift = QPoly::monomial(b.order(), r.var(v, dr - db));
        rem = lb * rem - lr * shift * b;
    }
    return rem;
}

QPoly mpoly_gcd(const QPoly& a, const QPoly& b)
{
    if (a.is_zero())
        return make_monic(b);
    if (b.is_zero())
        return make_monic(a);
    if (a.is_constant() || b.is_constant())
        return QPoly::constant(a.order(), 1);
    if (a.is_monomial())
        return monomial_gcd(a, b);
    if (b.is_monomial())
        return monomial_gcd(b, a);
    int v = first_var(a, b);
    bool ia = a.involves(v), ib = b.involves(v);
    if (!ia)
        return mpoly_gcd(a, mpoly_content_in(b, v));
    if (!ib)
        return mpoly_gcd(mpoly_content_in(a, v), b);
    QPoly ca = mpoly_content_in(a, v), cb = mpoly_content_in(b, v);
    QPoly gc = mpoly_gcd(ca, cb);
    QPoly pa = mpoly_div_exact(a, ca), pb = mpoly_div_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v))
        std::swap(pa, pb);
    while (!pb.is_zero() && pb.involves(v)) {
        QPoly r = mpoly_prem(pa, pb, v);
        pa = pb;
        pb = r.is_zero() ? r : primitive_part_in(r, v);
    }
    // pb is zero (pa is the primitive gcd) or free of v (coprime in v)
    QPoly g = pb.is_zero() ? primitive_part_in(pa, v) : QPoly::constant(a.order(), 1);
    return make_monic(g * gc);
}

void RatFun::set_context(OrderPtr params) { ctx() = std::move(params); }

const OrderPtr& RatFun::context()
{
    if (!ctx())
        throw std::logic_error("RatFun: parameter ring not installed");
    return ctx();
}

RatFun::RatFun(long c) : RatFun(mpq_class(c)) {}

RatFun::RatFun(const mpq_class& c)
    : num_(QPoly::constant(context(), c)), den_(QPoly::constant(context(), 1))
{
}

RatFun::RatFun(QPoly num) : num_(std::move(num)), den_(QPoly::constant(context(), 1))
{
    if (!num_.order())
        num_ = QPoly(context());
}

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("RatFun: zero denominator");
    if (!num_.order())
        num_ = QPoly(context());
    reduce();
}

RatFun RatFun::param(int i) { return RatFun(QPoly::variable(context(), i)); }

void RatFun::reduce()
{
    if (num_.is_zero()) {
        den_ = QPoly::constant(den_.order(), 1);
        return;
    }
    QPoly g = mpoly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = mpoly_div_exact(num_, g);
        den_ = mpoly_div_exact(den_, g);
    }
    mpq_class l = den_.lc();
    if (l != 1) {
        mpq_class inv = 1 / l;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFun RatFun::operator-() const
{
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_)
        return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b)
{
    if (a.is_zero() || b.is_zero())
        return RatFun(0);
    if (a.num_.is_constant() && a.den_.is_constant()) {
        RatFun r = b;
        r.num_ = a.num_.lc() * r.num_;
        return r;
    }
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b)
{
    if (b.is_zero())
        throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::str() const
{
    if (den_.is_constant())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

KPoly to_kpoly(const QPoly& p, const std::vector<int>& param_vars, const OrderPtr& target)
{
    const Ring& src = p.ring();
    const Ring& dst = target->ring();
    const OrderPtr& pctx = RatFun::context();
    std::vector<int> is_param(src.nvars(), -1);
    for (size_t i = 0; i < param_vars.size(); ++i)
        is_param[param_vars[i]] = int(i);
    std::vector<int> dst_index(src.nvars(), -1);
    int k = 0;
    for (int v = 0; v < src.nvars(); ++v)
        if (is_param[v] < 0)
            dst_index[v] = k++;
    if (k != dst.nvars())
        throw std::invalid_argument("to_kpoly: target ring has the wrong number of variables");
    std::map<std::vector<int>, QPoly> parts;
    for (auto& t : p.terms()) {
        std::vector<int> ev(dst.nvars(), 0), pv(pctx->ring().nvars(), 0);
        for (int v = 0; v < src.nvars(); ++v) {
            if (is_param[v] >= 0)
                pv[is_param[v]] = t.m.e[v];
            else
                ev[dst_index[v]] = t.m.e[v];
        }
        auto it = parts.find(ev);
        QPoly term = QPoly::monomial(pctx, pctx->ring().make(pv), t.c);
        if (it == parts.end())
            parts.emplace(ev, term);
        else
            it->second += term;
    }
    std::vector<Term<RatFun>> out;
    for (auto& [ev, c] : parts)
        if (!c.is_zero())
            out.push_back({dst.make(ev), RatFun(c)});
    return KPoly::from_terms(target, std::move(out));
}

}  // namespace pmf
