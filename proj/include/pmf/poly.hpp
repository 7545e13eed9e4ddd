#pragma once

#include "pmf/eis.hpp"
#include "pmf/mono.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pmf {

using OrderPtr = std::shared_ptr<const MonomialOrder>;

inline OrderPtr make_order(MonomialOrder o) { return std::make_shared<const MonomialOrder>(std::move(o)); }

// Z/p with a process-wide modulus; p must stay below 2^31
struct ModP {
    uint32_t v = 0;
    static inline uint32_t p = 2147483629u;

    ModP() = default;
    ModP(long x)
    {
        long r = x % long(p);
        v = uint32_t(r < 0 ? r + long(p) : r);
    }
    static ModP raw(uint32_t x) { ModP m; m.v = x; return m; }
    static ModP from(const mpq_class& q);

    friend ModP operator+(ModP a, ModP b) { return raw(uint32_t((uint64_t(a.v) + b.v) % p)); }
    friend ModP operator-(ModP a, ModP b) { return raw(uint32_t((uint64_t(a.v) + p - b.v) % p)); }
    friend ModP operator*(ModP a, ModP b) { return raw(uint32_t(uint64_t(a.v) * b.v % p)); }
    ModP operator-() const { return raw(v ? p - v : 0); }
    ModP inverse() const;
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }
    friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
    friend bool operator!=(ModP a, ModP b) { return a.v != b.v; }
};

uint32_t powmod(uint32_t a, uint64_t e, uint32_t p);
uint32_t invmod(uint32_t a, uint32_t p);
// q mod p; throws std::domain_error when p divides the denominator
uint32_t reduce_mod(const mpq_class& q, uint32_t p);

inline ModP ModP::inverse() const
{
    if (!v)
        throw std::domain_error("ModP: inverse of zero");
    return raw(invmod(v, p));
}

inline ModP ModP::from(const mpq_class& q) { return raw(reduce_mod(q, p)); }

inline std::string coeff_str(const mpq_class& c) { return c.get_str(); }
inline std::string coeff_str(const CycRat& c) { return c.str(); }
inline std::string coeff_str(const ModP& c) { return std::to_string(c.v); }

inline bool coeff_is_unit_like(const mpq_class& c) { return c == 1; }

template <class C>
struct Term {
    Mono m;
    C c;
};

// Polynomial with coefficients in C, terms kept strictly decreasing in
// the attached monomial order. The zero polynomial may have a null order.
template <class C>
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(OrderPtr o) : ord_(std::move(o)) {}

    static SparsePoly from_terms(OrderPtr o, std::vector<Term<C>> t)
    {
        SparsePoly p(std::move(o));
        p.t_ = std::move(t);
        p.normalize();
        return p;
    }
    static SparsePoly constant(OrderPtr o, const C& c)
    {
        SparsePoly p(std::move(o));
        if (!(c == C(0)))
            p.t_.push_back({Mono{}, c});
        return p;
    }
    static SparsePoly monomial(OrderPtr o, const Mono& m, const C& c = C(1))
    {
        SparsePoly p(std::move(o));
        if (!(c == C(0)))
            p.t_.push_back({m, c});
        return p;
    }
    static SparsePoly variable(OrderPtr o, int i)
    {
        Mono m = o->ring().var(i);
        return monomial(std::move(o), m);
    }

    const OrderPtr& order() const { return ord_; }
    const Ring& ring() const { return ord_->ring(); }
    const std::vector<Term<C>>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    const Mono& lm() const { return t_.front().m; }
    const C& lc() const { return t_.front().c; }
    const Term<C>& lt() const { return t_.front(); }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m == Mono{}); }
    bool is_monomial() const { return t_.size() == 1; }

    int degree() const
    {
        int d = -1;
        for (auto& x : t_)
            d = std::max(d, int(x.m.deg));
        return d;
    }
    bool is_homogeneous() const
    {
        for (auto& x : t_)
            if (x.m.deg != t_.front().m.deg)
                return false;
        return true;
    }
    // exponent of variable v in the leading monomial / maximal over terms
    int degree_in(int v) const
    {
        int d = -1;
        for (auto& x : t_)
            d = std::max(d, int(x.m.e[v]));
        return d;
    }
    bool involves(int v) const
    {
        for (auto& x : t_)
            if (x.m.e[v])
                return true;
        return false;
    }

    C coeff(const Mono& m) const
    {
        for (auto& x : t_)
            if (x.m == m)
                return x.c;
        return C(0);
    }

    SparsePoly with_order(OrderPtr o) const
    {
        SparsePoly p(std::move(o));
        p.t_ = t_;
        p.normalize();
        return p;
    }

    SparsePoly operator-() const
    {
        SparsePoly p(ord_);
        p.t_.reserve(t_.size());
        for (auto& x : t_)
            p.t_.push_back({x.m, -x.c});
        return p;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return combine(a, b, C(1)); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return combine(a, b, C(-1)); }
    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }

    friend SparsePoly operator*(const C& s, const SparsePoly& a)
    {
        SparsePoly p(a.ord_);
        if (s == C(0))
            return p;
        p.t_.reserve(a.t_.size());
        for (auto& x : a.t_)
            p.t_.push_back({x.m, s * x.c});
        return p;
    }

    SparsePoly mul_term(const Mono& m, const C& c) const
    {
        SparsePoly p(ord_);
        if (c == C(0))
            return p;
        const Ring& r = ring();
        p.t_.reserve(t_.size());
        for (auto& x : t_)
            p.t_.push_back({r.mul(x.m, m), c * x.c});
        return p;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        const OrderPtr& o = a.ord_ ? a.ord_ : b.ord_;
        SparsePoly p(o);
        if (a.is_zero() || b.is_zero())
            return p;
        const Ring& r = o->ring();
        std::unordered_map<Mono, C, MonoHash> acc;
        acc.reserve(a.size() * b.size());
        for (auto& x : a.t_)
            for (auto& y : b.t_) {
                auto [it, fresh] = acc.try_emplace(r.mul(x.m, y.m), x.c * y.c);
                if (!fresh)
                    it->second = it->second + x.c * y.c;
            }
        for (auto& [m, c] : acc)
            if (!(c == C(0)))
                p.t_.push_back({m, c});
        p.sort_terms();
        return p;
    }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    SparsePoly pow(unsigned k) const
    {
        SparsePoly r = constant(ord_, C(1)), base = *this;
        while (k) {
            if (k & 1)
                r = r * base;
            k >>= 1;
            if (k)
                base = base * base;
        }
        return r;
    }

    SparsePoly monic() const
    {
        if (is_zero())
            return *this;
        C inv = C(1) / lc();
        return inv * *this;
    }

    // replace variable v by the polynomial s
    SparsePoly substitute(int v, const SparsePoly& s) const
    {
        SparsePoly out(ord_);
        std::vector<SparsePoly> powers{constant(ord_, C(1))};
        for (auto& x : t_) {
            int k = x.m.e[v];
            while (int(powers.size()) <= k)
                powers.push_back(powers.back() * s);
            Mono rest = x.m;
            rest.e[v] = 0;
            rest.deg = uint16_t(x.m.deg - k * ring().weight(v));
            out += powers[k].mul_term(rest, x.c);
        }
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b)
    {
        if (a.t_.size() != b.t_.size())
            return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].m != b.t_[i].m || !(a.t_[i].c == b.t_[i].c))
                return false;
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    std::string str() const
    {
        if (t_.empty())
            return "0";
        std::ostringstream os;
        for (size_t i = 0; i < t_.size(); ++i) {
            std::string c = coeff_str(t_[i].c);
            bool paren = c.find_first_of("+-", 1) != std::string::npos;
            if (i) {
                if (!paren && c[0] == '-') {
                    os << " - ";
                    c = c.substr(1);
                } else {
                    os << " + ";
                }
            }
            if (t_[i].m == Mono{})
                os << (paren ? "(" + c + ")" : c);
            else if (c == "1")
                os << ring().str(t_[i].m);
            else if (c == "-1")
                os << "-" << ring().str(t_[i].m);
            else
                os << (paren ? "(" + c + ")" : c) << "*" << ring().str(t_[i].m);
        }
        return os.str();
    }

    // terms in the natural (combine-and-sort) form; used after raw edits
    void normalize()
    {
        sort_terms();
        std::vector<Term<C>> out;
        out.reserve(t_.size());
        for (auto& x : t_) {
            if (!out.empty() && out.back().m == x.m)
                out.back().c = out.back().c + x.c;
            else
                out.push_back(x);
            if (out.back().c == C(0))
                out.pop_back();
        }
        t_ = std::move(out);
    }

    std::vector<Term<C>>& raw_terms() { return t_; }

private:
    OrderPtr ord_;
    std::vector<Term<C>> t_;

    void sort_terms()
    {
        if (!ord_)
            return;
        const MonomialOrder& o = *ord_;
        std::sort(t_.begin(), t_.end(), [&](const Term<C>& x, const Term<C>& y) { return o.cmp(x.m, y.m) > 0; });
    }

    static SparsePoly combine(const SparsePoly& a, const SparsePoly& b, const C& sb)
    {
        const OrderPtr& o = a.ord_ ? a.ord_ : b.ord_;
        SparsePoly p(o);
        if (b.is_zero()) {
            p.t_ = a.t_;
            return p;
        }
        if (a.is_zero())
            return sb * b;
        const MonomialOrder& ord = *o;
        p.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i == a.t_.size())
                c = -1;
            else if (j == b.t_.size())
                c = 1;
            else
                c = ord.cmp(a.t_[i].m, b.t_[j].m);
            if (c > 0)
                p.t_.push_back(a.t_[i++]);
            else if (c < 0) {
                p.t_.push_back({b.t_[j].m, sb * b.t_[j].c});
                ++j;
            } else {
                C s = a.t_[i].c + sb * b.t_[j].c;
                if (!(s == C(0)))
                    p.t_.push_back({a.t_[i].m, s});
                ++i, ++j;
            }
        }
        return p;
    }
};

using QPoly = SparsePoly<mpq_class>;
using CPoly = SparsePoly<CycRat>;

// Coefficient conversions
template <class D, class S, class F>
SparsePoly<D> map_coeffs(const SparsePoly<S>& p, F f, OrderPtr o = nullptr)
{
    std::vector<Term<D>> t;
    t.reserve(p.size());
    for (auto& x : p.terms())
        t.push_back({x.m, f(x.c)});
    return SparsePoly<D>::from_terms(o ? o : p.order(), std::move(t));
}

// Recursive-descent parser for sums of products of powers. Numbers are
// integers or fractions a/b written inline; `symbol` may resolve
// additional names such as w to coefficients.
template <class C>
class PolyParser {
public:
    using Symbol = std::function<bool(const std::string&, C&)>;

    PolyParser(OrderPtr o, Symbol sym = nullptr) : o_(std::move(o)), sym_(std::move(sym)) {}

    SparsePoly<C> parse(const std::string& s)
    {
        s_ = s;
        i_ = 0;
        SparsePoly<C> r = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected character");
        return r;
    }

private:
    OrderPtr o_;
    Symbol sym_;
    std::string s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error (" + what + ") at offset " + std::to_string(i_) + " in: " + s_);
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    SparsePoly<C> expr()
    {
        SparsePoly<C> r(o_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        SparsePoly<C> t = term();
        r = neg ? -t : t;
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }

    SparsePoly<C> term()
    {
        SparsePoly<C> r = power();
        for (;;) {
            skip();
            if (eat('*'))
                r *= power();
            else if (i_ < s_.size() && (s_[i_] == '(' || std::isalpha(static_cast<unsigned char>(s_[i_]))))
                r *= power();  // implicit product
            else
                break;
        }
        return r;
    }

    SparsePoly<C> power()
    {
        SparsePoly<C> b = atom();
        if (eat('^')) {
            skip();
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (st == i_)
                fail("exponent");
            b = b.pow(unsigned(std::stoul(s_.substr(st, i_ - st))));
        }
        return b;
    }

    SparsePoly<C> atom()
    {
        skip();
        if (i_ >= s_.size())
            fail("end of input");
        if (eat('(')) {
            SparsePoly<C> r = expr();
            if (!eat(')'))
                fail("missing )");
            return r;
        }
        if (eat('-'))
            return -atom();
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            mpq_class q(mpz_class(s_.substr(st, i_ - st)));
            if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
                ++i_;
                size_t d0 = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                    ++i_;
                q /= mpq_class(mpz_class(s_.substr(d0, i_ - d0)));
            }
            return SparsePoly<C>::constant(o_, from_q(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t st = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            std::string name = s_.substr(st, i_ - st);
            int v = o_->ring().index(name);
            if (v >= 0)
                return SparsePoly<C>::variable(o_, v);
            C val;
            if (sym_ && sym_(name, val))
                return SparsePoly<C>::constant(o_, val);
            fail("unknown symbol " + name);
        }
        fail("unexpected character");
    }

    static C from_q(const mpq_class& q);
};

template <>
inline mpq_class PolyParser<mpq_class>::from_q(const mpq_class& q) { return q; }
template <>
inline CycRat PolyParser<CycRat>::from_q(const mpq_class& q) { return CycRat(q, 0); }
template <>
inline ModP PolyParser<ModP>::from_q(const mpq_class& q) { return ModP::from(q); }

QPoly parse_qpoly(const std::string& s, const OrderPtr& o);
// accepts the symbol w for a primitive cube root of unity
CPoly parse_cpoly(const std::string& s, const OrderPtr& o);

// Q(w)-polynomial to Q-polynomial; throws if some coefficient is irrational
QPoly to_rational(const CPoly& p);
CPoly to_cyclotomic(const QPoly& p);

// common convention for relations: primitive integer coefficients with a
// positive leading coefficient
QPoly primitive_normalize(const QPoly& p);

}  // namespace pmf
