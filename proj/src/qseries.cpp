#include "pmf/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pmf {

mpq_class QExp::coeff(long e24) const
{
    auto it = c_.find(e24);
    return it == c_.end() ? mpq_class(0) : it->second;
}

void QExp::set(long e24, const mpq_class& v)
{
    if (e24 >= prec_)
        return;
    if (v == 0)
        c_.erase(e24);
    else
        c_[e24] = v;
}

void QExp::add(long e24, const mpq_class& v)
{
    if (e24 >= prec_ || v == 0)
        return;
    auto& x = c_[e24];
    x += v;
    if (x == 0)
        c_.erase(e24);
}

std::optional<long> QExp::valuation() const
{
    if (c_.empty())
        return std::nullopt;
    return c_.begin()->first;
}

QExp QExp::truncated(long p) const
{
    QExp r(std::min(p, prec_));
    for (auto& [e, v] : c_)
        r.set(e, v);
    return r;
}

QExp operator+(const QExp& a, const QExp& b)
{
    QExp r(std::min(a.prec_, b.prec_));
    for (auto& [e, v] : a.c_)
        r.add(e, v);
    for (auto& [e, v] : b.c_)
        r.add(e, v);
    return r;
}

QExp operator-(const QExp& a, const QExp& b) { return a + mpq_class(-1) * b; }

QExp operator*(const mpq_class& s, const QExp& a)
{
    QExp r(a.prec_);
    for (auto& [e, v] : a.c_)
        r.add(e, s * v);
    return r;
}

QExp operator*(const QExp& a, const QExp& b)
{
    // a = q^va (...), exact below prec_a, so the product is exact below
    // min(prec_a + vb, prec_b + va)
    long va = a.valuation().value_or(a.prec_), vb = b.valuation().value_or(b.prec_);
    QExp r(std::min(a.prec_ + vb, b.prec_ + va));
    for (auto& [e1, v1] : a.c_)
        for (auto& [e2, v2] : b.c_) {
            if (e1 + e2 >= r.prec_)
                break;
            r.add(e1 + e2, v1 * v2);
        }
    return r;
}

bool operator==(const QExp& a, const QExp& b)
{
    long p = std::min(a.prec_, b.prec_);
    return a.truncated(p).c_ == b.truncated(p).c_;
}

std::string QExp::str(int max_terms) const
{
    std::ostringstream os;
    int n = 0;
    for (auto& [e, v] : c_) {
        if (n++ == max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1)
            os << " + ";
        os << "(" << v.get_str() << ")q^(" << e << "/24)";
    }
    os << " + O(q^(" << prec_ << "/24))";
    return os.str();
}

QExp eta_pow(int k, long prec)
{
    // prod (1-q^n)^k as a dense series in integer powers, shifted by k/24
    long shift = k;
    long terms = prec > shift ? (prec - shift + 23) / 24 : 0;
    std::vector<mpz_class> p(terms + 1, 0);
    if (terms >= 0)
        p[0] = 1;
    for (long n = 1; n <= terms; ++n)
        for (int t = 0; t < k; ++t)
            for (long i = terms; i >= n; --i)
                p[i] -= p[i - n];
    QExp r(prec);
    for (long i = 0; i <= terms; ++i)
        r.set(shift + 24 * i, mpq_class(p[i]));
    return r;
}

QExp eisenstein_E(int N)
{
    std::vector<mpq_class> c(N + 1, 0);
    c[0] = mpq_class(-1, 6);
    // q^m/(1-q^m) = sum_{j>=1} q^{jm}
    auto geom = [&](long m, int sign) {
        for (long e = m; e <= N; e += m)
            c[e] += sign;
    };
    geom(1, -1);
    for (long nu = 1; 3 * nu - 1 <= N; ++nu) {
        geom(3 * nu - 1, +1);
        if (3 * nu + 1 <= N)
            geom(3 * nu + 1, -1);
    }
    QExp r(24L * (N + 1));
    for (long e = 0; e <= N; ++e)
        r.set(24 * e, c[e]);
    return r;
}

QExp theta_binary(int N)
{
    std::vector<long> c(N + 1, 0);
    // x^2+xy+y^2 >= (x^2+y^2)/2, so |x|,|y| <= sqrt(2N)
    long b = long(std::sqrt(2.0 * N)) + 1;
    for (long x = -b; x <= b; ++x)
        for (long y = -b; y <= b; ++y) {
            long n = x * x + x * y + y * y;
            if (n <= N)
                ++c[n];
        }
    QExp r(24L * (N + 1));
    for (long e = 0; e <= N; ++e)
        r.set(24 * e, mpq_class(c[e]));
    return r;
}

ThetaCheck verify_theta_identity(int N)
{
    QExp t = theta_binary(N), e = eisenstein_E(N);
    ThetaCheck r;
    r.ok = true;
    for (long n = 0; n <= N; ++n)
        if (t.coeff(24 * n) != -6 * e.coeff(24 * n)) {
            r.ok = false;
            r.first_mismatch = n;
            break;
        }
    return r;
}

mpz_class theta_divisor_formula(long n)
{
    if (n == 0)
        return 1;
    long d1 = 0, d2 = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            if (d % 3 == 1)
                ++d1;
            else if (d % 3 == 2)
                ++d2;
        }
    return 6 * (d1 - d2);
}

}  // namespace pmf
