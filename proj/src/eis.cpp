#include "pmf/eis.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pmf {

EisInt& EisInt::operator*=(const EisInt& o)
{
    // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = -1-w
    mpz_class bd = b_ * o.b_;
    mpz_class na = a_ * o.a_ - bd;
    mpz_class nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

bool EisInt::divide_by(const EisInt& y, EisInt& q) const
{
    if (y.is_zero())
        throw std::domain_error("EisInt: division by zero");
    EisInt t = *this * y.conj();
    mpz_class n = y.norm();
    if (!mpz_divisible_p(t.a_.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.b_.get_mpz_t(), n.get_mpz_t()))
        return false;
    q = EisInt(mpz_class(t.a_ / n), mpz_class(t.b_ / n));
    return true;
}

std::string EisInt::str() const
{
    std::ostringstream os;
    os << a_.get_str();
    if (b_ >= 0)
        os << '+';
    os << b_.get_str() << "*w";
    return os.str();
}

EisInt EisInt::parse(const std::string& s)
{
    // accepts "a+b*w", "a-b*w", "a", "b*w", "w", "-w"
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty())
        throw std::invalid_argument("EisInt::parse: empty");
    mpz_class a = 0, b = 0;
    size_t i = 0;
    while (i < t.size()) {
        size_t j = i + 1;
        while (j < t.size() && t[j] != '+' && t[j] != '-')
            ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        int sign = 1;
        if (term[0] == '+' || term[0] == '-') {
            sign = term[0] == '-' ? -1 : 1;
            term = term.substr(1);
        }
        bool isw = !term.empty() && term.back() == 'w';
        if (isw) {
            term.pop_back();
            if (!term.empty() && term.back() == '*')
                term.pop_back();
            if (term.empty())
                term = "1";
        }
        mpz_class v;
        if (v.set_str(term, 10) != 0)
            throw std::invalid_argument("EisInt::parse: bad term in " + s);
        (isw ? b : a) += sign * v;
    }
    return EisInt(a, b);
}

std::ostream& operator<<(std::ostream& os, const EisInt& x) { return os << x.str(); }

EisInt unit_power(int k)
{
    k = ((k % 6) + 6) % 6;
    static const long tab[6][2] = {{1, 0}, {0, -1}, {-1, -1}, {-1, 0}, {0, 1}, {1, 1}};
    return EisInt(tab[k][0], tab[k][1]);
}

std::vector<EisInt> units()
{
    std::vector<EisInt> u;
    for (int k = 0; k < 6; ++k)
        u.push_back(unit_power(k));
    return u;
}

int unit_log(const EisInt& x)
{
    for (int k = 0; k < 6; ++k)
        if (unit_power(k) == x)
            return k;
    return -1;
}

CycRat& CycRat::operator*=(const CycRat& o)
{
    mpq_class bd = zc_ * o.zc_;
    mpq_class na = re_ * o.re_ - bd;
    mpq_class nb = re_ * o.zc_ + zc_ * o.re_ - bd;
    re_ = std::move(na);
    zc_ = std::move(nb);
    return *this;
}

CycRat CycRat::inverse() const
{
    mpq_class n = norm();
    if (n == 0)
        throw std::domain_error("CycRat: inverse of zero");
    CycRat c = conj();
    return CycRat(c.re_ / n, c.zc_ / n);
}

EisInt CycRat::to_eis() const
{
    if (!is_eis_int())
        throw std::domain_error("CycRat: not integral");
    return EisInt(re_.get_num(), zc_.get_num());
}

std::string CycRat::str() const
{
    if (zc_ == 0)
        return re_.get_str();
    std::ostringstream os;
    if (re_ != 0) {
        os << re_.get_str();
        if (zc_ > 0)
            os << '+';
    }
    os << zc_.get_str() << "*w";
    return os.str();
}

CycRat root6(int k) { return CycRat(unit_power(k)); }

int root_log(const CycRat& x)
{
    if (!x.is_eis_int())
        return -1;
    return unit_log(x.to_eis());
}

Res3 Res3::from(const EisInt& x)
{
    mpz_class a = x.a() % 3, b = x.b() % 3;
    return Res3(int(a.get_si()), int(b.get_si()));
}

ResSqrt3 reduce_sqrt3(const EisInt& x)
{
    mpz_class s = (x.a() + x.b()) % 3;
    return ResSqrt3(int(s.get_si()));
}

}  // namespace pmf
