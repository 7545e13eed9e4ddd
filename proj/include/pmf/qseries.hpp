#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace pmf {

// Truncated q-expansion. Exponents are integers e meaning q^{e/24};
// coefficients are exact for every exponent < prec.
class QExp {
public:
    QExp() = default;
    explicit QExp(long prec) : prec_(prec) {}

    long prec() const { return prec_; }
    const std::map<long, mpq_class>& terms() const { return c_; }

    mpq_class coeff(long e24) const;
    void set(long e24, const mpq_class& v);
    void add(long e24, const mpq_class& v);

    // smallest exponent with nonzero coefficient, in 24ths
    std::optional<long> valuation() const;

    QExp truncated(long prec) const;
    friend QExp operator+(const QExp& a, const QExp& b);
    friend QExp operator-(const QExp& a, const QExp& b);
    friend QExp operator*(const QExp& a, const QExp& b);
    friend QExp operator*(const mpq_class& s, const QExp& a);
    friend bool operator==(const QExp& a, const QExp& b);

    std::string str(int max_terms = 8) const;

private:
    long prec_ = 0;
    std::map<long, mpq_class> c_;
};

// q^{k/24} prod (1-q^n)^k, exact for exponents < prec (24ths)
QExp eta_pow(int k, long prec);

// -1/6 - q/(1-q) + sum_nu [q^{3nu-1}/(1-q^{3nu-1}) - q^{3nu+1}/(1-q^{3nu+1})], through q^N
QExp eisenstein_E(int N);

// sum over Z^2 of q^{x^2+xy+y^2}, through q^N
QExp theta_binary(int N);

struct ThetaCheck {
    bool ok = false;
    std::optional<long> first_mismatch;  // integer exponent
};

ThetaCheck verify_theta_identity(int N);

// 6 (d_1(n) - d_2(n)), divisors counted by residue mod 3
mpz_class theta_divisor_formula(long n);

}  // namespace pmf
