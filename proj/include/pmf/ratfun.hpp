#pragma once

#include "pmf/poly.hpp"

namespace pmf {

// Exact multivariate arithmetic over Q used by the rational-function field.
QPoly mpoly_gcd(const QPoly& a, const QPoly& b);
// a / b when b divides a exactly; throws std::domain_error otherwise
QPoly mpoly_div_exact(const QPoly& a, const QPoly& b);
bool mpoly_divides(const QPoly& b, const QPoly& a, QPoly* quotient = nullptr);
// pseudo-remainder of a by b with respect to variable v
QPoly mpoly_prem(const QPoly& a, const QPoly& b, int v);
// coefficient of v^k, as a polynomial free of v
QPoly mpoly_coeff_in(const QPoly& a, int v, int k);
// gcd of the coefficients of a viewed as a polynomial in v
QPoly mpoly_content_in(const QPoly& a, int v);

// Element num/den of Q(t_1..t_n). The parameter ring is shared by every
// instance and is installed once via set_context before any arithmetic.
// Stored in lowest terms with a monic denominator (leading coefficient 1).
class RatFun {
public:
    static void set_context(OrderPtr params);
    static const OrderPtr& context();

    RatFun() : RatFun(0) {}
    RatFun(long c);
    RatFun(const mpq_class& c);
    explicit RatFun(QPoly num);
    RatFun(QPoly num, QPoly den);

    static RatFun param(int i);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const;

private:
    QPoly num_, den_;
    void reduce();
};

inline std::string coeff_str(const RatFun& c) { return c.str(); }

template <>
inline RatFun PolyParser<RatFun>::from_q(const mpq_class& q) { return RatFun(q); }

using KPoly = SparsePoly<RatFun>;

// Split a Q-polynomial over all variables into one over the remaining
// variables with coefficients in Q(params). param_vars[i] is the index in
// the source ring of parameter i; the target order must live on a ring
// whose variables are the non-parameter source variables in order.
KPoly to_kpoly(const QPoly& p, const std::vector<int>& param_vars, const OrderPtr& target);

}  // namespace pmf
