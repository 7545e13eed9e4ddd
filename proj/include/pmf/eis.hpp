#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace pmf {

// a + b*w with w^2 + w + 1 = 0
class EisInt {
public:
    EisInt() = default;
    EisInt(long a) : a_(a), b_(0) {}
    EisInt(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {}
    EisInt(long a, long b) : a_(a), b_(b) {}

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }

    static EisInt zeta() { return EisInt(0, 1); }
    static EisInt sqrt_m3() { return EisInt(1, 2); }

    EisInt conj() const { return EisInt(a_ - b_, -b_); }
    mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_unit() const { return norm() == 1; }

    EisInt operator-() const { return EisInt(-a_, -b_); }
    EisInt& operator+=(const EisInt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    EisInt& operator-=(const EisInt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    EisInt& operator*=(const EisInt& o);

    friend EisInt operator+(EisInt x, const EisInt& y) { return x += y; }
    friend EisInt operator-(EisInt x, const EisInt& y) { return x -= y; }
    friend EisInt operator*(EisInt x, const EisInt& y) { return x *= y; }
    friend bool operator==(const EisInt& x, const EisInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const EisInt& x, const EisInt& y) { return !(x == y); }

    // exact division; returns false when y does not divide *this in E
    bool divide_by(const EisInt& y, EisInt& q) const;
    bool divisible_by(const EisInt& y) const { EisInt q; return divide_by(y, q); }

    std::string str() const;
    static EisInt parse(const std::string& s);

private:
    mpz_class a_ = 0, b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EisInt& x);

// the six units, as powers 0..5 of -w
std::vector<EisInt> units();
EisInt unit_power(int k);
// inverse of unit_power; -1 if x is not a unit
int unit_log(const EisInt& x);

// element re + zc*w of Q(w)
class CycRat {
public:
    CycRat() = default;
    CycRat(long r) : re_(r), zc_(0) {}
    CycRat(mpq_class r, mpq_class z) : re_(std::move(r)), zc_(std::move(z)) { re_.canonicalize(); zc_.canonicalize(); }
    CycRat(const EisInt& e) : re_(e.a()), zc_(e.b()) {}

    const mpq_class& re() const { return re_; }
    const mpq_class& zc() const { return zc_; }

    CycRat conj() const { return CycRat(re_ - zc_, -zc_); }
    mpq_class norm() const { return re_ * re_ - re_ * zc_ + zc_ * zc_; }
    bool is_zero() const { return re_ == 0 && zc_ == 0; }
    bool is_rational() const { return zc_ == 0; }
    CycRat inverse() const;

    CycRat operator-() const { return CycRat(-re_, -zc_); }
    CycRat& operator+=(const CycRat& o) { re_ += o.re_; zc_ += o.zc_; return *this; }
    CycRat& operator-=(const CycRat& o) { re_ -= o.re_; zc_ -= o.zc_; return *this; }
    CycRat& operator*=(const CycRat& o);
    CycRat& operator/=(const CycRat& o) { return *this *= o.inverse(); }

    friend CycRat operator+(CycRat x, const CycRat& y) { return x += y; }
    friend CycRat operator-(CycRat x, const CycRat& y) { return x -= y; }
    friend CycRat operator*(CycRat x, const CycRat& y) { return x *= y; }
    friend CycRat operator/(CycRat x, const CycRat& y) { return x /= y; }
    friend bool operator==(const CycRat& x, const CycRat& y) { return x.re_ == y.re_ && x.zc_ == y.zc_; }
    friend bool operator!=(const CycRat& x, const CycRat& y) { return !(x == y); }

    bool is_eis_int() const { return re_.get_den() == 1 && zc_.get_den() == 1; }
    EisInt to_eis() const;
    std::string str() const;

private:
    mpq_class re_ = 0, zc_ = 0;
};

// sixth root of unity (-w)^k as an element of Q(w); -1 from root_log if not a root
CycRat root6(int k);
int root_log(const CycRat& x);

// E/3E, a+b*w with a,b in {0,1,2}
struct Res3 {
    uint8_t a = 0, b = 0;
    constexpr Res3() = default;
    constexpr Res3(int x, int y) : a(uint8_t(((x % 3) + 3) % 3)), b(uint8_t(((y % 3) + 3) % 3)) {}
    static Res3 from(const EisInt& x);
    uint8_t code() const { return uint8_t(a + 3 * b); }
    static Res3 decode(int c) { return Res3(c % 3, c / 3); }
    Res3 conj() const { return Res3(a - b, -b); }
    bool is_zero() const { return a == 0 && b == 0; }
    friend Res3 operator+(Res3 x, Res3 y) { return Res3(x.a + y.a, x.b + y.b); }
    friend Res3 operator-(Res3 x, Res3 y) { return Res3(x.a - y.a, x.b - y.b); }
    friend Res3 operator*(Res3 x, Res3 y) {
        return Res3(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
    }
    Res3 operator-() const { return Res3(-a, -b); }
    friend bool operator==(Res3 x, Res3 y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Res3 x, Res3 y) { return !(x == y); }
};

// value in F_3 of x mod sqrt(-3); w maps to 1
struct ResSqrt3 {
    uint8_t v = 0;
    constexpr ResSqrt3() = default;
    constexpr explicit ResSqrt3(int x) : v(uint8_t(((x % 3) + 3) % 3)) {}
    friend ResSqrt3 operator+(ResSqrt3 x, ResSqrt3 y) { return ResSqrt3(x.v + y.v); }
    friend ResSqrt3 operator*(ResSqrt3 x, ResSqrt3 y) { return ResSqrt3(x.v * y.v); }
    friend bool operator==(ResSqrt3 x, ResSqrt3 y) { return x.v == y.v; }
};

ResSqrt3 reduce_sqrt3(const EisInt& x);
inline ResSqrt3 reduce_sqrt3(Res3 x) { return ResSqrt3(x.a + x.b); }

}  // namespace pmf
