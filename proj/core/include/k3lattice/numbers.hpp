#pragma once

#include "k3lattice/rational.hpp"

namespace k3l {

/// Element a + b*sqrt(5) of Q(sqrt 5).
struct Sqrt5Number {
    Rational a;
    Rational b;

    Sqrt5Number() = default;
    Sqrt5Number(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_rational() const { return b.is_zero(); }

    std::string str() const {
        if (is_rational()) return a.str();
        return a.str() + " + " + b.str() + "*sqrt5";
    }

    friend Sqrt5Number operator+(const Sqrt5Number& x, const Sqrt5Number& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Sqrt5Number operator-(const Sqrt5Number& x, const Sqrt5Number& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Sqrt5Number operator*(const Sqrt5Number& x, const Sqrt5Number& y) {
        // (a + b s)(c + d s) = ac + 5bd + (ad + bc) s,  s^2 = 5
        return {x.a * y.a + Rational(5) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Sqrt5Number operator-() const { return {-a, -b}; }
    friend bool operator==(const Sqrt5Number& x, const Sqrt5Number& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Sqrt5Number& x, const Sqrt5Number& y) { return !(x == y); }
};

/// Element a + b*zeta of Q(zeta_3), with zeta^2 = -1 - zeta.
struct Zeta3Number {
    Rational a;
    Rational b;

    Zeta3Number() = default;
    Zeta3Number(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_rational() const { return b.is_zero(); }

    std::string str() const {
        if (is_rational()) return a.str();
        return a.str() + " + " + b.str() + "*zeta3";
    }

    friend Zeta3Number operator+(const Zeta3Number& x, const Zeta3Number& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Zeta3Number operator-(const Zeta3Number& x, const Zeta3Number& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Zeta3Number operator*(const Zeta3Number& x, const Zeta3Number& y) {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2 = (ac - bd) + (ad + bc - bd) z
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    Zeta3Number operator-() const { return {-a, -b}; }
    friend bool operator==(const Zeta3Number& x, const Zeta3Number& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Zeta3Number& x, const Zeta3Number& y) { return !(x == y); }
};

/// zeta_3^k for any integer exponent.
inline Zeta3Number zeta3_power(long k) {
    long r = ((k % 3) + 3) % 3;
    if (r == 0) return {Rational(1), Rational(0)};
    if (r == 1) return {Rational(0), Rational(1)};
    return {Rational(-1), Rational(-1)};
}

/// Canonical representative in [0, 1) of a rational mod Z.
struct ResidueModZ {
    Rational rep;
    friend bool operator==(const ResidueModZ& x, const ResidueModZ& y) { return x.rep == y.rep; }
    friend bool operator!=(const ResidueModZ& x, const ResidueModZ& y) { return !(x == y); }
    std::string str() const { return rep.str(); }
};

/// Canonical representative in [0, 2) of a rational mod 2Z.
struct ResidueMod2Z {
    Rational rep;
    friend bool operator==(const ResidueMod2Z& x, const ResidueMod2Z& y) { return x.rep == y.rep; }
    friend bool operator!=(const ResidueMod2Z& x, const ResidueMod2Z& y) { return !(x == y); }
    std::string str() const { return rep.str(); }
};

inline ResidueModZ reduce_mod_Z(const Rational& q) { return {q - Rational(q.floor())}; }

inline ResidueMod2Z reduce_mod_2Z(const Rational& q) {
    Rational half = q / Rational(2);
    return {q - Rational(2) * Rational(half.floor())};
}

}  // namespace k3l
