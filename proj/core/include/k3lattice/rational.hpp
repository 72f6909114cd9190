#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace k3l {

using Int = mpz_class;

/// Exact rational number. Always canonical: gcd(|num|, den) = 1 and den >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    /// Largest integer <= this value.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    /// Rendered "p/q", or just "p" when the value is an integer.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (sgn(y.v_) == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(x.v_ / y.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) == 0; }
    friend bool operator!=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) != 0; }
    friend bool operator<(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) < 0; }
    friend bool operator<=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) <= 0; }
    friend bool operator>(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) > 0; }
    friend bool operator>=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) >= 0; }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace k3l
