#pragma once

#include <gmpxx.h>

#include <string>

#include "freeaut/error.hpp"

namespace freeaut {

// Exact rational coefficient, always in lowest terms with positive
// denominator. Thin wrapper so the coefficient field stays behind one
// interface; everything else only sees Rational.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) raise(Errc::BadInput, "rational with zero denominator");
        v_.canonicalize();
    }

    static Rational from_string(const std::string& s) {
        try {
            Rational r;
            r.v_ = mpq_class(s);
            if (r.v_.get_den() == 0) raise(Errc::Parse, "zero denominator in rational literal");
            r.v_.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            raise(Errc::Parse, "bad rational literal: " + s);
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational abs() const { return Rational(::abs(v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) raise(Errc::BadInput, "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) raise(Errc::BadInput, "inverse of zero");
        return Rational(1) / *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

} // namespace freeaut
