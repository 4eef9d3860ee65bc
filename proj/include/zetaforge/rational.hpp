#pragma once

// Exact arbitrary-precision rationals. Thin wrapper over
// boost::multiprecision::cpp_rational fixing the canonical form
// (denominator > 0, reduced) and the "p/q" string format used by
// every serialization in this project.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <ostream>
#include <string>

#include "common.hpp"

namespace zetaforge {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : v_(n) {}      // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        BigInt n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
        if (g > 1) { n /= g; d /= g; }
        v_ = boost::multiprecision::cpp_rational(n, d);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(const std::string& s) {
        auto pos = s.find('/');
        try {
            if (pos == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
        } catch (const std::exception&) {
            throw ConfigError("unparsable rational: \"" + s + "\"");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    friend Rational operator-(const Rational& a) { return Rational(-a.v_); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw DivisionByZero("0 raised to negative power");
            return Rational(0);
        }
        BigInt n = numerator(), d = denominator();
        bool inv = e < 0;
        unsigned long long k = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
        BigInt np = boost::multiprecision::pow(n, static_cast<unsigned>(k));
        BigInt dp = boost::multiprecision::pow(d, static_cast<unsigned>(k));
        return inv ? Rational(dp, np) : Rational(np, dp);
    }

    // Always "p/q", including "3/1"; certificates rely on this shape.
    std::string to_string() const {
        return numerator().str() + "/" + denominator().str();
    }
    // Human-facing: drop "/1".
    std::string pretty() const {
        if (is_integer()) return numerator().str();
        return to_string();
    }

    double to_double() const { return static_cast<double>(v_); }
    std::complex<double> to_complex() const { return {to_double(), 0.0}; }

    // Largest integer <= value.
    BigInt floor() const {
        BigInt q = numerator() / denominator();
        if (v_ < 0 && q * denominator() != numerator()) q -= 1;
        return q;
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(to_string());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd over Q normalized as gcd(num)/lcm(den); used for polynomial content.
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    BigInt gn = boost::multiprecision::gcd(a.numerator(), b.numerator());
    BigInt dl = boost::multiprecision::lcm(a.denominator(), b.denominator());
    if (gn < 0) gn = -gn;
    return Rational(gn, dl);
}

} // namespace zetaforge
