#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "idforge/errors.hpp"

namespace idforge {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction. Canonical form is maintained after
// every operation: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ContractViolation("Rational: zero denominator");
        v_ = Q(num) / Q(den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    // Exact conversion; throws unless the value is an integer.
    BigInt to_integer() const {
        if (!is_integer()) throw ContractViolation("Rational: " + str() + " is not an integer");
        return numerator();
    }

    Rational operator-() const { return Rational(Q(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ContractViolation("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Integer power; negative e inverts and requires a nonzero base.
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw ContractViolation("Rational: 0 raised to a negative power");
            return Rational(0);
        }
        const auto ue = static_cast<unsigned>(e < 0 ? -e : e);
        BigInt n = boost::multiprecision::pow(numerator(), ue);
        BigInt d = boost::multiprecision::pow(denominator(), ue);
        return e > 0 ? Rational(n, d) : Rational(d, n);
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Q = boost::multiprecision::cpp_rational;
    explicit Rational(Q v) : v_(std::move(v)) {}
    Q v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace idforge
