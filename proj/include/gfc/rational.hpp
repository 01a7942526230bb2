#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gfc/errors.hpp"

namespace gfc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always in lowest terms with a positive denominator;
// the canonical zero is 0/1. Text form is "p/q", or bare "p" when q == 1.
// Backed by boost::multiprecision, which keeps the canonical form through
// arithmetic; this wrapper pins down construction, parsing and formatting.
class Rational {
public:
    Rational() = default;  // zero
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p", "-p", "p/q", "-p/q" with q > 0. Throws ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ == b.v_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& r);

// r^k for k >= 0.
Rational pow(const Rational& r, unsigned k);

}  // namespace gfc
