#pragma once

#include <string>
#include <vector>

#include "gfc/rational.hpp"

namespace gfc {

// Dense univariate polynomial over Rational; coeffs()[i] is the coefficient
// of x^i. No trailing zero is ever stored, so degree() is the index of the
// last entry; the zero polynomial is the empty vector and reports degree -1.
class Poly {
public:
    Poly() = default;  // zero polynomial

    static Poly constant(Rational c);
    static Poly variable();  // x
    static Poly from_coeffs(std::vector<Rational> coeffs);  // trims trailing zeros

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of x^i; zero outside [0, degree()].
    const Rational& coeff(int i) const;
    const Rational& leading() const;  // pre: !is_zero()

    // Multiplication by x^k.
    Poly shifted_up(int k) const;

    // True when every nonzero term has degree == parity (mod 2).
    bool has_pure_parity(int parity) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& p, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }
    friend Poly operator/(const Poly& p, const Rational& s);

    friend bool operator==(const Poly& a, const Poly& b) = default;

    // Human-readable form for diagnostics, e.g. "x^3 - 3*x".
    std::string str() const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// d/dx, exact.
Poly poly_derivative(const Poly& p);

}  // namespace gfc
