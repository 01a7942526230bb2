#include "gfc/poly.hpp"

#include <algorithm>

namespace gfc {

namespace {
const Rational kZero{};
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const { return coeffs_.back(); }

Poly Poly::shifted_up(int k) const {
    if (k == 0) return *this;
    if (is_zero()) return {};
    Poly p;
    p.coeffs_.assign(static_cast<size_t>(k), Rational(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

bool Poly::has_pure_parity(int parity) const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero() && static_cast<int>(i % 2) != ((parity % 2 + 2) % 2))
            return false;
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();
    return p;
}

Poly operator*(const Poly& p, const Rational& s) {
    if (s.is_zero()) return {};
    Poly out = p;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

Poly operator/(const Poly& p, const Rational& s) {
    Poly out = p;
    for (auto& c : out.coeffs_) c /= s;
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational a = abs(c);
        if (out.empty())
            out += (c.sign() < 0) ? "-" : "";
        else
            out += (c.sign() < 0) ? " - " : " + ";
        bool unit = (a == Rational(1)) && i > 0;
        if (!unit) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_derivative(const Poly& p) {
    if (p.degree() <= 0) return {};
    std::vector<Rational> d;
    d.reserve(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) d.push_back(p.coeff(i) * Rational(i));
    return Poly::from_coeffs(std::move(d));
}

}  // namespace gfc
