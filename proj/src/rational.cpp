#include "gfc/rational.hpp"

#include <cctype>
#include <ostream>

namespace gfc {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw ZeroDenominator("rational with zero denominator");
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    };
    std::string_view s = text;
    std::string_view num_part = s, den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
        if (den_part.empty()) return fail();
    }
    auto is_int = [](std::string_view p, bool allow_sign) {
        if (allow_sign && !p.empty() && (p.front() == '-' || p.front() == '+'))
            p.remove_prefix(1);
        if (p.empty()) return false;
        for (char c : p)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!is_int(num_part, true)) return fail();
    if (!den_part.empty() && !is_int(den_part, false)) return fail();
    if (num_part.front() == '+') num_part.remove_prefix(1);  // cpp_int rejects a leading '+'
    BigInt num{std::string(num_part)};
    BigInt den = den_part.empty() ? BigInt(1) : BigInt{std::string(den_part)};
    if (den.is_zero()) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned k) {
    Rational acc(1), base = r;
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

}  // namespace gfc
