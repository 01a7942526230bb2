#pragma once

#include <span>
#include <vector>

#include "gfc/poly.hpp"

namespace gfc {

// Truncated formal power series in t whose t^n coefficient is a polynomial
// in x. Exactly order+1 coefficients are stored (t^0..t^order) and no
// operation ever reads past the truncation order it was given: the order is
// an explicit parameter everywhere, never ambient state.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    explicit TruncSeries(std::vector<Poly> coeffs);  // order = size - 1

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly& coeff(int n) const;
    void set_coeff(int n, Poly p);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

private:
    std::vector<Poly> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b, int order);

// Cauchy product truncated to `order`. Pre: both operands carry at least
// `order` terms.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b, int order);

// F(u) truncated at t^order, where F(z) = sum alpha_k z^k. Evaluated by a
// Horner scheme in u, which costs `order` series multiplications instead of
// powering each u^k separately. Pre: u(x, 0) == 0 (NonzeroConstantTerm
// otherwise) and alpha provided through index `order`.
TruncSeries series_compose_outer(std::span<const Rational> alpha, const TruncSeries& u,
                                 int order);

}  // namespace gfc
