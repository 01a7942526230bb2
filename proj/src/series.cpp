#include "gfc/series.hpp"

#include "gfc/errors.hpp"

namespace gfc {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw OrderTooSmall("series order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, Poly{});
}

TruncSeries::TruncSeries(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw OrderTooSmall("series needs at least the t^0 term");
}

const Poly& TruncSeries::coeff(int n) const {
    if (n < 0 || n > order())
        throw OrderExceeded("series coefficient index " + std::to_string(n) +
                            " outside truncation order " + std::to_string(order()));
    return coeffs_[static_cast<size_t>(n)];
}

void TruncSeries::set_coeff(int n, Poly p) {
    if (n < 0 || n > order())
        throw OrderExceeded("series coefficient index " + std::to_string(n) +
                            " outside truncation order " + std::to_string(order()));
    coeffs_[static_cast<size_t>(n)] = std::move(p);
}

namespace {
void require_order(const TruncSeries& s, int order, const char* who) {
    if (s.order() < order)
        throw OrderExceeded(std::string(who) + ": operand truncated below requested order");
}
}  // namespace

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b, int order) {
    require_order(a, order, "series_add");
    require_order(b, order, "series_add");
    TruncSeries out(order);
    for (int n = 0; n <= order; ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b, int order) {
    require_order(a, order, "series_mul");
    require_order(b, order, "series_mul");
    TruncSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

TruncSeries series_compose_outer(std::span<const Rational> alpha, const TruncSeries& u,
                                 int order) {
    require_order(u, order, "series_compose_outer");
    if (!u.coeff(0).is_zero())
        throw NonzeroConstantTerm("composition requires u(x, 0) == 0");
    if (static_cast<int>(alpha.size()) < order + 1)
        throw OrderExceeded("series_compose_outer: alpha sequence shorter than order + 1");

    // Horner in u: S <- u*S + alpha_k, k = order .. 0.
    TruncSeries acc(order);
    acc.set_coeff(0, Poly::constant(alpha[static_cast<size_t>(order)]));
    for (int k = order - 1; k >= 0; --k) {
        acc = series_mul(u, acc, order);
        acc.set_coeff(0, acc.coeff(0) + Poly::constant(alpha[static_cast<size_t>(k)]));
    }
    return acc;
}

}  // namespace gfc
