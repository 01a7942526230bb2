#include "gfc/genfun.hpp"

#include <cassert>

#include "gfc/errors.hpp"

namespace gfc {

GenFunSpec::GenFunSpec(std::vector<Rational> alpha, std::vector<Rational> r_coeffs) {
    if (r_coeffs.empty()) throw InvalidSpec("order must be >= 1");
    if (alpha.size() != r_coeffs.size() + 1)
        throw InvalidSpec("alpha needs exactly order+1 entries and r exactly order entries");
    if (alpha.front() != Rational(1)) throw InvalidSpec("alpha_0 must be 1");
    if (!r_coeffs.front().is_zero()) throw InvalidSpec("R_1 must be 0");
    order_ = static_cast<int>(r_coeffs.size());
    alpha_ = std::move(alpha);
    r_.assign(static_cast<size_t>(order_) + 1, Rational(0));
    for (int n = 1; n <= order_; ++n) r_[static_cast<size_t>(n)] = r_coeffs[static_cast<size_t>(n - 1)];
}

const Rational& GenFunSpec::alpha(int n) const {
    if (n < 0 || n > order_) throw OrderExceeded("alpha index out of range");
    return alpha_[static_cast<size_t>(n)];
}

const Rational& GenFunSpec::r(int n) const {
    if (n < 1 || n > order_) throw OrderExceeded("R index out of range");
    return r_[static_cast<size_t>(n)];
}

std::vector<Rational> GenFunSpec::r_list() const {
    return {r_.begin() + 1, r_.end()};
}

bool GenFunSpec::r_is_zero() const {
    for (int n = 1; n <= order_; ++n)
        if (!r_[static_cast<size_t>(n)].is_zero()) return false;
    return true;
}

bool GenFunSpec::r_is_quadratic() const {
    for (int n = 3; n <= order_; ++n)
        if (!r_[static_cast<size_t>(n)].is_zero()) return false;
    return true;
}

GenFunSpec GenFunSpec::with_r(int n, Rational value) const {
    if (n < 2 || n > order_)
        throw Error("R knob index must lie in [2, order]");
    std::vector<Rational> rs = r_list();
    rs[static_cast<size_t>(n - 1)] = std::move(value);
    return GenFunSpec(alpha_, std::move(rs));
}

GenFunSpec GenFunSpec::with_alpha_scaled(int n, const Rational& factor) const {
    if (n < 1 || n > order_)
        throw Error("alpha knob index must lie in [1, order]");
    std::vector<Rational> as = alpha_;
    as[static_cast<size_t>(n)] *= factor;
    return GenFunSpec(std::move(as), r_list());
}

PolySeq expand(const GenFunSpec& spec) {
    const int N = spec.order();
    for (int n = 1; n <= N; ++n)
        if (spec.alpha(n).is_zero()) throw ZeroAlpha(n);

    // u = xt - R(t): [t^1] u = x (R_1 == 0), [t^n] u = -R_n/n for n >= 2.
    TruncSeries u(N);
    u.set_coeff(1, Poly::variable());
    for (int n = 2; n <= N; ++n)
        u.set_coeff(n, Poly::constant(-spec.r(n) / Rational(n)));

    TruncSeries w = series_compose_outer(spec.alpha_list(), u, N);

    PolySeq ps;
    ps.polys.reserve(static_cast<size_t>(N) + 1);
    ps.polys.push_back(Poly::constant(Rational(1)));
    for (int n = 1; n <= N; ++n) {
        Poly p = w.coeff(n) / spec.alpha(n);
        assert(p.degree() == n && p.leading() == Rational(1));
        ps.polys.push_back(std::move(p));
    }
    return ps;
}

IdentityReport verify_gf7(const GenFunSpec& spec, const PolySeq& ps, int n_max) {
    if (n_max < 0) n_max = spec.order() - 1;
    if (n_max > spec.order())
        throw OrderExceeded("verify_gf7: n_max exceeds the spec order");
    if (n_max > ps.order())
        throw OrderExceeded("verify_gf7: n_max exceeds the expanded sequence");

    IdentityReport report;
    report.n_max = n_max;
    report.residuals.assign(static_cast<size_t>(n_max) + 1, Poly{});
    std::vector<Poly> dp;
    dp.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) dp.push_back(poly_derivative(ps.at(n)));

    for (int n = 1; n <= n_max; ++n) {
        Poly residual = dp[static_cast<size_t>(n)].shifted_up(1) * spec.alpha(n);
        residual -= ps.at(n) * (spec.alpha(n) * Rational(n));
        for (int k = 1; k < n; ++k)  // k = n would multiply P_0' == 0
            residual -= dp[static_cast<size_t>(n - k)] * (spec.r(k + 1) * spec.alpha(n - k));
        if (!residual.is_zero() && !report.first_failure) report.first_failure = n;
        report.residuals[static_cast<size_t>(n)] = std::move(residual);
    }
    return report;
}

bool is_symmetric(const PolySeq& ps) {
    for (int n = 0; n <= ps.order(); ++n)
        if (!ps.at(n).has_pure_parity(n)) return false;
    return true;
}

}  // namespace gfc
