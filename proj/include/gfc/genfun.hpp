#pragma once

#include <optional>
#include <vector>

#include "gfc/series.hpp"

namespace gfc {

// The pair (alpha, R) defining the generating function F(xt - R(t)) up to a
// truncation order N:
//
//   F(z) = sum_{n>=0} alpha_n z^n          (alpha_0 == 1)
//   R(t) = sum_{n>=1} R_n t^n / n          (R_1 == 0)
//
// The stored R value at index n is R_n in this convention, so the t^2
// coefficient of R itself is R_2/2. All formulas in the library use R_n
// directly.
class GenFunSpec {
public:
    // alpha: {alpha_0 .. alpha_N} (N+1 entries); r_coeffs: {R_1 .. R_N}
    // (N entries). Throws InvalidSpec if the invariants above fail.
    GenFunSpec(std::vector<Rational> alpha, std::vector<Rational> r_coeffs);

    int order() const { return order_; }
    const Rational& alpha(int n) const;  // 0 <= n <= order
    const Rational& r(int n) const;      // 1 <= n <= order

    const std::vector<Rational>& alpha_list() const { return alpha_; }
    std::vector<Rational> r_list() const;  // {R_1 .. R_N}

    bool r_is_zero() const;       // every provided R_n == 0
    bool r_is_quadratic() const;  // every provided R_n == 0 for n != 2

    // Copies with one knob changed; used by perturbation scans.
    GenFunSpec with_r(int n, Rational value) const;             // 2 <= n <= order
    GenFunSpec with_alpha_scaled(int n, const Rational& factor) const;  // 1 <= n <= order

    friend bool operator==(const GenFunSpec& a, const GenFunSpec& b) = default;

private:
    std::vector<Rational> alpha_;  // alpha_[n] = alpha_n, size N+1
    std::vector<Rational> r_;      // r_[n] = R_n, size N+1, r_[0] unused (zero)
    int order_ = 0;
};

// The monic polynomial set: polys[n] = P_n, deg P_n = n, leading coeff 1.
struct PolySeq {
    std::vector<Poly> polys;

    int order() const { return static_cast<int>(polys.size()) - 1; }
    const Poly& at(int n) const { return polys[static_cast<size_t>(n)]; }
};

// Expands F(xt - R(t)) and normalizes each t^n coefficient by alpha_n:
// P_n = [t^n] F(xt - R(t)) / alpha_n. The only x^n contribution to t^n is
// alpha_n (xt)^n, so each P_n comes out monic of degree n. Throws
// ZeroAlpha(n) if some alpha_n vanishes for 1 <= n <= N.
PolySeq expand(const GenFunSpec& spec);

// Residuals of the differential identity
//
//   alpha_n x P_n'(x) - sum_{k=1}^{n} R_{k+1} alpha_{n-k} P'_{n-k}(x)
//     = n alpha_n P_n(x),   n >= 1,
//
// which holds for every generated set. The k = n term carries P_0' = 0 and
// drops out, so R_{N+1} is never read; still, n = order is excluded by
// default (n_max < 0 selects order - 1) so that no check silently leans on
// the truncation edge.
struct IdentityReport {
    int n_max = 0;
    std::vector<Poly> residuals;  // residuals[n] for 1 <= n <= n_max ([0] unused)
    std::optional<int> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

IdentityReport verify_gf7(const GenFunSpec& spec, const PolySeq& ps, int n_max = -1);

// P_n(-x) == (-1)^n P_n(x) for every n: each P_n carries only terms whose
// degree has the parity of n.
bool is_symmetric(const PolySeq& ps);

}  // namespace gfc
