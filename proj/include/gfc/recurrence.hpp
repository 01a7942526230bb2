#pragma once

#include <optional>
#include <vector>

#include "gfc/genfun.hpp"

namespace gfc {

// First index at which a recurrence fit left a nonzero remainder, together
// with that remainder (degree <= n-2).
struct TtrrFailure {
    int n = -1;
    Poly residual;
};

// Coefficients of x P_n = P_{n+1} + beta_n P_n + omega_n P_{n-1}, read off a
// monic sequence degree by degree. valid_to is the largest n for which the
// relation held exactly; coefficients at the failure index itself are still
// reported (they are well-defined reads even when a remainder is left over).
struct Recurrence {
    std::vector<Rational> betas;   // betas[n] for 0 <= n <= last extracted index
    std::vector<Rational> omegas;  // omegas[n] for 1 <= n <= last extracted ([0] zero)
    int valid_to = -1;
    std::optional<TtrrFailure> failure;

    bool passed() const { return !failure.has_value(); }
};

// Coefficients of the (d+1)-order form
//   x P_n = P_{n+1} + sum_{l=0}^{d} gamma_n^l P_{n-l},
// with row n holding min(d, n)+1 entries (terms P_{n-l} need n-l >= 0).
struct GeneralRecurrence {
    int d = 0;
    std::vector<std::vector<Rational>> gammas;  // gammas[n][l]
    int valid_to = -1;
    std::optional<TtrrFailure> failure;

    bool passed() const { return !failure.has_value(); }
};

// Reads beta_n, omega_n by strictly descending degree matching: with
// Q = x P_n - P_{n+1}, beta_n = [x^n] Q and omega_n = [x^{n-1}](Q - beta_n P_n);
// whatever is left after subtracting omega_n P_{n-1} is the failure
// certificate. Monic inputs make this deterministic with no linear solves.
// Pre: order >= 2 (OrderTooSmall).
Recurrence extract_ttrr(const PolySeq& ps);

// Same elimination with d+1 coefficients per row. d = 1 coincides with
// extract_ttrr. Pre: d >= 0 and order >= d+1.
GeneralRecurrence extract_general(const PolySeq& ps, int d);

// Smallest d in [1, d_max] whose fit has no failure anywhere; nullopt when
// none fits. The all-zero degenerate case (monomials) reports d = 1 with
// zero omegas rather than inventing d = 0 semantics.
std::optional<int> minimal_order(const PolySeq& ps, int d_max);

// The derived scalar sequences used by the recurrence identities:
//   T_k = R_{2k}            (1 <= k <= floor(N/2))
//   a_n = (T_1/2) alpha_n / alpha_{n+1}   (0 <= n <= N-1)
//   c_n = (alpha_n / alpha_{n-1}) omega_n (1 <= n <= valid_to)
// Definitions, not stored state: computed on demand from (spec, recurrence).
struct DerivedSequences {
    std::vector<Rational> a;  // a[n], size N
    std::vector<Rational> c;  // c[n], size valid_to+1, [0] zero
    std::vector<Rational> t;  // t[k] = R_{2k}, size floor(N/2)+1, [0] zero

    int a_max() const { return static_cast<int>(a.size()) - 1; }
    int c_max() const { return static_cast<int>(c.size()) - 1; }
    int t_max() const { return static_cast<int>(t.size()) - 1; }
};

// Pre: alpha_1 R_2 != 0 (the sequences are undefined otherwise) and every
// alpha_n in range nonzero.
DerivedSequences derived_sequences(const GenFunSpec& spec, const Recurrence& rec);

}  // namespace gfc
