#pragma once

#include <string_view>
#include <vector>

#include "gfc/genfun.hpp"

namespace gfc {

enum class FamilyKind { Monomial, Ultraspherical, Chebyshev1, Hermite };

std::string_view family_kind_name(FamilyKind kind);

// Recovered family parameters. Admissibility:
//   Ultraspherical: lambda1 != 0, lambda2 != 0, lambda = lambda1/lambda2 not
//                   zero and not a negative integer; scale_sq = 2 t1/lambda2
//   Chebyshev1:     lambda1 == 0, lambda2 != 0; scale_sq = 2 t1/lambda2
//   Hermite:        lambda2 == 0, lambda1 != 0; scale_sq = t1/lambda1
//   Monomial:       t1 == 0, scale_sq = 1 by convention
// t1 is T_1 = R_2 and must be nonzero for the three classical kinds.
struct FamilyParams {
    FamilyKind kind = FamilyKind::Monomial;
    Rational lambda1;
    Rational lambda2;
    Rational t1;
    Rational lambda;    // lambda1/lambda2, Ultraspherical only
    Rational scale_sq;  // squared rescaling factor k^2

    // Validating factories; throw InvalidParams on inadmissible input.
    static FamilyParams ultraspherical(const Rational& lambda1, const Rational& lambda2,
                                       const Rational& t1);
    static FamilyParams chebyshev1(const Rational& lambda2, const Rational& t1);
    static FamilyParams hermite(const Rational& lambda1, const Rational& t1);
    static FamilyParams monomial();

    friend bool operator==(const FamilyParams& a, const FamilyParams& b) = default;
};

// alpha_0 = 1, alpha_1 given, then alpha_n = (lambda2 (n-1) + lambda1)/n *
// alpha_{n-1}. Plain helper with no admissibility checks so that degenerate
// inputs (e.g. a chain that runs into a zero) can still be materialized and
// diagnosed downstream.
std::vector<Rational> alpha_from_lambda(const Rational& lambda1, const Rational& lambda2,
                                        const Rational& alpha1, int n_max);

// The family's alpha sequence through n_max; Monomial yields all ones by
// convention. alpha_1 is a free nonzero choice (classification does not
// depend on it), default 1.
std::vector<Rational> family_alpha(const FamilyParams& params, int n_max,
                                   const Rational& alpha1 = Rational(1));

// Closed-form recurrence coefficient
//   omega_n = (T_1/2) n (lambda2 (n-1) + 2 lambda1)
//             / ((lambda2 n + lambda1)(lambda2 (n-1) + lambda1)),
// exact. Throws SingularIndex when the denominator vanishes (Chebyshev1 at
// n = 1); callers then use family_omega_gf10. Monomial yields 0.
Rational family_omega(const FamilyParams& params, int n);

// Telescoped fallback omega_n = n a_n - (n-1) a_{n-1} with
// a_k = (T_1/2)(k+1)/(lambda2 k + lambda1); agrees with family_omega at every
// nonsingular index and is defined at the singular ones.
Rational family_omega_gf10(const FamilyParams& params, int n);

// The rescaled monic family built directly in x by replaying the recurrence
// with beta_n = 0. No square roots are ever formed: a monic symmetric family
// rescales coefficientwise through the squared factor only.
PolySeq family_polys(const FamilyParams& params, int n_max);

struct OrthogonalityVerdict {
    enum class Reason {
        ConditionsMet,             // quoted sufficient conditions hold
        ScaleRatioNotPositive,     // lambda2/T1 (or lambda1/T1) <= 0
        LambdaNotAboveMinusHalf,   // ultraspherical lambda <= -1/2
        OmegaIdenticallyZero       // monomials
    };
    bool orthogonal = false;
    Reason reason = Reason::OmegaIdenticallyZero;
};

// Sufficient positivity conditions, decided purely over the rationals:
// ultraspherical needs lambda2/T1 > 0 and lambda > -1/2; Chebyshev1 needs
// lambda2/T1 > 0; Hermite needs lambda1/T1 > 0. Monomials are never
// orthogonal (omega_n == 0).
OrthogonalityVerdict check_orthogonality(const FamilyParams& params);

// Checks P_n[x^{n-2j}] == scale_sq^j * Q_n[x^{n-2j}] exactly, where Q is the
// reference family with T_1 normalized so that its own scale is 1. Throws
// ParityViolation if either sequence mixes parities.
bool verify_rescaling(const PolySeq& ps, const FamilyParams& params);

}  // namespace gfc
