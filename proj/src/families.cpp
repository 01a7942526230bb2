#include "gfc/families.hpp"

#include "gfc/errors.hpp"

namespace gfc {

std::string_view family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Monomial: return "monomial";
        case FamilyKind::Ultraspherical: return "ultraspherical";
        case FamilyKind::Chebyshev1: return "chebyshev1";
        case FamilyKind::Hermite: return "hermite";
    }
    return "?";
}

namespace {
bool is_nonpositive_integer(const Rational& r) {
    return r.is_integer() && r.sign() <= 0;
}
}  // namespace

FamilyParams FamilyParams::ultraspherical(const Rational& lambda1, const Rational& lambda2,
                                          const Rational& t1) {
    if (lambda1.is_zero() || lambda2.is_zero())
        throw InvalidParams("ultraspherical needs lambda1 != 0 and lambda2 != 0");
    if (t1.is_zero()) throw InvalidParams("ultraspherical needs T_1 != 0");
    Rational lambda = lambda1 / lambda2;
    if (is_nonpositive_integer(lambda))
        throw InvalidParams("lambda = lambda1/lambda2 must not be zero or a negative integer");
    FamilyParams p;
    p.kind = FamilyKind::Ultraspherical;
    p.lambda1 = lambda1;
    p.lambda2 = lambda2;
    p.t1 = t1;
    p.lambda = lambda;
    p.scale_sq = Rational(2) * t1 / lambda2;
    return p;
}

FamilyParams FamilyParams::chebyshev1(const Rational& lambda2, const Rational& t1) {
    if (lambda2.is_zero()) throw InvalidParams("chebyshev1 needs lambda2 != 0");
    if (t1.is_zero()) throw InvalidParams("chebyshev1 needs T_1 != 0");
    FamilyParams p;
    p.kind = FamilyKind::Chebyshev1;
    p.lambda2 = lambda2;
    p.t1 = t1;
    p.scale_sq = Rational(2) * t1 / lambda2;
    return p;
}

FamilyParams FamilyParams::hermite(const Rational& lambda1, const Rational& t1) {
    if (lambda1.is_zero()) throw InvalidParams("hermite needs lambda1 != 0");
    if (t1.is_zero()) throw InvalidParams("hermite needs T_1 != 0");
    FamilyParams p;
    p.kind = FamilyKind::Hermite;
    p.lambda1 = lambda1;
    p.t1 = t1;
    p.scale_sq = t1 / lambda1;
    return p;
}

FamilyParams FamilyParams::monomial() {
    FamilyParams p;
    p.kind = FamilyKind::Monomial;
    p.scale_sq = Rational(1);
    return p;
}

std::vector<Rational> alpha_from_lambda(const Rational& lambda1, const Rational& lambda2,
                                        const Rational& alpha1, int n_max) {
    if (n_max < 0) throw OrderTooSmall("alpha sequence needs n_max >= 0");
    std::vector<Rational> alpha;
    alpha.reserve(static_cast<size_t>(n_max) + 1);
    alpha.push_back(Rational(1));
    if (n_max >= 1) alpha.push_back(alpha1);
    for (int n = 2; n <= n_max; ++n)
        alpha.push_back((lambda2 * Rational(n - 1) + lambda1) / Rational(n) * alpha.back());
    return alpha;
}

std::vector<Rational> family_alpha(const FamilyParams& params, int n_max,
                                   const Rational& alpha1) {
    if (alpha1.is_zero()) throw InvalidParams("alpha_1 must be nonzero");
    if (params.kind == FamilyKind::Monomial)
        return std::vector<Rational>(static_cast<size_t>(n_max) + 1, Rational(1));
    return alpha_from_lambda(params.lambda1, params.lambda2, alpha1, n_max);
}

Rational family_omega(const FamilyParams& params, int n) {
    if (n < 1) throw Error("omega index must be >= 1");
    if (params.kind == FamilyKind::Monomial) return Rational(0);
    const Rational& l1 = params.lambda1;
    const Rational& l2 = params.lambda2;
    Rational den = (l2 * Rational(n) + l1) * (l2 * Rational(n - 1) + l1);
    if (den.is_zero()) throw SingularIndex(n);
    return params.t1 / Rational(2) * Rational(n) * (l2 * Rational(n - 1) + Rational(2) * l1) / den;
}

namespace {
// a_k for the family's canonical alpha chain; defined whenever
// lambda2 k + lambda1 != 0.
Rational family_a(const FamilyParams& params, int k) {
    Rational den = params.lambda2 * Rational(k) + params.lambda1;
    if (den.is_zero()) throw SingularIndex(k);
    return params.t1 / Rational(2) * Rational(k + 1) / den;
}
}  // namespace

Rational family_omega_gf10(const FamilyParams& params, int n) {
    if (n < 1) throw Error("omega index must be >= 1");
    if (params.kind == FamilyKind::Monomial) return Rational(0);
    Rational omega = Rational(n) * family_a(params, n);
    if (n > 1) omega -= Rational(n - 1) * family_a(params, n - 1);
    return omega;
}

PolySeq family_polys(const FamilyParams& params, int n_max) {
    if (n_max < 0) throw OrderTooSmall("family_polys needs n_max >= 0");
    PolySeq ps;
    ps.polys.reserve(static_cast<size_t>(n_max) + 1);
    ps.polys.push_back(Poly::constant(Rational(1)));
    if (n_max >= 1) ps.polys.push_back(Poly::variable());
    for (int n = 1; n < n_max; ++n) {
        Rational omega;
        try {
            omega = family_omega(params, n);
        } catch (const SingularIndex&) {
            omega = family_omega_gf10(params, n);
        }
        ps.polys.push_back(ps.at(n).shifted_up(1) - ps.at(n - 1) * omega);
    }
    return ps;
}

OrthogonalityVerdict check_orthogonality(const FamilyParams& params) {
    using Reason = OrthogonalityVerdict::Reason;
    OrthogonalityVerdict v;
    switch (params.kind) {
        case FamilyKind::Monomial:
            v.orthogonal = false;
            v.reason = Reason::OmegaIdenticallyZero;
            break;
        case FamilyKind::Ultraspherical:
            if ((params.lambda2 / params.t1).sign() <= 0) {
                v.orthogonal = false;
                v.reason = Reason::ScaleRatioNotPositive;
            } else if (params.lambda <= Rational(-1, 2)) {
                v.orthogonal = false;
                v.reason = Reason::LambdaNotAboveMinusHalf;
            } else {
                v.orthogonal = true;
                v.reason = Reason::ConditionsMet;
            }
            break;
        case FamilyKind::Chebyshev1:
            v.orthogonal = (params.lambda2 / params.t1).sign() > 0;
            v.reason = v.orthogonal ? Reason::ConditionsMet : Reason::ScaleRatioNotPositive;
            break;
        case FamilyKind::Hermite:
            v.orthogonal = (params.lambda1 / params.t1).sign() > 0;
            v.reason = v.orthogonal ? Reason::ConditionsMet : Reason::ScaleRatioNotPositive;
            break;
    }
    return v;
}

bool verify_rescaling(const PolySeq& ps, const FamilyParams& params) {
    FamilyParams ref = params;
    switch (params.kind) {
        case FamilyKind::Monomial:
            break;  // reference is the monomials themselves
        case FamilyKind::Ultraspherical:
            ref = FamilyParams::ultraspherical(params.lambda1, params.lambda2,
                                               params.lambda2 / Rational(2));
            break;
        case FamilyKind::Chebyshev1:
            ref = FamilyParams::chebyshev1(params.lambda2, params.lambda2 / Rational(2));
            break;
        case FamilyKind::Hermite:
            ref = FamilyParams::hermite(params.lambda1, params.lambda1);
            break;
    }
    PolySeq q = family_polys(ref, ps.order());
    if (!is_symmetric(ps) || !is_symmetric(q))
        throw ParityViolation("rescaling comparison needs parity-pure sequences");

    for (int n = 0; n <= ps.order(); ++n) {
        Rational scale_pow(1);
        for (int j = 0; 2 * j <= n; ++j) {
            if (ps.at(n).coeff(n - 2 * j) != scale_pow * q.at(n).coeff(n - 2 * j)) return false;
            scale_pow *= params.scale_sq;
        }
        // parity-checked above, so the remaining coefficients are zero on
        // both sides
    }
    return true;
}

}  // namespace gfc
