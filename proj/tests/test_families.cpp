#include <doctest.h>

#include "gfc/errors.hpp"
#include "gfc/families.hpp"
#include "gfc/recurrence.hpp"
#include "oracles.hpp"

using gfc::FamilyKind;
using gfc::FamilyParams;
using gfc::GenFunSpec;
using gfc::Poly;
using gfc::PolySeq;
using gfc::Rational;

namespace {

GenFunSpec spec_from_params(const FamilyParams& params, int order,
                            const Rational& alpha1 = Rational(1)) {
    std::vector<Rational> alpha = gfc::family_alpha(params, order, alpha1);
    std::vector<Rational> r(static_cast<size_t>(order), Rational(0));
    r[1] = params.t1;
    return GenFunSpec(std::move(alpha), std::move(r));
}

}  // namespace

TEST_CASE("family params validation") {
    CHECK_THROWS_AS(FamilyParams::ultraspherical(Rational(0), Rational(2), Rational(1)),
                    gfc::InvalidParams);
    CHECK_THROWS_AS(FamilyParams::ultraspherical(Rational(-4), Rational(2), Rational(1)),
                    gfc::InvalidParams);  // lambda = -2, a negative integer
    CHECK_THROWS_AS(FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(0)),
                    gfc::InvalidParams);
    CHECK_THROWS_AS(FamilyParams::chebyshev1(Rational(0), Rational(1)), gfc::InvalidParams);
    CHECK_THROWS_AS(FamilyParams::hermite(Rational(0), Rational(1)), gfc::InvalidParams);

    FamilyParams legendre = FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1));
    CHECK(legendre.lambda == Rational(1, 2));
    CHECK(legendre.scale_sq == Rational(1));
    FamilyParams hermite = FamilyParams::hermite(Rational(1), Rational(1));
    CHECK(hermite.scale_sq == Rational(1));
    FamilyParams scaled = FamilyParams::hermite(Rational(1), Rational(4));
    CHECK(scaled.scale_sq == Rational(4));
}

TEST_CASE("family alphas telescope correctly") {
    // Hermite (lambda1 = 1): alpha_n = 1/n!
    auto hermite = gfc::family_alpha(FamilyParams::hermite(Rational(1), Rational(1)), 6);
    Rational factorial(1);
    for (int n = 1; n <= 6; ++n) {
        factorial *= Rational(n);
        CHECK(hermite[static_cast<size_t>(n)] == Rational(1) / factorial);
    }

    // Chebyshev (lambda2 = 2): alpha_n = 2^{n-1}/n
    auto cheb = gfc::family_alpha(FamilyParams::chebyshev1(Rational(2), Rational(1)), 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(cheb[static_cast<size_t>(n)] ==
              gfc::pow(Rational(2), static_cast<unsigned>(n - 1)) / Rational(n));

    // Ultraspherical lambda1 = 1, lambda2 = 2: direct product oracle
    auto ultra =
        gfc::family_alpha(FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1)), 4);
    CHECK(ultra[2] == Rational(3, 2));
    CHECK(ultra[3] == Rational(5, 2));
    Rational prod(1);
    for (int j = 1; j <= 3; ++j) prod *= Rational(1) + Rational(2 * j);
    Rational fact4(24);
    CHECK(ultra[4] == prod / fact4);

    // Monomial convention: all ones
    auto mono = gfc::family_alpha(FamilyParams::monomial(), 4);
    for (const auto& a : mono) CHECK(a == Rational(1));
}

TEST_CASE("closed-form omega values") {
    FamilyParams hermite = FamilyParams::hermite(Rational(1), Rational(1));
    CHECK(gfc::family_omega(hermite, 5) == Rational(5));

    FamilyParams legendre = FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1));
    CHECK(gfc::family_omega(legendre, 3) == Rational(9, 35));

    FamilyParams cheb = FamilyParams::chebyshev1(Rational(2), Rational(1));
    CHECK_THROWS_AS(gfc::family_omega(cheb, 1), gfc::SingularIndex);
    CHECK(gfc::family_omega_gf10(cheb, 1) == Rational(1, 2));
    CHECK(gfc::family_omega(cheb, 2) == Rational(1, 4));

    CHECK(gfc::family_omega(FamilyParams::monomial(), 3).is_zero());
}

TEST_CASE("the telescoped omega agrees with the closed form off the singular set") {
    for (const FamilyParams& p :
         {FamilyParams::hermite(Rational(3, 2), Rational(-2)),
          FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1)),
          FamilyParams::ultraspherical(Rational(-1, 3), Rational(1, 2), Rational(3)),
          FamilyParams::chebyshev1(Rational(-3, 4), Rational(5, 2))}) {
        for (int n = 1; n <= 12; ++n) {
            Rational closed;
            try {
                closed = gfc::family_omega(p, n);
            } catch (const gfc::SingularIndex&) {
                continue;
            }
            CHECK(closed == gfc::family_omega_gf10(p, n));
        }
    }
}

TEST_CASE("family_polys matches the classical recurrences") {
    PolySeq hermite = gfc::family_polys(FamilyParams::hermite(Rational(1), Rational(1)), 4);
    CHECK(hermite.at(4) ==
          Poly::from_coeffs({Rational(3), Rational(0), Rational(-6), Rational(0), Rational(1)}));
    PolySeq want = oracle::monic_hermite(4);
    for (int n = 0; n <= 4; ++n) CHECK(hermite.at(n) == want.at(n));

    PolySeq cheb = gfc::family_polys(FamilyParams::chebyshev1(Rational(2), Rational(1)), 2);
    CHECK(cheb.at(2) == Poly::from_coeffs({Rational(-1, 2), Rational(0), Rational(1)}));

    PolySeq mono = gfc::family_polys(FamilyParams::monomial(), 3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(mono.at(n).degree() == n);
        CHECK(mono.at(n).coeff(n) == Rational(1));
        for (int i = 0; i < n; ++i) CHECK(mono.at(n).coeff(i).is_zero());
    }
}

TEST_CASE("family_polys feeds back through extraction") {
    for (const FamilyParams& p :
         {FamilyParams::hermite(Rational(2), Rational(-1, 2)),
          FamilyParams::ultraspherical(Rational(3, 2), Rational(5, 3), Rational(-2, 7)),
          FamilyParams::chebyshev1(Rational(2), Rational(1))}) {
        PolySeq ps = gfc::family_polys(p, 10);
        gfc::Recurrence rec = gfc::extract_ttrr(ps);
        REQUIRE(rec.passed());
        for (int n = 0; n <= rec.valid_to; ++n) CHECK(rec.betas[static_cast<size_t>(n)].is_zero());
        for (int n = 1; n <= rec.valid_to; ++n) {
            Rational expected;
            try {
                expected = gfc::family_omega(p, n);
            } catch (const gfc::SingularIndex&) {
                expected = gfc::family_omega_gf10(p, n);
            }
            CHECK(rec.omegas[static_cast<size_t>(n)] == expected);
        }
    }
}

TEST_CASE("the generating function round trip is exact") {
    // expand(spec built from the family alphas with R_2 = T_1) equals
    // family_polys, coefficient for coefficient.
    for (const FamilyParams& p :
         {FamilyParams::hermite(Rational(1), Rational(1)),
          FamilyParams::hermite(Rational(2), Rational(-1, 2)),
          FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1)),
          FamilyParams::ultraspherical(Rational(-1, 3), Rational(1, 2), Rational(3)),
          FamilyParams::chebyshev1(Rational(2), Rational(1)),
          FamilyParams::chebyshev1(Rational(-3, 4), Rational(5, 2))}) {
        const int order = 10;
        PolySeq expanded = gfc::expand(spec_from_params(p, order));
        PolySeq direct = gfc::family_polys(p, order);
        for (int n = 0; n <= order; ++n) CHECK(expanded.at(n) == direct.at(n));
    }
    // alpha_1 is a free choice and must not change the polynomials
    FamilyParams legendre = FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1));
    PolySeq scaled = gfc::expand(spec_from_params(legendre, 8, Rational(4, 5)));
    PolySeq direct = gfc::family_polys(legendre, 8);
    for (int n = 0; n <= 8; ++n) CHECK(scaled.at(n) == direct.at(n));
}

TEST_CASE("orthogonality verdicts follow the positivity conditions") {
    using Reason = gfc::OrthogonalityVerdict::Reason;
    auto legendre = gfc::check_orthogonality(
        FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1)));
    CHECK(legendre.orthogonal);
    CHECK(legendre.reason == Reason::ConditionsMet);

    CHECK(gfc::check_orthogonality(FamilyParams::hermite(Rational(1), Rational(1))).orthogonal);

    auto low_lambda = gfc::check_orthogonality(
        FamilyParams::ultraspherical(Rational(-3, 2), Rational(2), Rational(1)));
    CHECK_FALSE(low_lambda.orthogonal);  // lambda = -3/4 <= -1/2
    CHECK(low_lambda.reason == Reason::LambdaNotAboveMinusHalf);

    auto bad_scale = gfc::check_orthogonality(
        FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(-1)));
    CHECK_FALSE(bad_scale.orthogonal);
    CHECK(bad_scale.reason == Reason::ScaleRatioNotPositive);

    auto mono = gfc::check_orthogonality(FamilyParams::monomial());
    CHECK_FALSE(mono.orthogonal);
    CHECK(mono.reason == Reason::OmegaIdenticallyZero);
}

TEST_CASE("omega positivity under the orthogonality conditions") {
    std::vector<FamilyParams> grid;
    for (const Rational& lambda : {Rational(-1, 4), Rational(1, 2), Rational(1), Rational(7, 2)})
        for (const Rational& l2 : {Rational(1, 2), Rational(2)})
            grid.push_back(FamilyParams::ultraspherical(lambda * l2, l2, l2));  // lambda2/T1 = 1
    grid.push_back(FamilyParams::chebyshev1(Rational(2), Rational(3)));
    grid.push_back(FamilyParams::hermite(Rational(1, 3), Rational(5)));
    grid.push_back(FamilyParams::hermite(Rational(-2), Rational(-1)));
    for (const auto& p : grid) {
        REQUIRE(gfc::check_orthogonality(p).orthogonal);
        for (int n = 1; n <= 50; ++n) {
            Rational omega;
            try {
                omega = gfc::family_omega(p, n);
            } catch (const gfc::SingularIndex&) {
                omega = gfc::family_omega_gf10(p, n);
            }
            CHECK(omega.sign() > 0);
        }
    }
}

TEST_CASE("rescaling verification") {
    const int order = 8;
    FamilyParams legendre = FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(1));
    PolySeq legendre_ps = gfc::expand(spec_from_params(legendre, order));
    CHECK(gfc::verify_rescaling(legendre_ps, legendre));  // scale_sq = 1
    for (int n = 0; n <= order; ++n)
        CHECK(legendre_ps.at(n) == oracle::monic_legendre(order).at(n));

    FamilyParams hermite = FamilyParams::hermite(Rational(1), Rational(1));
    PolySeq hermite_ps = gfc::expand(spec_from_params(hermite, order));
    CHECK(gfc::verify_rescaling(hermite_ps, hermite));

    // cross-family comparison fails
    CHECK_FALSE(gfc::verify_rescaling(legendre_ps, hermite));

    // genuinely rescaled instance: T_1 = 4 gives scale_sq = 4
    FamilyParams scaled = FamilyParams::ultraspherical(Rational(1), Rational(2), Rational(4));
    PolySeq scaled_ps = gfc::expand(spec_from_params(scaled, order));
    CHECK(scaled.scale_sq == Rational(4));
    CHECK(gfc::verify_rescaling(scaled_ps, scaled));
    // spot check the coefficient scaling against the reference family
    CHECK(scaled_ps.at(2).coeff(0) == Rational(4) * oracle::monic_legendre(order).at(2).coeff(0));

    // mixed parity input is rejected
    PolySeq bad;
    bad.polys.push_back(Poly::constant(Rational(1)));
    bad.polys.push_back(Poly::variable());
    bad.polys.push_back(Poly::from_coeffs({Rational(0), Rational(1), Rational(1)}));
    CHECK_THROWS_AS(gfc::verify_rescaling(bad, legendre), gfc::ParityViolation);
}
