#include <doctest.h>

#include <random>

#include "gfc/errors.hpp"
#include "gfc/families.hpp"
#include "gfc/recurrence.hpp"
#include "oracles.hpp"

using gfc::GenFunSpec;
using gfc::GeneralRecurrence;
using gfc::Poly;
using gfc::PolySeq;
using gfc::Rational;
using gfc::Recurrence;

namespace {

GenFunSpec family_spec(const Rational& l1, const Rational& l2, const Rational& t1, int order,
                       const Rational& alpha1 = Rational(1)) {
    std::vector<Rational> alpha = gfc::alpha_from_lambda(l1, l2, alpha1, order);
    std::vector<Rational> r(static_cast<size_t>(order), Rational(0));
    r[1] = t1;
    return GenFunSpec(std::move(alpha), std::move(r));
}

PolySeq monomials(int order) {
    PolySeq ps;
    for (int n = 0; n <= order; ++n) {
        std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
        c.back() = Rational(1);
        ps.polys.push_back(Poly::from_coeffs(std::move(c)));
    }
    return ps;
}

}  // namespace

TEST_CASE("monomials extract to the all-zero recurrence") {
    Recurrence rec = gfc::extract_ttrr(monomials(6));
    CHECK(rec.passed());
    CHECK(rec.valid_to == 5);
    for (const auto& b : rec.betas) CHECK(b.is_zero());
    for (const auto& w : rec.omegas) CHECK(w.is_zero());
}

TEST_CASE("Legendre spec extracts the classical omegas") {
    GenFunSpec spec = family_spec(Rational(1), Rational(2), Rational(1), 8);
    Recurrence rec = gfc::extract_ttrr(gfc::expand(spec));
    REQUIRE(rec.passed());
    // omega_n = n^2/(4n^2-1), evaluated independently
    CHECK(rec.omegas[1] == Rational(1, 3));
    CHECK(rec.omegas[2] == Rational(4, 15));
    CHECK(rec.omegas[3] == Rational(9, 35));
    for (int n = 1; n <= rec.valid_to; ++n) {
        CHECK(rec.betas[static_cast<size_t>(n)].is_zero());
        CHECK(rec.omegas[static_cast<size_t>(n)] == Rational(n * n, 4 * n * n - 1));
    }
}

TEST_CASE("Hermite spec extracts omega_n = n") {
    GenFunSpec spec = family_spec(Rational(1), Rational(0), Rational(1), 8);
    Recurrence rec = gfc::extract_ttrr(gfc::expand(spec));
    REQUIRE(rec.passed());
    for (int n = 1; n <= rec.valid_to; ++n)
        CHECK(rec.omegas[static_cast<size_t>(n)] == Rational(n));
}

TEST_CASE("Chebyshev spec extracts omega_1 = 1/2 then 1/4") {
    GenFunSpec spec = family_spec(Rational(0), Rational(2), Rational(1), 8);
    Recurrence rec = gfc::extract_ttrr(gfc::expand(spec));
    REQUIRE(rec.passed());
    CHECK(rec.omegas[1] == Rational(1, 2));
    for (int n = 2; n <= rec.valid_to; ++n)
        CHECK(rec.omegas[static_cast<size_t>(n)] == Rational(1, 4));
}

TEST_CASE("a cubic R term breaks the recurrence early") {
    // Hermite alphas with R_3 = 1 on top of R_2 = 1: fails at n = 2 with a
    // constant residual 2 (computed independently by direct expansion).
    GenFunSpec spec = family_spec(Rational(1), Rational(0), Rational(1), 8).with_r(3, Rational(1));
    PolySeq ps = gfc::expand(spec);
    Recurrence rec = gfc::extract_ttrr(ps);
    REQUIRE_FALSE(rec.passed());
    CHECK(rec.failure->n == 2);
    CHECK(rec.failure->n <= 4);
    CHECK(rec.failure->residual == Poly::constant(Rational(2)));
    CHECK(rec.valid_to == 1);
    // coefficients at the failure index are still reported
    CHECK(rec.betas.size() == 3);
    CHECK(rec.omegas.size() == 3);

    // same failure from the independently expanded sequence
    Recurrence rec2 = gfc::extract_ttrr(oracle::naive_expand(spec));
    REQUIRE_FALSE(rec2.passed());
    CHECK(rec2.failure->n == 2);
    CHECK(rec2.failure->residual == rec.failure->residual);
}

TEST_CASE("replaying the extracted recurrence regenerates the sequence") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Rational> alpha{Rational(1)};
        for (int n = 1; n <= 10; ++n) alpha.push_back(oracle::rand_rational(rng, true));
        std::vector<Rational> r(10, Rational(0));
        for (int n = 2; n <= 10; ++n)
            r[static_cast<size_t>(n - 1)] = oracle::rand_rational(rng, false);
        GenFunSpec spec(std::move(alpha), std::move(r));
        PolySeq ps = gfc::expand(spec);
        Recurrence rec = gfc::extract_ttrr(ps);
        PolySeq replay = oracle::replay_ttrr(rec.betas, rec.omegas, rec.valid_to + 1);
        for (int n = 0; n <= rec.valid_to + 1; ++n) CHECK(replay.at(n) == ps.at(n));
    }
}

TEST_CASE("extract_ttrr needs order >= 2") {
    CHECK_THROWS_AS(gfc::extract_ttrr(monomials(1)), gfc::OrderTooSmall);
}

TEST_CASE("extract_general with d = 1 coincides with extract_ttrr") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> alpha{Rational(1)};
        for (int n = 1; n <= 9; ++n) alpha.push_back(oracle::rand_rational(rng, true));
        std::vector<Rational> r(9, Rational(0));
        for (int n = 2; n <= 9; ++n)
            r[static_cast<size_t>(n - 1)] = oracle::rand_rational(rng, false);
        GenFunSpec spec(std::move(alpha), std::move(r));
        PolySeq ps = gfc::expand(spec);
        Recurrence ttrr = gfc::extract_ttrr(ps);
        GeneralRecurrence gen = gfc::extract_general(ps, 1);
        CHECK(gen.valid_to == ttrr.valid_to);
        CHECK(gen.passed() == ttrr.passed());
        if (!gen.passed()) {
            CHECK(gen.failure->n == ttrr.failure->n);
            CHECK(gen.failure->residual == ttrr.failure->residual);
        }
        for (size_t n = 0; n < gen.gammas.size(); ++n) {
            CHECK(gen.gammas[n][0] == ttrr.betas[n]);
            if (n >= 1) CHECK(gen.gammas[n][1] == ttrr.omegas[n]);
        }
    }
}

TEST_CASE("monomials satisfy every higher-order recurrence with zero gammas") {
    for (int d = 0; d <= 3; ++d) {
        GeneralRecurrence rec = gfc::extract_general(monomials(8), d);
        CHECK(rec.passed());
        for (const auto& row : rec.gammas)
            for (const auto& g : row) CHECK(g.is_zero());
    }
}

TEST_CASE("a quartic R term fits a higher-order recurrence") {
    // Hermite alphas with R_4 = 1: the three-term fit fails at n = 3, a
    // four-coefficient fit (d = 3) holds through the full depth.
    GenFunSpec spec =
        family_spec(Rational(1), Rational(0), Rational(1), 10).with_r(4, Rational(1));
    PolySeq ps = gfc::expand(spec);

    GeneralRecurrence d1 = gfc::extract_general(ps, 1);
    REQUIRE_FALSE(d1.passed());
    CHECK(d1.failure->n == 3);
    CHECK(d1.failure->residual == Poly::constant(Rational(6)));

    GeneralRecurrence d2 = gfc::extract_general(ps, 2);
    CHECK_FALSE(d2.passed());
    CHECK(d2.valid_to == 2);

    GeneralRecurrence d3 = gfc::extract_general(ps, 3);
    CHECK(d3.passed());
    CHECK(d3.valid_to == 9);
    CHECK(d3.valid_to > d1.valid_to);

    CHECK(gfc::minimal_order(ps, 4) == 3);
    CHECK_FALSE(gfc::minimal_order(ps, 1).has_value());
}

TEST_CASE("minimal_order conventions") {
    GenFunSpec hermite = family_spec(Rational(1), Rational(0), Rational(1), 8);
    CHECK(gfc::minimal_order(gfc::expand(hermite), 4) == 1);
    CHECK(gfc::minimal_order(monomials(8), 4) == 1);  // degenerate case reports d = 1

    GenFunSpec cubic = hermite.with_r(3, Rational(1));
    CHECK_FALSE(gfc::minimal_order(gfc::expand(cubic), 1).has_value());
}

TEST_CASE("derived sequences match their definitions") {
    GenFunSpec spec = family_spec(Rational(1), Rational(2), Rational(1), 8);
    Recurrence rec = gfc::extract_ttrr(gfc::expand(spec));
    gfc::DerivedSequences ds = gfc::derived_sequences(spec, rec);
    // a_n = (T1/2) alpha_n/alpha_{n+1} = (1/2)(n+1)/(2n+1) for this family
    for (int n = 0; n <= ds.a_max(); ++n)
        CHECK(ds.a[static_cast<size_t>(n)] == Rational(n + 1, 2 * (2 * n + 1)));
    // c_n = (alpha_n/alpha_{n-1}) omega_n
    for (int n = 1; n <= ds.c_max(); ++n)
        CHECK(ds.c[static_cast<size_t>(n)] ==
              spec.alpha(n) / spec.alpha(n - 1) * rec.omegas[static_cast<size_t>(n)]);
    // T_k = R_{2k}
    CHECK(ds.t_max() == 4);
    CHECK(ds.t[1] == Rational(1));
    CHECK(ds.t[2].is_zero());

    GenFunSpec no_r2 = family_spec(Rational(1), Rational(2), Rational(1), 8).with_r(2, Rational(0));
    CHECK_THROWS_AS(gfc::derived_sequences(no_r2, rec), gfc::Error);
}
