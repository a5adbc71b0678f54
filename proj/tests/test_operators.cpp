#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracdisk/operators.hpp"
#include "fracdisk/rng.hpp"
#include "fracdisk/series.hpp"

#include <cmath>

using namespace fracdisk;

namespace {

FracPowerSeries random_class_series(Rng& rng, double alpha, double mu, int order) {
    CoeffVec c(order);
    c(0) = 1.0;
    double bound = 1.0;
    for (int n = 2; n <= order; ++n) {
        bound = bound * (alpha + n - 2) / (n - 1);
        c(n - 1) = bound * rng.uniform() * rng.unit_complex();
    }
    return FracPowerSeries(mu, std::move(c));
}

} // namespace

TEST_CASE("ruscheweyh transform") {
    Rng rng(5);
    const auto f = random_class_series(rng, 2.0, 1.5, 12);

    SUBCASE("beta = 0 is the identity") {
        const auto g = ruscheweyh_frac(f, 0.0);
        for (int n = 1; n <= f.order(); ++n)
            CHECK(g.coeff(n) == f.coeff(n));
    }
    SUBCASE("identity series is fixed") {
        const auto id = FracPowerSeries::identity(1.0, 6);
        const auto g = ruscheweyh_frac(id, 3.0);
        for (int n = 1; n <= 6; ++n)
            CHECK(g.coeff(n) == id.coeff(n));
    }
    SUBCASE("all-ones generator maps to the Koebe coefficients") {
        const auto g = ruscheweyh_frac(koebe_frac(1.0, 1.0, 4), 1.0);
        for (int n = 1; n <= 4; ++n)
            CHECK(g.coeff(n) == Complex(double(n), 0.0));
    }
    SUBCASE("negative beta is rejected") {
        CHECK_THROWS_AS(ruscheweyh_frac(f, -0.5), std::domain_error);
    }
    SUBCASE("agrees with the convolution definition coefficient-exactly") {
        for (double beta : {0.5, 1.0, 2.0}) {
            const auto direct = ruscheweyh_frac(f, beta);
            const auto conv = hadamard(koebe_frac(beta + 1.0, f.mu(), f.order()), f);
            for (int n = 1; n <= f.order(); ++n)
                CHECK(direct.coeff(n) == conv.coeff(n));
        }
    }
}

TEST_CASE("noor transform") {
    SUBCASE("beta = 0 is the identity") {
        Rng rng(6);
        const auto f = random_class_series(rng, 1.5, 1.0, 10);
        const auto g = noor_frac(f, 0.0);
        for (int n = 1; n <= f.order(); ++n)
            CHECK(g.coeff(n) == f.coeff(n));
    }
    SUBCASE("all-ones generator maps to 1/n") {
        const auto g = noor_frac(koebe_frac(1.0, 1.0, 4), 1.0);
        CHECK(std::abs(g.coeff(2) - Complex(0.5, 0.0)) < 1e-16);
        CHECK(std::abs(g.coeff(3) - Complex(1.0 / 3.0, 0.0)) < 1e-16);
        CHECK(std::abs(g.coeff(4) - Complex(0.25, 0.0)) < 1e-16);
    }
    SUBCASE("inverts ruscheweyh") {
        Rng rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_class_series(rng, rng.uniform(1.0, 3.0), 1.0, 64);
            for (double beta : {0.5, 1.0, 2.0, 5.0}) {
                const auto g = noor_frac(ruscheweyh_frac(f, beta), beta);
                for (int n = 1; n <= f.order(); ++n)
                    CHECK(std::abs(g.coeff(n) - f.coeff(n)) <=
                          1e-13 * std::max(1.0, std::abs(f.coeff(n))));
            }
        }
    }
    SUBCASE("generator and its noor transform convolve to the all-ones series") {
        // F_beta * F_beta^{-1} leaves the geometric generator
        const double mu = 1.5;
        const int order = 24;
        for (double beta : {0.5, 1.0, 3.0}) {
            const auto f_beta = koebe_frac(beta + 1.0, mu, order);
            const auto f_beta_inv = noor_frac(koebe_frac(1.0, mu, order), beta);
            const auto conv = hadamard(f_beta, f_beta_inv);
            for (int n = 1; n <= order; ++n)
                CHECK(std::abs(conv.coeff(n) - Complex(1.0, 0.0)) < 1e-13);
        }
    }
    SUBCASE("weight is strictly decreasing in beta") {
        for (int n : {2, 5, 17, 64}) {
            double prev = noor_weight(n, 0.0);
            for (double beta = 0.25; beta <= 10.0; beta += 0.25) {
                const double w = noor_weight(n, beta);
                CHECK(w < prev);
                prev = w;
            }
        }
    }
}

TEST_CASE("z noor derivative") {
    SUBCASE("all-ones generator, beta = 1, mu = 1: unit weights") {
        const auto g = z_noor_derivative(koebe_frac(1.0, 1.0, 3), 1.0);
        for (int n = 1; n <= 3; ++n)
            CHECK(std::abs(g.coeff(n) - Complex(1.0, 0.0)) < 1e-15);
    }
    SUBCASE("identity series is fixed") {
        const auto id = FracPowerSeries::identity(2.0, 5);
        const auto g = z_noor_derivative(id, 4.0);
        for (int n = 1; n <= 5; ++n)
            CHECK(g.coeff(n) == id.coeff(n));
    }
    SUBCASE("factorial and Gamma forms of the weight agree") {
        for (int i = 0; i < 50; ++i) {
            const double beta = 10.0 * i / 49.0;
            for (int n = 2; n <= 64; ++n) {
                const double a = z_noor_weight(n, 1.5, beta);
                const double b = z_noor_weight_gamma(n, 1.5, beta);
                CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
            }
        }
    }
    SUBCASE("differentiated leading term evaluates to z (I F)'") {
        Rng rng(9);
        const auto f = random_class_series(rng, 2.0, 1.7, 20);
        const double beta = 1.25;
        const CoeffVec lit = z_noor_derivative_coeffs(f, beta, LeadingTerm::differentiated);
        CHECK(lit(0) == Complex(1.7, 0.0));
        const auto g = noor_frac(f, beta);
        for (double r : {0.2, 0.5, 0.8}) {
            const Complex z = r * rng.unit_complex();
            const Complex direct = z * evaluate_d1(g, z);
            const Complex viac = eval_raw(f.mu(), lit, z, 0);
            CHECK(std::abs(direct - viac) <= 1e-12 * std::max(1.0, std::abs(direct)));
        }
        // the printed form differs from the literal one only in the leading term
        const CoeffVec printed = z_noor_derivative_coeffs(f, beta, LeadingTerm::as_printed);
        CHECK(printed(0) == Complex(1.0, 0.0));
        for (int n = 2; n <= f.order(); ++n)
            CHECK(printed(n - 1) == lit(n - 1));
    }
}

TEST_CASE("psi weight") {
    CHECK(psi_weight(2, 2.0, 4.0, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
    for (double b : {1.0, 2.0, 3.5, 9.0})
        CHECK(psi_weight(2, b, b, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(psi_weight(3, 1.0, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(psi_weight(1, 2.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(psi_weight(2, 0.5, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(psi_weight(2, 2.0, 2.0, 0.0), std::domain_error);

    SUBCASE("non-increasing whenever alpha <= beta") {
        for (auto [alpha, beta] : {std::pair{1.0, 1.0}, {1.0, 4.0}, {2.0, 2.5}, {3.0, 3.0}}) {
            double prev = psi_weight(2, alpha, beta, 1.0);
            for (int n = 3; n <= 64; ++n) {
                const double w = psi_weight(n, alpha, beta, 1.0);
                CHECK(w <= prev * (1.0 + 1e-14));
                prev = w;
            }
        }
    }
    SUBCASE("monotonicity genuinely fails for alpha much larger than beta") {
        // documents that the non-increasing claim needs alpha <= beta
        CHECK(psi_weight(3, 5.0, 1.0, 1.0) > psi_weight(2, 5.0, 1.0, 1.0));
    }
}
