#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mlsz/error.hpp"
#include "mlsz/special.hpp"
#include "oracle_data.hpp"

using mlsz::cplx;

TEST_CASE("ln_gamma matches high-precision values") {
    for (const auto& o : oracle::ln_gamma) {
        CAPTURE(o.x);
        CHECK(std::fabs(mlsz::ln_gamma(o.x) - o.value) <= 2e-14 * std::max(1.0, std::fabs(o.value)));
    }
}

TEST_CASE("ln_gamma_ratio agrees with the difference of logs where that is safe") {
    for (double x : {0.7, 3.0, 25.5, 400.0})
        for (double a : {0.25, 0.5, 1.0 / 3.0}) {
            CAPTURE(x);
            CAPTURE(a);
            double direct = mlsz::ln_gamma(x + a) - mlsz::ln_gamma(x);
            CHECK(mlsz::ln_gamma_ratio(x, a) == doctest::Approx(direct).epsilon(1e-11));
        }
    // Γ(x+1)/Γ(x) = x, even far out where the two logs are huge.
    CHECK(std::exp(mlsz::ln_gamma_ratio(1e8, 1.0)) == doctest::Approx(1e8).epsilon(1e-13));
}

TEST_CASE("ln_gamma rejects non-positive arguments") {
    CHECK_THROWS_AS(mlsz::ln_gamma(0.0), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::ln_gamma(-1.5), mlsz::DomainError);
}

TEST_CASE("erfc matches high-precision values") {
    for (const auto& o : oracle::erfc) {
        CAPTURE(o.z);
        cplx v = mlsz::erfc(o.z);
        CHECK(std::abs(v - o.value) <= 1e-13 * std::abs(o.value));
    }
}

TEST_CASE("erfc reflection and conjugate symmetry") {
    for (cplx z : {cplx(0.4, 0.3), cplx(-2.0, 1.5), cplx(3.0, -0.2), cplx(0.0, 2.0), cplx(-0.1, -0.1)}) {
        CAPTURE(z);
        CHECK(std::abs(mlsz::erfc(z) + mlsz::erfc(-z) - 2.0) <= 1e-13 * (1.0 + std::abs(mlsz::erfc(-z))));
        CHECK(std::abs(mlsz::erfc(std::conj(z)) - std::conj(mlsz::erfc(z))) <= 1e-15 * std::abs(mlsz::erfc(z)));
        CHECK(std::abs(mlsz::erf(z) + mlsz::erfc(z) - 1.0) <= 1e-13 * (1.0 + std::abs(mlsz::erf(z))));
    }
}

TEST_CASE("erf regimes agree on their overlap") {
    for (double r : {1.5, 2.0, 2.5})
        for (double t : {-1.0, -0.3, 0.0, 0.4, 1.2}) {
            cplx z = std::polar(r, t);
            CAPTURE(z);
            cplx a = 1.0 - mlsz::detail::erf_taylor(z);
            cplx b = mlsz::detail::erfc_continued_fraction(z);
            CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b)));
        }
}

TEST_CASE("erfc on the real line") {
    CHECK(mlsz::erfc(cplx(0.0)).real() == doctest::Approx(1.0));
    CHECK(mlsz::erfc(cplx(1.0)).real() == doctest::Approx(std::erfc(1.0)).epsilon(1e-14));
    CHECK(mlsz::erfc(cplx(-2.0)).real() == doctest::Approx(std::erfc(-2.0)).epsilon(1e-14));
    CHECK(mlsz::erfc(cplx(10.0)).real() == doctest::Approx(std::erfc(10.0)).epsilon(1e-12));
}
