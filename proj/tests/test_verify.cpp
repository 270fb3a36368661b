#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mlsz/curves.hpp"
#include "mlsz/error.hpp"
#include "mlsz/special.hpp"
#include "mlsz/suites.hpp"
#include "mlsz/verify.hpp"
#include "oracle_data.hpp"

using mlsz::cplx;
using mlsz::MLContext;
using mlsz::Regime;

constexpr double kPi = std::numbers::pi;

TEST_CASE("J1' and J2' magnitudes match high-precision values") {
    for (const auto& o : oracle::j_primes) {
        CAPTURE(o.rho);
        CAPTURE(o.n);
        CAPTURE(o.z);
        auto j = mlsz::j_primes(o.z, MLContext(o.rho, o.n));
        CHECK(j.j1.log_mag() == doctest::Approx(o.j1_log).epsilon(1e-12).scale(1.0));
        CHECK(j.j2.log_mag() == doctest::Approx(o.j2_log).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("Stirling estimates of ln|J'| converge to the exact values") {
    cplx z1 = std::polar(1.5, kPi / 8.0), z2 = std::polar(0.9, 2.0);
    double prev1 = INFINITY, prev2 = INFINITY;
    for (int n : {50, 100, 200, 400}) {
        auto j = mlsz::j_primes(z1, MLContext(2.0, n));
        double d1 = std::fabs(j.j1.log_mag() - mlsz::lemma4_log_j1(z1, n, 2.0));
        auto k = mlsz::j_primes(z2, MLContext(2.0, n));
        double d2 = std::fabs(k.j2.log_mag() - mlsz::lemma4_log_j2(z2, n, 2.0));
        CAPTURE(n);
        CHECK(d1 < prev1);
        CHECK(d2 < prev2);
        prev1 = d1;
        prev2 = d2;
    }
    CHECK(prev1 < 1e-2);
    CHECK(prev2 < 1e-2);
}

TEST_CASE("regime classification") {
    CHECK(mlsz::classify_regime(2.5, 2.0) == Regime::outer_sector);
    CHECK(mlsz::classify_regime(0.3, 2.0) == Regime::inner_sector);
    CHECK(mlsz::classify_regime(-0.5, 2.0) == Regime::exterior);
    CHECK_THROWS_AS(mlsz::classify_regime(1.05, 2.0), mlsz::RegimeError);
    CHECK_THROWS_AS(mlsz::classify_regime(std::polar(1.0, kPi / 4.0 + 0.05), 2.0), mlsz::RegimeError);
    for (auto r : {Regime::outer_sector, Regime::inner_sector, Regime::exterior})
        CHECK(mlsz::regime_from_name(mlsz::regime_name(r)) == r);
    CHECK_THROWS_AS(mlsz::regime_from_name("sideways"), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::theorem1_rhs(0.3, MLContext(2.0, 10), Regime::exterior), mlsz::RegimeError);
}

TEST_CASE("leading-term relative error shrinks with n in every regime") {
    for (cplx z : {cplx(2.5), cplx(0.3), std::polar(0.8, 3.0 * kPi / 4.0)})
        for (cplx lam : {cplx(0.0), cplx(0.5)}) {
            double a = mlsz::theorem1_check(z, MLContext(2.0, 50, lam));
            double b = mlsz::theorem1_check(z, MLContext(2.0, 200, lam));
            CAPTURE(z);
            CAPTURE(lam);
            CHECK(b <= a + 1e-10);
            CHECK(b < 0.05);
        }
}

TEST_CASE("erfc scaling limit at z = 1") {
    CHECK(mlsz::theorem3_point(0.0, 50, 2.0) == cplx(1.0));
    CHECK(std::abs(mlsz::theorem3_point(cplx(0.0, 1.0), 100, 2.0) - cplx(1.0, 0.1)) < 1e-15);
    MLContext ctx(2.0, 200);
    auto p = mlsz::theorem3_pair(0.0, ctx);
    CHECK(p.rhs == cplx(0.5));
    CHECK(std::abs(p.lhs - 0.5) < 0.05);
    // The normalized full function tends to e^{ζ²}.
    CHECK(std::abs(mlsz::theorem3_e_ratio(0.7, MLContext(2.0, 400)) - std::exp(0.49)) < 0.05);
    CHECK_THROWS_AS(mlsz::theorem3_point(0.0, 1, 2.0), mlsz::DomainError);
}

TEST_CASE("Theorem 4 frames place xi where they should") {
    auto in = mlsz::theorem4_frame(0.25, 2.0, 100, mlsz::T4Part::one, mlsz::SzegoBranch::inner);
    CHECK(std::fabs(mlsz::phase_u(in.xi, 2.0)) < 1e-12);
    CHECK(std::abs(in.xi) < 1.0);
    auto out = mlsz::theorem4_frame(0.25, 2.0, 100, mlsz::T4Part::one, mlsz::SzegoBranch::outer);
    CHECK(std::abs(out.xi) > 1.0);
    auto two = mlsz::theorem4_frame(2.0, 2.0, 100, mlsz::T4Part::two);
    CHECK(std::abs(two.xi) == doctest::Approx(std::exp(-0.5)));
    for (const auto& f : {in, out, two}) CHECK((f.tau_n > -kPi && f.tau_n <= kPi));
    // τ_n = (n/ρ)(|ξ|^ρ sin ρφ − ρφ) reduced mod 2π.
    double raw = 50.0 * (std::norm(in.xi) * std::sin(0.5) - 0.5);
    CHECK(std::fabs(std::remainder(in.tau_n - raw, 2.0 * kPi)) < 1e-9);
    CHECK_THROWS_AS(mlsz::theorem4_frame(1.0, 2.0, 100, mlsz::T4Part::one), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::theorem4_frame(0.5, 2.0, 100, mlsz::T4Part::two), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::theorem4_pair(0.0, in, MLContext(2.0, 99), {}), mlsz::DomainError);
}

TEST_CASE("printed and corrected part II sequences differ only in the sign of the shift") {
    auto f = mlsz::theorem4_frame(2.0, 2.0, 200, mlsz::T4Part::two);
    cplx zeta(0.3, -0.4);
    cplx a = mlsz::theorem4_point(zeta, f, {false}), b = mlsz::theorem4_point(zeta, f, {true});
    cplx shift = zeta - cplx(0.0, f.tau_n);
    CHECK(std::abs((a - b) / f.xi - 2.0 * shift / 201.0) < 1e-14);
}

TEST_CASE("Theorem 4 limits are approached for the well-behaved cases") {
    auto f = mlsz::theorem4_frame(2.0, 2.0, 300, mlsz::T4Part::two);
    CHECK(mlsz::theorem4_pair(cplx(0.5, 0.5), f, MLContext(2.0, 300, 1.0)).error() < 0.01);
    auto g = mlsz::theorem4_frame(0.25, 2.0, 300, mlsz::T4Part::one, mlsz::SzegoBranch::outer);
    CHECK(mlsz::theorem4_pair(cplx(0.5, 0.0), g, MLContext(2.0, 300, 0.0)).error() < 0.1);
}

TEST_CASE("K_n quadrature is stable and matches its predicted size") {
    MLContext ctx(2.0, 80);
    auto c = mlsz::default_contour(ctx);
    c.validate(2.0);
    auto a = mlsz::kn_quadrature(0.4, ctx, c);
    auto c2 = c;
    c2.ray_cutoff *= 2.0;
    auto b = mlsz::kn_quadrature(0.4, ctx, c2);
    CHECK(mlsz::rel_diff(a.value(), b.value()) < 1e-10);
    CHECK(a.error < 1e-8 * std::abs(a.normalized));
    CHECK(std::abs(mlsz::kn_ratio(0.4, ctx, c) - 1.0) < 0.03);
    CHECK(std::abs(mlsz::kn_ratio(1.6, ctx, c) - 1.0) < 0.03);
    CHECK_THROWS_AS(mlsz::kn_quadrature(1.0, ctx, c), mlsz::DomainError);  // on the arc |ζ| = R_n
    c.nu = 0.1;
    CHECK_THROWS_AS(c.validate(2.0), mlsz::DomainError);
}

TEST_CASE("verification reports are deterministic and well formed") {
    mlsz::VerifyConfig cfg;
    for (const char* suite : {"lemma1", "kn", "lemma4"}) {
        auto a = mlsz::report_to_json(mlsz::run_suite(suite, cfg)).dump();
        auto b = mlsz::report_to_json(mlsz::run_suite(suite, cfg)).dump();
        CHECK(a == b);
    }
    auto j = mlsz::report_to_json(mlsz::run_suite("lemma1", cfg));
    CHECK(j["pass"] == true);
    CHECK(j["run_config"]["suite"] == "lemma1");
    for (const auto& c : j["checks"])
        for (const char* key : {"check_id", "params", "n_list", "metric_list", "pass"}) CHECK(c.contains(key));
    CHECK(mlsz::suite_names().size() == 7);
}

TEST_CASE("theorem3 suite passes on a short n list") {
    mlsz::VerifyConfig cfg;
    cfg.lambdas = {0.0};
    cfg.n_list = {50, 100, 200};
    auto r = mlsz::run_suite("theorem3", cfg);
    CHECK(r.pass());
}

TEST_CASE("suite configuration is validated") {
    mlsz::VerifyConfig cfg;
    CHECK_THROWS_AS(mlsz::run_suite("theorem9", cfg), mlsz::DomainError);
    cfg.n_list = {1};
    CHECK_THROWS_AS(mlsz::run_suite("kn", cfg), mlsz::DomainError);
    cfg.n_list = {};
    cfg.rho = 1.0;
    CHECK_THROWS_AS(mlsz::run_suite("kn", cfg), mlsz::DomainError);
    cfg.rho = 2.0;
    cfg.h = 0.0;
    CHECK_THROWS_AS(mlsz::run_suite("theorem2", cfg), mlsz::DomainError);
}
