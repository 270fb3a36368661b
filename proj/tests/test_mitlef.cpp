#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mlsz/error.hpp"
#include "mlsz/mitlef.hpp"
#include "mlsz/special.hpp"
#include "oracle_data.hpp"

using mlsz::cplx;
using mlsz::MLContext;
using mlsz::ScaledComplex;

namespace {

ScaledComplex from_log(double log_abs, double arg) { return ScaledComplex::from_polar(log_abs, arg); }

}  // namespace

TEST_CASE("E_{1/rho} matches high-precision sums") {
    for (const auto& o : oracle::ml) {
        CAPTURE(o.rho);
        CAPTURE(o.w);
        ScaledComplex v = mlsz::ml_series(o.w, o.rho);
        CHECK(mlsz::rel_diff(v, from_log(o.log_abs, o.arg)) < 1e-10);
    }
}

TEST_CASE("rho = 2 reduces to e^{w^2} erfc(-w)") {
    for (int i = 0; i <= 20; ++i) {
        cplx w(-3.0 + 0.4 * i, 0.3 * std::sin(i));
        CAPTURE(w);
        cplx ref = std::exp(w * w) * mlsz::erfc(-w);
        CHECK(std::abs(mlsz::ml_series(w, 2.0).to_complex() - ref) <= 1e-11 * std::abs(ref));
    }
}

TEST_CASE("rho = 1 reduces to exp") {
    for (cplx w : {cplx(0.5, 0.5), cplx(-20.0, 3.0), cplx(25.0, -10.0), cplx(0.0, 30.0)}) {
        CAPTURE(w);
        CHECK(mlsz::rel_diff(mlsz::ml_series(w, 1.0), ScaledComplex::exp(w)) < 1e-12);
    }
}

TEST_CASE("derivative at rho = 2 satisfies E' = 2wE + 2/sqrt(pi)") {
    for (cplx w : {cplx(0.3, 0.1), cplx(-1.5, 0.7), cplx(2.0, -1.0), cplx(-4.0, 0.5)}) {
        CAPTURE(w);
        cplx e = mlsz::ml_series(w, 2.0).to_complex();
        cplx d = mlsz::ml_derivative(w, 2.0).to_complex();
        cplx ref = 2.0 * w * e + 2.0 / std::sqrt(std::numbers::pi);
        CHECK(std::abs(d - ref) <= 1e-10 * std::abs(ref));
    }
}

TEST_CASE("asymptotic expansion is off by about its first omitted term on |w| = 20") {
    for (double rho : {1.5, 2.0, 4.0})
        for (double t : {0.0, 0.3, 1.5, 2.5, 3.1}) {
            cplx w = std::polar(20.0, t);
            // |1/(w²Γ(1−2/ρ))| against |1/(wΓ(1−1/ρ))|; zero at ρ = 2 where Γ has a pole.
            double next = std::fabs(std::tgamma(1.0 - 1.0 / rho) / std::tgamma(1.0 - 2.0 / rho)) / 20.0;
            CAPTURE(rho);
            CAPTURE(t);
            CHECK(mlsz::rel_diff(mlsz::ml_asymptotic(w, rho), mlsz::ml_series(w, rho)) <= 1.1 * next + 10.0 / 400.0);
        }
}

TEST_CASE("radius R_n matches the gamma ratio and its asymptotic form") {
    for (const auto& o : oracle::radius) {
        CAPTURE(o.rho);
        CAPTURE(o.n);
        CHECK(mlsz::radius(o.n, o.rho) == doctest::Approx(o.value).epsilon(1e-13));
        if (o.n >= 30) CHECK(mlsz::radius_asymptotic(o.n, o.rho) == doctest::Approx(o.value).epsilon(2.0 / (o.n * o.n)));
    }
}

TEST_CASE("sections, tails and I_n match high-precision sums") {
    for (const auto& o : oracle::sections) {
        CAPTURE(o.rho);
        CAPTURE(o.n);
        CAPTURE(o.lambda);
        CAPTURE(o.z);
        MLContext ctx(o.rho, o.n, o.lambda);
        CHECK(mlsz::rel_diff(mlsz::section(o.z, ctx), from_log(o.s_log, o.s_arg)) < 1e-11);
        CHECK(mlsz::rel_diff(mlsz::tail(o.z, ctx).value, from_log(o.t_log, o.t_arg)) < 1e-10);
        CHECK(mlsz::rel_diff(mlsz::combo(o.z, ctx), from_log(o.i_log, o.i_arg)) < 1e-10);
    }
}

TEST_CASE("section plus tail is the full function") {
    for (double rho : {1.5, 2.0, 4.0})
        for (int n : {5, 15, 30})
            for (int k = 0; k < 8; ++k) {
                cplx z = std::polar(0.3 + 0.2 * k, 0.8 * k);
                MLContext ctx(rho, n);
                ScaledComplex sum = mlsz::section(z, ctx) + mlsz::tail(z, ctx).value;
                ScaledComplex full = mlsz::ml_series(ctx.radius_n() * z, rho);
                CAPTURE(rho);
                CAPTURE(n);
                CAPTURE(z);
                CHECK(mlsz::rel_diff(sum, full) <= 1e-12 * std::exp(std::max(
                          0.0, mlsz::section(z, ctx).log_mag() - full.log_mag())));
            }
}

TEST_CASE("the three algebraic forms of I_n agree up to their conditioning") {
    const cplx lams[] = {0.0, 1.0, cplx(0.4, -0.3)};
    for (double rho : {1.5, 2.0, 4.0})
        for (int n : {5, 15, 30})
            for (cplx lam : lams)
                for (int k = 0; k < 6; ++k) {
                    cplx z = std::polar(0.4 + 0.25 * k, -2.5 + k);
                    MLContext ctx(rho, n, lam);
                    auto a = mlsz::combo_form(z, ctx, mlsz::ComboForm::mixed);
                    auto b = mlsz::combo_form(z, ctx, mlsz::ComboForm::tail_form);
                    auto c = mlsz::combo_form(z, ctx, mlsz::ComboForm::series_form);
                    // Each form cancels terms as large as max(|s|, |t|, |E|), and s itself sums
                    // terms of total size E(|w|); eps times the largest, relative to |I_n|.
                    double big = std::max({mlsz::section(z, ctx).log_mag(), mlsz::tail(z, ctx).value.log_mag(),
                                           mlsz::ml_series(ctx.radius_n() * z, rho).log_mag(),
                                           mlsz::ml_series(ctx.radius_n() * std::abs(z), rho).log_mag()});
                    double cond = std::exp(std::max(0.0, big - mlsz::combo(z, ctx).log_mag()));
                    CAPTURE(z);
                    CAPTURE(cond);
                    CHECK(mlsz::rel_diff(a, b) < 1e-10 + 1e-14 * cond);
                    CHECK(mlsz::rel_diff(a, c) < 1e-10 + 1e-14 * cond);
                }
}

TEST_CASE("I_n derivative agrees with a central difference") {
    MLContext ctx(2.0, 20, cplx(0.3, 0.1));
    for (cplx z : {cplx(0.5, 0.2), cplx(1.1, -0.4), cplx(-0.7, 0.6)}) {
        const double h = 1e-5;
        cplx fd = (mlsz::combo(z + h, ctx).to_complex() - mlsz::combo(z - h, ctx).to_complex()) / (2.0 * h);
        cplx d = mlsz::combo_derivative(z, ctx).to_complex();
        CAPTURE(z);
        CHECK(std::abs(d - fd) <= 1e-7 * std::abs(d));
    }
}

TEST_CASE("deep cancellation at large n stays accurate") {
    // I_n at n = 100 just inside the Szego curve: the section is ~e^{28} times its value.
    MLContext ctx(2.0, 100, 0.0);
    cplx z(0.6, 0.55);
    ScaledComplex v = mlsz::combo(z, ctx);
    ScaledComplex ref = mlsz::ml_series(ctx.radius_n() * z, 2.0) - mlsz::tail(z, ctx).value;
    CHECK(mlsz::rel_diff(v, ref) < 1e-8);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(MLContext(0.5, 10), mlsz::DomainError);
    CHECK_THROWS_AS(MLContext(2.0, 0), mlsz::DomainError);
    CHECK_THROWS_AS(MLContext(2.0, 5, cplx(NAN, 0.0)), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::radius(0, 2.0), mlsz::DomainError);
}
