#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mlsz/curves.hpp"
#include "mlsz/error.hpp"
#include "mlsz/io.hpp"

using mlsz::cplx;
using mlsz::SzegoBranch;

constexpr double kPi = std::numbers::pi;

TEST_CASE("every sampled S(rho) point lies on u = 0") {
    for (double rho : {1.5, 2.0, 3.0, 4.0}) {
        auto pts = mlsz::szego_curve(rho, 128);
        CHECK(pts.size() == 3 * 128);
        for (const auto& p : pts) {
            if (p.branch == SzegoBranch::arc) {
                CHECK(p.r == doctest::Approx(std::exp(-1.0 / rho)).epsilon(1e-15));
                CHECK(std::fabs(p.phi) >= kPi / (2.0 * rho) - 1e-12);
            } else {
                CAPTURE(rho);
                CAPTURE(p.phi);
                CHECK(std::fabs(mlsz::phase_u(p.z(), rho)) <= 1e-12 * std::max(1.0, std::pow(p.r, rho)));
                CHECK(std::fabs(p.phi) <= kPi / (2.0 * rho) + 1e-15);
            }
        }
    }
}

TEST_CASE("inner and outer branches meet at z = 1") {
    CHECK(mlsz::szego_sigma(0.0, 2.0, SzegoBranch::inner) == doctest::Approx(1.0));
    CHECK(mlsz::szego_sigma(0.0, 2.0, SzegoBranch::outer) == doctest::Approx(1.0));
    double phi = 0.3;
    CHECK(mlsz::szego_sigma(phi, 2.0, SzegoBranch::inner) < 1.0);
    CHECK(mlsz::szego_sigma(phi, 2.0, SzegoBranch::outer) > 1.0);
    // The inner branch ends on the arc |z| = e^{−1/ρ} at the asymptote angle.
    CHECK(mlsz::szego_sigma(kPi / 4.0 - 1e-12, 2.0, SzegoBranch::inner) == doctest::Approx(std::exp(-0.5)).epsilon(1e-5));
}

TEST_CASE("near rho = 1 the inner branch approaches the classical Szego curve") {
    // |z e^{1−z}| = 1 is u = 0 for ρ = 1 in the right half plane.
    for (double phi : {0.2, 0.6, 1.0}) {
        double r = mlsz::szego_sigma(phi, 1.0 + 1e-9, SzegoBranch::inner);
        CHECK(mlsz::classic_szego_indicator(std::polar(r, phi)) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("T(rho) passes through 1 and satisfies r^rho = rho phi / sin(rho phi)") {
    auto pts = mlsz::t_curve(2.0, 65);
    bool has_one = false;
    for (const auto& p : pts) {
        if (p.phi == 0.0) has_one = std::fabs(p.r - 1.0) < 1e-15;
        else CHECK(std::pow(p.r, 2.0) == doctest::Approx(2.0 * p.phi / std::sin(2.0 * p.phi)).epsilon(1e-12));
    }
    CHECK(has_one);
    CHECK(mlsz::t_curve_r(0.0, 3.0) == doctest::Approx(1.0));
}

TEST_CASE("S(rho,h) samples sit on the level u = -h/2") {
    for (double h : {0.01, 0.2}) {
        auto pts = mlsz::s_h_curve(2.0, h, 64);
        REQUIRE(!pts.empty());
        for (const auto& p : pts) {
            CAPTURE(p.phi);
            CHECK(std::fabs(mlsz::phase_u(p.z(), 2.0) + h / 2.0) <= 1e-12 * std::max(1.0, p.r * p.r));
        }
    }
    double phi0 = mlsz::s_h_min_phi(2.0, 0.2);
    CHECK(std::cos(2.0 * phi0) == doctest::Approx(std::exp(-0.1)));
}

TEST_CASE("T meets S(rho,h) at a point on both curves") {
    auto x = mlsz::t_sh_intersection(2.0, 0.2);
    cplx z = std::polar(x.d, x.gamma);
    CHECK(mlsz::phase_u(z, 2.0) == doctest::Approx(-0.1).epsilon(1e-10));
    CHECK(x.d == doctest::Approx(mlsz::t_curve_r(x.gamma, 2.0)).epsilon(1e-10));
}

TEST_CASE("outer branch approaches its asymptotes within the stated bound") {
    double prev = INFINITY;
    for (double r : {10.0, 30.0, 100.0, 300.0, 1000.0}) {
        double phi = mlsz::outer_phi_at_radius(r, 2.0);
        cplx z = std::polar(r, phi);
        CHECK(std::fabs(mlsz::phase_u(z, 2.0)) < 1e-9 * r * r);
        double d = mlsz::asymptote_distance(z, 2.0);
        CHECK(d <= mlsz::asymptote_bound(r, 2.0));
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("asymptote distance geometry") {
    CHECK(mlsz::asymptote_distance(std::polar(3.0, kPi / 4.0), 2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mlsz::asymptote_distance(cplx(1.0, 0.0), 2.0) == doctest::Approx(std::sin(kPi / 4.0)));
    CHECK(mlsz::asymptote_distance(cplx(-1.0, 0.0), 2.0) == doctest::Approx(1.0));  // behind both rays
    CHECK_THROWS_AS(mlsz::asymptote_distance(0.0, 2.0), mlsz::DomainError);
}

TEST_CASE("regions") {
    mlsz::RegionSpec s{mlsz::RegionId::omega1, 0.2, 0.2, 0.2, 2.0};
    CHECK(mlsz::region_contains(0.3, s));
    CHECK_FALSE(mlsz::region_contains(0.9, s));  // within delta2 of 1
    s.id = mlsz::RegionId::omega5;
    CHECK(mlsz::region_contains(2.0, s));
    s.id = mlsz::RegionId::omega4;
    CHECK(mlsz::region_contains(-0.3, s));
    s.id = mlsz::RegionId::omega3;
    CHECK(mlsz::region_contains(-1.0, s));
    CHECK_FALSE(mlsz::region_contains(-0.6, s));  // near the arc
    s.h = -1.0;
    CHECK_THROWS_AS(mlsz::region_contains(1.0, s), mlsz::DomainError);
}

TEST_CASE("curve distance is zero on the samples and positive off them") {
    auto pts = mlsz::szego_curve(2.0, 256);
    for (std::size_t i = 0; i < pts.size(); i += 37) CHECK(mlsz::curve_distance(pts[i].z(), pts) < 1e-14);
    CHECK(mlsz::curve_distance(0.0, pts) == doctest::Approx(std::exp(-0.5)).epsilon(1e-3));
}

TEST_CASE("curve CSV round trip at 15 digits") {
    auto pts = mlsz::szego_curve(2.0, 40);
    std::string csv = mlsz::curve_to_csv(pts);
    auto back = mlsz::curve_from_csv(csv);
    REQUIRE(back.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(back[i].branch == pts[i].branch);
        CHECK(back[i].phi == mlsz::round15(pts[i].phi));
        CHECK(back[i].r == mlsz::round15(pts[i].r));
    }
    CHECK(mlsz::curve_to_csv(back) == csv);
}

TEST_CASE("curve CSV parser rejects malformed input") {
    CHECK_THROWS_AS(mlsz::curve_from_csv(""), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::curve_from_csv("a,b\n"), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::curve_from_csv("branch,phi,r,re,im\ninner,0.1,0.5,1\n"), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::curve_from_csv("branch,phi,r,re,im\nwiggly,0.1,0.5,1,1\n"), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::curve_from_csv("branch,phi,r,re,im\ninner,0.1x,0.5,1,1\n"), mlsz::DomainError);
    CHECK(mlsz::curve_from_csv("branch,phi,r,re,im\r\ninner,0.1,0.5,1,1\r\n").size() == 1);
}

TEST_CASE("curve parameters are validated") {
    CHECK_THROWS_AS(mlsz::szego_curve(1.0, 10), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::szego_curve(2.0, 1), mlsz::DomainError);
    CHECK_THROWS_AS(mlsz::s_h_curve(2.0, -0.1, 10), mlsz::DomainError);
}
