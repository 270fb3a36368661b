#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mlsz/quadrature.hpp"

using mlsz::cplx;

TEST_CASE("GK15 on smooth integrands") {
    auto r = mlsz::integrate_gk15([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, std::numbers::pi, 1e-14, 1e-14);
    CHECK(r.converged);
    CHECK(std::abs(r.value - cplx(0.0, 2.0)) < 1e-13);
    auto p = mlsz::integrate_gk15([](double x) { return cplx(x * x); }, 0.0, 1.0, 1e-15, 1e-15);
    CHECK(std::abs(p.value - 1.0 / 3.0) < 1e-15);
    CHECK(p.evaluations == 15);
}

TEST_CASE("GK15 adapts to a peaked integrand") {
    auto r = mlsz::integrate_gk15([](double x) { return cplx(1.0 / (1e-4 + x * x)); }, -1.0, 1.0, 1e-12, 1e-12);
    double exact = 2.0 / 1e-2 * std::atan(1.0 / 1e-2);
    CHECK(r.converged);
    CHECK(std::abs(r.value - exact) < 1e-9 * exact);
    CHECK(r.error < 1e-8 * exact);
}
