#pragma once

#include <complex>

namespace mlsz {

using cplx = std::complex<double>;

// ln Γ(x) for real x > 0.
double ln_gamma(double x);

// ln Γ(x + a) − ln Γ(x), accurate when a ≪ x (no cancellation of two large logs).
double ln_gamma_ratio(double x, double a);

// Complementary error function, erfc(z) = 1 − (2/√π)∫₀^z e^{−v²}dv.
cplx erfc(cplx z);
cplx erf(cplx z);

namespace detail {
// Exposed so the tests can compare the two regimes on their overlap.
cplx erf_taylor(cplx z);
cplx erfc_continued_fraction(cplx z);  // Re z > 0
double stirling_correction(double x);
}  // namespace detail

}  // namespace mlsz
