#pragma once

#include <complex>
#include <functional>

namespace mlsz {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

// Globally adaptive Gauss–Kronrod (7/15) for a complex-valued integrand on [a, b].
QuadResult integrate_gk15(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                          double rel_tol, int max_intervals = 4000);

}  // namespace mlsz
