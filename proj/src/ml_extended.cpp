#include <mpfr.h>

#include <cmath>
#include <limits>

#include "mlsz/error.hpp"
#include "mlsz/mitlef.hpp"
#include "mlsz/special.hpp"
#include "mp_util.hpp"

namespace mlsz::detail {

namespace {

struct Result {
    ScaledComplex value;
    double log_abs_sum;
};

// One pass of the series at precision p.
Result series_at(cplx w, double rho, bool derivative, mpfr_prec_t p, long max_terms) {
    Mp sr(p), si(p), pr(p), pi(p), t1(p), t2(p), g(p), tr(p), ti(p), wr(p), wi(p), absum(p);
    mpfr_set_d(wr.v, w.real(), MPFR_RNDN);
    mpfr_set_d(wi.v, w.imag(), MPFR_RNDN);
    mpfr_set_ui(pr.v, 1, MPFR_RNDN);  // running power w^j
    mpfr_set_zero(pi.v, 1);
    const long start = derivative ? 1 : 0;
    const double kstar = rho * std::pow(std::abs(w), rho);
    double best_log = -std::numeric_limits<double>::infinity();
    for (long k = start;; ++k) {
        if (k - start > max_terms) throw TruncationError("extended-precision series exceeded max_terms");
        // coefficient (k or 1) / Γ(1 + k/ρ)
        mpfr_set_si(g.v, k, MPFR_RNDN);
        mpfr_div_d(g.v, g.v, rho, MPFR_RNDN);
        mpfr_add_ui(g.v, g.v, 1, MPFR_RNDN);
        mpfr_gamma(g.v, g.v, MPFR_RNDN);
        mpfr_div(tr.v, pr.v, g.v, MPFR_RNDN);
        mpfr_div(ti.v, pi.v, g.v, MPFR_RNDN);
        if (derivative) {
            mpfr_mul_si(tr.v, tr.v, k, MPFR_RNDN);
            mpfr_mul_si(ti.v, ti.v, k, MPFR_RNDN);
        }
        mpfr_add(sr.v, sr.v, tr.v, MPFR_RNDN);
        mpfr_add(si.v, si.v, ti.v, MPFR_RNDN);
        mpfr_hypot(t1.v, tr.v, ti.v, MPFR_RNDN);
        mpfr_add(absum.v, absum.v, t1.v, MPFR_RNDN);
        long ex = 0;
        double tm = mpfr_get_d_2exp(&ex, t1.v, MPFR_RNDN);
        double tlog = tm == 0.0 ? -std::numeric_limits<double>::infinity()
                                : std::log(std::fabs(tm)) + ex * std::log(2.0);
        best_log = std::max(best_log, tlog);
        if (k > kstar + 4) {
            mpfr_hypot(t2.v, sr.v, si.v, MPFR_RNDN);
            double sm = mpfr_get_d_2exp(&ex, t2.v, MPFR_RNDN);
            double slog = sm == 0.0 ? best_log : std::log(std::fabs(sm)) + ex * std::log(2.0);
            if (tlog < slog - 46.0) break;  // e^{-46} ~ 1e-20
        }
        // advance power: p *= w
        mpfr_mul(t1.v, pr.v, wr.v, MPFR_RNDN);
        mpfr_mul(t2.v, pi.v, wi.v, MPFR_RNDN);
        mpfr_sub(t1.v, t1.v, t2.v, MPFR_RNDN);
        mpfr_mul(t2.v, pr.v, wi.v, MPFR_RNDN);
        mpfr_mul(ti.v, pi.v, wr.v, MPFR_RNDN);
        mpfr_add(pi.v, t2.v, ti.v, MPFR_RNDN);
        mpfr_set(pr.v, t1.v, MPFR_RNDN);
    }
    Result out;
    out.value = mp_to_scaled(sr.v, si.v);
    long ea = 0;
    double ma = mpfr_get_d_2exp(&ea, absum.v, MPFR_RNDN);
    out.log_abs_sum = std::log(ma) + ea * std::log(2.0);
    return out;
}

}  // namespace

ScaledComplex ml_extended(cplx w, double rho, bool derivative) {
    if (w == cplx(0.0)) return ScaledComplex(derivative ? std::exp(-ln_gamma(1.0 + 1.0 / rho)) : 1.0);
    const long max_terms = 2000000;
    // First guess assumes the result is of order one.
    double lr = std::log(std::abs(w));
    double guess = std::max(0.0, std::exp(rho * lr));  // ~ log Σ|t|
    mpfr_prec_t p = 64 + static_cast<mpfr_prec_t>(guess / std::log(2.0));
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (p > 16384) break;
        Result r = series_at(w, rho, derivative, p, max_terms);
        double loss_bits = r.value.is_zero() ? static_cast<double>(p)
                                             : (r.log_abs_sum - r.value.log_mag()) / std::log(2.0);
        if (static_cast<double>(p) - loss_bits >= 60.0) return r.value;
        p = static_cast<mpfr_prec_t>(loss_bits + 96.0);
    }
    throw TruncationError("extended-precision series could not resolve the cancellation");
}

}  // namespace mlsz::detail
