#pragma once

#include <mpfr.h>

#include <climits>
#include <cmath>
#include <limits>

#include "mlsz/scaled.hpp"

namespace mlsz::detail {

struct Mp {
    mpfr_t v;
    explicit Mp(mpfr_prec_t p) { mpfr_init2(v, p); mpfr_set_zero(v, 1); }
    ~Mp() { mpfr_clear(v); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
};

inline double mp_log(const mpfr_t x) {
    if (mpfr_zero_p(x)) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, x, MPFR_RNDN);
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

inline ScaledComplex mp_to_scaled(const mpfr_t re, const mpfr_t im) {
    long er = 0, ei = 0;
    double mr = mpfr_zero_p(re) ? 0.0 : mpfr_get_d_2exp(&er, re, MPFR_RNDN);
    double mi = mpfr_zero_p(im) ? 0.0 : mpfr_get_d_2exp(&ei, im, MPFR_RNDN);
    if (mr == 0.0 && mi == 0.0) return ScaledComplex{};
    long e = std::max(mr == 0.0 ? LONG_MIN / 2 : er, mi == 0.0 ? LONG_MIN / 2 : ei);
    cplx m(std::ldexp(mr, static_cast<int>(std::max(-2000L, er - e))),
           std::ldexp(mi, static_cast<int>(std::max(-2000L, ei - e))));
    return ScaledComplex(m) * ScaledComplex::from_polar(static_cast<double>(e) * std::log(2.0), 0.0);
}

}  // namespace mlsz::detail
