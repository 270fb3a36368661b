#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mlsz/error.hpp"
#include "mlsz/mitlef.hpp"
#include "mp_util.hpp"

namespace mlsz::detail {

// 1/Γ(1+k/ρ) at a handful of working precisions, grown on demand.
struct CoefCache {
    explicit CoefCache(double rho) : rho(rho) {}

    const mpfr_t& get(mpfr_prec_t prec, long k) {
        std::lock_guard<std::mutex> lock(mu);
        auto& tab = tables[prec];
        while (static_cast<long>(tab.size()) <= k) {
            auto c = std::make_unique<Mp>(prec);
            mpfr_set_si(c->v, static_cast<long>(tab.size()), MPFR_RNDN);
            mpfr_div_d(c->v, c->v, rho, MPFR_RNDN);
            mpfr_add_ui(c->v, c->v, 1, MPFR_RNDN);
            mpfr_gamma(c->v, c->v, MPFR_RNDN);
            mpfr_ui_div(c->v, 1, c->v, MPFR_RNDN);
            tab.push_back(std::move(c));
        }
        return tab[static_cast<std::size_t>(k)]->v;
    }

    double rho;
    std::mutex mu;
    std::map<mpfr_prec_t, std::vector<std::unique_ptr<Mp>>> tables;
};

std::shared_ptr<CoefCache> make_coef_cache(double rho) { return std::make_shared<CoefCache>(rho); }

namespace {

struct Pass {
    ScaledComplex value;
    double loss_bits;
};

Pass combo_pass(cplx w, const MLContext& ctx, cplx lam, bool derivative, mpfr_prec_t p) {
    CoefCache& cache = ctx.coef_cache();
    const long n = ctx.n();
    const bool with_tail = lam != cplx(0.0);
    const long start = derivative ? 1 : 0;
    const double kstar = ctx.rho() * std::pow(std::abs(w), ctx.rho());
    const long max_terms = ctx.trunc().max_terms;

    Mp wr(p), wi(p), pr(p), pi(p), tr(p), ti(p), a(p), b(p);
    Mp sr(p), si(p), tsr(p), tsi(p), as(p), at(p);
    mpfr_set_d(wr.v, w.real(), MPFR_RNDN);
    mpfr_set_d(wi.v, w.imag(), MPFR_RNDN);
    mpfr_set_ui(pr.v, 1, MPFR_RNDN);
    for (long k = start;; ++k) {
        if (k > n && !with_tail) break;
        if (k - start > max_terms) throw TruncationError("extended-precision tail exceeded max_terms");
        const mpfr_t& c = cache.get(p, k);
        mpfr_mul(tr.v, pr.v, c, MPFR_RNDN);
        mpfr_mul(ti.v, pi.v, c, MPFR_RNDN);
        if (derivative) {
            mpfr_mul_si(tr.v, tr.v, k, MPFR_RNDN);
            mpfr_mul_si(ti.v, ti.v, k, MPFR_RNDN);
        }
        mpfr_hypot(a.v, tr.v, ti.v, MPFR_RNDN);
        if (k <= n) {
            mpfr_add(sr.v, sr.v, tr.v, MPFR_RNDN);
            mpfr_add(si.v, si.v, ti.v, MPFR_RNDN);
            mpfr_add(as.v, as.v, a.v, MPFR_RNDN);
        } else {
            mpfr_add(tsr.v, tsr.v, tr.v, MPFR_RNDN);
            mpfr_add(tsi.v, tsi.v, ti.v, MPFR_RNDN);
            mpfr_add(at.v, at.v, a.v, MPFR_RNDN);
            if (k > kstar + 2 && mp_log(a.v) < mp_log(at.v) - (static_cast<double>(p) + 16.0) * std::log(2.0))
                break;
        }
        mpfr_mul(a.v, pr.v, wr.v, MPFR_RNDN);
        mpfr_mul(b.v, pi.v, wi.v, MPFR_RNDN);
        mpfr_sub(a.v, a.v, b.v, MPFR_RNDN);
        mpfr_mul(b.v, pr.v, wi.v, MPFR_RNDN);
        mpfr_mul(tr.v, pi.v, wr.v, MPFR_RNDN);
        mpfr_add(pi.v, b.v, tr.v, MPFR_RNDN);
        mpfr_set(pr.v, a.v, MPFR_RNDN);
    }
    Pass out;
    double log_abs = mp_log(as.v);
    if (with_tail) {
        // (1-λ)S - λT
        const cplx u = 1.0 - lam;
        Mp rr(p), ri(p);
        mpfr_mul_d(rr.v, sr.v, u.real(), MPFR_RNDN);
        mpfr_mul_d(a.v, si.v, u.imag(), MPFR_RNDN);
        mpfr_sub(rr.v, rr.v, a.v, MPFR_RNDN);
        mpfr_mul_d(ri.v, si.v, u.real(), MPFR_RNDN);
        mpfr_mul_d(a.v, sr.v, u.imag(), MPFR_RNDN);
        mpfr_add(ri.v, ri.v, a.v, MPFR_RNDN);
        mpfr_mul_d(a.v, tsr.v, lam.real(), MPFR_RNDN);
        mpfr_mul_d(b.v, tsi.v, lam.imag(), MPFR_RNDN);
        mpfr_sub(a.v, a.v, b.v, MPFR_RNDN);
        mpfr_sub(rr.v, rr.v, a.v, MPFR_RNDN);
        mpfr_mul_d(a.v, tsi.v, lam.real(), MPFR_RNDN);
        mpfr_mul_d(b.v, tsr.v, lam.imag(), MPFR_RNDN);
        mpfr_add(a.v, a.v, b.v, MPFR_RNDN);
        mpfr_sub(ri.v, ri.v, a.v, MPFR_RNDN);
        out.value = mp_to_scaled(rr.v, ri.v);
        double ls = log_abs + std::log(std::abs(u) + 1e-300);
        double lt = mp_log(at.v) + std::log(std::abs(lam));
        double hi = std::max(ls, lt);
        log_abs = hi + std::log1p(std::exp(std::min(ls, lt) - hi));
    } else {
        out.value = mp_to_scaled(sr.v, si.v);
    }
    out.loss_bits = out.value.is_zero() ? std::numeric_limits<double>::infinity()
                                        : std::max(0.0, (log_abs - out.value.log_mag()) / std::log(2.0));
    return out;
}

mpfr_prec_t bucket(double bits) {
    long b = static_cast<long>(std::ceil(std::max(bits, 64.0) / 64.0)) * 64;
    return static_cast<mpfr_prec_t>(b);
}

}  // namespace

ScaledComplex combo_precise(cplx w, const MLContext& ctx, cplx lam, bool derivative, double loss_hint_bits) {
    mpfr_prec_t p = bucket(std::min(loss_hint_bits, 4096.0) + 64.0);
    const mpfr_prec_t cap = p + 512;
    Pass r{};
    for (int attempt = 0; attempt < 4; ++attempt) {
        r = combo_pass(w, ctx, lam, derivative, p);
        if (static_cast<double>(p) - r.loss_bits >= 60.0 || p >= cap) return r.value;
        p = std::min(cap, bucket(std::min(r.loss_bits, 4096.0) + 96.0));
    }
    // Only reachable at (or within 2^-cap of) an exact zero.
    return r.value;
}

}  // namespace mlsz::detail
