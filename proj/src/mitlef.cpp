#include "mlsz/mitlef.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "mlsz/error.hpp"
#include "mlsz/special.hpp"

namespace mlsz {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Accept a double-precision series when Σ|t| / |Σt| stays below this.
const double kMaxLoss = std::log(300.0);

void check_rho(double rho) {
    if (!(rho >= 1.0) || !std::isfinite(rho)) throw DomainError("rho must be a finite number >= 1");
}

void check_finite(cplx w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("argument must be finite");
}

// Σ_{k=k0}^{k1} exp(logc(k) + (k - shift) log r) e^{i (k - shift) θ}, normalized by the
// largest term.  k1 < 0 means an infinite series with the truncation rule of `trunc`.
template <class LogCoef>
detail::SeriesSum normalized_sum(cplx w, long k0, long k1, long shift, LogCoef logc,
                                 const TruncationSpec& trunc) {
    const double logr = std::log(std::abs(w));
    const double theta = std::arg(w);
    thread_local std::vector<double> logs;
    logs.clear();
    double top = kNegInf;
    long top_k = k0;
    const double cut = std::log(trunc.rel_tol);
    int quiet = 0;
    for (long k = k0;; ++k) {
        if (k1 >= 0 && k > k1) break;
        if (k1 < 0 && k - k0 >= trunc.max_terms)
            throw TruncationError("series did not converge within max_terms");
        long p = k - shift;
        double l = logc(k) + (p == 0 ? 0.0 : static_cast<double>(p) * logr);
        logs.push_back(l);
        if (l >= top) {
            top = l;
            top_k = k;
        }
        if (k1 < 0 && k > top_k) {
            quiet = (l < top + cut) ? quiet + 1 : 0;
            if (quiet >= trunc.tail_margin) break;
        }
    }
    detail::SeriesSum out;
    out.terms = static_cast<long>(logs.size());
    if (top == kNegInf) {
        out.value = ScaledComplex{};
        out.log_abs_sum = kNegInf;
        return out;
    }
    cplx s = 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        double m = std::exp(logs[i] - top);
        if (m == 0.0) continue;
        double ph = static_cast<double>(k0 + static_cast<long>(i) - shift) * theta;
        s += cplx(m * std::cos(ph), m * std::sin(ph));
        a += m;
    }
    out.value = ScaledComplex::from_polar(top, 0.0) * ScaledComplex(s);
    out.log_abs_sum = top + std::log(a);
    return out;
}

double series_loss(const detail::SeriesSum& s) {
    if (s.value.is_zero()) return std::numeric_limits<double>::infinity();
    return s.log_abs_sum - s.value.log_mag();
}

bool series_affordable(cplx w, double rho, const TruncationSpec& trunc) {
    double est = rho * std::pow(std::abs(w), rho);
    return est + 4.0 * trunc.tail_margin < 0.5 * static_cast<double>(trunc.max_terms);
}

ScaledComplex evaluate(cplx w, double rho, bool derivative, const TruncationSpec& trunc) {
    check_rho(rho);
    check_finite(w);
    trunc.validate();
    if (w == cplx(0.0)) return ScaledComplex(derivative ? std::exp(-ln_gamma(1.0 + 1.0 / rho)) : 1.0);
    if (series_affordable(w, rho, trunc)) {
        auto s = detail::power_series(w, rho, 1.0, derivative, trunc);
        if (series_loss(s) <= kMaxLoss) return s.value;
    }
    if (rho >= 1.05) return detail::ml_contour(w, rho, derivative);
    return detail::ml_extended(w, rho, derivative);
}

}  // namespace

void TruncationSpec::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) throw DomainError("rel_tol must lie in (0, 1e-6]");
    if (max_terms < 16) throw DomainError("max_terms must be >= 16");
    if (tail_margin < 1) throw DomainError("tail_margin must be >= 1");
}

MLContext::MLContext(double rho, int n, cplx lambda, TruncationSpec trunc)
    : rho_(rho), n_(n), lambda_(lambda), trunc_(trunc) {
    check_rho(rho);
    trunc_.validate();
    if (n < 1) throw DomainError("n must be >= 1");
    check_finite(lambda);
    rn_ = radius(n, rho);
    rn1_ = radius(n + 1, rho);
    lc_.resize(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) lc_[static_cast<std::size_t>(k)] = -ln_gamma(1.0 + k / rho);
    log_norm_ = ln_gamma(1.0 + n / rho) - n * std::log(rn_);
    cache_ = detail::make_coef_cache(rho);
}

double radius(int n, double rho) {
    check_rho(rho);
    if (n < 1) throw DomainError("radius requires n >= 1");
    return std::exp(ln_gamma_ratio(1.0 + (n - 1) / rho, 1.0 / rho));
}

double radius_asymptotic(int n, double rho) {
    check_rho(rho);
    if (n < 1) throw DomainError("radius_asymptotic requires n >= 1");
    return std::pow(n / rho, 1.0 / rho) * (1.0 + (rho - 1.0) / (2.0 * rho * n));
}

MaxTermInfo max_term(double r, double rho, const TruncationSpec& trunc) {
    check_rho(rho);
    trunc.validate();
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("max_term requires finite r > 0");
    const double logr = std::log(r);
    MaxTermInfo best{0.0, 0};
    for (long k = 1;; ++k) {
        if (k >= trunc.max_terms) throw TruncationError("maximal term not bracketed within max_terms");
        double l = k * logr - ln_gamma(1.0 + k / rho);
        if (l >= best.mu_log) best = {l, k};  // ties go to the larger index
        if (k >= best.nu + trunc.tail_margin) break;
    }
    return best;
}

namespace detail {

SeriesSum power_series(cplx w, double rho, double mu, bool derivative, const TruncationSpec& trunc) {
    if (w == cplx(0.0)) {
        SeriesSum s;
        double c = derivative ? std::exp(-ln_gamma(1.0 + 1.0 / rho)) : std::exp(-ln_gamma(mu));
        s.value = ScaledComplex(c);
        s.log_abs_sum = std::log(c);
        s.terms = 1;
        return s;
    }
    if (derivative)
        return normalized_sum(
            w, 1, -1, 1, [rho](long k) { return std::log(static_cast<double>(k)) - ln_gamma(1.0 + k / rho); },
            trunc);
    return normalized_sum(w, 0, -1, 0, [rho, mu](long k) { return -ln_gamma(mu + k / rho); }, trunc);
}

}  // namespace detail

ScaledComplex ml_series(cplx w, double rho, const TruncationSpec& trunc) {
    return evaluate(w, rho, false, trunc);
}

ScaledComplex ml_derivative(cplx w, double rho, const TruncationSpec& trunc) {
    return evaluate(w, rho, true, trunc);
}

ScaledComplex ml_asymptotic(cplx w, double rho) {
    check_rho(rho);
    check_finite(w);
    if (!(rho > 1.0)) throw DomainError("ml_asymptotic requires rho > 1");
    if (std::abs(w) < 5.0) throw DomainError("ml_asymptotic is only valid for |w| >= 5");
    const double g = std::exp(ln_gamma(1.0 - 1.0 / rho));
    ScaledComplex alg(-1.0 / (w * g));
    // The exponential term is kept on the whole sector where it is not
    // exponentially small, i.e. |arg w| < π/ρ, not only |arg w| <= π/(2ρ).
    const double a = std::fabs(std::arg(w));
    if (a <= std::numbers::pi / (2.0 * rho) || a < std::numbers::pi / rho) {
        double lr = std::log(std::abs(w));
        cplx wr = std::polar(std::exp(rho * lr), rho * std::arg(w));
        return ScaledComplex(rho) * ScaledComplex::exp(wr) + alg;
    }
    return alg;
}

ScaledComplex ml_mu(cplx w, double rho, double mu, const TruncationSpec& trunc) {
    check_rho(rho);
    check_finite(w);
    trunc.validate();
    if (!(mu >= 1.0) || !std::isfinite(mu)) throw DomainError("ml_mu requires mu >= 1");
    return detail::power_series(w, rho, mu, false, trunc).value;
}

namespace {

cplx scaled_arg(cplx z, const MLContext& ctx) {
    check_finite(z);
    return ctx.radius_n() * z;
}

detail::SeriesSum section_sum(cplx w, const MLContext& ctx) {
    if (w == cplx(0.0)) return {ScaledComplex(1.0), 0.0, 1};
    return normalized_sum(w, 0, ctx.n(), 0, [&ctx](long k) { return ctx.log_coef(static_cast<int>(k)); },
                          ctx.trunc());
}

double log_coef_any(const MLContext& ctx, long k) {
    return k <= ctx.n() + 1 ? ctx.log_coef(static_cast<int>(k)) : -ln_gamma(1.0 + k / ctx.rho());
}

bool inside_forward_disk(cplx w, const MLContext& ctx) { return std::abs(w) <= ctx.radius_next(); }

detail::SeriesSum forward_tail_sum(cplx w, const MLContext& ctx) {
    if (w == cplx(0.0)) return {ScaledComplex{}, kNegInf, 0};
    return normalized_sum(w, ctx.n() + 1, -1, 0, [&ctx](long k) { return log_coef_any(ctx, k); }, ctx.trunc());
}

ScaledComplex forward_tail(cplx w, const MLContext& ctx) { return forward_tail_sum(w, ctx).value; }

detail::SeriesSum forward_tail_deriv_sum(cplx w, const MLContext& ctx) {
    if (w == cplx(0.0)) return {ScaledComplex{}, kNegInf, 0};
    return normalized_sum(
        w, ctx.n() + 1, -1, 1,
        [&ctx](long k) { return std::log(static_cast<double>(k)) + log_coef_any(ctx, k); }, ctx.trunc());
}

detail::SeriesSum section_deriv_sum(cplx w, const MLContext& ctx) {
    if (w == cplx(0.0)) {
        double c = std::exp(ctx.log_coef(1));
        return {ScaledComplex(c), std::log(c), 1};
    }
    return normalized_sum(
        w, 1, ctx.n(), 1,
        [&ctx](long k) { return std::log(static_cast<double>(k)) + ctx.log_coef(static_cast<int>(k)); },
        ctx.trunc());
}

// Beyond this many nats of cancellation the double result is replaced by the MPFR sum.
const double kPreciseLoss = std::log(1e9);

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// value = a·x − b·y, with the log of |a|Σ|x| + |b|Σ|y| as conditioning scale.
struct Mixed {
    ScaledComplex value;
    double log_scale;
};

Mixed mix(cplx a, const detail::SeriesSum& x, cplx b, const detail::SeriesSum& y) {
    Mixed m;
    m.value = ScaledComplex(a) * x.value - ScaledComplex(b) * y.value;
    double lx = a == cplx(0.0) ? kNegInf : x.log_abs_sum + std::log(std::abs(a));
    double ly = b == cplx(0.0) ? kNegInf : y.log_abs_sum + std::log(std::abs(b));
    m.log_scale = log_add(lx, ly);
    return m;
}

ScaledComplex guarded(const Mixed& m, cplx w, const MLContext& ctx, bool derivative) {
    const cplx lam = ctx.lambda();
    double loss = m.value.is_zero() ? std::numeric_limits<double>::infinity() : m.log_scale - m.value.log_mag();
    if (loss <= kPreciseLoss) return m.value;
    double hint = std::isfinite(loss) ? loss / std::numbers::ln2 : 128.0;
    return detail::combo_precise(w, ctx, lam, derivative, hint);
}

}  // namespace

ScaledComplex section(cplx z, const MLContext& ctx) {
    cplx w = scaled_arg(z, ctx);
    auto s = section_sum(w, ctx);
    if (series_loss(s) <= kPreciseLoss) return s.value;
    return detail::combo_precise(w, ctx, 0.0, false, series_loss(s) / std::numbers::ln2);
}

ScaledComplex section_derivative(cplx z, const MLContext& ctx) {
    cplx w = scaled_arg(z, ctx);
    auto s = section_deriv_sum(w, ctx);
    if (w == cplx(0.0) || series_loss(s) <= kPreciseLoss) return s.value;
    return detail::combo_precise(w, ctx, 0.0, true, series_loss(s) / std::numbers::ln2);
}

TailResult tail(cplx z, const MLContext& ctx) {
    cplx w = scaled_arg(z, ctx);
    TailResult out;
    if (inside_forward_disk(w, ctx)) {
        out.value = forward_tail(w, ctx);
        return out;
    }
    ScaledComplex e = ml_series(w, ctx.rho(), ctx.trunc());
    ScaledComplex s = section_sum(w, ctx).value;
    out.value = e - s;
    out.forward = false;
    double big = std::max(e.log_mag(), s.log_mag());
    double lost = out.value.is_zero() ? std::numeric_limits<double>::infinity() : big - out.value.log_mag();
    out.cancellation = lost > 0.5 * 53.0 * std::numbers::ln2;
    return out;
}

ScaledComplex combo(cplx z, const MLContext& ctx) {
    const cplx lam = ctx.lambda();
    cplx w = scaled_arg(z, ctx);
    if (w == cplx(0.0)) return ScaledComplex(1.0 - lam);
    const detail::SeriesSum s = section_sum(w, ctx);
    if (lam == cplx(0.0)) return guarded({s.value, s.log_abs_sum}, w, ctx, false);
    if (inside_forward_disk(w, ctx)) return guarded(mix(1.0 - lam, s, lam, forward_tail_sum(w, ctx)), w, ctx, false);
    ScaledComplex e = ml_series(w, ctx.rho(), ctx.trunc());
    return guarded(mix(1.0, s, lam, {e, e.log_mag(), 0}), w, ctx, false);
}

ScaledComplex combo_form(cplx z, const MLContext& ctx, ComboForm form) {
    const cplx lam = ctx.lambda();
    cplx w = scaled_arg(z, ctx);
    switch (form) {
        case ComboForm::mixed: {
            ScaledComplex t = tail(z, ctx).value;
            return ScaledComplex(1.0 - lam) * section_sum(w, ctx).value - ScaledComplex(lam) * t;
        }
        case ComboForm::tail_form: {
            ScaledComplex t = tail(z, ctx).value;
            return ScaledComplex(1.0 - lam) * ml_series(w, ctx.rho(), ctx.trunc()) - t;
        }
        case ComboForm::series_form:
            return section_sum(w, ctx).value - ScaledComplex(lam) * ml_series(w, ctx.rho(), ctx.trunc());
    }
    throw DomainError("unknown combo form");
}

ScaledComplex combo_normalized(cplx z, const MLContext& ctx) {
    if (z == cplx(0.0)) throw DomainError("combo_normalized is undefined at z = 0");
    ScaledComplex v = combo(z, ctx);
    return v * ScaledComplex::from_polar(ctx.log_norm(), 0.0) / ScaledComplex::pow(z, static_cast<double>(ctx.n()));
}

ScaledComplex combo_derivative(cplx z, const MLContext& ctx) {
    const cplx lam = ctx.lambda();
    cplx w = scaled_arg(z, ctx);
    const detail::SeriesSum s = section_deriv_sum(w, ctx);
    ScaledComplex d;
    if (w == cplx(0.0) || lam == cplx(0.0)) {
        d = w == cplx(0.0) ? ScaledComplex(1.0 - lam) * s.value : guarded({s.value, s.log_abs_sum}, w, ctx, true);
    } else if (inside_forward_disk(w, ctx)) {
        d = guarded(mix(1.0 - lam, s, lam, forward_tail_deriv_sum(w, ctx)), w, ctx, true);
    } else {
        ScaledComplex e = ml_derivative(w, ctx.rho(), ctx.trunc());
        d = guarded(mix(1.0, s, lam, {e, e.log_mag(), 0}), w, ctx, true);
    }
    return ScaledComplex(ctx.radius_n()) * d;
}

}  // namespace mlsz
