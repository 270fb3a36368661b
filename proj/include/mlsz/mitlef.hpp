#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "mlsz/scaled.hpp"

namespace mlsz {

namespace detail {
struct CoefCache;
}

struct TruncationSpec {
    double rel_tol = 1e-14;
    long max_terms = 200000;
    int tail_margin = 64;

    void validate() const;  // throws DomainError
};

struct MaxTermInfo {
    double mu_log = 0.0;  // log of the maximal term
    long nu = 0;          // central index
};

/// Parameters shared by every evaluation of I_n(R_n z; λ).
///
/// Immutable after construction; the coefficient table
/// log(1/Γ(1+k/ρ)), k = 0..n+1, is built once here.
class MLContext {
public:
    MLContext(double rho, int n, cplx lambda = 0.0, TruncationSpec trunc = {});

    double rho() const { return rho_; }
    int n() const { return n_; }
    cplx lambda() const { return lambda_; }
    const TruncationSpec& trunc() const { return trunc_; }
    double radius_n() const { return rn_; }
    double radius_next() const { return rn1_; }
    // log(1/Γ(1+k/ρ)) for 0 <= k <= n+1.
    double log_coef(int k) const { return lc_[static_cast<std::size_t>(k)]; }
    // ln Γ(1+n/ρ) − n ln R_n: the normalization used by Theorem-1 style quotients.
    double log_norm() const { return log_norm_; }
    detail::CoefCache& coef_cache() const { return *cache_; }

private:
    double rho_;
    int n_;
    cplx lambda_;
    TruncationSpec trunc_;
    double rn_ = 0.0, rn1_ = 0.0, log_norm_ = 0.0;
    std::vector<double> lc_;
    std::shared_ptr<detail::CoefCache> cache_;
};

double radius(int n, double rho);
double radius_asymptotic(int n, double rho);
MaxTermInfo max_term(double r, double rho, const TruncationSpec& trunc = {});

// E_{1/ρ}(w).  Uses the normalized power series when it is well conditioned,
// otherwise the contour integral representation (ρ > 1) or an
// extended-precision series (ρ = 1 or near it).
ScaledComplex ml_series(cplx w, double rho, const TruncationSpec& trunc = {});
// d/dw E_{1/ρ}(w), same dispatch.
ScaledComplex ml_derivative(cplx w, double rho, const TruncationSpec& trunc = {});
// Large-|w| expansion: ρe^{w^ρ} − 1/(wΓ(1−1/ρ)) or its algebraic part alone.
ScaledComplex ml_asymptotic(cplx w, double rho);
// Σ w^k / Γ(μ + k/ρ), μ >= 1.
ScaledComplex ml_mu(cplx w, double rho, double mu, const TruncationSpec& trunc = {});

ScaledComplex section(cplx z, const MLContext& ctx);
ScaledComplex section_derivative(cplx z, const MLContext& ctx);  // d/dw s_n(w) at w = R_n z

struct TailResult {
    ScaledComplex value;
    bool cancellation = false;  // subtraction path lost more than half the digits
    bool forward = true;        // which path produced the value
};
TailResult tail(cplx z, const MLContext& ctx);

ScaledComplex combo(cplx z, const MLContext& ctx);
ScaledComplex combo_normalized(cplx z, const MLContext& ctx);
ScaledComplex combo_derivative(cplx z, const MLContext& ctx);

// The three algebraically equal ways of writing I_n, for cross-checks.
enum class ComboForm { mixed, tail_form, series_form };  // (1−λ)s−λt, (1−λ)E−t, s−λE
ScaledComplex combo_form(cplx z, const MLContext& ctx, ComboForm form);

namespace detail {

struct SeriesSum {
    ScaledComplex value;
    double log_abs_sum = 0.0;  // log Σ|terms|
    long terms = 0;
};

// Raw normalized power series for E_{1/ρ}(w, μ) (derivative = true gives d/dw
// of the μ = 1 series).  No fallback; throws TruncationError on budget exhaustion.
SeriesSum power_series(cplx w, double rho, double mu, bool derivative, const TruncationSpec& trunc);
// Contour representation on L(ν, H); ρ > 1.
ScaledComplex ml_contour(cplx w, double rho, bool derivative);
// Series in MPFR with precision raised until the cancellation is covered.
ScaledComplex ml_extended(cplx w, double rho, bool derivative);
std::shared_ptr<CoefCache> make_coef_cache(double rho);
// (1−λ)s_n(w) − λ t_{n+1}(w) (or its w-derivative) summed in MPFR, with the
// precision raised until 60 bits survive the cancellation.
ScaledComplex combo_precise(cplx w, const MLContext& ctx, cplx lambda, bool derivative, double loss_hint_bits);

}  // namespace detail

}  // namespace mlsz
