#pragma once

#include <complex>
#include <string>

#include "mlsz/curves.hpp"
#include "mlsz/mitlef.hpp"

namespace mlsz {

// Where the three leading-term formulas for I_n apply.
enum class Regime { outer_sector, inner_sector, exterior };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& s);  // throws DomainError

struct RegimeParams {
    double delta2 = 0.2;  // excluded disk |z − 1| < δ₂
    double delta3 = 0.2;  // angular gap past π/(2ρ)

    void validate() const;
};

// The regime containing z; RegimeError for z in a gap (near 1 or next to the critical rays).
Regime classify_regime(cplx z, double rho, const RegimeParams& p = {});

// Leading-term right side of the normalized I_n·Γ(1+n/ρ)/(R_n z)^n, o(1) factors set to 1.
// Throws RegimeError if z is not in `regime`.
ScaledComplex theorem1_rhs(cplx z, const MLContext& ctx, Regime regime, const RegimeParams& p = {});

// |combo_normalized − rhs| / max(|combo_normalized|, |rhs|) in the regime of z.
double theorem1_check(cplx z, const MLContext& ctx, const RegimeParams& p = {});

// The contour L(ν, H): arc |ζ| = H, |arg ζ| <= ν, and the rays arg ζ = ±ν cut at ray_cutoff.
struct ContourSpec {
    double nu = 0.0;
    double H = 0.0;
    double ray_cutoff = 0.0;

    void validate(double rho) const;  // π/(2ρ) < ν <= π/ρ, H > 0, ray_cutoff > H
};

// ν = π/(2ρ) + δ₃/2, H = R_n, and a cutoff past which the ray integrand is below e^{-40} of its peak.
ContourSpec default_contour(const MLContext& ctx, double delta3 = 0.2);

struct KnResult {
    double log_scale = 0.0;  // value = e^{log_scale} · normalized
    cplx normalized{0.0, 0.0};
    double error = 0.0;      // absolute, in the normalized units; includes the ray-tail bound
    int evaluations = 0;

    ScaledComplex value() const;
};

// ∫_{L(ν,H)} e^{ζ^ρ} ζ^{−(n+1)} / (ζ − R_n z) dζ.
KnResult kn_quadrature(cplx z, const MLContext& ctx, const ContourSpec& contour);

// [ρ(R_n z)^{n+1}/(2πi)]·K_n(z) divided by its predicted size R_n^n z^n/Γ(1+n/ρ) · z/(1−z).
cplx kn_ratio(cplx z, const MLContext& ctx, const ContourSpec& contour);

struct JPrimes {
    ScaledComplex j1;  // e^{R_n^ρ z^ρ} Γ(1+n/ρ) / (R_n z)^n
    ScaledComplex j2;  // Γ(1+n/ρ) / (R_n z)^{n+1}
};
JPrimes j_primes(cplx z, const MLContext& ctx);

// Stirling-based leading forms of ln|J₁′| and ln|J₂′| (o(1) dropped).
double lemma4_log_j1(cplx z, int n, double rho);
double lemma4_log_j2(cplx z, int n, double rho);

struct LimitPair {
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double error() const { return std::abs(lhs - rhs); }
};

// Rescaling about z = 1: z = 1 + (2/(ρn))^{1/2} ζ.
cplx theorem3_point(cplx zeta, int n, double rho);
LimitPair theorem3_pair(cplx zeta, const MLContext& ctx);
// E(R_n z)/(z^n E(R_n)) at the rescaled point, which tends to e^{ζ²}.
cplx theorem3_e_ratio(cplx zeta, const MLContext& ctx);

enum class T4Part { one, two };

// A point ξ of S(ρ) together with the phase sequence for a given n.
struct Frame4 {
    cplx xi{0.0, 0.0};
    double rho = 2.0;
    int n = 1;
    T4Part part = T4Part::one;
    double tau_n = 0.0;  // τ_n (part I) or τ′_n (part II), in (−π, π]

    void validate() const;
};

// Part I: ξ on the inner or outer branch at angle φ ∈ (0, π/(2ρ)).
// Part II: ξ = e^{−1/ρ}e^{iφ}, φ ∈ (π/(2ρ), π]; `branch` is ignored.
Frame4 theorem4_frame(double phi, double rho, int n, T4Part part, SzegoBranch branch = SzegoBranch::inner);

// τ_n ≡ τn/ρ with τ = |ξ|^ρ sin ρφ − ρφ (part I) or τ′_n ≡ (n+1)φ (part II), reduced to (−π, π].
double theorem4_tau(cplx xi, double rho, int n, T4Part part);

struct T4Options {
    // Use the constants and the part-II sign exactly as printed in the source statement.
    bool as_printed = false;
};

// The shifted argument ξ(1 + ε) at which I_n is sampled.
cplx theorem4_point(cplx zeta, const Frame4& frame, const T4Options& opt = {});
// lhs = combo_normalized at theorem4_point; rhs = the limit.  ctx must share ρ and n with the frame.
LimitPair theorem4_pair(cplx zeta, const Frame4& frame, const MLContext& ctx, const T4Options& opt = {});

}  // namespace mlsz
