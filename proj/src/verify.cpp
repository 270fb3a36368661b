#include "mlsz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mlsz/error.hpp"
#include "mlsz/quadrature.hpp"
#include "mlsz/special.hpp"

namespace mlsz {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x) {
    double r = std::remainder(x, 2.0 * kPi);  // in [−π, π]
    return r <= -kPi ? r + 2.0 * kPi : r;
}

void check_nonzero(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("z must be finite");
    if (z == cplx(0.0)) throw DomainError("z must be nonzero");
}

// −z/(1−z)
ScaledComplex geometric(cplx z) { return ScaledComplex(-z / (1.0 - z)); }

// e^{R_n^ρ z^ρ} Γ(1+n/ρ)/(R_n z)^n, assembled in the exponent.
ScaledComplex j1_prime(cplx z, const MLContext& ctx) {
    const double rho = ctx.rho();
    cplx lz = std::log(z);
    cplx wr = std::exp(rho * (std::log(ctx.radius_n()) + lz));  // (R_n z)^ρ
    return ScaledComplex::exp(wr + ctx.log_norm() - static_cast<double>(ctx.n()) * lz);
}

ScaledComplex j2_prime(cplx z, const MLContext& ctx) {
    cplx lz = std::log(z);
    return ScaledComplex::exp(ctx.log_norm() - std::log(ctx.radius_n()) - static_cast<double>(ctx.n() + 1) * lz);
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::outer_sector: return "outer_sector";
        case Regime::inner_sector: return "inner_sector";
        case Regime::exterior: return "exterior";
    }
    return "?";
}

Regime regime_from_name(const std::string& s) {
    for (Regime r : {Regime::outer_sector, Regime::inner_sector, Regime::exterior})
        if (s == regime_name(r)) return r;
    throw DomainError("unknown regime '" + s + "'");
}

void RegimeParams::validate() const {
    if (!(delta2 > 0.0) || !(delta3 > 0.0) || !std::isfinite(delta2) || !std::isfinite(delta3))
        throw DomainError("delta2 and delta3 must be positive");
}

Regime classify_regime(cplx z, double rho, const RegimeParams& p) {
    p.validate();
    check_nonzero(z);
    if (!(rho > 1.0)) throw DomainError("rho must exceed 1");
    const double edge = kPi / (2.0 * rho);
    const double a = std::fabs(std::arg(z));
    if (a >= edge + p.delta3) return Regime::exterior;
    if (a <= edge) {
        if (std::abs(z - 1.0) < p.delta2) throw RegimeError("z lies within delta2 of 1");
        return std::abs(z) >= 1.0 ? Regime::outer_sector : Regime::inner_sector;
    }
    throw RegimeError("z lies in the angular gap next to the critical rays");
}

ScaledComplex theorem1_rhs(cplx z, const MLContext& ctx, Regime regime, const RegimeParams& p) {
    check_nonzero(z);
    const double rho = ctx.rho();
    if (!(rho > 1.0)) throw DomainError("Theorem 1 formulas require rho > 1");
    p.validate();
    const double edge = kPi / (2.0 * rho);
    const double a = std::fabs(std::arg(z));
    const double r = std::abs(z);
    const cplx lam = ctx.lambda();
    switch (regime) {
        case Regime::outer_sector:
            if (!(r >= 1.0 && a <= edge && std::abs(z - 1.0) >= p.delta2))
                throw RegimeError("z is outside the outer sector");
            return ScaledComplex(-lam * rho) * j1_prime(z, ctx) + geometric(z);
        case Regime::inner_sector:
            if (!(r <= 1.0 && a <= edge && std::abs(z - 1.0) >= p.delta2))
                throw RegimeError("z is outside the inner sector");
            return ScaledComplex((1.0 - lam) * rho) * j1_prime(z, ctx) + geometric(z);
        case Regime::exterior: {
            if (!(a >= edge + p.delta3)) throw RegimeError("z is outside the exterior sector");
            double g = std::exp(ln_gamma(1.0 - 1.0 / rho));
            return ScaledComplex((lam - 1.0) / g) * j2_prime(z, ctx) + geometric(z);
        }
    }
    throw DomainError("unknown regime");
}

double theorem1_check(cplx z, const MLContext& ctx, const RegimeParams& p) {
    Regime r = classify_regime(z, ctx.rho(), p);
    return rel_diff(combo_normalized(z, ctx), theorem1_rhs(z, ctx, r, p));
}

void ContourSpec::validate(double rho) const {
    const double edge = kPi / (2.0 * rho);
    if (!(nu > edge && nu <= kPi / rho)) throw DomainError("contour angle must satisfy pi/(2rho) < nu <= pi/rho");
    if (!(H > 0.0) || !std::isfinite(H)) throw DomainError("contour radius H must be positive");
    if (!(ray_cutoff > H) || !std::isfinite(ray_cutoff)) throw DomainError("ray_cutoff must exceed H");
}

namespace {

// ln of the ray integrand magnitude, e^{t^ρ cos ρν} t^{−(n+1)}.
double ray_log(double t, double rho, double nu, int n) {
    return std::pow(t, rho) * std::cos(rho * nu) - (n + 1.0) * std::log(t);
}

double arc_peak(double H, double rho, int n) { return std::pow(H, rho) - (n + 1.0) * std::log(H); }

}  // namespace

ContourSpec default_contour(const MLContext& ctx, double delta3) {
    const double rho = ctx.rho();
    if (!(delta3 > 0.0)) throw DomainError("delta3 must be positive");
    ContourSpec c;
    c.nu = std::min(kPi / (2.0 * rho) + 0.5 * delta3, kPi / rho);
    c.H = ctx.radius_n();
    const double peak = arc_peak(c.H, rho, ctx.n());
    double t = 2.0 * c.H;
    while (ray_log(t, rho, c.nu, ctx.n()) > peak - 40.0) t *= 1.25;
    c.ray_cutoff = t;
    c.validate(rho);
    return c;
}

ScaledComplex KnResult::value() const { return ScaledComplex::from_polar(log_scale, 0.0) * ScaledComplex(normalized); }

KnResult kn_quadrature(cplx z, const MLContext& ctx, const ContourSpec& c) {
    check_nonzero(z);
    const double rho = ctx.rho();
    if (!(rho > 1.0)) throw DomainError("kn_quadrature requires rho > 1");
    c.validate(rho);
    const int n = ctx.n();
    const cplx w = ctx.radius_n() * z;

    // Distance from the pole to the contour.
    double dist;
    {
        double aw = std::abs(w), th = std::arg(w);
        double d_arc = std::fabs(th) <= c.nu ? std::fabs(aw - c.H) : std::abs(w - std::polar(c.H, th > 0 ? c.nu : -c.nu));
        auto ray_d = [&](double ang) {
            cplx dir = std::polar(1.0, ang);
            double t = std::clamp((w * std::conj(dir)).real(), c.H, c.ray_cutoff);
            return std::abs(w - t * dir);
        };
        dist = std::min({d_arc, ray_d(c.nu), ray_d(-c.nu)});
    }
    if (dist < 1e-6 * ctx.radius_n()) throw DomainError("R_n z lies on the integration contour");

    const double peak = arc_peak(c.H, rho, n);
    auto kernel = [&](cplx zeta, cplx lzeta) {
        cplx e = std::exp(rho * lzeta) - (n + 1.0) * lzeta - peak;
        return std::exp(e) / (zeta - w);
    };
    const double abs_tol = 1e-14, rel_tol = 1e-11;
    KnResult out;
    out.log_scale = peak;
    // Arc, θ from −ν to ν.
    auto arc = integrate_gk15(
        [&](double th) {
            cplx zeta = std::polar(c.H, th);
            return kernel(zeta, cplx(std::log(c.H), th)) * cplx(0.0, 1.0) * zeta;
        },
        -c.nu, c.nu, abs_tol, rel_tol);
    // Upper ray outward, lower ray inward.
    auto ray = [&](double ang) {
        cplx dir = std::polar(1.0, ang);
        return integrate_gk15(
            [&, dir, ang](double t) { return kernel(t * dir, cplx(std::log(t), ang)) * dir; }, c.H, c.ray_cutoff,
            abs_tol, rel_tol);
    };
    auto up = ray(c.nu);
    auto down = ray(-c.nu);
    out.normalized = arc.value + up.value - down.value;
    // Neglected tail beyond the cutoff: the log-magnitude decays at least at its rate there.
    double T = c.ray_cutoff;
    double rate = -(rho * std::pow(T, rho - 1.0) * std::cos(rho * c.nu) - (n + 1.0) / T);
    double tail = rate > 0.0 ? std::exp(ray_log(T, rho, c.nu, n) - peak) / (rate * std::max(dist, T - std::abs(w)))
                             : std::numeric_limits<double>::infinity();
    out.error = arc.error + up.error + down.error + 2.0 * tail;
    out.evaluations = arc.evaluations + up.evaluations + down.evaluations;
    if (!(arc.converged && up.converged && down.converged))
        throw ConvergenceError("contour quadrature did not converge");
    return out;
}

cplx kn_ratio(cplx z, const MLContext& ctx, const ContourSpec& contour) {
    KnResult k = kn_quadrature(z, ctx, contour);
    // ρ R_n Γ(1+n/ρ)(1 − z) K_n / (2πi)
    const double log_pref = std::log(ctx.rho() * ctx.radius_n()) + ln_gamma(1.0 + ctx.n() / ctx.rho());
    ScaledComplex v = ScaledComplex::from_polar(log_pref, 0.0) * k.value() * ScaledComplex((1.0 - z) / cplx(0.0, 2.0 * kPi));
    return v.to_complex();
}

JPrimes j_primes(cplx z, const MLContext& ctx) {
    check_nonzero(z);
    return {j1_prime(z, ctx), j2_prime(z, ctx)};
}

double lemma4_log_j1(cplx z, int n, double rho) {
    check_nonzero(z);
    const double r = std::abs(z), phi = std::arg(z);
    const double c = std::pow(r, rho) * std::cos(rho * phi);
    const double u = c - 1.0 - rho * std::log(r);
    return 0.5 * std::log(2.0 * kPi) + (rho - 1.0) / (2.0 * rho) * (c - 1.0) + n / rho * u + 0.5 * std::log(n / rho);
}

double lemma4_log_j2(cplx z, int n, double rho) {
    check_nonzero(z);
    const double r = std::abs(z);
    return 0.5 * std::log(2.0 * kPi) + 1.0 / rho - (rho - 1.0) / (2.0 * rho) + (n + 1.0) * (-1.0 / rho - std::log(r)) +
           (0.5 - 1.0 / rho) * std::log(n / rho);
}

cplx theorem3_point(cplx zeta, int n, double rho) {
    if (n < 2) throw DomainError("Theorem 3 rescaling requires n >= 2");
    return 1.0 + std::sqrt(2.0 / (rho * n)) * zeta;
}

LimitPair theorem3_pair(cplx zeta, const MLContext& ctx) {
    const cplx z = theorem3_point(zeta, ctx.n(), ctx.rho());
    if (z == cplx(0.0)) throw DomainError("rescaled point hits the origin");
    ScaledComplex e1 = ml_series(ctx.radius_n(), ctx.rho(), ctx.trunc());
    ScaledComplex v = combo(z, ctx) / (ScaledComplex::pow(z, static_cast<double>(ctx.n())) * e1);
    LimitPair p;
    p.lhs = v.to_complex();
    p.rhs = std::exp(zeta * zeta) * (0.5 * erfc(zeta) - ctx.lambda());
    return p;
}

cplx theorem3_e_ratio(cplx zeta, const MLContext& ctx) {
    const cplx z = theorem3_point(zeta, ctx.n(), ctx.rho());
    ScaledComplex num = ml_series(ctx.radius_n() * z, ctx.rho(), ctx.trunc());
    ScaledComplex den = ScaledComplex::pow(z, static_cast<double>(ctx.n())) * ml_series(ctx.radius_n(), ctx.rho(), ctx.trunc());
    return (num / den).to_complex();
}

void Frame4::validate() const {
    if (!(rho > 1.0) || !std::isfinite(rho)) throw DomainError("frame requires rho > 1");
    if (n < 2) throw DomainError("frame requires n >= 2");
    const double edge = kPi / (2.0 * rho);
    const double phi = std::arg(xi);
    if (part == T4Part::one) {
        if (!(phi > 0.0 && phi < edge)) throw DomainError("part I requires 0 < arg xi < pi/(2rho)");
        if (std::fabs(phase_u(xi, rho)) > 1e-9) throw DomainError("part I requires xi on the curve");
        if (std::fabs(std::abs(xi) - 1.0) < 1e-12) throw DomainError("part I excludes |xi| = 1");
    } else {
        double p = phi <= -kPi + 1e-15 ? kPi : phi;
        if (!(p > edge && p <= kPi)) throw DomainError("part II requires pi/(2rho) < arg xi <= pi");
        if (std::fabs(std::abs(xi) - std::exp(-1.0 / rho)) > 1e-12) throw DomainError("part II requires |xi| = e^{-1/rho}");
    }
    if (!(tau_n > -kPi && tau_n <= kPi)) throw DomainError("tau_n must lie in (-pi, pi]");
}

double theorem4_tau(cplx xi, double rho, int n, T4Part part) {
    double phi = std::arg(xi);
    if (part == T4Part::one) {
        double tau = std::pow(std::abs(xi), rho) * std::sin(rho * phi) - rho * phi;
        return wrap(tau * n / rho);
    }
    if (phi <= -kPi + 1e-15) phi = kPi;
    return wrap((n + 1.0) * phi);
}

Frame4 theorem4_frame(double phi, double rho, int n, T4Part part, SzegoBranch branch) {
    Frame4 f;
    f.rho = rho;
    f.n = n;
    f.part = part;
    if (part == T4Part::one) {
        if (branch != SzegoBranch::inner && branch != SzegoBranch::outer)
            throw DomainError("part I needs the inner or outer branch");
        f.xi = std::polar(szego_sigma(phi, rho, branch), phi);
    } else {
        f.xi = std::polar(std::exp(-1.0 / rho), phi);
    }
    f.tau_n = theorem4_tau(f.xi, rho, n, part);
    f.validate();
    return f;
}

cplx theorem4_point(cplx zeta, const Frame4& f, const T4Options& opt) {
    f.validate();
    const double n = f.n;
    const double ln_n = std::log(n);
    const cplx shift = zeta - cplx(0.0, f.tau_n);
    cplx eps;
    if (f.part == T4Part::one) {
        cplx q = 1.0 - std::exp(f.rho * std::log(f.xi));  // 1 − ξ^ρ
        eps = ln_n / (2.0 * q * n) - shift / (q * n);
    } else {
        double sign = opt.as_printed ? -1.0 : 1.0;
        eps = (0.5 - 1.0 / f.rho) * ln_n / n + sign * shift / (n + 1.0);
    }
    return f.xi * (1.0 + eps);
}

LimitPair theorem4_pair(cplx zeta, const Frame4& f, const MLContext& ctx, const T4Options& opt) {
    if (ctx.rho() != f.rho || ctx.n() != f.n) throw DomainError("context and frame disagree on rho or n");
    const double rho = f.rho;
    const cplx lam = ctx.lambda();
    const cplx xi = f.xi;
    LimitPair p;
    p.lhs = combo_normalized(theorem4_point(zeta, f, opt), ctx).to_complex();
    const cplx geo = -xi / (1.0 - xi);
    if (f.part == T4Part::one) {
        cplx mu = std::abs(xi) < 1.0 ? 1.0 - lam : -lam;
        double c = opt.as_printed ? (rho + 1.0) / (2.0 * rho) : (rho - 1.0) / (2.0 * rho);
        cplx xr = std::exp(rho * std::log(xi));
        p.rhs = mu * std::sqrt(2.0 * kPi * rho) * std::exp(c * (xr - 1.0) + zeta) + geo;
    } else {
        double k = opt.as_printed ? std::sqrt(2.0 * kPi * std::exp((1.0 - rho) / rho))
                                  : std::sqrt(2.0 * kPi) * std::exp((3.0 - rho) / (2.0 * rho));
        double den = std::pow(rho, 0.5 - 1.0 / rho) * std::exp(ln_gamma(1.0 - 1.0 / rho));
        p.rhs = (lam - 1.0) * k / den * std::exp(-zeta) + geo;
    }
    return p;
}

}  // namespace mlsz
