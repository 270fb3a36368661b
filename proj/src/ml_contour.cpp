#include <cmath>
#include <numbers>

#include "mlsz/error.hpp"
#include "mlsz/mitlef.hpp"
#include "mlsz/quadrature.hpp"

namespace mlsz::detail {

// Djrbashian's representation
//   E(w) = ρ e^{w^ρ}[w ∈ G⁺] + (ρ/2πi) ∫_{L(ν,H)} e^{ζ^ρ}/(ζ − w) dζ,
// with L traversed from the lower ray inward, along the arc, out the upper ray.
ScaledComplex ml_contour(cplx w, double rho, bool derivative) {
    if (!(rho > 1.0)) throw DomainError("the contour representation needs rho > 1");
    const double pi = std::numbers::pi;
    const double r = std::abs(w);
    if (!(r > 0.0)) throw DomainError("contour evaluation needs w != 0");
    const double a = std::fabs(std::arg(w));
    const double H = r >= 2.0 ? 1.0 : 0.5 * r;
    const double ca = pi / rho;
    const double cb = 0.6 * pi / rho;
    const double nu = std::fabs(a - ca) > std::fabs(a - cb) ? ca : cb;
    const double decay = -std::cos(rho * nu);  // > 0
    const double T = std::max(std::max(4.0 * H, 2.0 * r), std::pow(60.0 / decay, 1.0 / rho) + H);

    auto kernel = [&](cplx zeta, cplx ezr) {
        cplx d = zeta - w;
        return derivative ? ezr / (d * d) : ezr / d;
    };
    // e^{ζ^ρ} on a ray arg ζ = s·ν, with ζ^ρ formed from polar parts.
    auto ray = [&](double s) {
        cplx dir = std::polar(1.0, s * nu);
        double cr = std::cos(rho * nu);
        double sr = s * std::sin(rho * nu);
        return [=, &kernel](double t) {
            double tr = std::pow(t, rho);
            cplx ezr = std::polar(std::exp(tr * cr), tr * sr);
            return kernel(t * dir, ezr) * dir;
        };
    };
    auto arc = [&](double th) {
        double hr = std::pow(H, rho);
        cplx zeta = std::polar(H, th);
        cplx ezr = std::polar(std::exp(hr * std::cos(rho * th)), hr * std::sin(rho * th));
        return kernel(zeta, ezr) * cplx(0.0, 1.0) * zeta;
    };

    const double abs_tol = 1e-17;
    const double rel_tol = 1e-14;
    auto ray_integral = [&](double s) {
        auto f = ray(s);
        cplx v = 0.0;
        // Split at |w| so the near-pole stretch gets its own panel.
        if (r > H && r < T) {
            v += integrate_gk15(f, H, r, abs_tol, rel_tol).value;
            v += integrate_gk15(f, r, T, abs_tol, rel_tol).value;
        } else {
            v += integrate_gk15(f, H, T, abs_tol, rel_tol).value;
        }
        return v;
    };
    cplx arc_v = integrate_gk15(arc, -nu, 0.0, abs_tol, rel_tol).value +
                 integrate_gk15(arc, 0.0, nu, abs_tol, rel_tol).value;
    cplx total = ray_integral(1.0) - ray_integral(-1.0) + arc_v;
    ScaledComplex val(rho / (2.0 * pi * cplx(0.0, 1.0)) * total);
    if (a < nu && r > H) {
        double lr = std::log(r);
        cplx wr(std::exp(rho * lr) * std::cos(rho * std::arg(w)), std::exp(rho * lr) * std::sin(rho * std::arg(w)));
        ScaledComplex ex = ScaledComplex::exp(wr);
        if (derivative)
            val += ScaledComplex(rho * rho) * ScaledComplex::pow(w, rho - 1.0) * ex;
        else
            val += ScaledComplex(rho) * ex;
    }
    return val;
}

}  // namespace mlsz::detail
