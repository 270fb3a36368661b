#include "mlsz/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mlsz/error.hpp"

namespace mlsz {

namespace {

constexpr double kPi = std::numbers::pi;

void check_rho(double rho) {
    if (!(rho > 1.0) || !std::isfinite(rho)) throw DomainError("rho must be > 1");
}

// g(s) = c e^{ρs} − 1 − ρs + shift, convex in s.
struct Level {
    double c, rho, shift;
    double g(double s) const { return c * std::exp(rho * s) - 1.0 - rho * s + shift; }
    double dg(double s) const { return rho * (c * std::exp(rho * s) - 1.0); }
};

// Safeguarded Newton on a sign-changing bracket [a, b].
double solve_bracketed(const Level& f, double a, double b) {
    double fa = f.g(a), fb = f.g(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw BracketError("level equation root is not bracketed");
    double lo = fa < 0.0 ? a : b;  // g(lo) < 0
    double hi = fa < 0.0 ? b : a;  // g(hi) > 0
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        double fx = f.g(x);
        if (std::fabs(fx) <= 1e-15) return x;
        if (fx < 0.0)
            lo = x;
        else
            hi = x;
        double d = f.dg(x);
        double nx = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
        bool inside = (nx - lo) * (nx - hi) < 0.0;
        if (!inside || !std::isfinite(nx)) nx = 0.5 * (lo + hi);
        if (std::fabs(nx - x) <= 1e-16 * std::max(1.0, std::fabs(x))) return nx;
        x = nx;
    }
    return x;
}

double level_log_root(double phi, double rho, double shift, SzegoBranch branch) {
    check_rho(rho);
    if (!std::isfinite(phi)) throw DomainError("phi must be finite");
    const Level f{std::cos(rho * phi), rho, shift};
    const double c = f.c;
    if (branch != SzegoBranch::inner && branch != SzegoBranch::outer)
        throw DomainError("level roots exist only on the inner and outer branches");
    if (c <= 0.0) {
        if (branch == SzegoBranch::outer) throw BracketError("no outer root where cos(rho*phi) <= 0");
        // g strictly decreasing; g <= 0 at s_hi.
        double s_hi = (shift - 1.0) / rho;
        double s_lo = s_hi - 1.0;
        while (f.g(s_lo) <= 0.0) s_lo -= 2.0 * (s_hi - s_lo);
        return solve_bracketed(f, s_lo, s_hi);
    }
    const double s_min = -std::log(c) / rho;  // minimum of g
    const double g_min = f.g(s_min);
    if (g_min > 0.0) throw BracketError("level curve has no root at this angle");
    if (g_min == 0.0) return s_min;
    if (branch == SzegoBranch::inner) {
        double s_lo = std::min(s_min, 0.0) - 1.0 / rho;
        while (f.g(s_lo) <= 0.0) s_lo -= 1.0;
        return solve_bracketed(f, s_lo, s_min);
    }
    double s_hi = std::max(s_min, 0.0) + 0.5;
    while (f.g(s_hi) <= 0.0) s_hi = 2.0 * s_hi + 0.5;
    return solve_bracketed(f, s_min, s_hi);
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return v;
}

}  // namespace

const char* branch_name(SzegoBranch b) {
    switch (b) {
        case SzegoBranch::inner: return "inner";
        case SzegoBranch::outer: return "outer";
        case SzegoBranch::arc: return "arc";
        case SzegoBranch::t: return "t";
    }
    return "?";
}

SzegoBranch branch_from_name(const std::string& s) {
    if (s == "inner") return SzegoBranch::inner;
    if (s == "outer") return SzegoBranch::outer;
    if (s == "arc") return SzegoBranch::arc;
    if (s == "t") return SzegoBranch::t;
    throw DomainError("unknown branch label: " + s);
}

void RegionSpec::validate() const {
    check_rho(rho);
    if (!(h > 0.0 && delta2 > 0.0 && delta3 > 0.0)) throw DomainError("h, delta2, delta3 must be positive");
    if (!(delta3 < kPi / (2.0 * rho))) throw DomainError("delta3 must be below pi/(2 rho)");
    int i = static_cast<int>(id);
    if (i < 1 || i > 5) throw DomainError("region id must be 1..5");
}

double phase_u(cplx z, double rho) {
    if (z == cplx(0.0)) throw DomainError("phase_u is undefined at z = 0");
    double lr = std::log(std::abs(z));
    return std::exp(rho * lr) * std::cos(rho * std::arg(z)) - 1.0 - rho * lr;
}

double szego_sigma(double phi, double rho, SzegoBranch branch) {
    check_rho(rho);
    const double edge = kPi / (2.0 * rho);
    if (std::fabs(phi) > edge * (1.0 + 1e-15)) throw DomainError("szego_sigma requires |phi| <= pi/(2 rho)");
    if (branch == SzegoBranch::outer && std::fabs(phi) >= edge)
        throw DomainError("the outer branch is unbounded at |phi| = pi/(2 rho)");
    if (phi == 0.0) return 1.0;  // double root
    if (branch == SzegoBranch::inner && std::fabs(phi) >= edge) return std::exp(-1.0 / rho);
    return std::exp(level_log_root(phi, rho, 0.0, branch));
}

double s_h_level_r(double phi, double rho, double h, SzegoBranch branch) {
    if (!(h >= 0.0)) throw DomainError("h must be non-negative");
    if (h == 0.0) return szego_sigma(phi, rho, branch);
    return std::exp(level_log_root(phi, rho, 0.5 * h, branch));
}

double s_h_min_phi(double rho, double h) {
    check_rho(rho);
    return std::acos(std::exp(-0.5 * h)) / rho;
}

double outer_phi_at_radius(double r, double rho) {
    check_rho(rho);
    if (!(r >= 1.0)) throw DomainError("outer branch radius must be >= 1");
    return std::acos((1.0 + rho * std::log(r)) / std::pow(r, rho)) / rho;
}

std::vector<CurvePoint> szego_curve(double rho, int samples, double r_max) {
    check_rho(rho);
    if (samples < 2) throw DomainError("samples_per_branch must be >= 2");
    if (!(r_max > 1.0)) throw DomainError("r_max must exceed 1");
    const double edge = kPi / (2.0 * rho);
    std::vector<CurvePoint> out;
    out.reserve(static_cast<std::size_t>(3 * samples));
    for (double phi : linspace(-edge, edge, samples))
        out.push_back({phi, szego_sigma(phi, rho, SzegoBranch::inner), SzegoBranch::inner});
    const double ra = std::exp(-1.0 / rho);
    for (double phi : linspace(edge, 2.0 * kPi - edge, samples)) out.push_back({phi, ra, SzegoBranch::arc});
    const double pm = outer_phi_at_radius(r_max, rho);
    for (double phi : linspace(-pm, pm, samples)) {
        // The end angles are defined through r_max itself; reuse it there.
        double r = std::fabs(phi) == pm ? r_max : szego_sigma(phi, rho, SzegoBranch::outer);
        out.push_back({phi, r, SzegoBranch::outer});
    }
    return out;
}

double t_curve_r(double phi, double rho) {
    check_rho(rho);
    double x = rho * phi;
    if (!(std::fabs(x) < kPi)) throw DomainError("t_curve_r requires |phi| < pi/rho");
    if (x == 0.0) return 1.0;
    double q = std::fabs(x) < 1e-4 ? 1.0 + x * x / 6.0 + 7.0 * x * x * x * x / 360.0 : x / std::sin(x);
    return std::pow(q, 1.0 / rho);
}

std::vector<CurvePoint> t_curve(double rho, int samples, double r_max) {
    check_rho(rho);
    if (samples < 2) throw DomainError("samples must be >= 2");
    if (!(r_max > 1.0)) throw DomainError("r_max must exceed 1");
    // Angle where r reaches r_max, by bisection on the monotone x/sin x.
    double target = std::pow(r_max, rho);
    double lo = 0.0, hi = kPi;
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (lo + hi);
        (m / std::sin(m) < target ? lo : hi) = m;
    }
    const double pm = lo / rho;
    std::vector<CurvePoint> out;
    // An odd count keeps φ = 0 (the point z = 1) among the samples.
    for (double phi : linspace(-pm, pm, samples | 1)) out.push_back({phi, t_curve_r(phi, rho), SzegoBranch::t});
    return out;
}

std::vector<CurvePoint> s_h_curve(double rho, double h, int samples, double r_max) {
    check_rho(rho);
    if (!(h > 0.0)) throw DomainError("h must be positive");
    if (samples < 2) throw DomainError("samples_per_branch must be >= 2");
    const double edge = kPi / (2.0 * rho);
    const double p0 = s_h_min_phi(rho, h);
    if (!(p0 < edge)) throw BracketError("h too large: the level curve is empty in the sector");
    std::vector<CurvePoint> out;
    // Upper and lower halves of each branch, since the curve is absent for |phi| < p0.
    auto half = [&](SzegoBranch b, double a, double e) {
        for (double phi : linspace(a, e, samples / 2 + 1)) {
            double r = s_h_level_r(phi, rho, h, b);
            if (b == SzegoBranch::outer && r > r_max) continue;
            out.push_back({phi, r, b});
        }
    };
    half(SzegoBranch::inner, -edge, -p0);
    half(SzegoBranch::inner, p0, edge);
    // Outer: stop where the branch passes r_max.
    double lo = p0, hi = edge;
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (lo + hi);
        (s_h_level_r(m, rho, h, SzegoBranch::outer) < r_max ? lo : hi) = m;
    }
    half(SzegoBranch::outer, -lo, -p0);
    half(SzegoBranch::outer, p0, lo);
    return out;
}

double classic_szego_indicator(cplx z) { return std::abs(z) * std::exp(1.0 - z.real()); }

Intersection t_sh_intersection(double rho, double h) {
    check_rho(rho);
    if (!(h > 0.0)) throw DomainError("h must be positive");
    // u along T decreases from 0 at phi = 0; bracket the level −h/2.
    auto f = [&](double phi) { return phase_u(std::polar(t_curve_r(phi, rho), phi), rho) + 0.5 * h; };
    double lo = 0.0, hi = 0.5 * kPi / rho;
    if (f(hi) > 0.0) throw BracketError("T(rho) does not reach the level -h/2 inside the sector");
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (lo + hi);
        (f(m) > 0.0 ? lo : hi) = m;
    }
    double g = 0.5 * (lo + hi);
    return {t_curve_r(g, rho), g};
}

bool region_contains(cplx z, const RegionSpec& s) {
    s.validate();
    if (z == cplx(0.0)) throw DomainError("region_contains is undefined at z = 0");
    const double r = std::abs(z);
    const double phi = std::fabs(std::arg(z));
    const double edge = kPi / (2.0 * s.rho);
    const double ra = std::exp(-1.0 / s.rho);
    switch (s.id) {
        case RegionId::omega1:
            return r <= 1.0 && std::abs(z - 1.0) >= s.delta2 && phi <= edge - s.delta3 && phase_u(z, s.rho) >= 0.0;
        case RegionId::omega2:
            return phi <= edge - s.delta3 && phase_u(z, s.rho) <= -s.h;
        case RegionId::omega3:
            return r >= ra + s.h && phi >= edge + s.delta3;
        case RegionId::omega4:
            return r <= ra - s.h && phi >= edge + s.delta3;
        case RegionId::omega5:
            return r >= 1.0 && phi <= edge - s.delta3 && phase_u(z, s.rho) >= s.h;
    }
    return false;
}

double asymptote_distance(cplx z, double rho) {
    check_rho(rho);
    if (z == cplx(0.0)) throw DomainError("asymptote_distance is undefined at z = 0");
    const double edge = kPi / (2.0 * rho);
    double best = std::abs(z);
    for (double s : {1.0, -1.0}) {
        cplx d = std::polar(1.0, s * edge);
        cplx q = z * std::conj(d);  // coordinates along / across the ray
        double dist = q.real() >= 0.0 ? std::fabs(q.imag()) : std::abs(z);
        best = std::min(best, dist);
    }
    return best;
}

double asymptote_bound(double r, double rho) {
    check_rho(rho);
    return (1.0 + rho * std::log(r)) / (std::pow(r, rho - 1.0) * std::cos(kPi / (2.0 * rho)));
}

double curve_distance(cplx z, const std::vector<CurvePoint>& curve) {
    if (curve.empty()) throw DomainError("curve_distance needs a non-empty curve");
    double best = std::abs(z - curve.front().z());
    for (std::size_t i = 1; i < curve.size(); ++i) {
        cplx b = curve[i].z();
        best = std::min(best, std::abs(z - b));
        if (curve[i].branch != curve[i - 1].branch) continue;
        cplx a = curve[i - 1].z(), ab = b - a;
        double len2 = std::norm(ab);
        if (len2 == 0.0) continue;
        double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
        best = std::min(best, std::abs(z - (a + t * ab)));
    }
    return best;
}

}  // namespace mlsz
