#pragma once

#include <complex>
#include <string>
#include <vector>

namespace mlsz {

using cplx = std::complex<double>;

enum class SzegoBranch { inner, outer, arc, t };

const char* branch_name(SzegoBranch b);
SzegoBranch branch_from_name(const std::string& s);  // throws DomainError

struct CurvePoint {
    double phi = 0.0;
    double r = 0.0;
    SzegoBranch branch = SzegoBranch::inner;
    cplx z() const { return std::polar(r, phi); }
};

enum class RegionId { omega1 = 1, omega2, omega3, omega4, omega5 };

struct RegionSpec {
    RegionId id = RegionId::omega1;
    double h = 0.2;
    double delta2 = 0.2;
    double delta3 = 0.2;
    double rho = 2.0;

    void validate() const;  // throws DomainError
};

// u(re^{iφ}) = r^ρ cos ρφ − 1 − ρ ln r.
double phase_u(cplx z, double rho);

// Root of u(σe^{iφ}) = 0 with σ <= 1 (inner) or σ >= 1 (outer).
double szego_sigma(double phi, double rho, SzegoBranch branch);

// Root of u(re^{iφ}) = −h/2 on the inner or outer side of the minimum of u in ln r.
double s_h_level_r(double phi, double rho, double h, SzegoBranch branch);

// Smallest |φ| at which the level u = −h/2 is reached: cos ρφ = e^{−h/2}.
double s_h_min_phi(double rho, double h);

// Inner branch, circular arc (both endpoints), outer branch cut at r_max.
std::vector<CurvePoint> szego_curve(double rho, int samples_per_branch, double r_max = 10.0);
// `samples` is rounded up to an odd count so that z = 1 is always included.
std::vector<CurvePoint> t_curve(double rho, int samples, double r_max = 10.0);
std::vector<CurvePoint> s_h_curve(double rho, double h, int samples_per_branch, double r_max = 10.0);

// Angle at which the outer branch reaches radius r.
double outer_phi_at_radius(double r, double rho);

double classic_szego_indicator(cplx z);

// r^ρ = ρφ / sin ρφ, |φ| < π/ρ.
double t_curve_r(double phi, double rho);

// The upper common point d·e^{iγ} of S(ρ,h) and T(ρ).
struct Intersection {
    double d = 0.0;
    double gamma = 0.0;
};
Intersection t_sh_intersection(double rho, double h);

// Distance from z to a sampled curve, joining consecutive points of the same branch.
double curve_distance(cplx z, const std::vector<CurvePoint>& curve);

bool region_contains(cplx z, const RegionSpec& spec);

// Distance from z to the nearer of the rays arg z = ±π/(2ρ).
double asymptote_distance(cplx z, double rho);
// (1 + ρ ln r) / (r^{ρ−1} cos(π/(2ρ))).
double asymptote_bound(double r, double rho);

}  // namespace mlsz
