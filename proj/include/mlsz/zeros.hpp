#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mlsz/mitlef.hpp"

namespace mlsz {

struct Window {
    double re_min = -1.0, re_max = 1.0, im_min = -1.0, im_max = 1.0;

    void validate() const;  // throws DomainError
    bool contains(cplx z) const;
    double diameter() const;
};

struct ZeroRecord {
    cplx location{0.0, 0.0};
    double residual = 0.0;      // size of the last Newton step
    double residual_log = 0.0;  // ln |I_n| at the reported point
    bool certified = false;     // winding number 1 on a small disk around the point
    bool near_asymptote = false;
    int multiplicity = 1;       // > 1 only for unresolved clusters
};

struct ZeroSet {
    std::vector<ZeroRecord> zeros;
    // Trivial zero of I_n(·;1) at the origin, divided out before the search.
    int masked_origin_multiplicity = 0;
    int total_winding = 0;
    std::vector<std::string> warnings;
};

struct LocateOptions {
    double tol = 1e-10;
    double polish_diameter = 1e-3;
    double cluster_floor = 1e-6;
    int max_retries = 5;
};

// All n zeros of s_n(R_n z) (λ must be 0), by Aberth–Ehrlich iteration.
ZeroSet poly_zeros(const MLContext& ctx, double tol = 1e-12);

// Winding number of I_n(R_n ·; λ) around the rectangle (origin factor removed for λ = 1).
int winding_number(const MLContext& ctx, const Window& w);

ZeroSet locate_zeros(const MLContext& ctx, const Window& w, double tol = 1e-10);
ZeroSet locate_zeros(const MLContext& ctx, const Window& w, const LocateOptions& opt);

struct StripPartition {
    std::vector<ZeroRecord> kept;
    std::vector<ZeroRecord> filtered;
};

// Flags records closer than strip_width to the rays arg z = ±π/(2ρ).
StripPartition strip_filter(std::vector<ZeroRecord>& records, double rho, double strip_width);

// Optimal (assignment) matching distance between two point sets of equal size:
// the minimum over bijections of the maximum pair distance.
double matching_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace mlsz
