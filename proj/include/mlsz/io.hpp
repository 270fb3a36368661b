#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mlsz/curves.hpp"
#include "mlsz/zeros.hpp"

namespace mlsz {

// Curves as CSV with header `branch,phi,r,re,im`, 15 significant digits.
std::string curve_to_csv(const std::vector<CurvePoint>& pts);
std::vector<CurvePoint> curve_from_csv(const std::string& text);  // throws DomainError

// A zero set together with the parameters that produced it.
struct ZeroFile {
    double rho = 2.0;
    int n = 1;
    cplx lambda{0.0, 0.0};
    Window window;
    double tol = 1e-10;
    double strip_width = 0.0;  // 0: no strip filter applied
    int masked_origin_multiplicity = 0;
    std::vector<std::string> warnings;
    std::vector<ZeroRecord> zeros;
};

std::string zeros_to_json(const ZeroFile& z);
ZeroFile zeros_from_json(const std::string& text);  // throws DomainError

// Round to 15 significant digits, the precision of every exported number.
double round15(double x);

struct PlotInput {
    std::vector<std::vector<CurvePoint>> curves;
    std::vector<ZeroRecord> zeros;
};

// Static SVG on the fixed viewport [−2.5, 2.5]²; byte-identical for identical input.
std::string render_svg(const PlotInput& in);

}  // namespace mlsz
