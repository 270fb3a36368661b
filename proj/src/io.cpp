#include "mlsz/io.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <cstdio>
#include <sstream>

#include "mlsz/error.hpp"

namespace mlsz {

using nlohmann::json;

double round15(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

namespace {

std::string g15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

double parse_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError(std::string("malformed number in field ") + what + ": '" + s + "'");
    }
    if (used != s.size()) throw DomainError(std::string("malformed number in field ") + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::string curve_to_csv(const std::vector<CurvePoint>& pts) {
    std::string s = "branch,phi,r,re,im\n";
    for (const auto& p : pts) {
        // re, im from the rounded polar pair, so reading the file back reproduces it.
        const double phi = round15(p.phi), r = round15(p.r);
        cplx z = std::polar(r, phi);
        s += branch_name(p.branch);
        for (double v : {phi, r, z.real(), z.imag()}) {
            s += ',';
            s += g15(v);
        }
        s += '\n';
    }
    return s;
}

std::vector<CurvePoint> curve_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw DomainError("curve CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "branch,phi,r,re,im") throw DomainError("curve CSV header must be 'branch,phi,r,re,im'");
    std::vector<CurvePoint> out;
    int row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 5) throw DomainError("curve CSV row " + std::to_string(row) + " does not have 5 fields");
        CurvePoint p;
        p.branch = branch_from_name(f[0]);
        p.phi = parse_double(f[1], "phi");
        p.r = parse_double(f[2], "r");
        parse_double(f[3], "re");
        parse_double(f[4], "im");
        out.push_back(p);
    }
    return out;
}

std::string zeros_to_json(const ZeroFile& z) {
    json h;
    h["rho"] = round15(z.rho);
    h["n"] = z.n;
    h["lambda_re"] = round15(z.lambda.real());
    h["lambda_im"] = round15(z.lambda.imag());
    h["window"] = {round15(z.window.re_min), round15(z.window.re_max), round15(z.window.im_min),
                   round15(z.window.im_max)};
    h["tol"] = round15(z.tol);
    h["strip_width"] = round15(z.strip_width);
    h["masked_origin_multiplicity"] = z.masked_origin_multiplicity;
    h["warnings"] = z.warnings;
    json zs = json::array();
    for (const auto& r : z.zeros) {
        json e;
        e["re"] = round15(r.location.real());
        e["im"] = round15(r.location.imag());
        e["residual_log"] = std::isfinite(r.residual_log) ? json(round15(r.residual_log)) : json(nullptr);
        e["certified"] = r.certified;
        e["near_asymptote"] = r.near_asymptote;
        e["multiplicity"] = r.multiplicity;
        zs.push_back(e);
    }
    json doc;
    doc["header"] = h;
    doc["zeros"] = zs;
    return doc.dump(2) + "\n";
}

ZeroFile zeros_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("zero JSON does not parse: ") + e.what());
    }
    try {
        ZeroFile z;
        const json& h = doc.at("header");
        z.rho = h.at("rho").get<double>();
        z.n = h.at("n").get<int>();
        z.lambda = {h.at("lambda_re").get<double>(), h.at("lambda_im").get<double>()};
        const json& w = h.at("window");
        if (!w.is_array() || w.size() != 4) throw DomainError("window must have 4 entries");
        z.window = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>(), w[3].get<double>()};
        z.tol = h.at("tol").get<double>();
        z.strip_width = h.value("strip_width", 0.0);
        z.masked_origin_multiplicity = h.at("masked_origin_multiplicity").get<int>();
        z.warnings = h.value("warnings", std::vector<std::string>{});
        for (const json& e : doc.at("zeros")) {
            ZeroRecord r;
            r.location = {e.at("re").get<double>(), e.at("im").get<double>()};
            const json& rl = e.at("residual_log");
            r.residual_log = rl.is_null() ? -std::numeric_limits<double>::infinity() : rl.get<double>();
            r.certified = e.at("certified").get<bool>();
            r.near_asymptote = e.at("near_asymptote").get<bool>();
            r.multiplicity = e.value("multiplicity", 1);
            z.zeros.push_back(r);
        }
        return z;
    } catch (const json::exception& e) {
        throw DomainError(std::string("zero JSON is missing or mistypes a field: ") + e.what());
    }
}

namespace {

constexpr double kView = 2.5;
constexpr int kPx = 600;

double sx(double x) { return (x + kView) / (2.0 * kView) * kPx; }
double sy(double y) { return (kView - y) / (2.0 * kView) * kPx; }

std::string f3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

bool visible(cplx z) { return std::fabs(z.real()) <= kView && std::fabs(z.imag()) <= kView; }

}  // namespace

std::string render_svg(const PlotInput& in) {
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(kPx) + "\" height=\"" +
         std::to_string(kPx) + "\" viewBox=\"0 0 " + std::to_string(kPx) + " " + std::to_string(kPx) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kPx) + "\" height=\"" + std::to_string(kPx) +
         "\" fill=\"white\"/>\n";
    s += "<g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
    s += "<line x1=\"0\" y1=\"" + f3(sy(0)) + "\" x2=\"" + std::to_string(kPx) + "\" y2=\"" + f3(sy(0)) + "\"/>\n";
    s += "<line x1=\"" + f3(sx(0)) + "\" y1=\"0\" x2=\"" + f3(sx(0)) + "\" y2=\"" + std::to_string(kPx) + "\"/>\n";
    for (int k = -2; k <= 2; ++k) {
        if (k == 0) continue;
        s += "<line x1=\"" + f3(sx(k)) + "\" y1=\"" + f3(sy(0) - 4) + "\" x2=\"" + f3(sx(k)) + "\" y2=\"" +
             f3(sy(0) + 4) + "\"/>\n";
        s += "<line x1=\"" + f3(sx(0) - 4) + "\" y1=\"" + f3(sy(k)) + "\" x2=\"" + f3(sx(0) + 4) + "\" y2=\"" +
             f3(sy(k)) + "\"/>\n";
    }
    s += "</g>\n";
    s += "<g id=\"curves\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\">\n";
    for (const auto& curve : in.curves) {
        std::string pts;
        auto flush = [&]() {
            if (pts.find(' ') != std::string::npos) s += "<polyline points=\"" + pts + "\"/>\n";
            pts.clear();
        };
        for (std::size_t i = 0; i < curve.size(); ++i) {
            if (i > 0 && curve[i].branch != curve[i - 1].branch) flush();
            cplx z = curve[i].z();
            if (!visible(z)) {
                flush();
                continue;
            }
            if (!pts.empty()) pts += ' ';
            pts += f3(sx(z.real())) + "," + f3(sy(z.imag()));
        }
        flush();
    }
    s += "</g>\n";
    s += "<g id=\"zeros\">\n";
    for (const auto& r : in.zeros) {
        if (!visible(r.location)) continue;
        double x = sx(r.location.real()), y = sy(r.location.imag());
        if (r.near_asymptote) {
            s += "<path d=\"M" + f3(x - 3) + "," + f3(y - 3) + " L" + f3(x + 3) + "," + f3(y + 3) + " M" + f3(x - 3) +
                 "," + f3(y + 3) + " L" + f3(x + 3) + "," + f3(y - 3) + "\" stroke=\"#999999\" stroke-width=\"1.2\"/>\n";
        } else {
            s += "<circle cx=\"" + f3(x) + "\" cy=\"" + f3(y) + "\" r=\"2.5\" fill=\"#c0392b\"/>\n";
        }
    }
    s += "</g>\n</svg>\n";
    return s;
}

}  // namespace mlsz
