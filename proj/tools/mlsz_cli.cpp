// Command-line front end over the C API: curve, zeros, verify, plot.
#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlsz.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

struct Exit {
    int code;
    std::string msg;
};

[[noreturn]] void invalid(const std::string& msg) { throw Exit{kExitInvalid, msg}; }

void check(mlsz_status s) {
    if (s == MLSZ_OK) return;
    throw Exit{s == MLSZ_ERR_DOMAIN ? kExitInvalid : kExitNumeric, mlsz_last_error()};
}

struct StrFree {
    void operator()(char* p) const { mlsz_string_free(p); }
};
using CStr = std::unique_ptr<char, StrFree>;

template <class T, void (*F)(T*)>
struct Deleter {
    void operator()(T* p) const { F(p); }
};
using Context = std::unique_ptr<mlsz_context, Deleter<mlsz_context, mlsz_context_free>>;
using Curve = std::unique_ptr<mlsz_curve, Deleter<mlsz_curve, mlsz_curve_free>>;
using Zeros = std::unique_ptr<mlsz_zeros, Deleter<mlsz_zeros, mlsz_zeros_free>>;
using ReportPtr = std::unique_ptr<mlsz_report, Deleter<mlsz_report, mlsz_report_free>>;

double parse_real(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (!s.empty() && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (s.empty() || ec != std::errc() || p != e) invalid("cannot parse " + what + " '" + s + "'");
    return v;
}

struct Complex {
    double re = 0.0, im = 0.0;
};

// Accepts a, bi, a+bi, a-bi, i, -i (j is allowed for i).
Complex parse_complex(std::string s) {
    std::erase(s, ' ');
    const std::string orig = s;
    if (s.empty()) invalid("empty complex number");
    Complex c;
    char last = s.back();
    if (last != 'i' && last != 'j') {
        c.re = parse_real(s, "complex number");
        return c;
    }
    s.pop_back();
    std::size_t k = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            k = i;
            break;
        }
    std::string re_part = k == std::string::npos ? "" : s.substr(0, k);
    std::string im_part = k == std::string::npos ? s : s.substr(k);
    if (!re_part.empty()) c.re = parse_real(re_part, "complex number '" + orig + "'");
    if (im_part.empty() || im_part == "+")
        c.im = 1.0;
    else if (im_part == "-")
        c.im = -1.0;
    else
        c.im = parse_real(im_part, "complex number '" + orig + "'");
    return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

mlsz_window parse_window(const std::string& s) {
    auto f = split(s, ',');
    if (f.size() != 4) invalid("window must be re_min,re_max,im_min,im_max");
    return {parse_real(f[0], "window"), parse_real(f[1], "window"), parse_real(f[2], "window"),
            parse_real(f[3], "window")};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) invalid("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) invalid("cannot write '" + path + "'");
    out << text;
    if (!out) invalid("write to '" + path + "' failed");
}

struct CurveArgs {
    double rho = 2.0;
    std::string which = "szego";
    int samples = 256;
    double h = 0.2;
    double r_max = 10.0;
    std::string out;
};

int run_curve(const CurveArgs& a) {
    mlsz_curve* raw = nullptr;
    if (a.which == "szego")
        check(mlsz_curve_szego(a.rho, a.samples, a.r_max, &raw));
    else if (a.which == "t")
        check(mlsz_curve_t(a.rho, a.samples, a.r_max, &raw));
    else
        check(mlsz_curve_sh(a.rho, a.h, a.samples, a.r_max, &raw));
    Curve c(raw);
    char* text = nullptr;
    check(mlsz_curve_to_csv(c.get(), &text));
    write_out(a.out, CStr(text).get());
    return 0;
}

struct ZerosArgs {
    double rho = 2.0;
    int n = 0;
    std::string lambda = "0";
    std::string window = "-1.8,1.8,-1.8,1.8";
    double tol = 1e-10;
    double strip_width = 0.0;
    std::string out;
};

int run_zeros(const ZerosArgs& a) {
    Complex lam = parse_complex(a.lambda);
    mlsz_window w = parse_window(a.window);
    mlsz_context* rc = nullptr;
    check(mlsz_context_create(a.rho, a.n, lam.re, lam.im, &rc));
    Context ctx(rc);
    mlsz_zeros* rz = nullptr;
    check(mlsz_zeros_locate(ctx.get(), w, a.tol, a.strip_width, &rz));
    Zeros z(rz);
    char* text = nullptr;
    check(mlsz_zeros_to_json(z.get(), &text));
    write_out(a.out, CStr(text).get());
    if (mlsz_zeros_warning_count(z.get()) > 0)
        std::cerr << "mlsz: warning: partial result, see header.warnings\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    double rho = 2.0;
    std::string lambda;
    std::string n_list;
    double h = 0.2;
    double delta2 = 0.2;
    double delta3 = 0.2;
    bool as_printed = false;
    std::string window = "-1.8,1.8,-1.8,1.8";
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    mlsz_verify_config cfg;
    mlsz_verify_config_default(&cfg);
    cfg.rho = a.rho;
    std::vector<double> lre, lim;
    if (!a.lambda.empty())
        for (const auto& s : split(a.lambda, ',')) {
            Complex c = parse_complex(s);
            lre.push_back(c.re);
            lim.push_back(c.im);
        }
    std::vector<int> ns;
    if (!a.n_list.empty())
        for (const auto& s : split(a.n_list, ',')) {
            double v = parse_real(s, "n");
            if (v != static_cast<int>(v)) invalid("n must be an integer, got '" + s + "'");
            ns.push_back(static_cast<int>(v));
        }
    cfg.lambda_re = lre.data();
    cfg.lambda_im = lim.data();
    cfg.n_lambda = lre.size();
    cfg.n_list = ns.data();
    cfg.n_n = ns.size();
    cfg.h = a.h;
    cfg.delta2 = a.delta2;
    cfg.delta3 = a.delta3;
    cfg.as_printed = a.as_printed ? 1 : 0;
    cfg.window = parse_window(a.window);
    mlsz_report* rr = nullptr;
    check(mlsz_verify_run(a.suite.c_str(), &cfg, &rr));
    ReportPtr r(rr);
    char* text = nullptr;
    check(mlsz_report_to_json(r.get(), &text));
    write_out(a.out, CStr(text).get());
    if (!mlsz_report_pass(r.get())) {
        std::cerr << "mlsz: verify " << a.suite << ": at least one check failed\n";
        return kExitFail;
    }
    return 0;
}

struct PlotArgs {
    std::vector<std::string> curves;
    std::vector<std::string> zeros;
    std::string out;
};

int run_plot(const PlotArgs& a) {
    std::vector<std::string> ct, zt;
    for (const auto& p : a.curves) ct.push_back(read_file(p));
    for (const auto& p : a.zeros) zt.push_back(read_file(p));
    std::vector<const char*> cp, zp;
    for (const auto& s : ct) cp.push_back(s.c_str());
    for (const auto& s : zt) zp.push_back(s.c_str());
    char* svg = nullptr;
    check(mlsz_plot_svg_text(cp.data(), cp.size(), zp.data(), zp.size(), &svg));
    write_out(a.out, CStr(svg).get());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mittag-Leffler sections, tails, zeros and Szego curves"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mlsz_version()));

    CurveArgs ca;
    auto* curve = app.add_subcommand("curve", "Sample S(rho), T(rho) or the level curve S(rho,h) to CSV");
    curve->add_option("--rho", ca.rho, "Order parameter rho > 1")->capture_default_str();
    curve->add_option("--which", ca.which, "szego | t | sh")
        ->check(CLI::IsMember({"szego", "t", "sh"}))
        ->capture_default_str();
    curve->add_option("--samples", ca.samples, "Samples per branch")->capture_default_str();
    curve->add_option("--h", ca.h, "Level for --which sh")->capture_default_str();
    curve->add_option("--r-max", ca.r_max, "Largest radius on unbounded branches")->capture_default_str();
    curve->add_option("--out,-o", ca.out, "Output file (default stdout)");

    ZerosArgs za;
    auto* zeros = app.add_subcommand("zeros", "Locate zeros of I_n(R_n z; lambda) to JSON");
    zeros->add_option("--rho", za.rho, "Order parameter rho > 1")->capture_default_str();
    zeros->add_option("--n", za.n, "Section degree")->required();
    zeros->add_option("--lambda", za.lambda, "Complex lambda, e.g. 0.5+0.2i")->capture_default_str();
    zeros->add_option("--window", za.window, "re_min,re_max,im_min,im_max")->capture_default_str();
    zeros->add_option("--tol", za.tol, "Newton tolerance")->capture_default_str();
    zeros->add_option("--strip-width", za.strip_width, "Flag zeros this close to the asymptotic rays (0: off)")
        ->capture_default_str();
    zeros->add_option("--out,-o", za.out, "Output file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
    verify->add_option("suite", va.suite, "theorem1 | theorem2 | theorem3 | theorem4 | lemma1 | lemma4 | kn")
        ->required();
    verify->add_option("--rho", va.rho, "Order parameter rho > 1")->capture_default_str();
    verify->add_option("--lambda", va.lambda, "Comma-separated complex lambdas (default: suite's own)");
    verify->add_option("--n", va.n_list, "Comma-separated degrees (default: suite's own)");
    verify->add_option("--h", va.h)->capture_default_str();
    verify->add_option("--delta2", va.delta2)->capture_default_str();
    verify->add_option("--delta3", va.delta3)->capture_default_str();
    verify->add_flag("--as-printed", va.as_printed, "Use the constants exactly as printed (theorem4)");
    verify->add_option("--window", va.window, "Zero search window for theorem2")->capture_default_str();
    verify->add_option("--out,-o", va.out, "Output file (default stdout)");

    PlotArgs pa;
    auto* plot = app.add_subcommand("plot", "Render curve CSVs and zero JSONs to SVG");
    plot->add_option("--curve", pa.curves, "Curve CSV (repeatable)");
    plot->add_option("--zeros", pa.zeros, "Zero JSON (repeatable)");
    plot->add_option("--out,-o", pa.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (curve->parsed()) return run_curve(ca);
        if (zeros->parsed()) return run_zeros(za);
        if (verify->parsed()) return run_verify(va);
        return run_plot(pa);
    } catch (const Exit& e) {
        std::cerr << "mlsz: " << e.msg << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "mlsz: " << e.what() << "\n";
        return kExitNumeric;
    }
}
