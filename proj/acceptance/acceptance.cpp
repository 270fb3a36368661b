// Acceptance run: one PASS/FAIL line per criterion A1..A11, exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mlsz/curves.hpp"
#include "mlsz/mitlef.hpp"
#include "mlsz/special.hpp"
#include "mlsz/suites.hpp"
#include "mlsz/zeros.hpp"

using namespace mlsz;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string list(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt("%.4g", v[i]);
    return s + "]";
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

std::vector<cplx> points_of(const ZeroSet& zs) {
    std::vector<cplx> v;
    for (const auto& r : zs.zeros)
        for (int k = 0; k < r.multiplicity; ++k) v.push_back(r.location);
    return v;
}

std::string failing_checks(const Report& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.pass) s += " " + c.check_id + (c.params.contains("lambda") ? c.params["lambda"].dump() : "") + "=" +
                          list(c.metric_list);
    return s;
}

// A1: closed forms at ρ = 2 and ρ = 1.
Outcome a1() {
    double worst2 = 0.0, worst1 = 0.0;
    for (int i = 0; i < 81; ++i) {
        double x = -3.0 + 0.1 * i;
        cplx ref = std::exp(x * x) * (1.0 + erf(cplx(x)));
        worst2 = std::max(worst2, rel_diff(ml_series(x, 2.0), ScaledComplex(ref)));
    }
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < 100; ++k) {
        cplx z = std::polar(30.0 * std::sqrt((k + 0.5) / 100.0), k * golden);
        worst1 = std::max(worst1, rel_diff(ml_series(z, 1.0), ScaledComplex::exp(z)));
    }
    return {worst2 <= 1e-9 && worst1 <= 1e-12,
            fmt("rho=2 vs e^{z^2}(1+erf z), 81 real points: max rel %.2e (tol 1e-9); rho=1 vs exp, 100 points "
                "|z|<=30: max rel %.2e (tol 1e-12)",
                worst2, worst1)};
}

// A2: series against the large-|w| expansion on |w| = 20.
Outcome a2() {
    bool ok = true;
    std::string d;
    for (double rho : {1.5, 2.0, 4.0}) {
        const double edge = kPi / (2.0 * rho);
        double exp_sector = 0.0, alg_sector = 0.0;
        for (int k = 0; k <= 8; ++k) {
            double t = edge * k / 8.0;
            for (double s : {1.0, -1.0})
                exp_sector = std::max(exp_sector, rel_diff(ml_asymptotic(std::polar(20.0, s * t), rho),
                                                           ml_series(std::polar(20.0, s * t), rho)));
            double a = edge + (kPi - edge) * k / 8.0;
            for (double s : {1.0, -1.0})
                alg_sector = std::max(alg_sector, rel_diff(ml_asymptotic(std::polar(20.0, s * a), rho),
                                                           ml_series(std::polar(20.0, s * a), rho)));
        }
        double next = std::fabs(std::tgamma(1.0 - 1.0 / rho) / std::tgamma(1.0 - 2.0 / rho)) / 20.0;
        ok = ok && exp_sector <= 0.025 && alg_sector <= 0.025;
        d += fmt(" rho=%g: exp-sector %.3g, alg-sector %.3g (first omitted term %.3g);", rho, exp_sector, alg_sector,
                 next);
    }
    return {ok, "relative gap on |w|=20, tol 0.025:" + d};
}

// A3: splitting identity and agreement of the two forms of I_n.
Outcome a3() {
    double split = 0.0, forms = 0.0, split_scaled = 0.0, forms_scaled = 0.0;
    const cplx lam(0.3, 0.2);
    for (double rho : {1.5, 2.0, 4.0})
        for (int n : {5, 15, 30}) {
            MLContext ctx(rho, n, lam);
            for (int k = 0; k < 32; ++k) {
                cplx z = std::polar(1.0, 2.0 * kPi * (k + 0.5) / 32.0);
                ScaledComplex s = section(z, ctx), t = tail(z, ctx).value;
                ScaledComplex e = ml_series(ctx.radius_n() * z, rho);
                double cond = std::exp(std::max({s.log_mag(), t.log_mag(), ml_series(ctx.radius_n(), rho).log_mag()}) -
                                       e.log_mag());
                double es = rel_diff(s + t, e);
                split = std::max(split, es);
                split_scaled = std::max(split_scaled, es / std::max(1.0, cond));
                ScaledComplex mixed = combo_form(z, ctx, ComboForm::mixed);
                ScaledComplex series = combo_form(z, ctx, ComboForm::series_form);
                double cf = std::exp(std::max({s.log_mag(), e.log_mag(), ml_series(ctx.radius_n(), rho).log_mag()}) -
                                     combo(z, ctx).log_mag());
                double ef = rel_diff(mixed, series);
                forms = std::max(forms, ef);
                forms_scaled = std::max(forms_scaled, ef / std::max(1.0, cf));
            }
        }
    return {split <= 1e-12 && forms <= 1e-10,
            fmt("rho in {1.5,2,4}, n in {5,15,30}, 32 points on |z|=1, lambda=0.3+0.2i: |s+t-E|/|E| max %.2e (tol "
                "1e-12), forms max %.2e (tol 1e-10); divided by conditioning: %.2e, %.2e",
                split, forms, split_scaled, forms_scaled)};
}

// A4: located zeros approach S(2) as n grows.
Outcome a4() {
    const auto curve = szego_curve(2.0, 4000, 10.0);
    const Window main{-1.8, 1.8, -1.8, 1.8}, outer{1.8, 2.6, -1.8, 1.8};
    bool ok = true;
    std::string d;
    double lam0_radius = 0.0;
    for (cplx lam : {cplx(0.0), cplx(1.0), cplx(0.5)}) {
        std::vector<double> dist;
        for (int n : {25, 50, 100}) {
            MLContext ctx(2.0, n, lam);
            auto zs = locate_zeros(ctx, main, 1e-10);
            if (lam != cplx(0.0)) {
                auto more = locate_zeros(ctx, outer, 1e-10);
                zs.zeros.insert(zs.zeros.end(), more.zeros.begin(), more.zeros.end());
            }
            auto part = strip_filter(zs.zeros, 2.0, 0.1);
            double m = 0.0;
            for (const auto& r : part.kept) {
                m = std::max(m, curve_distance(r.location, curve));
                if (lam == cplx(0.0) && n == 100) lam0_radius = std::max(lam0_radius, std::abs(r.location));
            }
            dist.push_back(m);
        }
        ok = ok && strictly_decreasing(dist);
        d += fmt(" lambda=%g: %s;", lam.real(), list(dist).c_str());
    }
    ok = ok && lam0_radius <= 1.1;
    return {ok, "max distance to S(2) after strip filter 0.1, n=25,50,100:" + d +
                    fmt(" lambda=0 n=100 max|z| %.4f (<= 1.1)", lam0_radius)};
}

Outcome from_suite(const char* suite, VerifyConfig cfg, const std::function<bool(const CheckResult&)>& keep,
                   const std::string& what) {
    Report r = run_suite(suite, cfg);
    std::erase_if(r.checks, [&](const CheckResult& c) { return !keep(c); });
    std::string d = what + fmt(": %zu checks", r.checks.size());
    if (r.pass())
        d += ", all pass";
    else
        d += "; failing:" + failing_checks(r);
    return {r.pass() && !r.checks.empty(), d};
}

auto all_checks = [](const CheckResult&) { return true; };

// A5: zero-free regions.
Outcome a5() {
    VerifyConfig cfg;
    cfg.lambdas = {0.0, 1.0, 0.3, cplx(0.7, 0.2)};
    cfg.n_list = {50, 100};
    Report r = run_suite("theorem2", cfg);
    std::string d;
    for (const auto& c : r.checks) d += " " + c.params["lambda"].dump() + "->" + list(c.metric_list);
    return {r.pass(), "zeros inside Omega_1..5 (h=d2=d3=0.2), n=50,100:" + d};
}

// A6: erfc scaling limit.
Outcome a6() {
    VerifyConfig cfg;
    cfg.lambdas = {0.0, 0.5, 1.0};
    cfg.n_list = {50, 100, 200};
    Report r = run_suite("theorem3", cfg);
    bool ok = true;
    std::string d;
    for (const auto& c : r.checks) {
        if (c.check_id == "theorem3/sup_error") {
            ok = ok && strictly_decreasing(c.metric_list);
            d += " sup lambda=" + c.params["lambda"].dump() + " " + list(c.metric_list) + ";";
        } else if (c.check_id == "theorem3/center") {
            ok = ok && c.metric_list.back() < 0.05;
            d += fmt(" |lhs(0)-1/2| at n=200: %.4g (< 0.05);", c.metric_list.back());
        }
    }
    return {ok, "21x21 grid |zeta|<=2, n=50,100,200:" + d};
}

Outcome a7() {
    VerifyConfig cfg;
    cfg.lambdas = {0.0, 1.0};
    cfg.n_list = {75, 300};
    Report r = run_suite("theorem4", cfg);
    std::string d;
    for (const auto& c : r.checks)
        d += " " + c.check_id.substr(9) + c.params["lambda"].dump() + "=" + list(c.metric_list) + (c.pass ? "" : "(red)");
    return {r.pass(), "n=75 -> 300, |zeta|<=1.5:" + d};
}

Outcome a8() {
    VerifyConfig cfg;
    cfg.n_list = {20, 80};
    Report r = run_suite("kn", cfg);
    double worst = 0.0;
    for (const auto& c : r.checks) worst = std::max(worst, c.metric_list.back());
    return {r.pass(), fmt("6 samples, |ratio-1| non-increasing n=20 -> 80, worst at n=80 %.4g (< 0.15)", worst) +
                          (r.pass() ? "" : "; failing:" + failing_checks(r))};
}

Outcome a9() {
    VerifyConfig cfg;
    cfg.n_list = {100, 200};
    return from_suite("lemma4", cfg, all_checks,
                      "C1=1; Omega1/5 ln|J1'| >= ln(C1 (n/rho)^(1/2)), Omega4 ln|J2'| >= n ln(1+h e^(1/rho)/2), "
                      "Omega2/3 |J'| <= 1e-2 at n=200");
}

Outcome a10() {
    Report r = run_suite("lemma1", {});
    const auto& c = r.checks.front();
    return {r.pass(), "outer-branch asymptote distance at r=10,30,100,300: " + list(c.metric_list) + ", bounds " +
                          c.params["bound_list"].dump()};
}

// A11: the two zero finders agree, and winding numbers add up.
Outcome a11() {
    bool ok = true;
    std::string d;
    std::mt19937 gen(20240611);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    int splits = 0, additive = 0;
    for (auto [rho, n] : {std::pair{2.0, 15}, std::pair{4.0, 25}}) {
        MLContext ctx(rho, n);
        auto poly = poly_zeros(ctx);
        double reach = 0.0;
        for (const auto& r : poly.zeros) reach = std::max(reach, std::abs(r.location));
        const Window w{-reach - 0.25, reach + 0.25, -reach - 0.25, reach + 0.25};
        auto found = locate_zeros(ctx, w, 1e-12);
        double m = matching_distance(points_of(found), points_of(poly));
        ok = ok && m <= 1e-8;
        d += fmt(" (rho=%g,n=%d) matching %.2e;", rho, n, m);
        const int total = winding_number(ctx, w);
        for (int k = 0; k < 10; ++k) {
            Window a = w, b = w;
            if (k % 2 == 0) {
                a.re_max = b.re_min = w.re_min + u(gen) * (w.re_max - w.re_min);
            } else {
                a.im_max = b.im_min = w.im_min + u(gen) * (w.im_max - w.im_min);
            }
            ++splits;
            if (winding_number(ctx, a) + winding_number(ctx, b) == total) ++additive;
        }
    }
    ok = ok && additive == splits;
    return {ok, "lambda=0 poly vs argument principle (tol 1e-8):" + d + fmt(" winding additive on %d/%d random splits",
                                                                           additive, splits)};
}

}  // namespace

int main() {
    struct Item {
        const char* id;
        Outcome (*run)();
    };
    const Item items[] = {{"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},   {"A5", a5},  {"A6", a6},
                          {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}, {"A11", a11}};
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& it : items) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%-3s %s  %s  [%.1fs]\n", it.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("acceptance: %d/%zu criteria pass  [%.1fs]\n", static_cast<int>(std::size(items)) - failed,
                std::size(items), total);
    return failed == 0 ? 0 : 1;
}
