#include "mlsz.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "mlsz/curves.hpp"
#include "mlsz/error.hpp"
#include "mlsz/io.hpp"
#include "mlsz/mitlef.hpp"
#include "mlsz/suites.hpp"
#include "mlsz/zeros.hpp"

struct mlsz_context {
    mlsz::MLContext ctx;
};

struct mlsz_curve {
    std::vector<mlsz::CurvePoint> points;
};

struct mlsz_zeros {
    mlsz::ZeroFile file;
};

struct mlsz_report {
    mlsz::Report report;
};

namespace {

thread_local std::string g_last_error;

mlsz_status fail(mlsz_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

// Runs `f`, mapping library exceptions to status codes.
template <class F>
mlsz_status guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return MLSZ_OK;
    } catch (const mlsz::DomainError& e) {
        return fail(MLSZ_ERR_DOMAIN, e.what());
    } catch (const mlsz::NumericError& e) {
        return fail(MLSZ_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(MLSZ_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MLSZ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MLSZ_ERR_INTERNAL, "unknown error");
    }
}

void need(const void* p, const char* what) {
    if (!p) throw mlsz::DomainError(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.data(), s.size() + 1);
    return p;
}

mlsz_scaled to_c(const mlsz::ScaledComplex& v) {
    return {v.mantissa().real(), v.mantissa().imag(), v.exponent()};
}

mlsz::Window from_c(const mlsz_window& w) { return {w.re_min, w.re_max, w.im_min, w.im_max}; }

mlsz_branch to_c(mlsz::SzegoBranch b) {
    switch (b) {
        case mlsz::SzegoBranch::inner: return MLSZ_BRANCH_INNER;
        case mlsz::SzegoBranch::outer: return MLSZ_BRANCH_OUTER;
        case mlsz::SzegoBranch::arc: return MLSZ_BRANCH_ARC;
        case mlsz::SzegoBranch::t: return MLSZ_BRANCH_T;
    }
    return MLSZ_BRANCH_INNER;
}

template <class F>
mlsz_status make_curve(mlsz_curve** out, F&& build) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        auto* c = new mlsz_curve{build()};
        *out = c;
    });
}

}  // namespace

extern "C" {

const char* mlsz_last_error(void) { return g_last_error.c_str(); }

const char* mlsz_version(void) { return "1.0.0"; }

void mlsz_string_free(char* s) { std::free(s); }

mlsz_status mlsz_scaled_to_complex(mlsz_scaled v, double* re, double* im) {
    return guard([&] {
        need(re, "re");
        need(im, "im");
        mlsz::cplx z = mlsz::ScaledComplex::from_parts({v.re, v.im}, v.exp2).to_complex();
        *re = z.real();
        *im = z.imag();
    });
}

double mlsz_scaled_log_abs(mlsz_scaled v) {
    double m = std::hypot(v.re, v.im);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(m) + static_cast<double>(v.exp2) * std::log(2.0);
}

mlsz_status mlsz_ml_eval(double rho, double w_re, double w_im, mlsz_scaled* out) {
    return guard([&] {
        need(out, "out");
        *out = to_c(mlsz::ml_series({w_re, w_im}, rho));
    });
}

mlsz_status mlsz_context_create(double rho, int n, double lambda_re, double lambda_im, mlsz_context** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = new mlsz_context{mlsz::MLContext(rho, n, {lambda_re, lambda_im})};
    });
}

void mlsz_context_free(mlsz_context* ctx) { delete ctx; }

double mlsz_context_radius(const mlsz_context* ctx) {
    return ctx ? ctx->ctx.radius_n() : std::numeric_limits<double>::quiet_NaN();
}

mlsz_status mlsz_section(const mlsz_context* ctx, double z_re, double z_im, mlsz_scaled* out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        *out = to_c(mlsz::section({z_re, z_im}, ctx->ctx));
    });
}

mlsz_status mlsz_tail(const mlsz_context* ctx, double z_re, double z_im, mlsz_scaled* out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        *out = to_c(mlsz::tail({z_re, z_im}, ctx->ctx).value);
    });
}

mlsz_status mlsz_combo(const mlsz_context* ctx, double z_re, double z_im, mlsz_scaled* out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        *out = to_c(mlsz::combo({z_re, z_im}, ctx->ctx));
    });
}

mlsz_status mlsz_curve_szego(double rho, int samples, double r_max, mlsz_curve** out) {
    return make_curve(out, [&] { return mlsz::szego_curve(rho, samples, r_max); });
}

mlsz_status mlsz_curve_t(double rho, int samples, double r_max, mlsz_curve** out) {
    return make_curve(out, [&] { return mlsz::t_curve(rho, samples, r_max); });
}

mlsz_status mlsz_curve_sh(double rho, double h, int samples, double r_max, mlsz_curve** out) {
    return make_curve(out, [&] { return mlsz::s_h_curve(rho, h, samples, r_max); });
}

mlsz_status mlsz_curve_from_csv(const char* text, mlsz_curve** out) {
    return make_curve(out, [&] {
        need(text, "text");
        return mlsz::curve_from_csv(text);
    });
}

void mlsz_curve_free(mlsz_curve* c) { delete c; }

size_t mlsz_curve_size(const mlsz_curve* c) { return c ? c->points.size() : 0; }

mlsz_status mlsz_curve_point(const mlsz_curve* c, size_t i, mlsz_branch* branch, double* phi, double* r) {
    return guard([&] {
        need(c, "curve");
        if (i >= c->points.size()) throw mlsz::DomainError("curve index out of range");
        const auto& p = c->points[i];
        if (branch) *branch = to_c(p.branch);
        if (phi) *phi = p.phi;
        if (r) *r = p.r;
    });
}

mlsz_status mlsz_curve_to_csv(const mlsz_curve* c, char** out) {
    return guard([&] {
        need(c, "curve");
        need(out, "out");
        *out = dup(mlsz::curve_to_csv(c->points));
    });
}

mlsz_status mlsz_phase_u(double z_re, double z_im, double rho, double* out) {
    return guard([&] {
        need(out, "out");
        *out = mlsz::phase_u({z_re, z_im}, rho);
    });
}

mlsz_status mlsz_asymptote_distance(double z_re, double z_im, double rho, double* out) {
    return guard([&] {
        need(out, "out");
        *out = mlsz::asymptote_distance({z_re, z_im}, rho);
    });
}

mlsz_status mlsz_zeros_locate(const mlsz_context* ctx, mlsz_window w, double tol, double strip_width,
                              mlsz_zeros** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        *out = nullptr;
        const auto& c = ctx->ctx;
        mlsz::Window win = from_c(w);
        win.validate();
        if (!(tol > 0.0)) throw mlsz::DomainError("tol must be positive");
        if (strip_width < 0.0 || !std::isfinite(strip_width)) throw mlsz::DomainError("strip_width must be >= 0");
        mlsz::ZeroSet zs;
        if (c.lambda() == mlsz::cplx(0.0)) {
            zs = mlsz::poly_zeros(c, tol);
            std::erase_if(zs.zeros, [&](const mlsz::ZeroRecord& r) { return !win.contains(r.location); });
        } else {
            zs = mlsz::locate_zeros(c, win, tol);
        }
        if (strip_width > 0.0) mlsz::strip_filter(zs.zeros, c.rho(), strip_width);
        auto* z = new mlsz_zeros;
        z->file.rho = c.rho();
        z->file.n = c.n();
        z->file.lambda = c.lambda();
        z->file.window = win;
        z->file.tol = tol;
        z->file.strip_width = strip_width;
        z->file.masked_origin_multiplicity = zs.masked_origin_multiplicity;
        z->file.warnings = std::move(zs.warnings);
        z->file.zeros = std::move(zs.zeros);
        *out = z;
    });
}

mlsz_status mlsz_winding_number(const mlsz_context* ctx, mlsz_window w, int* out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        *out = mlsz::winding_number(ctx->ctx, from_c(w));
    });
}

mlsz_status mlsz_zeros_from_json(const char* text, mlsz_zeros** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = nullptr;
        *out = new mlsz_zeros{mlsz::zeros_from_json(text)};
    });
}

void mlsz_zeros_free(mlsz_zeros* z) { delete z; }

size_t mlsz_zeros_size(const mlsz_zeros* z) { return z ? z->file.zeros.size() : 0; }

mlsz_status mlsz_zeros_get(const mlsz_zeros* z, size_t i, mlsz_zero* out) {
    return guard([&] {
        need(z, "zeros");
        need(out, "out");
        if (i >= z->file.zeros.size()) throw mlsz::DomainError("zero index out of range");
        const auto& r = z->file.zeros[i];
        *out = {r.location.real(), r.location.imag(), r.residual_log, r.certified ? 1 : 0, r.near_asymptote ? 1 : 0,
                r.multiplicity};
    });
}

int mlsz_zeros_masked_origin(const mlsz_zeros* z) { return z ? z->file.masked_origin_multiplicity : 0; }

size_t mlsz_zeros_warning_count(const mlsz_zeros* z) { return z ? z->file.warnings.size() : 0; }

mlsz_status mlsz_zeros_to_json(const mlsz_zeros* z, char** out) {
    return guard([&] {
        need(z, "zeros");
        need(out, "out");
        *out = dup(mlsz::zeros_to_json(z->file));
    });
}

void mlsz_verify_config_default(mlsz_verify_config* cfg) {
    if (!cfg) return;
    mlsz::VerifyConfig d;
    *cfg = {};
    cfg->rho = d.rho;
    cfg->h = d.h;
    cfg->delta2 = d.delta2;
    cfg->delta3 = d.delta3;
    cfg->as_printed = d.as_printed ? 1 : 0;
    cfg->window = {d.window.re_min, d.window.re_max, d.window.im_min, d.window.im_max};
}

mlsz_status mlsz_verify_run(const char* suite, const mlsz_verify_config* cfg, mlsz_report** out) {
    return guard([&] {
        need(suite, "suite");
        need(cfg, "cfg");
        need(out, "out");
        *out = nullptr;
        mlsz::VerifyConfig c;
        c.rho = cfg->rho;
        if (cfg->n_lambda > 0) {
            need(cfg->lambda_re, "lambda_re");
            need(cfg->lambda_im, "lambda_im");
            for (size_t i = 0; i < cfg->n_lambda; ++i) c.lambdas.emplace_back(cfg->lambda_re[i], cfg->lambda_im[i]);
        }
        if (cfg->n_n > 0) {
            need(cfg->n_list, "n_list");
            c.n_list.assign(cfg->n_list, cfg->n_list + cfg->n_n);
        }
        c.h = cfg->h;
        c.delta2 = cfg->delta2;
        c.delta3 = cfg->delta3;
        c.as_printed = cfg->as_printed != 0;
        c.window = from_c(cfg->window);
        *out = new mlsz_report{mlsz::run_suite(suite, c)};
    });
}

void mlsz_report_free(mlsz_report* r) { delete r; }

int mlsz_report_pass(const mlsz_report* r) { return r && r->report.pass() ? 1 : 0; }

size_t mlsz_report_check_count(const mlsz_report* r) { return r ? r->report.checks.size() : 0; }

mlsz_status mlsz_report_to_json(const mlsz_report* r, char** out) {
    return guard([&] {
        need(r, "report");
        need(out, "out");
        *out = dup(mlsz::report_to_json(r->report).dump(2) + "\n");
    });
}

mlsz_status mlsz_plot_svg(const mlsz_curve* const* curves, size_t n_curves, const mlsz_zeros* const* zeros,
                          size_t n_zeros, char** out) {
    return guard([&] {
        need(out, "out");
        if (n_curves) need(curves, "curves");
        if (n_zeros) need(zeros, "zeros");
        mlsz::PlotInput in;
        for (size_t i = 0; i < n_curves; ++i) {
            need(curves[i], "curve");
            in.curves.push_back(curves[i]->points);
        }
        for (size_t i = 0; i < n_zeros; ++i) {
            need(zeros[i], "zero set");
            in.zeros.insert(in.zeros.end(), zeros[i]->file.zeros.begin(), zeros[i]->file.zeros.end());
        }
        *out = dup(mlsz::render_svg(in));
    });
}

mlsz_status mlsz_plot_svg_text(const char* const* curve_csv, size_t n_curves, const char* const* zero_json,
                               size_t n_zeros, char** out) {
    return guard([&] {
        need(out, "out");
        if (n_curves) need(curve_csv, "curve_csv");
        if (n_zeros) need(zero_json, "zero_json");
        mlsz::PlotInput in;
        for (size_t i = 0; i < n_curves; ++i) {
            need(curve_csv[i], "curve CSV");
            in.curves.push_back(mlsz::curve_from_csv(curve_csv[i]));
        }
        for (size_t i = 0; i < n_zeros; ++i) {
            need(zero_json[i], "zero JSON");
            auto f = mlsz::zeros_from_json(zero_json[i]);
            in.zeros.insert(in.zeros.end(), f.zeros.begin(), f.zeros.end());
        }
        *out = dup(mlsz::render_svg(in));
    });
}

}  // extern "C"
