#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include "mlsz.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    mlsz_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("status codes and last error") {
    mlsz_context* ctx = reinterpret_cast<mlsz_context*>(0x1);
    CHECK(mlsz_context_create(0.5, 10, 0.0, 0.0, &ctx) == MLSZ_ERR_DOMAIN);
    CHECK(ctx == nullptr);
    CHECK(std::strlen(mlsz_last_error()) > 0);
    REQUIRE(mlsz_context_create(2.0, 10, 0.0, 0.0, &ctx) == MLSZ_OK);
    CHECK(std::string(mlsz_last_error()).empty());
    mlsz_scaled v;
    CHECK(mlsz_combo(nullptr, 0.5, 0.0, &v) == MLSZ_ERR_DOMAIN);
    CHECK(mlsz_combo(ctx, 0.5, 0.0, nullptr) == MLSZ_ERR_DOMAIN);
    mlsz_context_free(ctx);
    mlsz_context_free(nullptr);
}

TEST_CASE("errors are per thread") {
    mlsz_context* ctx = nullptr;
    CHECK(mlsz_context_create(2.0, 0, 0.0, 0.0, &ctx) == MLSZ_ERR_DOMAIN);
    std::string other = "unset";
    std::thread t([&] { other = mlsz_last_error(); });
    t.join();
    CHECK(other.empty());
    CHECK(std::strlen(mlsz_last_error()) > 0);
}

TEST_CASE("values beyond double range come back scaled") {
    mlsz_scaled v;
    REQUIRE(mlsz_ml_eval(2.0, 40.0, 0.0, &v) == MLSZ_OK);
    CHECK(mlsz_scaled_log_abs(v) == doctest::Approx(1600.0 + std::log(2.0)).epsilon(1e-12));
    double re = 0, im = 0;
    CHECK(mlsz_scaled_to_complex(v, &re, &im) == MLSZ_ERR_NUMERIC);
    REQUIRE(mlsz_ml_eval(2.0, 1.0, 0.0, &v) == MLSZ_OK);
    REQUIRE(mlsz_scaled_to_complex(v, &re, &im) == MLSZ_OK);
    CHECK(re == doctest::Approx(std::exp(1.0) * std::erfc(-1.0)).epsilon(1e-13));
}

TEST_CASE("section plus tail through the C surface") {
    mlsz_context* ctx = nullptr;
    REQUIRE(mlsz_context_create(2.0, 15, 0.0, 0.0, &ctx) == MLSZ_OK);
    mlsz_scaled s, t, e;
    double z = 0.8;
    REQUIRE(mlsz_section(ctx, z, 0.0, &s) == MLSZ_OK);
    REQUIRE(mlsz_tail(ctx, z, 0.0, &t) == MLSZ_OK);
    REQUIRE(mlsz_ml_eval(2.0, mlsz_context_radius(ctx) * z, 0.0, &e) == MLSZ_OK);
    double sr, si, tr, ti, er, ei;
    mlsz_scaled_to_complex(s, &sr, &si);
    mlsz_scaled_to_complex(t, &tr, &ti);
    mlsz_scaled_to_complex(e, &er, &ei);
    CHECK(sr + tr == doctest::Approx(er).epsilon(1e-13));
    mlsz_context_free(ctx);
}

TEST_CASE("curve handle, CSV round trip and point access") {
    mlsz_curve* c = nullptr;
    REQUIRE(mlsz_curve_szego(2.0, 32, 10.0, &c) == MLSZ_OK);
    CHECK(mlsz_curve_size(c) == 96);
    mlsz_branch b;
    double phi, r;
    REQUIRE(mlsz_curve_point(c, 0, &b, &phi, &r) == MLSZ_OK);
    double u = 1.0;
    REQUIRE(mlsz_phase_u(r * std::cos(phi), r * std::sin(phi), 2.0, &u) == MLSZ_OK);
    CHECK(std::fabs(u) < 1e-12);
    CHECK(mlsz_curve_point(c, 96, &b, &phi, &r) == MLSZ_ERR_DOMAIN);
    char* csv = nullptr;
    REQUIRE(mlsz_curve_to_csv(c, &csv) == MLSZ_OK);
    std::string text = take(csv);
    mlsz_curve* back = nullptr;
    REQUIRE(mlsz_curve_from_csv(text.c_str(), &back) == MLSZ_OK);
    REQUIRE(mlsz_curve_to_csv(back, &csv) == MLSZ_OK);
    CHECK(take(csv) == text);
    CHECK(mlsz_curve_from_csv("nope", &back) == MLSZ_ERR_DOMAIN);
    mlsz_curve_free(back);
    mlsz_curve_free(c);
}

TEST_CASE("zeros handle and JSON round trip") {
    mlsz_context* ctx = nullptr;
    REQUIRE(mlsz_context_create(2.0, 1, 0.0, 0.0, &ctx) == MLSZ_OK);
    mlsz_zeros* z = nullptr;
    REQUIRE(mlsz_zeros_locate(ctx, {-2, 0, -1, 1}, 1e-12, 0.0, &z) == MLSZ_OK);
    REQUIRE(mlsz_zeros_size(z) == 1);
    mlsz_zero rec;
    REQUIRE(mlsz_zeros_get(z, 0, &rec) == MLSZ_OK);
    CHECK(rec.re == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::fabs(rec.im) < 1e-14);
    char* js = nullptr;
    REQUIRE(mlsz_zeros_to_json(z, &js) == MLSZ_OK);
    std::string text = take(js);
    mlsz_zeros* back = nullptr;
    REQUIRE(mlsz_zeros_from_json(text.c_str(), &back) == MLSZ_OK);
    REQUIRE(mlsz_zeros_to_json(back, &js) == MLSZ_OK);
    CHECK(take(js) == text);
    mlsz_zeros_free(back);
    mlsz_zeros_free(z);
    CHECK(mlsz_zeros_locate(ctx, {1, 0, 0, 1}, 1e-12, 0.0, &z) == MLSZ_ERR_DOMAIN);
    CHECK(mlsz_zeros_locate(ctx, {-1, 1, -1, 1}, 0.0, 0.0, &z) == MLSZ_ERR_DOMAIN);
    mlsz_context_free(ctx);

    REQUIRE(mlsz_context_create(2.0, 10, 1.0, 0.0, &ctx) == MLSZ_OK);
    REQUIRE(mlsz_zeros_locate(ctx, {-1.8, 1.8, -1.8, 1.8}, 1e-10, 0.1, &z) == MLSZ_OK);
    CHECK(mlsz_zeros_masked_origin(z) == 11);
    int w = 0;
    REQUIRE(mlsz_winding_number(ctx, {-1.8, 1.8, -1.8, 1.8}, &w) == MLSZ_OK);
    std::size_t total = 0;
    for (std::size_t i = 0; i < mlsz_zeros_size(z); ++i) {
        mlsz_zeros_get(z, i, &rec);
        total += static_cast<std::size_t>(rec.multiplicity);
    }
    CHECK(static_cast<int>(total) == w);
    mlsz_zeros_free(z);
    mlsz_context_free(ctx);
}

TEST_CASE("verify through the C surface") {
    mlsz_verify_config cfg;
    mlsz_verify_config_default(&cfg);
    CHECK(cfg.rho == 2.0);
    mlsz_report* r = nullptr;
    REQUIRE(mlsz_verify_run("lemma1", &cfg, &r) == MLSZ_OK);
    CHECK(mlsz_report_pass(r) == 1);
    CHECK(mlsz_report_check_count(r) == 1);
    char* js = nullptr;
    REQUIRE(mlsz_report_to_json(r, &js) == MLSZ_OK);
    CHECK(take(js).find("\"lemma1/asymptote_distance\"") != std::string::npos);
    mlsz_report_free(r);
    CHECK(mlsz_verify_run("bogus", &cfg, &r) == MLSZ_ERR_DOMAIN);
    int ns[] = {1};
    cfg.n_list = ns;
    cfg.n_n = 1;
    CHECK(mlsz_verify_run("kn", &cfg, &r) == MLSZ_ERR_DOMAIN);
    cfg.n_n = 0;
    cfg.n_list = nullptr;
    cfg.n_lambda = 1;
    CHECK(mlsz_verify_run("theorem1", &cfg, &r) == MLSZ_ERR_DOMAIN);  // lambda arrays missing
}

TEST_CASE("plots are deterministic and accept empty input") {
    char* a = nullptr;
    REQUIRE(mlsz_plot_svg(nullptr, 0, nullptr, 0, &a) == MLSZ_OK);
    std::string empty = take(a);
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("polyline") == std::string::npos);
    mlsz_curve* c = nullptr;
    REQUIRE(mlsz_curve_szego(2.0, 64, 10.0, &c) == MLSZ_OK);
    const mlsz_curve* cs[] = {c};
    REQUIRE(mlsz_plot_svg(cs, 1, nullptr, 0, &a) == MLSZ_OK);
    std::string one = take(a);
    REQUIRE(mlsz_plot_svg(cs, 1, nullptr, 0, &a) == MLSZ_OK);
    CHECK(take(a) == one);
    CHECK(one.find("polyline") != std::string::npos);
    char* csv = nullptr;
    mlsz_curve_to_csv(c, &csv);
    const char* texts[] = {csv};
    REQUIRE(mlsz_plot_svg_text(texts, 1, nullptr, 0, &a) == MLSZ_OK);
    CHECK(take(a) == one);
    mlsz_string_free(csv);
    const char* bad[] = {"{not json"};
    CHECK(mlsz_plot_svg_text(nullptr, 0, bad, 1, &a) == MLSZ_ERR_DOMAIN);
    CHECK(mlsz_plot_svg(nullptr, 1, nullptr, 0, &a) == MLSZ_ERR_DOMAIN);
    mlsz_curve_free(c);
}
