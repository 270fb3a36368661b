#include "mlsz/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mlsz/curves.hpp"
#include "mlsz/error.hpp"
#include "mlsz/io.hpp"
#include "mlsz/verify.hpp"

namespace mlsz {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

json num(double x) { return std::isfinite(x) ? json(round15(x)) : json(nullptr); }

json cnum(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

// Non-increasing, treating values below `floor` as equal (round-off level).
bool decreasing(const std::vector<double>& m, double floor = 1e-10) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (!(m[i] <= m[i - 1] || m[i] <= floor)) return false;
    return true;
}

template <class T>
std::vector<T> or_default(const std::vector<T>& v, std::vector<T> d) {
    return v.empty() ? d : v;
}

json base_params(const VerifyConfig& c) { return {{"rho", num(c.rho)}}; }

// theorem1 ------------------------------------------------------------------

void suite_theorem1(const VerifyConfig& c, Report& rep) {
    auto lams = or_default(c.lambdas, {0.0, 0.5, 1.0});
    auto ns = or_default(c.n_list, {50, 200});
    const std::vector<cplx> samples = {2.5,
                                       std::polar(1.5, 0.3),
                                       std::polar(3.0, -0.5),
                                       0.3,
                                       std::polar(0.5, 0.4),
                                       std::polar(0.7, -0.6),
                                       std::polar(0.8, 3.0 * kPi / 4.0),
                                       std::polar(1.5, 2.5),
                                       std::polar(0.4, -2.0)};
    RegimeParams rp{c.delta2, c.delta3};
    for (cplx lam : lams) {
        for (cplx z : samples) {
            Regime reg;
            try {
                reg = classify_regime(z, c.rho, rp);
            } catch (const RegimeError&) {
                continue;  // in a gap for this ρ
            }
            CheckResult cr;
            cr.check_id = std::string("theorem1/") + regime_name(reg);
            cr.params = base_params(c);
            cr.params["lambda"] = cnum(lam);
            cr.params["z"] = cnum(z);
            cr.n_list = ns;
            for (int n : ns) cr.metric_list.push_back(theorem1_check(z, MLContext(c.rho, n, lam), rp));
            cr.pass = decreasing(cr.metric_list);
            rep.checks.push_back(cr);
        }
    }
}

// theorem2 ------------------------------------------------------------------

void suite_theorem2(const VerifyConfig& c, Report& rep) {
    auto lams = or_default(c.lambdas, {0.0, 1.0, 0.3, cplx(0.7, 0.2)});
    auto ns = or_default(c.n_list, {50, 100});
    for (cplx lam : lams) {
        CheckResult cr;
        cr.check_id = "theorem2/zero_free";
        cr.params = base_params(c);
        cr.params["lambda"] = cnum(lam);
        cr.params["h"] = num(c.h);
        cr.params["delta2"] = num(c.delta2);
        cr.params["delta3"] = num(c.delta3);
        cr.params["window"] = {num(c.window.re_min), num(c.window.re_max), num(c.window.im_min), num(c.window.im_max)};
        json counts = json::array();
        cr.n_list = ns;
        bool ok = true;
        for (int n : ns) {
            MLContext ctx(c.rho, n, lam);
            ZeroSet zs = locate_zeros(ctx, c.window, 1e-10);
            int viol = 0;
            json per_region = json::array();
            for (int k = 1; k <= 5; ++k) {
                RegionSpec rs{static_cast<RegionId>(k), c.h, c.delta2, c.delta3, c.rho};
                int cnt = 0;
                for (const auto& r : zs.zeros)
                    if (region_contains(r.location, rs)) ++cnt;
                per_region.push_back(cnt);
                viol += cnt;
            }
            counts.push_back({{"n", n}, {"zeros", zs.zeros.size()}, {"per_region", per_region}});
            cr.metric_list.push_back(viol);
            ok = ok && viol == 0;
        }
        cr.params["counts"] = counts;
        cr.pass = ok;
        rep.checks.push_back(cr);
    }
}

// theorem3 ------------------------------------------------------------------

double theorem3_sup(const MLContext& ctx) {
    double sup = 0.0;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            cplx zeta(-2.0 + 0.2 * i, -2.0 + 0.2 * j);
            if (std::abs(zeta) > 2.0 + 1e-12) continue;
            sup = std::max(sup, theorem3_pair(zeta, ctx).error());
        }
    return sup;
}

void suite_theorem3(const VerifyConfig& c, Report& rep) {
    auto lams = or_default(c.lambdas, {0.0, 0.5, 1.0});
    auto ns = or_default(c.n_list, {50, 100, 200});
    for (cplx lam : lams) {
        CheckResult cr;
        cr.check_id = "theorem3/sup_error";
        cr.params = base_params(c);
        cr.params["lambda"] = cnum(lam);
        cr.params["grid"] = "21x21 on [-2,2]^2, |zeta| <= 2";
        cr.n_list = ns;
        for (int n : ns) cr.metric_list.push_back(theorem3_sup(MLContext(c.rho, n, lam)));
        cr.pass = decreasing(cr.metric_list, 0.0);
        rep.checks.push_back(cr);
        if (lam == cplx(0.0)) {
            CheckResult cc;
            cc.check_id = "theorem3/center";
            cc.params = base_params(c);
            cc.params["lambda"] = cnum(lam);
            cc.params["zeta"] = cnum(0.0);
            cc.params["threshold"] = 0.05;
            cc.n_list = ns;
            for (int n : ns) cc.metric_list.push_back(std::abs(theorem3_pair(0.0, MLContext(c.rho, n, lam)).lhs - 0.5));
            cc.pass = cc.metric_list.back() < 0.05;
            rep.checks.push_back(cc);
        }
    }
    CheckResult ce;
    ce.check_id = "theorem3/e_ratio";
    ce.params = base_params(c);
    ce.params["zeta"] = cnum(0.7);
    ce.params["threshold"] = 0.05;
    ce.n_list = {400};
    ce.metric_list.push_back(std::abs(theorem3_e_ratio(0.7, MLContext(c.rho, 400)) - std::exp(0.49)));
    ce.pass = ce.metric_list.back() < 0.05;
    rep.checks.push_back(ce);
}

// theorem4 ------------------------------------------------------------------

struct T4Case {
    const char* name;
    double phi;
    T4Part part;
    SzegoBranch branch;
};

std::vector<cplx> t4_grid() {
    std::vector<cplx> g;
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) {
            cplx zeta(-1.5 + 0.25 * i, -1.5 + 0.25 * j);
            if (std::abs(zeta) <= 1.5 + 1e-12) g.push_back(zeta);
        }
    return g;
}

// Whether λ removes the e^{±ζ} term of the limit.
bool exp_term_vanishes(const T4Case& tc, cplx lam) {
    if (tc.part == T4Part::two) return lam == cplx(1.0);
    return tc.branch == SzegoBranch::inner ? lam == cplx(1.0) : lam == cplx(0.0);
}

void suite_theorem4(const VerifyConfig& c, Report& rep) {
    auto lams = or_default(c.lambdas, {0.0, 1.0});
    auto ns = or_default(c.n_list, {75, 300});
    const double edge = kPi / (2.0 * c.rho);
    const std::vector<T4Case> cases = {{"part1_inner", 0.5 * edge, T4Part::one, SzegoBranch::inner},
                                       {"part1_outer", 0.5 * edge, T4Part::one, SzegoBranch::outer},
                                       {"part2", std::min(kPi, edge + 0.5 * (kPi + 1.0 - edge)), T4Part::two,
                                        SzegoBranch::arc}};
    const auto grid = t4_grid();
    T4Options opt{c.as_printed};
    for (const auto& tc : cases) {
        // φ = 0.25 and φ = 2 at ρ = 2.
        double phi = c.rho == 2.0 ? (tc.part == T4Part::one ? 0.25 : 2.0) : tc.phi;
        for (cplx lam : lams) {
            CheckResult cr, cv;
            cr.check_id = std::string("theorem4/") + tc.name + "/sup_error";
            cr.params = base_params(c);
            cr.params["lambda"] = cnum(lam);
            cr.params["phi"] = num(phi);
            cr.params["as_printed"] = c.as_printed;
            json taus = json::array();
            std::vector<double> spread;
            cr.n_list = ns;
            for (int n : ns) {
                Frame4 f = theorem4_frame(phi, c.rho, n, tc.part, tc.branch);
                MLContext ctx(c.rho, n, lam);
                double sup = 0.0;
                std::vector<cplx> lhs;
                for (cplx zeta : grid) {
                    LimitPair p = theorem4_pair(zeta, f, ctx, opt);
                    sup = std::max(sup, p.error());
                    lhs.push_back(p.lhs);
                }
                double sp = 0.0;
                for (std::size_t i = 0; i < lhs.size(); ++i)
                    for (std::size_t j = i + 1; j < lhs.size(); ++j) sp = std::max(sp, std::abs(lhs[i] - lhs[j]));
                spread.push_back(sp);
                cr.metric_list.push_back(sup);
                cr.params["xi"] = cnum(f.xi);
                taus.push_back(num(f.tau_n));
            }
            cr.params["tau_n"] = taus;
            cr.pass = decreasing(cr.metric_list, 0.0);
            rep.checks.push_back(cr);
            if (exp_term_vanishes(tc, lam)) {
                cv.check_id = std::string("theorem4/") + tc.name + "/lhs_variation";
                cv.params = cr.params;
                cv.n_list = ns;
                cv.metric_list = spread;
                cv.pass = decreasing(spread, 0.0);
                rep.checks.push_back(cv);
            }
        }
    }
}

// lemma1 --------------------------------------------------------------------

void suite_lemma1(const VerifyConfig& c, Report& rep) {
    const std::vector<double> rs = {10.0, 30.0, 100.0, 300.0};
    CheckResult cr;
    cr.check_id = "lemma1/asymptote_distance";
    cr.params = base_params(c);
    json rj = json::array(), bj = json::array();
    bool within = true;
    for (double r : rs) {
        double phi = outer_phi_at_radius(r, c.rho);
        double d = asymptote_distance(std::polar(r, phi), c.rho);
        double b = asymptote_bound(r, c.rho);
        cr.metric_list.push_back(d);
        rj.push_back(num(r));
        bj.push_back(num(b));
        within = within && d <= b;
    }
    cr.params["r_list"] = rj;
    cr.params["bound_list"] = bj;
    cr.pass = within && decreasing(cr.metric_list, 0.0);
    rep.checks.push_back(cr);
}

// lemma4 --------------------------------------------------------------------

void suite_lemma4(const VerifyConfig& c, Report& rep) {
    auto ns = or_default(c.n_list, {100, 200});
    const double c1 = 1.0;
    struct Sample {
        RegionId region;
        cplx z;
    };
    const std::vector<Sample> samples = {
        {RegionId::omega1, 0.3},
        {RegionId::omega1, std::polar(0.5, 0.3)},
        {RegionId::omega1, 0.6},
        {RegionId::omega5, 2.0},
        {RegionId::omega5, std::polar(1.5, 0.2)},
        {RegionId::omega5, std::polar(3.0, -0.3)},
        {RegionId::omega2, std::polar(0.9, 0.5)},
        {RegionId::omega2, std::polar(1.0, 0.5)},
        {RegionId::omega2, std::polar(1.2, 0.55)},
        {RegionId::omega3, std::polar(0.9, 2.0)},
        {RegionId::omega3, std::polar(1.2, 3.0)},
        {RegionId::omega3, std::polar(2.0, -1.5)},
        {RegionId::omega4, std::polar(0.3, kPi)},
        {RegionId::omega4, std::polar(0.35, 1.2)},
        {RegionId::omega4, std::polar(0.2, -2.0)},
    };
    const double small = std::log(1e-2);
    for (const auto& s : samples) {
        RegionSpec rs{s.region, c.h, c.delta2, c.delta3, c.rho};
        if (!region_contains(s.z, rs)) continue;
        CheckResult cr;
        cr.params = base_params(c);
        cr.params["z"] = cnum(s.z);
        cr.params["region"] = static_cast<int>(s.region);
        cr.n_list = ns;
        bool ok = true;
        for (int n : ns) {
            JPrimes j = j_primes(s.z, MLContext(c.rho, n));
            double m = 0.0;
            switch (s.region) {
                case RegionId::omega1:
                case RegionId::omega5:
                    // ln|J₁′| − ln(C₁(n/ρ)^{1/2}) >= 0
                    m = j.j1.log_mag() - std::log(c1) - 0.5 * std::log(n / c.rho);
                    ok = ok && m >= 0.0;
                    break;
                case RegionId::omega2:
                    m = j.j1.log_mag();
                    break;
                case RegionId::omega3:
                    m = j.j2.log_mag();
                    break;
                case RegionId::omega4:
                    // ln|J₂′| − n ln(1 + h e^{1/ρ}/2) >= 0
                    m = j.j2.log_mag() - n * std::log1p(0.5 * c.h * std::exp(1.0 / c.rho));
                    ok = ok && m >= 0.0;
                    break;
            }
            cr.metric_list.push_back(m);
        }
        switch (s.region) {
            case RegionId::omega1:
            case RegionId::omega5:
                cr.check_id = "lemma4/j1_lower";
                cr.params["C1"] = c1;
                cr.params["metric"] = "ln|J1'| - ln(C1 (n/rho)^(1/2))";
                break;
            case RegionId::omega2:
                cr.check_id = "lemma4/j1_small";
                cr.params["metric"] = "ln|J1'|";
                ok = cr.metric_list.back() <= small && decreasing(cr.metric_list, -1e300);
                break;
            case RegionId::omega3:
                cr.check_id = "lemma4/j2_small";
                cr.params["metric"] = "ln|J2'|";
                ok = cr.metric_list.back() <= small && decreasing(cr.metric_list, -1e300);
                break;
            case RegionId::omega4:
                cr.check_id = "lemma4/j2_lower";
                cr.params["metric"] = "ln|J2'| - n ln(1 + h e^(1/rho)/2)";
                break;
        }
        cr.pass = ok;
        rep.checks.push_back(cr);
    }
}

// kn ------------------------------------------------------------------------

void suite_kn(const VerifyConfig& c, Report& rep) {
    auto ns = or_default(c.n_list, {20, 80});
    const std::vector<cplx> samples = {0.4,
                                       std::polar(0.6, 0.4),
                                       1.6,
                                       std::polar(1.4, 0.5),
                                       std::polar(0.7, 2.0),
                                       std::polar(1.3, -2.5)};
    for (cplx z : samples) {
        CheckResult cr;
        cr.check_id = "kn/ratio";
        cr.params = base_params(c);
        cr.params["z"] = cnum(z);
        cr.params["delta3"] = num(c.delta3);
        cr.params["threshold"] = 0.15;
        cr.n_list = ns;
        for (int n : ns) {
            MLContext ctx(c.rho, n);
            cr.metric_list.push_back(std::abs(kn_ratio(z, ctx, default_contour(ctx, c.delta3)) - 1.0));
        }
        cr.pass = cr.metric_list.back() <= cr.metric_list.front() && cr.metric_list.back() < 0.15;
        rep.checks.push_back(cr);
    }
}

}  // namespace

void VerifyConfig::validate() const {
    if (!(rho > 1.0) || !std::isfinite(rho)) throw DomainError("verification requires rho > 1");
    for (int n : n_list)
        if (n < 2) throw DomainError("every n must be >= 2");
    for (cplx l : lambdas)
        if (!std::isfinite(l.real()) || !std::isfinite(l.imag())) throw DomainError("lambda must be finite");
    if (!(h > 0.0) || !(delta2 > 0.0) || !(delta3 > 0.0)) throw DomainError("h, delta2, delta3 must be positive");
    window.validate();
}

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"theorem1", "theorem2", "theorem3", "theorem4",
                                                   "lemma1",   "lemma4",   "kn"};
    return names;
}

Report run_suite(const std::string& suite, const VerifyConfig& cfg) {
    cfg.validate();
    Report rep;
    rep.suite = suite;
    rep.config = cfg;
    if (suite == "theorem1")
        suite_theorem1(cfg, rep);
    else if (suite == "theorem2")
        suite_theorem2(cfg, rep);
    else if (suite == "theorem3")
        suite_theorem3(cfg, rep);
    else if (suite == "theorem4")
        suite_theorem4(cfg, rep);
    else if (suite == "lemma1")
        suite_lemma1(cfg, rep);
    else if (suite == "lemma4")
        suite_lemma4(cfg, rep);
    else if (suite == "kn")
        suite_kn(cfg, rep);
    else
        throw DomainError("unknown suite '" + suite + "'");
    return rep;
}

json config_to_json(const std::string& suite, const VerifyConfig& c) {
    json j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["rho"] = num(c.rho);
    json l = json::array();
    for (cplx v : c.lambdas) l.push_back(cnum(v));
    j["lambda"] = l;
    j["n_list"] = c.n_list;
    j["h"] = num(c.h);
    j["delta2"] = num(c.delta2);
    j["delta3"] = num(c.delta3);
    j["as_printed"] = c.as_printed;
    j["window"] = {num(c.window.re_min), num(c.window.re_max), num(c.window.im_min), num(c.window.im_max)};
    return j;
}

json report_to_json(const Report& r) {
    json j;
    j["run_config"] = config_to_json(r.suite, r.config);
    json checks = json::array();
    for (const auto& c : r.checks) {
        json m = json::array();
        for (double v : c.metric_list) m.push_back(num(v));
        checks.push_back({{"check_id", c.check_id},
                          {"params", c.params},
                          {"n_list", c.n_list},
                          {"metric_list", m},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["pass"] = r.pass();
    return j;
}

}  // namespace mlsz
