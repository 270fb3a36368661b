#include "mlsz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <utility>

#include "mlsz/curves.hpp"
#include "mlsz/error.hpp"

namespace mlsz {

namespace {

constexpr double kPi = std::numbers::pi;

// I_n(R_n z; λ), with the (R_n z)^{n+1} factor removed when λ = 1.
class Target {
public:
    explicit Target(const MLContext& ctx) : ctx_(ctx), reduced_(ctx.lambda() == cplx(1.0)) {}

    ScaledComplex value(cplx z) const {
        ScaledComplex v = combo(z, ctx_);
        if (!reduced_) return v;
        if (z == cplx(0.0)) return ScaledComplex(-std::exp(-ln_mu_gamma()));
        return v / ScaledComplex::pow(ctx_.radius_n() * z, static_cast<double>(ctx_.n() + 1));
    }

    // f / f'.
    cplx newton_step(cplx z) const {
        ScaledComplex f = combo(z, ctx_);
        ScaledComplex d = combo_derivative(z, ctx_);
        if (reduced_) {
            // (f/w^{n+1})' / (f/w^{n+1}) = f'/f − (n+1)/z
            if (f.is_zero()) return 0.0;
            cplx ld = (d / f).to_complex() - static_cast<double>(ctx_.n() + 1) / z;
            return 1.0 / ld;
        }
        if (d.is_zero()) throw ConvergenceError("vanishing derivative in Newton step");
        return (f / d).to_complex();
    }

    int masked_multiplicity(const Window& w) const {
        return reduced_ && w.contains(0.0) ? ctx_.n() + 1 : 0;
    }

private:
    double ln_mu_gamma() const {
        // Γ(1 + (n+1)/ρ): value of E(0; μ)^{-1}.
        return -ctx_.log_coef(ctx_.n() + 1);
    }

    const MLContext& ctx_;
    bool reduced_;
};

struct PointLess {
    bool operator()(const cplx& a, const cplx& b) const {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    }
};

struct SegLess {
    bool operator()(const std::pair<cplx, cplx>& a, const std::pair<cplx, cplx>& b) const {
        PointLess p;
        if (p(a.first, b.first)) return true;
        if (p(b.first, a.first)) return false;
        return p(a.second, b.second);
    }
};

double principal(double d) { return std::remainder(d, 2.0 * kPi); }

// Phase bookkeeping for the argument principle.  Segments are evaluated in a
// canonical direction and cached, so edges shared by neighbouring cells give
// identical increments and windings add exactly.
class PhaseTracker {
public:
    PhaseTracker(const Target& f, double max_len, double min_len) : f_(f), max_len_(max_len), min_len_(min_len) {}

    double phase(cplx z) {
        auto it = phase_.find(z);
        if (it != phase_.end()) return it->second;
        ScaledComplex v = f_.value(z);
        if (v.is_zero()) throw BoundaryZeroError("function vanishes on the contour");
        double p = v.phase();
        phase_.emplace(z, p);
        return p;
    }

    // Continuous change of arg f along the straight segment a -> b.
    double delta(cplx a, cplx b) {
        PointLess less;
        if (less(b, a)) return -delta(b, a);
        auto key = std::make_pair(a, b);
        auto it = seg_.find(key);
        if (it != seg_.end()) return it->second;
        double d = compute(a, b, 0);
        seg_.emplace(key, d);
        return d;
    }

    std::size_t evaluations() const { return phase_.size(); }

private:
    double compute(cplx a, cplx b, int depth) {
        double len = std::abs(b - a);
        double pa = phase(a), pb = phase(b);
        double d = principal(pb - pa);
        if (len <= max_len_ && std::fabs(d) < 0.5 * kPi) return d;
        if (len < min_len_ || depth > 60) throw BoundaryZeroError("phase refinement stalled near a boundary zero");
        cplx m = 0.5 * (a + b);
        return compute(a, m, depth + 1) + compute(m, b, depth + 1);
    }

    const Target& f_;
    double max_len_, min_len_;
    std::map<cplx, double, PointLess> phase_;
    std::map<std::pair<cplx, cplx>, double, SegLess> seg_;
};

// Longest segment trusted without refinement.  arg I_n turns at a rate of
// about n·|z|^{ρ−1}, so the step has to shrink with n.
double phase_step(const MLContext& ctx, const Window& w) {
    double rmax = std::max({std::abs(cplx(w.re_min, w.im_min)), std::abs(cplx(w.re_max, w.im_min)),
                            std::abs(cplx(w.re_min, w.im_max)), std::abs(cplx(w.re_max, w.im_max))});
    double rate = (ctx.n() + 1.0) * std::pow(std::max(1.0, rmax), ctx.rho() - 1.0);
    return std::min(w.diameter() / 64.0, 1.0 / rate);
}

int rect_winding(PhaseTracker& pt, const Window& w) {
    cplx a(w.re_min, w.im_min), b(w.re_max, w.im_min), c(w.re_max, w.im_max), d(w.re_min, w.im_max);
    double total = pt.delta(a, b) + pt.delta(b, c) + pt.delta(c, d) + pt.delta(d, a);
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

// Winding number of f around the circle |z − c| = r, adaptively sampled.
int circle_winding(const Target& f, cplx c, double r) {
    const int m = 16;
    std::function<double(double, double, double, double, int)> arc = [&](double t0, double t1, double p0, double p1,
                                                                          int depth) -> double {
        double d = principal(p1 - p0);
        if (std::fabs(d) < 0.5 * kPi) return d;
        if (depth > 30) throw BoundaryZeroError("circle refinement stalled");
        double tm = 0.5 * (t0 + t1);
        ScaledComplex v = f.value(c + std::polar(r, tm));
        if (v.is_zero()) throw BoundaryZeroError("zero on the certification circle");
        double pm = v.phase();
        return arc(t0, tm, p0, pm, depth + 1) + arc(tm, t1, pm, p1, depth + 1);
    };
    std::vector<double> ph(m + 1);
    for (int k = 0; k <= m; ++k) {
        ScaledComplex v = f.value(c + std::polar(r, 2.0 * kPi * (k % m) / m));
        if (v.is_zero()) throw BoundaryZeroError("zero on the certification circle");
        ph[static_cast<std::size_t>(k)] = v.phase();
    }
    double total = 0.0;
    for (int k = 0; k < m; ++k)
        total += arc(2.0 * kPi * k / m, 2.0 * kPi * (k + 1) / m, ph[static_cast<std::size_t>(k)],
                     ph[static_cast<std::size_t>(k + 1)], 0);
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

struct NewtonResult {
    cplx z;
    double step;
    bool converged;
};

NewtonResult newton(const Target& f, cplx z, double tol, int max_iter = 60) {
    double step = std::numeric_limits<double>::infinity();
    double best_step = step;
    cplx best = z;
    for (int it = 0; it < max_iter; ++it) {
        cplx s = f.newton_step(z);
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) break;
        step = std::abs(s);
        z -= s;
        if (step < best_step) {
            best_step = step;
            best = z;
        }
        if (step < tol) return {z, step, true};
    }
    return {best, best_step, false};
}

void finish_record(const Target& f, ZeroRecord& rec, double tol) {
    rec.residual_log = f.value(rec.location).log_mag();
    double r = std::max(10.0 * tol, 1e-13 * std::max(1.0, std::abs(rec.location)));
    try {
        rec.certified = circle_winding(f, rec.location, r) == 1;
    } catch (const BoundaryZeroError&) {
        rec.certified = false;
    }
}

// Newton polygon starting points for Σ exp(lc_k) z^k.
std::vector<cplx> aberth_start(const std::vector<double>& lc) {
    const int n = static_cast<int>(lc.size()) - 1;
    std::vector<int> hull;
    for (int k = 0; k <= n; ++k) {
        while (hull.size() >= 2) {
            int i = hull[hull.size() - 2], j = hull.back();
            // keep upper hull: remove j if it lies below segment i-k
            double cross = (lc[j] - lc[i]) * (k - i) - (lc[k] - lc[i]) * (j - i);
            if (cross <= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    std::vector<cplx> z;
    const double sigma = 0.7;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        int a = hull[h], b = hull[h + 1];
        int cnt = b - a;
        double r = std::exp((lc[a] - lc[b]) / cnt);
        for (int j = 0; j < cnt; ++j) {
            double ang = 2.0 * kPi * j / cnt + 2.0 * kPi * h / n + sigma;
            z.push_back(std::polar(r, ang));
        }
    }
    return z;
}

bool bipartite_ok(const std::vector<cplx>& a, const std::vector<cplx>& b, double thr) {
    const std::size_t n = a.size();
    std::vector<int> match(n, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[j] || std::abs(a[i] - b[j]) > thr) continue;
            seen[j] = 1;
            if (match[j] < 0 || augment(static_cast<std::size_t>(match[j]))) {
                match[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        seen.assign(n, 0);
        if (!augment(i)) return false;
    }
    return true;
}

}  // namespace

void Window::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max)) throw DomainError("window must satisfy re_min < re_max, im_min < im_max");
    for (double v : {re_min, re_max, im_min, im_max})
        if (!std::isfinite(v)) throw DomainError("window bounds must be finite");
}

bool Window::contains(cplx z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
}

double Window::diameter() const { return std::hypot(re_max - re_min, im_max - im_min); }

ZeroSet poly_zeros(const MLContext& ctx, double tol) {
    if (ctx.lambda() != cplx(0.0)) throw DomainError("poly_zeros requires lambda = 0");
    const int n = ctx.n();
    const double lr = std::log(ctx.radius_n());
    std::vector<double> lc(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) lc[static_cast<std::size_t>(k)] = ctx.log_coef(k) + k * lr;
    std::vector<cplx> z = aberth_start(lc);
    Target f(ctx);
    ZeroSet out;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    bool converged = false;
    for (int it = 0; it < 500 && !converged; ++it) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            cplx zi = z[static_cast<std::size_t>(i)];
            cplx ratio = f.newton_step(zi);
            cplx sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            cplx corr = ratio / (1.0 - ratio * sum);
            z[static_cast<std::size_t>(i)] = zi - corr;
            if (std::abs(corr) < tol * std::max(1.0, std::abs(zi)))
                done[static_cast<std::size_t>(i)] = 1;
            else
                converged = false;
        }
    }
    if (!converged) out.warnings.push_back("Aberth iteration hit its budget; some roots are unconverged");
    for (int i = 0; i < n; ++i) {
        ZeroRecord rec;
        NewtonResult nr = newton(f, z[static_cast<std::size_t>(i)], tol, 8);
        // Polishing must not jump to a neighbour.
        rec.location = std::abs(nr.z - z[static_cast<std::size_t>(i)]) < 1e-6 ? nr.z : z[static_cast<std::size_t>(i)];
        rec.residual = nr.step;
        finish_record(f, rec, tol);
        out.zeros.push_back(rec);
    }
    std::sort(out.zeros.begin(), out.zeros.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return PointLess{}(a.location, b.location); });
    out.total_winding = n;
    return out;
}

int winding_number(const MLContext& ctx, const Window& w) {
    w.validate();
    Target f(ctx);
    double diag = w.diameter();
    PhaseTracker pt(f, phase_step(ctx, w), 1e-13 * diag);
    return rect_winding(pt, w);
}

ZeroSet locate_zeros(const MLContext& ctx, const Window& w, double tol) {
    LocateOptions opt;
    opt.tol = tol;
    return locate_zeros(ctx, w, opt);
}

ZeroSet locate_zeros(const MLContext& ctx, const Window& win0, const LocateOptions& opt) {
    win0.validate();
    if (!(opt.tol >= 1e-12)) throw DomainError("tol must be >= 1e-12");
    Target f(ctx);
    ZeroSet out;
    Window win = win0;
    const double diag = win0.diameter();

    // Top-level count, jittering the window outward if its boundary hits a zero.
    std::unique_ptr<PhaseTracker> pt;
    int total = 0;
    for (int attempt = 0;; ++attempt) {
        pt = std::make_unique<PhaseTracker>(f, phase_step(ctx, win), 1e-13 * diag);
        try {
            total = rect_winding(*pt, win);
            break;
        } catch (const BoundaryZeroError&) {
            if (attempt >= opt.max_retries) throw;
            double j = 1e-7 * diag * (attempt + 1);
            win = {win.re_min - j, win.re_max + 0.7 * j, win.im_min - 0.9 * j, win.im_max + 0.6 * j};
            out.warnings.push_back("window boundary jittered to avoid a boundary zero");
        }
    }
    out.masked_origin_multiplicity = f.masked_multiplicity(win);
    out.total_winding = total;

    std::function<void(const Window&, int)> process = [&](const Window& cell, int count) {
        if (count <= 0) {
            if (count < 0) out.warnings.push_back("negative winding count in a cell");
            return;
        }
        const double d = cell.diameter();
        cplx center(0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max));
        if (count == 1) {
            NewtonResult nr = newton(f, center, opt.tol, d < opt.polish_diameter ? 60 : 25);
            if (nr.converged && cell.contains(nr.z)) {
                ZeroRecord rec;
                rec.location = nr.z;
                rec.residual = nr.step;
                finish_record(f, rec, opt.tol);
                out.zeros.push_back(rec);
                return;
            }
            if (d < opt.polish_diameter && cell.contains(nr.z)) {
                ZeroRecord rec;
                rec.location = nr.z;
                rec.residual = nr.step;
                finish_record(f, rec, opt.tol);
                out.zeros.push_back(rec);
                out.warnings.push_back("Newton polishing did not reach tol for one zero");
                return;
            }
        }
        if (d < opt.cluster_floor) {
            ZeroRecord rec;
            rec.location = center;
            rec.multiplicity = count;
            rec.residual = d;
            rec.residual_log = f.value(center).log_mag();
            out.zeros.push_back(rec);
            if (count > 1) out.warnings.push_back("unresolved zero cluster reported at the minimum cell size");
            else out.warnings.push_back("zero could not be polished inside its minimum-size cell");
            return;
        }
        for (int attempt = 0;; ++attempt) {
            double jx = attempt == 0 ? 0.0 : 1e-7 * d * attempt * 0.61;
            double jy = attempt == 0 ? 0.0 : 1e-7 * d * attempt * 0.37;
            double mx = center.real() + jx, my = center.imag() + jy;
            Window kids[4] = {{cell.re_min, mx, cell.im_min, my},
                              {mx, cell.re_max, cell.im_min, my},
                              {cell.re_min, mx, my, cell.im_max},
                              {mx, cell.re_max, my, cell.im_max}};
            int counts[4];
            try {
                for (int k = 0; k < 4; ++k) counts[k] = rect_winding(*pt, kids[k]);
            } catch (const BoundaryZeroError&) {
                if (attempt >= opt.max_retries) throw;
                continue;
            }
            if (counts[0] + counts[1] + counts[2] + counts[3] != count)
                out.warnings.push_back("child windings do not add up to the parent count");
            for (int k = 0; k < 4; ++k) process(kids[k], counts[k]);
            return;
        }
    };
    process(win, total);
    std::sort(out.zeros.begin(), out.zeros.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return PointLess{}(a.location, b.location); });
    return out;
}

StripPartition strip_filter(std::vector<ZeroRecord>& records, double rho, double strip_width) {
    if (!(strip_width > 0.0)) throw DomainError("strip_width must be positive");
    StripPartition p;
    for (auto& r : records) {
        r.near_asymptote = r.location != cplx(0.0) && asymptote_distance(r.location, rho) < strip_width;
        (r.near_asymptote ? p.filtered : p.kept).push_back(r);
    }
    return p;
}

double matching_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    std::vector<double> cand;
    cand.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) cand.push_back(std::abs(x - y));
    std::sort(cand.begin(), cand.end());
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (bipartite_ok(a, b, cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

}  // namespace mlsz
