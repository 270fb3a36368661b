#include "mlsz/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mlsz/error.hpp"

namespace mlsz {

namespace {
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
}

ScaledComplex::ScaledComplex(cplx w) : m_(w), e_(0) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw OverflowError("non-finite value cannot be scaled");
    normalize();
}

void ScaledComplex::normalize() {
    double a = std::max(std::fabs(m_.real()), std::fabs(m_.imag()));
    if (a == 0.0) {
        m_ = {0.0, 0.0};
        e_ = 0;
        return;
    }
    if (!std::isfinite(a)) throw OverflowError("non-finite mantissa");
    int k = 0;
    std::frexp(a, &k);
    m_ = {std::ldexp(m_.real(), -k), std::ldexp(m_.imag(), -k)};
    e_ += k;
}

ScaledComplex ScaledComplex::from_polar(double log_mag, double phase) {
    if (log_mag == -std::numeric_limits<double>::infinity()) return {};
    if (!std::isfinite(log_mag) || !std::isfinite(phase))
        throw OverflowError("non-finite log-magnitude or phase");
    long double q = std::floor(static_cast<long double>(log_mag) / kLn2);
    long double frac = static_cast<long double>(log_mag) - q * kLn2;
    double mag = std::exp(static_cast<double>(frac));
    return ScaledComplex(cplx(mag * std::cos(phase), mag * std::sin(phase)),
                         static_cast<std::int64_t>(q));
}

ScaledComplex ScaledComplex::exp(cplx c) { return from_polar(c.real(), c.imag()); }

ScaledComplex ScaledComplex::pow(cplx w, double p) { return pow(w, cplx(p, 0.0)); }

ScaledComplex ScaledComplex::pow(cplx w, cplx p) {
    if (w == cplx(0.0, 0.0)) {
        if (p == cplx(0.0, 0.0)) return ScaledComplex(1.0);
        if (p.real() > 0.0) return {};
        throw DomainError("zero raised to a non-positive power");
    }
    cplx lg(std::log(std::abs(w)), std::arg(w));
    return exp(p * lg);
}

double ScaledComplex::log_mag() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(m_)) + static_cast<double>(e_ * kLn2);
}

double ScaledComplex::phase() const {
    if (is_zero()) return 0.0;
    double p = std::arg(m_);
    return p == -std::numbers::pi ? std::numbers::pi : p;
}

cplx ScaledComplex::to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    if (e_ > 1024) throw OverflowError("scaled value exceeds double range");
    if (e_ < -1200) return {0.0, 0.0};
    int e = static_cast<int>(e_);
    cplx r(std::ldexp(m_.real(), e), std::ldexp(m_.imag(), e));
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw OverflowError("scaled value exceeds double range");
    return r;
}

double ScaledComplex::abs() const {
    if (is_zero()) return 0.0;
    if (e_ > 1025) throw OverflowError("scaled magnitude exceeds double range");
    if (e_ < -1200) return 0.0;
    double r = std::ldexp(std::abs(m_), static_cast<int>(e_));
    if (!std::isfinite(r)) throw OverflowError("scaled magnitude exceeds double range");
    return r;
}

ScaledComplex ScaledComplex::conj() const {
    ScaledComplex r = *this;
    r.m_ = std::conj(m_);
    return r;
}

ScaledComplex ScaledComplex::operator-() const {
    ScaledComplex r = *this;
    r.m_ = -m_;
    return r;
}

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& b) {
    if (is_zero() || b.is_zero()) return *this = ScaledComplex{};
    m_ *= b.m_;
    e_ += b.e_;
    normalize();
    return *this;
}

ScaledComplex& ScaledComplex::operator/=(const ScaledComplex& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (is_zero()) return *this;
    m_ /= b.m_;
    e_ -= b.e_;
    normalize();
    return *this;
}

ScaledComplex& ScaledComplex::operator+=(const ScaledComplex& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    const ScaledComplex& hi = e_ >= b.e_ ? *this : b;
    const ScaledComplex& lo = e_ >= b.e_ ? b : *this;
    std::int64_t d = lo.e_ - hi.e_;
    cplx m = hi.m_;
    if (d > -1100) {
        int di = static_cast<int>(d);
        m += cplx(std::ldexp(lo.m_.real(), di), std::ldexp(lo.m_.imag(), di));
    }
    // Cancellation this deep carries no information at working precision.
    if (std::max(std::fabs(m.real()), std::fabs(m.imag())) < 1e-300) return *this = ScaledComplex{};
    std::int64_t e = hi.e_;
    m_ = m;
    e_ = e;
    normalize();
    return *this;
}

ScaledComplex& ScaledComplex::operator-=(const ScaledComplex& b) { return *this += -b; }

ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { return a /= b; }
ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { return a += b; }
ScaledComplex operator-(ScaledComplex a, const ScaledComplex& b) { return a -= b; }

double rel_diff(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    ScaledComplex d = a - b;
    if (d.is_zero()) return 0.0;
    return std::exp(d.log_mag() - std::max(a.log_mag(), b.log_mag()));
}

}  // namespace mlsz
