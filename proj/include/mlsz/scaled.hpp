#pragma once

#include <complex>
#include <cstdint>

namespace mlsz {

using cplx = std::complex<double>;

/// Overflow-safe complex number.
///
/// Stored as a mantissa m with max(|Re m|, |Im m|) in [0.5, 1) and a binary
/// exponent e, value = m * 2^e.  The (log_mag, phase) view is computed on
/// demand.  Keeping the exponent integral makes the round trip through an
/// ordinary complex exact, which a stored log-magnitude cannot offer.
class ScaledComplex {
public:
    ScaledComplex() = default;  // zero
    ScaledComplex(cplx w);     // NOLINT(google-explicit-constructor)
    ScaledComplex(double x) : ScaledComplex(cplx(x, 0.0)) {}  // NOLINT

    static ScaledComplex zero() { return {}; }
    static ScaledComplex from_polar(double log_mag, double phase);
    // m · 2^e, as returned by mantissa() and exponent().
    static ScaledComplex from_parts(cplx m, std::int64_t e) { return ScaledComplex(m, e); }
    // e^c without forming it.
    static ScaledComplex exp(cplx c);
    // w^p = exp(p Log w), principal branch.
    static ScaledComplex pow(cplx w, double p);
    static ScaledComplex pow(cplx w, cplx p);

    bool is_zero() const { return m_ == cplx(0.0, 0.0); }
    double log_mag() const;
    double phase() const;
    // Throws OverflowError if the value does not fit in a double.
    cplx to_complex() const;
    double abs() const;

    cplx mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }

    ScaledComplex conj() const;
    ScaledComplex operator-() const;

    ScaledComplex& operator*=(const ScaledComplex& b);
    ScaledComplex& operator/=(const ScaledComplex& b);
    ScaledComplex& operator+=(const ScaledComplex& b);
    ScaledComplex& operator-=(const ScaledComplex& b);

private:
    ScaledComplex(cplx m, std::int64_t e) : m_(m), e_(e) { normalize(); }
    void normalize();

    cplx m_{0.0, 0.0};
    std::int64_t e_ = 0;
};

ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b);
ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b);
ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b);
ScaledComplex operator-(ScaledComplex a, const ScaledComplex& b);

inline ScaledComplex sc_from_complex(cplx w) { return ScaledComplex(w); }
inline cplx sc_to_complex(const ScaledComplex& a) { return a.to_complex(); }
inline ScaledComplex sc_mul(const ScaledComplex& a, const ScaledComplex& b) { return a * b; }
inline ScaledComplex sc_add(const ScaledComplex& a, const ScaledComplex& b) { return a + b; }

// |a - b| / max(|a|, |b|); 0 when both are zero.
double rel_diff(const ScaledComplex& a, const ScaledComplex& b);

}  // namespace mlsz
