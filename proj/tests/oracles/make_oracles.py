"""Regenerates oracle_data.hpp from mpmath at 60+ digits.

    python3 tests/oracles/make_oracles.py > tests/oracle_data.hpp
"""
import mpmath as mp

mp.mp.dps = 80


def ml(w, rho, start=0):
    """E_{1/rho}(w) minus its first `start` terms, by direct summation.

    The largest term is about e^{|w|^rho}, so the working precision grows
    with it to absorb the cancellation in the left sector."""
    w = mp.mpc(w)
    digits = 60 + int(float(abs(w)) ** rho / 2.302585) + 10
    with mp.workdps(digits):
        w = mp.mpc(w)
        s = mp.mpc(0)
        k = start
        while True:
            t = w**k * mp.rgamma(1 + mp.mpf(k) / rho)
            s += t
            if k > start + 10 and k / rho > abs(w) ** rho and abs(t) < mp.mpf(10) ** (-digits + 5):
                return +s
            k += 1


def section(w, rho, n):
    return mp.fsum(mp.mpc(w) ** k / mp.gamma(1 + mp.mpf(k) / rho) for k in range(n + 1))


def radius(n, rho):
    return mp.gamma(1 + mp.mpf(n) / rho) / mp.gamma(1 + mp.mpf(n - 1) / rho)


def f(x):
    return mp.nstr(x, 17) if x != 0 else "0.0"


def cp(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (f(z.real), f(z.imag))


def lg(z):
    """(log|z|, arg z) so large values survive the trip to double."""
    z = mp.mpc(z)
    return "%s, %s" % (f(mp.log(abs(z))), f(mp.arg(z)))


out = []
emit = out.append
emit("// Generated by tests/oracles/make_oracles.py (mpmath, 80 digits). Do not edit.")
emit("#pragma once\n#include <complex>\n\nnamespace oracle {\n\nusing cplx = std::complex<double>;\n")

emit("struct LnGamma { double x, value; };")
emit("inline constexpr LnGamma ln_gamma[] = {")
for x in ["0.1", "0.5", "1", "1.5", "2.5", "7.25", "10", "50.5", "1000.25", "1e6"]:
    emit("    {%s, %s}," % (f(mp.mpf(x)), f(mp.loggamma(mp.mpf(x)))))
emit("};\n")

emit("struct Erfc { cplx z, value; };")
emit("inline const Erfc erfc[] = {")
for z in ["0.3+0.2j", "2+1j", "-1.5+0.5j", "4-3j", "0.01j", "-3+0.2j", "6+6j", "0.5-2.5j", "1.8+0.1j", "-0.7-0.9j"]:
    z = mp.mpc(complex(z))
    emit("    {%s, %s}," % (cp(z), cp(mp.erfc(z))))
emit("};\n")

emit("// E_{1/rho}(w) as (log|E|, arg E).")
emit("struct MlValue { double rho; cplx w; double log_abs, arg; };")
emit("inline const MlValue ml[] = {")
for rho in [1.5, 2, 3, 4]:
    rmax = 300.0 ** (1.0 / rho)  # keeps |w|^rho <= 300
    for frac in [0.05, 0.3, 0.7, 1.0]:
        for ang in [0.0, 0.5, mp.pi / (2 * rho) + 0.3, mp.pi - 0.2, mp.pi]:
            w = frac * rmax * mp.expj(ang)
            v = ml(w, rho)
            emit("    {%s, %s, %s}," % (f(mp.mpf(rho)), cp(w), lg(v)))
emit("};\n")

emit("struct Radius { double rho; int n; double value; };")
emit("inline constexpr Radius radius[] = {")
for rho in [1.5, 2, 4]:
    for n in [1, 5, 30, 200, 1000]:
        emit("    {%s, %d, %s}," % (f(mp.mpf(rho)), n, f(radius(n, rho))))
emit("};\n")

emit("// s_n, t_n and I_n = (1-lambda)s_n - lambda t_n at w = R_n z, as (log|.|, arg).")
emit("struct SectionValue { double rho; int n; cplx lambda; cplx z; double s_log, s_arg, t_log, t_arg, i_log, i_arg; };")
emit("inline const SectionValue sections[] = {")
zs = ["0.5", "0.9+0.3j", "1.2-0.4j", "-0.6+0.6j", "0.2j", "1.5", "-1.1-0.2j", "0.7+1.1j"]
for rho, n in [(1.5, 5), (2, 15), (2, 60), (4, 30)]:
    R = radius(n, rho)
    for z in zs:
        z = mp.mpc(complex(z))
        w = R * z
        s = section(w, rho, n)
        t = ml(w, rho, n + 1)
        for lam in [0, 1, mp.mpc(0.3, 0.2)]:
            lam = mp.mpc(lam)
            i = (1 - lam) * s - lam * t
            emit("    {%s, %d, %s, %s, %s, %s, %s}," % (f(mp.mpf(rho)), n, cp(lam), cp(z), lg(s), lg(t), lg(i)))
emit("};\n")

emit("// Zeros of s_n(R_n z), sorted by (re, im).")
for rho, n in [(2, 10), (4, 8), (1.5, 12)]:
    R = radius(n, rho)
    coeffs = [R**k / mp.gamma(1 + mp.mpf(k) / rho) for k in range(n, -1, -1)]
    roots = mp.polyroots(coeffs, maxsteps=400, extraprec=400)
    roots = sorted(roots, key=lambda r: (float(r.real), float(r.imag)))
    name = "poly_zeros_%s_%d" % (str(rho).replace(".", "p"), n)
    emit("inline const cplx %s[] = {" % name)
    for r in roots:
        emit("    %s," % cp(r))
    emit("};")
emit("")

emit("// ln|J1'| and ln|J2'| with J1' = e^{(R_n z)^rho} Gamma(1+n/rho)/(R_n z)^n, J2' = Gamma(1+n/rho)/(R_n z)^(n+1).")
emit("struct JValue { double rho; int n; cplx z; double j1_log, j2_log; };")
emit("inline const JValue j_primes[] = {")
for rho, n in [(2, 100), (2, 200), (3, 60)]:
    R = radius(n, rho)
    for z in ["0.3", "1.5+0.3j", "0.9+0.5j", "-0.3+0.1j", "1.2-2j"]:
        z = mp.mpc(complex(z))
        w = R * z
        g = mp.loggamma(1 + mp.mpf(n) / rho)
        j1 = (mp.exp(rho * mp.log(w))).real + g - n * mp.log(abs(w))
        j2 = g - (n + 1) * mp.log(abs(w))
        emit("    {%s, %d, %s, %s, %s}," % (f(mp.mpf(rho)), n, cp(z), f(j1), f(j2)))
emit("};\n")

emit("}  // namespace oracle")
print("\n".join(out))
