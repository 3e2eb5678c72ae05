"""Compute high-precision reference values frozen into the test suite.

Run manually (never at test time):  python scripts/freeze_reference_values.py

Every derived regression constant in tests/ traces back to a formula in this
script, evaluated with mpmath at 50 significant digits in an environment
independent of the package under test (mpmath gamma/quad, not soboltrace).
"""

import mpmath as mp

mp.mp.dps = 50


def babenko_beckner(q, d):
    p = q / (q - 1)
    return mp.power(q, d / (2 * q)) / mp.power(p, d / (2 * p))


def sharp_unitary(q, d):
    p = q / (q - 1)
    return mp.power(2 * mp.pi, d * (1 / p - mp.mpf(1) / 2)) * babenko_beckner(q, d)


def trace_constant(q, s, t, m, n):
    """Term-by-term transcription of the five-factor constant."""
    p = q / (q - 1)
    pi_factor = mp.power(mp.pi, (n - m) / (2 * q) - n / (2 * p))
    two_factor = mp.power(2, -mp.mpf(m) / 2)
    pq_factor = mp.power(q, (2 * n - m) / (2 * q)) / mp.power(p, (2 * n - m) / (2 * p))
    g1 = mp.power(mp.gamma((s * q - m) / 2) / mp.gamma(s * q / 2), 1 / q)
    if q == 2:
        g2 = mp.mpf(1)
    else:
        b = (s - t) * p / (2 * (p - 2))
        g2 = mp.power(mp.gamma(b - mp.mpf(n) / 2) / mp.gamma(b - mp.mpf(m) / 2), 1 / q - 1 / p)
    return pi_factor * two_factor * pq_factor * g1 * g2


def homogeneous_constant(s, m):
    return mp.sqrt(mp.gamma(s - mp.mpf(m) / 2) / (mp.power(4 * mp.pi, mp.mpf(m) / 2) * mp.gamma(s)))


def gaussian_sobolev_norm_q2(a, s, d):
    """|| e^{-a|x|^2} ||_{W^{s,2}(R^d)} by Plancherel + radial quadrature."""
    surface = 2 * mp.power(mp.pi, mp.mpf(d) / 2) / mp.gamma(mp.mpf(d) / 2)
    integrand = lambda r: mp.power(1 + r * r, s) * mp.exp(-r * r / (2 * a)) * mp.power(r, d - 1)
    integral = mp.quad(integrand, [0, mp.inf])
    return mp.sqrt(surface * mp.power(2 * a, -d) * integral)


def main():
    rows = [
        ("BB_Q1_25_D1", babenko_beckner(mp.mpf("1.25"), 1)),
        ("BB_Q1_5_D1", babenko_beckner(mp.mpf("1.5"), 1)),
        ("SHARP_UNITARY_Q1_25_D1", sharp_unitary(mp.mpf("1.25"), 1)),
        ("SHARP_UNITARY_Q1_5_D1", sharp_unitary(mp.mpf("1.5"), 1)),
        ("TRACE_CONST_Q1_5_S3_T2_M1_N2", trace_constant(mp.mpf("1.5"), 3, 2, 1, 2)),
        ("TRACE_CONST_Q2_S1_T06_M1_N2", trace_constant(2, 1, mp.mpf("0.6"), 1, 2)),
        ("HOMOG_CONST_S1_M1", homogeneous_constant(1, 1)),
        ("HOMOG_CONST_S1_5_M1", homogeneous_constant(mp.mpf("1.5"), 1)),
        ("HOMOG_CONST_S2_5_M2", homogeneous_constant(mp.mpf("2.5"), 2)),
        ("GAUSS_W_S2_NORM_A1_S2_5_D2", gaussian_sobolev_norm_q2(1, mp.mpf("2.5"), 2)),
        ("GAUSS_W_S2_NORM_A0_5_S1_D1", gaussian_sobolev_norm_q2(mp.mpf("0.5"), 1, 1)),
        ("GAUSS_W_S2_NORM_A0_5_S1_7_D1", gaussian_sobolev_norm_q2(mp.mpf("0.5"), mp.mpf("1.7"), 1)),
    ]
    for name, value in rows:
        print(f"{name} = {mp.nstr(value, 17)}")


if __name__ == "__main__":
    main()
