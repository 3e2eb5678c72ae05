"""Closed-form constants and index bookkeeping for the trace inequality.

The central object is the best-constant upper bound C for

    || trace u ||_{W^{t - m/p, p}(R^{n-m})}  <=  C * || u ||_{W^{s, q}(R^n)}

on the nonhomogeneous fractional Sobolev scale, valid on the index window

    s - n*(1/q - 1/p) > t >= m/p,      1 < q <= 2,  1/p + 1/q = 1.

C factors into a pi power, a power of two, a q/p power block and two
Gamma-ratio brackets; ``trace_constant`` exposes all five factors so that
asymptotic studies (pole blow-up at the window boundary, Stirling decay for
large s) can be attributed to the factor that drives them.
"""

import math
from dataclasses import dataclass

from .specfun import log_gamma

__all__ = [
    "IndexParams",
    "ConstantBreakdown",
    "make_params",
    "trace_constant",
    "homogeneous_case_constant",
    "babenko_beckner_constant",
    "sharp_hausdorff_young_unitary",
    "slab_integral_value",
    "slab_lp_constant",
]

_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class IndexParams:
    """Exponent tuple (q, p, s, t, m, n) for one inequality instance.

    ``p`` is always the conjugate of ``q``; ``admissible`` records whether
    (s, t) lies in the open index window above.  Inadmissible tuples are
    representable on purpose: boundary sweeps need points arbitrarily close
    to the window edge.
    """

    q: float
    p: float
    s: float
    t: float
    m: int
    n: int
    admissible: bool

    def __post_init__(self):
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise ValueError(f"p={self.p} is not conjugate to q={self.q}")

    @property
    def conjugate_gap(self) -> float:
        """1/q - 1/p, the exponent defect that vanishes at q = 2."""
        return 1.0 / self.q - 1.0 / self.p

    @property
    def t_boundary(self) -> float:
        """Upper edge of the admissible t window, s - n*(1/q - 1/p)."""
        return self.s - self.n * self.conjugate_gap

    @property
    def t_lower(self) -> float:
        """Lower edge of the admissible t window, m/p."""
        return self.m / self.p


def make_params(q: float, s: float, t: float, m: int, n: int) -> IndexParams:
    """Build an IndexParams tuple, deriving p and the admissibility flag.

    Rejects q outside (1, 2] and malformed dimensions.  An inadmissible
    (s, t) pair is not an error; it comes back flagged.
    """
    if not (1.0 < q <= 2.0):
        raise ValueError(f"q must lie in (1, 2], got {q!r}")
    if int(m) != m or int(n) != n:
        raise ValueError(f"m and n must be integers, got m={m!r}, n={n!r}")
    m, n = int(m), int(n)
    if m < 1:
        raise ValueError(f"codimension m must be >= 1, got {m}")
    if n < m + 1:
        raise ValueError(f"dimension n must exceed m, got n={n}, m={m}")
    p = q / (q - 1.0)
    gap = 1.0 / q - 1.0 / p
    admissible = (s - n * gap > t) and (t >= m / p)
    return IndexParams(q=q, p=p, s=s, t=t, m=m, n=n, admissible=admissible)


@dataclass(frozen=True)
class ConstantBreakdown:
    """The trace constant together with its five multiplicative factors."""

    value: float
    pi_factor: float
    two_factor: float
    pq_factor: float
    gamma_factor_1: float
    gamma_factor_2: float

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "pi_factor": self.pi_factor,
            "two_factor": self.two_factor,
            "pq_factor": self.pq_factor,
            "gamma_factor_1": self.gamma_factor_1,
            "gamma_factor_2": self.gamma_factor_2,
        }


def trace_constant(params: IndexParams) -> ConstantBreakdown:
    """Evaluate the trace-inequality constant C for an admissible tuple.

    Factors, in order of appearance in ``ConstantBreakdown``:

      pi_factor      = pi ** ((n-m)/(2q) - n/(2p))
      two_factor     = 2 ** (-m/2)
      pq_factor      = q ** ((2n-m)/(2q)) / p ** ((2n-m)/(2p))
      gamma_factor_1 = [Gamma((s q - m)/2) / Gamma(s q / 2)] ** (1/q)
      gamma_factor_2 = [Gamma(B - n/2) / Gamma(B - m/2)] ** (1/q - 1/p),
                       B = (s - t) p / (2 (p - 2))

    At q = 2 the second bracket carries exponent zero and is defined as 1
    without evaluating B, which is 0/0 there.  Gamma arguments are asserted
    positive (admissibility implies it) and a violation reports the factor.
    """
    if not params.admissible:
        raise ValueError(
            f"trace_constant requires an admissible tuple; got s={params.s}, "
            f"t={params.t} outside the window ({params.t_lower}, {params.t_boundary})"
        )
    q, p, s, t, m, n = params.q, params.p, params.s, params.t, params.m, params.n
    gap = params.conjugate_gap

    pi_factor = math.pi ** ((n - m) / (2.0 * q) - n / (2.0 * p))
    two_factor = 2.0 ** (-0.5 * m)
    pq_factor = math.exp(
        (2.0 * n - m) / (2.0 * q) * math.log(q) - (2.0 * n - m) / (2.0 * p) * math.log(p)
    )

    a1 = 0.5 * (s * q - m)
    a2 = 0.5 * s * q
    if a1 <= 0.0:
        raise ValueError(f"gamma_factor_1: Gamma argument (s q - m)/2 = {a1} <= 0")
    gamma_factor_1 = math.exp((log_gamma(a1) - log_gamma(a2)) / q)

    if q == 2.0:
        gamma_factor_2 = 1.0
    else:
        # B - n/2 == (t_boundary - t) * p / (2 (p - 2)) identically; evaluating
        # it in this form keeps its sign bit-for-bit consistent with the
        # admissibility gate, which compares t against t_boundary.  The direct
        # form B - n/2 rounds independently and can hit exactly 0 for tuples
        # the gate accepts when the t window is only ulps wide.
        b1 = (params.t_boundary - t) * p / (2.0 * (p - 2.0))
        b2 = b1 + 0.5 * (n - m)
        if b1 <= 0.0:
            raise ValueError(f"gamma_factor_2: Gamma argument B - n/2 = {b1} <= 0")
        if b2 <= 0.0:
            raise ValueError(f"gamma_factor_2: Gamma argument B - m/2 = {b2} <= 0")
        gamma_factor_2 = math.exp(gap * (log_gamma(b1) - log_gamma(b2)))

    value = pi_factor * two_factor * pq_factor * gamma_factor_1 * gamma_factor_2
    return ConstantBreakdown(
        value=value,
        pi_factor=pi_factor,
        two_factor=two_factor,
        pq_factor=pq_factor,
        gamma_factor_1=gamma_factor_1,
        gamma_factor_2=gamma_factor_2,
    )


def homogeneous_case_constant(s: float, m: int) -> float:
    """Sharp constant for the Hilbert-space (q = 2) trace inequality.

    Returns (Gamma(s - m/2) / ((4 pi)^{m/2} Gamma(s)))^{1/2}; requires
    s > m/2.  ``trace_constant`` at q = 2 reduces to this value for every
    admissible (t, n), which is the main cross-check on the general formula.
    """
    if not s > 0.5 * m:
        raise ValueError(f"homogeneous_case_constant requires s > m/2, got s={s}, m={m}")
    return math.exp(
        0.5 * (log_gamma(s - 0.5 * m) - log_gamma(s) - 0.5 * m * math.log(4.0 * math.pi))
    )


def babenko_beckner_constant(q: float, d: int) -> float:
    """Babenko-Beckner factor q^{d/(2q)} / p^{d/(2p)} for 1 <= q <= 2.

    This is the sharp d-dimensional Hausdorff-Young constant for the
    Fourier transform normalized with kernel e^{-2 pi i x.xi}.  For the
    unitary normalization used everywhere else in this package it is an
    upper bound on the L^q -> L^p norm; see
    ``sharp_hausdorff_young_unitary`` for the constant Gaussians attain.
    The endpoints are limits: q = 1 (p = infinity) and q = 2 both give 1.
    """
    if not (1.0 <= q <= 2.0):
        raise ValueError(f"babenko_beckner_constant requires q in [1, 2], got {q!r}")
    if d < 1:
        raise ValueError(f"dimension d must be >= 1, got {d!r}")
    if q == 1.0 or q == 2.0:
        return 1.0
    p = q / (q - 1.0)
    return math.exp(d * (math.log(q) / (2.0 * q) - math.log(p) / (2.0 * p)))


def sharp_hausdorff_young_unitary(q: float, d: int) -> float:
    """Sharp L^q -> L^p norm of the unitary Fourier transform.

    Equals (2 pi)^{d (1/p - 1/2)} * babenko_beckner_constant(q, d); the
    2 pi power converts between the e^{-2 pi i x.xi} normalization (where
    the Babenko-Beckner factor is itself sharp) and the unitary kernel
    (2 pi)^{-d/2} e^{-i x.xi}.  Gaussians attain this value exactly, which
    is what the extremizer checks in the harness measure.
    """
    bb = babenko_beckner_constant(q, d)
    if q == 1.0:
        inv_p = 0.0
    else:
        inv_p = 1.0 - 1.0 / q
    return bb * math.exp(d * (inv_p - 0.5) * _LOG_2PI)


def slab_integral_value(alpha: float, m: int) -> float:
    """Closed form of the m-dimensional Bessel-weight slab integral.

    Returns pi^{m/2} Gamma(alpha - m/2) / Gamma(alpha), the value of

        integral over R^m of (1 + |xi'|^2)^{alpha - m/2}
                             (1 + |xi'|^2 + |xi''|^2)^{-alpha} d xi''

    for any fixed xi' (the xi' dependence cancels exactly).  Requires
    alpha > m/2.
    """
    if m < 1:
        raise ValueError(f"codimension m must be >= 1, got {m!r}")
    if not alpha > 0.5 * m:
        raise ValueError(f"slab integral diverges for alpha={alpha} <= m/2={0.5 * m}")
    return math.exp(
        0.5 * m * math.log(math.pi) + log_gamma(alpha - 0.5 * m) - log_gamma(alpha)
    )


def slab_lp_constant(alpha: float, p: float, m: int) -> float:
    """Constant relating the weighted L^p slab integral to its marginal.

    The identity

        integral over R^n of |g(xi') (1+|xi'|^2)^{beta - m/2}
                              (1+|xi|^2)^{-alpha}|^p d xi
          = C * integral over R^{n-m} of
                |g(xi') (1+|xi'|^2)^{beta - alpha - m/(2q)}|^p d xi'

    (q conjugate to p) with C = pi^{m/2} Gamma(alpha p - m/2) / Gamma(alpha p),
    i.e. the slab integral at exponent alpha*p.  Requires alpha * p > m/2.
    """
    ap = alpha * p
    if not ap > 0.5 * m:
        raise ValueError(f"slab_lp_constant requires alpha*p > m/2, got alpha*p={ap}")
    return slab_integral_value(ap, m)
