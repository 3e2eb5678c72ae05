"""Numerical verification toolkit for a fractional Sobolev trace inequality.

The package checks, on concrete Schwartz-class test functions discretized
over centered periodic grids, that the trace of a W^{s,q}(R^n) function onto
a codimension-m coordinate subspace lands in W^{t - m/p, p}(R^{n-m}) with the
predicted constant, and exercises the closed-form machinery behind that
constant (slab integrals, Gamma-ratio factors, Hausdorff-Young bounds,
extension operators) against independent quadrature oracles.
"""

from .constants import (
    ConstantBreakdown,
    IndexParams,
    babenko_beckner_constant,
    homogeneous_case_constant,
    make_params,
    sharp_hausdorff_young_unitary,
    slab_integral_value,
    slab_lp_constant,
    trace_constant,
)
from .specfun import gamma_ratio, log_gamma

__version__ = "0.1.0"

__all__ = [
    "ConstantBreakdown",
    "IndexParams",
    "babenko_beckner_constant",
    "gamma_ratio",
    "homogeneous_case_constant",
    "log_gamma",
    "make_params",
    "sharp_hausdorff_young_unitary",
    "slab_integral_value",
    "slab_lp_constant",
    "trace_constant",
]
