"""Trace restriction, its Fourier-side realization, and the extension map.

Axis convention (global, never permuted): the retained coordinates x' are
the FIRST n-m axes, the killed coordinates x'' the LAST m.  The trace of
u is u(x', 0); on the Fourier side the same map is marginalization,
f_hat(xi') = (2 pi)^{-m/2} integral of u_hat(xi', xi'') d xi''.  Between
centered grids and the unitary DFT the two realizations agree exactly as
discrete identities, up to the frequency-box truncation of the integral.

The extension map goes the other way: it lifts g on R^{n-m} to

    u = 2^{m/2} (Gamma(s)/Gamma(s - m/2))
        F^{-1}[ g_hat(xi') (1 + |xi'|^2)^{s - m/2} (1 + |xi|^2)^{-s} ],

whose trace is g again in the continuum: marginalizing the xi'' variables
collapses the Bessel weights through the slab integral, and the Gamma
prefactor cancels the slab constant exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .grid import Field, GridSpec
from .specfun import log_gamma
from .spectral import fourier_forward, fourier_inverse

__all__ = ["SplitDims", "trace_restrict", "trace_fourier", "extend"]


@dataclass(frozen=True)
class SplitDims:
    """Coordinate split of R^n into retained (first n-m) and killed (last m)."""

    n: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"codimension m must be >= 1, got {self.m}")
        if self.n - self.m < 1:
            raise ValueError(f"need n - m >= 1, got n={self.n}, m={self.m}")

    @property
    def n_minus_m(self) -> int:
        return self.n - self.m


def _require_dim(field: Field, split: SplitDims, op: str) -> None:
    if field.grid.dim != split.n:
        raise ValueError(f"{op}: field is {field.grid.dim}-dimensional, split expects n={split.n}")


def trace_restrict(field: Field, split: SplitDims) -> Field:
    """Restrict a spatial field to the x'' = 0 subspace.

    The centered grid always contains the zero node (index N/2 per axis),
    so this is pure indexing.
    """
    if field.domain_tag != "spatial":
        raise ValueError("trace_restrict requires a spatial-tagged field")
    _require_dim(field, split, "trace_restrict")
    g = field.grid
    center = g.points // 2
    idx = (slice(None),) * split.n_minus_m + (center,) * split.m
    out_grid = GridSpec(dim=split.n_minus_m, half_width=g.half_width, points=g.points)
    return Field(grid=out_grid, domain_tag="spatial", values=field.values[idx])


def trace_fourier(field: Field, split: SplitDims) -> Field:
    """Marginalize a spectrum over the last m frequency axes.

    Rectangle-rule integration with cell volume (pi/L)^m and the unitary
    prefactor (2 pi)^{-m/2}; realizes the trace without leaving the
    frequency domain.
    """
    if field.domain_tag != "frequency":
        raise ValueError("trace_fourier requires a frequency-tagged field")
    _require_dim(field, split, "trace_fourier")
    g = field.grid
    axes = tuple(range(split.n_minus_m, split.n))
    scale = g.freq_spacing**split.m * (2.0 * np.pi) ** (-0.5 * split.m)
    vals = field.values.sum(axis=axes) * scale
    out_grid = GridSpec(dim=split.n_minus_m, half_width=g.half_width, points=g.points)
    return Field(grid=out_grid, domain_tag="frequency", values=vals)


def extend(g_field: Field, s: float, split: SplitDims, target_grid: GridSpec) -> Field:
    """Lift g on R^{n-m} to a field on R^n whose trace is g.

    Requires s > m/2 (the xi'' marginal of (1+|xi|^2)^{-s} must converge).
    The target grid must share N and L with g's grid so the first n-m
    frequency axes coincide.
    """
    if g_field.domain_tag != "spatial":
        raise ValueError("extend requires a spatial-tagged input field")
    if g_field.grid.dim != split.n_minus_m:
        raise ValueError(
            f"extend: input field is {g_field.grid.dim}-dimensional, "
            f"split expects n - m = {split.n_minus_m}"
        )
    if target_grid.dim != split.n:
        raise ValueError(f"extend: target grid is {target_grid.dim}-dimensional, split expects n={split.n}")
    if not 2.0 * s > split.m:
        raise ValueError(f"extend requires s > m/2, got s={s}, m={split.m}")
    if (
        target_grid.points != g_field.grid.points
        or abs(target_grid.half_width - g_field.grid.half_width) > 1e-12 * g_field.grid.half_width
    ):
        raise ValueError(
            "extend: target grid's retained axes differ from the input grid "
            f"(N {target_grid.points} vs {g_field.grid.points}, "
            f"L {target_grid.half_width} vs {g_field.grid.half_width})"
        )

    ghat = fourier_forward(g_field)
    weighted = kernels.radial_weight_multiply(ghat.values, ghat.axes(), s - 0.5 * split.m)
    full = np.broadcast_to(
        weighted.reshape(weighted.shape + (1,) * split.m), target_grid.shape
    )
    damped = kernels.radial_weight_multiply(full, (target_grid.frequency_axis(),) * split.n, -s)
    prefactor = 2.0 ** (0.5 * split.m) * math.exp(log_gamma(s) - log_gamma(s - 0.5 * split.m))
    spectrum = Field(grid=target_grid, domain_tag="frequency", values=prefactor * damped)
    return fourier_inverse(spectrum)
