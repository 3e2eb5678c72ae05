"""Backend selection for the elementwise frequency-weight kernels.

Two interchangeable implementations exist:

* ``compiled`` — the Cython extension ``_ckernels`` (fused loops, no weight
  temporaries), built at install time when a compiler is available;
* ``numpy``   — pure-vectorized fallback, always present.

The compiled backend is preferred when importable.  Set the environment
variable ``SOBOLTRACE_FORCE_NUMPY=1`` before import to pin the fallback
(used by the parity tests and the benchmark).
"""

import os

import numpy as np

from . import _numpy_kernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_BACKENDS = {"numpy": _numpy_kernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

if os.environ.get("SOBOLTRACE_FORCE_NUMPY"):
    _active = _numpy_kernels
else:
    _active = _BACKENDS.get("compiled", _numpy_kernels)


def backend_name() -> str:
    """Name of the kernel backend in use: 'compiled' or 'numpy'."""
    return "compiled" if _active is _ckernels and _ckernels is not None else "numpy"


def available_backends() -> tuple:
    """Names of all importable backends."""
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> None:
    """Switch the active backend (testing/benchmark hook)."""
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")


def radial_weight_multiply(values, axes, power):
    """values * (1 + |xi|^2)^power on a tensor grid with per-axis coords.

    The compiled backend covers dimensions 1-3 and contiguous complex128
    input; anything else silently routes to the numpy fallback.
    """
    values = np.ascontiguousarray(values, dtype=np.complex128)
    axes = tuple(np.ascontiguousarray(a, dtype=np.float64) for a in axes)
    if _active is not _numpy_kernels and 1 <= values.ndim <= 3:
        return _active.radial_weight_multiply(values, axes, float(power))
    return _numpy_kernels.radial_weight_multiply(values, axes, float(power))


def abs_pow_sum(values, q):
    """Sum of |values|^q over all entries.

    Routed by measurement: the compiled accumulator wins only at q == 2,
    where the loop is memory-bound; for general q numpy's vectorized pow
    is faster than a scalar-libm loop, so that case always takes the
    fallback (see benchmarks/bench_kernels.py).
    """
    values = np.ascontiguousarray(values, dtype=np.complex128)
    if _active is not _numpy_kernels and q == 2.0:
        return _active.abs_pow_sum(values.reshape(-1), float(q))
    return _numpy_kernels.abs_pow_sum(values, float(q))
