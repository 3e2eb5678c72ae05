"""Benchmark the compiled kernel backend against the numpy fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py

Covers the two hot paths — the radial frequency weight and the |.|^q
accumulation — at sizes representative of the verification campaigns
(2-d grids of 512^2 and 3-d grids of 64^3 points).
"""

import timeit

import numpy as np

from soboltrace import kernels
from soboltrace.kernels import _numpy_kernels

try:
    from soboltrace.kernels import _ckernels
except ImportError:
    _ckernels = None


def _field(shape, seed):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return np.ascontiguousarray(v, dtype=np.complex128)


def _time(fn, *args, repeat=5, number=3):
    return min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number)) / number


def main():
    if _ckernels is None:
        print("compiled backend not built; nothing to compare")
        return

    rows = []
    for label, shape in [("2-d 512^2", (512, 512)), ("3-d 64^3", (64, 64, 64))]:
        v = _field(shape, seed=0)
        axes = tuple(np.linspace(-30.0, 30.0, n) for n in shape)
        t_np = _time(_numpy_kernels.radial_weight_multiply, v, axes, -1.7)
        t_c = _time(_ckernels.radial_weight_multiply, v, axes, -1.7)
        rows.append((f"radial weight, {label}", t_np, t_c))

    flat = _field((512 * 512,), seed=1)
    for q in (1.5, 2.0):
        t_np = _time(_numpy_kernels.abs_pow_sum, flat, q)
        t_c = _time(_ckernels.abs_pow_sum, flat, q)
        rows.append((f"abs-pow sum, q={q}, 512^2", t_np, t_c))

    print(f"active backend: {kernels.backend_name()}")
    print(f"{'kernel':<28} {'numpy (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}")
    for name, t_np, t_c in rows:
        print(f"{name:<28} {t_np * 1e3:>12.3f} {t_c * 1e3:>14.3f} {t_np / t_c:>8.2f}x")


if __name__ == "__main__":
    main()
