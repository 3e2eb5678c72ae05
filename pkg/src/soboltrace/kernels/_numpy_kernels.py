"""Vectorized numpy implementations of the hot elementwise kernels.

These are the reference implementations: correct for any dimension, at the
cost of materializing the full d-dimensional weight array.  The compiled
backend in ``_ckernels`` specializes d in {1, 2, 3} with fused loops that
never allocate the weight.
"""

import numpy as np


def radial_weight_multiply(values, axes, power):
    """Multiply values[k1..kd] by (1 + xi_{k1}^2 + ... + xi_{kd}^2)^power.

    ``axes`` holds one float64 coordinate array per dimension, matching the
    shape of ``values`` axis by axis.  Returns a new complex128 array.
    """
    values = np.asarray(values)
    if values.ndim != len(axes):
        raise ValueError(f"got {values.ndim}-d values but {len(axes)} axes")
    r2 = np.zeros((1,) * values.ndim)
    for axis, coords in enumerate(axes):
        coords = np.asarray(coords, dtype=np.float64)
        if coords.ndim != 1 or coords.shape[0] != values.shape[axis]:
            raise ValueError(
                f"axis {axis}: expected {values.shape[axis]} coordinates, "
                f"got shape {coords.shape}"
            )
        shape = [1] * values.ndim
        shape[axis] = coords.shape[0]
        r2 = r2 + (coords**2).reshape(shape)
    return values * (1.0 + r2) ** power


def abs_pow_sum(values, q):
    """Sum of |values|^q over all entries, as a float."""
    if q == 2.0:
        # avoid the sqrt/pow round-trip in the common Plancherel case
        v = np.asarray(values)
        return float((v.real**2 + v.imag**2).sum() if np.iscomplexobj(v) else (v**2).sum())
    return float((np.abs(values) ** q).sum())
