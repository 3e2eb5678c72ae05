"""Backend parity and selection for the elementwise kernels."""

import os
import subprocess
import sys

import numpy as np
import pytest

from soboltrace import kernels
from soboltrace.kernels import _numpy_kernels

compiled_available = "compiled" in kernels.available_backends()
needs_compiled = pytest.mark.skipif(
    not compiled_available, reason="compiled backend not built"
)


def _random_field(d, n, seed):
    rng = np.random.default_rng(seed)
    shape = (n,) * d
    v = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return np.ascontiguousarray(v, dtype=np.complex128)


# ----------------------------------------------------------------- parity


@needs_compiled
@pytest.mark.parametrize("d,n", [(1, 4096), (2, 192), (3, 48)])
@pytest.mark.parametrize("power", [-1.3, -0.5, 0.0, 0.85, 2.0])
def test_radial_weight_parity(d, n, power):
    from soboltrace.kernels import _ckernels

    v = _random_field(d, n, seed=d * 100 + 7)
    axes = tuple(np.linspace(-7.0, 7.0, n) + 0.1 * i for i in range(d))
    got = _ckernels.radial_weight_multiply(v, axes, power)
    want = _numpy_kernels.radial_weight_multiply(v, axes, power)
    assert np.abs(got - want).max() <= 1e-13 * max(1.0, np.abs(want).max())


@needs_compiled
@pytest.mark.parametrize("q", [1.0, 1.3, 2.0, 3.7])
def test_abs_pow_sum_parity(q):
    from soboltrace.kernels import _ckernels

    v = _random_field(1, 100000, seed=3)
    got = _ckernels.abs_pow_sum(v, q)
    want = _numpy_kernels.abs_pow_sum(v, q)
    assert abs(got - want) <= 1e-12 * abs(want)


@needs_compiled
def test_dispatch_matches_direct_calls():
    v = _random_field(2, 128, seed=11)
    axes = tuple(np.linspace(-5.0, 5.0, 128) for _ in range(2))
    got = kernels.radial_weight_multiply(v, axes, -2.0)
    want = _numpy_kernels.radial_weight_multiply(v, axes, -2.0)
    assert np.abs(got - want).max() <= 1e-13 * np.abs(want).max()
    assert abs(kernels.abs_pow_sum(v, 1.5) - _numpy_kernels.abs_pow_sum(v, 1.5)) <= (
        1e-12 * _numpy_kernels.abs_pow_sum(v, 1.5)
    )


def test_high_dimensions_fall_back_to_numpy():
    # the dispatcher must route 4-d input to the fallback rather than fail
    v = _random_field(4, 12, seed=5)
    axes = tuple(np.linspace(-3.0, 3.0, 12) for _ in range(4))
    got = kernels.radial_weight_multiply(v, axes, -1.0)
    want = _numpy_kernels.radial_weight_multiply(v, axes, -1.0)
    assert np.abs(got - want).max() <= 1e-13 * np.abs(want).max()


def test_validation_errors():
    v = _random_field(2, 16, seed=1)
    with pytest.raises(ValueError):
        kernels.radial_weight_multiply(v, (np.zeros(16),), -1.0)
    with pytest.raises(ValueError):
        kernels.radial_weight_multiply(v, (np.zeros(16), np.zeros(8)), -1.0)


# -------------------------------------------------------------- selection


def test_backend_name_is_available():
    assert kernels.backend_name() in kernels.available_backends()


@needs_compiled
def test_use_backend_switches_and_restores():
    original = kernels.backend_name()
    try:
        kernels.use_backend("numpy")
        assert kernels.backend_name() == "numpy"
        kernels.use_backend("compiled")
        assert kernels.backend_name() == "compiled"
    finally:
        kernels.use_backend(original)
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def _backend_in_subprocess(env_extra):
    env = dict(os.environ, **env_extra)
    out = subprocess.run(
        [sys.executable, "-c", "from soboltrace import kernels; print(kernels.backend_name())"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return out.stdout.strip()


def test_force_numpy_env_pins_fallback():
    assert _backend_in_subprocess({"SOBOLTRACE_FORCE_NUMPY": "1"}) == "numpy"


@needs_compiled
def test_default_import_prefers_compiled():
    env = {k: v for k, v in os.environ.items() if k != "SOBOLTRACE_FORCE_NUMPY"}
    out = subprocess.run(
        [sys.executable, "-c", "from soboltrace import kernels; print(kernels.backend_name())"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "compiled"
