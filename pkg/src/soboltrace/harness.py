"""End-to-end verification campaigns.

Three layers:

* ``verify_instance`` — one field, one index tuple: compute both sides of
  the trace inequality on a ladder of refined grids and issue a verdict;
* ``run_sweep`` — a deterministic campaign over parameter ranges and
  seeded Gaussian-mixture test fields, optionally on parallel workers;
* ``asymptotics_campaign`` — how the constant behaves as the smoothness
  budget degenerates (boundary blow-up) or grows (large-s decay).

All reports are plain frozen dataclasses with ``as_dict`` hooks so the CLI
can emit them as JSON/CSV without extra plumbing.
"""

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constants import IndexParams, make_params, trace_constant
from .grid import Field, GridSpec, refine, sample
from .spectral import sobolev_norm
from .traceops import SplitDims, trace_restrict

__all__ = [
    "AsymptoticsResult",
    "AsymptoticsRow",
    "GaussianMixture",
    "SweepSpec",
    "VerificationReport",
    "asymptotics_campaign",
    "run_sweep",
    "sample_gaussian_mixture",
    "verify_instance",
]

# ratios computed at q = 2 can tie to the last bit across refinements;
# "non-increasing" tolerates this much relative roundoff
_MONOTONE_SLACK = 1e-9


# ------------------------------------------------------------------ reports


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking lhs <= constant * rhs_norm on one field.

    ``refinement_trace`` holds one (grid points per axis, ratio) pair per
    resolution level, coarsest first; ``lhs``, ``rhs_norm`` and ``ratio``
    are the finest-level values.  ``verdict`` is ``pass`` when the final
    ratio is within tolerance of 1 and the trace is non-increasing over
    its last two levels, ``inconclusive`` when a zero denominator met a
    non-zero numerator (a numerical inconsistency: the continuum forces
    the numerator to vanish too), and ``fail`` otherwise.
    """

    params: IndexParams
    lhs: float
    rhs_norm: float
    constant: float
    ratio: float
    refinement_trace: tuple
    verdict: str
    error: str = None

    def as_dict(self):
        p = self.params
        return {
            "params": {
                "q": p.q,
                "p": p.p,
                "s": p.s,
                "t": p.t,
                "m": p.m,
                "n": p.n,
                "admissible": p.admissible,
            },
            "lhs": self.lhs,
            "rhs_norm": self.rhs_norm,
            "constant": self.constant,
            "ratio": self.ratio,
            "refinement_trace": [[n_pts, ratio] for n_pts, ratio in self.refinement_trace],
            "verdict": self.verdict,
            "error": self.error,
        }


def _resolve_tolerance(tolerance, refinements):
    if tolerance is not None:
        return float(tolerance)
    # base grids carry rectangle-rule and truncation error; two refinements
    # are enough to tighten the acceptance band by 5x
    return 5e-2 if refinements < 2 else 1e-2


def _trace_is_non_increasing(ratios):
    if len(ratios) < 2:
        return True
    prev, last = ratios[-2], ratios[-1]
    return last <= prev * (1.0 + _MONOTONE_SLACK) + 1e-300


def verify_instance(u, params, refinements, *, tolerance=None):
    """Check the trace inequality for one field over a refinement ladder.

    ``u`` must be a spatial field on ``params.n`` dimensions; refinement
    levels beyond the first require ``u`` to carry its sampler so the
    underlying function can be re-evaluated on finer grids.
    """
    if not isinstance(u, Field) or u.domain_tag != "spatial":
        raise ValueError("verify_instance needs a spatial-tagged field")
    if u.grid.dim != params.n:
        raise ValueError(f"field is {u.grid.dim}-d but params expect n={params.n}")
    if not params.admissible:
        raise ValueError("params are outside the admissible index window")
    refinements = int(refinements)
    if refinements < 0:
        raise ValueError("refinements must be >= 0")
    if refinements > 0 and u.sampler is None:
        raise ValueError("refinement requires a field that carries its sampler")

    tol = _resolve_tolerance(tolerance, refinements)
    split = SplitDims(n=params.n, m=params.m)
    constant = trace_constant(params).value
    trace_order = params.t - params.m / params.p

    current = u
    rows = []
    lhs = rhs = 0.0
    inconsistent = False
    for level in range(refinements + 1):
        if level:
            current = sample(refine(current.grid), u.sampler)
        lhs = sobolev_norm(trace_restrict(current, split), trace_order, params.p)
        rhs = sobolev_norm(current, params.s, params.q)
        if rhs > 0.0:
            ratio = lhs / (constant * rhs)
        elif lhs <= tol:
            ratio = 0.0
        else:
            ratio = math.inf
            inconsistent = True
        rows.append((current.grid.points, ratio))

    ratios = [r for _, r in rows]
    if inconsistent:
        verdict = "inconclusive"
    elif ratios[-1] <= 1.0 + tol and _trace_is_non_increasing(ratios):
        verdict = "pass"
    else:
        verdict = "fail"
    return VerificationReport(
        params=params,
        lhs=lhs,
        rhs_norm=rhs,
        constant=constant,
        ratio=ratios[-1],
        refinement_trace=tuple(rows),
        verdict=verdict,
    )


# ------------------------------------------------------------ test family


@dataclass(frozen=True)
class GaussianMixture:
    """Sum of shifted, scaled Gaussians; callable on scalars or arrays.

    Component i contributes amplitudes[i] * exp(-|x - centers[i]|^2 /
    (2 widths[i]^2)).  Schwartz-class, so periodization error on a box of
    half-width >= 10 is negligible next to grid error.
    """

    amplitudes: tuple
    widths: tuple
    centers: tuple  # one coordinate tuple per component

    def __post_init__(self):
        if not (len(self.amplitudes) == len(self.widths) == len(self.centers)):
            raise ValueError("component lists must share one length")
        if not self.amplitudes:
            raise ValueError("mixture needs at least one component")
        if any(w <= 0 for w in self.widths):
            raise ValueError("widths must be positive")

    @property
    def dim(self):
        return len(self.centers[0])

    def __call__(self, *xs):
        if len(xs) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(xs)}")
        total = 0.0
        for amp, width, center in zip(self.amplitudes, self.widths, self.centers):
            expo = sum((x - c) ** 2 for x, c in zip(xs, center))
            total = total + amp * np.exp(-expo / (2.0 * width * width))
        return total


def sample_gaussian_mixture(
    rng,
    dim,
    *,
    max_components=5,
    amplitude_range=(-1.0, 1.0),
    width_range=(0.5, 2.0),
    center_half_width=2.0,
):
    """Draw a random mixture: 1..max_components components, uniform laws."""
    count = int(rng.integers(1, max_components + 1))
    amps = rng.uniform(amplitude_range[0], amplitude_range[1], size=count)
    widths = rng.uniform(width_range[0], width_range[1], size=count)
    centers = rng.uniform(-center_half_width, center_half_width, size=(count, dim))
    return GaussianMixture(
        amplitudes=tuple(float(a) for a in amps),
        widths=tuple(float(w) for w in widths),
        centers=tuple(tuple(float(c) for c in row) for row in centers),
    )


# ----------------------------------------------------------------- sweeps


@dataclass(frozen=True)
class SweepSpec:
    """Declarative campaign: parameter ranges x seeded test functions.

    The swept tuples are the admissible members of the Cartesian product
    of the value ranges, in sorted (q, s, t, m, n) order; combinations
    with m >= n are skipped as geometrically void.  ``boundary_margin``
    additionally keeps t at least that far below its admissibility
    ceiling — near the ceiling the constant blows up and the check goes
    vacuous, so the default margin of 0.1 is a deliberate, documented
    knob rather than a hard rule.
    """

    q_values: tuple
    s_values: tuple
    t_values: tuple
    m_values: tuple = (1,)
    n_values: tuple = (2,)
    functions_per_tuple: int = 3
    max_components: int = 5
    amplitude_range: tuple = (-1.0, 1.0)
    width_range: tuple = (0.5, 2.0)
    center_half_width: float = 2.0
    seed: int = 0
    half_width: float = 10.0
    base_points: int = 64
    refinements: int = 1
    tolerance: float = None
    boundary_margin: float = 0.1

    def __post_init__(self):
        if self.functions_per_tuple < 0:
            raise ValueError("functions_per_tuple must be >= 0")
        if self.refinements < 0:
            raise ValueError("refinements must be >= 0")
        if not 1 <= self.max_components <= 5:
            raise ValueError("max_components must be in 1..5")
        if self.boundary_margin < 0:
            raise ValueError("boundary_margin must be >= 0")

    def admissible_tuples(self):
        """Sorted admissible index tuples drawn from the value ranges."""
        out = []
        for q, s, t, m, n in itertools.product(
            self.q_values, self.s_values, self.t_values, self.m_values, self.n_values
        ):
            if not int(m) < int(n):
                continue
            if int(n) > 3:
                raise ValueError("desk scale caps n at 3")
            params = make_params(q, s, t, m, n)
            if not params.admissible:
                continue
            if params.t_boundary - params.t < self.boundary_margin:
                continue
            out.append(params)
        out.sort(key=lambda p: (p.q, p.s, p.t, p.m, p.n))
        return out


@dataclass(frozen=True)
class _SweepJob:
    index: int
    params: IndexParams
    mixture: GaussianMixture
    half_width: float
    base_points: int
    refinements: int
    tolerance: float


def _run_sweep_job(job):
    try:
        grid = GridSpec(dim=job.params.n, half_width=job.half_width, points=job.base_points)
        u = sample(grid, job.mixture)
        report = verify_instance(
            u, job.params, job.refinements, tolerance=job.tolerance
        )
    except Exception as exc:  # recorded, never aborts the sweep
        report = VerificationReport(
            params=job.params,
            lhs=math.nan,
            rhs_norm=math.nan,
            constant=math.nan,
            ratio=math.nan,
            refinement_trace=(),
            verdict="inconclusive",
            error=f"{type(exc).__name__}: {exc}",
        )
    return job.index, report


def _worker_count(n_jobs):
    env = os.environ.get("SOBOLTRACE_WORKERS")
    if env is not None:
        try:
            limit = int(env)
        except ValueError:
            raise ValueError(f"SOBOLTRACE_WORKERS must be an integer, got {env!r}")
        if limit < 1:
            raise ValueError("SOBOLTRACE_WORKERS must be >= 1")
    else:
        limit = os.cpu_count() or 1
    return max(1, min(n_jobs, limit))


def run_sweep(spec):
    """Run the campaign described by ``spec``; deterministic given its seed.

    Test functions are drawn per (tuple index, instance index) from
    independent seed-sequence spawns, so the draw never depends on
    execution order; reports come back in sorted tuple order with
    instances in draw order, whatever the worker scheduling did.
    """
    jobs = []
    for tuple_index, params in enumerate(spec.admissible_tuples()):
        for instance_index in range(spec.functions_per_tuple):
            rng = np.random.default_rng(
                np.random.SeedSequence(
                    entropy=spec.seed, spawn_key=(tuple_index, instance_index)
                )
            )
            mixture = sample_gaussian_mixture(
                rng,
                params.n,
                max_components=spec.max_components,
                amplitude_range=spec.amplitude_range,
                width_range=spec.width_range,
                center_half_width=spec.center_half_width,
            )
            jobs.append(
                _SweepJob(
                    index=len(jobs),
                    params=params,
                    mixture=mixture,
                    half_width=spec.half_width,
                    base_points=spec.base_points,
                    refinements=spec.refinements,
                    tolerance=spec.tolerance,
                )
            )
    if not jobs:
        return []

    workers = _worker_count(len(jobs))
    results = [None] * len(jobs)
    if workers == 1:
        for job in jobs:
            index, report = _run_sweep_job(job)
            results[index] = report
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for index, report in pool.map(_run_sweep_job, jobs):
                results[index] = report
    return results


# ------------------------------------------------------------- asymptotics


@dataclass(frozen=True)
class AsymptoticsRow:
    parameter: float
    constant: float = None
    error: str = None

    def as_dict(self):
        return {"parameter": self.parameter, "constant": self.constant, "error": self.error}


@dataclass(frozen=True)
class AsymptoticsResult:
    mode: str
    rows: tuple
    fitted_slope: float
    expected_slope: float

    def as_dict(self):
        return {
            "mode": self.mode,
            "rows": [r.as_dict() for r in self.rows],
            "fitted_slope": self.fitted_slope,
            "expected_slope": self.expected_slope,
        }


def _fitted_slope(x, y):
    return float(np.polyfit(np.asarray(x, dtype=float), np.asarray(y, dtype=float), 1)[0])


def asymptotics_campaign(mode, base, *, delta=None):
    """Tabulate the trace constant along a degenerating parameter ray.

    ``boundary_blowup`` walks t up to its admissibility ceiling through
    t_k = ceiling - 10^-k * delta for k = 1..6 (delta defaults to the
    admissible window width, capped at 1) and fits the slope of
    log(constant) against k; the expected value is (1/q - 1/p) ln 10.
    ``large_s_decay`` evaluates at s in {5, 10, 20, 40, 80} and fits the
    log-log slope against s; the expected value is
    -(m/(2q) + ((n-m)/2)(1/q - 1/p)).  Degenerate rows report their error
    in place instead of aborting the campaign.
    """
    if not isinstance(base, IndexParams):
        raise TypeError("base must be an IndexParams")
    if not base.admissible:
        raise ValueError("base params must be admissible")
    gap = base.conjugate_gap

    if mode == "boundary_blowup":
        if base.q == 2.0:
            raise ValueError(
                "boundary blow-up needs q < 2: at q = 2 the t-dependent factor "
                "carries exponent 1/q - 1/p = 0 and the constant stays bounded"
            )
        window = base.t_boundary - base.t_lower
        step = min(1.0, window) if delta is None else float(delta)
        if not 0.0 < step <= window:
            raise ValueError(f"delta must lie in (0, {window}]")
        rows = []
        fit_x, fit_y = [], []
        for k in range(1, 7):
            t_k = base.t_boundary - 10.0 ** (-k) * step
            try:
                params = make_params(base.q, base.s, t_k, base.m, base.n)
                if not params.admissible:
                    raise ValueError("tuple left the admissible window")
                value = trace_constant(params).value
            except ValueError as exc:
                rows.append(AsymptoticsRow(parameter=t_k, error=str(exc)))
                continue
            rows.append(AsymptoticsRow(parameter=t_k, constant=value))
            fit_x.append(k)
            fit_y.append(math.log(value))
        expected = gap * math.log(10.0)
    elif mode == "large_s_decay":
        rows = []
        fit_x, fit_y = [], []
        for s in (5.0, 10.0, 20.0, 40.0, 80.0):
            try:
                params = make_params(base.q, s, base.t, base.m, base.n)
                if not params.admissible:
                    raise ValueError("tuple left the admissible window")
                value = trace_constant(params).value
            except ValueError as exc:
                rows.append(AsymptoticsRow(parameter=s, error=str(exc)))
                continue
            rows.append(AsymptoticsRow(parameter=s, constant=value))
            fit_x.append(math.log(s))
            fit_y.append(math.log(value))
        expected = -(base.m / (2.0 * base.q) + ((base.n - base.m) / 2.0) * gap)
    else:
        raise ValueError(f"unknown mode {mode!r}: use boundary_blowup or large_s_decay")

    if len(fit_x) < 2:
        slope = math.nan
    else:
        slope = _fitted_slope(fit_x, fit_y)
    return AsymptoticsResult(
        mode=mode, rows=tuple(rows), fitted_slope=slope, expected_slope=expected
    )
