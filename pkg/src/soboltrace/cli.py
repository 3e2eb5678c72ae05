"""Command-line front end.

Subcommands
-----------
constant     evaluate the trace constant and its factor breakdown
lemma1       slab-integral identity: quadrature vs closed form
lemma2       weighted L^p integral vs its factored form
verify       one seeded mixture field through the inequality check
extend       extension-operator right-inverse error over refinements
sweep        campaign from a config file -> CSV rows + JSON summary
asymptotics  constant blow-up/decay table with fitted slope

Exit codes: 0 when everything passed, 1 when any verdict was not a pass,
2 on usage or domain errors.

Sweep config schema (flat ``key = value`` lines; ``#`` starts a comment):

    q = 1.5, 2.0              # comma-separated floats (required)
    s = 2.0                   # (required)
    t = 1.0, 1.25             # (required)
    m = 1                     # comma-separated ints
    n = 2
    functions_per_tuple = 3
    max_components = 5
    amplitude_range = -1, 1
    width_range = 0.5, 2
    center_half_width = 2.0
    seed = 0
    half_width = 10.0
    base_points = 64
    refinements = 1
    tolerance = 0.05          # omit to use the refinement-count default
    boundary_margin = 0.1

Unknown or repeated keys are rejected.  The environment variable
``SOBOLTRACE_WORKERS`` caps the sweep's parallel worker count.
"""

import argparse
import csv
import json
import math
import sys

import numpy as np

from .constants import (
    make_params,
    slab_integral_value,
    slab_lp_constant,
    trace_constant,
)
from .grid import GridSpec, refine, sample, serialize_field
from .harness import (
    SweepSpec,
    asymptotics_campaign,
    run_sweep,
    sample_gaussian_mixture,
    verify_instance,
)
from .oracle import (
    gaussian_transform,
    half_line_quadrature,
    mixed_weight_lp_integral,
    slab_integral_quadrature,
    surface_area,
)
from .traceops import SplitDims, extend, trace_restrict

_EXIT_OK = 0
_EXIT_FAIL = 1
_EXIT_USAGE = 2


def _add_index_arguments(parser, *, with_t=True):
    parser.add_argument("--q", type=float, required=True, help="integrability exponent, in (1, 2]")
    parser.add_argument("--s", type=float, required=True, help="smoothness order")
    if with_t:
        parser.add_argument("--t", type=float, required=True, help="trace smoothness budget")
    parser.add_argument("--m", type=int, required=True, help="trace codimension")
    parser.add_argument("--n", type=int, required=True, help="ambient dimension")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="soboltrace",
        description="Numerical verification of the fractional Sobolev trace inequality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constant", help="trace constant with factor breakdown")
    _add_index_arguments(p)
    p.add_argument("--json", action="store_true", help="emit a JSON object")
    p.set_defaults(func=_cmd_constant)

    p = sub.add_parser("lemma1", help="slab integral: quadrature vs closed form")
    p.add_argument("--alpha", type=float, required=True, help="Bessel decay exponent, > m/2")
    p.add_argument("--m", type=int, required=True, help="slab dimension (1-3)")
    p.add_argument("--xi", type=float, required=True, help="norm of the frozen block |xi'|")
    p.set_defaults(func=_cmd_lemma1)

    p = sub.add_parser("lemma2", help="weighted L^p integral vs factored form")
    p.add_argument("--alpha", type=float, required=True, help="Bessel damping order")
    p.add_argument("--beta", type=float, required=True, help="xi' weight order")
    p.add_argument("--p", type=float, required=True, help="integrability exponent, >= 2")
    p.add_argument("--m", type=int, required=True, help="slab dimension (1-3)")
    p.add_argument("--n", type=int, required=True, help="ambient dimension, > m")
    p.set_defaults(func=_cmd_lemma2)

    p = sub.add_parser("verify", help="verify one seeded mixture instance")
    _add_index_arguments(p)
    p.add_argument("--seed", type=int, default=0, help="mixture seed")
    p.add_argument("--refine", type=int, default=1, help="refinement levels after the base grid")
    p.add_argument("--points", type=int, default=128, help="base grid points per axis")
    p.add_argument("--half-width", type=float, default=10.0, help="base box half-width")
    p.add_argument("--tolerance", type=float, default=None, help="pass tolerance override")
    p.add_argument("--save-field", metavar="PATH", default=None,
                   help="write the base-grid field to PATH in the portable byte layout")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extend", help="extension right-inverse error study")
    p.add_argument("--s", type=float, required=True, help="extension smoothness, > m/2")
    p.add_argument("--m", type=int, required=True, help="trace codimension")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--refine", type=int, default=2, help="refinement levels after the base grid")
    p.add_argument("--points", type=int, default=256, help="base grid points per axis")
    p.add_argument("--half-width", type=float, default=10.0 * math.sqrt(2.0),
                   help="base box half-width")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("sweep", help="verification campaign from a config file")
    p.add_argument("--config", required=True, help="flat key = value config file")
    p.add_argument("--csv", default=None, help="CSV output path (default: stdout)")
    p.add_argument("--summary", default=None, help="JSON summary path (default: stderr)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("asymptotics", help="constant blow-up/decay table")
    p.add_argument("--mode", choices=("boundary", "decay"), required=True)
    _add_index_arguments(p)
    p.add_argument("--delta", type=float, default=None,
                   help="boundary mode: initial distance below the ceiling")
    p.set_defaults(func=_cmd_asymptotics)

    return parser


# ---------------------------------------------------------------- commands


def _cmd_constant(args):
    breakdown = trace_constant(make_params(args.q, args.s, args.t, args.m, args.n))
    if args.json:
        print(json.dumps(breakdown.as_dict(), indent=2))
    else:
        for key, value in breakdown.as_dict().items():
            print(f"{key} = {value!r}")
    return _EXIT_OK


def _cmd_lemma1(args):
    lhs = slab_integral_quadrature(args.alpha, args.m, args.xi).value
    rhs = slab_integral_value(args.alpha, args.m) * (
        1.0 + args.xi**2
    ) ** -(args.alpha - 0.5 * args.m)
    rel = abs(lhs - rhs) / abs(rhs)
    print(f"lhs_quadrature = {lhs!r}")
    print(f"rhs_closed_form = {rhs!r}")
    print(f"relative_error = {rel!r}")
    return _EXIT_OK


def _cmd_lemma2(args):
    alpha, beta, p, m, n = args.alpha, args.beta, args.p, args.m, args.n
    if not p > 1.0:
        raise ValueError(f"p must exceed 1, got {p}")
    q = p / (p - 1.0)
    ghat = gaussian_transform(0.7, n - m)
    lhs = mixed_weight_lp_integral(ghat, alpha, beta, p, m, n).value
    constant = slab_lp_constant(alpha, p, m)
    expo = (beta - alpha - m / (2.0 * q)) * p

    def marginal(c):
        c = np.asarray(c)
        return np.abs(ghat(c)) ** p * (1.0 + c * c) ** expo * c ** (n - m - 1.0)

    marg = half_line_quadrature(marginal, epsabs=1e-14, epsrel=1e-11)
    rhs = constant * surface_area(n - m) * marg.value
    rel = abs(lhs - rhs) / abs(rhs)
    print(f"lhs_quadrature = {lhs!r}")
    print(f"rhs_factored = {rhs!r}")
    print(f"derived_constant = {constant!r}")
    print(f"relative_error = {rel!r}")
    return _EXIT_OK


def _cmd_verify(args):
    params = make_params(args.q, args.s, args.t, args.m, args.n)
    rng = np.random.default_rng(np.random.SeedSequence(entropy=args.seed))
    mixture = sample_gaussian_mixture(rng, args.n)
    grid = GridSpec(dim=args.n, half_width=args.half_width, points=args.points)
    field = sample(grid, mixture)
    if args.save_field:
        with open(args.save_field, "wb") as fh:
            fh.write(serialize_field(field))
    report = verify_instance(field, params, args.refine, tolerance=args.tolerance)
    print(json.dumps(report.as_dict(), indent=2))
    return _EXIT_OK if report.verdict == "pass" else _EXIT_FAIL


def _cmd_extend(args):
    split = SplitDims(n=args.n, m=args.m)
    grid = GridSpec(dim=args.n - args.m, half_width=args.half_width, points=args.points)
    levels = []
    for _ in range(args.refine + 1):
        g = sample(grid, lambda *xs: np.exp(-sum(x**2 for x in xs) / 2.0))
        target = GridSpec(dim=args.n, half_width=grid.half_width, points=grid.points)
        back = trace_restrict(extend(g, args.s, split, target), split)
        err = float(np.abs(back.values - g.values).max() / np.abs(g.values).max())
        levels.append({"points": grid.points, "error": err})
        grid = refine(grid)
    shrinks = [
        levels[i]["error"] / levels[i + 1]["error"] if levels[i + 1]["error"] else math.inf
        for i in range(len(levels) - 1)
    ]
    print(
        json.dumps(
            {
                "s": args.s,
                "m": args.m,
                "n": args.n,
                "levels": levels,
                "shrink_factors": shrinks,
            },
            indent=2,
        )
    )
    return _EXIT_OK


_CONFIG_KEYS = {
    "q": ("q_values", "float_list"),
    "s": ("s_values", "float_list"),
    "t": ("t_values", "float_list"),
    "m": ("m_values", "int_list"),
    "n": ("n_values", "int_list"),
    "functions_per_tuple": ("functions_per_tuple", "int"),
    "max_components": ("max_components", "int"),
    "amplitude_range": ("amplitude_range", "float_pair"),
    "width_range": ("width_range", "float_pair"),
    "center_half_width": ("center_half_width", "float"),
    "seed": ("seed", "int"),
    "half_width": ("half_width", "float"),
    "base_points": ("base_points", "int"),
    "refinements": ("refinements", "int"),
    "tolerance": ("tolerance", "float"),
    "boundary_margin": ("boundary_margin", "float"),
}


def parse_sweep_config(text):
    """Build a SweepSpec from flat ``key = value`` config text."""
    kwargs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip().lower(), value.strip()
        if key not in _CONFIG_KEYS:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        field, kind = _CONFIG_KEYS[key]
        if field in kwargs:
            raise ValueError(f"config line {lineno}: duplicate key {key!r}")
        try:
            if kind == "float_list":
                kwargs[field] = tuple(float(v) for v in value.split(","))
            elif kind == "int_list":
                kwargs[field] = tuple(int(v) for v in value.split(","))
            elif kind == "float_pair":
                lo, hi = (float(v) for v in value.split(","))
                kwargs[field] = (lo, hi)
            elif kind == "int":
                kwargs[field] = int(value)
            else:
                kwargs[field] = float(value)
        except ValueError as exc:
            raise ValueError(f"config line {lineno}: {exc}")
    missing = {"q_values", "s_values", "t_values"} - kwargs.keys()
    if missing:
        raise ValueError(f"config must set: {', '.join(sorted(k[0] for k in missing))}")
    return SweepSpec(**kwargs)


_SWEEP_COLUMNS = ("q", "p", "s", "t", "m", "n", "grid_N", "lhs", "rhs", "constant", "ratio", "verdict")


def _sweep_rows(spec, reports):
    for rep in reports:
        p = rep.params
        grid_n = rep.refinement_trace[-1][0] if rep.refinement_trace else spec.base_points
        yield (
            repr(p.q),
            repr(p.p),
            repr(p.s),
            repr(p.t),
            str(p.m),
            str(p.n),
            str(grid_n),
            repr(rep.lhs),
            repr(rep.rhs_norm),
            repr(rep.constant),
            repr(rep.ratio),
            rep.verdict,
        )


def _cmd_sweep(args):
    with open(args.config, "r", encoding="utf-8") as fh:
        spec = parse_sweep_config(fh.read())
    reports = run_sweep(spec)

    if args.csv:
        csv_handle = open(args.csv, "w", encoding="utf-8", newline="")
    else:
        csv_handle = sys.stdout
    try:
        writer = csv.writer(csv_handle, lineterminator="\n")
        writer.writerow(_SWEEP_COLUMNS)
        writer.writerows(_sweep_rows(spec, reports))
    finally:
        if args.csv:
            csv_handle.close()

    verdicts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for rep in reports:
        verdicts[rep.verdict] += 1
    finite = [rep.ratio for rep in reports if math.isfinite(rep.ratio)]
    summary = {
        "reports": len(reports),
        "tuples": len(spec.admissible_tuples()),
        "functions_per_tuple": spec.functions_per_tuple,
        "seed": spec.seed,
        "verdicts": verdicts,
        "max_ratio": max(finite) if finite else None,
    }
    payload = json.dumps(summary, indent=2)
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload, file=sys.stderr)
    return _EXIT_OK if verdicts["fail"] == 0 and verdicts["inconclusive"] == 0 else _EXIT_FAIL


def _cmd_asymptotics(args):
    base = make_params(args.q, args.s, args.t, args.m, args.n)
    mode = "boundary_blowup" if args.mode == "boundary" else "large_s_decay"
    result = asymptotics_campaign(mode, base, delta=args.delta)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("parameter", "constant", "fitted_slope"))
    for row in result.rows:
        constant = row.constant if row.constant is not None else math.nan
        writer.writerow((repr(row.parameter), repr(constant), repr(result.fitted_slope)))
    return _EXIT_OK


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"soboltrace: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except OSError as exc:
        print(f"soboltrace: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
