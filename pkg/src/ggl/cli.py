"""Command-line front end.

Each subcommand runs one experiment and writes a delimited table (csv or
json) to stdout or a file; grid subcommands can additionally render a
figure with --plot.  Output is deterministic: same flags, same bytes.

Exit codes: 0 success, 2 invalid arguments or configuration, 3 numeric
overflow (a step count too large for exact integer arithmetic).
"""

from __future__ import annotations

import argparse
import itertools
import math
import sys
import warnings
from dataclasses import replace

from .gfg import GfgEvolution, gfg_propagator_exact, gfg_success_prob, optimal_time
from .grover import (
    SearchInstance,
    engine_success_prob,
    grover_angles,
    grover_success_prob,
)
from .pathsum import PathSumSpec, propagator_sliced
from .report import FORMATS, write_report
from .trotter import (
    compare_probabilities,
    grover_pair_dense,
    resonant_error_scan,
    select_params,
    semiclassical_sweep,
    trotter_error_scan,
)

UNROUNDED_RATIO = 2.0 * math.pi**2 / (math.pi - 2.0)


def int_grid(text: str) -> list[int]:
    vals = [int(part) for part in text.split(",")]
    _check_grid(vals)
    return vals


def float_grid(text: str) -> list[float]:
    vals = [float(part) for part in text.split(",")]
    _check_grid(vals)
    return vals


def _check_grid(vals) -> None:
    if not vals:
        raise ValueError("grid is empty")
    ascending = all(b > a for a, b in itertools.pairwise(vals))
    descending = all(b < a for a, b in itertools.pairwise(vals))
    if len(vals) > 1 and not (ascending or descending):
        raise ValueError("grid must be strictly monotone")


def _require_ascending(vals, name: str) -> None:
    if len(vals) > 1 and vals[0] > vals[-1]:
        raise ValueError(f"{name} grid must be ascending")


def _instance(args) -> SearchInstance:
    return SearchInstance(N=args.N, w=args.w, E=args.E, hbar=args.hbar)


def _rows_grover(args):
    inst = _instance(args)
    if args.k is not None and args.ks is not None:
        raise ValueError("pass either --k or --ks, not both")
    if args.ks is not None:
        _require_ascending(args.ks, "k")
        ks = args.ks
    elif args.k is not None:
        ks = [args.k]
    else:
        ks = [round(math.pi * inst.sqrt_n / 4.0)]
    ang = grover_angles(inst)
    return [
        {
            "N": inst.N,
            "w": inst.w,
            "k": k,
            "theta": ang.theta,
            "alpha": ang.alpha,
            "p_digital": grover_success_prob(inst, k),
            "p_engine": engine_success_prob(inst, k),
        }
        for k in ks
    ]


def _rows_gfg(args):
    inst = _instance(args)
    if args.t is not None and args.ts is not None:
        raise ValueError("pass either --t or --ts, not both")
    if args.ts is not None:
        _require_ascending(args.ts, "t")
        ts = args.ts
    elif args.t is not None:
        ts = [args.t]
    else:
        ts = [optimal_time(inst)]
    return [
        {
            "N": inst.N,
            "w": inst.w,
            "E": inst.E,
            "hbar": inst.hbar,
            "t": float(t),
            "p_analog": gfg_success_prob(GfgEvolution(inst, float(t))),
        }
        for t in ts
    ]


def _plan_row(inst, plan):
    return {
        "N": inst.N,
        "l": plan.l,
        "m": plan.m,
        "epsilon": plan.epsilon,
        "k": plan.k,
        "t": plan.t,
        "delta": plan.delta,
    }


def _rows_params(args):
    inst = _instance(args)
    return [_plan_row(inst, select_params(inst, args.l))]


def _rows_compare(args):
    ns = args.Ns if args.Ns is not None else [args.N]
    _require_ascending(ns, "N")
    rows = []
    for n in ns:
        inst = SearchInstance(N=n, w=args.w, E=args.E, hbar=args.hbar)
        res = compare_probabilities(inst, args.l)
        rows.append(
            {
                "N": inst.N,
                "l": res.plan.l,
                "k": res.plan.k,
                "t": res.plan.t,
                "p_analog": res.p_t,
                "p_digital": res.p_k,
                "gap": res.gap,
                "gap_times_n": res.gap * inst.N,
                "delta": res.delta,
            }
        )
    return rows


def _rows_trotter_scan(args):
    inst = _instance(args)
    _require_ascending(args.ks, "k")
    if args.resonant:
        samples = resonant_error_scan(inst, args.ks)
        etas = [s.k * math.pi for s in samples]
    else:
        a, b = grover_pair_dense(inst)
        samples = trotter_error_scan(a, b, args.eta, args.ks)
        etas = [args.eta] * len(samples)
    return [
        {
            "N": inst.N,
            "k": s.k,
            "eta": eta,
            "error": s.error,
            "bound": s.bound,
        }
        for s, eta in zip(samples, etas)
    ]


def _rows_pathsum(args):
    inst = _instance(args)
    _require_ascending(args.ns, "n")
    t = args.t
    exact = gfg_propagator_exact(inst, args.j, args.k, t)
    rows = []
    for n in args.ns:
        val = propagator_sliced(PathSumSpec(instance=inst, n=n, t=t, j=args.j, k=args.k))
        rows.append(
            {
                "N": inst.N,
                "w": inst.w,
                "j": args.j,
                "k": args.k,
                "t": t,
                "n": n,
                "value_re": float(val.real),
                "value_im": float(val.imag),
                "error": abs(val - exact),
            }
        )
    return rows


def _rows_semiclassical(args):
    inst = SearchInstance(N=args.N, w=args.w, E=args.E)
    sweep = semiclassical_sweep(inst, args.l, args.hbars)
    rows = []
    for hb, t, k in sweep:
        inst_hb = replace(inst, hbar=hb)
        rows.append(
            {
                "N": inst.N,
                "l": args.l,
                "hbar": hb,
                "E": inst.E,
                "k": k,
                "t": t,
                "p_analog": gfg_success_prob(GfgEvolution(inst_hb, t)),
                "p_digital": grover_success_prob(inst, k),
            }
        )
    return rows


def _rows_example(args):
    inst = _instance(args)
    plan = select_params(inst, args.l)
    ang = grover_angles(inst)
    p_t = gfg_success_prob(GfgEvolution(inst, plan.t))
    p_k = grover_success_prob(inst, plan.k)
    ratio = plan.t * inst.E / (inst.hbar * inst.sqrt_n)
    quantities = [
        ("N", inst.N),
        ("l", plan.l),
        ("m", plan.m),
        ("epsilon", plan.epsilon),
        ("k", plan.k),
        ("theta", ang.theta),
        ("alpha", ang.alpha),
        ("t", plan.t),
        ("time_ratio", ratio),
        ("time_ratio_unrounded", UNROUNDED_RATIO * plan.l),
        ("p_analog", p_t),
        ("p_digital", p_k),
        ("p_digital_engine", engine_success_prob(inst, plan.k)),
        ("gap", abs(p_k - p_t)),
        ("delta", plan.delta),
    ]
    return [{"quantity": q, "value": v} for q, v in quantities]


# (xcol, ycols, logx, logy, ylabel)
_PLOT_SPECS = {
    "grover": ("k", ["p_digital", "p_engine"], False, False, "success probability"),
    "gfg": ("t", ["p_analog"], False, False, "success probability"),
    "compare": ("N", ["gap_times_n"], True, False, "gap * N"),
    "trotter-scan": ("k", ["error", "bound"], True, True, "spectral-norm error"),
    "pathsum": ("n", ["error"], True, True, "|sliced - exact|"),
    "semiclassical": ("hbar", ["t"], True, True, "t (hbar/E units)"),
}


def _render_plot(command: str, path: str, rows) -> None:
    from .plots import save_series_plot

    if command not in _PLOT_SPECS:
        raise ValueError(f"{command} has no plot output")
    if not rows:
        raise ValueError("nothing to plot")
    xcol, ycols, logx, logy, ylabel = _PLOT_SPECS[command]
    xs = [row[xcol] for row in rows]
    series = {ycol: [row[ycol] for row in rows] for ycol in ycols}
    save_series_plot(
        path,
        xs,
        series,
        xlabel=xcol,
        ylabel=ylabel,
        title=command,
        logx=logx,
        logy=logy,
    )


def _add_common(p, default_n: int, with_w: bool = True) -> None:
    p.add_argument("--N", type=int, default=default_n, help="database size (default %(default)s)")
    if with_w:
        p.add_argument("--w", type=int, default=0, help="marked index (default %(default)s)")
    p.add_argument("--E", type=float, default=1.0, help="energy scale (energy units; default %(default)s)")
    p.add_argument(
        "--hbar", type=float, default=1.0, help="Planck constant (action units; default %(default)s)"
    )


def _add_output(p, plot: bool) -> None:
    p.add_argument(
        "--output", "-o", default="-", help="output file, or - for stdout (default)"
    )
    p.add_argument(
        "--format", "-f", choices=FORMATS, default="csv", help="table format (default %(default)s)"
    )
    if plot:
        p.add_argument("--plot", metavar="PATH", help="also render a figure (png) to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ggl",
        description="Numerical laboratory for discrete and analog quantum search.",
        epilog=(
            "Times are in units of hbar/E throughout.  The environment variable "
            "GGL_DENSE_CAP (default 4096) caps dense matrix construction; larger "
            "N runs through exact two-level forms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grover", help="success probability of the discrete engine vs step count")
    _add_common(p, default_n=1024)
    p.add_argument("--k", type=int, help="step count (default round(pi sqrt(N)/4))")
    p.add_argument("--ks", type=int_grid, help="comma-separated ascending step counts")
    _add_output(p, plot=True)
    p.set_defaults(handler=_rows_grover)

    p = sub.add_parser("gfg", help="analog success probability vs evolution time")
    _add_common(p, default_n=1024)
    p.add_argument("--t", type=float, help="evolution time (units of hbar/E; default optimal)")
    p.add_argument(
        "--ts", type=float_grid, help="comma-separated ascending times (units of hbar/E)"
    )
    _add_output(p, plot=True)
    p.set_defaults(handler=_rows_gfg)

    p = sub.add_parser("params", help="digitization parameters (l, m, epsilon, k, t, delta)")
    _add_common(p, default_n=2**30, with_w=False)
    p.set_defaults(w=0)
    p.add_argument("--l", type=int, default=1, help="time multiplier (default %(default)s)")
    _add_output(p, plot=False)
    p.set_defaults(handler=_rows_params)

    p = sub.add_parser("compare", help="analog vs digital success probability over an N grid")
    p.add_argument("--N", type=int, default=2**30, help="database size (default %(default)s)")
    p.add_argument(
        "--Ns",
        type=int_grid,
        help="comma-separated ascending database sizes (overrides --N)",
    )
    p.add_argument("--w", type=int, default=0, help="marked index (default %(default)s)")
    p.add_argument("--E", type=float, default=1.0, help="energy scale (energy units; default %(default)s)")
    p.add_argument(
        "--hbar", type=float, default=1.0, help="Planck constant (action units; default %(default)s)"
    )
    p.add_argument("--l", type=int, default=1, help="time multiplier (default %(default)s)")
    _add_output(p, plot=True)
    p.set_defaults(handler=_rows_compare)

    p = sub.add_parser("trotter-scan", help="product-formula error vs slice count")
    _add_common(p, default_n=16)
    p.add_argument(
        "--eta", type=float, default=1.0, help="total exponent eta (dimensionless; default %(default)s)"
    )
    p.add_argument(
        "--ks",
        type=int_grid,
        default="4,8,16,32,64,128,256,512",
        help="comma-separated ascending slice counts (default %(default)s)",
    )
    p.add_argument(
        "--resonant",
        action="store_true",
        help="use the resonant schedule t = k pi hbar / E instead of fixed eta",
    )
    _add_output(p, plot=True)
    p.set_defaults(handler=_rows_trotter_scan)

    p = sub.add_parser("pathsum", help="sliced propagator convergence vs slice count")
    _add_common(p, default_n=4)
    p.add_argument("--j", type=int, default=0, help="final basis index (default %(default)s)")
    p.add_argument("--k", type=int, default=1, help="initial basis index (default %(default)s)")
    p.add_argument(
        "--t", type=float, default=1.0, help="evolution time (units of hbar/E; default %(default)s)"
    )
    p.add_argument(
        "--ns",
        type=int_grid,
        default="8,16,32,64,128,256,512,1024,2048,4096",
        help="comma-separated ascending slice counts (default %(default)s)",
    )
    _add_output(p, plot=True)
    p.set_defaults(handler=_rows_pathsum)

    p = sub.add_parser("semiclassical", help="plan time and probabilities along an hbar sweep")
    p.add_argument("--N", type=int, default=2**20, help="database size (default %(default)s)")
    p.add_argument("--w", type=int, default=0, help="marked index (default %(default)s)")
    p.add_argument("--E", type=float, default=1.0, help="energy scale (energy units; default %(default)s)")
    p.add_argument("--l", type=int, default=1, help="time multiplier (default %(default)s)")
    p.add_argument(
        "--hbars",
        type=float_grid,
        default="1,0.01,0.0001,1e-06,1e-08,1e-10",
        help="comma-separated monotone hbar grid (action units; default %(default)s)",
    )
    _add_output(p, plot=True)
    p.set_defaults(handler=_rows_semiclassical)

    p = sub.add_parser("example", help="the end-to-end worked example at N = 2**30")
    _add_common(p, default_n=2**30, with_w=True)
    p.add_argument("--l", type=int, default=1, help="time multiplier (default %(default)s)")
    _add_output(p, plot=False)
    p.set_defaults(handler=_rows_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rows = args.handler(args)
        for item in caught:
            print(f"warning: {item.message}", file=sys.stderr)
        write_report(rows, args.format, args.output)
        if getattr(args, "plot", None):
            _render_plot(args.command, args.plot, rows)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
