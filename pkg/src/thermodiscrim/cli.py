"""Command-line harness: reports, figure-data CSV files, and rendered figures.

Subcommands: binary, multi, threshold, critical, noncommuting, sweep.
Exit codes: 0 success, 1 usage error, 2 numeric or validation failure.
The environment variable THERMODISCRIM_TOL overrides the default tolerance
used for certificate verification and root finding.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .bloch import (
    FieldHypothesis,
    bloch_of_thermal,
    discriminate_fields,
    measurement_projectors,
    noncommuting_error,
    optimal_measurement_direction,
)
from .critical import classify_best_partner, critical_temperature, q_infinity, q_zero
from .solver import (
    DiscriminationProblem,
    ground_vs_thermal,
    qubit_binary_closed_form,
    qubit_multi_closed_form,
    solve_commuting,
    verify_certificate,
)
from .sweeps import (
    binary_error_grid,
    critical_dimension_sweep,
    delta_sweep,
    effective_qubit_alpha,
    linear_grid,
    noncommuting_sweep,
    write_csv,
)
from .threshold import (
    SIDE_LABELS,
    ThresholdProblem,
    decide,
    qubit_effective_temperatures,
    reduce_to_binary,
)
from .thermal import (
    build_lho_hamiltonian,
    build_qubit_hamiltonian,
    inverse_temperature,
    load_hamiltonian,
    thermal_state,
)

_Z_AXIS = (0.0, 0.0, 1.0)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with code 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"expected a comma-separated list of numbers, got {text!r}") from exc


def _parse_floats_or_range(text: str) -> list[float]:
    """A comma list of numbers, or a start:stop:steps range."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected start:stop:steps, got {text!r}")
        return linear_grid(float(parts[0]), float(parts[1]), int(parts[2]))
    return _parse_floats(text)


def _parse_vec3(text: str) -> np.ndarray:
    values = _parse_floats(text)
    if len(values) != 3:
        raise ValueError(f"expected three comma-separated components, got {text!r}")
    return np.asarray(values)


def _parse_dims(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part.strip() != ""]


def _resolve_tol(args) -> float | None:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("THERMODISCRIM_TOL")
    return float(env) if env else None


def _build_hamiltonian(args):
    if getattr(args, "hamiltonian", None):
        return load_hamiltonian(args.hamiltonian)
    if args.convention == "lho" or (args.d is not None and args.d != 2):
        if args.convention == "traceless":
            raise ValueError("the traceless convention defines only a two-level system")
        return build_lho_hamiltonian(args.d if args.d is not None else 2, args.alpha)
    return build_qubit_hamiltonian(args.alpha, _Z_AXIS)


def _certificate_line(problem, result, tol) -> str:
    ok = verify_certificate(problem, result, **({"tol": tol} if tol is not None else {}))
    gap = abs(result.p_success - result.certificate.trace_value)
    verdict = "feasible" if ok else "INFEASIBLE"
    return f"certificate: {verdict} (tr K = {_fmt(result.certificate.trace_value)}, duality gap = {_fmt(gap)})"


def _describe_povm(result, describe_hypothesis) -> list[str]:
    lines = ["POVM (energy basis):"]
    for j in range(len(result.povm.effects)):
        levels = [l for l, d in enumerate(result.decision_map) if d.hypothesis == j]
        if levels:
            lines.append(f"  {describe_hypothesis(j)}: levels {levels}")
        else:
            lines.append(f"  {describe_hypothesis(j)}: zero effect (never concluded)")
    return lines


def _describe_decisions(result, h, describe_hypothesis) -> list[str]:
    lines = ["decision map:"]
    for l, d in enumerate(result.decision_map):
        note = "  [coin-toss tie]" if d.tie else ""
        lines.append(
            f"  level {l} (E = {_fmt(h.energies[l])}): conclude {describe_hypothesis(d.hypothesis)}{note}"
        )
    return lines


def _maybe_figure(args, columns, rows, renderer) -> None:
    if args.fig is None:
        return
    path = args.fig
    if path == "":
        if not getattr(args, "out", None):
            raise ValueError("--fig without a path requires --out to derive the figure name")
        path = os.path.splitext(args.out)[0] + ".png"
    from . import plotting  # deferred: only needed when a figure is requested

    renderer(plotting, path)
    print(f"wrote figure to {path}")


def _cmd_binary(args) -> int:
    tol = _resolve_tol(args)
    h = _build_hamiltonian(args)
    priors = _parse_floats(args.priors) if args.priors else [0.5, 0.5]
    if len(priors) != 2:
        raise ValueError("binary discrimination takes exactly two priors")
    states = (thermal_state(h, args.t1), thermal_state(h, args.t2))
    problem = DiscriminationProblem(states, np.asarray(priors))
    result = solve_commuting(problem)

    temps = (args.t1, args.t2)

    def describe(j: int) -> str:
        return f"state {j + 1} (T = {_fmt(temps[j])})"

    print(f"binary discrimination of two thermal states (dim {h.dim})")
    print(f"  T1 = {_fmt(args.t1)} (beta1 = {_fmt(inverse_temperature(args.t1))})")
    print(f"  T2 = {_fmt(args.t2)} (beta2 = {_fmt(inverse_temperature(args.t2))})")
    print(f"  priors = {_fmt(priors[0])}, {_fmt(priors[1])}")
    identical = bool(np.abs(states[0].weights - states[1].weights).max() <= (tol or 1e-12))
    if identical:
        print("warning: identical states (no measurement can do better than guessing)")
    print(f"p_error   = {_fmt(result.p_error)}")
    print(f"p_success = {_fmt(result.p_success)}")
    if h.num_levels == 2 and abs(priors[0] - 0.5) <= 1e-12:
        half_gap = (h.energies[1] - h.energies[0]) / 2.0
        closed = qubit_binary_closed_form(
            half_gap, inverse_temperature(args.t1), inverse_temperature(args.t2)
        )
        print(f"closed form (two-level) = {_fmt(closed)}")
    rows_extra = {}
    ground_pair = sorted(temps)
    if ground_pair[0] == 0.0 and ground_pair[1] > 0.0:
        p_err, p_fail = ground_vs_thermal(h, inverse_temperature(ground_pair[1]))
        print(f"p_failure (unambiguous) = {_fmt(p_fail)}")
        rows_extra["p_failure"] = p_fail
    for line in _describe_povm(result, describe):
        print(line)
    for line in _describe_decisions(result, h, describe):
        print(line)
    print(_certificate_line(problem, result, tol))

    if args.out:
        columns = ["t1", "t2", "eta1", "p_error", "p_success"] + list(rows_extra)
        row = [args.t1, args.t2, priors[0], result.p_error, result.p_success]
        row += list(rows_extra.values())
        write_csv(args.out, "binary", _params(args, "t1", "t2", "alpha", "priors", "convention"),
                  columns, [tuple(row)])
        print(f"wrote 1 row to {args.out}")
    return 0


def _cmd_multi(args) -> int:
    tol = _resolve_tol(args)
    h = _build_hamiltonian(args)
    temps = _parse_floats(args.temps)
    if len(temps) < 2:
        raise ValueError("need at least two temperatures")
    states = tuple(thermal_state(h, t) for t in temps)
    if args.priors:
        problem = DiscriminationProblem(states, np.asarray(_parse_floats(args.priors)))
    else:
        problem = DiscriminationProblem.uniform(states)
    result = solve_commuting(problem)

    def describe(j: int) -> str:
        return f"state {j + 1} (T = {_fmt(temps[j])})"

    print(f"discrimination of {len(temps)} thermal states (dim {h.dim})")
    print(f"  T = {', '.join(_fmt(t) for t in temps)}")
    print(f"  priors = {', '.join(_fmt(p) for p in problem.priors)}")
    print(f"p_error   = {_fmt(result.p_error)}")
    print(f"p_success = {_fmt(result.p_success)}")
    if h.num_levels == 2 and args.priors is None:
        half_gap = (h.energies[1] - h.energies[0]) / 2.0
        betas = [inverse_temperature(t) for t in temps]
        print(f"closed form (two-level, uniform priors) = {_fmt(qubit_multi_closed_form(half_gap, betas))}")
    for line in _describe_povm(result, describe):
        print(line)
    for line in _describe_decisions(result, h, describe):
        print(line)
    print(_certificate_line(problem, result, tol))

    if args.out:
        write_csv(args.out, "multi", _params(args, "temps", "alpha", "priors", "convention"),
                  ("n_states", "p_error", "p_success", "trace_k"),
                  [(len(temps), result.p_error, result.p_success,
                    result.certificate.trace_value)])
        print(f"wrote 1 row to {args.out}")
    return 0


def _cmd_threshold(args) -> int:
    tol = _resolve_tol(args)
    h = _build_hamiltonian(args)
    temps = _parse_floats(args.temps)
    problem = ThresholdProblem(h, tuple(temps), args.tc)
    reduction = reduce_to_binary(problem)
    result = decide(problem)

    def describe(j: int) -> str:
        return SIDE_LABELS[j].upper()

    print(f"temperature threshold decision (cutoff T_c = {_fmt(args.tc)}, dim {h.dim})")
    below = [t for t in temps if t < args.tc]
    above = [t for t in temps if t > args.tc]
    print(f"  below ({reduction.n_below}): T = {', '.join(_fmt(t) for t in below)}; prior q- = {_fmt(reduction.q_below)}")
    print(f"  above ({reduction.n_above}): T = {', '.join(_fmt(t) for t in above)}; prior q+ = {_fmt(reduction.q_above)}")
    if h.dim == 2 and h.num_levels == 2:
        t_minus, t_plus = qubit_effective_temperatures(problem)
        print(f"  effective temperatures: T- = {_fmt(t_minus)}, T+ = {_fmt(t_plus)}")
    print(f"p_error   = {_fmt(result.p_error)}")
    print(f"p_success = {_fmt(result.p_success)}")
    for line in _describe_povm(result, describe):
        print(line)
    for line in _describe_decisions(result, h, describe):
        print(line)
    sides = {d.hypothesis for d in result.decision_map}
    trivial = len(sides) == 1
    if trivial:
        only = SIDE_LABELS[sides.pop()].upper()
        print(f"all outcomes conclude {only}; p_error = {_fmt(result.p_error)} "
              "(no discrimination measurement needed)")
    reduced = DiscriminationProblem(
        (reduction.state_below, reduction.state_above),
        np.array([reduction.q_below, reduction.q_above]),
    )
    print(_certificate_line(reduced, result, tol))

    if args.out:
        write_csv(args.out, "threshold", _params(args, "temps", "tc", "alpha", "convention"),
                  ("tc", "q_below", "q_above", "p_error", "p_success", "trivial"),
                  [(args.tc, reduction.q_below, reduction.q_above,
                    result.p_error, result.p_success, trivial)])
        print(f"wrote 1 row to {args.out}")
    return 0


def _cmd_critical(args) -> int:
    tol = _resolve_tol(args)
    root_kwargs = {}
    if args.bracket:
        lo, hi = _parse_floats(args.bracket)
        root_kwargs["bracket"] = (lo, hi)
    if tol is not None:
        root_kwargs["tol"] = tol

    if args.sweep_dim:
        dims = _parse_dims(args.sweep_dim)
        columns, rows = critical_dimension_sweep(dims, args.alpha, args.convention)
        print(f"critical temperatures for {args.convention} spectra, alpha = {_fmt(args.alpha)}")
        for d, t_star in rows:
            print(f"  d = {d}: T* = {_fmt(t_star)}")
        if args.out:
            write_csv(args.out, "critical", _params(args, "sweep_dim", "alpha", "convention"),
                      columns, rows)
            print(f"wrote {len(rows)} rows to {args.out}")
        _maybe_figure(args, columns, rows, lambda plotting, path: plotting.render_series(
            columns, rows, "d", "t_star", None, path,
            xlabel="dimension d", ylabel="critical temperature T*"))
        return 0

    h = _build_hamiltonian(args)
    t_star = critical_temperature(h, **root_kwargs)
    print(f"critical temperature (d = {h.dim}, {len(h.energies)} levels)")
    print(f"T* = {_fmt(t_star)}")
    print(f"  q0(T*) = {_fmt(q_zero(h, t_star))}, q_inf(T*) = {_fmt(q_infinity(h, t_star))}")
    rows = [(h.dim, args.alpha, t_star)]
    columns = ("d", "alpha", "t_star")
    if args.t2 is not None:
        q0 = q_zero(h, args.t2)
        qinf = q_infinity(h, args.t2)
        regime = classify_best_partner(h, args.t2)
        print(f"at T2 = {_fmt(args.t2)}: q0 = {_fmt(q0)}, q_inf = {_fmt(qinf)}; {regime.value}")
        columns = ("d", "alpha", "t_star", "t2", "q0", "q_inf", "regime")
        rows = [(h.dim, args.alpha, t_star, args.t2, q0, qinf, regime.name)]
    if args.out:
        write_csv(args.out, "critical", _params(args, "d", "alpha", "convention", "t2"),
                  columns, rows)
        print(f"wrote 1 row to {args.out}")
    return 0


def _cmd_noncommuting(args) -> int:
    dir1 = _parse_vec3(args.dir1)
    dir2 = _parse_vec3(args.dir2)
    strengths = _parse_floats(args.b)
    priors = _parse_floats(args.priors) if args.priors else [0.5, 0.5]
    if len(priors) != 2:
        raise ValueError("field discrimination takes exactly two priors")

    if args.sweep_t:
        t_values = linear_grid(args.start, args.stop, args.steps)
        columns, rows = noncommuting_sweep(strengths, t_values, dir1, dir2)
        if args.out:
            write_csv(args.out, "noncommuting",
                      _params(args, "b", "dir1", "dir2", "start", "stop", "steps"),
                      columns, rows)
            print(f"wrote {len(rows)} rows to {args.out}")
        else:
            print(f"computed {len(rows)} rows (use --out to save them)")
        _maybe_figure(args, columns, rows, lambda plotting, path: plotting.render_series(
            columns, rows, "t", "p_error", "b", path,
            xlabel="temperature T", ylabel="error probability", logx=True))
        return 0

    b = strengths[0]
    hyp1 = FieldHypothesis(b, dir1, priors[0])
    hyp2 = FieldHypothesis(b, dir2, priors[1])
    result = discriminate_fields(hyp1, hyp2, args.t)
    print("field-direction discrimination at fixed temperature")
    print(f"  B = {_fmt(b)}, T = {_fmt(args.t)}, b1 . b2 = {_fmt(float(dir1 @ dir2))}")
    print(f"  priors = {_fmt(priors[0])}, {_fmt(priors[1])}")
    print(f"p_error   = {_fmt(result.p_error)}")
    print(f"p_success = {_fmt(result.p_success)}")
    if abs(priors[0] - 0.5) <= 1e-12:
        closed = noncommuting_error(dir1, dir2, b, args.t)
        print(f"closed form (equal priors, equal strengths) = {_fmt(closed)}")
    try:
        m = optimal_measurement_direction(hyp1, hyp2, args.t)
        plus, _minus = measurement_projectors(m)
        v1 = bloch_of_thermal(hyp1, args.t)
        v2 = bloch_of_thermal(hyp2, args.t)
        likelihood = (priors[0] * float(v1 @ m), priors[1] * float(v2 @ m))
        concluded = 1 if likelihood[0] >= likelihood[1] else 2
        print(f"measurement axis m = ({_fmt(m[0])}, {_fmt(m[1])}, {_fmt(m[2])})")
        print(f"pi_plus concludes state {concluded}")
    except ValueError as exc:
        print(f"measurement axis: undefined ({exc})")
    if result.certificate is not None:
        gap = abs(result.p_success - result.certificate.trace_value)
        print(f"certificate: tr K = {_fmt(result.certificate.trace_value)}, "
              f"duality gap = {_fmt(gap)}")
    if args.out:
        write_csv(args.out, "noncommuting", _params(args, "b", "t", "dir1", "dir2", "priors"),
                  ("b", "t", "cos12", "p_error", "p_success"),
                  [(b, args.t, float(dir1 @ dir2), result.p_error, result.p_success)])
        print(f"wrote 1 row to {args.out}")
    return 0


_SWEEP_ALPHA_DEFAULTS = {"t1": "1,2,5", "t2": "1,2,5", "t": "0.5", "dim": "5"}


def _cmd_sweep(args) -> int:
    if args.values:
        grid = _parse_floats(args.values)
    elif args.variable == "dim":
        grid = [float(d) for d in range(2, 11)]
    else:
        grid = linear_grid(args.start, args.stop, args.steps)
    alphas = _parse_floats(args.alpha if args.alpha is not None
                           else _SWEEP_ALPHA_DEFAULTS[args.variable])

    if args.variable == "t1":
        t2_values = _parse_floats_or_range(args.t2)
        columns, rows = binary_error_grid(alphas, grid, t2_values, args.convention)
        series, x = ("alpha", "t1") if len(t2_values) == 1 else (None, "t1")
    elif args.variable == "t2":
        t1_values = _parse_floats_or_range(args.t1)
        columns, rows = binary_error_grid(alphas, t1_values, grid, args.convention)
        series, x = ("alpha", "t2") if len(t1_values) == 1 else (None, "t2")
    elif args.variable == "t":
        deltas = _parse_floats(args.delta_t)
        columns, rows = delta_sweep(alphas, grid, deltas, args.convention)
        series, x = "delta_t", "t1"
    elif args.variable == "dim":
        dims = [int(v) for v in grid]
        if any(d < 2 or d != v for d, v in zip(dims, grid)):
            raise ValueError("dimension sweeps use integer values >= 2 "
                             "(pass them via --values or integer --start/--stop)")
        columns, rows = critical_dimension_sweep(dims, alphas[0], "lho")
        series, x = None, "d"
    else:
        raise ValueError(f"unknown sweep variable {args.variable!r}")

    write_csv(args.out, "sweep",
              _params(args, "variable", "alpha", "t1", "t2", "delta_t", "values",
                      "start", "stop", "steps", "convention"),
              columns, rows)
    print(f"wrote {len(rows)} rows to {args.out}")

    y = "t_star" if args.variable == "dim" else "p_error"

    def render(plotting, path):
        two_axes = (args.variable in ("t1", "t2")
                    and len(_parse_floats_or_range(args.t2 if args.variable == "t1" else args.t1)) > 1)
        if two_axes:
            plotting.render_heatmap(columns, rows, "t1", "t2", "p_error", path,
                                    xlabel="T1", ylabel="T2")
        else:
            plotting.render_series(columns, rows, x, y, series, path,
                                   xlabel=x, ylabel=y,
                                   logx=args.variable in ("t1", "t2", "t"))

    _maybe_figure(args, columns, rows, render)
    return 0


def _params(args, *names) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def _add_common(parser, *, hamiltonian: bool = True) -> None:
    parser.add_argument("--alpha", type=float, default=1.0,
                        help="coupling strength / level spacing (default 1)")
    parser.add_argument("--convention", choices=("traceless", "lho"), default="traceless",
                        help="two-level gap 2*alpha (traceless) or ladder spacing alpha (lho)")
    parser.add_argument("--d", type=int, default=None, help="ladder dimension (lho convention)")
    if hamiltonian:
        parser.add_argument("--hamiltonian", metavar="JSON",
                            help="Hamiltonian document (overrides --alpha/--convention/--d)")
    parser.add_argument("--out", metavar="CSV", default=None, help="write results as CSV")
    parser.add_argument("--tol", type=float, default=None,
                        help="verification / root-finding tolerance "
                             "(default: THERMODISCRIM_TOL or built-in)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thermodiscrim",
                     description="Minimum-error discrimination of quantum thermal states.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binary", help="discriminate two thermal states of one Hamiltonian")
    p.add_argument("--t1", type=float, required=True, help="first temperature")
    p.add_argument("--t2", type=float, required=True, help="second temperature")
    p.add_argument("--priors", default=None, help="comma pair eta1,eta2 (default 0.5,0.5)")
    _add_common(p)
    p.set_defaults(func=_cmd_binary)

    p = sub.add_parser("multi", help="discriminate N thermal states of one Hamiltonian")
    p.add_argument("--temps", required=True, help="comma list of temperatures")
    p.add_argument("--priors", default=None, help="comma list of priors (default uniform)")
    _add_common(p)
    p.set_defaults(func=_cmd_multi)

    p = sub.add_parser("threshold", help="decide whether the temperature is above a cutoff")
    p.add_argument("--temps", required=True, help="comma list of candidate temperatures")
    p.add_argument("--tc", type=float, required=True, help="threshold temperature")
    _add_common(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("critical", help="critical temperature where q0 = q_inf")
    p.add_argument("--t2", type=float, default=None,
                   help="also classify this probe temperature against T*")
    p.add_argument("--sweep-dim", default=None, metavar="2..10",
                   help="sweep the ladder dimension (emits CSV rows d,t_star)")
    p.add_argument("--bracket", default=None, help="comma pair lo,hi for the root bracket")
    p.add_argument("--fig", nargs="?", const="", default=None, metavar="PNG",
                   help="render a figure (default name derived from --out)")
    _add_common(p)
    p.set_defaults(func=_cmd_critical, convention="lho")

    p = sub.add_parser("noncommuting",
                       help="equal-temperature fields along different directions")
    p.add_argument("--b", default="1", help="field strength (comma list when sweeping)")
    p.add_argument("--t", type=float, default=1.0, help="shared temperature")
    p.add_argument("--dir1", default="0,0,1", help="first field direction x,y,z")
    p.add_argument("--dir2", default="0,0,-1", help="second field direction x,y,z")
    p.add_argument("--priors", default=None, help="comma pair eta1,eta2 (default 0.5,0.5)")
    p.add_argument("--sweep-t", action="store_true",
                   help="sweep the temperature (Fig-style CSV; defaults 0.01..10, 1000 steps)")
    p.add_argument("--start", type=float, default=0.01)
    p.add_argument("--stop", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--fig", nargs="?", const="", default=None, metavar="PNG")
    p.add_argument("--out", metavar="CSV", default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_noncommuting)

    p = sub.add_parser("sweep", help="figure-data sweeps over temperatures or dimension")
    p.add_argument("--variable", choices=("t1", "t2", "t", "dim"), default="t1")
    p.add_argument("--start", type=float, default=0.01)
    p.add_argument("--stop", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--values", default=None, help="explicit comma list instead of start/stop/steps")
    p.add_argument("--alpha", default=None,
                   help="comma list of couplings (default per variable: 1,2,5 for "
                        "temperature sweeps, 0.5 with offsets, 5 for dimensions)")
    p.add_argument("--t1", default="1", help="fixed first temperature(s) for --variable t2")
    p.add_argument("--t2", default="1", help="fixed second temperature(s) for --variable t1")
    p.add_argument("--delta-t", dest="delta_t", default="0.5,1,5",
                   help="temperature offsets for --variable t")
    p.add_argument("--convention", choices=("traceless", "lho"), default="traceless")
    p.add_argument("--fig", nargs="?", const="", default=None, metavar="PNG")
    p.add_argument("--out", metavar="CSV", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
