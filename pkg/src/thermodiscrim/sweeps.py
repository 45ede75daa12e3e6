"""Parameter sweeps behind the figure-data commands, plus the CSV writer.

Every sweep returns (columns, rows) with a deterministic row order so that
identical invocations produce byte-identical CSV files.
"""

from __future__ import annotations

import json

import numpy as np

from . import __version__
from .bloch import noncommuting_error
from .critical import critical_temperature
from .solver import qubit_binary_closed_form
from .thermal import build_lho_hamiltonian, build_qubit_hamiltonian, inverse_temperature

CONVENTIONS = ("traceless", "lho")


def effective_qubit_alpha(alpha: float, convention: str) -> float:
    """Half-gap of the two-level system under the named gap convention.

    'traceless' means energies (-alpha, +alpha) (gap 2*alpha); 'lho' means a
    ladder starting at 0 with spacing alpha (gap alpha for d = 2).
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    return alpha if convention == "traceless" else alpha / 2.0


def binary_error_grid(alphas, t1_values, t2_values, convention: str = "traceless"):
    """Binary error probabilities over a grid of couplings and temperatures."""
    columns = ("alpha", "t1", "t2", "p_error")
    rows = []
    for alpha in alphas:
        half_gap = effective_qubit_alpha(alpha, convention)
        for t1 in t1_values:
            beta1 = inverse_temperature(t1)
            for t2 in t2_values:
                p = qubit_binary_closed_form(half_gap, beta1, inverse_temperature(t2))
                rows.append((alpha, t1, t2, p))
    return columns, rows


def delta_sweep(alphas, t_values, deltas, convention: str = "traceless"):
    """Binary error along T at fixed temperature differences T2 = T1 + delta."""
    columns = ("alpha", "delta_t", "t1", "t2", "p_error")
    rows = []
    for alpha in alphas:
        half_gap = effective_qubit_alpha(alpha, convention)
        for delta in deltas:
            for t in t_values:
                t2 = t + delta
                p = qubit_binary_closed_form(
                    half_gap, inverse_temperature(t), inverse_temperature(t2)
                )
                rows.append((alpha, delta, t, t2, p))
    return columns, rows


def noncommuting_sweep(strengths, t_values, dir1, dir2):
    """Equal-prior error between equal-strength fields along two directions."""
    columns = ("b", "t", "p_error")
    rows = []
    for b in strengths:
        for t in t_values:
            rows.append((b, t, noncommuting_error(dir1, dir2, b, t)))
    return columns, rows


def critical_dimension_sweep(dims, alpha: float, convention: str = "lho"):
    """Critical temperature against the number of levels of an equidistant ladder."""
    columns = ("d", "t_star")
    rows = []
    for d in dims:
        if convention == "lho":
            h = build_lho_hamiltonian(int(d), alpha)
        elif convention == "traceless":
            if int(d) != 2:
                raise ValueError("the traceless convention defines only a two-level system")
            h = build_qubit_hamiltonian(alpha, (0.0, 0.0, 1.0))
        else:
            raise ValueError(f"unknown convention {convention!r}")
        rows.append((int(d), critical_temperature(h)))
    return columns, rows


def linear_grid(start: float, stop: float, steps: int) -> list[float]:
    """Evenly spaced sweep values; start < stop and at least two steps."""
    if not start < stop:
        raise ValueError(f"sweep range needs start < stop, got ({start}, {stop})")
    if steps < 2:
        raise ValueError(f"sweep needs at least 2 steps, got {steps}")
    return [float(x) for x in np.linspace(start, stop, int(steps))]


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def csv_text(command: str, params: dict, columns, rows) -> str:
    """Render a sweep as self-describing CSV text.

    The first line records the tool version, command, and canonical-JSON
    parameters; numeric cells use full round-trip precision.
    """
    canonical = json.dumps(params, sort_keys=True, separators=(",", ":"))
    lines = [f"# thermodiscrim v{__version__} cmd={command} params={canonical}"]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_format_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def write_csv(path, command: str, params: dict, columns, rows) -> None:
    text = csv_text(command, params, columns, rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
