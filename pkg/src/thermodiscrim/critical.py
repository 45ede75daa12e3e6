"""Limiting trace distances and the critical temperature where they coincide.

For a fixed Hamiltonian and a probe temperature T2, q_zero and q_infinity are
the trace distances from the T2 thermal state to the T1 -> 0 ground state and
the T1 -> inf maximally mixed state.  Their crossing q_zero = q_infinity
defines the critical temperature T*: below it, T2 is best told apart from very
hot states; above it, from very cold ones.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .thermal import SpectralHamiltonian, inverse_temperature, thermal_state

CLASSIFY_TOL = 1e-10
DEFAULT_ROOT_TOL = 1e-10
# Default bisection bracket as multiples of the mean level gap.
BRACKET_FACTORS = (1e-3, 1e3)
_MAX_BISECTIONS = 200


class PartnerRegime(enum.Enum):
    """Which limiting partner temperature discriminates T2 best."""

    BEST_AT_LOW_T = "best at low T1"
    BEST_AT_HIGH_T = "best at high T1"
    TIE = "tie"


def _check_probe_temperature(t2: float) -> float:
    if math.isnan(t2) or math.isinf(t2) or t2 <= 0:
        raise ValueError(f"probe temperature must be finite and positive, got {t2}")
    return float(t2)


def q_zero(h: SpectralHamiltonian, t2: float) -> float:
    """Trace distance between the ground state and the thermal state at t2.

    Uses the closed form 2 (Z2 - 1) / Z2 with the partition function taken in
    the ground-shifted gauge.  Valid only for a nondegenerate ground level;
    degenerate ground states are rejected.
    """
    t2 = _check_probe_temperature(t2)
    if h.ranks[0] != 1:
        raise ValueError(
            f"ground level has degeneracy {int(h.ranks[0])}; the closed form "
            "requires a unique ground state"
        )
    beta2 = inverse_temperature(t2)
    z2 = float((h.ranks * np.exp(-beta2 * (h.energies - h.energies[0]))).sum())
    return 2.0 * (z2 - 1.0) / z2


def q_infinity(h: SpectralHamiltonian, t2: float) -> float:
    """Trace distance between the maximally mixed state and the thermal state at t2.

    Computed from the general per-level absolute-value sum
    sum_l |tr(Pi_l)/d - w_l|, which equals the trace norm for commuting
    operators regardless of degeneracies.
    """
    t2 = _check_probe_temperature(t2)
    weights = thermal_state(h, t2).weights
    mixed = h.ranks / h.dim
    return float(np.abs(mixed - weights).sum())


def _default_bracket(h: SpectralHamiltonian) -> tuple[float, float]:
    mean_gap = float(h.energies[-1] - h.energies[0]) / (h.num_levels - 1)
    return BRACKET_FACTORS[0] * mean_gap, BRACKET_FACTORS[1] * mean_gap


def critical_temperature(h: SpectralHamiltonian,
                         bracket: tuple[float, float] | None = None,
                         tol: float = DEFAULT_ROOT_TOL) -> float:
    """Temperature T* where q_zero(T*) = q_infinity(T*), found by bisection.

    The gap function q_zero - q_infinity must change sign over the bracket
    (default: mean level gap scaled by 1e-3 and 1e3).  The returned root
    satisfies |q_zero - q_infinity| <= tol with the bracket refined to width
    tol * max(1, T*).
    """
    if h.num_levels < 2:
        raise ValueError("need at least two energy levels")
    if bracket is None:
        bracket = _default_bracket(h)
    lo, hi = float(bracket[0]), float(bracket[1])
    if not 0 < lo < hi:
        raise ValueError(f"invalid bracket ({lo}, {hi})")

    def gap(t: float) -> float:
        return q_zero(h, t) - q_infinity(h, t)

    f_lo, f_hi = gap(lo), gap(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        raise ValueError(
            "no sign change over the bracket: "
            f"q0-qinf({lo:g}) = {f_lo:.6g}, q0-qinf({hi:g}) = {f_hi:.6g}"
        )
    mid = 0.5 * (lo + hi)
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        f_mid = gap(mid)
        if f_mid == 0.0:
            return mid
        if (hi - lo) <= tol * max(1.0, mid) and abs(f_mid) <= tol:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    raise RuntimeError(f"bisection failed to converge to tolerance {tol}")


def classify_best_partner(h: SpectralHamiltonian, t2: float) -> PartnerRegime:
    """Compare the limiting distances: higher q wins (lower error probability)."""
    q0 = q_zero(h, t2)
    qinf = q_infinity(h, t2)
    if abs(q0 - qinf) <= CLASSIFY_TOL:
        return PartnerRegime.TIE
    return PartnerRegime.BEST_AT_HIGH_T if qinf > q0 else PartnerRegime.BEST_AT_LOW_T
