"""Temperature-threshold decisions: is the source above or below a cutoff?

A source emits one of N equally likely thermal states.  Splitting them at the
cutoff and averaging each side reduces the task to binary discrimination of
two commuting states with priors given by the side counts; the energy-basis
solver then applies unchanged.  Hypothesis 0 means "below the cutoff",
hypothesis 1 means "above".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .solver import DiscriminationProblem, DiscriminationResult, solve_commuting
from .thermal import EnergyDiagonalState, SpectralHamiltonian, thermal_state

SIDE_LABELS = ("below", "above")


@dataclass(frozen=True, eq=False)
class ThresholdProblem:
    """N candidate temperatures, strictly increasing, and a cutoff between them.

    The cutoff may not equal any candidate (the split must be strict) and
    both sides must be populated, otherwise the decision is vacuous.
    """

    hamiltonian: SpectralHamiltonian
    temperatures: tuple
    t_c: float

    def __post_init__(self):
        temps = tuple(float(t) for t in self.temperatures)
        object.__setattr__(self, "temperatures", temps)
        if len(temps) < 2:
            raise ValueError("need at least two candidate temperatures")
        if any(b <= a for a, b in zip(temps, temps[1:])):
            raise ValueError("temperatures must be strictly increasing")
        if any(t == self.t_c for t in temps):
            raise ValueError(f"cutoff {self.t_c} equals a candidate temperature")
        below = sum(t < self.t_c for t in temps)
        if below == 0 or below == len(temps):
            raise ValueError(
                f"cutoff {self.t_c} leaves every candidate on one side; "
                "the decision problem is vacuous"
            )


@dataclass(frozen=True, eq=False)
class ThresholdReduction:
    """The averaged below/above states and their priors q = count / N."""

    state_below: EnergyDiagonalState
    state_above: EnergyDiagonalState
    q_below: float
    q_above: float
    n_below: int
    n_above: int


def reduce_to_binary(problem: ThresholdProblem) -> ThresholdReduction:
    """Average each side's thermal states uniformly into one hypothesis."""
    h = problem.hamiltonian
    below = [t for t in problem.temperatures if t < problem.t_c]
    above = [t for t in problem.temperatures if t > problem.t_c]
    n = len(problem.temperatures)

    def average(temps) -> EnergyDiagonalState:
        weights = np.mean([thermal_state(h, t).weights for t in temps], axis=0)
        return EnergyDiagonalState(h, weights)

    return ThresholdReduction(
        state_below=average(below),
        state_above=average(above),
        q_below=len(below) / n,
        q_above=len(above) / n,
        n_below=len(below),
        n_above=len(above),
    )


def decide(problem: ThresholdProblem) -> DiscriminationResult:
    """Optimal threshold decision via the commuting solver on the reduced pair.

    In the result, hypothesis 0 is "below" and hypothesis 1 is "above"
    (see SIDE_LABELS); the decision map covers each energy level.
    """
    reduction = reduce_to_binary(problem)
    reduced = DiscriminationProblem(
        (reduction.state_below, reduction.state_above),
        np.array([reduction.q_below, reduction.q_above]),
    )
    return solve_commuting(reduced)


def qubit_effective_temperatures(problem: ThresholdProblem) -> tuple[float, float]:
    """The unique temperatures whose thermal states equal the side averages (qubit only).

    For a two-level Hamiltonian with gap 2*alpha, the average of thermal
    states on a side is itself thermal at T with
    tanh(alpha / T) = mean of tanh(alpha / T_j) over the side.
    Returns (T_below, T_above); T_below < T_above always.
    """
    h = problem.hamiltonian
    if h.dim != 2 or h.num_levels != 2:
        raise ValueError("effective temperatures are defined for qubit Hamiltonians only")
    alpha = float(h.energies[1] - h.energies[0]) / 2.0

    def effective(temps) -> float:
        mean = sum(_tanh_ratio(alpha, t) for t in temps) / len(temps)
        if mean >= 1.0:
            return 0.0
        if mean <= 0.0:
            return math.inf
        return alpha / math.atanh(mean)

    below = [t for t in problem.temperatures if t < problem.t_c]
    above = [t for t in problem.temperatures if t > problem.t_c]
    return effective(below), effective(above)


def _tanh_ratio(alpha: float, t: float) -> float:
    if t == 0.0:
        return 1.0
    if math.isinf(t):
        return 0.0
    return math.tanh(alpha / t)
