"""Qubit thermal states at a fixed temperature but different field Hamiltonians.

Each hypothesis is a spin in a magnetic field B along a unit direction b; its
thermal state has Bloch vector v = -tanh(B/T) b.  Unlike the fixed-Hamiltonian
case, these states generally do not commute, but the optimal binary
measurement is still a projective spin measurement, along the weighted Bloch
difference, and for equal priors that direction is independent of both B and T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hermitian import pauli_vector
from .solver import DiscriminationResult, helstrom_binary, solve_commuting, DiscriminationProblem
from .thermal import EnergyDiagonalState, build_qubit_hamiltonian, inverse_temperature

UNIT_TOL = 1e-12


def _unit_vector(b) -> np.ndarray:
    v = np.asarray(b, dtype=float)
    if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > UNIT_TOL:
        raise ValueError("direction must be a unit 3-vector")
    return v


@dataclass(frozen=True, eq=False)
class FieldHypothesis:
    """One candidate Hamiltonian B * (b . sigma) with its prior probability."""

    strength: float
    direction: np.ndarray
    prior: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "direction", _unit_vector(self.direction))
        if self.strength <= 0:
            raise ValueError(f"field strength must be positive, got {self.strength}")
        if not 0.0 <= self.prior <= 1.0:
            raise ValueError(f"prior must lie in [0, 1], got {self.prior}")


def _mixing_factor(strength: float, t: float) -> float:
    # tanh(B/T) with the exact limits: T = 0 gives a pure state, T = inf the
    # maximally mixed one.
    if math.isnan(t) or t < 0:
        raise ValueError(f"temperature must be nonnegative, got {t}")
    if t == 0.0:
        return 1.0
    if math.isinf(t):
        return 0.0
    return math.tanh(strength / t)


def bloch_of_thermal(hyp: FieldHypothesis, t: float) -> np.ndarray:
    """Bloch vector v = -tanh(B/T) b of the hypothesis' thermal state."""
    return -_mixing_factor(hyp.strength, t) * hyp.direction


def density_matrix_of_bloch(v) -> np.ndarray:
    """The qubit density matrix (I + v . sigma) / 2."""
    v = np.asarray(v, dtype=float)
    if np.linalg.norm(v) > 1.0 + UNIT_TOL:
        raise ValueError("Bloch vector must have norm at most 1")
    return 0.5 * (np.eye(2, dtype=complex) + pauli_vector(v))


def noncommuting_error(b1, b2, strength: float, t: float) -> float:
    """Equal-prior error probability for equal strengths and directions b1, b2.

    (1/2)(1 - (1/sqrt 2) |tanh(B/T)| sqrt(1 - b1 . b2)); coincides with the
    Helstrom value on the explicit density matrices.
    """
    b1 = _unit_vector(b1)
    b2 = _unit_vector(b2)
    if strength <= 0:
        raise ValueError(f"field strength must be positive, got {strength}")
    factor = abs(_mixing_factor(strength, t))
    separation = math.sqrt(max(0.0, 1.0 - float(b1 @ b2)))
    return 0.5 * (1.0 - factor * separation / math.sqrt(2.0))


def optimal_measurement_direction(h1: FieldHypothesis, h2: FieldHypothesis,
                                  t: float) -> np.ndarray:
    """Unit vector m along eta1 v1 - eta2 v2; the optimal spin measurement axis.

    The optimal projectors are (I +- m . sigma) / 2.  For equal priors m is
    antiparallel to b1 - b2, independent of both the field strength and the
    temperature.  Rejected when the weighted Bloch vectors coincide (the
    measurement family cannot separate the hypotheses).
    """
    w = h1.prior * bloch_of_thermal(h1, t) - h2.prior * bloch_of_thermal(h2, t)
    norm = float(np.linalg.norm(w))
    if norm <= UNIT_TOL:
        raise ValueError("weighted Bloch vectors coincide; no separating spin axis")
    return w / norm


def measurement_projectors(m) -> tuple[np.ndarray, np.ndarray]:
    """The projector pair (pi_plus, pi_minus) = ((I + m.sigma)/2, (I - m.sigma)/2)."""
    m = _unit_vector(m)
    s = pauli_vector(m)
    ident = np.eye(2, dtype=complex)
    return 0.5 * (ident + s), 0.5 * (ident - s)


def discriminate_fields(h1: FieldHypothesis, h2: FieldHypothesis,
                        t: float) -> DiscriminationResult:
    """Optimal discrimination of two field hypotheses at a shared temperature.

    Parallel or antiparallel directions give commuting states and route to the
    energy-basis solver; anything else is solved as a general binary problem
    on the explicit density matrices.
    """
    if abs(h1.prior + h2.prior - 1.0) > 1e-12:
        raise ValueError("priors must sum to 1")
    cos = float(h1.direction @ h2.direction)
    if abs(cos) >= 1.0 - UNIT_TOL:
        ham = build_qubit_hamiltonian(h1.strength, h1.direction)
        state1 = _field_state(ham, h1.strength, +1.0, t)
        state2 = _field_state(ham, h2.strength, math.copysign(1.0, cos), t)
        problem = DiscriminationProblem((state1, state2), np.array([h1.prior, h2.prior]))
        return solve_commuting(problem)
    rho1 = density_matrix_of_bloch(bloch_of_thermal(h1, t))
    rho2 = density_matrix_of_bloch(bloch_of_thermal(h2, t))
    return helstrom_binary(rho1, rho2, h1.prior)


def _field_state(ham, strength: float, orientation: float, t: float) -> EnergyDiagonalState:
    # Thermal level weights of B * (o * b . sigma) in the eigenbasis of the
    # shared Hamiltonian built along b: ((1 + o*f)/2, (1 - o*f)/2) with
    # f = tanh(B/T).
    beta = inverse_temperature(t)
    f = 1.0 if math.isinf(beta) else math.tanh(beta * strength)
    ground = 0.5 * (1.0 + orientation * f)
    return EnergyDiagonalState(ham, np.array([ground, 1.0 - ground]))
