"""Spectral Hamiltonians, Gibbs states, partition functions, energy distributions.

Units: k_B = 1 exactly, so the inverse temperature is beta = 1/T and energies
and temperatures share one unit system.  T = 0 maps to beta = +inf and is
handled as a first-class value (exact ground-state weights), never as a
large-float approximation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .hermitian import HERMITICITY_TOL, as_hermitian, pauli_vector

# Energies closer than this at construction are merged into one degenerate level.
LEVEL_MERGE_TOL = 1e-12
# Tolerance for projector algebra (idempotence, orthogonality, completeness).
PROJECTOR_TOL = 1e-10
WEIGHT_NORM_TOL = 1e-12


def inverse_temperature(t: float) -> float:
    """beta = 1/T with T = 0 -> +inf and T = +inf -> 0 (k_B = 1)."""
    if math.isnan(t) or t < 0:
        raise ValueError(f"temperature must be nonnegative, got {t}")
    if t == 0.0:
        return math.inf
    if math.isinf(t):
        return 0.0
    return 1.0 / t


def temperature_of_beta(beta: float) -> float:
    """Inverse of :func:`inverse_temperature`."""
    if math.isnan(beta) or beta < 0:
        raise ValueError(f"inverse temperature must be nonnegative, got {beta}")
    if beta == 0.0:
        return math.inf
    if math.isinf(beta):
        return 0.0
    return 1.0 / beta


@dataclass(frozen=True, eq=False)
class SpectralHamiltonian:
    """A Hamiltonian as distinct energy levels with degeneracy-carrying projectors.

    ``energies`` is strictly increasing; ``projectors[j]`` projects onto the
    eigenspace of ``energies[j]``.  The projectors are Hermitian, idempotent,
    mutually orthogonal, and complete, and their ranks sum to ``dim``.
    """

    energies: np.ndarray
    projectors: tuple
    dim: int
    ranks: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        energies = np.asarray(self.energies, dtype=float)
        projectors = tuple(as_hermitian(p) for p in self.projectors)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "projectors", projectors)
        if energies.ndim != 1 or len(energies) != len(projectors) or len(energies) == 0:
            raise ValueError("need one projector per energy, at least one level")
        if np.any(np.diff(energies) <= 0):
            raise ValueError("energies must be strictly increasing")
        d = self.dim
        ident = np.eye(d)
        total = np.zeros((d, d), dtype=complex)
        ranks = []
        for j, p in enumerate(projectors):
            if p.shape != (d, d):
                raise ValueError(f"projector {j} has shape {p.shape}, expected {(d, d)}")
            if np.abs(p @ p - p).max() > PROJECTOR_TOL:
                raise ValueError(f"projector {j} is not idempotent")
            rank = p.trace().real
            if abs(rank - round(rank)) > PROJECTOR_TOL or round(rank) < 1:
                raise ValueError(f"projector {j} has non-integer rank {rank}")
            ranks.append(int(round(rank)))
            for k in range(j):
                if np.abs(projectors[k] @ p).max() > PROJECTOR_TOL:
                    raise ValueError(f"projectors {k} and {j} are not orthogonal")
            total += p
        if np.abs(total - ident).max() > PROJECTOR_TOL:
            raise ValueError("projectors do not sum to the identity")
        if sum(ranks) != d:
            raise ValueError(f"projector ranks sum to {sum(ranks)}, expected dim {d}")
        object.__setattr__(self, "ranks", np.array(ranks, dtype=float))

    @property
    def num_levels(self) -> int:
        return len(self.energies)

    def matrix(self) -> np.ndarray:
        """Assemble the dense matrix sum_j E_j Pi_j."""
        h = np.zeros((self.dim, self.dim), dtype=complex)
        for e, p in zip(self.energies, self.projectors):
            h += e * p
        return h

    def shifted(self, x: float) -> "SpectralHamiltonian":
        """The gauge-shifted Hamiltonian H + x*I (same projectors)."""
        return SpectralHamiltonian(self.energies + x, self.projectors, self.dim)

    def matches(self, other: "SpectralHamiltonian",
                energy_tol: float = LEVEL_MERGE_TOL,
                projector_tol: float = PROJECTOR_TOL) -> bool:
        """Whether two Hamiltonians describe the same levels and eigenspaces."""
        if self is other:
            return True
        if self.dim != other.dim or self.num_levels != other.num_levels:
            return False
        if np.abs(self.energies - other.energies).max() > energy_tol:
            return False
        return all(
            np.abs(p - q).max() <= projector_tol
            for p, q in zip(self.projectors, other.projectors)
        )


def make_hamiltonian(energies, projectors, dim: int | None = None) -> SpectralHamiltonian:
    """Build a SpectralHamiltonian, merging levels whose energies agree within tolerance.

    Input levels need not be distinct: energies within ``LEVEL_MERGE_TOL`` of a
    group's first member are merged and their projectors summed.
    """
    pairs = sorted(zip(np.asarray(energies, dtype=float), projectors), key=lambda ep: ep[0])
    merged: list[tuple[float, np.ndarray]] = []
    for e, p in pairs:
        p = as_hermitian(p)
        if merged and abs(e - merged[-1][0]) <= LEVEL_MERGE_TOL:
            merged[-1] = (merged[-1][0], merged[-1][1] + p)
        else:
            merged.append((e, p))
    if dim is None:
        dim = merged[0][1].shape[0]
    return SpectralHamiltonian(
        np.array([e for e, _ in merged]),
        tuple(p for _, p in merged),
        dim,
    )


def build_qubit_hamiltonian(alpha: float, direction) -> SpectralHamiltonian:
    """Traceless qubit Hamiltonian alpha * (n . sigma) with energies (-alpha, +alpha).

    The ground projector is (I - n.sigma)/2 and the excited one (I + n.sigma)/2,
    so the level gap is 2*alpha.
    """
    if alpha <= 0:
        raise ValueError(f"field strength must be positive, got {alpha}")
    n = np.asarray(direction, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise ValueError("direction must be a unit 3-vector")
    s = pauli_vector(n)
    ident = np.eye(2, dtype=complex)
    return SpectralHamiltonian(
        np.array([-alpha, alpha]),
        ((ident - s) / 2, (ident + s) / 2),
        dim=2,
    )


def build_lho_hamiltonian(d: int, alpha: float, ground_energy: float = 0.0) -> SpectralHamiltonian:
    """Finite ladder with d equidistant nondegenerate levels E_0 + j*alpha.

    Note the d = 2 gap is alpha, half the traceless-qubit gap 2*alpha.
    """
    if d < 2:
        raise ValueError(f"need at least two levels, got d={d}")
    if alpha <= 0:
        raise ValueError(f"level spacing must be positive, got {alpha}")
    projectors = []
    for j in range(d):
        p = np.zeros((d, d), dtype=complex)
        p[j, j] = 1.0
        projectors.append(p)
    return SpectralHamiltonian(
        ground_energy + alpha * np.arange(d, dtype=float),
        tuple(projectors),
        dim=d,
    )


@dataclass(frozen=True, eq=False)
class EnergyDiagonalState:
    """A density operator diagonal in a Hamiltonian's energy eigenbasis.

    ``weights[j]`` is the probability of level j (including its degeneracy),
    so the operator is sum_j (w_j / tr Pi_j) Pi_j.
    """

    hamiltonian: SpectralHamiltonian
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "weights", w)
        if w.shape != (self.hamiltonian.num_levels,):
            raise ValueError("need one weight per energy level")
        if w.min() < 0:
            raise ValueError(f"negative level weight {w.min()}")
        if abs(w.sum() - 1.0) > WEIGHT_NORM_TOL:
            raise ValueError(f"level weights sum to {w.sum()}, expected 1")

    def to_matrix(self) -> np.ndarray:
        """Dense density matrix sum_j (w_j / tr Pi_j) Pi_j."""
        h = self.hamiltonian
        rho = np.zeros((h.dim, h.dim), dtype=complex)
        for w, r, p in zip(self.weights, h.ranks, h.projectors):
            if w:
                rho += (w / r) * p
        return rho


@dataclass(frozen=True, eq=False)
class ThermalState(EnergyDiagonalState):
    """Gibbs state exp(-beta H)/Z over a spectral Hamiltonian.

    ``partition_value`` is the partition function computed in the
    ground-shifted gauge (spectrum shifted so the lowest energy is 0), the
    overflow-safe convention used throughout.
    """

    beta: float = 0.0
    partition_value: float = 1.0


def thermal_state_from_beta(h: SpectralHamiltonian, beta: float) -> ThermalState:
    """Thermal state at inverse temperature beta (beta = +inf is the ground state)."""
    if math.isnan(beta) or beta < 0:
        raise ValueError(f"inverse temperature must be nonnegative, got {beta}")
    if math.isinf(beta):
        weights = np.zeros(h.num_levels)
        weights[0] = 1.0
        return ThermalState(h, weights, beta=beta, partition_value=float(h.ranks[0]))
    # Shift so the ground energy is 0 before exponentiating: e^{-beta*E}
    # underflows gracefully whereas e^{+beta*E} would overflow.  The shift is
    # legitimate because H and H + xI have identical thermal states.
    shifted = h.energies - h.energies[0]
    boltzmann = h.ranks * np.exp(-beta * shifted)
    z = boltzmann.sum()
    return ThermalState(h, boltzmann / z, beta=beta, partition_value=float(z))


def thermal_state(h: SpectralHamiltonian, t: float) -> ThermalState:
    """Thermal state at temperature t (k_B = 1; t = 0 yields the ground state)."""
    return thermal_state_from_beta(h, inverse_temperature(t))


def _parse_complex_entry(entry) -> complex:
    if isinstance(entry, (int, float)):
        return complex(entry)
    if isinstance(entry, (list, tuple)) and len(entry) == 2:
        return complex(entry[0], entry[1])
    raise ValueError(f"matrix entries must be numbers or [re, im] pairs, got {entry!r}")


def _parse_matrix(rows) -> np.ndarray:
    return np.array([[_parse_complex_entry(e) for e in row] for row in rows], dtype=complex)


def hamiltonian_from_dict(doc: dict) -> SpectralHamiltonian:
    """Build a Hamiltonian from its JSON document form.

    Supported documents:
      {"type": "qubit", "alpha": a, "direction": [x, y, z]}
      {"type": "lho", "d": d, "alpha": a, "ground_energy": e0 (optional)}
      {"type": "explicit", "energies": [...], "projectors": [...] (optional)}

    Explicit projectors are given per energy as nested arrays whose entries
    are real numbers or [re, im] pairs, and are validated against the
    spectral-Hamiltonian invariants.  When omitted, computational-basis
    projectors are used (level j = |j><j|), with equal energies merged.
    """
    if not isinstance(doc, dict) or "type" not in doc:
        raise ValueError("Hamiltonian document must be an object with a 'type' key")
    kind = doc["type"]
    if kind == "qubit":
        return build_qubit_hamiltonian(doc.get("alpha", 1.0), doc.get("direction", (0.0, 0.0, 1.0)))
    if kind == "lho":
        if "d" not in doc:
            raise ValueError("lho Hamiltonian document requires 'd'")
        return build_lho_hamiltonian(int(doc["d"]), doc.get("alpha", 1.0),
                                     doc.get("ground_energy", 0.0))
    if kind == "explicit":
        if "energies" not in doc:
            raise ValueError("explicit Hamiltonian document requires 'energies'")
        energies = [float(e) for e in doc["energies"]]
        if "projectors" in doc:
            projectors = [_parse_matrix(p) for p in doc["projectors"]]
            if len(projectors) != len(energies):
                raise ValueError("need one projector per energy")
        else:
            d = len(energies)
            projectors = []
            for j in range(d):
                p = np.zeros((d, d), dtype=complex)
                p[j, j] = 1.0
                projectors.append(p)
        return make_hamiltonian(energies, projectors)
    raise ValueError(f"unknown Hamiltonian type {kind!r}")


def load_hamiltonian(path) -> SpectralHamiltonian:
    """Read a Hamiltonian JSON document from ``path``."""
    with open(path, "r", encoding="utf-8") as fh:
        return hamiltonian_from_dict(json.load(fh))
