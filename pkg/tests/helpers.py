"""Shared random-instance generators for the test suite."""

from __future__ import annotations

import numpy as np

from thermodiscrim import (
    DiscriminationProblem,
    SpectralHamiltonian,
    make_hamiltonian,
    thermal_state,
)


def random_hermitian(rng: np.random.Generator, d: int, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(size=(d, d), scale=scale) + 1j * rng.normal(size=(d, d), scale=scale)
    return (a + a.conj().T) / 2


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(a)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_density_matrix(rng: np.random.Generator, d: int) -> np.ndarray:
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    return rho / rho.trace()


def random_spectral_hamiltonian(rng: np.random.Generator, d: int,
                                degenerate: bool = False) -> SpectralHamiltonian:
    """Random energies in a random orthonormal eigenbasis.

    With ``degenerate`` set, two energies coincide so the built Hamiltonian
    carries a rank-2 projector.
    """
    energies = np.sort(rng.uniform(-2.0, 2.0, size=d))
    # keep levels clearly separated so merging is intentional, not accidental
    energies += 0.05 * np.arange(d)
    if degenerate and d >= 3:
        energies[1] = energies[0]
    u = random_unitary(rng, d)
    projectors = [np.outer(u[:, k], u[:, k].conj()) for k in range(d)]
    return make_hamiltonian(energies, projectors)


def random_commuting_problem(rng: np.random.Generator, max_dim: int = 5,
                             max_states: int = 4,
                             degenerate_every: int = 5,
                             counter: int = 0) -> DiscriminationProblem:
    d = int(rng.integers(2, max_dim + 1))
    n = int(rng.integers(2, max_states + 1))
    degenerate = counter % degenerate_every == 0 and d >= 3
    h = random_spectral_hamiltonian(rng, d, degenerate=degenerate)
    temps = rng.uniform(0.05, 5.0, size=n)
    priors = rng.uniform(0.1, 1.0, size=n)
    priors /= priors.sum()
    states = tuple(thermal_state(h, t) for t in temps)
    return DiscriminationProblem(states, priors)
