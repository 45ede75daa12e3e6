"""Minimum-error discrimination solvers.

Covers the binary Helstrom bound for arbitrary density matrices, the exact
N-ary solver for commuting (energy-diagonal) states with its dual optimality
certificate, the maximum-likelihood decision map, ground-state special cases,
and a brute-force oracle over projective decision maps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .hermitian import as_hermitian, eigendecompose, is_psd
from .thermal import EnergyDiagonalState, SpectralHamiltonian, thermal_state_from_beta

# Relative tolerance below which two level scores count as an exact tie.
TIE_RTOL = 1e-12
# Default tolerance for certificate feasibility and slackness checks.
CERTIFICATE_TOL = 1e-9
# Tolerance for validating density-matrix inputs (unit trace, PSD).
STATE_TOL = 1e-9
# Hard cap on the brute-force search space.
BRUTE_FORCE_LIMIT = 10**6


@dataclass(frozen=True, eq=False)
class Povm:
    """A finite measurement: one positive effect per hypothesis, summing to I.

    Zero effects are kept explicitly; a hypothesis the measurement never
    concludes still owns a (zero) slot.
    """

    effects: tuple

    def __post_init__(self):
        effects = tuple(as_hermitian(f) for f in self.effects)
        object.__setattr__(self, "effects", effects)
        if not effects:
            raise ValueError("a POVM needs at least one effect")
        d = effects[0].shape[0]
        total = np.zeros((d, d), dtype=complex)
        for j, f in enumerate(effects):
            if f.shape != (d, d):
                raise ValueError("POVM effects must share one dimension")
            if not is_psd(f, 1e-10):
                raise ValueError(f"effect {j} is not positive semidefinite")
            total += f
        if np.abs(total - np.eye(d)).max() > 1e-10:
            raise ValueError("POVM effects do not sum to the identity")


@dataclass(frozen=True, eq=False)
class DualCertificate:
    """Operator K with K >= eta_j rho_j for all j, witnessing optimality.

    ``gaps[j]`` stores K - eta_j rho_j; at the optimum tr K equals the success
    probability and each gap is orthogonal to the matching POVM effect.
    """

    matrix: np.ndarray
    gaps: tuple
    trace_value: float


@dataclass(frozen=True)
class LevelDecision:
    """Conclusion drawn from one energy level: hypothesis index, tie marker.

    ``tie`` is set when the maximum-likelihood score was not unique (within
    relative tolerance); the smallest tied index is then reported, which
    leaves the success probability unchanged.
    """

    hypothesis: int
    tie: bool = False


@dataclass(frozen=True, eq=False)
class DiscriminationResult:
    """Outcome of a minimum-error discrimination problem."""

    p_error: float
    p_success: float
    povm: Povm
    certificate: DualCertificate | None = None
    decision_map: tuple | None = None


@dataclass(frozen=True, eq=False)
class DiscriminationProblem:
    """N hypothesis states with prior probabilities.

    ``states`` may be energy-diagonal states over one shared Hamiltonian (the
    commuting pathway) or, for the binary pathway, arbitrary density matrices.
    """

    states: tuple
    priors: np.ndarray

    def __post_init__(self):
        states = tuple(self.states)
        priors = np.asarray(self.priors, dtype=float)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "priors", priors)
        if len(states) < 2:
            raise ValueError("discrimination needs at least two hypotheses")
        if priors.shape != (len(states),):
            raise ValueError("need one prior per state")
        if priors.min() < 0:
            raise ValueError(f"negative prior {priors.min()}")
        if abs(priors.sum() - 1.0) > 1e-12:
            raise ValueError(f"priors sum to {priors.sum()}, expected 1")

    @classmethod
    def uniform(cls, states) -> "DiscriminationProblem":
        states = tuple(states)
        return cls(states, np.full(len(states), 1.0 / len(states)))


def _validate_state(rho, label: str, tol: float = STATE_TOL) -> np.ndarray:
    a = as_hermitian(rho)
    tr = a.trace().real
    if abs(tr - 1.0) > tol:
        raise ValueError(f"{label} has trace {tr}, expected 1")
    if not is_psd(a, tol):
        raise ValueError(f"{label} is not positive semidefinite")
    return a


def helstrom_binary(rho1, rho2, eta1: float = 0.5) -> DiscriminationResult:
    """Optimal binary discrimination of two density matrices.

    p_error = (1 - ||eta1 rho1 - eta2 rho2||_1) / 2.  The optimal measurement
    projects onto the nonnegative eigenspace of eta1 rho1 - eta2 rho2 (that
    outcome concludes rho1).  A dual certificate K = eta2 rho2 + positive part
    is attached; its trace equals the success probability.
    """
    if not 0.0 <= eta1 <= 1.0:
        raise ValueError(f"prior must lie in [0, 1], got {eta1}")
    rho1 = _validate_state(rho1, "first state")
    rho2 = _validate_state(rho2, "second state")
    if rho1.shape != rho2.shape:
        raise ValueError("states must share one dimension")
    eta2 = 1.0 - eta1
    delta = eta1 * rho1 - eta2 * rho2
    decomp = eigendecompose(delta)
    p_success = eta2 + decomp.eigenvalues[decomp.eigenvalues > 0].sum()

    nonneg = decomp.eigenvectors[:, decomp.eigenvalues >= 0]
    plus = nonneg @ nonneg.conj().T
    povm = Povm((plus, np.eye(rho1.shape[0]) - plus))

    positive_part = decomp.eigenvectors @ (
        np.maximum(decomp.eigenvalues, 0.0)[:, None] * decomp.eigenvectors.conj().T
    )
    k = eta2 * rho2 + positive_part
    certificate = DualCertificate(
        matrix=k,
        gaps=(k - eta1 * rho1, k - eta2 * rho2),
        trace_value=float(k.trace().real),
    )
    return DiscriminationResult(
        p_error=float(1.0 - p_success),
        p_success=float(p_success),
        povm=povm,
        certificate=certificate,
    )


def qubit_binary_closed_form(alpha: float, beta1: float, beta2: float) -> float:
    """Error probability for two thermal states of a traceless qubit (gap 2*alpha).

    Closed form (1/2)(1 - (1/2) |sinh(alpha (b1 - b2))| / (cosh(alpha b1) cosh(alpha b2))),
    evaluated through the identity sinh(a-b)/(cosh a cosh b) = tanh a - tanh b,
    which stays finite for any betas including +inf (the T = 0 ground state).
    """
    if alpha <= 0:
        raise ValueError(f"field strength must be positive, got {alpha}")
    for b in (beta1, beta2):
        if math.isnan(b) or b < 0:
            raise ValueError(f"inverse temperature must be nonnegative, got {b}")
    if beta1 == beta2:
        return 0.5
    ratio = abs(math.tanh(alpha * beta1) - math.tanh(alpha * beta2))
    return 0.5 * (1.0 - 0.5 * ratio)


def qubit_multi_closed_form(alpha: float, betas) -> float:
    """Uniform-prior error probability for N thermal states of a traceless qubit.

    Only the extremal inverse temperatures matter:
    (N-1)/N - (1/2N) sinh(alpha (b_max - b_min)) / (cosh(alpha b_max) cosh(alpha b_min)),
    evaluated via the overflow-safe tanh identity.
    """
    if alpha <= 0:
        raise ValueError(f"field strength must be positive, got {alpha}")
    betas = list(betas)
    n = len(betas)
    if n < 2:
        raise ValueError("need at least two hypotheses")
    spread = math.tanh(alpha * max(betas)) - math.tanh(alpha * min(betas))
    return (n - 1) / n - spread / (2 * n)


def _shared_hamiltonian(states) -> SpectralHamiltonian:
    first = states[0]
    if not isinstance(first, EnergyDiagonalState):
        raise ValueError("commuting solver requires energy-diagonal states")
    h = first.hamiltonian
    for j, s in enumerate(states[1:], start=1):
        if not isinstance(s, EnergyDiagonalState) or not h.matches(s.hamiltonian):
            raise ValueError(
                f"state {j} does not share the Hamiltonian of state 0; "
                "use the binary route for noncommuting pairs"
            )
    return h


def _level_scores(problem: DiscriminationProblem):
    """(hamiltonian, score matrix s[j, l] = eta_j * w_{jl}) for commuting states."""
    h = _shared_hamiltonian(problem.states)
    weights = np.vstack([s.weights for s in problem.states])
    return h, problem.priors[:, None] * weights


def solve_commuting(problem: DiscriminationProblem) -> DiscriminationResult:
    """Exact minimum-error discrimination of commuting states.

    Each energy level l is assigned to the hypothesis maximizing the joint
    probability eta_j tr(rho_j Pi_l); the optimal POVM collects each
    hypothesis' eigenprojectors (a zero effect when it never wins).  The dual
    certificate K = sum_l x_l Pi_l with x_l the winning per-eigenvector score
    satisfies K >= eta_j rho_j and tr K = p_success, and every effect is
    orthogonal to its gap (complementary slackness), which proves optimality.

    Ties within relative tolerance go to the smallest hypothesis index and are
    marked; hypotheses with zero prior never receive an effect.
    """
    h, scores = _level_scores(problem)
    n, num_levels = scores.shape
    eligible = problem.priors > 0

    decisions = []
    winners = np.empty(num_levels, dtype=int)
    for l in range(num_levels):
        column = np.where(eligible, scores[:, l], -1.0)
        best = column.max()
        if best <= 0.0:
            # Level unreachable under every positive-prior hypothesis (only
            # possible with T = 0 states); any assignment scores zero.
            tied = eligible
        else:
            tied = eligible & (column >= best * (1.0 - TIE_RTOL))
        winner = int(np.flatnonzero(tied)[0])
        winners[l] = winner
        decisions.append(LevelDecision(hypothesis=winner, tie=int(tied.sum()) > 1))

    p_success = float(scores.max(axis=0).sum())

    zero = np.zeros((h.dim, h.dim), dtype=complex)
    effects = []
    for j in range(n):
        f = zero.copy()
        for l in np.flatnonzero(winners == j):
            f += h.projectors[l]
        effects.append(f)
    povm = Povm(tuple(effects))

    # Per-eigenvector winning scores x_l; tr K = sum_l x_l tr(Pi_l) = p_success.
    x = scores.max(axis=0) / h.ranks
    k = zero.copy()
    for x_l, p in zip(x, h.projectors):
        k += x_l * p
    gaps = []
    for j in range(n):
        gap = zero.copy()
        coeff = x - scores[j] / h.ranks
        for c, p in zip(coeff, h.projectors):
            gap += c * p
        gaps.append(gap)
    certificate = DualCertificate(matrix=k, gaps=tuple(gaps), trace_value=p_success)

    return DiscriminationResult(
        p_error=1.0 - p_success,
        p_success=p_success,
        povm=povm,
        certificate=certificate,
        decision_map=tuple(decisions),
    )


def ground_vs_thermal(h: SpectralHamiltonian, beta2: float) -> tuple[float, float]:
    """Equal-prior discrimination of the ground state against a thermal state.

    Returns (p_error, p_failure): the minimum-error probability
    (1/2) tr(rho_2 Pi_0), and the unambiguous-discrimination failure rate
    (1 + p_error)/2 for the strategy whose only inconclusive outcome is the
    ground energy.
    """
    state2 = thermal_state_from_beta(h, beta2)
    p_error = 0.5 * float(state2.weights[0])
    p_failure = 0.5 * (1.0 + p_error)
    return p_error, p_failure


def verify_certificate(problem: DiscriminationProblem, result: DiscriminationResult,
                       tol: float = CERTIFICATE_TOL) -> bool:
    """Check a result's dual certificate against its problem.

    True iff every gap K - eta_j rho_j is PSD within tol, the POVM effects sum
    to the identity within tol, and every slackness trace tr(F_j gap_j) is at
    most tol.
    """
    if result.certificate is None:
        raise ValueError("result carries no dual certificate")
    effects = result.povm.effects
    gaps = result.certificate.gaps
    if len(effects) != len(problem.states) or len(gaps) != len(problem.states):
        raise ValueError("result does not match the problem's hypothesis count")
    d = effects[0].shape[0]
    total = np.zeros((d, d), dtype=complex)
    for f in effects:
        total += f
    if np.abs(total - np.eye(d)).max() > tol:
        return False
    for f, gap in zip(effects, gaps):
        if not is_psd(gap, tol):
            return False
        slackness = (f @ gap).trace().real
        if abs(slackness) > tol:
            return False
    return True


def brute_force_success(problem: DiscriminationProblem, limit: int = BRUTE_FORCE_LIMIT) -> float:
    """Exact optimum by enumerating every projective decision map.

    Assigns each of the L eigenprojectors to one of the N hypotheses in all
    N^L ways and maximizes the success probability; projective maps exhaust
    the optimum for commuting states.  Rejected when N^L exceeds ``limit``.
    """
    _, scores = _level_scores(problem)
    n, num_levels = scores.shape
    size = n**num_levels
    if size > limit:
        raise ValueError(
            f"search space {n}^{num_levels} = {size} exceeds the {limit} assignment cap"
        )
    level_index = np.arange(num_levels)
    best = -math.inf
    assignments = itertools.product(range(n), repeat=num_levels)
    while True:
        chunk = np.array(list(itertools.islice(assignments, 100_000)), dtype=np.intp)
        if chunk.size == 0:
            break
        totals = scores[chunk, level_index].sum(axis=1)
        best = max(best, float(totals.max()))
    return best
