import itertools
import math

import numpy as np
import pytest

from thermodiscrim import (
    DiscriminationProblem,
    Povm,
    build_lho_hamiltonian,
    build_qubit_hamiltonian,
    make_hamiltonian,
    thermal_state,
    thermal_state_from_beta,
    trace_norm,
)
from thermodiscrim.solver import (
    DiscriminationResult,
    brute_force_success,
    ground_vs_thermal,
    helstrom_binary,
    qubit_binary_closed_form,
    qubit_multi_closed_form,
    solve_commuting,
    verify_certificate,
)

from helpers import random_commuting_problem, random_density_matrix

QUBIT = build_qubit_hamiltonian(1.0, (0.0, 0.0, 1.0))


def exhaustive_success(problem: DiscriminationProblem) -> float:
    """Independent oracle: best success over every level-to-hypothesis map."""
    weights = np.vstack([s.weights for s in problem.states])
    scores = problem.priors[:, None] * weights
    n, levels = scores.shape
    best = -math.inf
    for assignment in itertools.product(range(n), repeat=levels):
        best = max(best, sum(scores[j, l] for l, j in enumerate(assignment)))
    return best


class TestHelstromBinary:
    def test_identical_states(self):
        rho = thermal_state(QUBIT, 1.0).to_matrix()
        result = helstrom_binary(rho, rho, 0.5)
        assert result.p_error == pytest.approx(0.5, abs=1e-15)

    def test_orthogonal_pure_states(self):
        result = helstrom_binary(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]), 0.5)
        assert result.p_error == pytest.approx(0.0, abs=1e-15)

    def test_thermal_pair_matches_closed_form(self):
        # oracle: the two-level closed form at beta1 = 2, beta2 = 1
        expected = 0.5 * (1 - 0.5 * abs(math.sinh(1.0 * (2.0 - 1.0)))
                          / (math.cosh(2.0) * math.cosh(1.0)))
        assert expected == pytest.approx(0.449391643969987, abs=1e-15)
        rho1 = thermal_state(QUBIT, 0.5).to_matrix()
        rho2 = thermal_state(QUBIT, 1.0).to_matrix()
        result = helstrom_binary(rho1, rho2, 0.5)
        assert result.p_error == pytest.approx(expected, abs=1e-10)
        # the trace-norm route must agree with the eigenvalue route
        direct = 0.5 * (1.0 - trace_norm(0.5 * rho1 - 0.5 * rho2))
        assert result.p_error == pytest.approx(direct, abs=1e-12)

    def test_povm_achieves_p_success(self):
        rng = np.random.default_rng(21)
        for d in (2, 3, 4):
            rho1 = random_density_matrix(rng, d)
            rho2 = random_density_matrix(rng, d)
            eta1 = float(rng.uniform(0.0, 1.0))
            result = helstrom_binary(rho1, rho2, eta1)
            achieved = eta1 * (rho1 @ result.povm.effects[0]).trace().real \
                + (1 - eta1) * (rho2 @ result.povm.effects[1]).trace().real
            assert achieved == pytest.approx(result.p_success, abs=1e-10)
            assert result.p_error + result.p_success == pytest.approx(1.0, abs=1e-12)

    def test_symmetric_under_exchange(self):
        rng = np.random.default_rng(22)
        rho1 = random_density_matrix(rng, 3)
        rho2 = random_density_matrix(rng, 3)
        a = helstrom_binary(rho1, rho2, 0.5).p_error
        b = helstrom_binary(rho2, rho1, 0.5).p_error
        assert a == pytest.approx(b, abs=1e-12)

    def test_binary_certificate_is_valid(self):
        rng = np.random.default_rng(23)
        rho1 = random_density_matrix(rng, 4)
        rho2 = random_density_matrix(rng, 4)
        eta1 = 0.3
        result = helstrom_binary(rho1, rho2, eta1)
        problem = DiscriminationProblem((rho1, rho2), np.array([eta1, 1 - eta1]))
        assert verify_certificate(problem, result, 1e-9)
        assert result.certificate.trace_value == pytest.approx(result.p_success, abs=1e-12)

    def test_rejects_non_states(self):
        with pytest.raises(ValueError, match="trace"):
            helstrom_binary(np.eye(2), np.eye(2) / 2, 0.5)
        with pytest.raises(ValueError, match="positive"):
            helstrom_binary(np.diag([1.5, -0.5]), np.eye(2) / 2, 0.5)
        with pytest.raises(ValueError, match="prior"):
            helstrom_binary(np.eye(2) / 2, np.eye(2) / 2, 1.5)


class TestQubitClosedForm:
    def test_equal_betas(self):
        assert qubit_binary_closed_form(1.0, 3.0, 3.0) == 0.5
        assert qubit_binary_closed_form(2.0, math.inf, math.inf) == 0.5

    @pytest.mark.parametrize("alpha,beta2", [(1.0, 0.5), (0.5, 2.0), (2.0, 0.0)])
    def test_ground_state_limit(self, alpha, beta2):
        expected = 1.0 / (2.0 * (1.0 + math.exp(-2.0 * alpha * beta2)))
        assert qubit_binary_closed_form(alpha, math.inf, beta2) == pytest.approx(expected, abs=1e-15)

    def test_matches_helstrom(self):
        # oracle: the trace-norm route on explicitly built states
        result = helstrom_binary(
            thermal_state_from_beta(QUBIT, 2.0).to_matrix(),
            thermal_state_from_beta(QUBIT, 1.0).to_matrix(),
            0.5,
        )
        assert qubit_binary_closed_form(1.0, 2.0, 1.0) == pytest.approx(result.p_error, abs=1e-10)

    def test_agreement_over_grid(self):
        betas = np.linspace(0.0, 10.0, 12)
        for alpha in (0.5, 1.0, 2.0, 5.0):
            h = build_qubit_hamiltonian(alpha, (0.0, 0.0, 1.0))
            for b1 in betas:
                for b2 in betas:
                    closed = qubit_binary_closed_form(alpha, b1, b2)
                    direct = helstrom_binary(
                        thermal_state_from_beta(h, b1).to_matrix(),
                        thermal_state_from_beta(h, b2).to_matrix(),
                        0.5,
                    ).p_error
                    assert abs(closed - direct) <= 1e-10

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            qubit_binary_closed_form(0.0, 1.0, 2.0)
        with pytest.raises(ValueError):
            qubit_binary_closed_form(1.0, -1.0, 2.0)


class TestSolveCommuting:
    def test_binary_consistency_with_helstrom(self):
        rng = np.random.default_rng(31)
        for i in range(20):
            problem = random_commuting_problem(rng, max_states=2, counter=i)
            result = solve_commuting(problem)
            matrix_route = helstrom_binary(
                problem.states[0].to_matrix(),
                problem.states[1].to_matrix(),
                float(problem.priors[0]),
            )
            assert result.p_error == pytest.approx(matrix_route.p_error, abs=1e-10)

    def test_three_qubit_states(self):
        problem = DiscriminationProblem.uniform(
            tuple(thermal_state_from_beta(QUBIT, b) for b in (2.0, 1.0, 0.5))
        )
        result = solve_commuting(problem)
        # oracle: exhaustive evaluation of all 3^2 projective decision maps
        expected = exhaustive_success(problem)
        assert expected == pytest.approx(0.4169850704693012, abs=1e-14)
        assert result.p_success == pytest.approx(expected, abs=1e-12)
        assert result.p_error == pytest.approx(0.5830149295306988, abs=1e-12)
        # middle state is never concluded
        assert np.abs(result.povm.effects[1]).max() == 0.0
        assert [d.hypothesis for d in result.decision_map] == [0, 2]

    def test_identical_states_guess_best_prior(self):
        for n in (2, 3, 5):
            problem = DiscriminationProblem.uniform(
                tuple(thermal_state(QUBIT, 1.0) for _ in range(n))
            )
            result = solve_commuting(problem)
            assert result.p_error == pytest.approx((n - 1) / n, abs=1e-12)
            assert all(d.tie for d in result.decision_map)
            assert all(d.hypothesis == 0 for d in result.decision_map)

    def test_zero_prior_receives_zero_effect(self):
        states = tuple(thermal_state(QUBIT, t) for t in (0.5, 1.0, 2.0))
        problem = DiscriminationProblem(states, np.array([0.5, 0.0, 0.5]))
        result = solve_commuting(problem)
        assert np.abs(result.povm.effects[1]).max() == 0.0
        assert all(d.hypothesis != 1 for d in result.decision_map)

    def test_rejects_unshared_hamiltonian(self):
        other = build_qubit_hamiltonian(1.0, (1.0, 0.0, 0.0))
        problem = DiscriminationProblem.uniform(
            (thermal_state(QUBIT, 0.5), thermal_state(other, 1.0))
        )
        with pytest.raises(ValueError, match="share"):
            solve_commuting(problem)

    def test_rejects_raw_matrices(self):
        problem = DiscriminationProblem.uniform((np.eye(2) / 2, np.eye(2) / 2))
        with pytest.raises(ValueError, match="energy-diagonal"):
            solve_commuting(problem)

    def test_oracle_equivalence_random(self):
        rng = np.random.default_rng(32)
        for i in range(80):
            problem = random_commuting_problem(rng, counter=i)
            result = solve_commuting(problem)
            assert result.p_success == pytest.approx(brute_force_success(problem), abs=1e-10)
            assert verify_certificate(problem, result, 1e-9)
            gap = abs(result.p_success - result.certificate.trace_value)
            assert gap <= 1e-9
            assert 0.0 - 1e-12 <= result.p_error <= 1.0 - problem.priors.max() + 1e-12

    def test_degenerate_levels_use_level_weights(self):
        # two copies of an energy merged into a rank-2 level: the projector
        # trace must enter the per-level weight exactly once
        d = 3
        projectors = [np.diag([float(i == j) for i in range(d)]) for j in range(d)]
        h_deg = make_hamiltonian([0.0, 0.0, 1.0], projectors)
        states = tuple(thermal_state(h_deg, t) for t in (0.4, 2.0))
        problem = DiscriminationProblem.uniform(states)
        result = solve_commuting(problem)
        assert result.p_success == pytest.approx(brute_force_success(problem), abs=1e-12)
        assert verify_certificate(problem, result, 1e-9)


class TestGroundVsThermal:
    def test_infinite_temperature_partner(self):
        # oracle: (1/2) tr(Pi_0)/d for the maximally mixed partner, then (1+p)/2
        p_err, p_fail = ground_vs_thermal(QUBIT, 0.0)
        assert p_err == pytest.approx(0.25, abs=1e-15)
        assert p_fail == pytest.approx(0.625, abs=1e-15)

    def test_coinciding_limit(self):
        p_err, _ = ground_vs_thermal(QUBIT, math.inf)
        assert p_err == pytest.approx(0.5, abs=1e-15)

    def test_unit_beta(self):
        p_err, p_fail = ground_vs_thermal(QUBIT, 1.0)
        assert p_err == pytest.approx(1.0 / (2.0 * (1.0 + math.exp(-2.0))), abs=1e-14)
        assert p_fail == 0.5 * (1.0 + p_err)

    def test_matches_helstrom_value(self):
        for beta2 in (0.3, 1.0, 4.0):
            p_err, _ = ground_vs_thermal(QUBIT, beta2)
            direct = helstrom_binary(
                thermal_state(QUBIT, 0.0).to_matrix(),
                thermal_state_from_beta(QUBIT, beta2).to_matrix(),
                0.5,
            ).p_error
            assert p_err == pytest.approx(direct, abs=1e-12)


class TestVerifyCertificate:
    def test_scaled_down_certificate_fails(self):
        rng = np.random.default_rng(41)
        problem = random_commuting_problem(rng, counter=1)
        result = solve_commuting(problem)
        bad = DiscriminationResult(
            p_error=result.p_error,
            p_success=result.p_success,
            povm=result.povm,
            certificate=type(result.certificate)(
                matrix=0.5 * result.certificate.matrix,
                gaps=tuple(0.5 * result.certificate.matrix - p * s.to_matrix()
                           for p, s in zip(problem.priors, problem.states)),
                trace_value=0.5 * result.certificate.trace_value,
            ),
            decision_map=result.decision_map,
        )
        assert not verify_certificate(problem, bad, 1e-9)

    def test_swapped_conclusions_fail_slackness(self):
        problem = DiscriminationProblem.uniform(
            tuple(thermal_state_from_beta(QUBIT, b) for b in (2.0, 1.0, 0.5))
        )
        good = solve_commuting(problem)
        swapped_effects = (good.povm.effects[2], good.povm.effects[1], good.povm.effects[0])
        bad = DiscriminationResult(
            p_error=good.p_error,
            p_success=good.p_success,
            povm=Povm(swapped_effects),
            certificate=good.certificate,
            decision_map=good.decision_map,
        )
        assert not verify_certificate(problem, bad, 1e-9)

    def test_requires_certificate(self):
        problem = DiscriminationProblem.uniform(
            (thermal_state(QUBIT, 0.5), thermal_state(QUBIT, 1.0))
        )
        result = solve_commuting(problem)
        stripped = DiscriminationResult(result.p_error, result.p_success, result.povm)
        with pytest.raises(ValueError, match="certificate"):
            verify_certificate(problem, stripped, 1e-9)


class TestBruteForce:
    def test_matches_helstrom_binary(self):
        problem = DiscriminationProblem.uniform(
            (thermal_state(QUBIT, 0.5), thermal_state(QUBIT, 1.0))
        )
        direct = helstrom_binary(
            problem.states[0].to_matrix(), problem.states[1].to_matrix(), 0.5
        )
        assert brute_force_success(problem) == pytest.approx(direct.p_success, abs=1e-12)

    def test_three_state_value(self):
        problem = DiscriminationProblem.uniform(
            tuple(thermal_state_from_beta(QUBIT, b) for b in (2.0, 1.0, 0.5))
        )
        assert brute_force_success(problem) == pytest.approx(0.4169850704693012, abs=1e-12)

    def test_four_states_four_levels(self):
        rng = np.random.default_rng(43)
        h = build_lho_hamiltonian(4, 1.0)
        states = tuple(thermal_state(h, float(t)) for t in rng.uniform(0.1, 4.0, size=4))
        problem = DiscriminationProblem.uniform(states)
        assert solve_commuting(problem).p_success == pytest.approx(
            brute_force_success(problem), abs=1e-12
        )

    def test_rejects_oversized_search(self):
        h = build_lho_hamiltonian(11, 1.0)
        states = tuple(thermal_state(h, t) for t in (0.5, 1.0, 2.0, 3.0))
        problem = DiscriminationProblem.uniform(states)
        with pytest.raises(ValueError, match="exceeds"):
            brute_force_success(problem)


class TestQubitMultiClosedForm:
    def test_reduces_to_binary(self):
        assert qubit_multi_closed_form(1.0, (2.0, 1.0)) == pytest.approx(
            qubit_binary_closed_form(1.0, 2.0, 1.0), abs=1e-15
        )

    def test_extremal_structure(self):
        rng = np.random.default_rng(44)
        for n in (3, 4, 5, 6):
            betas = np.sort(rng.uniform(0.05, 4.0, size=n))[::-1]
            problem = DiscriminationProblem.uniform(
                tuple(thermal_state_from_beta(QUBIT, float(b)) for b in betas)
            )
            result = solve_commuting(problem)
            closed = qubit_multi_closed_form(1.0, betas)
            assert result.p_error == pytest.approx(closed, abs=1e-10)
            nonzero = [j for j, f in enumerate(result.povm.effects) if np.abs(f).max() > 0]
            assert nonzero == [0, n - 1]


class TestProblemValidation:
    def test_priors_must_normalize(self):
        states = (thermal_state(QUBIT, 0.5), thermal_state(QUBIT, 1.0))
        with pytest.raises(ValueError, match="sum"):
            DiscriminationProblem(states, np.array([0.6, 0.6]))
        with pytest.raises(ValueError, match="negative"):
            DiscriminationProblem(states, np.array([1.2, -0.2]))

    def test_needs_two_states(self):
        with pytest.raises(ValueError, match="two"):
            DiscriminationProblem((thermal_state(QUBIT, 1.0),), np.array([1.0]))

    def test_povm_validation(self):
        with pytest.raises(ValueError, match="identity"):
            Povm((np.eye(2) / 2, np.eye(2) / 4))
        with pytest.raises(ValueError, match="positive"):
            Povm((np.diag([1.5, 1.0]), np.diag([-0.5, 0.0])))
