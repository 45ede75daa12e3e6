"""Minimum-error discrimination of quantum thermal states.

Optimal error probabilities, measurements, and dual optimality certificates
for distinguishing Gibbs states; limiting-distance critical temperatures;
temperature-threshold decisions; and the fixed-temperature case of qubit
Hamiltonians pointing along different field directions.
"""

__version__ = "0.1.0"

from .hermitian import (
    EigenDecomposition,
    eigendecompose,
    is_psd,
    trace_norm,
)
from .thermal import (
    EnergyDiagonalState,
    SpectralHamiltonian,
    ThermalState,
    build_lho_hamiltonian,
    build_qubit_hamiltonian,
    hamiltonian_from_dict,
    inverse_temperature,
    load_hamiltonian,
    make_hamiltonian,
    temperature_of_beta,
    thermal_state,
    thermal_state_from_beta,
)
from .solver import (
    DiscriminationProblem,
    DiscriminationResult,
    DualCertificate,
    LevelDecision,
    Povm,
    brute_force_success,
    ground_vs_thermal,
    helstrom_binary,
    qubit_binary_closed_form,
    qubit_multi_closed_form,
    solve_commuting,
    verify_certificate,
)
from .critical import (
    PartnerRegime,
    classify_best_partner,
    critical_temperature,
    q_infinity,
    q_zero,
)
from .threshold import (
    SIDE_LABELS,
    ThresholdProblem,
    ThresholdReduction,
    decide,
    qubit_effective_temperatures,
    reduce_to_binary,
)
from .bloch import (
    FieldHypothesis,
    bloch_of_thermal,
    density_matrix_of_bloch,
    discriminate_fields,
    measurement_projectors,
    noncommuting_error,
    optimal_measurement_direction,
)

__all__ = [
    "__version__",
    "EigenDecomposition",
    "eigendecompose",
    "is_psd",
    "trace_norm",
    "EnergyDiagonalState",
    "SpectralHamiltonian",
    "ThermalState",
    "build_lho_hamiltonian",
    "build_qubit_hamiltonian",
    "hamiltonian_from_dict",
    "inverse_temperature",
    "load_hamiltonian",
    "make_hamiltonian",
    "temperature_of_beta",
    "thermal_state",
    "thermal_state_from_beta",
    "DiscriminationProblem",
    "DiscriminationResult",
    "DualCertificate",
    "LevelDecision",
    "Povm",
    "brute_force_success",
    "ground_vs_thermal",
    "helstrom_binary",
    "qubit_binary_closed_form",
    "qubit_multi_closed_form",
    "solve_commuting",
    "verify_certificate",
    "PartnerRegime",
    "classify_best_partner",
    "critical_temperature",
    "q_infinity",
    "q_zero",
    "SIDE_LABELS",
    "ThresholdProblem",
    "ThresholdReduction",
    "decide",
    "qubit_effective_temperatures",
    "reduce_to_binary",
    "FieldHypothesis",
    "bloch_of_thermal",
    "density_matrix_of_bloch",
    "discriminate_fields",
    "measurement_projectors",
    "noncommuting_error",
    "optimal_measurement_direction",
]
