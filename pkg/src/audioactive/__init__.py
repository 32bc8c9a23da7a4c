"""Base-3 look-and-say dynamics.

Iterate the run-length describing step in any digit base (or in token
mode), split base-3 strings into independently evolving segments, verify
exhaustively that every essential ancient string decays into the 24 common
particles, and reproduce the growth rate and limiting fermion frequencies
from the transition matrix.
"""

from .core import (
    AudioactiveError,
    ConvergenceError,
    DigitString,
    InvalidDigitError,
    LengthBudgetError,
    Run,
    SearchBudgetError,
    SplitDomainError,
    TokenString,
    fixed_point_search,
    is_ancient,
    is_run_bounded,
    iterate,
    iterate_tokens,
    length_sequence,
    lookandsay_step,
    max_run_length,
    runs,
    step_of_runs,
    token_step,
)
from .descriptors import (
    CountDescriptor,
    FrequencyVector,
    counting_sequence,
    counting_step,
    selfdesc_sequence,
    selfdesc_step,
)
from .particles import (
    DecayRule,
    Particle,
    ParticleClass,
    decay_chart,
    derive_decay_chart,
    evolve,
    identify,
    limit_sets,
    lookup,
    registry,
    registry_json,
)
from .splitting import (
    Decomposition,
    decompose,
    is_common,
    is_flf,
    is_irreducible,
    split_points,
    split_points_conservative,
)
from .cosmology import (
    CosmologyReport,
    DecayTable,
    KValueReport,
    enumerate_essential_ancient,
    f_closed,
    f_recursive,
    iterations_to_common,
    k_value,
    verify_cosmological,
)
from .spectral import (
    GROWTH_POLYNOMIAL,
    GrowthEstimate,
    TransitionMatrix,
    characteristic_polynomial,
    dominant_eigenvalue,
    eigenvalues,
    empirical_growth,
    fermion_matrix,
    limiting_frequencies,
    matrix_from_chart,
    polynomial_division,
    primitivity_power,
)

__version__ = "0.1.0"

__all__ = [
    "AudioactiveError",
    "ConvergenceError",
    "CosmologyReport",
    "CountDescriptor",
    "DecayRule",
    "DecayTable",
    "Decomposition",
    "DigitString",
    "FrequencyVector",
    "GROWTH_POLYNOMIAL",
    "GrowthEstimate",
    "InvalidDigitError",
    "KValueReport",
    "LengthBudgetError",
    "Particle",
    "ParticleClass",
    "Run",
    "SearchBudgetError",
    "SplitDomainError",
    "TokenString",
    "TransitionMatrix",
    "characteristic_polynomial",
    "counting_sequence",
    "counting_step",
    "decay_chart",
    "decompose",
    "derive_decay_chart",
    "dominant_eigenvalue",
    "eigenvalues",
    "empirical_growth",
    "enumerate_essential_ancient",
    "evolve",
    "f_closed",
    "f_recursive",
    "fermion_matrix",
    "fixed_point_search",
    "identify",
    "is_ancient",
    "is_common",
    "is_flf",
    "is_irreducible",
    "is_run_bounded",
    "iterate",
    "iterate_tokens",
    "iterations_to_common",
    "k_value",
    "length_sequence",
    "limit_sets",
    "limiting_frequencies",
    "lookandsay_step",
    "lookup",
    "matrix_from_chart",
    "max_run_length",
    "polynomial_division",
    "primitivity_power",
    "registry",
    "registry_json",
    "runs",
    "selfdesc_sequence",
    "selfdesc_step",
    "split_points",
    "split_points_conservative",
    "step_of_runs",
    "token_step",
    "verify_cosmological",
]
