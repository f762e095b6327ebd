"""Q-information toolkit: synergy/redundancy structure of multi-qubit states."""

from .dynamics import Hamiltonian, PauliString, TimeGrid, build_hamiltonian, evolve, sweep_q_information
from .entropy import DensityMatrix, density_of, partial_trace, purity, von_neumann_entropy
from .errors import (
    ConvergenceError,
    DomainError,
    NotAStateError,
    QOInfoError,
    RegistryValidationError,
    ResourceError,
)
from .qinformation import (
    JointDistribution,
    QInfoResult,
    classical_o_information,
    q_information,
    q_information_bounds,
    q_information_reduced,
    traced_choice_spread,
)
from .states import (
    PureState,
    StateRegistryEntry,
    enumerate_binary_states,
    find_mmes,
    make_basis_state,
    make_ghz,
    make_ghz_phase,
    make_w,
    random_gaussian_state,
    registry_get,
)

__all__ = [
    "ConvergenceError",
    "DensityMatrix",
    "DomainError",
    "Hamiltonian",
    "JointDistribution",
    "NotAStateError",
    "PauliString",
    "PureState",
    "QInfoResult",
    "QOInfoError",
    "RegistryValidationError",
    "ResourceError",
    "StateRegistryEntry",
    "TimeGrid",
    "build_hamiltonian",
    "classical_o_information",
    "density_of",
    "enumerate_binary_states",
    "evolve",
    "find_mmes",
    "make_basis_state",
    "make_ghz",
    "make_ghz_phase",
    "make_w",
    "partial_trace",
    "purity",
    "q_information",
    "q_information_bounds",
    "q_information_reduced",
    "random_gaussian_state",
    "registry_get",
    "sweep_q_information",
    "traced_choice_spread",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
