"""Single-excitation dynamics and entanglement in 1D coupled-cavity arrays."""

from .dynamics import (
    AnalyticPropagator,
    DenseOraclePropagator,
    StrongCouplingPropagator,
    TimeGrid,
    WeakCouplingPropagator,
    build_polariton_hamiltonian,
    evolve_series,
    make_propagator,
    strong_coupling_amplitudes,
    weak_coupling_amplitudes,
)
from .entanglement import (
    atom_field_entropy,
    concurrence_closed_form,
    concurrence_map,
    concurrence_wootters_oracle,
    reduce_to_pair,
    running_max_map,
)
from .experiments import ExperimentSpec, run_fig2, run_fig3, run_fig4, run_sweep
from .model import ModelParams, build_hamiltonian, initial_atomic_excitation, norm
from .spectral import ModeTable, dressed_spectrum, eigenstate_vector, free_field_modes, mode_table

__all__ = [
    "AnalyticPropagator",
    "DenseOraclePropagator",
    "ExperimentSpec",
    "ModeTable",
    "ModelParams",
    "StrongCouplingPropagator",
    "TimeGrid",
    "WeakCouplingPropagator",
    "atom_field_entropy",
    "build_hamiltonian",
    "build_polariton_hamiltonian",
    "concurrence_closed_form",
    "concurrence_map",
    "concurrence_wootters_oracle",
    "dressed_spectrum",
    "eigenstate_vector",
    "evolve_series",
    "free_field_modes",
    "initial_atomic_excitation",
    "make_propagator",
    "mode_table",
    "norm",
    "reduce_to_pair",
    "run_fig2",
    "run_fig3",
    "run_fig4",
    "run_sweep",
    "running_max_map",
    "strong_coupling_amplitudes",
    "weak_coupling_amplitudes",
]

__version__ = "0.1.0"
