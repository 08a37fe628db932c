"""Adiabatic excitation transfer between two finite SSH chains via a giant atom.

Single-excitation exact diagonalization, the five-state edge reduction
with its dark state, slow-sweep Schroedinger dynamics, and quenched
disorder ensembles, plus named experiments with CSV/SVG output.
"""

__version__ = "0.1.0"

from .model import (BasisIndex, ChainParams, CouplingScenario,
                    DisorderRealization, Phase, Sublattice, atom_ket,
                    build_hamiltonian, hopping_amplitudes,
                    phase_classification)
from .spectral import (DarkState, EdgeStatePair, EigenSystem, FiveStateModel,
                       adiabaticity_parameter, analytic_edge_states,
                       dark_state, edge_basis, effective_couplings,
                       eigendecompose, embed_dark_state, five_state_model,
                       hybridization_energy, isolated_chain_hamiltonian,
                       mixing_angles, zero_mode)
from .dynamics import (SweepSchedule, Trajectory, end_site_target, fidelity,
                       propagate, propagate_reduced, standard_target,
                       transfer_end_sites)
from .disorder import (DisorderSpec, EnsembleStats, ensemble_fidelity,
                       sample_realization)

__all__ = [
    "BasisIndex", "ChainParams", "CouplingScenario", "DarkState",
    "DisorderRealization", "DisorderSpec", "EdgeStatePair", "EigenSystem",
    "EnsembleStats", "FiveStateModel", "Phase", "Sublattice",
    "SweepSchedule", "Trajectory", "adiabaticity_parameter",
    "analytic_edge_states", "atom_ket", "build_hamiltonian", "dark_state",
    "edge_basis", "effective_couplings", "eigendecompose",
    "embed_dark_state", "end_site_target", "ensemble_fidelity", "fidelity",
    "five_state_model", "hopping_amplitudes", "hybridization_energy",
    "isolated_chain_hamiltonian", "mixing_angles", "phase_classification",
    "propagate", "propagate_reduced", "sample_realization",
    "standard_target", "transfer_end_sites", "zero_mode",
]
