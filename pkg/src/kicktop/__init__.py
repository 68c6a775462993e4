"""Two-particle kicked-top co-simulator.

Quantum entanglement growth (linear entropy of the top's reduced density
matrix) computed alongside the corresponding classical ensemble dynamics
(coarse-grained mutual information), with an effective-Planck-constant
rescaling that keeps the classical map fixed.
"""

from .params import ChannelIndex, SystemParams, channel_of, precession_angle, rescale
from .classical_map import (
    inverse_period_map, kick, period_map, precess, surface_of_section,
)
from .ensemble import (
    ChannelDistribution, RingEnsemble, TransitionMatrix, bin_channel,
    estimate_transition_matrix, evolve_ensemble, init_ring, markov_evolve,
    mutual_information, mutual_information_curve, total_variation,
)
from .quantum import (
    OverlapModel, SMatrix, build_rho_cc, build_rotor_phases,
    build_torsion_smatrix, channel_probabilities, evolve, initial_state,
    linear_entropy, purity_scaling, quantum_discord, reduced_density,
)
from .semiclassics import compare_H_M, hbar_sweep, smatrix_vs_classical

__all__ = [
    "ChannelDistribution", "ChannelIndex", "OverlapModel", "RingEnsemble",
    "SMatrix", "SystemParams", "TransitionMatrix", "bin_channel",
    "build_rho_cc", "build_rotor_phases", "build_torsion_smatrix",
    "channel_of", "channel_probabilities", "compare_H_M",
    "estimate_transition_matrix", "evolve", "evolve_ensemble", "hbar_sweep",
    "init_ring", "initial_state", "inverse_period_map", "kick",
    "linear_entropy", "markov_evolve", "mutual_information",
    "mutual_information_curve", "period_map", "precess", "precession_angle",
    "purity_scaling", "quantum_discord", "reduced_density", "rescale",
    "smatrix_vs_classical", "surface_of_section", "total_variation",
]

__version__ = "0.1.0"
