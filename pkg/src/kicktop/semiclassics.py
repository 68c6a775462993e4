"""Quantitative quantum-classical comparison harness.

Three studies: the kick amplitude law (|S|^2 columns against Monte-Carlo
classical transition probabilities), the entanglement-entropy H(t) against
the classical mutual information M(t), and the effective-Planck-constant
sweep with the purity scaling law.
"""

from __future__ import annotations

import numpy as np

from . import ensemble, quantum
from .params import SystemParams, rescale


def smatrix_vs_classical(params: SystemParams, samples_per_ring: int, seed: int,
                         edge_cutoff: float = 0.8) -> dict:
    """Per-column total-variation distance between |S|^2 and the classical
    kick transition matrix.

    Columns with |m'| > edge_cutoff * J are flagged as edge channels
    (caustic-dominated) and excluded from the reported interior maximum.
    """
    S = quantum.build_torsion_smatrix(params)
    S2 = np.abs(S.S) ** 2
    Pcl = ensemble.estimate_transition_matrix(params, samples_per_ring, seed)
    tv = 0.5 * np.abs(S2 - Pcl.P).sum(axis=0)
    m_src = params.T - params.channels
    interior = np.abs(m_src) <= edge_cutoff * params.J
    return {
        "channels": params.channels,
        "m_src": m_src,
        "tv": tv,
        "interior": interior,
        "max_interior_tv": float(tv[interior].max()),
        "S2": S2,
        "Pcl": Pcl.P,
        "samples_per_ring": samples_per_ring,
    }


def quantum_H_curve(params: SystemParams, q_max: int,
                    overlap: quantum.OverlapModel | None = None) -> dict:
    """H(q) and p_N(q) for the canonical initial state |N0>."""
    if overlap is None:
        overlap = quantum.OverlapModel()
    S = quantum.build_torsion_smatrix(params)
    states = quantum.evolve(quantum.initial_state(params), q_max, params, S)
    p = quantum.channel_probabilities(states)
    H = np.array([
        quantum.linear_entropy(quantum.reduced_density(c, overlap, params), params.n)
        for c in states
    ])
    return {"q": np.arange(1, q_max + 1), "H": H, "p": p}


def classical_M_curve(params: SystemParams, q_max: int, ensemble_size: int,
                      seed: int, energy_jitter: float = 0.0) -> dict:
    """M(q) and p^cl_N(q) from direct ensemble evolution of the N0 ring."""
    ring = ensemble.init_ring(params.N0, ensemble_size, params, seed,
                              energy_jitter=energy_jitter)
    dists = ensemble.evolve_ensemble(ring, q_max, params)
    M = ensemble.mutual_information_curve(dists)
    return {"q": np.arange(1, q_max + 1), "M": M, "p": dists}


def compare_H_M(params: SystemParams, q_max: int, ensemble_size: int, seed: int,
                overlap: quantum.OverlapModel | None = None,
                energy_jitter: float = 0.0) -> dict:
    """Paired H(q) / M(q) curves and their sup-norm deviation.

    Both sides share the same parameter set, so the scaling-consistent
    geometry (T, J, I, tau_eps) and N0 agree by construction.
    """
    qm = quantum_H_curve(params, q_max, overlap)
    cl = classical_M_curve(params, q_max, ensemble_size, seed, energy_jitter)
    dev = np.abs(qm["H"] - cl["M"])
    return {
        "q": qm["q"],
        "H": qm["H"],
        "M": cl["M"],
        "dev": dev,
        "sup_dev": float(dev.max()),
        "p_quantum": qm["p"],
        "p_classical": cl["p"],
    }


def hbar_sweep(base_params: SystemParams, scales, q_max: int, seed: int = 0) -> dict:
    """Quantum H-curves for a family of rescaled parameter sets, plus the
    purity-scaling prediction between consecutive members.

    Scales are sorted by increasing J (decreasing hbar_eff). For each
    consecutive pair, the lower-resolution curve is mapped with the purity
    scaling law and compared to the computed higher-resolution curve; the
    relative residual on the purity 1 - H is reported per kick.
    """
    runs = []
    for s in scales:
        p = rescale(base_params, s)
        curve = quantum_H_curve(p, q_max)
        runs.append({"scale": s, "params": p, "q": curve["q"], "H": curve["H"]})
    runs.sort(key=lambda r: r["params"].J)
    pairs = []
    for lo, hi in zip(runs, runs[1:]):
        H_pred = quantum.purity_scaling(lo["H"], lo["params"].hbar_eff,
                                        hi["params"].hbar_eff)
        purity = 1.0 - hi["H"]
        with np.errstate(divide="ignore", invalid="ignore"):
            residual = np.abs((1.0 - H_pred) - purity) / np.where(purity > 0, purity, np.nan)
        pairs.append({
            "J_from": lo["params"].J,
            "J_to": hi["params"].J,
            "H_pred": H_pred,
            "residual": residual,
        })
    return {"runs": runs, "pairs": pairs}
