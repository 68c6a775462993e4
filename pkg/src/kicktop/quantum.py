"""Exact quantum Floquet evolution on the n channels.

One stroboscopic period applies the rotor phases R_N = exp(-i tau_eps E_N),
E_N = N(N+1)/(2I), followed by the torsion S-matrix built from the
eigenphases delta(m') = k m'^2 / (2J) on the spin-J x-operator spectrum.
The channel basis |N> is the J_z eigenbasis with m = T - N, stored in
ascending-N order (descending m).
"""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSystemError, NumericalError
from .params import SystemParams


def jx_matrix(J: int) -> np.ndarray:
    """Spin-J x-component operator in the m-basis, ordered by descending m
    (ascending N). Real symmetric tridiagonal."""
    n = 2 * J + 1
    m = J - np.arange(n)          # m_i for row i
    off = 0.5 * np.sqrt(J * (J + 1.0) - m[:-1] * (m[:-1] - 1.0))
    Jx = np.zeros((n, n))
    i = np.arange(n - 1)
    Jx[i, i + 1] = off
    Jx[i + 1, i] = off
    return Jx


@functools.lru_cache(maxsize=8)
def _torsion_eigensystem(J: int):
    """Eigenvalues (exactly -J..J) and eigenvectors of the x-operator."""
    try:
        w, V = np.linalg.eigh(jx_matrix(J))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"x-operator eigendecomposition failed for J={J}: {exc}")
    mprime = np.arange(-J, J + 1)
    err = np.max(np.abs(w - mprime))
    if err > 1e-8:
        raise NumericalError(
            f"x-operator spectrum deviates from integers by {err:.3e} at J={J}"
        )
    return mprime, V


@dataclass(frozen=True)
class SMatrix:
    """Unitary symmetric torsion S-matrix with its kick strength."""

    S: np.ndarray
    k: float


def build_torsion_smatrix(params: SystemParams) -> SMatrix:
    """S = V diag(exp(i k m'^2 / 2J)) V^T with V the x-operator eigenbasis.

    V is real orthogonal, so S is unitary and symmetric by construction;
    |S|^2 is doubly stochastic.
    """
    mprime, V = _torsion_eigensystem(params.J)
    phases = np.exp(1j * params.k * mprime.astype(float) ** 2 / (2.0 * params.J))
    S = (V * phases) @ V.T
    return SMatrix(S=S, k=params.k)


def rotor_phases(N, tau_eps: float, I: float) -> np.ndarray:
    """Free-rotor phase factors exp(-i tau_eps N(N+1) / 2I)."""
    N = np.asarray(N, dtype=float)
    return np.exp(-1j * tau_eps * N * (N + 1.0) / (2.0 * I))


def build_rotor_phases(params: SystemParams) -> np.ndarray:
    """Rotor phases for all channels, ascending N."""
    return rotor_phases(params.channels, params.tau_eps, params.I)


def initial_state(params: SystemParams) -> np.ndarray:
    """Delta amplitude on the initial channel N0."""
    c = np.zeros(params.n, dtype=complex)
    c[params.channel_index(params.N0)] = 1.0
    return c


def evolve(c0, q: int, params: SystemParams, S: SMatrix) -> np.ndarray:
    """Stroboscopic evolution c(q) = S R c(q-1), one row per kick.

    Returns a (q, n) complex array of amplitudes at kick times.
    """
    c0 = np.asarray(c0, dtype=complex)
    if S.S.shape[0] != c0.shape[0]:
        raise ValueError(
            f"shape mismatch: S is {S.S.shape}, state has length {c0.shape[0]}"
        )
    R = build_rotor_phases(params)
    states = np.empty((q, c0.shape[0]), dtype=complex)
    c = c0
    for step in range(q):
        c = S.S @ (R * c)
        states[step] = c
    return states


def channel_probabilities(c) -> np.ndarray:
    """p_N = |c_N|^2."""
    c = np.asarray(c)
    return np.abs(c) ** 2


@dataclass(frozen=True)
class OverlapModel:
    """Channel-wavepacket overlap model for the partial trace.

    mode "orthogonal": wavepackets on different channels are orthogonal,
    giving a diagonal reduced matrix. mode "gaussian": Gaussian energy
    wavepackets of width sigma_eps, giving the overlap kernel
    O_NN' = exp(-(E_N - E_N')^2 / (8 sigma_eps^2)).
    """

    mode: str = "orthogonal"
    sigma_eps: float = 1.0

    def __post_init__(self):
        if self.mode not in ("orthogonal", "gaussian"):
            raise ValueError(f"unknown overlap mode {self.mode!r}")
        if self.mode == "gaussian" and not self.sigma_eps > 0:
            raise ValueError(f"sigma_eps must be positive, got {self.sigma_eps}")


def overlap_kernel(overlap: OverlapModel, params: SystemParams) -> np.ndarray:
    """Overlap matrix O_NN' (unit diagonal, positive semidefinite)."""
    if overlap.mode == "orthogonal":
        return np.eye(params.n)
    N = params.channels.astype(float)
    E = N * (N + 1.0) / (2.0 * params.I)
    dE = E[:, None] - E[None, :]
    return np.exp(-dE * dE / (8.0 * overlap.sigma_eps**2))


def reduced_density(c, overlap: OverlapModel, params: SystemParams) -> np.ndarray:
    """Top-side reduced density matrix of the entangled channel state.

    Orthogonal mode gives diag(|c_N|^2); Gaussian mode keeps coherences
    damped by the overlap kernel. Hermitian, trace 1, PSD.
    """
    c = np.asarray(c, dtype=complex)
    if overlap.mode == "orthogonal":
        return np.diag(np.abs(c) ** 2).astype(complex)
    rho = np.outer(c, c.conj()) * overlap_kernel(overlap, params)
    # Schur product of PSD matrices is PSD; guard against a broken kernel.
    lo = np.linalg.eigvalsh(rho).min()
    if lo < -1e-10:
        raise NumericalError(f"reduced density has eigenvalue {lo:.3e} < 0")
    return rho


def linear_entropy(rho, n: int) -> float:
    """Linearized entropy H = n/(n-1) * (1 - Tr rho^2), in [0, 1]."""
    if n < 2:
        raise DegenerateSystemError("linear entropy needs at least 2 channels")
    rho = np.asarray(rho)
    purity = float(np.sum(np.abs(rho) ** 2))
    return n / (n - 1) * (1.0 - purity)


def purity_scaling(H, hbar_from: float, hbar_to: float):
    """Map the entropy across effective Planck constants:
    H' = 1 - (hbar_to / hbar_from) * (1 - H).

    Valid in the saturated (locally uniform) regime. Values outside [0, 1]
    are clamped with a warning. Accepts scalars or arrays.
    """
    if hbar_from <= 0 or hbar_to <= 0:
        raise ValueError("hbar values must be positive")
    H = np.asarray(H, dtype=float)
    Hp = 1.0 - (hbar_to / hbar_from) * (1.0 - H)
    if np.any(Hp < -1e-12) or np.any(Hp > 1.0 + 1e-12):
        warnings.warn("purity scaling left [0, 1]; result clamped", stacklevel=2)
    Hp = np.clip(Hp, 0.0, 1.0)
    return float(Hp) if Hp.ndim == 0 else Hp


def quantum_discord(rho, n: int) -> float:
    """Discord of the pure bipartite state behind rho.

    In this model the discord coincides with the linear entropy of the
    reduced state; this is not a general discord algorithm.
    """
    return linear_entropy(rho, n)


def build_rho_cc(p_cl) -> np.ndarray:
    """Top-side reduced matrix of the classically-correlated mixture:
    diag of the classical channel probabilities."""
    p_cl = np.asarray(p_cl, dtype=float)
    return np.diag(p_cl).astype(complex)
