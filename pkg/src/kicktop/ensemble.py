"""Classical ensemble machinery: ring initialization, channel binning,
Monte-Carlo transition matrices, direct ensemble evolution, the Markov
recursion, and the linearized mutual information.

Channel distributions are length-n vectors indexed by ascending N
(N = T - J .. T + J). The slice of channel N on the sphere is the band
u_z in [(m - 1/2)/J, (m + 1/2)/J) with m = T - N.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classical_map import kick, period_map
from .errors import ChannelRangeError, DegenerateSystemError
from .params import SystemParams


@dataclass(frozen=True)
class RingEnsemble:
    """Weighted sample cloud representing one channel ring on the sphere."""

    samples: np.ndarray          # (m, 3) unit vectors
    weights: np.ndarray          # (m,) non-negative, sums to 1
    rng_seed: object             # int or np.random.SeedSequence
    tau_factors: np.ndarray = None  # (m,) per-sample tau_eps multipliers

    def __post_init__(self):
        if self.tau_factors is None:
            object.__setattr__(self, "tau_factors", np.ones(len(self.weights)))


def init_ring(N0: int, samples: int, params: SystemParams, seed,
              energy_jitter: float = 0.0) -> RingEnsemble:
    """Uniform ring ensemble on the slice of channel N0.

    Azimuth uniform in [0, 2pi); u_z uniform in the N0 slice, clipped to
    [-1, 1] (the half-width overhang at the edge channels is clipped).
    Weights are uniform. `energy_jitter` > 0 draws a Gaussian relative
    perturbation of each sample's orbital period.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if not (params.T - params.J <= N0 <= params.T + params.J):
        raise ChannelRangeError(
            f"N0={N0} outside channel range [{params.T - params.J}, {params.T + params.J}]"
        )
    m0 = params.T - N0
    lo = max((m0 - 0.5) / params.J, -1.0)
    hi = min((m0 + 0.5) / params.J, 1.0)
    if not lo < hi:
        raise ChannelRangeError(f"slice for N0={N0} is empty after clipping")
    rng = np.random.default_rng(seed)
    uz = rng.uniform(lo, hi, samples)
    phi = rng.uniform(0.0, 2.0 * np.pi, samples)
    r = np.sqrt(np.clip(1.0 - uz * uz, 0.0, None))
    pts = np.column_stack([r * np.cos(phi), r * np.sin(phi), uz])
    weights = np.full(samples, 1.0 / samples)
    if energy_jitter > 0.0:
        tau_factors = 1.0 + energy_jitter * rng.standard_normal(samples)
    else:
        tau_factors = np.ones(samples)
    return RingEnsemble(samples=pts, weights=weights, rng_seed=seed,
                        tau_factors=tau_factors)


def bin_channel(u, params: SystemParams):
    """Channel N whose slice contains u_z: N = T - round(J * u_z).

    Rounding uses the half-open convention m = floor(J*u_z + 1/2), clamped
    to [-J, J]. Scalar in, scalar out; array in, array out.
    """
    u = np.asarray(u, dtype=float)
    m = np.floor(params.J * u[..., 2] + 0.5)
    m = np.clip(m, -params.J, params.J).astype(int)
    N = params.T - m
    if N.ndim == 0:
        return int(N)
    return N


@dataclass(frozen=True)
class ChannelDistribution:
    """Probability vector over the n channels, ascending N."""

    p: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        object.__setattr__(self, "p", p)
        if np.any(p < -1e-12):
            raise ValueError("negative probability entry")
        if abs(p.sum() - 1.0) > 1e-10:
            raise ValueError(f"distribution sums to {p.sum()}, not 1")


def _bin_counts(u, weights, params: SystemParams) -> np.ndarray:
    idx = params.J - np.clip(
        np.floor(params.J * u[..., 2] + 0.5), -params.J, params.J
    ).astype(int)
    return np.bincount(idx, weights=weights, minlength=params.n)


def distribution_of(u, weights, params: SystemParams) -> np.ndarray:
    """Weighted channel distribution (ascending N) of a sample cloud."""
    counts = _bin_counts(np.asarray(u, dtype=float), weights, params)
    return counts / counts.sum()


@dataclass(frozen=True)
class TransitionMatrix:
    """Column-stochastic classical kick transition matrix.

    P[i, j] is the probability of the kick moving the top from channel
    N'_j to channel N_i (both indexed by ascending N).
    """

    P: np.ndarray
    sample_count: int


def estimate_transition_matrix(params: SystemParams, samples_per_ring: int,
                               seed: int) -> TransitionMatrix:
    """Monte-Carlo estimate of the per-kick channel transition matrix.

    Only the torsion kick is applied: the precession is a z-rotation and
    cannot change the bin. Each source ring gets its own sub-seed derived
    from `seed`, so the result is deterministic and independent of any
    evaluation order. Columns are renormalized to sum to 1 exactly.
    """
    n = params.n
    P = np.empty((n, n))
    children = np.random.SeedSequence(seed).spawn(n)
    for j, N_src in enumerate(params.channels):
        ring = init_ring(int(N_src), samples_per_ring, params, children[j])
        kicked = kick(ring.samples, params.k)
        counts = _bin_counts(kicked, None, params)
        P[:, j] = counts / counts.sum()
    return TransitionMatrix(P=P, sample_count=samples_per_ring)


def evolve_ensemble(ring: RingEnsemble, q: int, params: SystemParams) -> np.ndarray:
    """Direct ensemble evolution: iterate the period map on every sample.

    Returns a (q, n) array; row q-1 is the weighted channel distribution
    after kick q. Binning after the full period equals binning right after
    the kick because the precession preserves u_z.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    u = ring.samples.copy()
    dists = np.empty((q, params.n))
    total = ring.weights.sum()
    for step in range(q):
        u = period_map(u, params, ring.tau_factors)
        dists[step] = _bin_counts(u, ring.weights, params) / total
    return dists


def markov_evolve(p0, P, q: int) -> np.ndarray:
    """Markov recursion p(q) = P @ p(q-1), q times. Returns a (q, n) array."""
    p0 = np.asarray(p0, dtype=float)
    P = P.P if isinstance(P, TransitionMatrix) else np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1] or P.shape[0] != p0.shape[0]:
        raise ValueError(
            f"shape mismatch: P is {P.shape}, p0 has length {p0.shape[0]}"
        )
    out = np.empty((q, p0.shape[0]))
    p = p0
    for step in range(q):
        p = P @ p
        out[step] = p
    return out


def mutual_information(p) -> float:
    """Linearized mutual information M = n/(n-1) * (1 - sum p^2)."""
    p = np.asarray(p, dtype=float)
    n = p.shape[-1]
    if n < 2:
        raise DegenerateSystemError("mutual information needs at least 2 channels")
    return float(n / (n - 1) * (1.0 - np.sum(p * p)))


def mutual_information_curve(dists) -> np.ndarray:
    """mutual_information applied to each row of a (q, n) array."""
    dists = np.asarray(dists, dtype=float)
    n = dists.shape[-1]
    if n < 2:
        raise DegenerateSystemError("mutual information needs at least 2 channels")
    return n / (n - 1) * (1.0 - np.sum(dists * dists, axis=-1))


def total_variation(p, q) -> float:
    """Total variation distance, half the L1 distance."""
    return float(0.5 * np.abs(np.asarray(p) - np.asarray(q)).sum())
