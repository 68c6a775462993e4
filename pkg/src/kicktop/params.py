"""System parameters, channel indexing, and the effective-Planck-constant rescaling.

Atomic units throughout (hbar = 1). Channels are the integer values N of the
top's angular momentum, N in [T - J, T + J]; m = T - N is the corresponding
projection quantum number of the light particle, m in [-J, J].
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ChannelRangeError, IncompatibleScaleError


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters of the two-particle kicked top.

    k        -- torsion kick strength (dimensionless)
    J        -- light-particle angular momentum magnitude (positive integer)
    T        -- total angular momentum (integer, T > J)
    N0       -- initial top channel, T - J <= N0 <= T + J
    I        -- moment of inertia of the top (action * time)
    tau_eps  -- period of the mean-energy orbit (time)
    hbar_eff -- effective Planck constant label; defaults to 1/J
    """

    k: float
    J: int
    T: int
    N0: int
    I: float
    tau_eps: float
    hbar_eff: float | None = None

    def __post_init__(self):
        if self.J < 1:
            raise ValueError(f"J must be a positive integer, got {self.J}")
        if self.T <= self.J:
            raise ValueError(f"T must exceed J, got T={self.T}, J={self.J}")
        if not (self.T - self.J <= self.N0 <= self.T + self.J):
            raise ChannelRangeError(
                f"N0={self.N0} outside channel range [{self.T - self.J}, {self.T + self.J}]"
            )
        if self.I <= 0:
            raise ValueError(f"I must be positive, got {self.I}")
        if self.tau_eps <= 0:
            raise ValueError(f"tau_eps must be positive, got {self.tau_eps}")
        if self.hbar_eff is None:
            object.__setattr__(self, "hbar_eff", 1.0 / self.J)
        elif self.hbar_eff <= 0:
            raise ValueError(f"hbar_eff must be positive, got {self.hbar_eff}")

    @property
    def n(self) -> int:
        """Number of scattering channels, 2J + 1."""
        return 2 * self.J + 1

    @property
    def channels(self) -> np.ndarray:
        """All channel labels N in ascending order, T - J .. T + J."""
        return np.arange(self.T - self.J, self.T + self.J + 1)

    def channel_index(self, N: int) -> int:
        """Array index of channel N in the ascending-N ordering."""
        return int(N) - (self.T - self.J)


@dataclass(frozen=True)
class ChannelIndex:
    """Channel label N and its projection m = T - N."""

    m: int
    N: int


def channel_of(N: int, params: SystemParams) -> ChannelIndex:
    """Map a channel label N to its projection index m = T - N."""
    if not (params.T - params.J <= N <= params.T + params.J):
        raise ChannelRangeError(
            f"N={N} outside channel range [{params.T - params.J}, {params.T + params.J}]"
        )
    return ChannelIndex(m=params.T - N, N=N)


def precession_angle(params: SystemParams, N) -> np.ndarray:
    """Classical per-period precession angle beta(N) = tau_eps * N / I."""
    return params.tau_eps * np.asarray(N, dtype=float) / params.I


def rescale(params: SystemParams, s: float) -> SystemParams:
    """Scale all actions by s at fixed classical dynamics.

    J, T, N0 and I are multiplied by s while k and tau_eps are kept, so the
    precession angle beta(N) at corresponding channels is unchanged.
    hbar_eff is divided by s.
    """
    if s <= 0:
        raise IncompatibleScaleError(f"scale factor must be positive, got {s}")
    sJ = s * params.J
    sT = s * params.T
    if abs(sJ - round(sJ)) > 1e-9 or abs(sT - round(sT)) > 1e-9:
        raise IncompatibleScaleError(
            f"scale {s} maps J={params.J}, T={params.T} to non-integers ({sJ}, {sT})"
        )
    return replace(
        params,
        J=int(round(sJ)),
        T=int(round(sT)),
        N0=int(round(s * params.N0)),
        I=s * params.I,
        hbar_eff=params.hbar_eff / s,
    )
