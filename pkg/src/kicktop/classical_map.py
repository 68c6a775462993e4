"""Classical kicked-sphere map for the unit vector u = J/|J|.

One stroboscopic period: torsion kick (rotation about the lab x axis by
phi = k * u_x) followed by precession (rotation about the lab z axis by
beta = tau_eps * N / I with N = T - J * u_z). All functions accept a single
3-vector or an (..., 3) array and are vectorized over leading axes.
"""

from __future__ import annotations

import numpy as np

from .params import SystemParams


def kick(u, k: float) -> np.ndarray:
    """Rotate u about x-hat by the torsion angle phi = k * u_x.

    Leaves u_x invariant exactly; an isometry on the sphere.
    """
    u = np.asarray(u, dtype=float)
    phi = k * u[..., 0]
    c, s = np.cos(phi), np.sin(phi)
    out = np.empty_like(u)
    out[..., 0] = u[..., 0]
    out[..., 1] = c * u[..., 1] - s * u[..., 2]
    out[..., 2] = s * u[..., 1] + c * u[..., 2]
    return out


def precess(u, params: SystemParams, tau_factor=1.0) -> np.ndarray:
    """Rotate u about z-hat by beta = tau_eps * N / I, N = T - J * u_z.

    Leaves u_z invariant exactly. `tau_factor` scales tau_eps per point
    (used for the optional per-sample energy jitter).
    """
    u = np.asarray(u, dtype=float)
    N = params.T - params.J * u[..., 2]
    beta = np.asarray(tau_factor) * params.tau_eps * N / params.I
    c, s = np.cos(beta), np.sin(beta)
    out = np.empty_like(u)
    out[..., 0] = c * u[..., 0] - s * u[..., 1]
    out[..., 1] = s * u[..., 0] + c * u[..., 1]
    out[..., 2] = u[..., 2]
    return out


def period_map(u, params: SystemParams, tau_factor=1.0) -> np.ndarray:
    """One stroboscopic period: kick, then precession with the post-kick N."""
    return precess(kick(u, params.k), params, tau_factor)


def inverse_period_map(v, params: SystemParams, tau_factor=1.0) -> np.ndarray:
    """Inverse of period_map.

    The precession angle depends only on v_z (unchanged by the z-undo) and
    the kick angle only on u_x (unchanged by the x-undo), so both undo
    angles can be read off the current point.
    """
    v = np.asarray(v, dtype=float)
    N = params.T - params.J * v[..., 2]
    beta = np.asarray(tau_factor) * params.tau_eps * N / params.I
    c, s = np.cos(-beta), np.sin(-beta)
    w = np.empty_like(v)
    w[..., 0] = c * v[..., 0] - s * v[..., 1]
    w[..., 1] = s * v[..., 0] + c * v[..., 1]
    w[..., 2] = v[..., 2]
    return kick(w, -params.k)


def surface_of_section(seeds, q_max: int, params: SystemParams) -> np.ndarray:
    """Stroboscopic orbits for a set of seed points.

    Returns an (n_seeds * q_max, 4) array with columns (q, ux, uy, uz):
    for each seed, the point after each of kicks q = 1 .. q_max, recorded
    at kick times. Empty seed list gives an empty (0, 4) array.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got {q_max}")
    seeds = np.asarray(seeds, dtype=float).reshape(-1, 3)
    if seeds.shape[0] == 0:
        return np.empty((0, 4))
    records = np.empty((seeds.shape[0], q_max, 4))
    u = seeds.copy()
    for q in range(1, q_max + 1):
        u = period_map(u, params)
        records[:, q - 1, 0] = q
        records[:, q - 1, 1:] = u
    return records.reshape(-1, 4)
