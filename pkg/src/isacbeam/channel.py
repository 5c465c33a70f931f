"""Multiuser downlink channels (extended Saleh-Valenzuela) and per-user SINR."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .arraygeom import ArrayGeometry, steering_vector


@dataclass(frozen=True)
class ChannelConfig:
    """Channel generation parameters.

    ``los_energy_fraction`` is the share of total path energy carried by the
    line-of-sight path; the remaining energy is split evenly (in expectation)
    over the ``paths_per_user - 1`` non-LoS paths.
    """

    num_users: int
    los_dods_rad: tuple[float, ...]
    paths_per_user: int = 3
    los_energy_fraction: float = 0.9
    path_loss: float = 1.0
    noise_power_mw: float = 1e-3
    nlos_dod_range_rad: tuple[float, float] = (-np.pi / 2, np.pi / 2)
    rng_seed: int = 0

    def __post_init__(self):
        if self.num_users < 1:
            raise ValueError("num_users must be >= 1")
        if self.paths_per_user < 1:
            raise ValueError("paths_per_user must be >= 1")
        if not (0.0 < self.los_energy_fraction <= 1.0):
            raise ValueError("los_energy_fraction must lie in (0, 1]")
        if self.paths_per_user == 1 and self.los_energy_fraction < 1.0:
            raise ValueError("paths_per_user=1 requires los_energy_fraction=1")
        if self.noise_power_mw <= 0:
            raise ValueError("noise_power_mw must be positive")
        if self.path_loss <= 0:
            raise ValueError("path_loss must be positive")
        if len(self.los_dods_rad) != self.num_users:
            raise ValueError("los_dods_rad must provide one LoS direction per user")
        lo, hi = self.nlos_dod_range_rad
        if not (-np.pi / 2 <= lo < hi <= np.pi / 2):
            raise ValueError("nlos_dod_range_rad must be an interval inside [-pi/2, pi/2]")


@dataclass(frozen=True)
class ChannelSet:
    """K user channel vectors, stored as the columns of an (M, K) matrix."""

    matrix: np.ndarray

    @property
    def num_users(self) -> int:
        return self.matrix.shape[1]

    @property
    def num_antennas(self) -> int:
        return self.matrix.shape[0]

    def vector(self, k: int) -> np.ndarray:
        return self.matrix[:, k]


def generate_channels(
    config: ChannelConfig, geometry: ArrayGeometry, rng: np.random.Generator | None = None
) -> ChannelSet:
    """Draw h_k = sqrt(g) * sum_l beta_{l,k} b_T(0, phi_{l,k}).

    Path 1 is LoS with deterministic modulus sqrt(los_energy_fraction) and a
    uniform random phase; the remaining paths have CN(0, var) gains with
    var = (1 - los_energy_fraction)/(paths_per_user - 1) and directions drawn
    uniformly from ``nlos_dod_range_rad``. Deterministic for a given seed:
    per user, the draw order is LoS phase, then per NLoS path (gain, direction).
    """
    if rng is None:
        rng = np.random.default_rng(config.rng_seed)
    M, K, Lp = geometry.num_antennas, config.num_users, config.paths_per_user
    nlos_var = 0.0 if Lp == 1 else (1.0 - config.los_energy_fraction) / (Lp - 1)
    lo, hi = config.nlos_dod_range_rad
    H = np.zeros((M, K), dtype=complex)
    for k in range(K):
        phase = rng.uniform(0.0, 2.0 * np.pi)
        beta_los = np.sqrt(config.los_energy_fraction) * np.exp(1j * phase)
        h = beta_los * steering_vector(geometry, 0.0, config.los_dods_rad[k]).entries
        for _ in range(Lp - 1):
            beta = (rng.standard_normal() + 1j * rng.standard_normal()) * np.sqrt(nlos_var / 2.0)
            dod = rng.uniform(lo, hi)
            h = h + beta * steering_vector(geometry, 0.0, dod).entries
        H[:, k] = np.sqrt(config.path_loss) * h
    return ChannelSet(matrix=H)


def user_sinr(W: np.ndarray, channels: ChannelSet, noise_power_mw: float) -> np.ndarray:
    """Per-user SINR (linear): |h_k^H w_k|^2 / (sum_{n != k} |h_k^H w_n|^2 + sigma^2)."""
    if noise_power_mw <= 0:
        raise ValueError("noise_power_mw must be positive")
    W = np.asarray(W)
    H = channels.matrix
    if W.shape[0] != H.shape[0] or W.shape[1] != H.shape[1]:
        raise ValueError(f"W shape {W.shape} does not match channels {H.shape}")
    G = np.abs(H.conj().T @ W) ** 2  # G[k, n] = |h_k^H w_n|^2
    signal = np.diag(G)
    interference = G.sum(axis=1) - signal
    return signal / (interference + noise_power_mw)
