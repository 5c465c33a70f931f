"""Probing waveforms and the discretized range-Doppler correlation matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arraygeom import SPEED_OF_LIGHT


def zadoff_chu(root: int, length: int) -> np.ndarray:
    """Zadoff-Chu sequence: exp(-j*pi*u*n^2/N) for even N, exp(-j*pi*u*n*(n+1)/N) for odd N.

    Requires gcd(root, length) = 1, which yields unit modulus and ideal periodic
    autocorrelation.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if root < 1:
        raise ValueError("root must be >= 1")
    if math.gcd(root, length) != 1:
        raise ValueError(f"invalid root: gcd({root}, {length}) != 1")
    n = np.arange(length, dtype=float)
    if length % 2 == 0:
        phase = -np.pi * root * n * n / length
    else:
        phase = -np.pi * root * n * (n + 1) / length
    return np.exp(1j * phase)


def periodic_autocorrelation(seq: np.ndarray) -> np.ndarray:
    """Cyclic autocorrelation r[l] = sum_n s[n] s*[(n-l) mod N] for l = 0..N-1."""
    seq = np.asarray(seq)
    spec = np.fft.fft(seq)
    return np.fft.ifft(np.abs(spec) ** 2)


@dataclass(frozen=True)
class WaveformSet:
    """K baseband probing sequences of common length N, sampled at ``sample_rate_hz``."""

    sequences: np.ndarray  # (K, N) complex
    sample_rate_hz: float

    def __post_init__(self):
        seq = np.asarray(self.sequences, dtype=complex)
        if seq.ndim != 2:
            raise ValueError("sequences must be a (K, N) array")
        if self.sample_rate_hz <= 0:
            raise ValueError("sample_rate_hz must be positive")
        object.__setattr__(self, "sequences", seq)

    @property
    def num_users(self) -> int:
        return self.sequences.shape[0]

    @property
    def length(self) -> int:
        return self.sequences.shape[1]

    @property
    def symbol_energies(self) -> np.ndarray:
        return np.sum(np.abs(self.sequences) ** 2, axis=1)

    @property
    def duration_s(self) -> float:
        return self.length / self.sample_rate_hz

    @classmethod
    def from_zadoff_chu(
        cls, roots: tuple[int, ...], length: int, sample_rate_hz: float
    ) -> "WaveformSet":
        if len(set(roots)) != len(roots):
            raise ValueError("Zadoff-Chu roots must be pairwise distinct")
        seqs = np.vstack([zadoff_chu(u, length) for u in roots])
        return cls(sequences=seqs, sample_rate_hz=sample_rate_hz)

    @classmethod
    def from_csv_files(cls, paths: list[str], sample_rate_hz: float) -> "WaveformSet":
        """Load one sequence per user from two-column (real, imag) CSV files."""
        seqs = []
        for path in paths:
            data = np.loadtxt(path, delimiter=",", dtype=float, ndmin=2)
            if data.shape[1] != 2:
                raise ValueError(f"{path}: expected two columns (real, imag), got {data.shape[1]}")
            seqs.append(data[:, 0] + 1j * data[:, 1])
        lengths = {len(s) for s in seqs}
        if len(lengths) != 1:
            raise ValueError(f"waveform CSVs have inconsistent lengths: {sorted(lengths)}")
        return cls(sequences=np.vstack(seqs), sample_rate_hz=sample_rate_hz)


@dataclass(frozen=True)
class RangeDopplerGrid:
    """Discrete lag/Doppler grid for the correlation matrix.

    Lag l maps to a range offset l * c / (2 * sample_rate_hz). The lag set is
    symmetric about zero and includes zero; the default Doppler set is {0}.
    """

    range_lags: np.ndarray  # (L_r,) int, ascending
    doppler_bins_hz: np.ndarray  # (L_d,) float
    sample_rate_hz: float

    def __post_init__(self):
        lags = np.asarray(self.range_lags, dtype=int)
        dops = np.atleast_1d(np.asarray(self.doppler_bins_hz, dtype=float))
        if self.sample_rate_hz <= 0:
            raise ValueError("sample_rate_hz must be positive")
        if lags.ndim != 1 or len(lags) == 0:
            raise ValueError("range_lags must be a non-empty 1-D integer array")
        if len(np.unique(lags)) != len(lags) or np.any(np.diff(lags) <= 0):
            raise ValueError("range_lags must be strictly ascending and unique")
        if 0 not in lags:
            raise ValueError("range_lags must include zero")
        if set(lags.tolist()) != set((-lags).tolist()):
            raise ValueError("range_lags must be symmetric about zero")
        if len(dops) == 0:
            raise ValueError("doppler_bins_hz must be non-empty")
        object.__setattr__(self, "range_lags", lags)
        object.__setattr__(self, "doppler_bins_hz", dops)

    @property
    def num_range_lags(self) -> int:
        return len(self.range_lags)

    @property
    def num_doppler_bins(self) -> int:
        return len(self.doppler_bins_hz)

    @property
    def num_cells(self) -> int:
        return self.num_range_lags * self.num_doppler_bins

    @property
    def range_bin_m(self) -> float:
        return SPEED_OF_LIGHT / (2.0 * self.sample_rate_hz)

    @property
    def range_offsets_m(self) -> np.ndarray:
        return self.range_lags * self.range_bin_m

    @classmethod
    def symmetric(
        cls, max_lag: int, sample_rate_hz: float, doppler_bins_hz=(0.0,)
    ) -> "RangeDopplerGrid":
        if max_lag < 0:
            raise ValueError("max_lag must be >= 0")
        return cls(
            range_lags=np.arange(-max_lag, max_lag + 1),
            doppler_bins_hz=np.asarray(doppler_bins_hz, dtype=float),
            sample_rate_hz=sample_rate_hz,
        )

    @classmethod
    def covering_range(
        cls, max_abs_range_m: float, sample_rate_hz: float, doppler_bins_hz=(0.0,)
    ) -> "RangeDopplerGrid":
        """Smallest symmetric grid whose extreme bin centers do not exceed the range."""
        bin_m = SPEED_OF_LIGHT / (2.0 * sample_rate_hz)
        return cls.symmetric(int(np.floor(max_abs_range_m / bin_m)), sample_rate_hz, doppler_bins_hz)

    def lag_index(self, delta_range_m: float, rtol: float = 1e-6) -> int:
        """Index of the lag whose range offset equals ``delta_range_m`` (no interpolation)."""
        lag = delta_range_m / self.range_bin_m
        nearest = int(np.rint(lag))
        if abs(lag - nearest) > rtol * max(1.0, abs(lag)):
            raise ValueError(f"range offset {delta_range_m} m is off-grid (bin {self.range_bin_m} m)")
        idx = np.searchsorted(self.range_lags, nearest)
        if idx >= len(self.range_lags) or self.range_lags[idx] != nearest:
            raise ValueError(f"lag {nearest} outside grid [{self.range_lags[0]}, {self.range_lags[-1]}]")
        return int(idx)

    def doppler_index(self, delta_doppler_hz: float, atol: float = 1e-9) -> int:
        diffs = np.abs(self.doppler_bins_hz - delta_doppler_hz)
        idx = int(np.argmin(diffs))
        if diffs[idx] > atol * max(1.0, abs(delta_doppler_hz)):
            raise ValueError(f"Doppler offset {delta_doppler_hz} Hz is off-grid")
        return idx


@dataclass(frozen=True)
class AFCorrelationMatrix:
    """Per-user-pair waveform correlations on the range-Doppler grid.

    ``blocks[k, i, a, c]`` = sum_n s_k[n] s_i*[n - lag_a] exp(j*2*pi*nu_c*n/f_s),
    the (k, i) entry of the range-Doppler correlation matrix at cell (a, c).
    ``full_matrix`` stacks the K x K blocks into a (K*L_r, K*L_d) array whose
    block columns hold range samples at fixed Doppler.
    """

    blocks: np.ndarray  # (K, K, L_r, L_d) complex
    grid: RangeDopplerGrid
    energies: np.ndarray  # (K,)

    @property
    def num_users(self) -> int:
        return self.blocks.shape[0]

    def block(self, k: int, i: int) -> np.ndarray:
        return self.blocks[k, i]

    def full_matrix(self) -> np.ndarray:
        K = self.num_users
        Lr, Ld = self.grid.num_range_lags, self.grid.num_doppler_bins
        return self.blocks.transpose(0, 2, 1, 3).reshape(K * Lr, K * Ld)

    def cell_matrix(self, lag_idx: int, dop_idx: int) -> np.ndarray:
        """K x K correlation matrix at one grid cell."""
        return self.blocks[:, :, lag_idx, dop_idx]

    def with_zeroed_cross_blocks(self) -> "AFCorrelationMatrix":
        out = np.zeros_like(self.blocks)
        for k in range(self.num_users):
            out[k, k] = self.blocks[k, k]
        return AFCorrelationMatrix(blocks=out, grid=self.grid, energies=self.energies)

    def with_zeroed_diagonal_blocks(self) -> "AFCorrelationMatrix":
        out = self.blocks.copy()
        for k in range(self.num_users):
            out[k, k] = 0.0
        return AFCorrelationMatrix(blocks=out, grid=self.grid, energies=self.energies)


def build_correlation_matrix(
    waves: WaveformSet, grid: RangeDopplerGrid, periodic: bool = False
) -> AFCorrelationMatrix:
    """Aperiodic (zero-padded) cross-correlations of all waveform pairs on the grid.

    ``periodic=True`` switches to cyclic shifts, matching the ideal Zadoff-Chu
    autocorrelation property.
    """
    S = waves.sequences
    K, N = S.shape
    if np.max(np.abs(grid.range_lags)) >= N:
        raise ValueError(f"max |lag| {np.max(np.abs(grid.range_lags))} must be < N={N}")
    if grid.sample_rate_hz != waves.sample_rate_hz:
        raise ValueError("grid and waveform sample rates differ")
    Lr, Ld = grid.num_range_lags, grid.num_doppler_bins
    n = np.arange(N)
    blocks = np.zeros((K, K, Lr, Ld), dtype=complex)
    for c, nu in enumerate(grid.doppler_bins_hz):
        A = S * np.exp(2j * np.pi * nu * n / waves.sample_rate_hz)
        for a, lag in enumerate(grid.range_lags):
            if periodic:
                blocks[:, :, a, c] = A @ np.conj(np.roll(S, lag, axis=1)).T
            elif lag >= 0:
                blocks[:, :, a, c] = A[:, lag:] @ np.conj(S[:, : N - lag]).T
            else:
                blocks[:, :, a, c] = A[:, : N + lag] @ np.conj(S[:, -lag:]).T
    return AFCorrelationMatrix(blocks=blocks, grid=grid, energies=waves.symbol_energies)


def _normalize_intervals(intervals) -> list[tuple[float, float]]:
    out = []
    for iv in intervals:
        lo, hi = float(iv[0]), float(iv[1])
        if lo > hi:
            raise ValueError(f"interval [{lo}, {hi}] has lo > hi")
        out.append((lo, hi))
    return out


@dataclass(frozen=True)
class SidelobeMask:
    """0/1 selection of correlation cells that count toward the ISL.

    ``values`` has one entry per grid cell, applied identically to every
    (k, i) block: 1 where the lag's range offset lies in the sidelobe region
    and the Doppler bin is retained, 0 elsewhere (mainlobe included).
    """

    values: np.ndarray  # (L_r, L_d) float 0/1
    grid: RangeDopplerGrid
    range_region_m: tuple[tuple[float, float], ...]

    @property
    def retained_cells(self) -> int:
        return int(np.sum(self.values))

    @property
    def mainlobe_halfwidth_m(self) -> float:
        """Distance from zero offset to the nearest region edge (guard extent)."""
        edges = [abs(v) for iv in self.range_region_m for v in iv]
        return min(edges) if edges else float("inf")

    def full_matrix(self, num_users: int) -> np.ndarray:
        Lr, Ld = self.grid.num_range_lags, self.grid.num_doppler_bins
        tiled = np.tile(self.values, (num_users, num_users, 1, 1))
        return tiled.transpose(0, 2, 1, 3).reshape(num_users * Lr, num_users * Ld)


def build_mask(
    grid: RangeDopplerGrid,
    range_region_m,
    doppler_region_hz=None,
) -> SidelobeMask:
    """Mask from signed range intervals (meters), closed-interval bin inclusion.

    Retained Doppler bins default to the zero-Doppler bin only. Every interval
    must be coverable by the grid: it may not extend beyond half a bin past
    the extreme lag centers.
    """
    intervals = _normalize_intervals(range_region_m)
    offsets = grid.range_offsets_m
    half_bin = grid.range_bin_m / 2.0
    lo_cover = offsets[0] - half_bin
    hi_cover = offsets[-1] + half_bin
    for lo, hi in intervals:
        if lo < lo_cover - 1e-9 or hi > hi_cover + 1e-9:
            raise ValueError(
                f"range region [{lo}, {hi}] m extends beyond the lag window "
                f"[{lo_cover:.3f}, {hi_cover:.3f}] m"
            )
    in_range = np.zeros(grid.num_range_lags, dtype=bool)
    for lo, hi in intervals:
        in_range |= (offsets >= lo - 1e-12) & (offsets <= hi + 1e-12)

    if doppler_region_hz is None:
        dop_keep = np.isclose(grid.doppler_bins_hz, 0.0)
    else:
        dop_keep = np.zeros(grid.num_doppler_bins, dtype=bool)
        for lo, hi in _normalize_intervals(doppler_region_hz):
            dop_keep |= (grid.doppler_bins_hz >= lo) & (grid.doppler_bins_hz <= hi)

    values = (in_range[:, None] & dop_keep[None, :]).astype(float)
    return SidelobeMask(values=values, grid=grid, range_region_m=tuple(intervals))


def masked_cross_correlation_ratio(corr: AFCorrelationMatrix, mask: SidelobeMask) -> float:
    """Largest masked cross-block modulus, normalized by sqrt(E_k * E_i).

    Gauges how well the uncorrelated-waveform assumption behind the simplified
    (diagonal-block) ISL holds on the optimized region. Zero for K = 1.
    """
    K = corr.num_users
    if K == 1:
        return 0.0
    worst = 0.0
    for k in range(K):
        for i in range(K):
            if k == i:
                continue
            peak = np.max(np.abs(corr.blocks[k, i] * mask.values))
            worst = max(worst, peak / np.sqrt(corr.energies[k] * corr.energies[i]))
    return float(worst)
