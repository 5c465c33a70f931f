"""Uniform linear array geometry, steering vectors, and beamforming gain."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT = 299_792_458.0


@dataclass(frozen=True)
class ArrayGeometry:
    """Colocated monostatic ULA. The first element (index 0) is the phase reference.

    ``element_spacing_m`` defaults to half the carrier wavelength.
    """

    num_antennas: int
    carrier_freq_hz: float
    element_spacing_m: float | None = None

    def __post_init__(self):
        if int(self.num_antennas) != self.num_antennas or self.num_antennas < 1:
            raise ValueError("num_antennas must be a positive integer")
        if not (math.isfinite(self.carrier_freq_hz) and self.carrier_freq_hz > 0):
            raise ValueError("carrier_freq_hz must be positive and finite")
        if self.element_spacing_m is None:
            object.__setattr__(self, "element_spacing_m", self.wavelength_m / 2.0)
        if not (math.isfinite(self.element_spacing_m) and self.element_spacing_m > 0):
            raise ValueError("element_spacing_m must be positive and finite")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_freq_hz


@dataclass(frozen=True)
class SteeringVector:
    """Array phase response toward ``angle_rad`` at ``effective_freq_hz`` (carrier + Doppler)."""

    entries: np.ndarray
    effective_freq_hz: float
    angle_rad: float
    side: str = "transmit"


def element_delays(geometry: ArrayGeometry, angle_rad: float | np.ndarray) -> np.ndarray:
    """Per-element path delay m*d*sin(theta)/c relative to element 0.

    Returns shape (M,) for scalar input, (M, P) for a P-vector of angles.
    """
    m = np.arange(geometry.num_antennas, dtype=float)
    s = np.sin(np.asarray(angle_rad, dtype=float))
    return np.multiply.outer(m, s) * (geometry.element_spacing_m / SPEED_OF_LIGHT)


def _validate_angle(angle_rad: float, doppler_hz: float) -> None:
    if not (math.isfinite(angle_rad) and math.isfinite(doppler_hz)):
        raise ValueError("angle and Doppler must be finite")
    if abs(angle_rad) > math.pi / 2 + 1e-12:
        raise ValueError(f"angle {angle_rad} rad outside [-pi/2, pi/2]")


def steering_vector(
    geometry: ArrayGeometry,
    doppler_hz: float = 0.0,
    angle_rad: float = 0.0,
    side: str = "transmit",
) -> SteeringVector:
    """Unit-modulus steering vector exp(+j*2*pi*f*tau_m(theta)) with f = f_c + f_doppler.

    Transmit and receive vectors coincide for a colocated array with equal spacing;
    ``side`` is carried as a tag only.
    """
    if side not in ("transmit", "receive"):
        raise ValueError(f"side must be 'transmit' or 'receive', got {side!r}")
    _validate_angle(angle_rad, doppler_hz)
    f = geometry.carrier_freq_hz + doppler_hz
    entries = np.exp(2j * np.pi * f * element_delays(geometry, angle_rad))
    return SteeringVector(entries=entries, effective_freq_hz=f, angle_rad=angle_rad, side=side)


def steering_matrix(
    geometry: ArrayGeometry, doppler_hz: float, angles_rad: np.ndarray
) -> np.ndarray:
    """Stack steering vectors column-wise: shape (M, P)."""
    angles = np.asarray(angles_rad, dtype=float)
    if angles.ndim != 1:
        raise ValueError("angles_rad must be one-dimensional")
    if not np.all(np.isfinite(angles)):
        raise ValueError("angles must be finite")
    if np.any(np.abs(angles) > np.pi / 2 + 1e-12):
        raise ValueError("angles outside [-pi/2, pi/2]")
    f = geometry.carrier_freq_hz + doppler_hz
    return np.exp(2j * np.pi * f * element_delays(geometry, angles))


def target_gain(
    W: np.ndarray, geometry: ArrayGeometry, doppler_hz: float = 0.0, angle_rad: float = 0.0
) -> float:
    """Beamforming gain toward (doppler, angle): sum_k |b^H w_k|^2, in mW for W in sqrt(mW)."""
    W = np.asarray(W)
    if W.ndim != 2 or W.shape[0] != geometry.num_antennas:
        raise ValueError(f"W must be (M, K) with M={geometry.num_antennas}, got {W.shape}")
    b = steering_vector(geometry, doppler_hz, angle_rad).entries
    proj = np.conj(b) @ W
    return float(np.sum(np.abs(proj) ** 2))


def beampattern(
    R_W: np.ndarray,
    geometry: ArrayGeometry,
    angles_rad: np.ndarray,
    doppler_hz: float = 0.0,
) -> np.ndarray:
    """Transmit power per angle, b^H(theta) R_W b(theta). Real vector, mW per angle."""
    R_W = np.asarray(R_W)
    M = geometry.num_antennas
    if R_W.shape != (M, M):
        raise ValueError(f"R_W must be ({M}, {M}), got {R_W.shape}")
    scale = np.linalg.norm(R_W)
    if scale > 0 and np.linalg.norm(R_W - R_W.conj().T) > 1e-9 * scale:
        raise ValueError("R_W must be Hermitian")
    B = steering_matrix(geometry, doppler_hz, angles_rad)
    return np.real(np.einsum("mp,mn,np->p", B.conj(), R_W, B))
