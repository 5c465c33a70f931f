"""Transmit beamformer design for monostatic MIMO ISAC base stations.

Minimizes the integrated sidelobe level of the transmit-signal ambiguity
function over a range-angle region, subject to per-user SINR, total power,
and target-direction gain constraints, via semidefinite relaxation.
"""

__version__ = "0.1.0"

from .arraygeom import ArrayGeometry, SteeringVector, beampattern, steering_vector, target_gain
from .channel import ChannelConfig, ChannelSet, generate_channels, user_sinr
from .waveform import (
    AFCorrelationMatrix,
    RangeDopplerGrid,
    SidelobeMask,
    WaveformSet,
    build_correlation_matrix,
    build_mask,
    zadoff_chu,
)
from .ambiguity import (
    AngleGrid,
    TargetParams,
    af_value,
    isl_direct,
    isl_vectorized,
    islr,
    narrowband_check,
)
from .optimizer import (
    BeamformerMatrix,
    CovarianceSet,
    DesignConstraints,
    build_qsdp,
    design_beampattern_family,
    design_comm_only,
    design_joint_maxgain,
    design_proposed,
    design_sensing_only,
    extract_beamformers,
    solve,
)

__all__ = [
    "ArrayGeometry",
    "SteeringVector",
    "steering_vector",
    "target_gain",
    "beampattern",
    "ChannelConfig",
    "ChannelSet",
    "generate_channels",
    "user_sinr",
    "WaveformSet",
    "RangeDopplerGrid",
    "AFCorrelationMatrix",
    "SidelobeMask",
    "zadoff_chu",
    "build_correlation_matrix",
    "build_mask",
    "TargetParams",
    "AngleGrid",
    "af_value",
    "isl_direct",
    "isl_vectorized",
    "islr",
    "narrowband_check",
    "BeamformerMatrix",
    "CovarianceSet",
    "DesignConstraints",
    "build_qsdp",
    "solve",
    "extract_beamformers",
    "design_proposed",
    "design_sensing_only",
    "design_comm_only",
    "design_joint_maxgain",
    "design_beampattern_family",
]
