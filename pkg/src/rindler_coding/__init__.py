"""X-state dense coding seen from uniformly accelerated frames."""

from .coding import (
    EncodingEnsemble,
    InfoReport,
    average_coded_state,
    capacity,
    decoded_information_closed_form,
    holevo_information,
    info_report,
    negativity,
    pauli_encode,
)
from .hilbert import hermitian_eigenvalues, kron, partial_trace, validate_density_matrix, von_neumann_entropy
from .sweep import SweepConfig, SweepRecord, emit_csv, read_csv, run_sweep
from .unruh import (
    RegionPair,
    accelerate_pair,
    channel_closed_form,
    channel_oracle,
    reduce_to_region,
    region_channel,
    rindler_angle_from_accel,
    unruh_isometry,
)
from .xstate import MES, PES, XCoefficients, XStateParams, x_state_eigenvalues, x_state_from_c

__version__ = "0.1.0"
