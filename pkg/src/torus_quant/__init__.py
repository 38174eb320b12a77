"""Gabor analysis and covariant quantization on the discrete torus Z_d x Z_d.

The package provides the discrete Weyl-Heisenberg displacement operators,
coherent-state (Gabor) analysis with exact inversion, weight-driven
quantization operators and symbol maps, Husimi and Wigner distributions,
and semi-classical phase-space portraits, all validated by their algebraic
identities to machine precision.
"""

__version__ = "0.1.0"

from .errors import InputFormatError, ToleranceError
from .hilbert import (
    as_state,
    dft,
    dft_matrix,
    fourier_basis,
    idft,
    inner,
    kronecker_basis,
    modulate,
    norm,
    translate,
)
from .weyl import (
    GroupElement,
    compose_displacements,
    conjugate_sign,
    conjugation_phase,
    displacement_apply,
    displacement_matrix,
    fourier_conjugated,
    group_inv,
    group_mul,
    half_phase,
    rep_V,
    trace_displacement,
)
from .fiducials import FiducialSpec, default_catalog, jacobi_theta3, realize_fiducial
from .gabor import (
    coherent_state,
    frame_resolution_defect,
    gabor_inverse,
    gabor_transform,
    isometry_defect,
    reproducing_defect,
    reproducing_kernel,
)
from .quantize import (
    PositivityReport,
    Weight,
    coherent_state_weight,
    covariance_defect,
    momentum_symbol,
    parity_weight,
    position_symbol,
    positivity_report,
    quantization_operator,
    quantize,
    quantize_momentum,
    quantize_position,
    sum_displacement,
    symplectic_dft,
    transported,
    weight_from_operator,
)
from .distributions import (
    husimi,
    overlap_distribution,
    parity_matrix,
    portrait,
    portrait_of_symbol,
    realize_real,
    wigner,
    wigner_half_argument,
    wigner_via_parity,
)
from .signals import (
    SIGNAL_PATTERNS,
    column_energy,
    demo_signal,
    dominant_rows,
    envelope_spectrum,
    harmonic_energy_fraction,
    period_estimate,
    spectrogram,
)

__all__ = [name for name in dir() if not name.startswith("_")]
