"""Teleportation witness toolkit for bipartite d x d quantum states.

Construct and evaluate teleportation and Schmidt-number witnesses, compute
the fully entangled fraction by optimization over local unitaries, apply
PPT/realignment entanglement criteria, and decompose witnesses into locally
measurable Pauli / Gell-Mann correlation terms.
"""

from .criteria import criteria_report, ppt_min_eigenvalue, realignment_sum, schmidt_rank
from .decomp import decompose, gellmann_basis, measurement_count, pauli_basis
from .fef import FefConfig, FefResult, fef_isotropic, fef_maximize, fef_overlap, fef_pure, is_useful_for_teleportation
from .states import (
    DensityMatrix,
    PureState,
    StateValidationError,
    horodecki_3x3,
    isotropic,
    max_entangled,
    random_product_state,
    reference_state,
    singlet_overlap,
)
from .witness import (
    Witness,
    classify_schmidt_range,
    expectation,
    schmidt_number_from_f0,
    schmidt_witness,
    tw_isotropic_expectation,
    verify_witness_conditions,
    witness_scalar,
    witness_tw,
    witness_tw_f0,
    witness_w,
)

__version__ = "0.1.0"
