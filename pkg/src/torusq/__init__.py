"""torusq: quantization of the plane and the torus as phase spaces.

Exact symbolic operator algebra on a closed family of phase-space wave
functions, the displacement group and gauge picture on the plane, area
quantization and chart consistency on the torus, and the reduction to an
N-dimensional physical Hilbert space with clock/shift operators and a
discrete Fourier basis change.
"""

from .symbolic import (
    BilinearPhaseTerm,
    OperatorKind,
    WaveFunction,
    apply_operator,
    commutator_apply,
    differentiate,
    exp_operator_apply,
    is_eigenstate,
)
from .plane import (
    DisplacementLabel,
    GaugeField,
    displacement_compose,
    field_strength,
    make_plane_P_basis,
    make_plane_Q_basis,
    path_phase,
)
from .torus import (
    ChartPair,
    GridFunction,
    GridShift,
    TorusGeometry,
    chart_consistency_check,
    grid_shift_operator,
    holonomy,
    inner_product,
    make_geometry,
    make_torus_P_basis,
    make_torus_Q_basis,
    sample,
    transition_function,
)
from .finite import (
    EquivalenceLabel,
    FiniteOperator,
    FiniteState,
    clock_matrix,
    dft_basis_change,
    grid_matrix_elements,
    physical_grid_overlaps,
    reduce_label,
    shift_matrix,
    table1_matrices,
    table1_verify,
    trace_obstruction_demo,
    weyl_commutation_check,
)
from .report import CheckResult, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BilinearPhaseTerm",
    "ChartPair",
    "CheckResult",
    "DisplacementLabel",
    "EquivalenceLabel",
    "FiniteOperator",
    "FiniteState",
    "GaugeField",
    "GridFunction",
    "GridShift",
    "OperatorKind",
    "TorusGeometry",
    "VerificationReport",
    "WaveFunction",
    "apply_operator",
    "chart_consistency_check",
    "clock_matrix",
    "commutator_apply",
    "dft_basis_change",
    "differentiate",
    "displacement_compose",
    "exp_operator_apply",
    "field_strength",
    "grid_matrix_elements",
    "grid_shift_operator",
    "holonomy",
    "inner_product",
    "is_eigenstate",
    "make_geometry",
    "make_plane_P_basis",
    "make_plane_Q_basis",
    "make_torus_P_basis",
    "make_torus_Q_basis",
    "path_phase",
    "physical_grid_overlaps",
    "reduce_label",
    "sample",
    "shift_matrix",
    "table1_matrices",
    "table1_verify",
    "trace_obstruction_demo",
    "transition_function",
    "weyl_commutation_check",
]
