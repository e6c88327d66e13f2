"""Exact computations with nilpotent orbits, transverse slices and
sheet combinatorics for gl_N under orthogonal, symplectic and
block-diagonal involutions."""

from glsheets.abdiagrams import (
    ABDiagram,
    alternating_row,
    delta_of_phi,
    diagrams_of_shape,
    enumerate_admissible,
    gamma_of_nilpotent,
    is_admissible,
    remove_column_pair,
    removable_column_pairs,
    rigidify,
    signature_of_phi,
)
from glsheets.errors import InternalInconsistencyError
from glsheets.glsetup import (
    BasisIndex,
    SL2Triple,
    TorusElement,
    ad_matrix,
    basis_indices,
    block_offsets,
    build_triple,
    c_basis,
    centralizer_of_f,
    flat_index,
    grading_component,
    grading_decomposition,
    torus_matrix,
)
from glsheets.involutions import (
    Involution,
    PairingViolation,
    build_AI,
    build_AII,
    build_AIII,
    fixed_space_dims,
    is_normal_triple,
)
from glsheets.linalg import (
    RatMatrix,
    Rational,
    bracket,
    char_poly,
    conjugate_by_exp,
    exp_nilpotent,
    inverse,
    kernel_basis,
    rank,
    rational_spectrum,
    solve_linear,
)
from glsheets.partitions import Partition, partitions_of
from glsheets.sheets import (
    JordanType,
    SheetComponent,
    SheetDims,
    SheetFlags,
    SheetReport,
    SliceMembership,
    intersection_dimension,
    is_dixmier,
    is_rigid_orbit,
    jordan_type_on_slice,
    k_sheet_components,
    multiplicities,
    satisfies_mitc,
    slice_p_dimension,
    verify_slice_membership,
)
from glsheets.slices import (
    GradedPoint,
    epsilon,
    rank_profile,
    same_rank_profile,
    scaling_action,
    slice_contains,
)

__version__ = "0.1.0"
