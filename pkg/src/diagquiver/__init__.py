"""Branching matrices, quivers and K0 data for the diagonal limits
sl(n^inf), sp(n^inf) and so(n^inf), all in exact integer arithmetic."""

from .partitions import (
    EMPTY,
    EMPTY_PAIR,
    Partition,
    PartitionPair,
    conjugate,
    contains,
    pair_axis,
    parity_axis,
    partitions_of,
)
from .coefficients import lr, lr_multi
from .branching import (
    BranchingMatrix,
    MatrixFamily,
    build,
    diagonal_block,
    kronecker,
    so_matrix,
    sp_matrix,
    type1,
    type2,
)
from .characters import character_table, spectral_verify
from .dimension import dim, dim_check
from .quivers import Quiver, quiver_of, simplicity_certificate, to_dot
from .ktheory import K0Class, k0_positive, order_unit_witness, unroll
from .points import PointDataSequence, ProjectivePoint, equivalent, wild_family

__all__ = [name for name in dir() if not name.startswith("_")]
