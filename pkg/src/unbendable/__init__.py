"""Exact verification of unbendable highest-root curves on G/P and on
smooth horospherical varieties of Picard number one."""

from .errors import (
    CurveContracted,
    IndexOutOfRange,
    InvalidRank,
    NotARoot,
    NotLatticeWeight,
    OutOfRange,
)
from .lie import LieType, all_types, cartan_matrix, make_lie_type, parse_type, symmetrizer
from .parabolic import (
    ParabolicMarking,
    SplittingType,
    classify_splitting,
    minimal_curve_contrast,
    tangent_splitting,
    unbendable_sweep,
)
from .roots import RootSystem, coroot_pairing, generate_root_system, special_nodes

__version__ = "0.1.0"
