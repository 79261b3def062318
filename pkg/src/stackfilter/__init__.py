"""Exact output distributions of stack filters from the DNF of their PBF."""

from .balanced import (
    BalancedPbf,
    BalancedProfile,
    ThresholdQuadruple,
    balanced_eval,
    balanced_profile,
    threshold_probs,
)
from .ced import build_ced, lower, upper
from .distribution import (
    AProfile,
    MixedMonomial,
    TransferPolynomial,
    a_profile,
    eval_transfer,
    rank_selection,
    row_contribution,
    transfer,
)
from .dnfio import format_dnf, parse_balanced, parse_dnf
from .filtering import apply
from .joint import JointMatrix, downward_closure, joint_eval, joint_profile
from .pbf import Pbf, Window, absorb, compose, dualize, eval_bool, eval_real
from .rows import (
    MultiRow,
    RowSet,
    enumerate_zeros,
    impose,
    row_cardinality,
    row_contains,
    satisfies,
)

__version__ = "0.1.0"
