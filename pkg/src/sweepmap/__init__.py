"""Sweep maps on modular and integer words, equitable partitions, and the zeta map."""
from .equitable import (
    BalancingArray,
    balancing_array,
    column_statuses,
    column_targets,
    is_equitable,
    is_successful,
    rightmost,
    rightmost_trace,
    succ_tree_children,
    succ_tree_level,
    successful,
    successful_from,
    successful_from_trace,
)
from .errors import BudgetExceeded, InvariantViolation
from .general import (
    Content,
    DyckParams,
    IntWord,
    dyck_words,
    is_dyck,
    lift,
    modulus_bound,
    sweep_int,
    unsweep_int,
    unzeta,
    zeta,
    zeta_direct,
)
from .lattice import (
    EqLattice,
    SuffixVector,
    covers,
    enumerate_lattice,
    hasse_dot,
    join,
    left_bbs_all,
    leftmost,
    leftmost_trace,
    leq,
    meet,
    minimal_left_bbs,
    shift_right,
)
from .modular import (
    PresweepFailure,
    forget,
    inverse_presweep,
    inverse_presweep_trace,
    presweep,
    sweep_mod,
    unsweep_mod,
)
from .oracle import VerifyReport, brute_equitable, verify_sweep_bijective, verify_theorems, verify_zeta
from .scheduling import Schedule, inspector_check, schedule_all, schedule_latest
from .words import (
    ModWord,
    PartitionedWord,
    block_vector,
    format_partition,
    format_word,
    from_block_vector,
    levels_mod,
    parse_partition,
    parse_word,
)

__version__ = "0.1.0"
