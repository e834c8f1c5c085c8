"""Gram-determinant square classes of Specht modules via odd branches."""

from .branches import (
    Branch,
    BranchClass,
    CaseLabel,
    branches,
    classify,
    equivalence_classes,
    hook_pair_vs_descended,
    odd_branches,
)
from .determinant import (
    ParityReport,
    SquareClass,
    a2_parity,
    class_is_odd,
    orth_det,
    reduce_square_class,
    verify_theorem,
)
from .hooks import core, d_map, dimension, is_odd, odd_rank, two_power_r
from .oracle import gram_determinant, gram_matrix, p_valuation, polytabloid, standard_tableaux
from .partitions import (
    P,
    Partition,
    beta_sequence,
    distance,
    dominance_leq,
    hook_table,
    parse_partition,
    part_of_beta,
    partitions_of,
)
from .stats import StatRow, count_A, count_B, stats_table
