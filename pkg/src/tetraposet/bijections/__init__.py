"""Combinatorial objects and their bijections with staircase arrays and ideals."""

from .asm import (
    Asm,
    MonotoneTriangle,
    all_asms,
    asm_to_monotone,
    asm_to_yplus,
    inversion_number,
    monotone_to_asm,
    monotone_to_yplus,
    num_neg,
    yplus_to_asm,
    yplus_to_monotone,
)
from .dyck import DyckPath, all_dyck_paths, catalan_poset, dyck_to_ideal, ideal_to_dyck
from .plane_partitions import (
    PlanePartition,
    all_tspps,
    all_tsscpps,
    ideal_to_tspp,
    is_self_complementary,
    is_totally_symmetric,
    is_tsscpp,
    tspp_to_ideal,
    tsscpp_to_yplus,
    yplus_to_tsscpp,
)
from .stats import ArrayStats, compute_stats
from .sundquist import TournamentTableau, all_staircase_ssyt, sundquist, sundquist_tournament
from .tournaments import (
    Tournament,
    all_tournaments,
    fiber_size,
    is_tsscpp_tournament,
    normalize_rows,
    row_shuffles,
    rows_weakly_increase,
    tournament_to_yplus,
    yplus_to_tournament,
)

__all__ = [name for name in dir() if not name.startswith("_")]
