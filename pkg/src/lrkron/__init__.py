"""SU(n) Kronecker products by the Littlewood rule, with outer-multiplicity
labels for SU(3) and SU(4) read off U(2n-2) patterns."""
from .closed_form import (
    BoxCountError, Su3Bounds, Su4Bounds, UnsupportedRankError, eta_from_filling,
    su3_bounds, su3_decompose_sum, su3_eta_labels, su3_multiplicity, su4_bounds,
    su4_decompose_sum, su4_eta_labels, su4_multiplicity,
)
from .complement import (
    BetweennessError, BoundReport, ComplementaryPattern, EtaRangeError, classify_bounds,
    coupled_pattern_su3, coupled_pattern_su4, merge_tags, pattern_from_filling,
    uncoupled_patterns,
)
from .lr import Decomposition, Term, decompose, lr_coefficient, lr_fillings, lr_multiplicities
from .partition import (
    DimensionOverflow, Partition, PartitionError, PartitionOrderError, PartitionSyntaxError,
    RankError, Su3Dynkin, dimension, dynkin_to_partition, parse_partition, partition_to_dynkin,
    partitions, reduce_sun,
)
from .sweep import SweepConfig, SweepResult, read_report, run_sweep, write_report
from .tableau import (
    GelfandPattern, LRFilling, PatternError, TableauError, WeylTableau, check_betweenness,
    count_patterns, enumerate_patterns, gelfand_from_weyl, is_lattice_word, is_semistandard,
    weyl_from_gelfand,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
