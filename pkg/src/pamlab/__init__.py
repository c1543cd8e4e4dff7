"""Pattern-avoiding two-stack sorting machines: simulation, pattern
characterizations, bijections and exhaustive enumeration."""

from .bijections import (
    alpha,
    alpha_inverse,
    classify_triangle,
    hat,
    inverse_out_hat,
    phi,
    phi_inverse,
    triangle_delete,
    triangle_delete_inverse,
    triangle_swap,
)
from .characterizations import (
    bounded_blocks_lemma_check,
    four_conditions_123_312,
    sortable_by_blocks_132_231,
    sortable_by_patterns,
    structure_report,
)
from .harness import (
    compare_sequence,
    count_sortable,
    count_table,
    is_out_bijective,
    verify_bijection,
    verify_characterization,
)
from .machine import MachineConfig, SortingTrace, is_sortable, machine, out_T, parse_machine, run_stack, sort_series
from .patterns import (
    PatternSpec,
    avoids_all,
    avoids_barred_prefix,
    contains_adjacent_213,
    contains_anchored,
    contains_classical,
    contains_gap_312,
    find_occurrence,
    parse_pattern,
)
from .perm import (
    Decomposition,
    PartialPermutation,
    Permutation,
    decompose,
    enumerate_partial_permutations,
    enumerate_permutations,
    make_permutation,
    reverse,
)
from .sequences import sequence_value

__version__ = "0.1.0"
