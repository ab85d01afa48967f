from .conditions import (
    CONDITION_TEXT, REQUIREMENTS, EXAMPLE_THEOREMS, ConditionReport,
    conditions_report, target_key, theorem_for_example,
)
from .enumeration import (
    SYMMETRY_MODES, EnumerationOptions, VerdictSummary,
    enumerate_verify, frontier_rows, group_order,
)
from .heuristic import coloring_energy, counterexample_search
