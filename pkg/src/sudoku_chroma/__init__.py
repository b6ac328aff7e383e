"""Exact Sudoku numbers and Sudoku colorings of small graphs."""

from .coloring import (
    ColorListMap,
    ExtensionCount,
    PartialColoring,
    Verdict,
    brute_force_count,
    chromatic_number,
    count_extensions,
    is_uce,
    is_uniquely_extendable,
    optimal_coloring,
    parse_coloring,
    propagate,
    residual_cycle_check,
    residual_path_check,
    serialize_coloring,
    unique_extension,
)
from .errors import (
    EmptyLineGraphError,
    GraphParseError,
    HypothesisNotMetError,
    ImproperColoringError,
    InvalidSpecError,
    NotExtendableError,
    SearchBudgetError,
    SudokuChromaError,
    UnsupportedGraphError,
)
from .families import (
    TheoremId,
    TheoremInstance,
    build_instance,
    formula_sn,
    pendant_augmented_instance,
    thm21_lower_family,
    thm21_upper_family,
    thm22_instance,
    thm23_instance,
    thm24_instance,
    thm25_instance,
    thm26_instance,
)
from .graph import (
    Family,
    FamilySpec,
    Graph,
    augment_with_pendants,
    complete,
    corona,
    cycle,
    generate,
    line_graph,
    parse_family,
    parse_graph,
    path,
    relabel,
    serialize_graph,
    star,
    wheel,
)
from .search import (
    CoronaBounds,
    ForcedSets,
    SudokuWitness,
    corona_bounds,
    forced_sets,
    greedy_sudoku_coloring,
    sudoku_number,
    sudoku_number_upper,
)

__version__ = "0.1.0"
