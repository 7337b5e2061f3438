"""Curling-number sequence toolkit.

Core primitive: the curling number of a finite word U is the largest k with
U = X Y^k (Y nonempty).  Iterating ``append max(m, curling number)`` from a
single m yields the floor-m self-describing sequences (OEIS A090822 for
m = 1); this package generates them, exposes their block/glue structure,
tabulates growth, estimates first occurrences, and runs the binary {2,3}
extension search.
"""

from .kernel import (
    CurlingResult,
    bounded_curling_number,
    curling_number,
    curling_transform,
    madic_valuation,
)
from .hierarchy import (
    AnnotatedTerm,
    BlockDecomposition,
    DecompositionBudgetError,
    annotate,
    decompose,
    expand_via_promotion,
    generate_fast,
    generate_reference,
    glue_lengths_via_promotion,
    verify_structure,
)
from .analysis import (
    GrowthConstants,
    LengthTable,
    Rec1Report,
    RulerFit,
    beta_closed_form,
    beta_region_max,
    build_length_table,
    check_rec1,
    growth_constants,
    records,
    rho_closed_form,
    rho_region_max,
    smooth_to_ruler,
    tau_estimate,
)
from .occurrence import (
    NotFoundError,
    OccurrenceReport,
    TowerExpr,
    eq_s1_position,
    first_five_chain,
    first_occurrence_direct,
    tower_estimate,
)
from .search import (
    ExtensionResult,
    SearchRow,
    exhaustive_search,
    extend_until_drop,
    format_average,
    records_scan,
    rows_to_csv,
)
from .sequences import (
    NamedSequence,
    earliest_all_ones_preimage,
    generate_named,
    variant_2d,
    variant_floor_half,
    variant_greedy,
    variant_shift,
)
from .cli import cli_dispatch

__version__ = "0.1.0"

__all__ = [
    "CurlingResult",
    "curling_number",
    "bounded_curling_number",
    "curling_transform",
    "madic_valuation",
    "AnnotatedTerm",
    "BlockDecomposition",
    "DecompositionBudgetError",
    "generate_reference",
    "annotate",
    "expand_via_promotion",
    "generate_fast",
    "decompose",
    "glue_lengths_via_promotion",
    "verify_structure",
    "LengthTable",
    "RulerFit",
    "Rec1Report",
    "GrowthConstants",
    "build_length_table",
    "records",
    "smooth_to_ruler",
    "check_rec1",
    "beta_closed_form",
    "rho_closed_form",
    "beta_region_max",
    "rho_region_max",
    "tau_estimate",
    "growth_constants",
    "TowerExpr",
    "OccurrenceReport",
    "NotFoundError",
    "first_occurrence_direct",
    "eq_s1_position",
    "first_five_chain",
    "tower_estimate",
    "ExtensionResult",
    "SearchRow",
    "extend_until_drop",
    "exhaustive_search",
    "records_scan",
    "format_average",
    "rows_to_csv",
    "NamedSequence",
    "generate_named",
    "earliest_all_ones_preimage",
    "variant_floor_half",
    "variant_shift",
    "variant_greedy",
    "variant_2d",
    "cli_dispatch",
]
