"""Single-vertex recolouring of planar graphs: exhaustive exploration of
recolouring graphs, constructive reconfiguration with per-vertex budgets,
bad-pair structure for girth-5 plane graphs and discharging audits."""

from .planar import (
    Face,
    GraphFormatError,
    NonPlanarError,
    PlanarGraph,
    degeneracy,
    degeneracy_order,
    format_graph,
    girth,
    opposite_face,
    parse_graph,
    trace_faces,
)
from .generators import generate
from .colouring import (
    ListAssignment,
    Schedule,
    ScheduleReport,
    adjacent,
    free,
    is_proper,
    locked,
    new_colours,
    validate_schedule,
)
from .explorer import (
    ExplorationResult,
    RecolouringGraph,
    StateSpaceTooLarge,
    component_of,
    enumerate_colourings,
    explore,
    find_path,
    is_frozen,
    three_colouring,
)
from .lifting import (
    BudgetError,
    c_schedule,
    degenerate_reconfigure,
    lift_bound,
    lift_through_island,
    lift_through_vertex,
    reduce_girth6,
    reduce_list11,
)
from .structure import (
    BadPairSet,
    ConfigWitness,
    IslandOrder,
    bad_pairs,
    find_borodin_triangle,
    find_island,
    find_reduction_list11,
    find_unavoidable_config,
    is_island,
)
from .discharging import ChargeLedger, girth5_audit, girth5_discharge, island_audit, island_discharge
from .gadgets import (
    frozen_5face_uniqueness,
    frozen_propagation_check,
    frozen_witnesses,
    propagation_sweep,
    replay_figures,
)

__all__ = [name for name in dir() if not name.startswith("_")]
