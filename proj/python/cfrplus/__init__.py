"""CFR+ and vanilla CFR solver for one-card poker with exact exploitability."""

from cfrplus._core import (
    ConvergenceTrace,
    ExploitabilityReport,
    GameSpec,
    GameTree,
    InfosetId,
    Profile,
    SnapshotError,
    Solver,
    SolverConfig,
    StopMetric,
    TableStats,
    TraceRecord,
    Variant,
    best_response_value,
    build_one_card_poker,
    expected_value,
    exploitability,
    match_strategy,
    restore_snapshot,
    snapshot,
    stats,
    update_regret_plus,
    update_regret_vanilla,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceTrace",
    "ExploitabilityReport",
    "GameSpec",
    "GameTree",
    "InfosetId",
    "Profile",
    "SnapshotError",
    "Solver",
    "SolverConfig",
    "StopMetric",
    "TableStats",
    "TraceRecord",
    "Variant",
    "best_response_value",
    "build_one_card_poker",
    "expected_value",
    "exploitability",
    "match_strategy",
    "restore_snapshot",
    "snapshot",
    "stats",
    "update_regret_plus",
    "update_regret_vanilla",
]
