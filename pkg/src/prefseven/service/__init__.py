"""Batch and HTTP surfaces: configs, datasets, reports, sessions, the app."""

from .config import SessionConfig, SmaaSettings
from .dataset import bundled_students, load_dataset, table_json
from .report import SessionReport, verify_report
from .sessions import (InfeasibleElicitationError, SessionNotFoundError,
                       SessionStateError, SessionStore, run_pipeline, whatif)

__all__ = [
    "SessionConfig", "SmaaSettings", "bundled_students", "load_dataset",
    "table_json", "SessionReport", "verify_report",
    "InfeasibleElicitationError", "SessionNotFoundError", "SessionStateError",
    "SessionStore", "run_pipeline", "whatif",
]
