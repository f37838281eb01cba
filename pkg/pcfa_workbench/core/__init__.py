from pcfa_workbench.core.engine import decide, initial_configuration, iter_run, run, step
from pcfa_workbench.core.metering import BoundFunction, BoundReport, check_comm_bound, comm_entries
from pcfa_workbench.core.models import (
    CommEvent,
    CommunicationMode,
    ComponentDef,
    Configuration,
    HaltReason,
    RunResult,
    StepKind,
    StepOutcome,
    SystemDef,
    Verdict,
)
from pcfa_workbench.core.system_file import load_system, parse_system, print_system
from pcfa_workbench.core.validator import ValidatedSystem, validate_system

__all__ = [
    "BoundFunction",
    "BoundReport",
    "CommEvent",
    "CommunicationMode",
    "ComponentDef",
    "Configuration",
    "HaltReason",
    "RunResult",
    "StepKind",
    "StepOutcome",
    "SystemDef",
    "ValidatedSystem",
    "Verdict",
    "check_comm_bound",
    "comm_entries",
    "decide",
    "initial_configuration",
    "iter_run",
    "load_system",
    "parse_system",
    "print_system",
    "run",
    "step",
    "validate_system",
]
