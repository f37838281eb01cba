from pcfa_workbench.oca.catalog import build_delay_oca, build_sample_oca, build_signal_oca
from pcfa_workbench.oca.models import OcaConfiguration, OcaDef
from pcfa_workbench.oca.oca_file import load_oca, parse_oca, print_oca
from pcfa_workbench.oca.simulator import TimeComputation, check_closure, oca_run, oca_step, time_compute
from pcfa_workbench.oca.valc import (
    ValcString,
    decode_valc,
    encode_valc,
    is_valid_computation,
    valc_length,
)

__all__ = [
    "OcaConfiguration",
    "OcaDef",
    "TimeComputation",
    "ValcString",
    "build_delay_oca",
    "build_sample_oca",
    "build_signal_oca",
    "check_closure",
    "decode_valc",
    "encode_valc",
    "is_valid_computation",
    "load_oca",
    "oca_run",
    "oca_step",
    "parse_oca",
    "print_oca",
    "time_compute",
    "valc_length",
]
