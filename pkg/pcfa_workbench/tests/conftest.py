"""Shared test fixtures"""
import os

os.environ.setdefault("PCFA_ENV_STATE", "test")

import pytest

from pcfa_workbench.cli import main
from pcfa_workbench.configs.config import UnitTestConfig
from pcfa_workbench.core import validate_system
from pcfa_workbench.gallery import build_expo, build_expo_wbw, build_poly, build_poly_wbw, build_wbw
from pcfa_workbench.oca import build_delay_oca, build_sample_oca, build_signal_oca


@pytest.fixture
def test_config():
    """Settings with the default ceilings and sequential execution"""
    return UnitTestConfig(WORKERS=1)


@pytest.fixture(scope="session")
def expo():
    return validate_system(build_expo())


@pytest.fixture(scope="session")
def expo_printed():
    return validate_system(build_expo(as_printed=True))


@pytest.fixture(scope="session")
def poly():
    return validate_system(build_poly())


@pytest.fixture(scope="session")
def wbw():
    return validate_system(build_wbw())


@pytest.fixture(scope="session")
def expo_wbw():
    return validate_system(build_expo_wbw())


@pytest.fixture(scope="session")
def expo_wbw_printed():
    return validate_system(build_expo_wbw(as_printed=True))


@pytest.fixture(scope="session")
def poly_wbw():
    return validate_system(build_poly_wbw())


@pytest.fixture(scope="session")
def sample_oca():
    """Three cells c d d stepping through p/r/s states, accepted at t = 3"""
    return build_sample_oca()


@pytest.fixture(scope="session")
def signal_oca():
    return build_signal_oca()


@pytest.fixture(scope="session")
def delay_oca():
    return build_delay_oca(3)


@pytest.fixture
def cli(capsys):
    """Run the CLI in-process; returns (exit code, stdout, stderr)"""
    def invoke(*argv):
        code = main([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return invoke
