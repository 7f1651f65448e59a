"""Shared fixtures: expensive spectra and the full verification battery are
computed once per session and reused by every test module."""

import pytest

from osczeta.spectrum import eigenvalues
from osczeta.verify import run_battery


@pytest.fixture(scope="session")
def spectra1():
    # Airy fast path: deep and cheap
    return (eigenvalues(1, "+", 30, 45), eigenvalues(1, "-", 30, 45))


@pytest.fixture(scope="session")
def spectra2():
    return (eigenvalues(2, "+", 12, 30), eigenvalues(2, "-", 12, 30))


@pytest.fixture(scope="session")
def spectra3():
    return (eigenvalues(3, "+", 12, 30), eigenvalues(3, "-", 12, 30))


@pytest.fixture(scope="session")
def spectra6():
    return (eigenvalues(6, "+", 12, 30), eigenvalues(6, "-", 12, 30))


@pytest.fixture(scope="session")
def battery(spectra1, spectra2, spectra3, spectra6):
    """One full verification run at the default configuration; individual
    tests assert on its check records instead of recomputing."""
    return run_battery(
        n_list=(1, 2, 3, 6), digits=50, eigencount=12,
        spectra={1: spectra1, 2: spectra2, 3: spectra3, 6: spectra6})


def battery_record(report, check_id):
    for rec in report.records:
        if rec.check_id == check_id:
            return rec
    raise AssertionError(f"no check named {check_id}")
