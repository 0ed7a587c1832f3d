import sys
from pathlib import Path

import numpy as np
import pytest

import sapdenoise as sd

sys.path.insert(0, str(Path(__file__).parent))

from helpers import GOLDEN_9X9  # noqa: E402


@pytest.fixture
def golden_plane() -> sd.Plane:
    return sd.Plane.from_array(GOLDEN_9X9)


@pytest.fixture
def golden_image() -> sd.Image:
    return sd.Image.from_array(GOLDEN_9X9[:, :, np.newaxis])


def pytest_runtest_logreport(report):
    """One verdict line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    verdict = "PASS" if report.passed else "FAIL"
    print(f"\n[acceptance] {verdict} {name}", flush=True)
