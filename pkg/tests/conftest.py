from __future__ import annotations

import pytest

from excfact.families import petersen


@pytest.fixture(scope="session")
def petersen_graph():
    return petersen()
