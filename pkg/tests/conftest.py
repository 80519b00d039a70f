from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from cantorsim.scenarios import FIXTURE_FILES, write_fixtures

settings.register_profile(
    "desk", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("desk")


@pytest.fixture()
def fixture_dir(tmp_path):
    write_fixtures(str(tmp_path))
    return tmp_path


def resolve_argv(argv, directory) -> list[str]:
    """Point a scenario's file arguments at the materialized fixture dir."""
    return [str(directory / a) if a in FIXTURE_FILES else a for a in argv]
