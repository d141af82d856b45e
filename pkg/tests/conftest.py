from __future__ import annotations

import pytest

from e67lie.golden import packaged_golden_path, parse_golden_file
from e67lie.roots import RootSystemType
from e67lie.verify import build_structures


@pytest.fixture(scope="session")
def e6ctx():
    return build_structures(RootSystemType.E6)


@pytest.fixture(scope="session")
def e7ctx():
    return build_structures(RootSystemType.E7)


@pytest.fixture(scope="session")
def both_ctx(e6ctx, e7ctx):
    return {RootSystemType.E6: e6ctx, RootSystemType.E7: e7ctx}


@pytest.fixture(scope="session")
def golden():
    return parse_golden_file(packaged_golden_path())


@pytest.fixture(scope="session")
def golden_path():
    return str(packaged_golden_path())
