import os

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("EPL_CLI", "")
    if not path or not os.path.exists(path):
        pytest.skip("EPL_CLI not available")
    return path


@pytest.fixture(scope="session")
def data_dir():
    path = os.environ.get("EPL_DATA_DIR", "")
    if not path or not os.path.isdir(path):
        pytest.skip("EPL_DATA_DIR not available")
    return path
