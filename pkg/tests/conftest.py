import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def corpus_dir():
    return Path(resources.files("invforms").joinpath("corpus"))


@pytest.fixture(scope="session")
def data_dir():
    return Path(__file__).parent / "data"
