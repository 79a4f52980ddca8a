import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from oitkit.scenarios import chain3_models, network_model, penguin_model

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def penguin():
    return penguin_model()


@pytest.fixture
def chain3():
    return chain3_models()


@pytest.fixture
def network4():
    return network_model(4)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
