import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.config.settings import settings
from gtcf.ff.field import make_field
from gtcf.gtf.field import GTransformalField

REPO = Path(__file__).resolve().parents[1]


@pytest.fixture(autouse=True, scope="session")
def _isolated_dirs(tmp_path_factory):
    """Logs and default sessions go to a scratch directory; catalogs come from the repo."""
    settings.logs_dir = str(tmp_path_factory.mktemp("logs"))
    settings.session_dir = str(tmp_path_factory.mktemp("sessions"))
    settings.data_dir = str(REPO / "data")
    yield


@pytest.fixture
def f4():
    return make_field(2, 2)


@pytest.fixture
def f9():
    return make_field(3, 2)


@pytest.fixture
def f9_frob(f9):
    """GF(9) with x ↦ x^3."""
    return GTransformalField.cyclic_frobenius(f9, 2, 1)


@pytest.fixture
def f4_frob(f4):
    """GF(4) with x ↦ x^2."""
    return GTransformalField.cyclic_frobenius(f4, 2, 1)
