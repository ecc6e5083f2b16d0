import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(Path(__file__).resolve().parent))

from spinecensus.gluing import GluingTable, parse_gluing_table  # noqa: E402
from spinecensus.perm import IDENTITY  # noqa: E402


def doubled_tetrahedron():
    return GluingTable.from_gluings(2, [(0, f, 1, f, IDENTITY) for f in range(4)])


def load_signatures(n, name="sig.txt"):
    return (FIXTURES / f"n{n}" / name).read_text().split()


@pytest.fixture(scope="session")
def manifest():
    return json.loads((FIXTURES / "manifest.json").read_text())


@pytest.fixture(scope="session")
def sol_table():
    return parse_gluing_table((FIXTURES / "sol_6tet.txt").read_text())


@pytest.fixture
def doubled():
    return doubled_tetrahedron()
