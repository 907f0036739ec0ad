from pathlib import Path

import pytest

from milnorcert.app.milnor.arrangement import Arrangement, Hyperplane
from milnorcert.app.milnor.cyclo import CycloNum
from milnorcert.app.milnor.families import braid, generic, hessian


def lines(*rows, order=1, labels=None):
    """Line arrangement in P^2 from integer rows."""
    planes = []
    for k, row in enumerate(rows):
        normal = tuple(CycloNum.rational(order, v) for v in row)
        planes.append(Hyperplane(normal, labels[k] if labels else ""))
    return Arrangement(len(rows[0]), order, tuple(planes))


@pytest.fixture(autouse=True)
def _log_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("MILNORCERT_LOG_DIR", str(tmp_path / "logs"))


@pytest.fixture
def triangle():
    return lines((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def braid_lines():
    # x, y, z, x - y, x - z, y - z
    return braid()


@pytest.fixture
def pencil_plus_line():
    # three concurrent lines through (0:0:1) plus the line at infinity
    return lines((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))


@pytest.fixture
def two_triple_points():
    # triple points at (0:0:1) and (1:1:1) with no line in common
    return lines((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, -1), (0, 1, -1), (1, 1, -2))


@pytest.fixture(scope="session")
def generic6():
    return generic(6, seed=0)


@pytest.fixture(scope="session")
def hessian3():
    return hessian(b=3)


@pytest.fixture
def write_arrangement(tmp_path):
    def _write(arrangement, name="input.arr") -> Path:
        path = tmp_path / name
        path.write_text(arrangement.canonical_text, encoding="utf-8")
        return path

    return _write
