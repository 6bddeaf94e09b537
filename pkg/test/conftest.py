import json
from pathlib import Path
from typing import Any, Callable

import pytest

from immgate.algebra import FGAbelianGroup, IntMatrix
from immgate.env.config import CONFIG_ENV, TABLE_ENV
from immgate.env.messages import WARNINGS, set_verbosity
from immgate.obstruction import ManifoldClassData, MiddleForms
from immgate.tables import use_table


E8_ROWS = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]


@pytest.fixture(autouse=True)
def clean_state(monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
    """Run every test without config files, table overrides or extra output."""
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.delenv(TABLE_ENV, raising=False)
    monkeypatch.chdir(tmp_path)
    use_table(None)
    set_verbosity(WARNINGS)
    yield
    use_table(None)
    set_verbosity(WARNINGS)


@pytest.fixture
def e8() -> IntMatrix:
    return IntMatrix.from_rows(E8_ROWS)


@pytest.fixture
def hp2() -> ManifoldClassData:
    """Quaternionic projective plane: p = 1 + 2u + 7u^2, u^2 generates H^8."""
    return ManifoldClassData(
        m=8,
        cohomology={4: FGAbelianGroup.integers(), 8: FGAbelianGroup.integers()},
        pontryagin={1: (2,), 2: (7,)},
        middle=MiddleForms(4, (IntMatrix.from_rows([[1]]),)),
    )


@pytest.fixture
def sphere8() -> ManifoldClassData:
    return ManifoldClassData(
        m=8,
        cohomology={4: FGAbelianGroup.trivial(), 8: FGAbelianGroup.integers()},
        pontryagin={2: (0,)},
    )


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, dict[str, Any]], Path]:
    def write(name: str, doc: dict[str, Any]) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return path

    return write
