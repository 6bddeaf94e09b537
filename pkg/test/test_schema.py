import json

import pytest

from immgate.util import check_schema, dumps, load, loads, tag
from immgate.util.error import SchemaError


def test_tag():
    assert tag("quad-system") == "quad-system/1"


def test_dumps_is_canonical():
    text = dumps("arf", {"genus": 1, "arf": 0})
    assert text.endswith("}\n")
    assert list(json.loads(text)) == ["arf", "genus", "schema"]
    assert text == dumps("arf", {"arf": 0, "genus": 1})


def test_loads_accepts_untagged_and_minor_versions():
    assert loads('{"r": 1}', "quad-system") == {"r": 1}
    assert loads('{"schema": "quad-system/1.3"}', "quad-system")["schema"] == "quad-system/1.3"


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"schema": "quad-system/2"}',
        '{"schema": "lifting-instance/1"}',
        '{"schema": "quad-system"}',
        '{"schema": "quad-system/one"}',
        '{"schema": 1}',
    ],
)
def test_loads_rejects(text):
    with pytest.raises(SchemaError):
        loads(text, "quad-system")


def test_load_from_disk(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(dumps("bernoulli", {"r": 1}), encoding="utf-8")
    assert load(path, "bernoulli")["r"] == 1
    with pytest.raises(SchemaError):
        load(path, "arf")


def test_check_schema_requires_object():
    with pytest.raises(SchemaError):
        check_schema([], "quad-system")
