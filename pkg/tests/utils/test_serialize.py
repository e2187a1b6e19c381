from __future__ import annotations

import json
import math

from minimode.utils.serialize import (
    SCHEMA_VERSION,
    UNSET,
    recursive_merge,
    render_csv,
    render_json,
    write_text,
)


def test_recursive_merge_merges_nested_and_skips_unset() -> None:
    merged = recursive_merge(
        {"a": 1, "nested": {"x": 1, "y": UNSET}},
        {"nested": {"y": 2}, "b": 3},
    )
    assert merged == {"a": 1, "b": 3, "nested": {"x": 1, "y": 2}}


def test_recursive_merge_later_wins_and_skips_none() -> None:
    assert recursive_merge({"a": {"b": 1}}, None, {"a": 5}) == {"a": 5}
    assert recursive_merge() == {}


def test_render_csv_header_and_cells() -> None:
    text = render_csv(
        [{"name": "hsm", "value": 0.1, "ok": True, "rho": math.inf, "extra": 1}],
        ["name", "value", "ok", "rho", "missing"],
    )
    lines = text.splitlines()
    assert lines[0] == f"# schema={SCHEMA_VERSION}"
    assert lines[1] == "name,value,ok,rho,missing"
    assert lines[2] == "hsm,0.1,true,inf,"


def test_render_json_adds_schema_and_handles_numpy_and_inf() -> None:
    import numpy as np

    payload = json.loads(render_json({"value": np.float64(2.5), "rho": -math.inf, "xs": (1, 2)}))
    assert payload == {"schema": SCHEMA_VERSION, "value": 2.5, "rho": "-inf", "xs": [1, 2]}


def test_write_text_creates_parents(tmp_path) -> None:
    target = tmp_path / "a" / "b" / "out.csv"
    write_text("hello", target)
    assert target.read_text() == "hello"
    write_text("ignored", None)
