"""Verification harness: campaigns, configuration, reports."""

import csv
import io
import json

import pytest

from mbrg.harness import (
    DEFAULT_CONFIG,
    HarnessError,
    THEOREMS,
    VerificationCase,
    load_config,
    report,
    run_campaign,
    verify,
)

FAST_THEOREMS = [
    "transversal-lemma", "k1-equivalence", "k1-paths", "paw",
    "spoiler-copy", "move-count", "invariants", "sandwich",
]


@pytest.mark.parametrize("theorem", FAST_THEOREMS)
def test_fast_theorems_all_pass(theorem):
    cases = verify(theorem)
    assert cases, "campaign produced no cases"
    for c in cases:
        assert c.ok, f"{c.theorem} {c.instance}: expected {c.expected}, got {c.got}"
        assert c.millis >= 0


def test_paths_theorem_exact_tier():
    cases = verify("paths", params={"gs": ("path(2)",), "ks": (1, 2, 3, 4, 5)})
    assert all(c.ok for c in cases)
    assert all(c.method == "exact-solver" for c in cases)
    by_k = {c.instance: c.got for c in cases}
    assert by_k["corona(path(2),path(5))"] == "S"
    assert by_k["corona(path(2),path(3))"] == "R"


def test_paths_theorem_strategy_tier():
    cases = verify("paths", params={"gs": ("path(2)",), "ks": (6, 7)})
    assert all(c.ok for c in cases)
    assert all(c.method.startswith("strategy-validation") for c in cases)


def test_cycles_theorem_selected():
    cases = verify("cycles", params={"gs": ("k1",), "ks": (3, 4, 5)})
    got = {c.instance: c.got for c in cases}
    assert got["corona(k1,cycle(3))"] == "S"
    assert got["corona(k1,cycle(4))"] == "R"
    assert all(c.ok for c in cases)


def test_run_campaign_selection_and_unknown():
    cases = run_campaign(["paw", "move-count"])
    assert {c.theorem for c in cases} == {"paw", "move-count"}
    with pytest.raises(HarnessError):
        verify("fermat-last")


def test_theorem_catalog_is_complete():
    assert set(THEOREMS) == {
        "transversal-lemma", "k1-equivalence", "paths", "k1-paths", "cycles",
        "paw", "spoiler-copy", "move-count", "k1-diam2", "invariants",
        "sandwich",
    }


# -- config ----------------------------------------------------------------------


def test_load_config(tmp_path):
    p = tmp_path / "caps.conf"
    p.write_text("# overrides\nsolver_cap = 14\nvalue_cap=10  # inline\n\n")
    cfg = load_config(str(p))
    assert cfg["solver_cap"] == 14 and cfg["value_cap"] == 10
    assert cfg["validation_cap"] == DEFAULT_CONFIG["validation_cap"]


def test_load_config_rejects_unknown_keys(tmp_path):
    p = tmp_path / "caps.conf"
    p.write_text("warp_factor=9\n")
    with pytest.raises(HarnessError):
        load_config(str(p))
    p.write_text("solver_cap twelve\n")
    with pytest.raises(HarnessError):
        load_config(str(p))


def test_config_caps_are_honoured():
    with pytest.raises(HarnessError):
        # petersen cone has 11 vertices; a solver cap of 4 must refuse it
        verify("paw", config={"solver_cap": 3})


# -- reports ----------------------------------------------------------------------


SAMPLE = [
    VerificationCase("t", "path(2)", "R", "R", "exact-solver", 1.5),
    VerificationCase("t", "path(3)", "R", "S", "exact-solver", 2.0),
]


def test_report_json():
    data = json.loads(report("json", SAMPLE))
    assert data[0]["instance"] == "path(2)"
    assert list(data[0]) == ["theorem", "instance", "expected", "got",
                             "method", "millis"]


def test_report_csv():
    rows = list(csv.reader(io.StringIO(report("csv", SAMPLE))))
    assert rows[0] == ["theorem", "instance", "expected", "got", "method",
                       "millis"]
    assert rows[2][3] == "S"


def test_report_markdown():
    text = report("markdown", SAMPLE)
    lines = text.strip().splitlines()
    assert lines[0].startswith("| theorem |")
    assert len(lines) == 2 + len(SAMPLE)


def test_report_unknown_format():
    with pytest.raises(HarnessError):
        report("xml", SAMPLE)


def test_case_ok_property():
    assert SAMPLE[0].ok and not SAMPLE[1].ok
