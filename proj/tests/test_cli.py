"""Golden tests for the command-line driver.

The binary path arrives in TORIC_CLI and the fixture directory in
TORIC_FIXTURES (both set by the ctest harness).
"""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ["TORIC_CLI"]
FIXTURES = pathlib.Path(os.environ["TORIC_FIXTURES"])


def run(*args, expect=0):
    result = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=120
    )
    assert result.returncode == expect, (
        f"exit {result.returncode} != {expect}; stderr: {result.stderr}"
    )
    return result.stdout


def fixture(name):
    return str(FIXTURES / name)


def test_toric_extensions_of_the_diamond():
    out = run("extensions", "--toric", fixture("diamond.json"))
    assert out == "(1,2,3,4)\n(1,3,2,4)\n(1,4,2,3)\n(1,4,3,2)\n"


def test_methods_agree_on_the_diamond():
    expected = run("extensions", "--toric", fixture("diamond.json"))
    for method in ("brute", "partition", "recursive"):
        assert run("extensions", "--toric", "--method", method,
                   fixture("diamond.json")) == expected
    assert run("extensions", "--toric", "--source", "3",
               fixture("diamond.json")) == expected


def test_ordinary_extensions_of_the_diamond():
    out = run("extensions", fixture("diamond.json"))
    assert out == "(1,2,3,4)\n(1,3,2,4)\n"


def test_extension_count_of_the_branching_example():
    out = run("extensions", "--toric", "--count", fixture("branching_quiver.json"))
    assert out == "16\n"


def test_psi_golden_values():
    assert run("psi", "--toric", fixture("diamond.json")) == \
        "-2 / ((x1-x2)(x1-x3)(x2-x4)(x3-x4))\n"
    assert run("psi", fixture("disconnected_poset.json")) == "0\n"
    assert run("psi", fixture("chain3.json")) == "1 / ((x1-x2)(x2-x3))\n"


def test_psi_json_structure():
    doc = json.loads(run("psi", "--toric", "--json", fixture("diamond.json")))
    assert doc["nvars"] == 4
    assert doc["numerator"] == [{"coefficient": "-2", "exponents": [0, 0, 0, 0]}]
    assert doc["denominator"] == [[1, 2], [1, 3], [2, 4], [3, 4]]


def test_flip_sequence_between_class_members():
    out = run("flip", fixture("diamond.json"), fixture("diamond_flipped.json"))
    assert out == "4\n"


def test_flip_sequence_with_fixed_source_avoids_the_neighborhood():
    out = run("flip", fixture("diamond.json"), fixture("diamond_flipped.json"),
              "--fix-source", "1")
    flipped = {int(v) for v in out.split()}
    assert flipped and flipped.isdisjoint({1, 2, 3})


def test_flip_reports_inequivalent_orientations():
    out = run("flip", fixture("diamond.json"), fixture("diamond_d2.json"), expect=1)
    assert out == "not equivalent\n"


def test_flip_rejects_mismatched_graphs():
    run("flip", fixture("diamond.json"), fixture("chain3.json"), expect=2)


def test_verify_small_suites_pass():
    out = run("verify", "counting", "--max-k", "1", "--max-j", "1")
    assert "FAIL" not in out and out.rstrip().endswith("PASS")

    doc = json.loads(run("verify", "kk", "--max-k", "1", "--max-j", "1", "--json"))
    assert doc["suite"] == "kk"
    assert doc["pass"] is True
    assert doc["instances"] == 4


def test_verify_rejects_unknown_suites():
    run("verify", "bogus", expect=2)


def test_malformed_document_is_an_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "arcs": [[1, 2], [2, 3], [3, 1]]}')
    run("psi", str(bad), expect=2)
    missing = tmp_path / "missing.json"
    run("psi", str(missing), expect=2)


def test_resource_cap_is_reported():
    run("extensions", "--toric", "--cap", "2", fixture("diamond.json"), expect=3)


def test_golden_outputs_are_byte_stable():
    for args in (
        ("extensions", "--toric", fixture("diamond.json")),
        ("psi", "--toric", fixture("diamond.json")),
        ("verify", "counting", "--max-k", "1", "--max-j", "1", "--seed", "5"),
    ):
        assert run(*args) == run(*args)


@pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.json")))
def test_every_fixture_loads(name):
    run("extensions", "--count", fixture(name))
