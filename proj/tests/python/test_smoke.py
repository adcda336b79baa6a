import json
import os
import pathlib
import subprocess

import pytest

import galstruct

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCENARIOS = pathlib.Path(os.environ.get("GALSTRUCT_SCENARIOS", ROOT / "scenarios"))
CLI = os.environ.get("GALSTRUCT_CLI")


def scenario(name):
    return json.loads((SCENARIOS / name).read_text())


def test_catalog():
    groups = {g["name"]: g for g in galstruct.catalog()}
    assert groups["S3"]["order"] == 6
    assert groups["S3"]["d"] == 2
    assert groups["C2xC2"]["d"] == 2


def test_counts():
    assert galstruct.compute_n(6, 4, 1) == 13
    assert galstruct.compute_n_prime(2, 4, 1) == 4


def test_cohomology_orders():
    assert galstruct.cohomology_orders("C2", 0, [1, 1], 0) == [2]
    assert galstruct.cohomology_orders("C2", 0, [1, -1], 1) == [2]
    assert galstruct.cohomology_orders("C3", 0, [1, 1, 1], 2) == [3]


def test_run_scenario_passes_and_is_deterministic():
    cfg = scenario("A_c2_swap_z3.json")
    report, code = galstruct.run_scenario(cfg)
    assert code == galstruct.EXIT_PASS
    assert report["summary"]["status"] == "pass"
    assert report["counts"]["n"] == 1
    text1, _ = galstruct.run_scenario_text(cfg)
    text2, _ = galstruct.run_scenario_text(str(SCENARIOS / "A_c2_swap_z3.json"))
    assert text1 == text2


def test_seed_override():
    cfg = scenario("C3t_trivial_two_points.json")
    report, code = galstruct.run_scenario(cfg, seed=11)
    assert code == galstruct.EXIT_PASS
    assert report["scenario"]["seed"] == 11


def test_config_error_names_the_entry():
    cfg = scenario("A_c2_swap_z3.json")
    cfg["gset"][1][2] = 7
    with pytest.raises(galstruct.ConfigError, match=r"gset\[1\]\[2\]"):
        galstruct.run_scenario(cfg)
    assert issubclass(galstruct.ConfigError, galstruct.GalstructError)


def test_relation_modules():
    r = galstruct.relation_module("S3", [1, 3])
    assert r["rank"] == 2 * 6 - 5
    assert r["m"] == 3
    assert set(r["checks"].values()) == {"pass"}
    v = galstruct.schanuel("C2xC2", [1, 2], [1, 2, 3])
    assert v["fingerprints_equal"]
    assert v["iso"] != "noniso"


@pytest.mark.skipif(CLI is None, reason="command line tool not built")
def test_cli_exit_codes(tmp_path):
    bad = ROOT / "tests" / "data" / "bad_gset.json"
    r = subprocess.run([CLI, "run", "--scenario", str(bad)], capture_output=True, text=True)
    assert r.returncode == galstruct.EXIT_CONFIG
    assert "gset[1][2]" in r.stderr
    out = tmp_path / "a.json"
    r = subprocess.run([CLI, "run", "--scenario", str(SCENARIOS / "A_c2_swap_z3.json"), "--out", str(out)])
    assert r.returncode == galstruct.EXIT_PASS
    text, _ = galstruct.run_scenario_text(str(SCENARIOS / "A_c2_swap_z3.json"))
    assert out.read_text() == text


def test_corpus_matches_schemas():
    jsonschema = pytest.importorskip("jsonschema")
    scenario_schema = json.loads((ROOT / "schema" / "scenario.schema.json").read_text())
    report_schema = json.loads((ROOT / "schema" / "report.schema.json").read_text())
    files = sorted(SCENARIOS.glob("*.json"))
    assert len(files) >= 5
    for f in files:
        cfg = json.loads(f.read_text())
        jsonschema.validate(cfg, scenario_schema)
    # one full report is enough here; the acceptance binary runs them all
    report, _ = galstruct.run_scenario(json.loads((SCENARIOS / "B_c2_trivial_z4.json").read_text()))
    jsonschema.validate(report, report_schema)
    bad = json.loads((ROOT / "tests" / "data" / "bad_gset.json").read_text())
    jsonschema.validate(bad, scenario_schema)  # range errors are semantic, caught by the loader
