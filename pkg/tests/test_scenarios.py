import json

import pytest

from banlab.checks import CATALOG
from banlab.cli import _load, bundled_scenarios, main, run_scenario
from banlab.errors import ParseError
from banlab.scenario import load_scenario

FAST = [
    "spaces_basic",
    "delta_swap",
    "collapse",
    "ind_hom",
    "functor_l1",
    "bimodule",
    "bimodule_p3",
    "group_z2",
    "faults",
    "tate_phase",
    "tate_phase_p5",
    "dagger",
    "iwasawa_tower",
    "locally_constant",
    "module_blocks",
    "scalar_axioms",
    "scalar_axioms_p3",
    "duality",
    "adjunction",
    "adjunction_p3",
]

SLOW = [
    "universal_property",
    "universal_property_p3",
    "operator_norms",
    "operator_norms_p5",
    "projective_oracle",
    "grading_window",
    "grading_window_p3",
    "rep_module",
    "rep_module_p5",
    "group_suite",
    "group_suite_p3",
    "descent_qsqrt2",
    "descent_qi",
    "descent_q5",
    "descent_zeta5",
    "descent_biquadratic",
]


def test_every_scenario_is_listed():
    names = set(bundled_scenarios())
    assert set(FAST) | set(SLOW) == names


@pytest.mark.parametrize("name", FAST)
def test_fast_scenarios_pass(name):
    report = run_scenario(_load(name))
    assert report["summary"]["fail"] == 0, report["checks"]
    assert report["summary"]["error"] == 0, report["checks"]


@pytest.mark.parametrize("name", SLOW)
def test_slow_scenarios_pass(name):
    report = run_scenario(_load(name))
    assert report["summary"]["fail"] == 0, [
        c for c in report["checks"] if c["status"] in ("fail", "error")
    ]
    assert report["summary"]["error"] == 0


def test_reports_byte_identical_across_runs():
    for name in ("group_z2", "descent_qsqrt2", "universal_property"):
        a = json.dumps(run_scenario(_load(name)), sort_keys=True)
        b = json.dumps(run_scenario(_load(name)), sort_keys=True)
        assert a == b


def test_seed_recorded_and_changes_rng():
    scn = _load("universal_property")
    rep1 = run_scenario(scn, seed=1)
    assert rep1["seed"] == 1
    rep2 = run_scenario(_load("universal_property"), seed=2)
    assert rep2["seed"] == 2


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "group_z2"]) == 0
    capsys.readouterr()
    # an injected failure: wrong expected norm
    bad = tmp_path / "bad.toml"
    bad.write_text(
        """
name = "bad"
[field]
backend = "arch"
[[space]]
id = "V"
flavor = "sum"
weights = ["1", "1"]
[[check]]
kind = "norm_value"
space = "V"
vector = ["3", "4"]
expect = "5"
"""
    )
    assert main(["verify", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "witness" in out and "fail" in out
    # parse error -> 2
    broken = tmp_path / "broken.toml"
    broken.write_text("name = [unclosed")
    assert main(["verify", str(broken)]) == 2
    # unknown check -> 2
    unknown = tmp_path / "unknown.toml"
    unknown.write_text(
        """
name = "unknown"
[field]
backend = "arch"
[[check]]
kind = "no_such_check"
"""
    )
    assert main(["verify", str(unknown)]) == 2
    # missing scenario -> 2
    assert main(["verify", "does_not_exist_anywhere"]) == 2


def test_cli_json_output(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "spaces_basic", "--json", str(out)]) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert data["scenario"] == "spaces_basic"
    assert all(rec["timing_ms"] is None for rec in data["checks"])
    names = [rec["name"] for rec in data["checks"]]
    assert names == sorted(names)
    # --timings opts into wall-clock values
    assert main(["verify", "spaces_basic", "--json", str(out), "--timings"]) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert any(rec["timing_ms"] is not None for rec in data["checks"])


def test_cli_list_and_catalog(capsys):
    assert main(["--list"]) == 0
    listed = capsys.readouterr().out.split()
    assert "group_z2" in listed and len(listed) == len(bundled_scenarios())
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    assert "scenarios/" in out
    assert len(CATALOG) >= 20
    listed_names = set(bundled_scenarios().values())
    for _, scenario_file in CATALOG:
        assert scenario_file in listed_names


def test_fault_scenario_reports_witness_shape():
    report = run_scenario(_load("faults"))
    for rec in report["checks"]:
        assert rec["status"] == "pass"
        assert rec["witness"]["failed_axioms"]


def test_scenario_parse_errors():
    with pytest.raises(ParseError):
        load_scenario("name = 'x'\n[field]\nbackend = 'weird'\n")
    with pytest.raises(ParseError):
        load_scenario(
            """
name = "dup"
[field]
backend = "arch"
[[space]]
id = "V"
weights = ["1"]
[[space]]
id = "V"
weights = ["1"]
"""
        )


def test_precision_flag_threads_through():
    rep = run_scenario(_load("spaces_basic"), precision=512)
    assert rep["precision_budget"] == 512


def test_injected_fault_exits_one_with_witness(tmp_path, capsys):
    scenario = tmp_path / "fault.toml"
    scenario.write_text(
        """
name = "fault_run"
[field]
backend = "arch"
[[group]]
id = "G"
kind = "cyclic"
n = 4
[[bialgebra]]
id = "A"
kind = "group"
group = "G"
fault = "comult_sign"
[[check]]
kind = "bialgebra_axioms"
target = "A"
"""
    )
    assert main(["verify", str(scenario)]) == 1
    out = capsys.readouterr().out
    assert "fail" in out and "witness" in out and "basis" in out


def test_cli_seed_and_precision_flags(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "universal_property", "--seed", "99", "--precision", "1024", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["seed"] == 99 and data["precision_budget"] == 1024


def test_budget_exhaustion_surfaces_as_error_record():
    from banlab import checks
    from banlab.errors import UndecidableComparison

    def undecidable_check(scn, params, rng):
        raise UndecidableComparison("synthetic: refinement budget exhausted")

    checks.REGISTRY["_synthetic_undecidable"] = undecidable_check
    try:
        scn = load_scenario(
            """
name = "budget"
[field]
backend = "arch"
[[check]]
kind = "_synthetic_undecidable"
"""
        )
        report = run_scenario(scn)
        assert report["summary"]["error"] == 1
        rec = report["checks"][0]
        assert rec["status"] == "error"
        assert "budget" in rec["witness"]
    finally:
        del checks.REGISTRY["_synthetic_undecidable"]


def test_bad_flavor_and_zero_weight_are_parse_errors():
    with pytest.raises(ParseError):
        load_scenario(
            """
name = "bad_flavor"
[field]
backend = "arch"
[[space]]
id = "V"
flavor = "weird"
weights = ["1"]
"""
        )
    with pytest.raises(ParseError):
        load_scenario(
            """
name = "zero_weight"
[field]
backend = "arch"
[[space]]
id = "V"
weights = ["0"]
"""
        )
