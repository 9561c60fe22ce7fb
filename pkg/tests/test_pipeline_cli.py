import copy
import json
import subprocess
import sys

import pytest

from cubic14.cli import main
from cubic14.pipeline import VerifyConfig, run_verification
from cubic14.witness import (ContractError, PipelineConfig, WitnessError, construct_witness,
                             history_numerology, load_fixture, load_witness, parse_witness)

LOG = [(12, 7, 10, 64), (11, 7, 5, 34), (10, 7, 1, 12)]


def _strip_ms(report_dict):
    out = copy.deepcopy(report_dict)
    for c in out["checks"]:
        c.pop("ms")
    return out


def test_load_k3_fixture():
    b = load_fixture("k3_genus7_p7")
    assert b.ambient_dim == 7 and b.prime == 65521
    assert b.expected["degree"] == 12 and b.expected["genus"] == 7
    assert len(b.generators) == 10


def test_load_surface_fixture(surface_bundle):
    e = surface_bundle.expected
    assert (e["degree"], e["genus"], e["quadrics"], e["cubics"], e["euler"], e["h0_normal_in_cubic"]) == \
        (10, 7, 1, 12, 26, 15)
    assert surface_bundle.ambient_dim == 5 and len(surface_bundle.lines) == 2
    assert history_numerology(surface_bundle) == LOG


def test_load_by_bundled_name(tmp_path):
    assert load_witness("surface_typeII_p5.json").ambient_dim == 5
    with pytest.raises(FileNotFoundError):
        load_witness(tmp_path / "missing.json")


def test_truncated_file_reports_position(tmp_path, surface_bundle):
    text = surface_bundle.to_json()
    path = tmp_path / "cut.json"
    path.write_text(text[: len(text) // 2])
    with pytest.raises(WitnessError) as err:
        load_witness(path)
    assert err.value.line is not None and err.value.column is not None


def test_bad_generator_reports_position(surface_bundle):
    text = surface_bundle.to_json()
    g = surface_bundle.generators[1]
    bad = g.replace("*", "**", 1)
    edited = text.replace(g, bad)
    with pytest.raises(WitnessError) as err:
        parse_witness(edited)
    line = edited.splitlines()[err.value.line - 1]
    assert line[err.value.column - 2: err.value.column] == "**"


def test_inhomogeneous_generator_rejected(surface_bundle):
    d = surface_bundle.to_dict()
    d["generators"] = d["generators"] + ["x0^2 + x1"]
    with pytest.raises(WitnessError, match="homogeneous"):
        parse_witness(json.dumps(d))


def test_prime_mismatch(surface_bundle):
    with pytest.raises(WitnessError, match="prime mismatch"):
        parse_witness(surface_bundle.to_json(), prime=32003)
    d = surface_bundle.to_dict()
    d["prime"] = 65520
    with pytest.raises(WitnessError):
        parse_witness(json.dumps(d))


def test_construct_seed0_history():
    b = construct_witness(0)
    assert history_numerology(b) == LOG
    assert [h["ambient"] for h in b.history] == [7, 6, 5]


def test_distinct_seeds_distinct_generators():
    a, b = construct_witness(2), construct_witness(3)
    assert a.generators != b.generators
    assert history_numerology(a) == history_numerology(b) == LOG


def test_construct_at_another_prime():
    b = construct_witness(0, PipelineConfig(prime=32003))
    assert b.prime == 32003 and history_numerology(b) == LOG


def test_corrupted_k3_fixture_breaks_contract():
    k3 = load_fixture("k3_genus7_p7")
    k3.generators = k3.generators[1:]
    with pytest.raises(ContractError):
        construct_witness(0, PipelineConfig(k3=k3))


def test_fixture_report_passes(fixture_report):
    d = fixture_report.to_dict()
    assert d["verdict"] == "pass" and fixture_report.failed() == []
    assert d["surface_type"] == "II"
    assert set(d) >= {"verdict", "prime", "seed", "checks"}
    for c in d["checks"]:
        assert set(c) == {"name", "anchor", "expected", "computed", "pass", "ms"}
        assert c["anchor"]
    names = [c["name"] for c in d["checks"]]
    assert names[:10] == ["nondegenerate", "degree", "sectional_genus", "chi_O", "smooth", "h0_ideal_2",
                          "quadric_rank", "line1_on_surface", "line2_on_surface", "lines_skew"]
    assert names.index("h0_normal_in_quadric") < names.index("h0_normal_in_P5") < names.index("h0_normal_in_cubic")
    assumed = {a["name"] for a in d["assumptions"]}
    assert {"K2", "H1_normal_vanishing", "H2_ideal_twist_vanishing"} <= assumed


def test_round_trip_three_seeds(tmp_path):
    for seed in (4, 5, 6):
        path = tmp_path / f"w{seed}.json"
        construct_witness(seed).save(path)
        report = run_verification(load_witness(path), VerifyConfig(seed=seed))
        assert report.verdict, report.failed()


def test_timeout_gives_partial_report(surface_bundle):
    report = run_verification(surface_bundle, VerifyConfig(timeout_secs=0))
    assert report.aborted and "timeout" in report.aborted
    assert not report.verdict and report.to_dict()["verdict"] == "fail"


def test_wrong_ambient_aborts():
    report = run_verification(load_fixture("k3_genus7_p7"))
    assert report.aborted.startswith("engine error")


def test_cli_verify_is_deterministic(tmp_path, fixture_report):
    out = tmp_path / "report.json"
    assert main(["verify", "--witness", "surface_typeII_p5.json", "--out", str(out)]) == 0
    assert _strip_ms(json.loads(out.read_text())) == _strip_ms(fixture_report.to_dict())


def test_cli_construct_then_verify(tmp_path):
    w = tmp_path / "w.json"
    assert main(["construct", "--seed", "7", "--out", str(w)]) == 0
    assert history_numerology(load_witness(w)) == LOG
    assert main(["verify", "--witness", str(w), "--out", str(tmp_path / "r.json")]) == 0


def test_cli_lattice(capsys):
    assert main(["lattice", "--s2", "38", "--deg", "10"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["discriminant"] == 14 and out["admissible"] and out["square_free"]


def test_cli_invariants_and_groebner(capsys):
    assert main(["invariants"]) == 0
    inv = json.loads(capsys.readouterr().out)
    assert (inv["degree"], inv["genus"], inv["chi"], inv["quadrics"], inv["cubics"]) == (10, 7, 2, 1, 12)
    assert main(["groebner", "--witness", "k3_genus7_p7"]) == 0
    gb = json.loads(capsys.readouterr().out)
    assert gb["size"] == 15 and gb["order"] == "grevlex"


def test_cli_usage_errors(capsys, tmp_path):
    assert main(["verify", "--bogus"]) == 2
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["verify", "--witness", str(tmp_path / "nope.json")]) == 2
    assert main(["verify", "--prime", "32003"]) == 2
    capsys.readouterr()


def test_cli_engine_error_exit_code(tmp_path):
    assert main(["verify", "--witness", "k3_genus7_p7", "--out", str(tmp_path / "r.json")]) == 3


def test_cli_check_failure_exit_code(tmp_path, surface_bundle):
    b = copy.deepcopy(surface_bundle)
    b.expected["cubics"] = 13
    path = tmp_path / "edited.json"
    b.save(path)
    out = tmp_path / "r.json"
    assert main(["verify", "--witness", str(path), "--out", str(out), "--timeout-secs", "3600"]) == 1
    report = json.loads(out.read_text())
    assert [c["name"] for c in report["checks"] if not c["pass"]] == ["h0_ideal_3"]


def test_python_dash_m_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubic14", "lattice", "--s2", "38", "--deg", "10"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and '"discriminant": 14' in proc.stdout
