import json

import pytest

from heisencheck.checks import CheckReport, RunConfig, run_suite, exit_code
from heisencheck.cli import main, render_report


def strip_elapsed(text: str) -> list:
    payload = json.loads(text)
    for item in payload:
        item.pop("elapsed_ms")
    return payload


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(scan_prime_d9=23).validate()
    with pytest.raises(ValueError):
        RunConfig(t_max=1).validate()
    with pytest.raises(ValueError):
        RunConfig(lambda_mu_samples=((0, 0), (1, 1))).validate()
    RunConfig().validate()


def test_d9_suite_passes():
    reports = run_suite("d9")
    assert reports
    assert all(r.status == "pass" for r in reports)
    assert exit_code(reports) == 0


def test_chars_suite_has_the_two_recorded_failures():
    reports = run_suite("chars")
    status = {r.check_id: r.status for r in reports}
    assert status["chars.orthonormality"] == "pass"
    assert status["chars.sym2_no_invariant"] == "pass"
    assert status["chars.sym3_invariant"] == "pass"
    assert status["chars.mirror"] == "pass"
    # the two stated decomposition identities are corrected by the computation
    assert status["chars.sym2"] == "fail"
    assert status["chars.sym3"] == "fail"
    details = {r.check_id: r.details for r in reports}
    assert details["chars.sym2"]["computed"] == "chi2 + chi5"
    assert details["chars.sym3"]["computed"] == "chi1 + chi5 + chi7 + chi8"
    assert details["chars.sym3"]["stated_total_degree"] == 34
    assert exit_code(reports) == 1


def normalize_elapsed(text: str) -> str:
    payload = json.loads(text)
    for item in payload:
        item["elapsed_ms"] = 0
    return json.dumps(payload, indent=2, sort_keys=True)


def test_json_report_deterministic():
    reports = run_suite("d9")
    again = run_suite("d9")
    # byte-identical apart from the elapsed_ms sidecar field
    assert normalize_elapsed(render_report(reports, "json")) == normalize_elapsed(
        render_report(again, "json")
    )
    payload = json.loads(render_report(reports, "json"))
    ids = [item["check_id"] for item in payload]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)
    for item in payload:
        assert set(item) == {"check_id", "status", "details", "elapsed_ms"}


def test_render_text_summary_and_order():
    reports = [
        CheckReport("zz.ok", "pass", {}, 1),
        CheckReport("aa.bad", "fail", {}, 2),
        CheckReport("mm.warn", "warn", {}, 3),
    ]
    text = render_report(reports, "text")
    lines = text.strip().splitlines()
    assert lines[0].startswith("aa.bad")
    assert lines[1].startswith("mm.warn")
    assert lines[-1] == "1 passed, 1 failed, 1 warnings"
    empty = render_report([], "text")
    assert empty.strip() == "0 passed, 0 failed, 0 warnings"
    assert json.loads(render_report([], "json")) == []


def test_verify_subcommand_writes_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["verify", "--suite", "d9", "--report", str(path), "--format", "json"])
    assert code == 0
    payload = json.loads(path.read_text())
    assert any(item["check_id"] == "d9.fiber.ideal" for item in payload)
    out = capsys.readouterr().out
    assert "wrote" in out


def test_verify_json_to_stdout(capsys):
    code = main(["verify", "--suite", "hilbert", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert {item["check_id"] for item in payload} == {
        "d9.hilbert.monomial", "d9.hilbert.faces",
        "d9.hilbert.flatness", "d9.hilbert.cubicgap",
    }
    for item in payload:
        assert item["details"]["source"]


def test_verify_uses_config_file(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# comment\n"
        "scan_prime_d9 = 19\n"
        "t_max = 4\n"
        "lambda_mu_samples = 0:1; 1:1; 2:1\n"
    )
    code = main(["verify", "--suite", "hilbert", "--config", str(config),
                 "--report", str(tmp_path / "r.json"), "--format", "json"])
    assert code == 0
    payload = json.loads((tmp_path / "r.json").read_text())
    flatness = next(i for i in payload if i["check_id"] == "d9.hilbert.flatness")
    assert set(flatness["details"]["profiles"]) == {"0:1", "1:1", "2:1"}
    assert flatness["details"]["target"] == [1, 9, 36, 81, 144]


def test_bad_config_is_usage_error(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("nonsense_key = 1\n")
    assert main(["verify", "--config", str(config)]) == 2
    config.write_text("scan_prime_d9 = 20\n")
    assert main(["verify", "--config", str(config)]) == 2
    config.write_text("scan_prime_d9\n")
    assert main(["verify", "--config", str(config)]) == 2
    assert "config error" in capsys.readouterr().err


def test_scan_subcommand(tmp_path, capsys):
    path = tmp_path / "census.csv"
    code = main(["scan", "--d", "9", "--prime", "19", "--csv", str(path)])
    assert code == 0
    assert path.read_text().startswith("q,d,rank,count")
    out = capsys.readouterr().out
    assert "19,9,2,40" in out
    assert main(["scan", "--d", "9", "--prime", "23"]) == 2


def test_hilbert_subcommand(capsys):
    assert main(["hilbert", "--lambda", "1", "--mu", "1", "--max-deg", "4"]) == 0
    out = capsys.readouterr().out
    assert "t=4: 144" in out
    assert main(["hilbert", "--lambda", "0", "--mu", "0"]) == 2


def test_chars_subcommand(capsys):
    assert main(["chars"]) == 0
    out = capsys.readouterr().out
    assert "sym^2(chi3) = chi2 + chi5" in out
    assert "sym^3(chi3) = chi1 + chi5 + chi7 + chi8" in out


def test_verify_full_suite_exit_code():
    reports = run_suite("all")
    ids = {r.check_id for r in reports}
    assert {"d11.pfaffian.f6", "scan.d9.q19", "chars.sym2", "d9.hilbert.flatness"} <= ids
    failing = {r.check_id for r in reports if r.status == "fail"}
    assert failing == {"chars.sym2", "chars.sym3"}
    assert exit_code(reports) == 1
