import sys
from pathlib import Path

import orjson
import pytest
from typer.testing import CliRunner

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.cli import app

runner = CliRunner()


def run(*args):
    return runner.invoke(app, [str(a) for a in args])


def report(result):
    return orjson.loads(result.stdout)


def test_axiom_check_catalog_witness():
    result = run("axiom-check", "catalog:f9-norm")
    assert result.exit_code == 0, result.output
    body = report(result)
    assert body["kind"] == "axiom_report"
    assert body["schema_version"] == "1"
    assert body["outcome"]["kind"] == "Witness"
    assert body["hypotheses"]["invariant"] is True


def test_axiom_check_norm_builder_with_exclusion():
    result = run("axiom-check", "catalog:f9-norm-built")
    assert result.exit_code == 0, result.output
    assert report(result)["outcome"]["witness"] != ["1"]


def test_axiom_check_exhausted_finite_stage():
    result = run("axiom-check", "catalog:f4-diagonal-quintic")
    assert result.exit_code == 3, result.output
    outcome = report(result)["outcome"]
    assert outcome["kind"] == "Exhausted"
    assert outcome["ambient_points"] == 16
    assert outcome["searched"] == 4


def test_axiom_check_budget_hit():
    result = run("axiom-check", "catalog:f16-norm", "--budget", "1")
    assert result.exit_code == 4, result.output
    outcome = report(result)["outcome"]
    assert outcome["kind"] == "BudgetHit"
    assert outcome["searched"] == 1


def test_axiom_check_instance_file_with_inline_field(tmp_path):
    path = tmp_path / "norm.yaml"
    path.write_text('builder: texts\nn: 1\nI: ["x[1][1]*x[2][1] - 1"]\n', encoding="utf-8")
    result = run("axiom-check", path, "--field", "q=25 group=Z/2")
    assert result.exit_code == 0, result.output
    carrier = report(result)["field"]["carrier"]
    assert (carrier["p"], carrier["k"]) == (5, 2)


def test_axiom_check_parse_error_location(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text('field: {q: 9, group: Z/2}\nI: ["x[1][1] + * 2"]\n', encoding="utf-8")
    result = run("axiom-check", path)
    assert result.exit_code == 1
    assert "parse error at 1:11" in result.output


def test_axiom_check_unknown_catalog_entry():
    result = run("axiom-check", "catalog:nope")
    assert result.exit_code == 1
    assert "no catalog instance" in result.output


def test_axiom_check_refuted_hypotheses(tmp_path):
    path = tmp_path / "skew.yaml"
    path.write_text('field: {q: 4, group: Z/2}\nI: ["x[1][1] - g"]\n', encoding="utf-8")
    result = run("axiom-check", path)
    assert result.exit_code == 2
    assert "invariance" in report(result)["failed"]
    forced = run("axiom-check", path, "--force")
    assert forced.exit_code == 0, forced.output
    assert report(forced)["forced"] is True


def test_axiom_check_is_deterministic():
    first = run("axiom-check", "catalog:f9-norm", "--seed", "7")
    second = run("axiom-check", "catalog:f9-norm", "--seed", "7")
    assert first.stdout == second.stdout


def test_closure_certifies_quintic():
    result = run("closure", 2, 6, "--certify-degree", 5)
    assert result.exit_code == 0, result.output
    body = report(result)
    assert body["closure_degree"]["text"] == "2^1 · 3^1 · rest^inf"
    assert body["constants_degree"]["text"] == "2^0 · 3^0 · rest^inf"
    assert [lv["t"] for lv in body["levels"]] == [1, 5]
    assert all(lv["action_order"] == 6 for lv in body["levels"])
    cert = body["certification"]
    assert cert["status"] == "Pass"
    row = next(r for r in cert["rows"] if r["poly"] == "X^5+X^2+1")
    assert row["first_split"] == 1


def test_closure_degenerate_n_one():
    result = run("closure", 3, 1, "--levels", 0)
    assert result.exit_code == 0, result.output
    body = report(result)
    assert "degenerate" in body
    assert body["closure_degree"]["text"] == "rest^inf"


def test_closure_rejects_non_prime_power():
    assert run("closure", 6, 2).exit_code == 1


def test_closure_session_resume(tmp_path):
    session = tmp_path / "run"
    first = run("closure", 2, 2, "--levels", 0, "--certify-degree", 3, "--session", session)
    assert first.exit_code == 0, first.output
    assert (session / "index.json").exists()
    second = run("closure", 2, 2, "--levels", 0, "--certify-degree", 3, "--session", session)
    assert report(second)["certification"] == report(first)["certification"]


@pytest.mark.parametrize(
    "source,target,mapping,expected",
    [
        ("Z/4", "Z/2", None, True),
        ("Z/2xZ/2", "Z/2", "1,1,2,2", False),
        ("Q8", "Z/2xZ/2", None, None),
    ],
)
def test_frattini_command(source, target, mapping, expected):
    args = ["frattini", source, target, "--cross-check"]
    if mapping:
        args += ["--map", mapping]
    result = run(*args)
    if expected is None:
        assert result.exit_code == 1
        return
    assert result.exit_code == 0, result.output
    body = report(result)
    assert body["is_frattini_cover"] is expected
    assert body["direct"] is expected


def test_ufc_identity_and_closure_match():
    body = report(run("ufc", 6, 1))
    assert body["identity_cover"] is True
    body = report(run("ufc", 6, 2))
    assert body["is_frattini_cover"] is True
    assert body["matches_closure"] is True
    assert body["closure_kernel_truncation"] == [2, 3]


def test_ufc_truncation_too_small():
    assert run("ufc", 4, 1).exit_code == 1


def test_cyclo_extend_lifts_and_obstruction():
    body = report(run("cyclo-extend", 3, 21, 2))
    assert body["group"] == "Z/2"
    assert body["lifts"]
    assert all(g % 3 == 2 for g in body["generator_lifts"])
    blocked = report(run("cyclo-extend", 8, 16, 3))
    assert blocked["lifts"] == []
    assert "obstruction" in blocked


def test_cyclo_extend_with_group():
    body = report(run("cyclo-extend", 8, 16, "1,7", "--group", "Z/2"))
    assert body["lifts"] == [[1, 7], [1, 15]]


def test_norm_demo():
    body = report(run("norm-demo", "--", "-1"))
    assert body["status"] == "Unsolvable"
    assert body["certificate"]["kind"] == "sign"
    body = report(run("norm-demo", "5/4"))
    assert body["status"] == "Solvable"
    assert body["witness"] == ["1/2", "1/1"]


def test_norm_count_matches_q_plus_one():
    result = run("norm-count")
    assert result.exit_code == 0, result.output
    body = report(result)
    assert body["all_match"] is True
    assert len(body["rows"]) == 2 + 4 + 6 + 8
    assert {r["expected"] for r in body["rows"]} == {4, 6, 8, 10}


def test_config_dump():
    body = report(run("config"))
    assert body["kind"] == "config"
    assert body["closure"]["max_certify_degree"] == 8
    assert body["groebner"]["default_order"] == "grevlex"


def test_session_recording_and_corruption(tmp_path):
    session = tmp_path / "s"
    result = run("axiom-check", "catalog:f9-norm", "--session", session)
    assert result.exit_code == 0, result.output
    shown = run("session-show", session)
    assert shown.exit_code == 0, shown.output
    objects = report(shown)["objects"]
    kinds = sorted({o["kind"] for o in objects.values()})
    assert kinds == ["field", "group", "instance", "report"]

    victim = next(session.glob("report-*.json"))
    victim.write_bytes(victim.read_bytes() + b" ")
    broken = run("session-show", session)
    assert broken.exit_code == 1
    assert "checksum mismatch" in broken.output
    assert run("session-show", session, "--no-verify").exit_code == 0


def test_session_show_missing_directory(tmp_path):
    assert run("session-show", tmp_path / "absent").exit_code == 1
