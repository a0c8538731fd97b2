import json

import pytest

from zomo import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bound_exit_zero(capsys):
    code, out, _ = run(capsys, "genus", "bound", "--d", "3", "--g", "10")
    assert code == 0
    assert "81" in out


def test_profiles_output(capsys):
    code, out, _ = run(capsys, "genus", "profiles", "--d", "3",
                       "--order", "81", "--g", "10")
    assert code == 0
    assert "9,27,27" in out.replace(" ", "")


def test_missing_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys, "groups")
    assert code == 2


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "genus", "bound", "--d", "3", "--g", "10",
                     "--bogus")
    assert code == 2


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "groups", "analyze", "nosuch.pres")
    assert code == 2


def test_analyze_file(tmp_path, capsys):
    p = tmp_path / "heis.pres"
    p.write_text("<a, b | a^3, b^3, [a,b]^3, [[a,b],a], [[a,b],b]>\n")
    code, out, _ = run(capsys, "groups", "analyze", str(p))
    assert code == 0
    assert "27" in out


def test_verify_catalog_single(capsys):
    code, out, _ = run(capsys, "groups", "verify-catalog",
                       "--id", "C9_rtimes_C3")
    assert code == 0


def test_verify_catalog_unknown_id(capsys):
    code, _, _ = run(capsys, "groups", "verify-catalog", "--id", "zzz")
    assert code == 2


def test_curve_check_hesse(capsys):
    code, out, _ = run(capsys, "curve", "check", "--name", "hesse",
                       "--q", "19")
    assert code == 0
    assert "27" in out


def test_curve_check_unknown_name(capsys):
    code, _, _ = run(capsys, "curve", "check", "--name", "nope", "--q", "19")
    assert code == 2


def test_kummer_build_json(tmp_path, capsys):
    out_file = tmp_path / "k19.json"
    code, _, _ = run(capsys, "kummer", "build", "--q", "19", "--h", "3",
                     "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["q"] == 19
    assert payload["h"] == 3
    assert payload["genus"] == 28
    assert payload["matched_golden"] is True
    assert set(payload["choice"]) == {"Q", "epsilon"}


def test_kummer_build_wrong_h(capsys):
    code, _, err = run(capsys, "kummer", "build", "--q", "19", "--h", "2")
    assert code == 2


@pytest.mark.slow
def test_report_json_schema_and_determinism(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    code1, _, _ = run(capsys, "report", "--format", "json", "--seed", "1",
                      "--out", str(a))
    code2, _, _ = run(capsys, "report", "--format", "json", "--seed", "1",
                      "--out", str(b))
    assert code1 == 0 and code2 == 0
    ra = json.loads(a.read_text())
    rb = json.loads(b.read_text())
    assert ra["schema"] == 1

    def strip(r):
        return [{k: v for k, v in c.items() if k != "elapsed"}
                for c in r["checks"]]
    assert strip(ra) == strip(rb)
    assert all(c["status"] == "pass" for c in ra["checks"])


@pytest.mark.slow
def test_report_markdown(tmp_path, capsys):
    out_file = tmp_path / "r.md"
    code, _, _ = run(capsys, "report", "--format", "markdown",
                     "--out", str(out_file))
    assert code == 0
    text = out_file.read_text()
    assert text.startswith("#") or "|" in text
