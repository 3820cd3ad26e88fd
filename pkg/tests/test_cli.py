import json

import pytest

from pantsarc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_intersect_json_is_exact(capsys):
    code, out, err = run(capsys, "intersect", "1BABA2")
    assert code == 0
    assert out == '{"word":"1BABA2","i":2}\n'
    assert err == ""


def test_intersect_text(capsys):
    code, out, _ = run(capsys, "intersect", "1BABA2", "--format", "text")
    assert code == 0
    assert out == "i(1BABA2) = 2\n"


def test_intersect_trace(capsys):
    code, out, _ = run(capsys, "intersect", "1BABA2", "--trace")
    payload = json.loads(out)
    assert code == 0
    assert payload["i"] == 2
    assert payload["segments"] == ["1B", "bA", "aB", "bA", "a2"]
    assert payload["grid"]["3,5"] == "1"
    assert payload["grid"]["1,3"] == "X"


def test_intersect_trace_text_shows_grid(capsys):
    _, out, _ = run(capsys, "intersect", "1BABA2", "--trace", "--format", "text")
    assert "total = 2" in out
    assert "w1=1B" in out


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "1BABA2")
    assert code == 0
    assert json.loads(out)["valid"] is True

    code, out, _ = run(capsys, "validate", "1aa2")
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"] is False and "error" in payload


def test_invalid_word_is_exit_1(capsys):
    code, out, err = run(capsys, "intersect", "1aa2")
    assert code == 1
    assert out == ""
    assert err.startswith("error:") and err.count("\n") == 1


def test_usage_error_is_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["intersect"])
    assert exc.value.code == 1
    err = capsys.readouterr().err
    assert err.count("\n") == 1


def test_unknown_subcommand_is_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--length", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["count"] == 7
    assert payload["words"][0] == "12"

    code, out, _ = run(capsys, "enumerate", "--length", "4", "--count-only")
    assert json.loads(out) == {"word_length": 4, "count": 48}

    code, out, _ = run(capsys, "enumerate", "--length", "2",
                       "--count-only", "--format", "text")
    assert out == "7\n"


def test_census_contains_reference_extremes(capsys):
    code, out, _ = run(capsys, "census", "--length", "4")
    assert code == 0
    assert '"min_i":1,"max_i":3' in out
    payload = json.loads(out)
    assert payload["word_count"] == 48
    assert payload["histogram"] == [[1, 8], [2, 32], [3, 8]]


def test_census_histogram_file(capsys, tmp_path):
    target = tmp_path / "hist.csv"
    code, out, _ = run(capsys, "census", "--length", "4",
                       "--histogram", str(target))
    assert code == 0
    assert target.read_text() == "i,count\n1,8\n2,32\n3,8\n"


def test_census_deterministic_across_jobs(capsys):
    _, out1, _ = run(capsys, "census", "--length", "8", "--jobs", "1")
    _, out2, _ = run(capsys, "census", "--length", "8", "--jobs", "2")
    assert out1 == out2


def test_family_verify(capsys):
    code, out, _ = run(capsys, "family", "--id", "Z3", "--n", "1", "--verify")
    payload = json.loads(out)
    assert code == 0
    assert payload["pass"] is True
    assert payload["i_computed"] == payload["i"] == 23
    assert payload["max_quotient"] == 2


def test_family_without_required_m(capsys):
    code, _, err = run(capsys, "family", "--id", "Z1", "--n", "1")
    assert code == 1
    assert "m" in err


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "14")
    payload = json.loads(out)
    assert code == 0
    assert list(payload) == ["N", "family", "n", "m", "word",
                             "i_computed", "cf", "max_quotient"]
    assert payload["family"] == "Z3"
    assert payload["i_computed"] == 14
    assert payload["max_quotient"] <= 2


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "--max", "60")
    payload = json.loads(out)
    assert code == 0
    assert payload == {"max": 60, "checked": 61, "failures": [], "pass": True}


def test_cover(capsys):
    code, out, _ = run(capsys, "cover", "--max", "300")
    payload = json.loads(out)
    assert code == 0
    assert payload["gaps"] == []
    assert payload["pass"] is True
    assert all(payload["identities"].values())


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--verify")
    payload = json.loads(out)
    assert code == 0
    assert payload["pass"] is True
    assert payload["pairs"] == 408


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "2,1,1")
    assert code == 0
    assert json.loads(out)["value"] == "2/5"

    code, _, err = run(capsys, "cf", "2,x")
    assert code == 1 and err.startswith("error:")

    code, _, err = run(capsys, "cf", "2,0,1")
    assert code == 1


def test_fixtures_packaged(capsys):
    code, out, _ = run(capsys, "fixtures")
    payload = json.loads(out)
    assert code == 0
    assert payload == {"file": "packaged", "rows": 79,
                       "failures": [], "pass": True}


def test_fixtures_report_failures(capsys, tmp_path):
    bad = tmp_path / "rows.csv"
    bad.write_text("word,expected_i\n1BABA2,2\n3aB1,5\n")
    code, out, _ = run(capsys, "fixtures", "--file", str(bad))
    payload = json.loads(out)
    assert code == 2
    assert payload["pass"] is False
    assert payload["failures"] == [
        {"word": "3aB1", "expected": 5, "computed": 3}]


def test_fixtures_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "fixtures", "--file", str(tmp_path / "no.csv"))
    assert code == 1
    assert err.startswith("error:")
