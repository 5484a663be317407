"""Command-line interface behavior."""

import json

import pytest

from affine_shuffles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_measure_json(capsys):
    code, out = run(capsys, "--json", "measure", "--family", "A", "--n", "3", "--k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["masses"]["1,2,3"] == "1/4"
    assert payload["masses"]["3,2,1"] == "1/4"
    assert len(payload["masses"]) == 4


def test_measure_single_element(capsys):
    code, out = run(
        capsys, "measure", "--family", "C", "--n", "2", "--k", "3",
        "--element", "1,2",
    )
    assert code == 0
    assert out.strip() == "1/3"


def test_measure_decimal_rendering(capsys):
    # the affine 2-shuffle on S_2 is uniform: both elements carry 1/2
    code, out = run(
        capsys, "--decimal", "3", "measure", "--family", "A", "--n", "2", "--k", "2",
        "--element", "2,1",
    )
    assert code == 0
    assert out.strip() == "0.500"


def test_measure_csv(capsys):
    code, out = run(capsys, "--csv", "measure", "--family", "A", "--n", "2", "--k", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "element,mass"
    assert "1,2".join("") in lines[1]


def test_verify_reciprocity_text(capsys):
    code, out = run(capsys, "verify", "reciprocity", "--profile", "quick")
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_tv_json(capsys):
    code, out = run(capsys, "--json", "verify", "tv")
    assert code == 0
    reports = json.loads(out)
    assert all(r["status"] == "pass" for r in reports)
    assert all(r["check"] == "tv_equality" for r in reports)


def test_verify_csv(capsys):
    code, out = run(capsys, "--csv", "verify", "tv")
    assert code == 0
    header = out.splitlines()[0]
    assert header.startswith("check,parameters,status")


def test_sample_deterministic(capsys):
    code1, out1 = run(
        capsys, "sample", "--model", "affine-c", "--n", "3", "--k", "2",
        "--seed", "42", "--count", "5",
    )
    code2, out2 = run(
        capsys, "sample", "--model", "affine-c", "--n", "3", "--k", "2",
        "--seed", "42", "--count", "5",
    )
    assert code1 == code2 == 0
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 5


def test_sample_models(capsys):
    for model in ("riffle", "affine-a", "affine-c"):
        code, out = run(
            capsys, "sample", "--model", model, "--n", "4", "--k", "2",
            "--seed", "1", "--count", "3",
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 3


def test_unimodal_listing(capsys):
    code, out = run(capsys, "unimodal", "--n", "3")
    assert code == 0
    assert set(out.strip().splitlines()) == {"1,2,3", "1,3,2", "2,3,1", "3,2,1"}


def test_unimodal_histogram_csv(capsys):
    code, out = run(capsys, "--csv", "unimodal", "--n", "3", "--histogram")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "shapes,count"
    assert len(lines) == 4  # three classes


def test_out_file(tmp_path, capsys):
    target = tmp_path / "masses.json"
    code, _ = run(
        capsys, "--json", "--out", str(target),
        "measure", "--family", "A", "--n", "2", "--k", "2",
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["masses"]["1,2"] == "1/2"


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["measure", "--family", "Z", "--n", "2", "--k", "2"])
    assert exc.value.code == 2
