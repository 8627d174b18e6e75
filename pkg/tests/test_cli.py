from __future__ import annotations

import importlib
import json

import pytest

from mahlerkit.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, render

GEOMETRIC = json.dumps({"kind": "rational", "num": [1], "den": [1, -1]})
GEOMETRIC_EQUATION = json.dumps({"k": 2, "coeffs": [[1, -1], [-1, 0, 1]]})


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_negligible_certificate(capsys):
    code, out, _ = _run(capsys, "negligible", "--k", "2", "--poly", "[1,1]")

    assert code == EXIT_OK
    assert json.loads(out) == {"negligible": True, "orders": [[2, 1]]}


def test_negligible_text_format(capsys):
    code, out, _ = _run(capsys, "negligible", "--k", "2", "--poly", "[1,1]", "--format", "text")

    assert code == EXIT_OK
    assert out == "negligible: true\norders: [[2, 1]]\n"


def test_non_negligible_is_still_a_verdict(capsys):
    code, out, _ = _run(capsys, "negligible", "--k", "2", "--poly", "[1,1,1]")

    assert code == EXIT_OK
    assert json.loads(out)["negligible"] is False


def test_decompose_from_input_file(capsys, tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"kind": "odd_part"}), encoding="utf-8")

    code, out, _ = _run(capsys, "decompose", "--k", "2", "--input", str(path))

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["p"] == 2
    assert document["g"] == {"rec": ["1"], "init": ["1"]}
    assert document["r"] == 1
    assert document["chi"] == {"pre": [], "per": ["1", "0"]}


def test_decompose_from_bfile(capsys, tmp_path):
    path = tmp_path / "b000079.txt"
    path.write_text("".join(f"{n} {n & -n}\n" for n in range(1, 129)), encoding="utf-8")

    code, out, _ = _run(capsys, "decompose", "--k", "2", "--input", str(path))

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["g"] == {"rec": ["2"], "init": ["1"]}
    assert document["verified_bound"] == 128


def test_decompose_non_multiplicative_is_a_failure(capsys):
    values = json.dumps({"values": [n + 1 for n in range(1, 40)]})

    code, out, _ = _run(capsys, "decompose", "--k", "2", "--sequence", values)

    assert code == EXIT_FAILED
    assert json.loads(out) == {"status": "NotMultiplicative", "witness": [1, 1]}


def test_verify_equation_of_rational_series(capsys):
    code, out, _ = _run(
        capsys, "verify-eq", "--equation", GEOMETRIC_EQUATION, "--sequence", GEOMETRIC, "--order", "100"
    )

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["ok"] is True
    assert document["verified_order"] == 100


def test_verify_equation_mismatch(capsys):
    wrong = json.dumps({"k": 2, "coeffs": [[1, -1], [-1]]})

    code, out, _ = _run(capsys, "verify-eq", "--equation", wrong, "--sequence", GEOMETRIC)

    document = json.loads(out)
    assert code == EXIT_FAILED
    assert document["mismatch_exponent"] == 2
    assert document["mismatch_value"] == "-1"


def test_malformed_json_reports_position(capsys):
    code, out, err = _run(capsys, "negligible", "--poly", "[1,")

    assert code == EXIT_USAGE
    assert out == ""
    assert "--poly:1:" in err


def test_malformed_bfile_reports_line(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("1 1\n2 1\n4 1\n", encoding="utf-8")

    code, _, err = _run(capsys, "guess-lrs", "--input", str(path))

    assert code == EXIT_USAGE
    assert f"{path}:3" in err


def test_missing_sequence_is_a_usage_error(capsys):
    code, _, err = _run(capsys, "guess-lrs")

    assert code == EXIT_USAGE
    assert "--sequence or --input" in err


def test_unknown_command_and_help(capsys):
    assert main(["no-such-command"]) == EXIT_USAGE
    assert main(["--help"]) == EXIT_OK
    capsys.readouterr()


def test_order_below_minimum_is_rejected(capsys):
    code, _, _ = _run(capsys, "guess-lrs", "--sequence", GEOMETRIC, "--order", "8")

    assert code == EXIT_USAGE


def test_guess_lrs(capsys):
    fibonacci = json.dumps({"kind": "lrs", "lrs": {"rec": [1, 1], "init": [0, 1]}})

    code, out, _ = _run(capsys, "guess-lrs", "--sequence", fibonacci, "--order", "30")

    assert code == EXIT_OK
    assert json.loads(out) == {"rec": ["1", "1"], "init": ["0", "1"], "unique": True}


def test_guess_linrep_with_automatic_probe(capsys):
    code, out, _ = _run(
        capsys, "guess-linrep", "--sequence", '{"kind": "two_adic_power"}', "--order", "255", "--automatic"
    )

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["status"] == "Found"
    assert len(document["linrep"]["u"]) == 2
    assert document["automatic"]["kind"] == "ExceedsHorizon"


def test_min_operator(capsys):
    code, out, _ = _run(capsys, "min-operator", "--sequence", '{"kind": "lacunary", "k": 2}', "--order", "64")

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["status"] == "Found"
    assert document["profile"] == [1, 0]
    assert document["rational"]["num"] == ["0", "1"]


def test_gq_and_averaging(capsys):
    code, out, _ = _run(capsys, "gq", "--sequence", '{"kind": "mobius"}', "--order", "60", "--q", "3", "--q", "5")

    document = json.loads(out)
    assert code == EXIT_OK
    assert [row["q"] for row in document["results"]] == [3, 5]
    assert all(row["supported_on_q2"] and row["h_agrees"] for row in document["results"])

    code, out, _ = _run(capsys, "avg-check", "--sequence", '{"kind": "mobius"}', "--order", "60", "--q", "3")

    assert code == EXIT_FAILED
    assert json.loads(out)["results"] == [{"q": 3, "holds": False, "fails_at": 9}]


def test_invalid_q_is_a_usage_error(capsys):
    code, _, err = _run(capsys, "gq", "--sequence", '{"kind": "identity"}', "--q", "9")

    assert code == EXIT_USAGE
    assert "odd prime" in err


def test_classify_chi(capsys):
    code, out, _ = _run(capsys, "classify-chi", "--chi", '{"pre": [], "per": [1, 0, 0, 0, 1, 0]}')

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["status"] == "Periodic"
    assert document["witness"] is None


def test_classify_chi_dichotomy_violation_is_an_input_error(capsys, monkeypatch):
    from mahlerkit.lrs import DichotomyViolation

    cli_main = importlib.import_module("mahlerkit.cli.main")

    def _violate(chi):
        raise DichotomyViolation("neither periodic nor eventually zero")

    monkeypatch.setattr(cli_main, "classify_mult_ev_periodic", _violate)

    code, _, err = _run(capsys, "classify-chi", "--chi", '{"pre": [1, 0], "per": [1]}')

    assert code == EXIT_USAGE
    assert "neither periodic" in err


def test_synthesize_round_trip(capsys):
    decomposition = json.dumps({"p": 2, "g": {"rec": [2, -1], "init": [1, 2]}, "r": 0, "chi": {"per": [1, 0]}})

    code, out, _ = _run(capsys, "synthesize", "--decomposition", decomposition, "--n", "8")
    values = json.loads(out)
    code_back, out_back, _ = _run(capsys, "decompose", "--k", "2", "--sequence", out, "--rmax", "2")

    assert code == code_back == EXIT_OK
    assert values == {"values": ["1", "2", "1", "3", "1", "2", "1", "4"], "offset": 1}
    assert json.loads(out_back)["g"] == {"rec": ["2", "-1"], "init": ["1", "2"]}


def test_synthesize_rejects_composite_p(capsys):
    decomposition = json.dumps({"p": 4, "g": {"rec": [1], "init": [1]}, "r": 0, "chi": {"per": [1]}})

    code, _, _ = _run(capsys, "synthesize", "--decomposition", decomposition, "--n", "8")

    assert code == EXIT_USAGE


def test_reduce_rational_and_product_equation(capsys):
    code, out, _ = _run(capsys, "reduce-rational", "--k", "2", "--num", "[1]", "--den", "[1,-1]")

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["equation"]["coeffs"] == [["1"], ["-1", "-1"]]
    assert document["verdict"] == "RegularCertified"

    code, out, _ = _run(capsys, "product-eq", "--equation", '{"k": 2, "coeffs": [[1], [-1, 1]]}')

    assert code == EXIT_OK
    assert json.loads(out)["equation"]["k"] == 2


def test_substitute_equation(capsys):
    equation = json.dumps({"k": 2, "coeffs": [[1, 0, -1], [-1, 0, 0, 0, 1]]})

    code, out, _ = _run(capsys, "substitute-eq", "--equation", equation, "--l", "2")

    document = json.loads(out)
    assert code == EXIT_OK
    assert all(c == "0" for coeffs in document["equation"]["coeffs"] for c in coeffs[1::2])


def test_cartier_on_polynomial_and_sequence(capsys):
    code, out, _ = _run(capsys, "cartier", "--l", "2", "--r", "1", "--poly", "[0,1,2,3,4]")

    assert code == EXIT_OK
    assert json.loads(out) == {"poly": ["1", "3"]}

    code, out, _ = _run(
        capsys, "cartier", "--l", "3", "--r", "0", "--sequence", '{"kind": "identity"}', "--order", "20"
    )

    assert json.loads(out)["values"] == ["0", "3", "6", "9", "12", "15", "18"]


def test_obstruction(capsys):
    code, out, _ = _run(capsys, "obstruction", "--k", "2", "--sequence", '{"kind": "totient"}', "--order", "200")

    assert code == EXIT_OK
    assert json.loads(out)["status"] == "NoMahlerStructureWithinBounds"


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"

    code, out, _ = _run(capsys, "negligible", "--poly", "[1,1]", "--output", str(target))

    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["negligible"] is True


def test_output_is_deterministic(capsys):
    first = _run(capsys, "preceq", "--k", "2", "--poly", "[1,-1]", "--other", "[1,1]")
    second = _run(capsys, "preceq", "--k", "2", "--poly", "[1,-1]", "--other", "[1,1]")

    assert first[:2] == second[:2]
    assert first[0] == EXIT_OK


def test_report_single_criterion(capsys):
    code, out, _ = _run(capsys, "report", "--only", "C04", "--workers", "2", "--timings")

    document = json.loads(out)
    assert code == EXIT_OK
    assert document["passed"] is True
    assert [c["id"] for c in document["criteria"]] == ["C04"]
    assert "seconds" in document["criteria"][0]


def test_render_sorts_keys():
    assert render({"b": 1, "a": [1]}, "json") == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'
    assert render({"b": "x", "a": None}, "text") == "a: null\nb: x\n"


@pytest.mark.parametrize("environment, expected", [("3", 3), ("2", 2)])
def test_environment_sets_the_base(capsys, monkeypatch, environment, expected):
    monkeypatch.setenv("MAHLERKIT_K", environment)

    code, out, _ = _run(capsys, "negligible", "--poly", "[1,1]")

    assert code == EXIT_OK
    assert json.loads(out)["negligible"] is (expected == 2)
