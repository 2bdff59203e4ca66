"""Report documents: determinism, round-trip, CLI behaviour."""

import json

from wproj.cli import main
from wproj.report import (parse_matrix, render_json, render_latex,
                          render_text, run_checks, run_report, run_sweep)


def test_report_deterministic():
    first = render_json(run_report((1, 2, 2)))
    second = render_json(run_report((1, 2, 2)))
    assert first == second


def test_matrix_round_trip():
    packages, _verdicts = run_checks((1, 2, 2))
    doc = run_report((1, 2, 2))
    ap, bp = packages["amodel"], packages["bmodel"]
    originals = {
        "quantum_sectors": ap.mult_sectors,
        "quantum_powers": ap.mult_powers,
        "pairing_powers": ap.pairing_powers,
        "polar_canonical": bp.res_zero,
        "pairing_canonical": bp.pairing,
        "polar_orbifold": bp.res_zero_orb,
    }
    for key, matrix in originals.items():
        assert parse_matrix(doc["matrices"][key]) == matrix, key


def test_document_contents():
    doc = run_report((1, 2, 2))
    assert doc["mu"] == 5 and doc["n"] == 2
    assert doc["spectrum"]["c"] == ["0", "0", "0", "1/2", "1/2"]
    assert doc["spectrum"]["alpha"] == ["0", "1", "2", "1/2", "3/2"]
    assert doc["basis"]["jordan_blocks"] == [3, 2]
    assert doc["all_ok"] is True
    assert doc["unfolding"]["potential"]["1,3,3"] == "1/64"
    cell = doc["products"]["cup_sectors"][3][3]
    assert cell == {"coeff": [{"coeff": "1", "x_exp": "0", "theta_exp": 0}],
                    "index": 1}
    # the document is valid JSON all the way down
    json.loads(render_json(doc))


def test_check_filter():
    doc = run_report((1, 1), check_filter=("mirror",))
    assert doc["verdicts"]
    assert all(name.startswith("mirror") for name in doc["verdicts"])


def test_render_text_and_latex():
    doc = run_report((1, 2, 2))
    text = render_text(doc)
    assert "[PASS]" in text and "overall: PASS" in text
    latex = render_latex(doc)
    assert "pmatrix" in latex
    assert "q^{1/2}" in latex


def test_sweep_document():
    doc, _timings = run_sweep(4)
    weights = [tuple(r["weights"]) for r in doc["results"]]
    assert weights == [(1, 1), (1, 1, 1), (1, 2), (1, 1, 1, 1), (1, 1, 2),
                       (1, 3)]
    assert doc["all_ok"] is True


def test_cli_exit_codes(capsys):
    assert main(["1,1"]) == 0
    capsys.readouterr()
    assert main(["2,3"]) == 2
    assert "first weight must be 1" in capsys.readouterr().err
    assert main(["1,2,2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "overall: PASS" in out
    assert main([]) == 2
    capsys.readouterr()
    assert main(["--sweep", "3"]) == 0
    capsys.readouterr()
    assert main(["1,x"]) == 2
    capsys.readouterr()
    assert main(["1,2", "--sweep", "3"]) == 2


def test_cli_verify_filter(capsys):
    assert main(["1,2,2", "--verify", "mirror,limits"]) == 0
    doc = json.loads(capsys.readouterr().out)
    names = set(doc["verdicts"])
    assert names
    assert all(n.startswith(("mirror", "limits")) for n in names)


def test_cli_byte_identical(capsys):
    assert main(["1,1,2"]) == 0
    first = capsys.readouterr().out
    assert main(["1,1,2"]) == 0
    second = capsys.readouterr().out
    assert first == second
