import json
from fractions import Fraction

import pytest

from folideg.bott import ambient_dimension
from folideg.cli import main
from folideg.grassmann import plane_codimension
from folideg.reference import p2_conic_degree


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    capsys.readouterr()
    return info.value.code


def test_plane_hyperplane(capsys):
    code, out = run(capsys, "plane", "-n", "2", "-k", "1", "-d", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["degree"] == "15"
    assert rep["codimension"] == "1"
    assert rep["ambient_dimension"] == "14"
    assert rep["closed_form"]["match"] is True
    assert rep["weight_check"]["match"] is True


def test_plane_lines_in_p3(capsys):
    code, out = run(capsys, "plane", "-n", "3", "-k", "1", "-d", "2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["weight_check"]["match"] and rep["closed_form"] is None
    assert int(rep["codimension"]) == plane_codimension(1, 3, 2)


def test_plane_plain_text(capsys):
    code, out = run(capsys, "plane", "-n", "2", "-k", "1", "-d", "1")
    assert code == 0 and "outside the generically injective regime" in out


def test_plane_usage_errors(capsys):
    assert run_usage(capsys, "plane", "-n", "2", "-k", "2", "-d", "2") == 2
    assert run_usage(capsys, "plane", "-n", "9", "-k", "1", "-d", "2") == 2
    assert run_usage(capsys, "plane", "-n", "2", "-k", "1", "-d", "2", "--weights", "0,1") == 2


def test_conic(capsys):
    code, out = run(capsys, "conic", "-d", "2", "--json")
    rep = json.loads(out)
    assert code == 0
    assert (rep["degree"], rep["codimension"], rep["ambient_dimension"]) == ("81", "2", "14")
    assert rep["closed_form"]["match"]
    code, out = run(capsys, "conic", "-d", "5")
    assert code == 0 and str(p2_conic_degree(5)) in out and "match" in out


def test_conic_usage_error(capsys):
    assert run_usage(capsys, "conic", "-d", "1") == 2


def test_conic_dump_fixed_points(capsys):
    code, out = run(capsys, "conic", "-d", "3", "--json", "--dump-fixed-points", "--weights", "5,-2,9")
    rep = json.loads(out)
    assert rep["weights"] == [5, -2, 9]
    assert len(rep["fixed_points"]) == 12
    assert all(len(p["fiber_weights"]) == 15 for p in rep["fixed_points"])


def test_conic_degenerate_weights_retry(capsys):
    code, out = run(capsys, "conic", "-d", "3", "--weights", "0,1,2", "--json", "--seed", "2")
    rep = json.loads(out)
    assert code == 0 and rep["degree"] == "1380" and rep["weights"] != [0, 1, 2]


def test_formula_conic(capsys, tmp_path):
    cache = str(tmp_path / "c.json")
    code, out = run(capsys, "formula", "--family", "conic", "--d-min", "2", "--d-max", "17",
                    "--cache", cache, "--json", "--stats")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "confirmed"
    assert rep["coefficients"][-1] == "1/3840"
    assert "(d - 1) * d * (d + 1)" in rep["factored"]
    assert sorted(r for r, _ in rep["roots"]) == [-1, 0, 1]
    assert rep["stats"] == {"computed": 16, "cache_hits": 0}

    code, out2 = run(capsys, "formula", "--family", "conic", "--d-min", "2", "--d-max", "17",
                     "--cache", cache, "--json", "--stats")
    rep2 = json.loads(out2)
    assert rep2["stats"] == {"computed": 0, "cache_hits": 16}
    del rep["stats"], rep2["stats"]
    assert rep == rep2


def test_formula_needs_more_samples(capsys):
    code, out = run(capsys, "formula", "--family", "conic", "--d-min", "2", "--d-max", "3")
    assert code == 4 and "needs more samples" in out


def test_formula_plane(capsys):
    code, out = run(capsys, "formula", "--family", "plane", "-n", "2", "-k", "1", "--json")
    rep = json.loads(out)
    assert code == 0 and len(rep["coefficients"]) == 5
    assert run_usage(capsys, "formula", "--family", "plane", "-n", "2") == 2


def test_formula_corrupt_cache_recomputes(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text("[1, 2")
    code, out = run(capsys, "formula", "--family", "conic", "--d-min", "2", "--d-max", "4",
                    "--cache", str(path), "--stats", "--json")
    assert json.loads(out)["stats"]["computed"] == 3
    assert json.loads(path.read_text())["conic/3/0,1,3"] == "1380"


def test_json_round_trip_invariants(capsys):
    for d in (2, 3, 6):
        _, out = run(capsys, "conic", "-d", str(d), "--json")
        rep = json.loads(out)
        total = sum(Fraction(c["contribution"]) for c in rep["contributions"])
        assert total.denominator == 1 and total == int(rep["degree"])
        assert int(rep["codimension"]) == 2 * (d - 1)
        assert int(rep["ambient_dimension"]) == ambient_dimension(2, d)


def test_deterministic_output(capsys):
    _, a = run(capsys, "plane", "-n", "3", "-k", "1", "-d", "3", "--seed", "9")
    _, b = run(capsys, "plane", "-n", "3", "-k", "1", "-d", "3", "--seed", "9")
    assert a == b


def test_reference_formulas(capsys):
    code, out = run(capsys, "--show-reference-formulas")
    assert code == 0
    assert "P3 invariant quadric surface" in out and "reference only" in out


def test_no_command_is_usage(capsys):
    assert main([]) == 2
