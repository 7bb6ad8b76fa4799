import json
import os
from pathlib import Path

import pytest

import degloci

SCENARIOS = Path(os.environ.get("DEGLOCI_SCENARIOS", Path(__file__).resolve().parents[2] / "scenarios"))


def test_polynomial_arithmetic():
    r = degloci.Ring(0, ["x", "y"])
    p = degloci.Polynomial(r, "x + y")
    assert str(p * p) == "x^2 + 2*x*y + y^2"
    assert (p ** 2 - p * p).is_zero()


def test_ideal_dimension_and_membership():
    r = degloci.Ring(0, ["x", "y", "z"])
    planes = degloci.Ideal(r, ["x*y", "x*z"])
    assert planes.dimension() == 2
    assert planes.contains("x*y*z")
    assert not planes.contains("y")
    assert degloci.Ideal(r, ["x^2"]).contains_radical("x")


def test_symmetric_determinant_depends_on_characteristic():
    rows = [["0", "X1", "X2"], ["X1", "0", "X3"], ["X2", "X3", "0"]]
    q = degloci.minors_ideal(degloci.Ring(0, ["X1", "X2", "X3"]), rows, 3)
    f2 = degloci.minors_ideal(degloci.Ring(2, ["X1", "X2", "X3"]), rows, 3)
    assert q.generators == ["2*X1*X2*X3"]
    assert f2.groebner_basis() == []


def test_pfaffian():
    r = degloci.Ring(0, ["a", "b", "c", "d", "e", "f"])
    rows = [["0", "a", "b", "c"], ["-a", "0", "d", "e"], ["-b", "-d", "0", "f"], ["-c", "-e", "-f", "0"]]
    pf = degloci.Polynomial(r, degloci.pfaffian(r, rows))
    assert pf == degloci.Polynomial(r, "a*f - b*e + c*d")


def test_worked_example_scenario():
    report, code = degloci.run_file(str(SCENARIOS / "koszul_example.scn"))
    assert code == 0
    records = [json.loads(line) for line in report.splitlines()]
    dims = [r["dim"] for r in records if r.get("kind") == "dimension"]
    assert dims == [7, 7, 6]
    connected = [r["connected"] for r in records if r.get("kind") == "connectedness"]
    assert connected == [True, False]


def test_scenario_errors_carry_position():
    with pytest.raises(degloci.ParseError, match="^4:"):
        degloci.check_scenario("field Q\nring x\nfree M 1\nmap f : M -> N\nrow x\nend\n")


def test_dry_run_and_char_override():
    text = (SCENARIOS / "symmetric_char2.scn").read_text()
    report, code = degloci.run_scenario(text, dry_run=True)
    assert code == 0 and '"validated"' in report
    report, code = degloci.run_scenario(text, characteristic=2)
    first = json.loads(report.splitlines()[0])
    assert first["generators"] == [] and first["zero"] is True
