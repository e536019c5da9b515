import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torsion_cosets import LaurentPoly, parse_poly
from torsion_cosets.cli import main, render_table
from torsion_cosets.errors import ParseError, ZeroPolynomial


def test_parse_examples():
    assert parse_poly("x + y - 1").poly.terms == {(1, 0): 1, (0, 1): 1, (0, 0): -1}
    assert parse_poly("x^2*y^3 - 1").poly.terms == {(2, 3): 1, (0, 0): -1}
    with pytest.raises(ZeroPolynomial):
        parse_poly("x*y^-1 - x*y^-1")


def test_parse_rationals_and_indexed():
    e = parse_poly("-3/4*x1^-2 + 2*x3")
    assert e.variables == ("x1", "x2", "x3")
    assert e.poly.terms == {(-2, 0, 0): Fraction(-3, 4), (0, 0, 1): 2}
    assert parse_poly("2*3*x*x").poly.terms == {(2, 0): 6}


@pytest.mark.parametrize(
    "text, pos",
    [("x + z", 4), ("x + ", 4), ("x ** 2", 3), ("3/0*x", 0), ("x & y", 2), ("", 0)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_poly(text)
    assert err.value.position == pos


def test_parse_rejects_mixed_names():
    with pytest.raises(ParseError):
        parse_poly("x + x1")
    with pytest.raises(ParseError):
        parse_poly("x + y", nvars=3)
    with pytest.raises(ParseError):
        parse_poly("x4 - 1", nvars=3)


def test_parse_fixed_nvars():
    assert parse_poly("x1 - 1", nvars=3).poly.nvars == 3
    assert parse_poly("7", nvars=1).poly.terms == {(0,): 7}


laurent2 = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool),
    min_size=1,
    max_size=6,
).map(lambda t: LaurentPoly(t, 2))
laurent3 = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
    st.integers(-9, 9).filter(bool),
    min_size=1,
    max_size=5,
).map(lambda t: LaurentPoly(t, 3))


@given(st.one_of(laurent2, laurent3))
def test_round_trip(f):
    assert parse_poly(str(f), nvars=f.nvars).poly == f


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_command(capsys):
    code, out, _ = _run(capsys, "bounds", "-n", "2", "-d", "1", "--dim", "1", "--json")
    assert code == 0
    doc = json.loads(out)["bounds"]
    assert doc["bound_ab"] == "6561"
    assert doc["bound_abc"] == str(49**8)
    code, out, _ = _run(capsys, "bounds", "-n", "2", "-d", "1", "--dim", "0", "--json")
    assert json.loads(out)["bounds"]["bound_abc"] == "49"


def test_bounds_schmidt_flag_and_big_ints(capsys):
    code, out, _ = _run(capsys, "bounds", "-n", "5", "-d", "2", "--dim", "4", "--json")
    assert code == 0
    doc = json.loads(out)["bounds"]
    assert doc["comparison"]["abc_vs_schmidt"] == "schmidt"
    # about 21000 digits, still inside the default bit budget
    assert len(doc["bound_abc"]) > 4300


def test_log_emission_over_budget(capsys):
    code, out, _ = _run(
        capsys, "bounds", "-n", "2", "-d", "1", "--dim", "1", "--bit-budget", "8", "--json"
    )
    doc = json.loads(out)["bounds"]
    assert set(doc["bound_ab"]) == {"log_e"}
    assert doc["bound_ab"]["log_e"] == pytest.approx(4 * 2.1972245773362196)


def test_json_is_key_sorted_and_stable(capsys):
    argv = ("enumerate", "x + y - 1", "--json")
    _, a, _ = _run(capsys, *argv)
    _, b, _ = _run(capsys, *argv)
    assert a == b
    doc = json.loads(a)
    assert json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) == a.rstrip("\n")
    assert doc["count"] == 2


@pytest.mark.parametrize("text, count", [("x + y - 1", 2), ("x*y - 1", 1), ("x + y - 3", 0)])
def test_enumerate_and_verify(capsys, text, count):
    code, out, _ = _run(capsys, "enumerate", text, "--json")
    assert code == 0 and json.loads(out)["count"] == count
    code, out, _ = _run(capsys, "verify", text, "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_analyze(capsys):
    code, out, _ = _run(capsys, "analyze", "x^2*y^3 - 1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["polytope"]["sq_diameter"] == 13
    assert doc["bounds"]["bound_abc_toric"] is None


def test_table_derived_from_json(capsys):
    code, out, _ = _run(capsys, "bounds", "-n", "2", "-d", "1", "--dim", "1")
    assert code == 0
    assert "bound_ab" in out and "6561" in out
    assert render_table({"a": {"log_e": 1.5}, "b": [1, 2]}) == "a  exp(1.5)\nb  [1, 2]"


@pytest.mark.parametrize(
    "argv, code",
    [
        (("enumerate", "x + z"), 1),
        (("enumerate", "x - x"), 1),
        (("bounds", "-n", "2", "-d", "1", "--dim", "5"), 1),
        (("bounds", "-n", "2"), 1),
        (("frobnicate",), 1),
        (("enumerate", "x^4*y^3 + x*y^2 - 3*y + 7"), 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(list(argv))
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "torsion_cosets", "bounds", "-n", "2", "-d", "1", "--dim", "1", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["bounds"]["bound_ab"] == "6561"
