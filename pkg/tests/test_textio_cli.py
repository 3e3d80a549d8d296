"""Matrix file syntax and the command line front end (output format,
exit codes, determinism)."""

from fractions import Fraction

import pytest

from pidpairs import (
    ExactMatrix,
    INTEGERS,
    ParseError,
    RATIONAL_POLYNOMIALS,
    format_matrix,
    parse_matrix,
    read_matrix_file,
    write_matrix_file,
)
from pidpairs.cli import main

Z = INTEGERS
P = RATIONAL_POLYNOMIALS


def test_format_parse_round_trip_int():
    M = ExactMatrix.from_rows(Z, [[1, -2, 3], [0, 5, -10]])
    assert parse_matrix(format_matrix(M)) == M
    empty = ExactMatrix.zeros(Z, 2, 0)
    assert parse_matrix(format_matrix(empty)) == empty
    assert parse_matrix(format_matrix(ExactMatrix.zeros(Z, 0, 0))).rows == 0


def test_format_parse_round_trip_poly():
    rows = [
        [P.from_coeffs([1, Fraction(1, 2)]), P.zero],
        [P.one, P.from_coeffs([0, 0, Fraction(-2, 3)])],
    ]
    M = ExactMatrix.from_rows(P, rows)
    assert parse_matrix(format_matrix(M)) == M


def test_parse_accepts_comments_and_layout():
    text = """
# lattice with elementary divisors 2 and 1
ring int
rows 2  cols 2
2 0   # first row
0 1
"""
    M = parse_matrix(text)
    assert M.to_lists() == [[2, 0], [0, 1]]


def test_parse_bare_rational_reads_as_constant_poly():
    M = parse_matrix("ring polyq rows 1 cols 2 3 poly[0,1]")
    assert M[0, 0] == (Fraction(3),)
    assert M[0, 1] == (Fraction(0), Fraction(1))


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("ring int rows 2 cols 2\n1 2 3", 2, "unexpected end of input"),
        ("ring int\nrows 1\ncols 1\nx", 4, "invalid integer scalar"),
        ("ring float rows 1 cols 1 0", 1, "unknown ring tag"),
        ("ring int\nrows -1\ncols 1", 2, "row count"),
        ("ring int rows 1 cols 1 5 6", 1, "trailing"),
        ("rows 1 cols 1 5", 1, "expected 'ring'"),
        ("ring polyq rows 1 cols 1 poly[1/0]", 1, "zero denominator"),
    ],
)
def test_parse_errors_carry_position(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_matrix(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_file_round_trip(tmp_path):
    M = ExactMatrix.from_rows(Z, [[4, 6]])
    p = tmp_path / "m.mat"
    write_matrix_file(p, M)
    assert read_matrix_file(p) == M


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def parse_blocks(output):
    """Split CLI output into its named matrix blocks, re-parsed."""
    lines = output.splitlines()
    names = [i for i, ln in enumerate(lines) if ln.startswith("matrix ")]
    out = {}
    for k, i in enumerate(names):
        end = names[k + 1] if k + 1 < len(names) else len(lines)
        out[lines[i].split()[1]] = parse_matrix("\n".join(lines[i + 1 : end]))
    return out


def test_cli_snf(tmp_path, capsys):
    f = write(tmp_path, "m.mat", "ring int rows 2 cols 2 2 0 0 3")
    assert main(["snf", f]) == 0
    out = capsys.readouterr().out
    assert "rank: 2" in out
    assert "invariants: 1 6" in out
    M = ExactMatrix.from_rows(Z, [[2, 0], [0, 3]])
    b = parse_blocks(out)
    assert b["Q"] @ M @ b["V"] == b["S"]


def test_cli_hnf(tmp_path, capsys):
    f = write(tmp_path, "m.mat", "ring int rows 1 cols 2 4 6")
    assert main(["hnf", f]) == 0
    out = capsys.readouterr().out
    assert "rank: 1" in out
    b = parse_blocks(out)
    assert b["H"] == ExactMatrix.from_rows(Z, [[2, 0]])
    assert ExactMatrix.from_rows(Z, [[4, 6]]) @ b["U"] == b["H"]


def test_cli_closure(tmp_path, capsys):
    f = write(tmp_path, "m.mat", "ring int rows 2 cols 1 2 0")
    assert main(["closure", f]) == 0
    out = capsys.readouterr().out
    assert "rank: 1" in out
    assert "pure: false" in out
    assert parse_blocks(out)["closure"] == ExactMatrix.from_rows(Z, [[1], [0]])


def test_cli_parse_error_exit_2(tmp_path, capsys):
    f = write(tmp_path, "bad.mat", "ring int\nrows 1\ncols 1\nx")
    assert main(["snf", f]) == 2
    err = capsys.readouterr().err
    assert f"{f}:4:1:" in err
    assert main(["snf", str(tmp_path / "missing.mat")]) == 2


def test_cli_pair_canon(tmp_path, capsys):
    f1 = write(tmp_path, "x1.mat", "ring int rows 2 cols 2 2 0 0 1")
    f2 = write(tmp_path, "x2.mat", "ring int rows 2 cols 2 3 0 0 4")
    assert main(["pair-canon", f1, f2]) == 0
    out = capsys.readouterr().out
    assert "t: 2" in out
    assert "alpha: 2 1" in out
    assert "beta: 1 12" in out
    b = parse_blocks(out)
    X1 = ExactMatrix.from_rows(Z, [[2, 0], [0, 1]])
    X2 = ExactMatrix.from_rows(Z, [[3, 0], [0, 4]])
    assert b["Q"] @ X1 @ b["V1"] == b["Y1"]
    assert b["Q"] @ X2 @ b["V2"] == b["Y2"]


def test_cli_pair_canon_hypothesis_exit_3(tmp_path, capsys):
    f1 = write(tmp_path, "x1.mat", "ring int rows 2 cols 1 2 0")
    f2 = write(tmp_path, "x2.mat", "ring int rows 2 cols 1 0 2")
    assert main(["pair-canon", f1, f2]) == 3
    err = capsys.readouterr().err
    assert "hypothesis failed: span of (X1 X2) not pure" in err


def test_cli_pair_canon_mixed_rings_exit_3(tmp_path, capsys):
    f1 = write(tmp_path, "a.mat", "ring int rows 1 cols 1 2")
    f2 = write(tmp_path, "b.mat", "ring polyq rows 1 cols 1 poly[2]")
    assert main(["pair-canon", f1, f2]) == 3
    assert "different rings" in capsys.readouterr().err


def test_cli_pair_equiv(tmp_path, capsys):
    a1 = write(tmp_path, "a1.mat", "ring int rows 2 cols 1 2 0")
    a2 = write(tmp_path, "a2.mat", "ring int rows 2 cols 1 3 0")
    b1 = write(tmp_path, "b1.mat", "ring int rows 2 cols 1 0 2")
    b2 = write(tmp_path, "b2.mat", "ring int rows 2 cols 1 0 3")
    assert main(["pair-equiv", a1, a2, b1, b2]) == 0
    out = capsys.readouterr().out
    assert "verdict: equivalent" in out
    assert "pairA rank_sum: 1" in out
    assert "pairA torsion1: 3" in out
    assert "pairB torsion2: 2" in out

    c1 = write(tmp_path, "c1.mat", "ring int rows 2 cols 1 4 0")
    assert main(["pair-equiv", c1, a2, b1, b2]) == 1
    out = capsys.readouterr().out
    assert "verdict: inequivalent" in out


def test_cli_pair_equiv_ambient_mismatch_exit_3(tmp_path, capsys):
    a1 = write(tmp_path, "a1.mat", "ring int rows 2 cols 1 2 0")
    a2 = write(tmp_path, "a2.mat", "ring int rows 2 cols 1 3 0")
    b1 = write(tmp_path, "b1.mat", "ring int rows 3 cols 1 2 0 0")
    b2 = write(tmp_path, "b2.mat", "ring int rows 3 cols 1 3 0 0")
    assert main(["pair-equiv", a1, a2, b1, b2]) == 3
    assert "different ambient ranks" in capsys.readouterr().err


def test_cli_polyq_end_to_end(tmp_path, capsys):
    f1 = write(tmp_path, "p1.mat", "ring polyq rows 2 cols 1 poly[0,1] 0")
    f2 = write(tmp_path, "p2.mat", "ring polyq rows 2 cols 1 poly[-1,1] 0")
    assert main(["pair-canon", f1, f2]) == 0
    out = capsys.readouterr().out
    assert "t: 1" in out
    assert "alpha: poly[0,1]" in out
    assert "beta: poly[-1,1]" in out


def test_cli_selftest_deterministic(capsys):
    args = ["selftest", "--trials", "4", "--seed", "9"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "result: PASS" in first


def test_cli_selftest_zero_trials(capsys):
    assert main(["selftest", "--trials", "0"]) == 0
    out = capsys.readouterr().out
    assert "result: PASS (0 trials)" in out
