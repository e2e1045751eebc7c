import json
from fractions import Fraction

import pytest

from commutants import (
    CycloScalar,
    FieldError,
    InvalidSpec,
    Matrix,
    ParseError,
    QQ,
    RaggedRows,
    eval_at_matrix,
)
from commutants.cli import main, matrix_json, parse_matrix
from helpers import PAIR5_A, PAIR5_B, PAIR5_A_FROM_B, PAIR5_B_FROM_A, ODD4_A, ODD4_B, mat, poly


def write_matrix(path, M):
    path.write_text(json.dumps(matrix_json(M)))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    cap = capsys.readouterr()
    out = json.loads(cap.out) if cap.out.strip() else None
    return code, out, cap.err


# ---------------------------------------------------------------- parsing

def test_parse_matrix_rational():
    A = parse_matrix('{"field": "Q", "rows": [[0, 1], [0, 0]]}')
    assert A == Matrix.jordan(2, 0, QQ)
    B = parse_matrix('{"field": "Q", "rows": [["2/3", -1], ["0/5", "7"]]}')
    assert B.at(0, 0) == Fraction(2, 3)
    assert B.at(1, 0) == 0


def test_parse_matrix_accepts_bytes():
    A = parse_matrix(b'{"field": "Q", "rows": [[1]]}')
    assert A.at(0, 0) == 1
    with pytest.raises(ParseError):
        parse_matrix(b"\xff\xfe")


def test_parse_matrix_cyclotomic():
    text = json.dumps({
        "field": {"cyclotomic": 6},
        "rows": [[[0, 0, 1, 0], 0], [0, [0, 0, 0, 1]]],
    })
    A = parse_matrix(text)
    z = CycloScalar.zeta(6)
    assert A == Matrix.diag([z ** 2, z ** 3], A.field)


def test_parse_matrix_errors():
    with pytest.raises(RaggedRows):
        parse_matrix('{"field": "Q", "rows": [[1, 2], [3]]}')
    with pytest.raises(FieldError):
        parse_matrix('{"field": "Q", "rows": [[1.5]]}')
    with pytest.raises(FieldError):
        parse_matrix('{"field": "Q", "rows": [[true]]}')
    with pytest.raises(FieldError):
        parse_matrix('{"field": "Q", "rows": [["nope"]]}')
    with pytest.raises(FieldError):
        parse_matrix('{"field": "Q", "rows": [[[1, 0]]]}')
    with pytest.raises(FieldError):
        parse_matrix('{"field": "R", "rows": [[1]]}')
    with pytest.raises(ParseError):
        parse_matrix('{"rows": [[1]]}')
    with pytest.raises(ParseError):
        parse_matrix('{"field": "Q", "rows": []}')
    with pytest.raises(ParseError):
        parse_matrix('[1, 2]')


def test_parse_matrix_reports_json_position():
    try:
        parse_matrix('{"field": "Q",\n "rows": [[1,]]}')
    except ParseError as exc:
        assert exc.line == 2
        assert exc.column is not None
    else:
        pytest.fail("expected ParseError")


def test_round_trip_rational_and_cyclotomic():
    from commutants import FieldTag
    for M in (mat([[1, Fraction(2, 3)], [0, -4]]),
              Matrix.jordan(3, Fraction(1, 2), QQ)):
        assert parse_matrix(json.dumps(matrix_json(M))) == M
    z = CycloScalar.zeta(5)
    C = Matrix.make([[z, z ** 2], [z - z, z ** 4 + 1]], FieldTag.cyclotomic(5))
    assert parse_matrix(json.dumps(matrix_json(C))) == C


# ---------------------------------------------------------------- analyze

def test_analyze_nilpotent(tmp_path, capsys):
    f = write_matrix(tmp_path / "a.json", Matrix.jordan(3, 0, QQ))
    code, out, _ = run(capsys, ["analyze", f])
    assert code == 0
    assert out["structure"]["is_nilpotent"] is True
    assert out["structure"]["min_equals_char"] is True
    assert out["flags"]["balanced"] is True
    assert out["flags"]["clifforder_has_invertible"] is True
    assert out["dims"]["centralizer"] == 3
    assert out["dims"]["clifforder"] == 3
    assert out["dims"]["double_centralizer"] == 3


def test_analyze_unbalanced(tmp_path, capsys):
    f = write_matrix(tmp_path / "a.json", Matrix.diag([1, 2], QQ))
    code, out, _ = run(capsys, ["analyze", f])
    assert code == 0
    assert out["flags"]["balanced"] is False
    assert out["dims"]["clifforder"] == 0


def test_analyze_with_omega_section(tmp_path, capsys):
    f = write_matrix(tmp_path / "a.json", Matrix.jordan(2, 0, QQ))
    code, out, _ = run(capsys, ["analyze", f, "--q", "3"])
    assert code == 0
    assert out["omega"]["q"] == 3
    assert out["omega"]["dim"] == 2
    assert len(out["omega"]["basis"]) == 2


# --------------------------------------------------------- subspace dumps

def test_centralizer_basis_elements_commute(tmp_path, capsys):
    A = mat([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    f = write_matrix(tmp_path / "a.json", A)
    code, out, _ = run(capsys, ["centralizer", f, "--basis"])
    assert code == 0
    assert out["dimension"] == len(out["basis"])
    for item in out["basis"]:
        X = parse_matrix(json.dumps(item))
        assert A * X == X * A


def test_clifforder_dimension(tmp_path, capsys):
    f = write_matrix(tmp_path / "a.json", Matrix.jordan(4, 0, QQ))
    code, out, _ = run(capsys, ["clifforder", f])
    assert code == 0
    assert out == {"dimension": 4}


def test_omega_command(tmp_path, capsys):
    f = write_matrix(tmp_path / "a.json", Matrix.jordan(2, 0, QQ))
    code, out, _ = run(capsys, ["omega", f, "--q", "3", "--basis"])
    assert code == 0
    assert out["dimension"] == 2
    z = CycloScalar.zeta(3)
    A = Matrix.jordan(2, 0, QQ).promote(3)
    for item in out["basis"]:
        X = parse_matrix(json.dumps(item))
        assert A * X == (X * A).scale(z)


# ------------------------------------------------------------------ equiv

def test_equiv_golden_pair(tmp_path, capsys):
    fa = write_matrix(tmp_path / "a.json", PAIR5_A)
    fb = write_matrix(tmp_path / "b.json", PAIR5_B)
    code, out, _ = run(capsys, ["equiv", fb, fa])
    assert code == 0
    assert out["class"] == "general"
    assert out["f"] == [str(c) for c in PAIR5_A_FROM_B.coeffs]
    assert out["g"] == [str(c) for c in PAIR5_B_FROM_A.coeffs]


def test_equiv_negative(tmp_path, capsys):
    fa = write_matrix(tmp_path / "a.json", Matrix.diag([1, 1], QQ))
    fb = write_matrix(tmp_path / "b.json", Matrix.diag([2, 3], QQ))
    code, out, _ = run(capsys, ["equiv", fa, fb])
    assert code == 1
    assert out == {"equivalent": False}


def test_equiv_odd_class(tmp_path, capsys):
    fa = write_matrix(tmp_path / "a.json", ODD4_A)
    fb = write_matrix(tmp_path / "b.json", ODD4_B)
    code, out, _ = run(capsys, ["equiv", fa, fb, "--class", "odd"])
    assert code == 0
    assert out["class"] == "odd"


def test_equiv_q_class(tmp_path, capsys):
    A = Matrix.jordan(5, 0, QQ)
    B = eval_at_matrix(poly([0, 4, 0, 0, -3]), A)
    fa = write_matrix(tmp_path / "a.json", A)
    fb = write_matrix(tmp_path / "b.json", B)
    code, out, _ = run(capsys, ["equiv", fa, fb, "--class", "q:3"])
    assert code == 0
    assert out["class"] == {"q": 3}


# ----------------------------------------------------------------- potter

def test_potter_weyl(tmp_path, capsys):
    from commutants import weyl_pair
    pair = weyl_pair(3, 3)
    fa = write_matrix(tmp_path / "a.json", pair.A)
    fb = write_matrix(tmp_path / "b.json", pair.B)
    code, out, _ = run(capsys, ["potter", fa, fb, "--q", "3", "--samples", "5"])
    assert code == 0
    assert out["quasi_commuting"] is True
    assert out["holds"] is True
    assert out["samples_run"] == 5


def test_potter_not_quasi_commuting(tmp_path, capsys):
    fa = write_matrix(tmp_path / "a.json", Matrix.identity(2, QQ))
    fb = write_matrix(tmp_path / "b.json", Matrix.identity(2, QQ))
    code, out, _ = run(capsys, ["potter", fa, fb, "--q", "3"])
    assert code == 1
    assert out == {"quasi_commuting": False, "q": 3, "k": 1}


# -------------------------------------------------------------------- gen

def test_gen_inline_and_stable(capsys):
    spec = '{"profile": {"nilpotent_blocks": [2, 3]}}'
    code, out, _ = run(capsys, ["gen", "--spec", spec])
    assert code == 0
    first = json.dumps(out)
    code, out2, _ = run(capsys, ["gen", "--spec", spec])
    assert code == 0
    assert json.dumps(out2) == first
    A = parse_matrix(first)
    assert A == Matrix.block_diag([Matrix.jordan(2, 0, QQ), Matrix.jordan(3, 0, QQ)])


def test_gen_from_file_with_seed_override(tmp_path, capsys):
    spec = {"profile": {"conjugate_by": {"inner": {"profile": {"diag_rational": [1, 2, 3]}}}},
            "seed": 7}
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, ["gen", "--spec", str(path)])
    assert code == 0
    code, out2, _ = run(capsys, ["gen", "--spec", str(path), "--seed", "8"])
    assert code == 0
    assert out != out2


def test_gen_companion_profile(capsys):
    spec = '{"profile": {"companion": [1, 0, 1]}}'
    code, out, _ = run(capsys, ["gen", "--spec", spec])
    assert code == 0
    assert parse_matrix(json.dumps(out)) == mat([[0, -1], [1, 0]])


def test_gen_bad_profile(capsys):
    code, out, err = run(capsys, ["gen", "--spec", '{"profile": {"mystery": 1}}'])
    assert code == 2
    assert out is None
    payload = json.loads(err)
    assert payload["error"] == "InvalidSpec"


# ----------------------------------------------------------- error paths

def test_missing_file_is_input_error(capsys):
    code, out, err = run(capsys, ["analyze", "/nonexistent/never.json"])
    assert code == 2
    assert json.loads(err)["error"] == "ParseError"


def test_bad_json_reports_position(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"field": "Q",\n "rows": [[1,]]}')
    code, out, err = run(capsys, ["analyze", str(path)])
    assert code == 2
    payload = json.loads(err)
    assert payload["error"] == "ParseError"
    assert payload["line"] == 2
    assert "column" in payload


def test_ragged_rows_error_class(tmp_path, capsys):
    path = tmp_path / "ragged.json"
    path.write_text('{"field": "Q", "rows": [[1, 2], [3]]}')
    code, out, err = run(capsys, ["centralizer", str(path)])
    assert code == 2
    assert json.loads(err)["error"] == "RaggedRows"


def test_bad_omega_spec(tmp_path, capsys):
    f = write_matrix(tmp_path / "a.json", Matrix.jordan(2, 0, QQ))
    code, out, err = run(capsys, ["omega", f, "--q", "4", "--k", "2"])
    assert code == 2
    assert json.loads(err)["error"] == "InvalidSpec"
