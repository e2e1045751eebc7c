"""Command-line front-end: JSON in, JSON out, exact arithmetic inside.

Exit codes: 0 success, 1 negative mathematical verdict (not equivalent,
identity fails), 2 malformed input.  Errors go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .canonical import StructureReport
from .commutant import (
    OmegaSpec,
    centralizer_basis,
    clifforder_basis,
    clifforder_has_invertible,
    double_centralizer_basis,
    omega_centralizer_basis,
)
from .equivalence import Certificate, equivalence_certificate
from .errors import (
    AlgebraError,
    FieldError,
    InvalidSpec,
    ParseError,
    RaggedRows,
)
from .gen import (
    BlockDiag,
    Companion,
    ConjugateBy,
    DiagRational,
    GenSpec,
    NilpotentBlocks,
    generate,
)
from .matrices import Matrix
from .polys import CongruenceClass, Poly
from .potter import QuasiPair, omega_commutes, potter_check
from .scalars import QQ, CycloScalar, FieldTag, cyclo_reduce
from .subspaces import SubspaceBasis


# ---------------------------------------------------------------- parsing

def _parse_fraction(raw, where: str) -> Fraction:
    if isinstance(raw, bool):
        raise FieldError(f"{where}: booleans are not scalars")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise FieldError(f"{where}: floats are not accepted, use \"p/q\" strings")
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"{where}: bad rational {raw!r}") from exc
    raise FieldError(f"{where}: cannot read scalar from {type(raw).__name__}")


def _parse_scalar(raw, field: FieldTag, where: str):
    if isinstance(raw, list):
        if not field.is_cyclotomic:
            raise FieldError(f"{where}: coefficient arrays need a cyclotomic field")
        coeffs = [_parse_fraction(c, where) for c in raw]
        return cyclo_reduce(coeffs, field.q)
    value = _parse_fraction(raw, where)
    return field.coerce(value)


def _parse_field(raw) -> FieldTag:
    if raw == "Q":
        return QQ
    if isinstance(raw, dict) and set(raw) == {"cyclotomic"}:
        q = raw["cyclotomic"]
        if not isinstance(q, int) or isinstance(q, bool) or q < 1:
            raise FieldError(f"cyclotomic order must be a positive integer, got {q!r}")
        return FieldTag.cyclotomic(q)
    raise FieldError(f"unrecognized field designation {raw!r}")


def parse_matrix(text: bytes | str) -> Matrix:
    """Read a matrix from the JSON wire format
    {"field": "Q" | {"cyclotomic": q}, "rows": [[scalar, ...], ...]}
    where a scalar is an integer, a "p/q" string, or (cyclotomic only)
    a coefficient array in powers of zeta_q."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    missing = {"field", "rows"} - set(obj)
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    field = _parse_field(obj["field"])
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("\"rows\" must be a non-empty list of lists")
    width = len(rows[0])
    if width == 0:
        raise ParseError("rows must be non-empty")
    for i, row in enumerate(rows):
        if len(row) != width:
            raise RaggedRows(f"row {i} has length {len(row)}, expected {width}")
    parsed = [
        [_parse_scalar(x, field, f"row {i}, column {j}") for j, x in enumerate(row)]
        for i, row in enumerate(rows)
    ]
    return Matrix.make(parsed, field)


def _parse_class(text: str) -> CongruenceClass:
    if text == "general":
        return CongruenceClass.general()
    if text == "odd":
        return CongruenceClass.odd()
    if text.startswith("q:"):
        try:
            q = int(text[2:])
        except ValueError:
            raise FieldError(f"bad class {text!r}") from None
        if q < 1:
            raise FieldError(f"class modulus must be positive, got {q}")
        return CongruenceClass.q_class(q)
    raise FieldError(f"unrecognized class {text!r}; use general, odd or q:N")


def _parse_genspec(obj, where: str = "spec") -> GenSpec:
    if not isinstance(obj, dict):
        raise InvalidSpec(f"{where}: expected an object")
    if "profile" not in obj:
        raise InvalidSpec(f"{where}: missing \"profile\"")
    seed = obj.get("seed", 0)
    size = obj.get("size")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise InvalidSpec(f"{where}: seed must be an integer")
    if size is not None and (not isinstance(size, int) or isinstance(size, bool)):
        raise InvalidSpec(f"{where}: size must be an integer")
    return GenSpec(profile=_parse_profile(obj["profile"], where), seed=seed, size=size)


def _parse_profile(obj, where: str):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InvalidSpec(f"{where}: profile must be an object with exactly one key")
    (kind, payload), = obj.items()
    if kind == "nilpotent_blocks":
        if not isinstance(payload, list):
            raise InvalidSpec(f"{where}: nilpotent_blocks takes a list of sizes")
        return NilpotentBlocks(payload)
    if kind == "companion":
        if not isinstance(payload, list):
            raise InvalidSpec(f"{where}: companion takes ascending coefficients")
        coeffs = [_parse_fraction(c, where) for c in payload]
        return Companion(Poly.make(coeffs, QQ))
    if kind == "diag_rational":
        if not isinstance(payload, list):
            raise InvalidSpec(f"{where}: diag_rational takes a list of scalars")
        return DiagRational([_parse_fraction(c, where) for c in payload])
    if kind == "block_diag":
        if not isinstance(payload, list):
            raise InvalidSpec(f"{where}: block_diag takes a list of specs")
        parts = [_parse_genspec(p, f"{where}.block_diag[{i}]") for i, p in enumerate(payload)]
        return BlockDiag(parts)
    if kind == "conjugate_by":
        if not isinstance(payload, dict) or "inner" not in payload:
            raise InvalidSpec(f"{where}: conjugate_by needs an \"inner\" spec")
        height = payload.get("height", 3)
        if not isinstance(height, int) or isinstance(height, bool):
            raise InvalidSpec(f"{where}: height must be an integer")
        inner = _parse_genspec(payload["inner"], f"{where}.conjugate_by.inner")
        return ConjugateBy(inner=inner, height=height)
    raise InvalidSpec(f"{where}: unknown profile kind {kind!r}")


# ---------------------------------------------------------- serialization

def _scalar_json(x):
    if isinstance(x, CycloScalar):
        return [str(c) for c in x.coeffs]
    return str(x)


def _field_json(field: FieldTag):
    if field.is_cyclotomic:
        return {"cyclotomic": field.q}
    return "Q"


def matrix_json(M: Matrix) -> dict:
    return {
        "field": _field_json(M.field),
        "rows": [[_scalar_json(M.at(i, j)) for j in range(M.cols)] for i in range(M.rows)],
    }


def _poly_json(f: Poly) -> list:
    return [_scalar_json(c) for c in f.coeffs]


def _class_json(cls: CongruenceClass):
    if cls.q is None:
        return "general"
    if cls.q == 2:
        return "odd"
    return {"q": cls.q}


def certificate_json(cert: Certificate) -> dict:
    return {"f": _poly_json(cert.f), "g": _poly_json(cert.g), "class": _class_json(cert.cls)}


def _structure_json(rep: StructureReport) -> dict:
    return {
        "n": rep.n,
        "field": _field_json(rep.field),
        "char_poly": _poly_json(rep.char_poly),
        "min_poly": _poly_json(rep.min_poly),
        "invariant_factors": [_poly_json(f) for f in rep.invariant_factors],
        "is_balanced": rep.is_balanced,
        "is_nilpotent": rep.is_nilpotent,
        "min_equals_char": rep.min_equals_char,
    }


def _basis_json(S: SubspaceBasis) -> list:
    return [matrix_json(X) for X in S.basis]


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


# ------------------------------------------------------------- commands

def _read_matrix_file(path: str) -> Matrix:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(data)


def _cmd_analyze(args) -> int:
    A = _read_matrix_file(args.file)
    rep = StructureReport.of(A)
    cent = centralizer_basis(A)
    cliff = clifforder_basis(A)
    double = double_centralizer_basis(A)
    has_inv = clifforder_has_invertible(A)
    assert has_inv == rep.is_balanced, "flag disagrees with structure"
    out = {
        "input": matrix_json(A),
        "structure": _structure_json(rep),
        "dims": {
            "centralizer": cent.dim,
            "clifforder": cliff.dim,
            "double_centralizer": double.dim,
        },
        "flags": {
            "balanced": rep.is_balanced,
            "nilpotent": rep.is_nilpotent,
            "min_eq_char": rep.min_equals_char,
            "clifforder_has_invertible": has_inv,
        },
    }
    if args.q is not None:
        w = OmegaSpec(args.q, args.k)
        om = omega_centralizer_basis(A, w)
        out["omega"] = {"q": w.q, "k": w.k, "dim": om.dim, "basis": _basis_json(om)}
    _emit(out)
    return 0


def _cmd_subspace(args, which: str) -> int:
    A = _read_matrix_file(args.file)
    S = centralizer_basis(A) if which == "centralizer" else clifforder_basis(A)
    out = {"dimension": S.dim}
    if args.basis:
        out["basis"] = _basis_json(S)
    _emit(out)
    return 0


def _cmd_omega(args) -> int:
    A = _read_matrix_file(args.file)
    w = OmegaSpec(args.q, args.k)
    S = omega_centralizer_basis(A, w)
    out = {"q": w.q, "k": w.k, "dimension": S.dim}
    if args.basis:
        out["basis"] = _basis_json(S)
    _emit(out)
    return 0


def _cmd_equiv(args) -> int:
    A = _read_matrix_file(args.file_a)
    B = _read_matrix_file(args.file_b)
    cls = _parse_class(args.cls)
    cert = equivalence_certificate(A, B, cls)
    if cert is None:
        _emit({"equivalent": False})
        return 1
    _emit(certificate_json(cert))
    return 0


def _potter_samples(q: int, n_samples: int, seed: int):
    rng = random.Random(seed)
    field = FieldTag.cyclotomic(q)
    for _ in range(n_samples):
        s = field.coerce(Fraction(rng.randint(1, 9), rng.randint(1, 4)) * rng.choice([-1, 1]))
        t = field.coerce(Fraction(rng.randint(1, 9), rng.randint(1, 4)) * rng.choice([-1, 1]))
        s = s * CycloScalar.zeta(q, rng.randrange(q))
        t = t * CycloScalar.zeta(q, rng.randrange(q))
        yield s, t


def _cmd_potter(args) -> int:
    A = _read_matrix_file(args.file_a)
    B = _read_matrix_file(args.file_b)
    w = OmegaSpec(args.q, args.k)
    if not omega_commutes(A, B, w):
        _emit({"quasi_commuting": False, "q": w.q, "k": w.k})
        return 1
    pair = QuasiPair.of(A, B, w)
    checked = 0
    for s, t in _potter_samples(w.q, args.samples, args.seed):
        if not potter_check(pair, s, t):
            _emit({"quasi_commuting": True, "holds": False, "q": w.q, "samples_run": checked})
            return 1
        checked += 1
    _emit({"quasi_commuting": True, "holds": True, "q": w.q, "samples_run": checked})
    return 0


def _cmd_gen(args) -> int:
    raw = args.spec
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError:
        try:
            with open(raw, "rb") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise InvalidSpec(f"--spec is neither JSON nor a readable file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad spec JSON in {raw}: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    spec = _parse_genspec(obj)
    if args.seed is not None:
        spec = GenSpec(profile=spec.profile, seed=args.seed, size=spec.size)
    _emit(matrix_json(generate(spec)))
    return 0


# ----------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="commutants",
        description="Exact commutant-type subspaces, equivalence certificates and "
        "quasi-commutation checks for matrices over Q and Q(zeta_q).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="full structural report for one matrix")
    sp.add_argument("file")
    sp.add_argument("--q", type=int, default=None, help="add an omega-centralizer section")
    sp.add_argument("--k", type=int, default=1)

    for name in ("centralizer", "clifforder"):
        sp = sub.add_parser(name, help=f"dimension (and basis) of the {name}")
        sp.add_argument("file")
        sp.add_argument("--basis", action="store_true")

    sp = sub.add_parser("omega", help="omega-centralizer over Q(zeta_q)")
    sp.add_argument("file")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--basis", action="store_true")

    sp = sub.add_parser("equiv", help="two-sided polynomial equivalence certificate")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--class", dest="cls", default="general", help="general, odd or q:N")

    sp = sub.add_parser("potter", help="verify the q-th power collapse on sampled (s, t)")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("gen", help="materialize a generator spec to a matrix")
    sp.add_argument("--spec", required=True, help="inline JSON or a path to a JSON file")
    sp.add_argument("--seed", type=int, default=None)

    return p


def _error_json(exc: Exception) -> dict:
    out = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        if exc.line is not None:
            out["line"] = exc.line
        if exc.column is not None:
            out["column"] = exc.column
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "centralizer": lambda a: _cmd_subspace(a, "centralizer"),
        "clifforder": lambda a: _cmd_subspace(a, "clifforder"),
        "omega": _cmd_omega,
        "equiv": _cmd_equiv,
        "potter": _cmd_potter,
        "gen": _cmd_gen,
    }
    try:
        return handlers[args.command](args)
    except AlgebraError as exc:
        print(json.dumps(_error_json(exc)), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
