"""Subspaces of M_n as canonical RREF row spans.

A subspace is stored by the unique RREF of the vectorized spanning set,
which makes equality a plain tuple comparison and membership a single
reduction pass.  The invertibility probe is randomized but seeded, so
every run is replayable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import AmbientMismatch, FieldMismatch, NotSquare, ShapeMismatch
from .matrices import Matrix, rref, unvec, vstack_rows
from .scalars import FieldTag


@dataclass(frozen=True)
class SubspaceBasis:
    field: FieldTag
    ambient_n: int
    dim: int
    basis: tuple[Matrix, ...]
    rref_rows: tuple[tuple, ...]
    pivots: tuple[int, ...]


def subspace_from_matrices(
    mats: Sequence[Matrix],
    ambient_n: int | None = None,
    field: FieldTag | None = None,
) -> SubspaceBasis:
    """Span of the given matrices, canonicalized by row reduction.

    ``ambient_n`` and ``field`` are only needed for an empty list."""
    mats = list(mats)
    if not mats:
        if ambient_n is None or field is None:
            raise ShapeMismatch("empty span needs explicit ambient_n and field")
        return SubspaceBasis(field, ambient_n, 0, (), (), ())
    first = mats[0]
    if not first.is_square:
        raise NotSquare("subspace members must be square")
    n = first.rows
    f = first.field
    for m in mats:
        if m.shape != (n, n):
            raise ShapeMismatch(f"expected {n}x{n}, got {m.shape}")
        if m.field != f:
            raise FieldMismatch(f"{m.field} vs {f}")
    if ambient_n is not None and ambient_n != n:
        raise ShapeMismatch(f"ambient_n={ambient_n} but matrices are {n}x{n}")
    stacked = vstack_rows([m.entries for m in mats], f)
    r = rref(stacked)
    rows = tuple(r.rref.row(i) for i in range(r.rank))
    basis = tuple(unvec(row, n, f) for row in rows)
    return SubspaceBasis(f, n, r.rank, basis, rows, r.pivots)


def _check_same_ambient(S: SubspaceBasis, T: SubspaceBasis):
    if S.ambient_n != T.ambient_n or S.field != T.field:
        raise AmbientMismatch(
            f"M_{S.ambient_n} over {S.field} vs M_{T.ambient_n} over {T.field}"
        )


def subspace_equal(S: SubspaceBasis, T: SubspaceBasis) -> bool:
    """Exact equality of spans, via their canonical RREF rows."""
    _check_same_ambient(S, T)
    return S.rref_rows == T.rref_rows


def _reduce_against_rows(v: list, S: SubspaceBasis) -> list:
    for row, p in zip(S.rref_rows, S.pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return v


def subspace_contains(S: SubspaceBasis, X: Matrix) -> bool:
    """True iff vec(X) reduces to zero against the stored RREF rows."""
    if X.shape != (S.ambient_n, S.ambient_n):
        raise AmbientMismatch(f"expected {S.ambient_n}x{S.ambient_n}, got {X.shape}")
    if X.field != S.field:
        raise FieldMismatch(f"{X.field} vs {S.field}")
    v = _reduce_against_rows(list(X.entries), S)
    return not any(v)


def subspace_leq(S: SubspaceBasis, T: SubspaceBasis) -> bool:
    """True iff S is contained in T."""
    _check_same_ambient(S, T)
    for row in S.rref_rows:
        v = _reduce_against_rows(list(row), T)
        if any(v):
            return False
    return True


def random_invertible_probe(
    S: SubspaceBasis, trials: int = 64, seed: int = 0
) -> Matrix | None:
    """Search for an invertible element of S by sampling random integer
    combinations of the basis, with coefficient height growing per trial.
    Returns None when nothing invertible was found; that is evidence,
    not proof, so callers needing certainty use the balanced criterion.
    """
    if S.dim == 0:
        return None
    rng = random.Random(seed)
    for t in range(trials):
        h = 1 + t
        coeffs = [rng.randint(-h, h) for _ in range(S.dim)]
        if not any(coeffs):
            continue
        combo = None
        for c, b in zip(coeffs, S.basis):
            if c == 0:
                continue
            term = b.scale(c)
            combo = term if combo is None else combo + term
        if combo is not None and combo.det() != 0:
            return combo
    return None
