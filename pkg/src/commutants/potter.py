"""Quasi-commuting pairs, the binomial-collapse identity, and the
omega-centralizer equivalence report."""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import char_poly
from .commutant import OmegaSpec, omega_centralizer_basis
from .equivalence import Certificate, equivalence_certificate
from .errors import (
    BadDimensions,
    FieldMismatch,
    NotNilpotent,
    NotSquare,
    PairInvariantViolated,
    ShapeMismatch,
)
from .matrices import Matrix
from .polys import CongruenceClass, Poly
from .subspaces import subspace_equal


def omega_commutes(A: Matrix, B: Matrix, w: OmegaSpec) -> bool:
    """Whether AB = omega * BA (inputs promoted to Q(zeta_q))."""
    if not A.is_square or not B.is_square:
        raise NotSquare("quasi-commutation needs square matrices")
    if A.rows != B.rows:
        raise ShapeMismatch(f"sizes differ: {A.rows} vs {B.rows}")
    A = A.promote(w.q)
    B = B.promote(w.q)
    return (A * B - (B * A).scale(w.omega())).is_zero()


@dataclass(frozen=True)
class QuasiPair:
    """A pair with AB = omega * BA; the relation is checked on
    construction and violations raise immediately."""

    A: Matrix
    B: Matrix
    omega: OmegaSpec

    def __post_init__(self):
        if not omega_commutes(self.A, self.B, self.omega):
            raise PairInvariantViolated("AB != omega * BA for this pair")

    @classmethod
    def of(cls, A: Matrix, B: Matrix, w: OmegaSpec) -> "QuasiPair":
        return cls(A.promote(w.q), B.promote(w.q), w)


def potter_check(pair: QuasiPair, s, t) -> bool:
    """Verify (sA + tB)^q = s^q A^q + t^q B^q for the pair."""
    q = pair.omega.q
    field = pair.omega.field
    A = pair.A.promote(q)
    B = pair.B.promote(q)
    s = field.coerce(s)
    t = field.coerce(t)
    lhs = (A.scale(s) + B.scale(t)) ** q
    rhs = (A ** q).scale(s ** q) + (B ** q).scale(t ** q)
    return lhs == rhs


def weyl_pair(q: int, n: int) -> QuasiPair:
    """Block-diagonal clock/shift pair of size n (q must divide n).

    D repeats diag(1, omega, ..., omega^(q-1)); S repeats the cyclic
    left shift sending e_i to e_(i+1 mod q).  Then DS = omega * SD.
    """
    w = OmegaSpec(q, 1)
    if n < 1 or n % q != 0:
        raise BadDimensions(f"size n={n} is not a positive multiple of q={q}")
    field = w.field
    clock = Matrix.diag([w.omega() ** i for i in range(q)], field)
    shift_rows = [[1 if (r - 1) % q == c else 0 for c in range(q)] for r in range(q)]
    shift = Matrix.make(shift_rows, field)
    copies = n // q
    D = Matrix.block_diag([clock] * copies)
    S = Matrix.block_diag([shift] * copies)
    return QuasiPair(D, S, w)


@dataclass(frozen=True)
class OmegaEquivalenceReport:
    """Outcome of comparing omega-centralizers against q-class
    polynomial equivalence for nilpotent input."""

    centralizers_equal: bool
    certificate: Certificate | None
    agree: bool


def omega_equivalence_check(A: Matrix, B: Matrix, w: OmegaSpec) -> OmegaEquivalenceReport:
    """For nilpotent A: do A and B share an omega-centralizer exactly
    when each is a q-class polynomial in the other?"""
    if not A.is_square or not B.is_square:
        raise NotSquare("equivalence check needs square matrices")
    if A.rows != B.rows:
        raise ShapeMismatch(f"sizes differ: {A.rows} vs {B.rows}")
    n = A.rows
    if char_poly(A) != Poly.monomial(n, 1, A.field):
        raise NotNilpotent("first matrix must be nilpotent")
    if A.field != B.field:
        if not A.field.is_cyclotomic:
            A = A.promote(B.field.q)
        elif not B.field.is_cyclotomic:
            B = B.promote(A.field.q)
        else:
            raise FieldMismatch(f"fields differ: {A.field} vs {B.field}")
    CA = omega_centralizer_basis(A, w)
    CB = omega_centralizer_basis(B, w)
    equal = subspace_equal(CA, CB)
    cert = equivalence_certificate(A, B, CongruenceClass.q_class(w.q))
    return OmegaEquivalenceReport(
        centralizers_equal=equal,
        certificate=cert,
        agree=equal == (cert is not None),
    )
