"""Iterated commutator (ad) operators and their kernels."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BadExponent, FieldMismatch, NotSquare, ShapeMismatch
from .matrices import Matrix, kernel_basis, kron, unvec
from .polys import Poly, eval_at_matrix
from .subspaces import SubspaceBasis, subspace_from_matrices

DEFAULT_MAX_POWER = 16


@dataclass(frozen=True)
class AdOperator:
    """ad_A as an n^2 x n^2 matrix acting on vec(X)."""

    A: Matrix
    op_matrix: Matrix

    @classmethod
    def of(cls, A: Matrix) -> "AdOperator":
        if not A.is_square:
            raise NotSquare("ad operator needs a square matrix")
        ident = Matrix.identity(A.rows, A.field)
        op = kron(A, ident) - kron(ident, A.transpose())
        return cls(A, op)

    def apply(self, X: Matrix) -> Matrix:
        return self.A * X - X * self.A


def ad_power_kernel(A: Matrix, k: int, max_power: int = DEFAULT_MAX_POWER) -> SubspaceBasis:
    """Kernel of (ad_A)^k as a subspace of n x n matrices."""
    if not isinstance(k, int) or k < 1 or k > max_power:
        raise BadExponent(f"power k={k} outside 1..{max_power}")
    op = AdOperator.of(A).op_matrix ** k
    mats = [unvec(v, A.rows, A.field) for v in kernel_basis(op)]
    return subspace_from_matrices(mats, ambient_n=A.rows, field=A.field)


def ann_k_member(X: Matrix, B: Matrix, k: int) -> bool:
    """Whether sum_i C(k,i) (-1)^i X^(k-i) B X^i vanishes, i.e. B is
    killed by the k-th iterate of ad_X.  Computed from the expanded
    binomial form on purpose; the recursive commutator is the oracle
    the tests compare against."""
    if not X.is_square or not B.is_square:
        raise NotSquare("ann_k membership needs square matrices")
    if X.rows != B.rows:
        raise ShapeMismatch(f"sizes differ: {X.rows} vs {B.rows}")
    if X.field != B.field:
        raise FieldMismatch(f"fields differ: {X.field} vs {B.field}")
    if not isinstance(k, int) or k < 1:
        raise BadExponent(f"power k={k} must be a positive integer")
    n = X.rows
    powers = [Matrix.identity(n, X.field)]
    for _ in range(k):
        powers.append(powers[-1] * X)
    acc = Matrix.zero(n, n, X.field)
    for i in range(k + 1):
        term = powers[k - i] * B * powers[i]
        coeff = comb(k, i) * (-1 if i % 2 else 1)
        acc = acc + term.scale(coeff)
    return acc.is_zero()


def ad_inclusion_check(A: Matrix, f: Poly, k: int, max_power: int = DEFAULT_MAX_POWER) -> bool:
    """Test ker (ad_A)^k <= ker (ad_f(A))^k by running the iterated
    commutator with f(A) on every kernel basis element."""
    F = eval_at_matrix(f, A)
    ker = ad_power_kernel(A, k, max_power=max_power)
    for X in ker.basis:
        Y = X
        for _ in range(k):
            Y = F * Y - Y * F
        if not Y.is_zero():
            return False
    return True
