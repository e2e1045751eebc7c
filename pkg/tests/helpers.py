"""Shared fixtures-by-hand: golden matrices, oracle bridges to sympy,
and small random generators for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import smith_normal_form

from commutants import (
    CongruenceClass,
    CycloScalar,
    FieldTag,
    Matrix,
    Poly,
    QQ,
)

# ------------------------------------------------------------ builders

def mat(rows, field=QQ) -> Matrix:
    return Matrix.make(rows, field)


def frac(a, b=1) -> Fraction:
    return Fraction(a, b)


def poly(coeffs, field=QQ) -> Poly:
    return Poly.make(list(coeffs), field)


# ---------------------------------------------- hand-checked test pairs

# 5x5 pair: J_2(1) + J_3(-1) against J_2(2) + J_3(-2).
PAIR5_A = mat([
    [1, 1, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, -1, -1, 0],
    [0, 0, 0, -1, -1],
    [0, 0, 0, 0, -1],
])
PAIR5_B = mat([
    [2, 1, 0, 0, 0],
    [0, 2, 0, 0, 0],
    [0, 0, -2, -1, 0],
    [0, 0, 0, -2, -1],
    [0, 0, 0, 0, -2],
])
# A = f(B): (1/128)(3x^4 + 8x^3 - 24x^2 + 32x + 48), ascending.
PAIR5_A_FROM_B = poly([frac(3, 8), frac(1, 4), frac(-3, 16), frac(1, 16), frac(3, 128)])
# B = g(A): (1/8)(-3x^4 - 4x^3 + 6x^2 + 20x - 3), ascending.
PAIR5_B_FROM_A = poly([frac(-3, 8), frac(5, 2), frac(3, 4), frac(-1, 2), frac(-3, 8)])

# 4x4 odd pair: J_2(1) + diag(-1, -1) against J_2(2) + diag(-2, -2).
ODD4_A = Matrix.block_diag([Matrix.jordan(2, 1, QQ), Matrix.diag([-1, -1], QQ)])
ODD4_B = Matrix.block_diag([Matrix.jordan(2, 2, QQ), Matrix.diag([-2, -2], QQ)])
# A = (1/4)B + (1/16)B^3 and B = (5/2)A - (1/2)A^3.
ODD4_A_FROM_B = poly([0, frac(1, 4), 0, frac(1, 16)])
ODD4_B_FROM_A = poly([0, frac(5, 2), 0, frac(-1, 2)])
ODD4_A_FROM_B_GENERAL = poly([frac(-1, 2), frac(1, 2), frac(1, 8)])
ODD4_B_FROM_A_GENERAL = poly([frac(1, 2), 2, frac(-1, 2)])

# Unbalanced invertible 4x4 pair: [[1,12],[0,1]] + [[-1,-3],[0,-1]]
# against [[2,4],[0,2]] + [[-2,-1],[0,-2]], odd-equivalent.
TRI4_A = Matrix.block_diag([mat([[1, 12], [0, 1]]), mat([[-1, -3], [0, -1]])])
TRI4_B = Matrix.block_diag([mat([[2, 4], [0, 2]]), mat([[-2, -1], [0, -2]])])
TRI4_B_FROM_A = poly([0, frac(17, 6), 0, frac(-5, 6)])
TRI4_A_FROM_B = poly([0, frac(-3, 4), 0, frac(5, 16)])

# diag(1, 2) odd-equivalent to diag(3, 4).
DIAG2_A = Matrix.diag([1, 2], QQ)
DIAG2_B = Matrix.diag([3, 4], QQ)
DIAG2_A_FROM_B = poly([0, frac(5, 42), 0, frac(1, 42)])
DIAG2_B_FROM_A = poly([0, frac(10, 3), 0, frac(-1, 3)])

# Equal (zero) clifforders without any polynomial equivalence.
COUNTER_A = Matrix.diag([1, frac(2, 3), frac(1, 2)], QQ)
COUNTER_B = Matrix.identity(3, QQ)


# ------------------------------------------------------- sympy bridges

def to_sympy(M: Matrix) -> sympy.Matrix:
    """Rational matrices map to Rational entries; cyclotomic entries map
    to polynomials in a primitive root exp(2*pi*I/q)."""
    if not M.field.is_cyclotomic:
        return sympy.Matrix(M.rows, M.cols,
                            lambda i, j: sympy.Rational(M.at(i, j)))
    zeta = sympy.exp(2 * sympy.pi * sympy.I / M.field.q)

    def entry(i, j):
        x = M.at(i, j)
        return sum(sympy.Rational(c) * zeta ** e for e, c in enumerate(x.coeffs))

    return sympy.Matrix(M.rows, M.cols, entry)


def from_sympy(S: sympy.Matrix) -> Matrix:
    return mat([[Fraction(int(x.p), int(x.q)) for x in S.row(i)]
                for i in range(S.rows)])


def sympy_poly_coeffs(f: Poly) -> sympy.Poly:
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c) * x ** e for e, c in enumerate(f.coeffs))
    return sympy.Poly(expr, x, domain="QQ")


def sympy_invariant_factors(M: Matrix) -> list[Poly]:
    """Oracle: Smith normal form of xI - A over QQ[x], monic-normalized,
    computed entirely by sympy."""
    x = sympy.Symbol("x")
    XI = x * sympy.eye(M.rows) - to_sympy(M)
    snf = smith_normal_form(XI, domain=sympy.QQ[x])
    out = []
    for i in range(M.rows):
        p = sympy.Poly(snf[i, i], x, domain="QQ")
        out.append(_poly_from_sympy(p.monic() if not p.is_zero else p))
    return out


def minors_gcd_invariant_factors(M: Matrix) -> list[Poly]:
    """Independent oracle: d_k = gcd of all k x k minors of xI - A in
    QQ[x]; invariant factor k is d_k / d_(k-1).  Exponential in n, use
    only for n <= 4."""
    import itertools

    x = sympy.Symbol("x")
    XI = x * sympy.eye(M.rows) - to_sympy(M)
    n = M.rows
    d_prev = sympy.Poly(1, x, domain="QQ")
    out = []
    for k in range(1, n + 1):
        g = sympy.Poly(0, x, domain="QQ")
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                g = g.gcd(sympy.Poly(XI[rows, cols].det(), x, domain="QQ"))
        g = g.monic()
        out.append(_poly_from_sympy(g.div(d_prev)[0]))
        d_prev = g
    return out


def _poly_from_sympy(p: sympy.Poly) -> Poly:
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    return poly(cs)


def sympy_charpoly(M: Matrix) -> Poly:
    x = sympy.Symbol("x")
    p = to_sympy(M).charpoly(x)
    return _poly_from_sympy(sympy.Poly(p.as_expr(), x, domain="QQ"))


def relation_kernel_oracle(A: Matrix, mu_sympy) -> int:
    """Dimension of {X : AX = mu XA} computed column-by-column in sympy:
    the operator's matrix is assembled from its action on the unit
    matrices E_ij, with no Kronecker products involved."""
    n = A.rows
    S = to_sympy(A)
    cols = []
    for i in range(n):
        for j in range(n):
            E = sympy.zeros(n, n)
            E[i, j] = 1
            Y = S * E - mu_sympy * E * S
            cols.append([sympy.simplify(Y[r, c]) for r in range(n) for c in range(n)])
    op = sympy.Matrix(cols).T
    return n * n - op.rank()


# ------------------------------------------------------ random samples

def random_rational_matrix(seed: int, n: int, height: int = 4) -> Matrix:
    rng = random.Random(seed)
    return mat([[rng.randint(-height, height) for _ in range(n)] for _ in range(n)])


def random_jordan_matrix(seed: int, n: int) -> Matrix:
    """Random direct sum of Jordan blocks with small rational
    eigenvalues, then an integer change of basis."""
    rng = random.Random(seed)
    blocks = []
    left = n
    while left > 0:
        size = rng.randint(1, min(3, left))
        lam = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
        blocks.append(Matrix.jordan(size, lam, QQ))
        left -= size
    M = Matrix.block_diag(blocks)
    for _ in range(64):
        P = random_rational_matrix(rng.randrange(2 ** 30), n, 2)
        if P.det():
            return P.inverse() * M * P
    return M
