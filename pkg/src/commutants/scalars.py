"""Exact scalars: rationals and cyclotomic numbers.

Two fields are supported, Q (``fractions.Fraction``) and Q(zeta_q) for a
conductor q >= 1.  A cyclotomic number is stored as the unique residue of
a polynomial in zeta_q modulo the q-th cyclotomic polynomial Phi_q, so
equality is plain coefficient comparison.  Mixed-field arithmetic is
rejected; only the embedding of Q into Q(zeta_q) is applied implicitly
(ints and Fractions act as constants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import FieldMismatch, ZeroInverse

Scalar = Union[Fraction, "CycloScalar"]


@lru_cache(maxsize=None)
def cyclo_coeffs(q: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_q, ascending, computed by dividing
    x^q - 1 by the product of Phi_d over proper divisors d of q."""
    if q < 1:
        raise ValueError("conductor must be >= 1")
    if q == 1:
        return (-1, 1)
    rem = [0] * (q + 1)
    rem[0] = -1
    rem[q] = 1
    for d in range(1, q):
        if q % d:
            continue
        phi_d = cyclo_coeffs(d)
        rem = _int_poly_quotient(rem, phi_d)
    return tuple(rem)


def _int_poly_quotient(num: list[int], den: Sequence[int]) -> list[int]:
    # Exact long division by a monic integer polynomial.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dd] = c
        for j, p in enumerate(den):
            num[i - dd + j] -= c * p
    return out


def phi_degree(q: int) -> int:
    """Degree of Phi_q, i.e. Euler's totient of q."""
    return len(cyclo_coeffs(q)) - 1


def _reduce_mod_phi(coeffs: Sequence[Fraction], q: int) -> tuple[Fraction, ...]:
    phi = cyclo_coeffs(q)
    d = len(phi) - 1
    rem = [Fraction(c) for c in coeffs]
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        for j, p in enumerate(phi):
            rem[i - d + j] -= c * p
    rem = rem[:d] if len(rem) >= d else rem + [Fraction(0)] * (d - len(rem))
    return tuple(rem)


def _frac_poly_divmod(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead = den[-1]
    quo = [Fraction(0)] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        if c == 0:
            continue
        quo[i - dd] = c
        for j, p in enumerate(den):
            num[i - dd + j] -= c * p
    while num and num[-1] == 0:
        num.pop()
    return quo, num


def _frac_poly_xgcd(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    # Extended Euclid on coefficient lists; gcd is not normalized here.
    def mul(f, g):
        if not f or not g:
            return []
        out = [Fraction(0)] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            if x:
                for j, y in enumerate(g):
                    out[i + j] += x * y
        return out

    def sub(f, g):
        out = [Fraction(0)] * max(len(f), len(g))
        for i, x in enumerate(f):
            out[i] += x
        for i, y in enumerate(g):
            out[i] -= y
        while out and out[-1] == 0:
            out.pop()
        return out

    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    return r0, s0, t0


@dataclass(frozen=True, eq=False)
class CycloScalar:
    """An element of Q(zeta_q), reduced mod Phi_q.

    ``coeffs[i]`` is the coefficient of zeta_q^i; the tuple always has
    length deg Phi_q.  Input of any length is reduced on construction.
    """

    q: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _reduce_mod_phi(self.coeffs, self.q))

    @classmethod
    def zeta(cls, q: int, k: int = 1) -> CycloScalar:
        """The root of unity zeta_q^k."""
        k %= q
        return cls(q, tuple([Fraction(0)] * k + [Fraction(1)]))

    @classmethod
    def from_rational(cls, q: int, value) -> CycloScalar:
        return cls(q, (Fraction(value),))

    def _lift(self, other):
        if isinstance(other, CycloScalar):
            if other.q != self.q:
                raise FieldMismatch(
                    f"cannot mix Q(zeta_{self.q}) with Q(zeta_{other.q})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(self.q, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.q, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.q, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.q, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * (2 * len(self.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return CycloScalar(self.q, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloScalar.from_rational(self.q, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            return self.q == other.q and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def inverse(self) -> CycloScalar:
        """Multiplicative inverse via extended gcd with Phi_q."""
        if not self:
            raise ZeroInverse("zero has no inverse")
        phi = [Fraction(c) for c in cyclo_coeffs(self.q)]
        d, u, _ = _frac_poly_xgcd(list(self.coeffs), phi)
        # Phi_q is irreducible over Q, so d is a nonzero constant.
        c = d[0]
        return CycloScalar(self.q, tuple(x / c for x in u))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycloScalar(q={self.q}, {[str(c) for c in self.coeffs]})"


def cyclo_reduce(coeffs: Sequence, q: int) -> CycloScalar:
    """Interpret ``coeffs`` as a polynomial in zeta_q and reduce mod Phi_q.

    >>> cyclo_reduce([0, 0, 0, 1], 6).coeffs   # zeta_6^3 = -1
    (Fraction(-1, 1), Fraction(0, 1))
    """
    return CycloScalar(q, tuple(Fraction(c) for c in coeffs))


@dataclass(frozen=True)
class FieldTag:
    """Marks which field a Matrix or Poly lives over: Q when ``q`` is
    None, otherwise Q(zeta_q)."""

    q: int | None = None

    @classmethod
    def rational(cls) -> FieldTag:
        return cls(None)

    @classmethod
    def cyclotomic(cls, q: int) -> FieldTag:
        if not isinstance(q, int) or q < 1:
            raise ValueError("conductor must be a positive integer")
        return cls(q)

    @property
    def is_cyclotomic(self) -> bool:
        return self.q is not None

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value) -> Scalar:
        """Convert ``value`` into this field, rejecting cross-field input."""
        if self.q is None:
            if isinstance(value, CycloScalar):
                raise FieldMismatch("cyclotomic scalar in a rational context")
            return Fraction(value)
        if isinstance(value, CycloScalar):
            if value.q != self.q:
                raise FieldMismatch(
                    f"scalar of conductor {value.q} in a Q(zeta_{self.q}) context"
                )
            return value
        if isinstance(value, (list, tuple)):
            return cyclo_reduce(value, self.q)
        return CycloScalar.from_rational(self.q, Fraction(value))

    def omega(self, k: int = 1) -> CycloScalar:
        if self.q is None:
            raise FieldMismatch("Q has no designated root of unity")
        return CycloScalar.zeta(self.q, k)

    def __str__(self):
        return "Q" if self.q is None else f"Q(zeta_{self.q})"


QQ = FieldTag.rational()


def scalar_inverse(s) -> Scalar:
    """1/s, exactly.  Raises ZeroInverse on zero."""
    if isinstance(s, CycloScalar):
        return s.inverse()
    s = Fraction(s)
    if s == 0:
        raise ZeroInverse("zero has no inverse")
    return 1 / s
