"""
Univariate polynomials in ``q`` with integer coefficients.

A :class:`QPoly` stores its coefficients in ascending degree with no
trailing zero, so the zero polynomial is the empty tuple and equality is
plain tuple equality.

>>> str((1 - Q) * (1 - Q))
'1-2q+q^2'
>>> try_factor(Q * Q - Q)
FactoredCoeff(sign=1, a=1, b=1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

__all__ = ["QPoly", "Q", "ZERO", "ONE", "FactoredCoeff", "try_factor", "eval_int"]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _normalize(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"coefficients must be integers, got {x!r}")
        self.coeffs = c
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPoly":
        return cls((0,) * degree + (c,))

    @staticmethod
    def coerce(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return QPoly((x,))
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial in q")

    # -- ring structure ---------------------------------------------------

    def __add__(self, other) -> "QPoly":
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> "QPoly":
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return QPoly.coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> "QPoly":
        return QPoly(c * x for x in self.coeffs)

    # -- queries ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("QPoly", self.coeffs))
        return self._hash

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest degree with a nonzero coefficient; -1 for zero."""
        for i, x in enumerate(self.coeffs):
            if x:
                return i
        return -1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, v: int) -> int:
        acc = 0
        for x in reversed(self.coeffs):
            acc = acc * v + x
        return acc

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                term = str(c)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                term = mono if c == 1 else "-" + mono if c == -1 else f"{c}{mono}"
            if out and not term.startswith("-"):
                term = "+" + term
            out.append(term)
        return "".join(out)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "QPoly":
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError(f"polynomial JSON must be an integer array, got {data!r}")
        p = cls(data)
        if list(p.coeffs) != data:
            raise ValueError(f"non-canonical polynomial array {data!r}")
        return p


Scalar = Union[int, QPoly]

ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def eval_int(p: QPoly, v: int) -> int:
    return p(v)


@dataclass(frozen=True)
class FactoredCoeff:
    """``sign * (-q)**a * (1-q)**b``."""
    sign: int
    a: int
    b: int

    def expand(self) -> QPoly:
        return (-Q) ** self.a * (1 - Q) ** self.b * self.sign

    def __str__(self) -> str:
        parts = []
        if self.a:
            parts.append("q" if self.a == 1 else f"q^{self.a}")
        if self.b:
            parts.append("(1-q)" if self.b == 1 else f"(1-q)^{self.b}")
        sign = self.sign * (-1) ** self.a
        body = "".join(parts) or "1"
        return ("-" if sign < 0 else "") + body


def try_factor(p: QPoly) -> Optional[FactoredCoeff]:
    """Write ``p`` as ``±(-q)^a (1-q)^b`` if possible."""
    if not p:
        return None
    a = p.valuation
    b = p.degree - a
    lead = p.coeffs[a] * (-1) ** a
    if lead not in (1, -1):
        return None
    f = FactoredCoeff(lead, a, b)
    return f if f.expand() == p else None
