"""
Colored free quasi-symmetric functions in the G-basis.

A basis element ``G_{sigma,u}`` is stored as a :class:`Biword` whose top row
is the color word ``u`` and whose bottom row is the permutation ``sigma``.
An :class:`Element` is a sparse map from biwords to :class:`QPoly`
coefficients.

Two different dendriform structures live here and must not be mixed up:

* :func:`left_dend` / :func:`right_dend` split the ordinary product by the
  position of the largest letter of the bottom permutation;
* :func:`biword_left` / :func:`biword_right` combine the top rows with the
  word half-products and convolve the bottom rows.

Uncolored computations use the color word ``1...1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Mapping, NamedTuple, Optional

from .combinatorics import (
    Composition,
    Permutation,
    Word,
    as_permutation,
    convolution_split,
    format_word,
    permutations_with_descents,
    word_left_dend,
    word_right_dend,
)
from .qpoly import ONE, Q, QPoly, Scalar

__all__ = [
    "Biword", "Element", "EMPTY",
    "generator", "biletter", "basis",
    "product", "left_dend", "right_dend",
    "letter_product", "q_bracket", "pre_lie_q",
    "biword_left", "biword_right", "biword_product",
    "biword_left_split", "biword_right_split",
    "ribbon_R", "psi_ncsf", "psi_ncsf_bracket", "iota_S",
    "UNCOLORED",
]

UNCOLORED = 1


class Biword(NamedTuple):
    sigma: Permutation
    colors: Word

    def __str__(self) -> str:
        return f"({format_word(self.colors)}/{format_word(self.sigma)})"

    def sort_key(self):
        return (len(self.sigma), self.sigma, self.colors)


EMPTY = Biword((), ())


class Element:
    """Finite linear combination of biwords with polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Biword, Scalar]] = None):
        clean: dict[Biword, QPoly] = {}
        if terms:
            for b, c in terms.items():
                c = QPoly.coerce(c)
                if c:
                    clean[Biword(tuple(b[0]), tuple(b[1]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        # terms already canonical: Biword keys, nonzero QPoly values
        e = cls.__new__(cls)
        e.terms = terms
        return e

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def unit(cls) -> "Element":
        return cls._raw({EMPTY: ONE})

    # -- vector space -----------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        return Element._raw(out)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element._raw({b: -c for b, c in self.terms.items()})

    def scale(self, c: Scalar) -> "Element":
        c = QPoly.coerce(c)
        if not c:
            return Element.zero()
        out = {}
        for b, x in self.terms.items():
            y = x * c
            if y:
                out[b] = y
        return Element._raw(out)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return product(self, other)
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented

    # -- queries ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, b) -> QPoly:
        return self.terms.get(Biword(tuple(b[0]), tuple(b[1])), QPoly())

    def weights(self) -> set[int]:
        return {len(b.sigma) for b in self.terms}

    def weight(self) -> int:
        """The common length of all biwords; raises if the element is not homogeneous."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError(f"element is not homogeneous (weights {sorted(ws)})")
        return ws.pop()

    def evaluate(self, v: int) -> "Element":
        """Specialize ``q`` to the integer ``v``."""
        out = {}
        for b, c in self.terms.items():
            x = c(v)
            if x:
                out[b] = QPoly.constant(x)
        return Element._raw(out)

    def map_colors(self, f: Callable[[int], int]) -> "Element":
        out: dict[Biword, QPoly] = {}
        _accumulate(out, ((Biword(b.sigma, tuple(f(c) for c in b.colors)), x)
                          for b, x in self.terms.items()))
        return Element._raw(out)

    def sorted_terms(self) -> list[tuple[Biword, QPoly]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Element({self.to_text()})"

    def to_text(self) -> str:
        """Signed sum ``coeff · (colors/permutation)`` in canonical term order."""
        if not self.terms:
            return "0"
        out = []
        for b, c in self.sorted_terms():
            out.append(signed_term(c, str(b), not out))
        return " ".join(out)

    def to_json(self) -> list[dict]:
        return [{"sigma": list(b.sigma), "colors": list(b.colors), "coeff": c.to_json()}
                for b, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "Element":
        terms: dict[Biword, QPoly] = {}
        for rec in data:
            b = Biword(tuple(rec["sigma"]), tuple(rec["colors"]))
            if len(b.sigma) != len(b.colors):
                raise ValueError(f"biword rows differ in length: {rec}")
            if b in terms:
                raise ValueError(f"duplicate biword {b}")
            terms[b] = QPoly.from_json(rec["coeff"])
        return cls(terms)


def signed_term(c: QPoly, body: str, first: bool) -> str:
    """Render ``c · body`` with the sign pulled out front."""
    neg = c.coeffs[c.valuation] < 0 and len([x for x in c.coeffs if x]) == 1
    mag = -c if neg else c
    if mag == ONE:
        text = body
    elif len([x for x in mag.coeffs if x]) == 1:
        text = f"{mag} · {body}"
    else:
        text = f"({mag}) · {body}"
    if first:
        return ("-" if neg else "") + text
    return ("- " if neg else "+ ") + text


def _accumulate(out: dict, items: Iterable) -> None:
    for b, c in items:
        old = out.get(b)
        if old is None:
            out[b] = c
        else:
            s = old + c
            if s:
                out[b] = s
            else:
                del out[b]


def linear_combination(pairs: Iterable[tuple[Scalar, Element]]) -> Element:
    """``sum c * e`` accumulated in one dict rather than by repeated ``+``."""
    out: dict[Biword, QPoly] = {}
    for c, e in pairs:
        c = QPoly.coerce(c)
        if c:
            _accumulate(out, ((b, k * c) for b, k in e.terms.items()))
    return Element._raw(out)


# ---------------------------------------------------------------------------
# constructors

def basis(sigma, colors=None) -> Element:
    """The single basis element ``G_{sigma,colors}`` (uncolored by default)."""
    sigma = as_permutation(sigma)
    colors = tuple(colors) if colors is not None else (UNCOLORED,) * len(sigma)
    if len(colors) != len(sigma):
        raise ValueError("permutation and color word must have the same length")
    if any(c < 1 for c in colors):
        raise ValueError(f"colors must be positive: {colors}")
    return Element._raw({Biword(sigma, colors): ONE})


def generator(c: int = UNCOLORED) -> Element:
    """``x_c = G_{1,c}``."""
    return basis((1,), (c,))


def biletter(color: int, position: int) -> Element:
    """A single biletter: color over an arbitrary bottom letter."""
    return Element._raw({Biword((position,), (color,)): ONE})


# ---------------------------------------------------------------------------
# products

def _bilinear(e1: Element, e2: Element, rule) -> Element:
    out: dict[Biword, QPoly] = {}
    for b1, c1 in e1.terms.items():
        for b2, c2 in e2.terms.items():
            c = c1 * c2
            if c:
                _accumulate(out, ((b, c) for b in rule(b1, b2)))
    return Element._raw(out)


def _product_rule(b1: Biword, b2: Biword):
    colors = b1.colors + b2.colors
    return [Biword(g, colors) for g, _ in convolution_split(b1.sigma, b2.sigma)]


def _check_nonempty(*elements: Element) -> None:
    for e in elements:
        if EMPTY in e.terms:
            raise ValueError("dendriform half-products are undefined on the empty biword")


def product(e1: Element, e2: Element) -> Element:
    """``G_{a,u} G_{b,v} = sum over g in a*b of G_{g,uv}``, extended bilinearly."""
    return _bilinear(e1, e2, _product_rule)


def left_dend(e1: Element, e2: Element) -> Element:
    """The terms of the product whose largest letter lies in the left factor."""
    _check_nonempty(e1, e2)

    def rule(b1, b2):
        colors = b1.colors + b2.colors
        return [Biword(g, colors) for g, left in convolution_split(b1.sigma, b2.sigma) if left]
    return _bilinear(e1, e2, rule)


def right_dend(e1: Element, e2: Element) -> Element:
    """The terms of the product whose largest letter lies in the right factor."""
    _check_nonempty(e1, e2)

    def rule(b1, b2):
        colors = b1.colors + b2.colors
        return [Biword(g, colors) for g, left in convolution_split(b1.sigma, b2.sigma) if not left]
    return _bilinear(e1, e2, rule)


def letter_product(e1: Element, e2: Element) -> Element:
    """Plain concatenation of both rows, as for products of biletters."""
    return _bilinear(e1, e2, lambda b1, b2: [Biword(b1.sigma + b2.sigma, b1.colors + b2.colors)])


def q_bracket(e1: Element, e2: Element, mul: Callable[[Element, Element], Element] = product) -> Element:
    """``[x, y]_q = xy - q yx`` for the multiplication ``mul``."""
    return mul(e1, e2) - mul(e2, e1).scale(Q)


def pre_lie_q(e1: Element, e2: Element) -> Element:
    """``x ▷_q y = x ≻ y - q (y ≺ x)``."""
    return right_dend(e1, e2) - left_dend(e2, e1).scale(Q)


def _biword_rule(word_op):
    def rule(b1, b2):
        top = word_op(b1.colors, b2.colors)
        if top is None:
            return []
        return [Biword(g, top) for g, _ in convolution_split(b1.sigma, b2.sigma)]
    return rule


def biword_left(e1: Element, e2: Element) -> Element:
    """Top rows by the word half-product ``≺``, bottom rows convolved."""
    _check_nonempty(e1, e2)
    return _bilinear(e1, e2, _biword_rule(word_left_dend))


def biword_right(e1: Element, e2: Element) -> Element:
    """Top rows by the word half-product ``≻``, bottom rows convolved."""
    _check_nonempty(e1, e2)
    return _bilinear(e1, e2, _biword_rule(word_right_dend))


def biword_product(e1: Element, e2: Element) -> Element:
    """Concatenated top rows over convolved bottom rows (the ordinary product)."""
    return product(e1, e2)


def _color_splits(e1: Element, e2: Element):
    """Yield both operands recolored by every pair of complementary color sets.

    Top rows must be permutations of ``1..k`` and ``1..m``.
    """
    k, m = e1.weight(), e2.weight()
    n = k + m
    full = range(1, n + 1)
    for left in combinations(full, k):
        ls = set(left)
        right = tuple(c for c in full if c not in ls)
        yield (e1.map_colors(lambda c, t=left: t[c - 1]),
               e2.map_colors(lambda c, t=right: t[c - 1]))


def biword_left_split(e1: Element, e2: Element) -> Element:
    """:func:`biword_left` summed over all order-preserving color relabelings."""
    out = Element.zero()
    for a, b in _color_splits(e1, e2):
        out = out + biword_left(a, b)
    return out


def biword_right_split(e1: Element, e2: Element) -> Element:
    """:func:`biword_right` summed over all order-preserving color relabelings."""
    out = Element.zero()
    for a, b in _color_splits(e1, e2):
        out = out + biword_right(a, b)
    return out


# ---------------------------------------------------------------------------
# uncolored facts

def ribbon_R(I: Composition, color: int = UNCOLORED) -> Element:
    n = sum(I)
    colors = (color,) * n
    return Element._raw({Biword(s, colors): ONE for s in permutations_with_descents(tuple(I))})


def psi_ncsf(n: int) -> Element:
    """``sum_k (-1)^k R_{1^k, n-k}``."""
    if n < 1:
        raise ValueError("psi_ncsf needs n >= 1")
    out = Element.zero()
    for k in range(n):
        out = out + ribbon_R((1,) * k + (n - k,)).scale((-1) ** k)
    return out


def psi_ncsf_bracket(n: int) -> Element:
    """``[[..[1,2],..],n]`` with permutations multiplied as words."""
    if n < 1:
        raise ValueError("psi_ncsf_bracket needs n >= 1")
    acc = biletter(UNCOLORED, 1)
    for i in range(2, n + 1):
        x = biletter(UNCOLORED, i)
        acc = letter_product(acc, x) - letter_product(x, acc)
    return acc


def iota_S(n: int, color: int = UNCOLORED) -> Element:
    """``(..((x ≻ x) ≻ x)..) ≻ x`` with ``n`` factors."""
    x = generator(color)
    acc = x
    for _ in range(n - 1):
        acc = right_dend(acc, x)
    return acc
