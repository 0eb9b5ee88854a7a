"""
The q-bracketing elements, their sums, the colored ribbon and elementary
bases, and the closed-form predictions for their coefficients.

Conventions
-----------
In ``R_I^{(J)}`` and ``Λ_I^{(J)}`` the index ``I`` is the descent class of
the bottom permutation and ``J`` the saillance class of the top color
permutation. Coefficient grids put ``I`` on rows and ``J`` on columns, both
ordered by :func:`~dqsym.combinatorics.composition_order_index`.

>>> print(psi_u((2, 1)))
(21/12) - q · (12/21)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Mapping, Optional

from .combinatorics import (
    Composition,
    Permutation,
    Word,
    as_composition,
    composition_from_descents,
    composition_order_index,
    compositions,
    conjugate,
    descent_composition,
    descent_set,
    descent_set_minus,
    finer_refinements,
    format_composition,
    format_word,
    i_decomposition,
    initially_dominated_factorization,
    is_finer,
    is_permutation,
    lattice_interval,
    mirror,
    permutations_with_descents,
    permutations_with_saillance,
    saillance_composition,
    statistic_D,
)
from .fqsym import (
    Biword,
    Element,
    biletter,
    generator,
    letter_product,
    linear_combination,
    pre_lie_q,
    q_bracket,
    signed_term,
)
from .qpoly import ONE, Q, QPoly, ZERO

DEFAULT_MAX_N = 7

__all__ = [
    "DEFAULT_MAX_N", "BoundExceeded", "SpanError", "check_bound",
    "Key", "BasisExpansion",
    "psi_u", "psi_u_pre_lie", "psi_sigma", "sigma_n", "p_L",
    "r_IJ", "lambda_IJ", "lambda_interval",
    "expand_in_R", "expand_in_lambda", "lambda_to_R", "r_to_lambda",
    "theorem1_prediction", "theorem1_prediction_printed_sign",
    "c_coefficient", "theorem2_pairs", "theorem2_prediction",
    "pn_closed_R", "pn_lambda_intervals", "glue_L",
    "identity_colorings",
]

Key = tuple[Composition, Composition]


class BoundExceeded(ValueError):
    pass


class SpanError(ValueError):
    """An element is not constant on some (descent class, saillance class) block."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


def check_bound(n: int, max_n: Optional[int]) -> None:
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n > limit:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {limit} (raise it with max_n)")


# ---------------------------------------------------------------------------
# q-bracketings

def psi_u(u: Word) -> Element:
    """
    Left-nested q-bracket of the biletters ``(u_1 over 1), ..., (u_p over p)``,
    where biletters multiply by concatenation.
    """
    u = tuple(u)
    if not u:
        raise ValueError("psi_u needs a nonempty color word")
    acc = biletter(u[0], 1)
    for i, c in enumerate(u[1:], 2):
        acc = q_bracket(acc, biletter(c, i), mul=letter_product)
    return acc


def psi_u_pre_lie(u: Word) -> Element:
    """``(..(x_{u_1} ▷_q x_{u_2}) ..) ▷_q x_{u_p}`` in the dendriform algebra."""
    u = tuple(u)
    if not u:
        raise ValueError("psi_u_pre_lie needs a nonempty color word")
    acc = generator(u[0])
    for c in u[1:]:
        acc = pre_lie_q(acc, generator(c))
    return acc


@lru_cache(maxsize=None)
def psi_sigma(sigma: Permutation) -> Element:
    """Product of :func:`psi_u` over the initially dominated factors of ``sigma``."""
    sigma = tuple(sigma)
    if not sigma:
        raise ValueError("psi_sigma needs a nonempty permutation")
    acc = None
    for factor in initially_dominated_factorization(sigma):
        f = psi_u(factor)
        acc = f if acc is None else acc * f
    return acc


@lru_cache(maxsize=None)
def _sigma_n(n: int) -> Element:
    terms: dict[Biword, QPoly] = {}
    for sigma in permutations(range(1, n + 1)):
        for b, c in psi_sigma(sigma).terms.items():
            old = terms.get(b)
            terms[b] = c if old is None else old + c
    return Element(terms)


def sigma_n(n: int, max_n: Optional[int] = None) -> Element:
    """Sum of ``psi_sigma`` over the whole symmetric group."""
    if n < 1:
        raise ValueError("sigma_n needs n >= 1")
    check_bound(n, max_n)
    return _sigma_n(n)


@lru_cache(maxsize=None)
def _p_L(L: Composition) -> Element:
    terms: dict[Biword, QPoly] = {}
    for gamma in permutations_with_saillance(L):
        for b, c in psi_sigma(gamma).terms.items():
            old = terms.get(b)
            terms[b] = c if old is None else old + c
    return Element(terms)


def p_L(L: Composition, max_n: Optional[int] = None) -> Element:
    """Sum of ``psi_sigma(g)`` over the permutations ``g`` with saillance ``L``."""
    L = as_composition(L)
    if not L:
        raise ValueError("p_L needs a nonempty composition")
    check_bound(sum(L), max_n)
    return _p_L(L)


def identity_colorings(n: int) -> Element:
    """All colorings of the identity permutation: ``sum_s (s over 12..n)``."""
    ident = tuple(range(1, n + 1))
    return Element({Biword(ident, s): ONE for s in permutations(ident)})


# ---------------------------------------------------------------------------
# colored bases

def _weights(I: Composition, J: Composition) -> int:
    if sum(I) != sum(J):
        raise ValueError(f"weight mismatch: {I} vs {J}")
    return sum(I)


def r_IJ(I: Composition, J: Composition) -> Element:
    """Unit sum of ``(s over t)`` with ``D(t) = I`` and ``S(s) = J``."""
    I, J = as_composition(I), as_composition(J)
    _weights(I, J)
    return Element({Biword(t, s): ONE
                    for t in permutations_with_descents(I)
                    for s in permutations_with_saillance(J)})


def _lambda_support(I: Composition) -> list[Composition]:
    return finer_refinements(conjugate(mirror(I)))


def lambda_IJ(I: Composition, J: Composition) -> Element:
    I, J = as_composition(I), as_composition(J)
    _weights(I, J)
    return linear_combination((ONE, r_IJ(I2, J)) for I2 in _lambda_support(I))


def lambda_interval(I: Composition, H: Composition, K: Composition) -> Element:
    """``Λ_I^{[H,K]}``: sum of ``Λ_I^{(J)}`` over ``J`` in the interval."""
    return linear_combination((ONE, lambda_IJ(I, J)) for J in lattice_interval(H, K))


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients on ``R_I^{(J)}`` or ``Λ_I^{(J)}``; zero entries are dropped."""
    basis: str
    coeffs: Mapping[Key, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("R", "Lambda"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {(tuple(I), tuple(J)): QPoly.coerce(c) for (I, J), c in self.coeffs.items()}
        clean = {k: c for k, c in clean.items() if c}
        if len({sum(I) for I, _ in clean} | {sum(J) for _, J in clean}) > 1:
            raise ValueError("expansion mixes weights")
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, key: Key) -> QPoly:
        I, J = key
        return self.coeffs.get((tuple(I), tuple(J)), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __add__(self, other: "BasisExpansion") -> "BasisExpansion":
        if self.basis != other.basis:
            raise ValueError("cannot add expansions in different bases")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return BasisExpansion(self.basis, out)

    def sorted_items(self) -> list[tuple[Key, QPoly]]:
        idx = composition_order_index
        return sorted(self.coeffs.items(), key=lambda t: (idx(t[0][0]), idx(t[0][1])))

    def evaluate(self, v: int) -> "BasisExpansion":
        return BasisExpansion(self.basis, {k: QPoly.constant(c(v)) for k, c in self.coeffs.items()})

    def to_element(self) -> Element:
        make = r_IJ if self.basis == "R" else lambda_IJ
        return linear_combination((c, make(I, J)) for (I, J), c in self.coeffs.items())

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        name = "R" if self.basis == "R" else "Lambda"
        out = []
        for (I, J), c in self.sorted_items():
            body = f"{name}_{format_composition(I)}^({format_composition(J)})"
            out.append(signed_term(c, body, not out))
        return " ".join(out)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"basis": self.basis,
                "terms": [{"I": list(I), "J": list(J), "coeff": c.to_json()}
                          for (I, J), c in self.sorted_items()]}

    @classmethod
    def from_json(cls, data) -> "BasisExpansion":
        coeffs = {}
        for rec in data["terms"]:
            key = (as_composition(rec["I"]), as_composition(rec["J"]))
            if key in coeffs:
                raise ValueError(f"duplicate key {key}")
            coeffs[key] = QPoly.from_json(rec["coeff"])
        return cls(data["basis"], coeffs)


def expand_in_R(e: Element) -> BasisExpansion:
    """
    Read off the ribbon coefficients of ``e``; raises :class:`SpanError` with a
    witness pair of biwords when ``e`` is not constant on some block.
    """
    if not e:
        return BasisExpansion("R", {})
    n = e.weight()
    blocks: dict[Key, list[tuple[Biword, QPoly]]] = {}
    for b, c in e.terms.items():
        if not is_permutation(b.colors):
            raise SpanError(f"top row {format_word(b.colors)} of {b} is not a permutation", (b,))
        key = (descent_composition(b.sigma), saillance_composition(b.colors))
        blocks.setdefault(key, []).append((b, c))
    coeffs = {}
    for (I, J), items in blocks.items():
        label = f"R_{format_composition(I)}^({format_composition(J)})"
        b0, c0 = items[0]
        for b, c in items[1:]:
            if c != c0:
                raise SpanError(f"{b0} and {b} share the block {label} "
                                f"but have coefficients {c0} and {c}", (b0, b))
        size = len(permutations_with_descents(I)) * len(permutations_with_saillance(J))
        if len(items) != size:
            present = {b for b, _ in items}
            missing = next(Biword(t, s) for t in permutations_with_descents(I)
                           for s in permutations_with_saillance(J)
                           if Biword(t, s) not in present)
            raise SpanError(f"{b0} has coefficient {c0} but {missing} in the same "
                            f"block {label} has coefficient 0", (b0, missing))
        coeffs[(I, J)] = c0
    assert all(sum(I) == n for I, _ in coeffs)
    return BasisExpansion("R", coeffs)


def _complement(I: Composition) -> frozenset[int]:
    n = sum(I)
    return frozenset(range(1, n)) - descent_set(I)


def lambda_to_R(exp: BasisExpansion) -> BasisExpansion:
    """Substitute the definition of ``Λ`` in terms of ``R`` (acts on ``I`` only)."""
    if exp.basis != "Lambda":
        raise ValueError("lambda_to_R expects a Lambda expansion")
    out: dict[Key, QPoly] = {}
    for (I, J), c in exp.coeffs.items():
        for I2 in _lambda_support(I):
            out[(I2, J)] = out.get((I2, J), ZERO) + c
    return BasisExpansion("R", out)


def r_to_lambda(exp: BasisExpansion) -> BasisExpansion:
    """
    Inverse of :func:`lambda_to_R` by Möbius inversion on the boolean lattice.

    ``Λ_I`` covers the ``R_{I'}`` with ``Des(I')`` containing the complement
    of ``Des(I)``, so the ``Λ`` coefficient at ``I`` is the alternating sum of
    the ``R`` coefficients over compositions whose descent set lies inside
    that complement.
    """
    if exp.basis != "R":
        raise ValueError("r_to_lambda expects an R expansion")
    out: dict[Key, QPoly] = {}
    cols = {J for _, J in exp.coeffs}
    for J in cols:
        n = sum(J)
        for I in compositions(n):
            comp = _complement(I)
            acc = ZERO
            for k in range(len(comp) + 1):
                for sub in combinations(sorted(comp), k):
                    I2 = composition_from_descents(sub, n)
                    c = exp[(I2, J)]
                    if c:
                        acc = acc + c.scale((-1) ** (len(comp) - k))
            if acc:
                out[(I, J)] = acc
    return BasisExpansion("Lambda", out)


def expand_in_lambda(e: Element) -> BasisExpansion:
    return r_to_lambda(expand_in_R(e))


# ---------------------------------------------------------------------------
# closed forms

def _sign(n: int, I: Composition) -> int:
    return (-1) ** (n - len(I))


def theorem1_prediction(n: int) -> BasisExpansion:
    """Every ``Λ_I^{(J)}`` with coefficient ``(-1)^(n-l(I)) q^D(I,J)``."""
    return BasisExpansion("Lambda", {
        (I, J): QPoly.monomial(statistic_D(I, J), _sign(n, I))
        for I in compositions(n) for J in compositions(n)})


def theorem1_prediction_printed_sign(n: int) -> BasisExpansion:
    """Same grid with the sign ``(-1)^(l(I)-1)``; kept to show it is wrong."""
    return BasisExpansion("Lambda", {
        (I, J): QPoly.monomial(statistic_D(I, J), (-1) ** (len(I) - 1))
        for I in compositions(n) for J in compositions(n)})


def c_coefficient(I: Composition, J: Composition) -> QPoly:
    """Ribbon coefficient of ``R_I^{(J)}`` in the full sum."""
    _weights(I, J)
    dI, dJ = descent_set(I), descent_set(J)
    if not (dI - descent_set_minus(I)) <= dJ:
        return ZERO
    return (-Q) ** len(dI - dJ) * (1 - Q) ** len(dI & dJ)


def _cuts(L: Composition) -> list[int]:
    out, s = [], 0
    for part in L:
        s += part
        out.append(s)
    return out


def _in_pairs(L: Composition, I: Composition, J: Composition) -> bool:
    if not is_finer(I, L):
        return False
    d = _cuts(L)
    dJ = descent_set(J)
    for k in range(len(L) - 1):
        if not any(d[k] <= x <= d[k + 1] - 1 for x in dJ):
            return False
    for l, Ib, Jb in zip(L, i_decomposition(I, L), i_decomposition(J, L)):
        if Ib[0] + Jb[-1] <= l:
            return False
    return True


def theorem2_pairs(L: Composition) -> list[Key]:
    """Pairs ``(I, J)`` whose ``Λ_I^{(J)}`` occurs in ``P_L``, in matrix order."""
    L = as_composition(L)
    if not L:
        raise ValueError("theorem2_pairs needs a nonempty composition")
    n = sum(L)
    return [(I, J) for I in compositions(n) for J in compositions(n) if _in_pairs(L, I, J)]


def theorem2_prediction(L: Composition) -> BasisExpansion:
    n = sum(L)
    return BasisExpansion("Lambda", {
        (I, J): QPoly.monomial(statistic_D(I, J), _sign(n, I))
        for I, J in theorem2_pairs(L)})


def pn_closed_R(n: int) -> Element:
    """``sum_k (-q)^(n-k) sum_{J |= n-k} R_{(1^(n-k), k)}^{(J.k)}``."""
    if n < 1:
        raise ValueError("pn_closed_R needs n >= 1")
    out = Element.zero()
    for k in range(1, n + 1):
        I = (1,) * (n - k) + (k,)
        inner = Element.zero()
        for J in compositions(n - k):
            inner = inner + r_IJ(I, tuple(J) + (k,))
        out = out + inner.scale((-Q) ** (n - k))
    return out


def pn_lambda_intervals(n: int) -> BasisExpansion:
    """
    The single-part sum rewritten over intervals: for each ``I`` and each
    ``k`` from ``n - i_1 + 1`` to ``n``, ``q^D(I,(n-k,k)) Λ_I`` summed over
    ``J`` in ``[(n-k,k), (1^(n-k),k)]``.
    """
    out: dict[Key, QPoly] = {}
    for I in compositions(n):
        for k in range(n - I[0] + 1, n + 1):
            coarse = (n - k, k) if k < n else (n,)
            fine = (1,) * (n - k) + (k,)
            c = QPoly.monomial(statistic_D(I, coarse), _sign(n, I))
            for J in lattice_interval(coarse, fine):
                if (I, J) in out:
                    raise AssertionError(f"pair {(I, J)} reached twice")
                out[(I, J)] = c
    return BasisExpansion("Lambda", out)


def glue_L(I: Composition, J: Composition) -> Composition:
    """
    Merge each part of ``I`` into the previous block unless ``J`` has a descent
    within the positions that part covers (counting its left boundary).
    """
    I, J = as_composition(I), as_composition(J)
    _weights(I, J)
    dJ = descent_set(J)
    blocks = [I[0]]
    start = I[0]
    for part in I[1:]:
        if any(start <= x <= start + part - 1 for x in dJ):
            blocks.append(part)
        else:
            blocks[-1] += part
        start += part
    return tuple(blocks)
