"""
Words, permutations and compositions.

Everything here works on plain tuples of ints. Permutations are one-line
words of ``1..n``; compositions are tuples of positive parts. The empty
tuple is a valid permutation (of 0) and a valid composition (of 0).

>>> standardize((2, 1, 2))
(2, 1, 3)
>>> saillance_composition((3, 1, 4, 2))
(2, 2)
>>> descent_composition((3, 1, 4, 2))
(1, 2, 1)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional

Word = tuple[int, ...]
Permutation = tuple[int, ...]
Composition = tuple[int, ...]

__all__ = [
    "Word", "Permutation", "Composition",
    "is_permutation", "as_permutation", "as_composition",
    "standardize", "convolution", "convolution_split",
    "word_left_dend", "word_right_dend",
    "descent_composition", "initially_dominated_factorization",
    "saillance_composition",
    "descent_set", "descent_set_minus", "composition_from_descents",
    "mirror", "conjugate", "finer_refinements", "is_finer",
    "concat", "near_concat", "i_decomposition", "statistic_D",
    "lattice_interval", "composition_order_index", "compositions",
    "permutations_with_saillance", "permutations_with_descents",
    "saillance_classes", "descent_classes",
    "format_word", "parse_word", "format_composition", "parse_composition",
]


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def as_permutation(w) -> Permutation:
    w = tuple(int(x) for x in w)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def as_composition(parts) -> Composition:
    parts = tuple(int(x) for x in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


# ---------------------------------------------------------------------------
# words and permutations

def standardize(w: Word) -> Permutation:
    """Number the letters of ``w`` from 1, smallest values first, ties left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    std = [0] * len(w)
    for rank, i in enumerate(order, 1):
        std[i] = rank
    return tuple(std)


@lru_cache(maxsize=None)
def _splits(n: int, k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    # every way of choosing the k values that go to the prefix
    full = range(1, n + 1)
    out = []
    for head in combinations(full, k):
        hs = set(head)
        out.append((head, tuple(v for v in full if v not in hs)))
    return tuple(out)


@lru_cache(maxsize=None)
def convolution_split(alpha: Permutation, beta: Permutation) -> tuple[tuple[Permutation, bool], ...]:
    """
    The convolution of ``alpha`` and ``beta``, each element tagged with
    whether the largest letter sits in the prefix (the left half-product).
    """
    k, m = len(alpha), len(beta)
    n = k + m
    out = []
    for head, tail in _splits(n, k):
        gamma = tuple(head[a - 1] for a in alpha) + tuple(tail[b - 1] for b in beta)
        out.append((gamma, bool(head) and head[-1] == n))
    return tuple(out)


def convolution(alpha: Permutation, beta: Permutation) -> set[Permutation]:
    """
    All permutations ``u.v`` with ``std(u) == alpha`` and ``std(v) == beta``.

    >>> sorted(convolution((1,), (1, 2)))
    [(1, 2, 3), (2, 1, 3), (3, 1, 2)]
    """
    return {gamma for gamma, _ in convolution_split(tuple(alpha), tuple(beta))}


def word_left_dend(u: Word, v: Word) -> Optional[Word]:
    """``uv`` if ``max(v) <= max(u)``, else None.

    Both this and :func:`word_right_dend` fire when the maxima are equal;
    callers only use them on letter-disjoint words.
    """
    if not u or not v:
        raise ValueError("word dendriform products need nonempty words")
    return tuple(u) + tuple(v) if max(v) <= max(u) else None


def word_right_dend(u: Word, v: Word) -> Optional[Word]:
    """``uv`` if ``max(v) >= max(u)``, else None."""
    if not u or not v:
        raise ValueError("word dendriform products need nonempty words")
    return tuple(u) + tuple(v) if max(v) >= max(u) else None


def descent_composition(sigma: Word) -> Composition:
    """Lengths of the maximal increasing runs of ``sigma``."""
    if not sigma:
        return ()
    parts = []
    run = 1
    for a, b in zip(sigma, sigma[1:]):
        if b > a:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return tuple(parts)


def initially_dominated_factorization(w: Word) -> list[Word]:
    """
    Split ``w`` into initially dominated factors with weakly increasing
    leaders. For distinct letters the factors start exactly at the
    left-to-right maxima.

    >>> initially_dominated_factorization((3, 1, 4, 2))
    [(3, 1), (4, 2)]
    """
    if len(set(w)) != len(w):
        raise ValueError(f"initially dominated factorization needs distinct letters: {tuple(w)}")
    factors: list[list[int]] = []
    for x in w:
        if not factors or x > factors[-1][0]:
            factors.append([x])
        else:
            factors[-1].append(x)
    return [tuple(f) for f in factors]


def saillance_composition(sigma: Word) -> Composition:
    return tuple(len(f) for f in initially_dominated_factorization(sigma))


# ---------------------------------------------------------------------------
# compositions

def descent_set(I: Composition) -> frozenset[int]:
    out, s = set(), 0
    for part in I[:-1]:
        s += part
        out.add(s)
    return frozenset(out)


def descent_set_minus(I: Composition) -> frozenset[int]:
    return frozenset(d - 1 for d in descent_set(I))


def composition_from_descents(descents, n: int) -> Composition:
    ds = sorted(descents)
    if ds and (ds[0] < 1 or ds[-1] > n - 1):
        raise ValueError(f"descents {ds} out of range for n={n}")
    cuts = [0] + ds + [n]
    parts = tuple(b - a for a, b in zip(cuts, cuts[1:]))
    return parts if n else ()


def mirror(I: Composition) -> Composition:
    return tuple(reversed(I))


def conjugate(I: Composition) -> Composition:
    """Ribbon conjugate: complement of the reflected descent set.

    >>> conjugate((2, 3))
    (1, 1, 2, 1)
    """
    n = sum(I)
    reflected = {n - d for d in descent_set(I)}
    return composition_from_descents(set(range(1, n)) - reflected, n)


def is_finer(I: Composition, J: Composition) -> bool:
    """True when ``I`` refines ``J`` (``Des(J) <= Des(I)``)."""
    return sum(I) == sum(J) and descent_set(J) <= descent_set(I)


def finer_refinements(I: Composition) -> list[Composition]:
    """All compositions whose descent set contains ``Des(I)``, in matrix order."""
    n = sum(I)
    des = descent_set(I)
    return [J for J in compositions(n) if des <= descent_set(J)]


def concat(I: Composition, J: Composition) -> Composition:
    return tuple(I) + tuple(J)


def near_concat(I: Composition, J: Composition) -> Composition:
    if not I or not J:
        raise ValueError("near concatenation needs two nonempty compositions")
    return tuple(I[:-1]) + (I[-1] + J[0],) + tuple(J[1:])


def i_decomposition(J: Composition, I: Composition) -> list[Composition]:
    """
    Cut ``J`` at the partial sums of ``I``, splitting a part of ``J`` when a
    cut falls inside it.

    >>> i_decomposition((3, 2, 4, 3, 2, 5), (6, 2, 2, 4, 1, 4))
    [(3, 2, 1), (2,), (1, 1), (2, 2), (1,), (4,)]
    """
    if sum(I) != sum(J):
        raise ValueError(f"weight mismatch: {I} vs {J}")
    des = sorted(descent_set(J))
    blocks = []
    lo = 0
    for part in I:
        hi = lo + part
        inner = [d - lo for d in des if lo < d < hi]
        blocks.append(composition_from_descents(inner, part))
        lo = hi
    return blocks


def statistic_D(I: Composition, J: Composition) -> int:
    """``n`` minus the sum of the last parts of the blocks of ``J`` cut along ``I``."""
    return sum(I) - sum(block[-1] for block in i_decomposition(J, I))


def lattice_interval(H: Composition, K: Composition) -> list[Composition]:
    """All compositions whose descent set lies between those of ``H`` and ``K``."""
    if sum(H) != sum(K):
        raise ValueError(f"weight mismatch: {H} vs {K}")
    dh, dk = descent_set(H), descent_set(K)
    if dh <= dk:
        lo, hi = dh, dk
    elif dk <= dh:
        lo, hi = dk, dh
    else:
        raise ValueError(f"incomparable compositions {H} and {K}")
    return [J for J in compositions(sum(H)) if lo <= descent_set(J) <= hi]


def composition_order_index(I: Composition) -> int:
    """Binary code of the descent set, descent 1 being the most significant bit."""
    n = sum(I)
    return sum(1 << (n - 1 - d) for d in descent_set(I))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of ``n`` sorted by :func:`composition_order_index`.

    >>> compositions(3)
    ((3,), (2, 1), (1, 2), (1, 1, 1))
    """
    if n == 0:
        return ((),)
    out = []
    for code in range(1 << (n - 1)):
        des = [d for d in range(1, n) if code >> (n - 1 - d) & 1]
        out.append(composition_from_descents(des, n))
    return tuple(out)


@lru_cache(maxsize=None)
def saillance_classes(n: int) -> dict[Composition, tuple[Permutation, ...]]:
    classes: dict[Composition, list[Permutation]] = {I: [] for I in compositions(n)}
    for sigma in permutations(range(1, n + 1)):
        classes[saillance_composition(sigma)].append(sigma)
    return {k: tuple(v) for k, v in classes.items()}


@lru_cache(maxsize=None)
def descent_classes(n: int) -> dict[Composition, tuple[Permutation, ...]]:
    classes: dict[Composition, list[Permutation]] = {I: [] for I in compositions(n)}
    for sigma in permutations(range(1, n + 1)):
        classes[descent_composition(sigma)].append(sigma)
    return {k: tuple(v) for k, v in classes.items()}


def permutations_with_saillance(J: Composition) -> tuple[Permutation, ...]:
    return saillance_classes(sum(J))[tuple(J)]


def permutations_with_descents(I: Composition) -> tuple[Permutation, ...]:
    return descent_classes(sum(I))[tuple(I)]


# ---------------------------------------------------------------------------
# literals

def format_word(w: Word) -> str:
    """Digit string when every letter is a single digit, commas otherwise."""
    if all(0 <= x <= 9 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


format_composition = format_word


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        raise ValueError("empty literal")
    if "," in text:
        items = [t.strip() for t in text.split(",")]
    else:
        items = list(text)
    try:
        w = tuple(int(t) for t in items)
    except ValueError:
        raise ValueError(f"bad literal {text!r}") from None
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be positive: {text!r}")
    return w


def parse_composition(text: str) -> Composition:
    return as_composition(parse_word(text))


def iter_pairs(n: int) -> Iterator[tuple[Composition, Composition]]:
    for I in compositions(n):
        for J in compositions(n):
            yield I, J
