"""
Coefficient grids indexed by pairs of compositions.

Rows are ``I`` and columns ``J``, both in :func:`compositions` order. Cells
hold a :class:`QPoly` (kinds ``Mlambda``, ``Mribbon``), an ``int`` exponent
(kind ``D``) or a composition (kind ``N``).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional, Union

from .combinatorics import (
    Composition,
    compositions,
    format_composition,
    parse_composition,
)
from .identities import check_bound, expand_in_R, glue_L, r_to_lambda, sigma_n, theorem1_prediction
from .qpoly import QPoly

__all__ = ["KINDS", "CoeffMatrix", "build_matrix", "d_matrix", "m_lambda", "m_ribbon", "n_matrix"]

KINDS = ("D", "Mlambda", "Mribbon", "N")

Cell = Union[QPoly, int, Composition]


@dataclass(frozen=True)
class CoeffMatrix:
    n: int
    kind: str
    rows: tuple[Composition, ...]
    cols: tuple[Composition, ...]
    entries: tuple[tuple[Cell, ...], ...]

    def cell(self, I, J) -> Cell:
        return self.entries[self.rows.index(tuple(I))][self.cols.index(tuple(J))]

    def _text_cell(self, x: Cell) -> str:
        if self.kind == "N":
            return format_composition(x)
        return str(x) if x else "."

    def _csv_cell(self, x: Cell) -> str:
        if self.kind == "N":
            return format_composition(x)
        return str(x)

    def to_text(self) -> str:
        """Aligned grid; zeros print as dots."""
        head = [""] + [format_composition(J) for J in self.cols]
        body = [[format_composition(I)] + [self._text_cell(x) for x in row]
                for I, row in zip(self.rows, self.entries)]
        table = [head] + body
        widths = [max(len(r[c]) for r in table) for c in range(len(head))]
        lines = []
        for r in table:
            cells = [r[0].ljust(widths[0])] + [s.rjust(w) for s, w in zip(r[1:], widths[1:])]
            lines.append("  ".join(cells).rstrip())
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["I\\J"] + [format_composition(J) for J in self.cols])
        for I, row in zip(self.rows, self.entries):
            w.writerow([format_composition(I)] + [self._csv_cell(x) for x in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        def enc(x):
            if self.kind == "N":
                return format_composition(x)
            if self.kind == "D":
                return x
            return x.to_json()
        return {"n": self.n, "kind": self.kind,
                "rows": [format_composition(I) for I in self.rows],
                "cols": [format_composition(J) for J in self.cols],
                "entries": [[enc(x) for x in row] for row in self.entries]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "CoeffMatrix":
        kind = data["kind"]
        if kind not in KINDS:
            raise ValueError(f"unknown matrix kind {kind!r}")

        def dec(x):
            if kind == "N":
                return parse_composition(x)
            if kind == "D":
                if not isinstance(x, int):
                    raise ValueError(f"D entries are integers, got {x!r}")
                return x
            return QPoly.from_json(x)
        return cls(int(data["n"]), kind,
                   tuple(parse_composition(s) for s in data["rows"]),
                   tuple(parse_composition(s) for s in data["cols"]),
                   tuple(tuple(dec(x) for x in row) for row in data["entries"]))


def _grid(n: int, kind: str, f) -> CoeffMatrix:
    comps = compositions(n)
    return CoeffMatrix(n, kind, comps, comps,
                       tuple(tuple(f(I, J) for J in comps) for I in comps))


def d_matrix(n: int) -> CoeffMatrix:
    """Exponents of ``q`` in the predicted ``Λ`` expansion of the full sum."""
    pred = theorem1_prediction(n)
    return _grid(n, "D", lambda I, J: pred[(I, J)].degree)


def m_lambda(n: int, max_n: Optional[int] = None) -> CoeffMatrix:
    """``Λ`` coefficients of the brute-force full sum."""
    lam = r_to_lambda(expand_in_R(sigma_n(n, max_n)))
    return _grid(n, "Mlambda", lambda I, J: lam[(I, J)])


def m_ribbon(n: int, max_n: Optional[int] = None) -> CoeffMatrix:
    """Ribbon coefficients of the brute-force full sum."""
    R = expand_in_R(sigma_n(n, max_n))
    return _grid(n, "Mribbon", lambda I, J: R[(I, J)])


def n_matrix(n: int) -> CoeffMatrix:
    """For each pair, the ``L`` whose ``P_L`` carries ``Λ_I^{(J)}``."""
    return _grid(n, "N", glue_L)


def build_matrix(kind: str, n: int, max_n: Optional[int] = None) -> CoeffMatrix:
    if kind not in KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; choose from {', '.join(KINDS)}")
    if n < 2:
        raise ValueError("matrices need n >= 2")
    check_bound(n, max_n)
    if kind == "D":
        return d_matrix(n)
    if kind == "N":
        return n_matrix(n)
    if kind == "Mlambda":
        return m_lambda(n, max_n)
    return m_ribbon(n, max_n)
