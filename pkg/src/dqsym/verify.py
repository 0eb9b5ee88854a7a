"""
Brute-force certification of the closed forms.

Each check compares an element computed by summing ``psi_sigma`` over
permutations against a prediction built from compositions alone, and
reports the first counterexample it meets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .combinatorics import (
    compositions,
    conjugate,
    finer_refinements,
    format_composition,
    lattice_interval,
    mirror,
    permutations_with_saillance,
    statistic_D,
)
from .fqsym import Biword, Element, biword_right_split, product, ribbon_R, right_dend
from .identities import (
    SpanError,
    check_bound,
    c_coefficient,
    expand_in_R,
    glue_L,
    identity_colorings,
    lambda_IJ,
    lambda_interval,
    p_L,
    pn_closed_R,
    pn_lambda_intervals,
    r_to_lambda,
    sigma_n,
    theorem1_prediction,
    theorem2_pairs,
    theorem2_prediction,
)
from .qpoly import try_factor

__all__ = [
    "CheckResult", "VerifyReport", "SUITES",
    "bs_check", "recursion_set_splitting", "recursion_dendriform",
    "plelem_instance", "plelem_factored",
    "verify_all", "run_suite",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerifyReport:
    n: int
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}, n={self.n}"]
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
            if c.detail:
                line += f"  -- {c.detail}"
            lines.append(line)
        failed = sum(not c.passed for c in self.checks)
        lines.append(f"{len(self.checks) - failed}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"n": self.n, "suite": self.suite, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}

    def to_csv_rows(self) -> list[list[str]]:
        return [["check", "passed", "detail"]] + [
            [c.name, "1" if c.passed else "0", c.detail] for c in self.checks]


def _key(I, J) -> str:
    return f"(I={format_composition(I)}, J={format_composition(J)})"


def _first_diff(got: Element, want: Element) -> str:
    for b in sorted(set(got.terms) | set(want.terms), key=lambda b: b.sort_key()):
        if got.coeff(b) != want.coeff(b):
            return f"biword {b}: got {got.coeff(b)}, expected {want.coeff(b)}"
    return ""


def _expansion_diff(got, want) -> str:
    for k in sorted(set(got.coeffs) | set(want.coeffs)):
        if got[k] != want[k]:
            return f"{_key(*k)}: got {got[k]}, expected {want[k]}"
    return ""


# ---------------------------------------------------------------------------
# individual checks

def bs_check(n: int, max_n: Optional[int] = None) -> tuple[bool, str]:
    """At ``q = 1`` the full sum is the sum of all colorings of the identity."""
    check_bound(n, max_n)
    got = sigma_n(n, max_n).evaluate(1)
    want = identity_colorings(n)
    if got == want:
        return True, ""
    return False, _first_diff(got, want)


def _relabel(e: Element, colors: tuple[int, ...]) -> Element:
    return e.map_colors(lambda c: colors[c - 1])


def recursion_set_splitting(L, max_n: Optional[int] = None) -> Element:
    """Rebuild ``P_L`` from ``P_L'`` and ``P_(l_p)`` over color splittings with the top color on the right."""
    L = tuple(L)
    n = sum(L)
    head, last = L[:-1], L[-1]
    A, B = p_L(head, max_n), p_L((last,), max_n)
    out = Element.zero()
    for left in combinations(range(1, n + 1), n - last):
        right = tuple(c for c in range(1, n + 1) if c not in left)
        if n in right:
            out = out + _relabel(A, left) * _relabel(B, right)
    return out


def recursion_dendriform(L, max_n: Optional[int] = None) -> Element:
    """Rebuild ``P_L`` as ``P_L' ≻̄ P_(l_p)`` summed over all color splittings."""
    L = tuple(L)
    return biword_right_split(p_L(L[:-1], max_n), p_L((L[-1],), max_n))


class _Ctx:
    """Memoizes the oracle sums shared by several checks."""

    def __init__(self, n: int, max_n: Optional[int]):
        self.n = n
        self.max_n = max_n
        self._R = None

    @property
    def sigma(self) -> Element:
        return sigma_n(self.n, self.max_n)

    @property
    def R(self):
        if self._R is None:
            self._R = expand_in_R(self.sigma)
        return self._R


def _check_oracle(ctx: _Ctx) -> CheckResult:
    e = ctx.sigma
    w = e.weights()
    if w != {ctx.n}:
        return CheckResult("sigma_oracle", False, f"weights {sorted(w)}")
    return CheckResult("sigma_oracle", True, f"{len(e)} biwords")


def _check_r_expansion(ctx: _Ctx) -> CheckResult:
    try:
        R = ctx.R
    except SpanError as exc:
        return CheckResult("r_expansion", False, str(exc))
    return CheckResult("r_expansion", True, f"{len(R.coeffs)} nonzero coefficients")


def _check_factorability(ctx: _Ctx) -> CheckResult:
    for b, c in ctx.sigma.sorted_terms():
        if try_factor(c) is None:
            return CheckResult("factorability", False, f"biword {b} has coefficient {c}")
    return CheckResult("factorability", True)


def _check_corollary(ctx: _Ctx) -> CheckResult:
    try:
        R = ctx.R
    except SpanError as exc:
        return CheckResult("corollary", False, str(exc))
    for I in compositions(ctx.n):
        for J in compositions(ctx.n):
            want = c_coefficient(I, J)
            if R[(I, J)] != want:
                return CheckResult("corollary", False,
                                   f"{_key(I, J)}: oracle {R[(I, J)]}, formula {want}")
    return CheckResult("corollary", True)


def _check_theorem1(ctx: _Ctx) -> CheckResult:
    try:
        got = r_to_lambda(ctx.R)
    except SpanError as exc:
        return CheckResult("theorem1", False, str(exc))
    diff = _expansion_diff(got, theorem1_prediction(ctx.n))
    return CheckResult("theorem1", not diff, diff)


def _check_theorem2(ctx: _Ctx) -> CheckResult:
    for L in compositions(ctx.n):
        try:
            got = r_to_lambda(expand_in_R(p_L(L, ctx.max_n)))
        except SpanError as exc:
            return CheckResult("theorem2", False, f"L={format_composition(L)}: {exc}")
        diff = _expansion_diff(got, theorem2_prediction(L))
        if diff:
            return CheckResult("theorem2", False, f"L={format_composition(L)}: {diff}")
    return CheckResult("theorem2", True, f"{len(compositions(ctx.n))} compositions L")


def _check_partition(ctx: _Ctx) -> CheckResult:
    owner = {}
    for L in compositions(ctx.n):
        for key in theorem2_pairs(L):
            if key in owner:
                return CheckResult("pair_partition", False,
                                   f"{_key(*key)} in both L={format_composition(owner[key])} "
                                   f"and L={format_composition(L)}")
            owner[key] = L
    for I in compositions(ctx.n):
        for J in compositions(ctx.n):
            if (I, J) not in owner:
                return CheckResult("pair_partition", False, f"{_key(I, J)} in no P_L")
    return CheckResult("pair_partition", True)


def _check_glue(ctx: _Ctx) -> CheckResult:
    for L in compositions(ctx.n):
        for I, J in theorem2_pairs(L):
            g = glue_L(I, J)
            if g != L:
                return CheckResult("glue_L", False,
                                   f"{_key(I, J)}: glued to {format_composition(g)}, "
                                   f"expected {format_composition(L)}")
    return CheckResult("glue_L", True)


def _check_pn_closed(ctx: _Ctx) -> CheckResult:
    got, want = p_L((ctx.n,), ctx.max_n), pn_closed_R(ctx.n)
    diff = _first_diff(got, want) if got != want else ""
    return CheckResult("pn_closed_R", not diff, diff)


def _check_pn_intervals(ctx: _Ctx) -> CheckResult:
    got = r_to_lambda(expand_in_R(p_L((ctx.n,), ctx.max_n)))
    diff = _expansion_diff(got, pn_lambda_intervals(ctx.n))
    return CheckResult("pn_lambda_intervals", not diff, diff)


def _check_note(ctx: _Ctx) -> CheckResult:
    n = ctx.n
    got = r_to_lambda(expand_in_R(p_L((n,), ctx.max_n)))
    for I in compositions(n):
        for J in compositions(n):
            expected = I[0] + J[-1] > n
            if bool(got[(I, J)]) != expected:
                return CheckResult("single_part_support", False,
                                   f"{_key(I, J)}: present={bool(got[(I, J)])}, "
                                   f"first(I)+last(J)>n is {expected}")
    return CheckResult("single_part_support", True)


def _check_recursion(ctx: _Ctx) -> CheckResult:
    count = 0
    for L in compositions(ctx.n):
        if len(L) < 2:
            continue
        want = p_L(L, ctx.max_n)
        for label, build in (("set splitting", recursion_set_splitting),
                              ("dendriform", recursion_dendriform)):
            got = build(L, ctx.max_n)
            if got != want:
                return CheckResult("recursion", False,
                                   f"L={format_composition(L)} ({label}): {_first_diff(got, want)}")
        count += 1
    return CheckResult("recursion", True, f"{count} compositions rebuilt two ways")


def _tail_interval(J, m: int, k: int):
    """Endpoints ``(j1..j_{p-1}, j_p+m-k, k)`` and ``(j1..j_p, 1^{m-k}, k)``."""
    H = J[:-1] + ((J[-1] + m - k, k) if k < m else (J[-1], m))
    K = J + (1,) * (m - k) + (k,)
    return H, K


def plelem_instance(I, J, Ip, k: int) -> tuple[Element, Element]:
    """Both sides of ``Λ_I^(J) ≻̄ Λ_I'^[(m-k,k),(1^{m-k},k)] = Λ_{I.I'}^[H,K]``."""
    I, J, Ip = tuple(I), tuple(J), tuple(Ip)
    m = sum(Ip)
    coarse = (m - k, k) if k < m else (m,)
    lhs = biword_right_split(lambda_IJ(I, J), lambda_interval(Ip, coarse, (1,) * (m - k) + (k,)))
    rhs = lambda_interval(I + Ip, *_tail_interval(J, m, k))
    return lhs, rhs


def _tops(comps) -> Element:
    """Sum of the color permutations whose saillance lies in ``comps``, as uncolored G's."""
    return Element({Biword(s, (1,) * len(s)): 1
                    for J in comps for s in permutations_with_saillance(J)})


def _bottoms(I) -> Element:
    out = Element.zero()
    for Ib in finer_refinements(conjugate(mirror(I))):
        out = out + ribbon_R(Ib)
    return out


def plelem_factored(I, J, Ip, k: int) -> bool:
    """The same identity checked one row at a time: tops by ``≻``, bottoms by the product."""
    I, J, Ip = tuple(I), tuple(J), tuple(Ip)
    m = sum(Ip)
    coarse = (m - k, k) if k < m else (m,)
    tops = right_dend(_tops((J,)), _tops(lattice_interval(coarse, (1,) * (m - k) + (k,))))
    if tops != _tops(lattice_interval(*_tail_interval(J, m, k))):
        return False
    return product(_bottoms(I), _bottoms(Ip)) == _bottoms(I + Ip)


# full biword products get expensive past this weight
PLELEM_FULL_MAX = 5


def _check_plelem(ctx: _Ctx) -> CheckResult:
    full = ctx.n <= PLELEM_FULL_MAX
    count = 0
    for N in range(1, ctx.n):
        m = ctx.n - N
        for I in compositions(N):
            for J in compositions(N):
                for Ip in compositions(m):
                    for k in range(1, m + 1):
                        where = f"I={I}, J={J}, I'={Ip}, k={k}"
                        if full:
                            lhs, rhs = plelem_instance(I, J, Ip, k)
                            if lhs != rhs:
                                return CheckResult("plelem", False, f"{where}: {_first_diff(lhs, rhs)}")
                        elif not plelem_factored(I, J, Ip, k):
                            return CheckResult("plelem", False, f"{where}: factored rows differ")
                        count += 1
    form = "biword products" if full else "factored rows"
    return CheckResult("plelem", True, f"{count} instances, {form}")


def _check_D_additivity(ctx: _Ctx) -> CheckResult:
    """``D(I,J) + n - k = D(I.I', K)`` for every split of the weight."""
    total = ctx.n
    for N in range(1, total):
        m = total - N
        for I in compositions(N):
            for J in compositions(N):
                for Ip in compositions(m):
                    for k in range(m - Ip[0] + 1, m + 1):
                        d = statistic_D(I, J) + m - k
                        H, K = _tail_interval(J, m, k)
                        for Kc in lattice_interval(H, K):
                            got = statistic_D(I + Ip, Kc)
                            if got != d:
                                return CheckResult(
                                    "D_additivity", False,
                                    f"I={I}, J={J}, I'={Ip}, k={k}, K={Kc}: {got} != {d}")
    return CheckResult("D_additivity", True)


def _check_bs(ctx: _Ctx) -> CheckResult:
    ok, detail = bs_check(ctx.n, ctx.max_n)
    return CheckResult("bohnenblust_spitzer", ok, detail)


_CHECKS: dict[str, Callable[[_Ctx], CheckResult]] = {
    "sigma_oracle": _check_oracle,
    "r_expansion": _check_r_expansion,
    "factorability": _check_factorability,
    "corollary": _check_corollary,
    "theorem1": _check_theorem1,
    "theorem2": _check_theorem2,
    "pair_partition": _check_partition,
    "pn_closed_R": _check_pn_closed,
    "pn_lambda_intervals": _check_pn_intervals,
    "single_part_support": _check_note,
    "recursion": _check_recursion,
    "D_additivity": _check_D_additivity,
    "plelem": _check_plelem,
    "glue_L": _check_glue,
    "bohnenblust_spitzer": _check_bs,
}

SUITES: dict[str, tuple[str, ...]] = {
    "theorem1": ("sigma_oracle", "r_expansion", "theorem1"),
    "corollary": ("sigma_oracle", "r_expansion", "factorability", "corollary"),
    "theorem2": ("theorem2", "pair_partition", "glue_L", "D_additivity", "plelem"),
    "bs": ("bohnenblust_spitzer",),
    "recursion": ("recursion",),
    "closed_forms": ("pn_closed_R", "pn_lambda_intervals", "single_part_support"),
    "all": tuple(_CHECKS),
}


def run_suite(suite: str, n: int, max_n: Optional[int] = None) -> VerifyReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    check_bound(n, max_n)
    ctx = _Ctx(n, max_n)
    report = VerifyReport(n, suite)
    for name in SUITES[suite]:
        report.checks.append(_CHECKS[name](ctx))
    return report


def verify_all(n: int, max_n: Optional[int] = None) -> VerifyReport:
    return run_suite("all", n, max_n)


def report_json(report: VerifyReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True)
