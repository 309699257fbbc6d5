"""Exhaustive verification over colored prefixes: longest monochromatic
diffsequences and fixed-gap progressions by dynamic programming, the two-term
(chromatic intersectivity) special case, Fibonacci modular facts with
periodicity-complete certificates, and exact fractional-part bound scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .certs import Certificate
from .colorings import Coloring
from .exactnum import PHI, PHI_CONJ, Q5, SQRT5, dist_nearest_int, rational_str, sign, to_rational
from .gapsets import GapSetView, fib_values

DIFFSEQUENCE = "diffsequence"
AP = "ap"


@dataclass
class ScanResult:
    """Longest monochromatic structure found in a scanned prefix.

    The witness is strictly increasing and monochromatic; consecutive gaps
    lie in the gap set (diffsequence) or all equal one element of it (ap).
    """

    structure: str
    length: int
    witness: list[int]
    scanned: int
    color: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "structure": self.structure,
            "length": self.length,
            "witness": self.witness,
            "scanned": self.scanned,
            "color": self.color,
        }


def _usable_gaps(view: GapSetView, n: int) -> list[int]:
    if view.bound < n:
        raise ValueError(
            f"gap set enumerated only to {view.bound} but the coloring has length {n}"
        )
    return [d for d in view.elements if d < n]


def longest_mono_diffseq(coloring: Coloring, view: GapSetView) -> ScanResult:
    """Exact maximum length of a monochromatic chain with gaps in the view.

    DP over positions: L(x) = 1 + max L(x-d) over same-colored predecessors;
    the witness is rebuilt from backpointers.
    """
    n = coloring.n
    gaps = _usable_gaps(view, n)
    word = coloring.colors
    length = [0] * (n + 1)
    parent = [0] * (n + 1)
    best_len, best_end = 0, 0
    for x in range(1, n + 1):
        cx = word[x - 1]
        best, back = 1, 0
        for d in gaps:
            if d >= x:
                break
            y = x - d
            if word[y - 1] == cx and length[y] >= best:
                best, back = length[y] + 1, y
        length[x] = best
        parent[x] = back
        if best > best_len:
            best_len, best_end = best, x
    witness = []
    pos = best_end
    while pos:
        witness.append(pos)
        pos = parent[pos]
    witness.reverse()
    color = word[best_end - 1] if best_end else None
    return ScanResult(DIFFSEQUENCE, best_len, witness, n, color)


def longest_mono_ap(coloring: Coloring, view: GapSetView) -> ScanResult:
    """Exact maximum length over single-gap progressions a, a+d, a+2d, ...

    Each gap d is scanned independently; a progression keeps one fixed gap.
    """
    n = coloring.n
    gaps = _usable_gaps(view, n)
    word = coloring.colors
    best_len, best_end, best_gap = 0, 0, 0
    for d in gaps:
        run = [0] * (n + 1)
        for x in range(1, n + 1):
            y = x - d
            if y >= 1 and word[y - 1] == word[x - 1]:
                run[x] = run[y] + 1
            else:
                run[x] = 1
            if run[x] > best_len:
                best_len, best_end, best_gap = run[x], x, d
    if best_len == 0 and n >= 1:
        # no usable gap at all: a single position is still a 1-term progression
        best_len, best_end, best_gap = 1, 1, 0
    witness = [best_end - i * best_gap for i in range(best_len)][::-1]
    color = word[best_end - 1] if best_end else None
    return ScanResult(AP, best_len, witness, n, color)


def chromatically_intersective_check(coloring: Coloring, view: GapSetView) -> ScanResult:
    """Two-term special case: is there a same-colored pair differing by a gap?"""
    n = coloring.n
    gaps = [d for d in view.elements if d < n]
    word = coloring.colors
    for x in range(1, n + 1):
        cx = word[x - 1]
        for d in gaps:
            y = x + d
            if y > n:
                break
            if word[y - 1] == cx:
                return ScanResult(DIFFSEQUENCE, 2, [x, y], n, cx)
    return ScanResult(DIFFSEQUENCE, 1, [1] if n else [], n, word[0] if n else None)


# -- Fibonacci facts ---------------------------------------------------------------


def pisano_period(m: int) -> int:
    """Least period of the Fibonacci sequence modulo m, by first return of the
    consecutive-residue pair (1, 1)."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    a, b = 1, 1
    period = 0
    while True:
        a, b = b, (a + b) % m
        period += 1
        if (a, b) == (1, 1):
            return period


FIB_FACTS = (
    "mod8_nonzero",
    "mod4_one",
    "binet_sqrt5",
    "binet_oneplusphi",
    "even_fib_recurrence",
)


def check_fib_fact(fact: str, bound: int = 200) -> Certificate:
    """Check a registered Fibonacci fact up to ``bound``.

    Modular facts additionally exhaust a full residue period (plus slack), so
    the finite check proves the claim for every index; their certificates say
    so in ``verified_range``.
    """
    if fact == "mod8_nonzero":
        return _fact_mod8_nonzero(bound)
    if fact == "mod4_one":
        return _fact_mod4_one(bound)
    if fact == "binet_sqrt5":
        return _fact_binet(bound, "binet_sqrt5")
    if fact == "binet_oneplusphi":
        return _fact_binet(bound, "binet_oneplusphi")
    if fact == "even_fib_recurrence":
        return _fact_even_recurrence(bound)
    raise ValueError(f"unknown fact id {fact!r}; choose from {', '.join(FIB_FACTS)}")


def _fact_mod8_nonzero(bound: int) -> Certificate:
    period = pisano_period(8)
    limit = max(bound, period + 4)
    f = fib_values(limit + 2)
    scope = (
        f"n = 1..{limit}; complete for all n >= 1 by periodicity mod 8 "
        f"(period {period})"
    )
    for n in range(1, limit + 1):
        if (f[n - 1] + f[n + 1]) % 8 == 0:
            return Certificate(
                "fib-neighbors-sum-nonzero-mod8",
                {"bound": limit},
                scope,
                False,
                counterexample={"n": n, "value": f[n - 1] + f[n + 1]},
            )
    return Certificate(
        "fib-neighbors-sum-nonzero-mod8",
        {"bound": limit, "period": period},
        scope,
        True,
    )


def _fact_mod4_one(bound: int) -> Certificate:
    period = pisano_period(4)
    f = fib_values(3 * bound + 2)
    scope = (
        f"n = 0..{bound}; complete for all n >= 0 from the base cases n = 0, 1 "
        f"and the period-{period} recurrence of residues mod 4"
    )
    if period != 6:
        return Certificate(
            "fib-triple-sum-one-mod4",
            {"bound": bound},
            scope,
            False,
            counterexample={"pisano_mod4": period},
        )
    for n in range(0, bound + 1):
        if (f[3 * n] + f[3 * n + 1]) % 4 != 1:
            return Certificate(
                "fib-triple-sum-one-mod4",
                {"bound": bound},
                scope,
                False,
                counterexample={"n": n, "value": f[3 * n] + f[3 * n + 1]},
            )
    return Certificate(
        "fib-triple-sum-one-mod4", {"bound": bound, "period": period}, scope, True
    )


def _fact_binet(bound: int, which: str) -> Certificate:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    f = fib_values(bound + 2)
    scope = f"n = 1..{bound}, exact field arithmetic"
    claim = (
        "sqrt5-times-fib-identity" if which == "binet_sqrt5" else "oneplusphi-times-fib-identity"
    )
    conj_pow = Q5(1)
    for n in range(1, bound + 1):
        conj_pow = conj_pow * PHI_CONJ
        if which == "binet_sqrt5":
            lhs = SQRT5 * f[n]
            rhs = Q5(f[n - 1] + f[n + 1]) - conj_pow * 2
        else:
            lhs = (Q5(1) + PHI) * f[n]
            rhs = Q5(f[n] + f[n + 1]) - conj_pow
        if lhs != rhs:
            return Certificate(
                claim,
                {"bound": bound},
                scope,
                False,
                counterexample={"n": n, "lhs": lhs.to_json(), "rhs": rhs.to_json()},
            )
    return Certificate(claim, {"bound": bound}, scope, True)


def _fact_even_recurrence(bound: int) -> Certificate:
    f = fib_values(3 * bound + 1)
    evens = [f[3 * n] for n in range(1, bound + 1)]
    scope = f"first {bound} even Fibonacci numbers"
    for i in range(2, len(evens)):
        if evens[i] != 4 * evens[i - 1] + evens[i - 2]:
            return Certificate(
                "even-fib-recurrence",
                {"bound": bound},
                scope,
                False,
                counterexample={"index": i + 1, "value": evens[i]},
            )
    return Certificate("even-fib-recurrence", {"bound": bound}, scope, True)


# -- fractional-part bound scans -----------------------------------------------------

DIST_NEAREST = "dist_nearest"
FRAC_WINDOW = "frac_window"


def frac_bound_scan(
    alpha: Union[Q5, Fraction, int, str],
    seq: Sequence[int],
    mode: str,
    bound=None,
    window: Optional[tuple] = None,
) -> Certificate:
    """Exact per-element verification of a fractional-part bound.

    mode "dist_nearest": distance of alpha*s to the nearest integer exceeds
    ``bound`` strictly. mode "frac_window": {alpha*s} lies strictly inside
    (window[0], window[1]). The first violation is reported.
    """
    if not seq:
        raise ValueError("empty sequence")
    alpha_q5 = alpha if isinstance(alpha, Q5) else Q5.coerce(alpha)
    scope = f"all {len(seq)} sequence elements"
    if mode == DIST_NEAREST:
        bound = to_rational(bound)
        params = {"alpha": alpha_q5.to_json(), "bound": rational_str(bound)}
        for s in seq:
            dist = dist_nearest_int(alpha_q5 * s)
            if sign(dist - bound) <= 0:
                return Certificate(
                    "dist-to-nearest-exceeds",
                    params,
                    scope,
                    False,
                    counterexample={"element": s, "dist": dist.to_json()},
                )
        return Certificate("dist-to-nearest-exceeds", params, scope, True)
    if mode == FRAC_WINDOW:
        lo, hi = to_rational(window[0]), to_rational(window[1])
        params = {
            "alpha": alpha_q5.to_json(),
            "window": [rational_str(lo), rational_str(hi)],
        }
        for s in seq:
            f = (alpha_q5 * s).frac()
            if sign(f - lo) <= 0 or sign(f - hi) >= 0:
                return Certificate(
                    "frac-in-open-window",
                    params,
                    scope,
                    False,
                    counterexample={"element": s, "frac": f.to_json()},
                )
        return Certificate("frac-in-open-window", params, scope, True)
    raise ValueError(f"unknown mode {mode!r}")
