"""Gap sets D of positive integers: definition rules, enumeration, transforms.

A ``GapSetSpec`` is a rule denoting a set of positive integers; a
``GapSetView`` is its materialized, sorted prefix up to a bound. Views are
complete: no member of the denoted set below the bound is missing.
"""

from __future__ import annotations

import bisect
import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .certs import Certificate
from .exactnum import rational_str, to_rational

KINDS = (
    "fibonacci",
    "even_fibonacci",
    "pell",
    "geometric",
    "polynomial",
    "nonmultiples",
    "primes",
    "explicit",
    "union",
    "divided",
    "multiples_filtered",
    "shifted",
)


class SpecValidationError(ValueError):
    """A set definition violates its structural hypotheses."""


def fib_values(count: int) -> list[int]:
    """Fibonacci values f_0..f_count with f_1 = f_2 = 1 (Binet indexing)."""
    vals = [0, 1]
    for _ in range(count - 1):
        vals.append(vals[-1] + vals[-2])
    return vals


@dataclass(frozen=True)
class GapSetView:
    """Sorted, deduplicated elements of a gap set, complete up to ``bound``."""

    elements: tuple[int, ...]
    bound: int

    def __post_init__(self):
        els = self.elements
        if any(els[i] >= els[i + 1] for i in range(len(els) - 1)):
            raise ValueError("view elements must be strictly increasing")
        if els and els[0] < 1:
            raise ValueError("gap set elements must be positive")
        if els and els[-1] > self.bound:
            raise ValueError("element exceeds the view bound")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def restrict(self, bound: int) -> "GapSetView":
        """The sub-view of elements <= bound (bound must not exceed ours)."""
        if bound > self.bound:
            raise ValueError("cannot extend a view; re-enumerate its defining rule instead")
        cut = bisect.bisect_right(self.elements, bound)
        return GapSetView(self.elements[:cut], bound)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "bound": self.bound}


@dataclass(frozen=True)
class GapSetSpec:
    """A rule denoting a set of positive integers.

    Build instances through the classmethod constructors; they validate the
    structural hypotheses (e.g. a polynomial rule needs a positive leading
    coefficient and zero constant term).
    """

    kind: str
    base: Optional[int] = None
    m: Optional[int] = None
    coeffs: Optional[tuple[Fraction, ...]] = None
    elements: Optional[tuple[int, ...]] = None
    parts: Optional[tuple["GapSetSpec", ...]] = None
    inner: Optional["GapSetSpec"] = None
    d: Optional[int] = None
    shift: Optional[int] = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def fibonacci(cls) -> "GapSetSpec":
        return cls("fibonacci")

    @classmethod
    def even_fibonacci(cls) -> "GapSetSpec":
        return cls("even_fibonacci")

    @classmethod
    def pell(cls) -> "GapSetSpec":
        return cls("pell")

    @classmethod
    def geometric(cls, base: int) -> "GapSetSpec":
        if base < 2:
            raise SpecValidationError("geometric base must be >= 2")
        return cls("geometric", base=base)

    @classmethod
    def polynomial(cls, coeffs: Sequence) -> "GapSetSpec":
        """Range of a polynomial, coefficients highest degree first.

        The constant term (last coefficient) must be zero and the leading
        coefficient positive; values that are not positive integers are
        discarded during enumeration.
        """
        cs = tuple(to_rational(c) for c in coeffs)
        if len(cs) < 2:
            raise SpecValidationError("polynomial needs degree >= 1 plus a constant term")
        if cs[-1] != 0:
            raise SpecValidationError("polynomial constant term must be 0")
        if cs[0] <= 0:
            raise SpecValidationError("polynomial leading coefficient must be positive")
        return cls("polynomial", coeffs=cs)

    @classmethod
    def nonmultiples(cls, m: int) -> "GapSetSpec":
        if m < 1:
            raise SpecValidationError("nonmultiples modulus must be >= 1")
        return cls("nonmultiples", m=m)

    @classmethod
    def primes(cls) -> "GapSetSpec":
        return cls("primes")

    @classmethod
    def explicit(cls, elements: Sequence[int]) -> "GapSetSpec":
        els = tuple(sorted(set(int(e) for e in elements)))
        if els and els[0] < 1:
            raise SpecValidationError("explicit elements must be positive integers")
        return cls("explicit", elements=els)

    @classmethod
    def union(cls, parts: Sequence["GapSetSpec"]) -> "GapSetSpec":
        return cls("union", parts=tuple(parts))

    @classmethod
    def divided_by(cls, inner: "GapSetSpec", d: int) -> "GapSetSpec":
        if d < 1:
            raise SpecValidationError("divisor must be >= 1")
        return cls("divided", inner=inner, d=d)

    @classmethod
    def filtered_multiples(cls, inner: "GapSetSpec", d: int) -> "GapSetSpec":
        if d < 1:
            raise SpecValidationError("divisor must be >= 1")
        return cls("multiples_filtered", inner=inner, d=d)

    @classmethod
    def shifted_by(cls, inner: "GapSetSpec", c: int) -> "GapSetSpec":
        return cls("shifted", inner=inner, shift=c)

    # -- transforms ------------------------------------------------------------

    def divide(self, d: int) -> "GapSetSpec":
        """The set {a/d : a in A, d | a}."""
        if d == 1:
            return self
        return GapSetSpec.divided_by(self, d)

    def filter_multiples(self, d: int) -> "GapSetSpec":
        """The subset {a in A : d | a}."""
        if d == 1:
            return self
        return GapSetSpec.filtered_multiples(self, d)

    def shifted(self, c: int) -> "GapSetSpec":
        if c == 0:
            return self
        return GapSetSpec.shifted_by(self, c)

    # -- enumeration -----------------------------------------------------------

    def enumerate(self, bound: int) -> GapSetView:
        """Materialize the denoted set up to ``bound`` (complete, sorted)."""
        if bound < 1:
            raise ValueError("enumeration bound must be >= 1")
        return GapSetView(tuple(self._elements(bound)), bound)

    def _elements(self, bound: int) -> list[int]:
        kind = self.kind
        if kind == "fibonacci":
            out, a, b = [], 1, 2
            while a <= bound:
                out.append(a)
                a, b = b, a + b
            return out
        if kind == "even_fibonacci":
            out, a, b = [], 2, 8
            while a <= bound:
                out.append(a)
                a, b = b, 4 * b + a
            return out
        if kind == "pell":
            out, a, b = [], 1, 2
            while a <= bound:
                out.append(a)
                a, b = b, 2 * b + a
            return out
        if kind == "geometric":
            out, v = [], 1
            while v <= bound:
                out.append(v)
                v *= self.base
            return out
        if kind == "polynomial":
            return self._poly_elements(bound)
        if kind == "nonmultiples":
            return [n for n in range(1, bound + 1) if n % self.m != 0]
        if kind == "primes":
            return _primes_upto(bound)
        if kind == "explicit":
            return [e for e in self.elements if e <= bound]
        if kind == "union":
            merged = heapq.merge(*(p._elements(bound) for p in self.parts))
            out, prev = [], 0
            for v in merged:
                if v != prev:
                    out.append(v)
                    prev = v
            return out
        if kind == "divided":
            inner = self.inner._elements(bound * self.d)
            return [a // self.d for a in inner if a % self.d == 0]
        if kind == "multiples_filtered":
            return [a for a in self.inner._elements(bound) if a % self.d == 0]
        if kind == "shifted":
            c = self.shift
            inner = self.inner._elements(max(bound - c, 1)) if c >= 0 else self.inner._elements(bound - c)
            return [a + c for a in inner if 1 <= a + c <= bound]
        raise SpecValidationError(f"unknown gap set kind: {kind}")

    def _poly_elements(self, bound: int) -> list[int]:
        cs = self.coeffs
        lead, rest = cs[0], cs[1:-1]
        # beyond n0 the leading term dominates and values are > bound: safe stop
        n0 = (sum(abs(c) for c in rest) + 1) / lead + 1
        out, n = set(), 1
        while True:
            val = Fraction(0)
            for c in cs:
                val = val * n + c
            if val >= 1 and val.denominator == 1 and val <= bound:
                out.add(int(val))
            if n >= n0 and val > bound:
                break
            n += 1
        return sorted(out)

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        kind = self.kind
        if kind == "geometric":
            return {"kind": kind, "base": self.base}
        if kind == "polynomial":
            return {"kind": kind, "coeffs": [rational_str(c) for c in self.coeffs]}
        if kind == "nonmultiples":
            return {"kind": kind, "m": self.m}
        if kind == "explicit":
            return {"kind": kind, "elements": list(self.elements)}
        if kind == "union":
            return {"kind": kind, "of": [p.to_json() for p in self.parts]}
        if kind in ("divided", "multiples_filtered"):
            return {"kind": kind, "of": self.inner.to_json(), "d": self.d}
        if kind == "shifted":
            return {"kind": kind, "of": self.inner.to_json(), "c": self.shift}
        return {"kind": kind}

    @staticmethod
    def from_json(obj: dict) -> "GapSetSpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise SpecValidationError("set definition must be an object with a 'kind'")
        kind = obj["kind"]
        try:
            if kind == "fibonacci":
                return GapSetSpec.fibonacci()
            if kind == "even_fibonacci":
                return GapSetSpec.even_fibonacci()
            if kind == "pell":
                return GapSetSpec.pell()
            if kind == "geometric":
                return GapSetSpec.geometric(int(obj["base"]))
            if kind == "polynomial":
                return GapSetSpec.polynomial(obj["coeffs"])
            if kind == "nonmultiples":
                return GapSetSpec.nonmultiples(int(obj["m"]))
            if kind == "primes":
                return GapSetSpec.primes()
            if kind == "explicit":
                return GapSetSpec.explicit(obj["elements"])
            if kind == "union":
                return GapSetSpec.union([GapSetSpec.from_json(p) for p in obj["of"]])
            if kind == "divided":
                return GapSetSpec.divided_by(GapSetSpec.from_json(obj["of"]), int(obj["d"]))
            if kind == "multiples_filtered":
                return GapSetSpec.filtered_multiples(GapSetSpec.from_json(obj["of"]), int(obj["d"]))
            if kind == "shifted":
                return GapSetSpec.shifted_by(GapSetSpec.from_json(obj["of"]), int(obj["c"]))
        except KeyError as exc:
            raise SpecValidationError(f"set definition {kind!r} is missing field {exc}") from exc
        raise SpecValidationError(f"unknown gap set kind: {kind!r}")


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = bytearray(len(range(start, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def growth_certificate(view: GapSetView, rho, start: int = 0) -> Certificate:
    """Check d[i+1] >= rho * d[i] for every consecutive pair from index ``start``.

    ``start`` indexes the element list (0-based); the first checked pair is
    (elements[start], elements[start+1]). Records the first violating pair on
    failure.
    """
    rho = to_rational(rho)
    if not view.elements:
        raise ValueError("growth check needs a nonempty view")
    if rho <= 1:
        raise ValueError("growth ratio must exceed 1")
    els = view.elements
    params = {"rho": rational_str(rho), "start": start, "elements": len(els)}
    scope = f"pairs (d[i], d[i+1]) for i in [{start}, {len(els) - 2}]"
    for i in range(start, len(els) - 1):
        if els[i + 1] < rho * els[i]:
            return Certificate(
                claim="gap-growth-ratio",
                params=params,
                verified_range=scope,
                passed=False,
                counterexample={"index": i, "pair": [els[i], els[i + 1]]},
            )
    return Certificate(
        claim="gap-growth-ratio", params=params, verified_range=scope, passed=True
    )


def difference_set(view: GapSetView) -> GapSetView:
    """All positive pairwise differences of the view's elements."""
    els = view.elements
    diffs = sorted({b - a for i, a in enumerate(els) for b in els[i + 1 :]})
    bound = els[-1] - els[0] if len(els) > 1 else 0
    return GapSetView(tuple(diffs), bound)
