"""Coloring generators: fractional-part classes, block and residue patterns,
products, and circle-rotation words, plus subword complexity.

Colorings are materialized words (one byte per position, positions 1..N) so
the scanning layer gets random access. Generation is exact: class membership
at a boundary is decided by integer arithmetic, never by floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exactnum import Q5

MAX_LENGTH = 10_000_000  # one byte per position: 10 MB of word at the cap

AlphaLike = Union[int, Fraction, str, Q5]


@dataclass
class Coloring:
    """A finite word over colors {1..r} on positions 1..N."""

    r: int
    colors: bytes
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.r < 1 or self.r > 255:
            raise ValueError("color count must be in 1..255")
        bad = [c for c in set(self.colors) if not 1 <= c <= self.r]
        if bad:
            raise ValueError(f"colors outside 1..{self.r}: {bad}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def at(self, pos: int) -> int:
        """Color of position pos (1-based)."""
        return self.colors[pos - 1]

    def word(self) -> list[int]:
        return list(self.colors)

    # -- export ----------------------------------------------------------------

    def to_json(self) -> dict:
        rle, prev, count = [], None, 0
        for c in self.colors:
            if c == prev:
                count += 1
            else:
                if prev is not None:
                    rle.append([prev, count])
                prev, count = c, 1
        if prev is not None:
            rle.append([prev, count])
        return {"r": self.r, "n": self.n, "rle": rle, "provenance": self.provenance}

    @staticmethod
    def from_json(obj: dict) -> "Coloring":
        word = bytearray()
        for color, count in obj["rle"]:
            word.extend(bytes([color]) * count)
        if len(word) != obj["n"]:
            raise ValueError("run-length data does not match the declared length")
        return Coloring(obj["r"], bytes(word), obj.get("provenance", {}))

    def to_text(self) -> str:
        """One character per position; only for r <= 9."""
        if self.r > 9:
            raise ValueError("text export needs r <= 9")
        return "".join(str(c) for c in self.colors)


def _check_length(n: int):
    if n < 1:
        raise ValueError("coloring length must be >= 1")
    if n > MAX_LENGTH:
        raise ValueError(f"coloring length capped at {MAX_LENGTH} (1 byte/position)")


def _floor_triple(P: int, U: int, L: int) -> int:
    # floor((P + U*sqrt5)/L) for integers with L > 0
    if U == 0:
        return P // L
    s = math.isqrt(5 * U * U)
    return (P + s) // L if U > 0 else (P - s - 1) // L


def frac_coloring(alpha: AlphaLike, r: int, n: int) -> Coloring:
    """Color x by which r-th of the unit interval {alpha*x} falls in.

    Class i is the half-open window [(i-1)/r, i/r); an exact hit on a cut
    point i/r therefore lands in the higher class.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    _check_length(n)
    alpha_q5 = alpha if isinstance(alpha, Q5) else Q5.coerce(alpha)
    P0, U0, L = alpha_q5.as_integer_triple()
    word = bytearray(n)
    if U0 == 0:
        # rational rotation: {alpha*x} = (P0*x mod L)/L
        for x in range(1, n + 1):
            rem = (P0 * x) % L
            word[x - 1] = (r * rem) // L + 1
    else:
        for x in range(1, n + 1):
            P, U = P0 * x, U0 * x
            fl = _floor_triple(P, U, L)
            word[x - 1] = _floor_triple(r * (P - fl * L), r * U, L) + 1
    return Coloring(
        r,
        bytes(word),
        {"generator": "frac", "alpha": alpha_q5.to_json(), "r": r, "n": n},
    )


def block_coloring(m: int, n: int) -> Coloring:
    """Two colors in blocks of m: color 1 iff x mod 2m lands in {1..m}."""
    if m < 1:
        raise ValueError("block width must be >= 1")
    _check_length(n)
    word = bytearray(n)
    for x in range(1, n + 1):
        word[x - 1] = 1 if 1 <= x % (2 * m) <= m else 2
    return Coloring(2, bytes(word), {"generator": "block", "m": m, "n": n})


def residue_coloring(m: int, n: int) -> Coloring:
    """m colors by residue: position x gets color (x mod m) + 1."""
    if m < 2:
        raise ValueError("residue modulus must be >= 2")
    _check_length(n)
    word = bytes((x % m) + 1 for x in range(1, n + 1))
    return Coloring(m, word, {"generator": "residue", "m": m, "n": n})


def product_coloring(first: Coloring, second: Coloring) -> Coloring:
    """Pair two colorings position-wise; color index (c1-1)*r2 + c2."""
    if first.n != second.n:
        raise ValueError(f"length mismatch: {first.n} vs {second.n}")
    r2 = second.r
    word = bytes(
        (c1 - 1) * r2 + c2 for c1, c2 in zip(first.colors, second.colors)
    )
    return Coloring(
        first.r * r2,
        word,
        {
            "generator": "product",
            "first": first.provenance,
            "second": second.provenance,
        },
    )


CutLike = Union[int, Fraction, str, Q5]


def rotation_word(
    alpha: AlphaLike,
    x0: AlphaLike,
    cut: CutLike,
    n: int,
    first_class: Optional[Sequence[tuple[CutLike, CutLike]]] = None,
) -> Coloring:
    """Binary coding of the rotation x -> x + alpha started at x0.

    Position n gets color 1 iff {x0 + n*alpha} lies in [0, cut); with an
    irrational alpha and the cut aligned to {alpha} this produces a Sturmian
    word. ``first_class`` replaces the single cut by a union of half-open
    intervals [lo, hi) for color 1.
    """
    _check_length(n)
    alpha_q5 = alpha if isinstance(alpha, Q5) else Q5.coerce(alpha)
    x0_q5 = x0 if isinstance(x0, Q5) else Q5.coerce(x0)
    if first_class is None:
        cut_q5 = cut if isinstance(cut, Q5) else Q5.coerce(cut)
        if not (Q5(0) < cut_q5 < Q5(1)):
            raise ValueError("cut must satisfy 0 < cut < 1")
        windows = [(Q5(0), cut_q5)]
    else:
        windows = [
            (w_lo if isinstance(w_lo, Q5) else Q5.coerce(w_lo),
             w_hi if isinstance(w_hi, Q5) else Q5.coerce(w_hi))
            for w_lo, w_hi in first_class
        ]
    word = bytearray(n)
    value = x0_q5
    for pos in range(1, n + 1):
        value = value + alpha_q5
        f = value.frac()
        hit = any((f - lo).sign() >= 0 and (f - hi).sign() < 0 for lo, hi in windows)
        word[pos - 1] = 1 if hit else 2
    prov = {
        "generator": "rotation",
        "alpha": alpha_q5.to_json(),
        "x0": x0_q5.to_json(),
        "n": n,
    }
    if first_class is None:
        prov["cut"] = cut_q5.to_json()
    else:
        prov["first_class"] = [[lo.to_json(), hi.to_json()] for lo, hi in windows]
    return Coloring(2, bytes(word), prov)


def complexity(coloring: Coloring, n: int) -> int:
    """Number of distinct contiguous length-n factors of the word."""
    if not 1 <= n <= coloring.n:
        raise ValueError("factor length must be in 1..N")
    w = coloring.colors
    return len({w[i : i + n] for i in range(coloring.n - n + 1)})


# -- preset registry ------------------------------------------------------------

_PRESET_PARAMS = {
    # sqrt5/8, two classes: avoids long monochromatic Fibonacci APs
    "sqrt5over8": lambda n: frac_coloring(Q5(0, Fraction(1, 8)), 2, n),
    # (3+sqrt5)/8 = (1+phi)/4, two classes: avoids 4-term even-Fibonacci chains
    "oneplusphiover4": lambda n: frac_coloring(Q5(Fraction(3, 8), Fraction(1, 8)), 2, n),
    # golden rotation with the cut aligned to the angle: Sturmian, p(n) = n+1
    "goldenrotation": lambda n: rotation_word(
        Q5(Fraction(-1, 2), Fraction(1, 2)), 0, Q5(Fraction(-1, 2), Fraction(1, 2)), n
    ),
}

PRESETS = tuple(sorted(_PRESET_PARAMS))


def preset_coloring(name: str, n: int) -> Coloring:
    """Build a registered coloring family at length n."""
    try:
        builder = _PRESET_PARAMS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    coloring = builder(n)
    coloring.provenance["preset"] = name
    return coloring
