"""Nested-interval construction of a rational alpha whose fractional parts
{alpha * q_n} stay inside [eps, (r-1)/r] along a fast-growing gap sequence,
plus the translation of such a window certificate into an upper bound on
monochromatic diffsequence length.

Everything here is exact rational arithmetic. A produced certificate never
claims anything beyond the processed index range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .certs import Certificate
from .exactnum import Q5, RatInterval, frac, rational_str, sign, to_rational
from .gapsets import GapSetView

AlphaLike = Union[int, Fraction, str, Q5]


class GrowthConditionError(ValueError):
    """The gap sequence grows too slowly for the nested-interval recursion."""

    def __init__(self, index: int, pair: tuple[int, int], threshold: Fraction):
        self.index = index
        self.pair = pair
        self.threshold = threshold
        super().__init__(
            f"growth hypothesis violated at index {index}: "
            f"{pair[1]} < {rational_str(threshold)} * {pair[0]}"
        )


def growth_factor(r: int, delta) -> Fraction:
    """The required consecutive-ratio floor 2 + 1/(r-1) + delta."""
    if r < 2:
        raise ValueError("need r >= 2")
    delta = to_rational(delta)
    if delta <= 0:
        raise ValueError("need delta > 0")
    return 2 + Fraction(1, r - 1) + delta


def epsilon_of(r: int, delta) -> Fraction:
    """The window floor delta*(r-1) / (r * (2 + 1/(r-1) + delta))."""
    delta = to_rational(delta)
    return delta * (r - 1) / (r * growth_factor(r, delta))


@dataclass
class NestedState:
    """State of the interval recursion after ``step`` steps.

    The current interval is always [(z+eps)/q, (r*z + r-1)/(r*q)] for the
    latest z and q, each new interval sits inside its predecessor, and the
    width is exactly ((r-1) - r*eps) / (r*q).
    """

    r: int
    delta: Fraction
    eps: Fraction
    q: list[int]
    z: list[int]
    interval: RatInterval
    step: int

    def advance(self) -> "NestedState":
        """One recursion step: the smallest integer z_next placing
        z_next/q_next inside the left subinterval of width 1/q_next."""
        q_cur, q_next = self.q[self.step - 1], self.q[self.step]
        left_lo = (self.z[-1] + self.eps) / q_cur
        z_next = math.ceil(q_next * left_lo)
        nxt = RatInterval(
            (z_next + self.eps) / q_next,
            Fraction(self.r * z_next + (self.r - 1), self.r * q_next),
        )
        if not self.interval.contains_interval(nxt):
            raise RuntimeError(
                f"interval nesting failed at step {self.step + 1}; unreachable "
                "when the growth hypothesis holds"
            )
        return NestedState(
            self.r, self.delta, self.eps, self.q, self.z + [z_next], nxt, self.step + 1
        )

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "z": self.z[-1],
            "interval": self.interval.to_json(),
        }


@dataclass
class AlphaCertificate:
    """Result of the construction: alpha, its enclosure, and per-index verdicts."""

    alpha: Fraction
    enclosure: RatInterval
    eps: Fraction
    eps1: Fraction
    r: int
    steps: int
    q: list[int]
    z: list[int]
    intervals: list[RatInterval]
    verdicts: list[dict] = field(default_factory=list)

    @property
    def all_in_window(self) -> bool:
        return all(v["in_window"] for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "alpha": rational_str(self.alpha),
            "enclosure": self.enclosure.to_json(),
            "eps": rational_str(self.eps),
            "eps1": rational_str(self.eps1),
            "r": self.r,
            "steps": self.steps,
            "q": self.q,
            "trace": [
                {"step": k + 1, "z": self.z[k], "interval": self.intervals[k].to_json()}
                for k in range(self.steps)
            ],
            "verdicts": self.verdicts,
        }


def build_alpha(
    q: Sequence[int],
    r: int,
    delta,
    steps: Optional[int] = None,
    first_gap: Optional[int] = None,
) -> AlphaCertificate:
    """Run the nested-interval recursion over the first ``steps`` entries of q.

    Requires q strictly increasing with q[n+1] >= (2 + 1/(r-1) + delta) * q[n]
    (checked exactly; violation raises GrowthConditionError naming the index).
    Each interval is [(z+eps)/q, (r*z + r-1)/(r*q)]; the next z is the smallest
    integer placing z/q_next in the left subinterval of width 1/q_next. Nesting
    is asserted at every step. The reported alpha is the midpoint of the final
    enclosure, which keeps every verdict strictly interior.

    ``first_gap`` is the first element of the full gap set when q is a tail of
    it; it only feeds the rescaled window floor eps1 = eps * first_gap / q[0].
    """
    delta = to_rational(delta)
    q = [int(v) for v in q]
    if steps is None:
        steps = len(q)
    if not 1 <= steps <= len(q):
        raise ValueError("steps must be between 1 and len(q)")
    if any(v < 1 for v in q[:steps]):
        raise ValueError("q entries must be positive")
    factor = growth_factor(r, delta)
    for n in range(steps - 1):
        if q[n + 1] <= q[n]:
            raise ValueError(f"q must be strictly increasing (index {n})")
        if q[n + 1] < factor * q[n]:
            raise GrowthConditionError(n, (q[n], q[n + 1]), factor)

    eps = epsilon_of(r, delta)
    state = NestedState(
        r, delta, eps, list(q[:steps]), [0],
        RatInterval(eps / q[0], Fraction(r - 1, r * q[0])), 1,
    )
    intervals = [state.interval]
    while state.step < steps:
        state = state.advance()
        intervals.append(state.interval)
    z = state.z

    enclosure = intervals[-1]
    alpha = enclosure.midpoint()
    window_hi = Fraction(r - 1, r)
    verdicts = []
    for n in range(steps):
        f = frac(alpha * q[n])
        verdicts.append(
            {
                "n": n + 1,
                "q": q[n],
                "frac": rational_str(f),
                "in_window": eps <= f <= window_hi,
            }
        )
    if first_gap is None:
        first_gap = q[0]
    eps1 = eps * first_gap / q[0]
    return AlphaCertificate(
        alpha=alpha,
        enclosure=enclosure,
        eps=eps,
        eps1=eps1,
        r=r,
        steps=steps,
        q=list(q[:steps]),
        z=z,
        intervals=intervals,
        verdicts=verdicts,
    )


def certify_fracs(alpha: AlphaLike, view: GapSetView, eps, r: int) -> Certificate:
    """Exact check that {alpha * d} lies in [eps, (r-1)/r] for every enumerated d.

    The certificate scopes its claim to the enumerated range; it says nothing
    about elements beyond the view's bound.
    """
    eps = to_rational(eps)
    if r < 2:
        raise ValueError("need r >= 2")
    window_hi = Fraction(r - 1, r)
    if not 0 < eps <= window_hi:
        raise ValueError("need 0 < eps <= (r-1)/r")
    alpha_q5 = alpha if isinstance(alpha, Q5) else Q5.coerce(alpha)
    params = {
        "alpha": alpha_q5.to_json(),
        "eps": rational_str(eps),
        "r": r,
        "window": [rational_str(eps), rational_str(window_hi)],
    }
    scope = f"all {len(view)} enumerated elements up to {view.bound}"
    for d in view:
        f = (alpha_q5 * d).frac()
        if sign(f - eps) < 0 or sign(f - window_hi) > 0:
            return Certificate(
                claim="fractional-parts-in-window",
                params=params,
                verified_range=scope,
                passed=False,
                counterexample={"d": d, "frac": f.to_json()},
            )
    return Certificate(
        claim="fractional-parts-in-window",
        params=params,
        verified_range=scope,
        passed=True,
    )


def diffseq_bound_from_eps(r: int, eps) -> int:
    """Length ceil(1/(r*eps)) + 1: no monochromatic diffsequence this long can
    exist under an r-class fractional-part coloring whose window floor is eps."""
    eps = to_rational(eps)
    if not 0 < eps <= Fraction(r - 1, r):
        raise ValueError("need 0 < eps <= (r-1)/r")
    return math.ceil(1 / (r * eps)) + 1
