"""The q-analog of the Delannoy numbers, computed by three independent routes.

All three routes agree exactly:

* ``q_delannoy_def`` -- the defining sum over Gaussian binomials,
* ``q_delannoy_alt`` -- the manifestly symmetric sum with (-q;q)_j weights,
* ``q_delannoy_rec`` -- the three-term recurrence with q^k weights.

Negative arguments give 0, both axes give 1, and evaluation at q=1 recovers
the classical Delannoy number.
"""

from __future__ import annotations

from .polyring import ONE, IntPoly, ZERO
from .qcore import neg_q_pochhammer, q_binomial


def q_delannoy_def(h: int, k: int) -> IntPoly:
    """Defining route: sum_j q^(j(j+1)/2) * [k,j]_q * [h+k-j, k]_q."""
    if h < 0 or k < 0:
        return ZERO
    total = ZERO
    for j in range(min(h, k) + 1):
        term = q_binomial(k, j) * q_binomial(h + k - j, k)
        total = total + term.shift(j * (j + 1) // 2)
    return total


def q_delannoy_alt(h: int, k: int) -> IntPoly:
    """Symmetric route: sum_j q^((h-j)(k-j)) * (-q;q)_j * [k,j]_q * [h,j]_q."""
    if h < 0 or k < 0:
        return ZERO
    total = ZERO
    for j in range(min(h, k) + 1):
        term = neg_q_pochhammer(j) * q_binomial(k, j) * q_binomial(h, j)
        total = total + term.shift((h - j) * (k - j))
    return total


class QDelannoyTable:
    """Memoized table for the recurrence route; shareable read-only."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], IntPoly] = {}

    def get(self, h: int, k: int) -> IntPoly:
        if h < 0 or k < 0:
            return ZERO
        if h == 0 or k == 0:
            return ONE
        cached = self._memo.get((h, k))
        if cached is None:
            cached = self.get(h, k - 1) + (self.get(h - 1, k) + self.get(h - 1, k - 1)).shift(k)
            self._memo[(h, k)] = cached
        return cached


_TABLE = QDelannoyTable()


def q_delannoy_rec(h: int, k: int) -> IntPoly:
    """Recurrence route: P(h,k) = P(h,k-1) + q^k*P(h-1,k) + q^k*P(h-1,k-1)."""
    return _TABLE.get(h, k)


ROUTES = {
    "def": q_delannoy_def,
    "alt": q_delannoy_alt,
    "rec": q_delannoy_rec,
}


def q_delannoy(h: int, k: int, route: str = "rec") -> IntPoly:
    """Compute the q-Delannoy polynomial by the named route."""
    try:
        fn = ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; expected one of {sorted(ROUTES)}") from None
    return fn(h, k)


def specialize_q1(h: int, k: int) -> int:
    """Evaluate the q-Delannoy polynomial at q=1; equals delannoy(h,k)."""
    if h < 0 or k < 0:
        raise ValueError("specialization expects nonnegative arguments")
    return q_delannoy_rec(h, k).evaluate(1)
