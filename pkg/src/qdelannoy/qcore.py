"""q-integers, Gaussian binomials, Delannoy numbers, and Lucas-type checks.

Gaussian binomials are built by the Pascal-style recurrence
[h,k] = q^k*[h-1,k] + [h-1,k-1] with memoization; the factorial-quotient
form is exercised only as a test oracle.  Delannoy numbers come from the
three-term recurrence with 1 on both axes.
"""

from __future__ import annotations

from math import comb

from .cyclotomic import congruent
from .polyring import ONE, IntPoly, ZERO


def q_integer(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError(f"q-integer index must be nonnegative, got {n}")
    return IntPoly([1] * n)


def neg_q_pochhammer(j: int) -> IntPoly:
    """(-q;q)_j = (1+q)(1+q^2)...(1+q^j); the empty product is 1."""
    if j < 0:
        raise ValueError(f"Pochhammer index must be nonnegative, got {j}")
    p = ONE
    for i in range(1, j + 1):
        p = p * (ONE + IntPoly.monomial(i))
    return p


class QBinomialTable:
    """Memoized Gaussian binomial coefficients."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], IntPoly] = {}

    def get(self, h: int, k: int) -> IntPoly:
        if h < 0:
            raise ValueError(f"upper index must be nonnegative, got {h}")
        if k < 0 or k > h:
            return ZERO
        if k == 0 or k == h:
            return ONE
        cached = self._memo.get((h, k))
        if cached is None:
            cached = self.get(h - 1, k).shift(k) + self.get(h - 1, k - 1)
            self._memo[(h, k)] = cached
        return cached


class DelannoyTable:
    """Memoized Delannoy numbers D(h,k); zero for negative arguments."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], int] = {}

    def get(self, h: int, k: int) -> int:
        if h < 0 or k < 0:
            return 0
        if h == 0 or k == 0:
            return 1
        cached = self._memo.get((h, k))
        if cached is None:
            cached = self.get(h, k - 1) + self.get(h - 1, k) + self.get(h - 1, k - 1)
            self._memo[(h, k)] = cached
        return cached


_QBINOM = QBinomialTable()
_DELANNOY = DelannoyTable()


def q_binomial(h: int, k: int) -> IntPoly:
    """Gaussian binomial [h choose k]_q; zero outside 0 <= k <= h."""
    return _QBINOM.get(h, k)


def delannoy(h: int, k: int) -> int:
    """Number of E/N/D lattice paths from the origin to (h,k)."""
    return _DELANNOY.get(h, k)


def delannoy_series_table(size: int) -> list[list[int]]:
    """Coefficient table of the power series 1/(1-x-y-xy) up to degree size.

    Entry [h][k] obeys c[h][k] = c[h-1][k] + c[h][k-1] + c[h-1][k-1] with
    c[0][0] = 1 and out-of-range terms zero, and must match delannoy(h,k).
    """
    if size < 0:
        raise ValueError(f"table size must be nonnegative, got {size}")
    table = [[0] * (size + 1) for _ in range(size + 1)]
    table[0][0] = 1
    for h in range(size + 1):
        for k in range(size + 1):
            if h == 0 and k == 0:
                continue
            up = table[h - 1][k] if h else 0
            left = table[h][k - 1] if k else 0
            diag = table[h - 1][k - 1] if h and k else 0
            table[h][k] = up + left + diag
    return table


def is_prime(p: int) -> bool:
    """Trial division; inputs here are tiny."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_split_args(modulus: int, b: int, d: int) -> None:
    if not 0 <= b <= modulus - 1 or not 0 <= d <= modulus - 1:
        raise ValueError(f"remainder parts must lie in [0, {modulus - 1}], got b={b} d={d}")


def lucas_check(p: int, a: int, b: int, c: int, d: int) -> bool:
    """Whether C(ap+b, cp+d) == C(a,c)*C(b,d) mod p, with exact integers."""
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    _check_split_args(p, b, d)
    return (comb(a * p + b, c * p + d) - comb(a, c) * comb(b, d)) % p == 0


def delannoy_lucas_check(p: int, a: int, b: int, c: int, d: int) -> bool:
    """Whether D(ap+b, cp+d) == D(a,c)*D(b,d) mod p."""
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    _check_split_args(p, b, d)
    return (delannoy(a * p + b, c * p + d) - delannoy(a, c) * delannoy(b, d)) % p == 0


def q_lucas_check(n: int, a: int, b: int, c: int, d: int) -> bool:
    """Whether [an+b, cn+d]_q == C(a,c)*[b,d]_q mod Phi_n."""
    if n < 1:
        raise ValueError(f"modulus index must be positive, got {n}")
    _check_split_args(n, b, d)
    lhs = q_binomial(a * n + b, c * n + d)
    rhs = q_binomial(b, d) * comb(a, c)
    return congruent(lhs, rhs, n)


def q_binomial_theorem_check(j: int) -> bool:
    """Whether (-q;q)_j equals sum_i q^(i(i+1)/2) * [j choose i]_q exactly."""
    rhs = ZERO
    for i in range(j + 1):
        rhs = rhs + q_binomial(j, i).shift(i * (i + 1) // 2)
    return neg_q_pochhammer(j) == rhs
