"""Direct verification of the headline congruences, plus grid sweeps.

The two theorem checks reduce exact polynomial differences modulo Phi_n and
never touch the orbit machinery, so they corroborate it independently.
Reports carry both sides and the reduced residue, not just a boolean, so a
failure localizes the discrepancy.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .cyclotomic import reduce_mod
from .polyring import IntPoly
from .qcore import delannoy, is_prime, q_binomial
from .qdelannoy import q_delannoy_rec
from .paths import sigma_poly


@dataclass(frozen=True)
class CongruenceReport:
    """One verified instance of a statement, with the reduced residue."""

    tag: str
    params: dict
    lhs: IntPoly
    rhs: IntPoly
    residue: IntPoly
    passed: bool

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "params": dict(sorted(self.params.items())),
            "lhs": self.lhs.to_json_coeffs(),
            "rhs": self.rhs.to_json_coeffs(),
            "residue": self.residue.to_json_coeffs(),
            "pass": self.passed,
        }


def _report(tag: str, params: dict, lhs: IntPoly, rhs: IntPoly, n: int | None) -> CongruenceReport:
    residue = reduce_mod(lhs - rhs, n) if n is not None else lhs - rhs
    return CongruenceReport(tag, params, lhs, rhs, residue, residue.is_zero())


def verify_theorem2(n: int, h: int, k: int) -> CongruenceReport:
    """Corner-step congruence: P(h+n,k+n) vs P(h+n,k) + P(h,k+n) +/- P(h,k) mod Phi_n.

    The sign on the last term is + for odd n and - for even n.
    """
    if n < 1:
        raise ValueError(f"modulus index must be positive, got {n}")
    if h < 0 or k < 0:
        raise ValueError("corner coordinates must be nonnegative")
    sign = 1 if n % 2 else -1
    lhs = q_delannoy_rec(h + n, k + n)
    rhs = q_delannoy_rec(h + n, k) + q_delannoy_rec(h, k + n) + q_delannoy_rec(h, k) * sign
    tag = "thm2-odd" if n % 2 else "thm2-even"
    return _report(tag, {"n": n, "h": h, "k": k}, lhs, rhs, n)


def verify_theorem1(n: int, a: int, b: int, c: int, d: int) -> CongruenceReport:
    """Split congruence: P(an+b, cn+d) vs D(a,c)*P(b,d) mod Phi_n.

    For even n the integer factor D(a,c) drops out and the right side is
    P(b,d) alone.
    """
    if n < 1:
        raise ValueError(f"modulus index must be positive, got {n}")
    if a < 0 or c < 0:
        raise ValueError("quotient parts must be nonnegative")
    if not 0 <= b <= n - 1 or not 0 <= d <= n - 1:
        raise ValueError(f"remainder parts must lie in [0, {n - 1}], got b={b} d={d}")
    lhs = q_delannoy_rec(a * n + b, c * n + d)
    if n % 2:
        rhs = q_delannoy_rec(b, d) * delannoy(a, c)
        tag = "thm1-odd"
    else:
        rhs = q_delannoy_rec(b, d)
        tag = "thm1-even"
    return _report(tag, {"n": n, "a": a, "b": b, "c": c, "d": d}, lhs, rhs, n)


def induction_consistency(n: int, a: int, b: int, c: int, d: int) -> bool:
    """Check one inductive layer deriving the split congruence from the corner one.

    Reduces P((a+1)n+b, (c+1)n+d) through the corner-step congruence at
    (an+b, cn+d), then confirms the telescoped right side: for odd n the
    three-term Delannoy recurrence assembles D(a+1,c+1), for even n the
    signs collapse to a single P(b,d).
    """
    if not 0 <= b <= n - 1 or not 0 <= d <= n - 1:
        raise ValueError(f"remainder parts must lie in [0, {n - 1}], got b={b} d={d}")
    sign = 1 if n % 2 else -1
    lhs = q_delannoy_rec((a + 1) * n + b, (c + 1) * n + d)
    via_corner = (
        q_delannoy_rec((a + 1) * n + b, c * n + d)
        + q_delannoy_rec(a * n + b, (c + 1) * n + d)
        + q_delannoy_rec(a * n + b, c * n + d) * sign
    )
    if n % 2:
        target = q_delannoy_rec(b, d) * delannoy(a + 1, c + 1)
    else:
        target = q_delannoy_rec(b, d)
    step_ok = reduce_mod(lhs - via_corner, n).is_zero()
    telescoped_ok = reduce_mod(via_corner - target, n).is_zero()
    return step_ok and telescoped_ok


def _qlucas_report(n: int, a: int, b: int, c: int, d: int) -> CongruenceReport:
    lhs = q_binomial(a * n + b, c * n + d)
    rhs = q_binomial(b, d) * comb(a, c)
    return _report("q-lucas", {"n": n, "a": a, "b": b, "c": c, "d": d}, lhs, rhs, n)


def _int_report(tag: str, p: int, a: int, b: int, c: int, d: int, lhs: int, rhs: int) -> CongruenceReport:
    residue = IntPoly.const((lhs - rhs) % p)
    return CongruenceReport(
        tag,
        {"p": p, "a": a, "b": b, "c": c, "d": d},
        IntPoly.const(lhs),
        IntPoly.const(rhs),
        residue,
        residue.is_zero(),
    )


def _interp_report(h: int, k: int) -> CongruenceReport:
    lhs = sigma_poly(h, k)
    rhs = q_delannoy_rec(h, k)
    return _report("interp", {"h": h, "k": k}, lhs, rhs, None)


STATEMENTS = ("lucas", "dlucas", "qlucas", "thm1", "thm2", "interp")


@dataclass(frozen=True)
class SweepConfig:
    """Finite parameter grid for one statement.

    max_n bounds the modulus index (for lucas/dlucas: the primes tried);
    remainder parts b, d always range over the full [0, n-1].
    """

    statement: str
    max_n: int = 0
    max_a: int = 0
    max_c: int = 0
    max_h: int = 0
    max_k: int = 0
    jobs: int = 1

    def cases(self) -> list[tuple[int, ...]]:
        s = self.statement
        if s == "thm2":
            return [
                (n, h, k)
                for n in range(1, self.max_n + 1)
                for h in range(self.max_h + 1)
                for k in range(self.max_k + 1)
            ]
        if s in ("thm1", "qlucas"):
            return [
                (n, a, b, c, d)
                for n in range(1, self.max_n + 1)
                for a in range(self.max_a + 1)
                for b in range(n)
                for c in range(self.max_c + 1)
                for d in range(n)
            ]
        if s in ("lucas", "dlucas"):
            return [
                (p, a, b, c, d)
                for p in range(2, self.max_n + 1)
                if is_prime(p)
                for a in range(self.max_a + 1)
                for b in range(p)
                for c in range(self.max_c + 1)
                for d in range(p)
            ]
        if s == "interp":
            return [(h, k) for h in range(self.max_h + 1) for k in range(self.max_k + 1)]
        raise ValueError(f"unknown statement {s!r}; expected one of {STATEMENTS}")


def run_case(statement: str, case: tuple[int, ...]) -> CongruenceReport:
    """Evaluate one grid case; pure, so cases may run in any order."""
    if statement == "thm2":
        return verify_theorem2(*case)
    if statement == "thm1":
        return verify_theorem1(*case)
    if statement == "qlucas":
        return _qlucas_report(*case)
    if statement == "lucas":
        p, a, b, c, d = case
        return _int_report("lucas", p, a, b, c, d, comb(a * p + b, c * p + d), comb(a, c) * comb(b, d))
    if statement == "dlucas":
        p, a, b, c, d = case
        return _int_report(
            "delannoy-lucas", p, a, b, c, d, delannoy(a * p + b, c * p + d), delannoy(a, c) * delannoy(b, d)
        )
    if statement == "interp":
        return _interp_report(*case)
    raise ValueError(f"unknown statement {statement!r}")


@dataclass(frozen=True)
class SweepSummary:
    statement: str
    total: int
    passed: int
    failed: int
    failures: tuple[dict, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "failures": list(self.failures),
        }


def _run_case_json(args: tuple[str, tuple[int, ...]]) -> dict:
    return run_case(*args).to_json()


def sweep(config: SweepConfig) -> SweepSummary:
    """Run every case of the grid; the summary is scheduling-independent."""
    cases = config.cases()
    tagged = [(config.statement, case) for case in cases]
    if config.jobs > 1 and len(cases) > 1:
        chunk = max(1, len(cases) // (config.jobs * 8))
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_case_json, tagged, chunksize=chunk))
    else:
        results = [_run_case_json(t) for t in tagged]
    failures = tuple(r for r in results if not r["pass"])
    return SweepSummary(
        statement=config.statement,
        total=len(results),
        passed=len(results) - len(failures),
        failed=len(failures),
        failures=failures,
    )
