"""Lattice paths over east/north/northeast steps and the sigma statistic.

A path is a plain tuple of step symbols "E", "N", "D" read left to right;
paths are origin-relative, and absolute positions are derived on demand.
sigma(path) adds up, over every step that raises y, the x-coordinate of
that step's endpoint when the path starts at the origin.
"""

from __future__ import annotations

from collections.abc import Iterator

from .polyring import IntPoly

Path = tuple[str, ...]

E = "E"
N = "N"
D = "D"
STEP_DX = {E: 1, N: 0, D: 1}
STEP_DY = {E: 0, N: 1, D: 1}


def x_of(path: Path) -> int:
    return sum(STEP_DX[s] for s in path)


def y_of(path: Path) -> int:
    return sum(STEP_DY[s] for s in path)


def sigma(path: Path) -> int:
    total = 0
    x = 0
    for s in path:
        x += STEP_DX[s]
        if s != E:
            total += x
    return total


def concat(first: Path, second: Path) -> Path:
    """Concatenation; sigma(a+b) = sigma(a) + sigma(b) + x(a)*y(b)."""
    return first + second


def path_points(path: Path, start: tuple[int, int] = (0, 0)) -> list[tuple[int, int]]:
    """Every lattice point the path visits, start included."""
    x, y = start
    pts = [(x, y)]
    for s in path:
        x += STEP_DX[s]
        y += STEP_DY[s]
        pts.append((x, y))
    return pts


def enumerate_paths(h: int, k: int) -> Iterator[Path]:
    """Yield every path from (0,0) to (h,k) exactly once.

    Deterministic order: at each position try E, then N, then D.  The
    stream is never materialized here; delannoy(h,k) paths in total.
    """
    if h < 0 or k < 0:
        raise ValueError(f"target must be in the first quadrant, got ({h}, {k})")
    prefix: list[str] = []

    def walk(dh: int, dk: int) -> Iterator[Path]:
        if dh == 0 and dk == 0:
            yield tuple(prefix)
            return
        if dh:
            prefix.append(E)
            yield from walk(dh - 1, dk)
            prefix.pop()
        if dk:
            prefix.append(N)
            yield from walk(dh, dk - 1)
            prefix.pop()
        if dh and dk:
            prefix.append(D)
            yield from walk(dh - 1, dk - 1)
            prefix.pop()

    return walk(h, k)


def sigma_poly(h: int, k: int) -> IntPoly:
    """Sum of q^sigma over all paths to (h,k); equals the q-Delannoy polynomial."""
    counts = [0] * (h * k + 1)
    for path in enumerate_paths(h, k):
        counts[sigma(path)] += 1
    return IntPoly(counts)


def path_text(path: Path) -> str:
    return "".join(path)


def path_from_text(text: str) -> Path:
    for ch in text:
        if ch not in STEP_DX:
            raise ValueError(f"invalid step {ch!r}; paths use the alphabet E, N, D")
    return tuple(text)
