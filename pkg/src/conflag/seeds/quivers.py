"""Triangle-grid quivers for configurations of three principal flags.

The grid has rows i = 0..n and columns j = 1..n (plus a doubled column n*
for the even orthogonal family), with edge vertices y_k hanging off the
left of rows n-k (and y_n at the right of row 1).  Rows 0 and n and the
y-column are frozen.  Arrow weights follow the multiplier rules: a solid
arrow from a d=1 vertex into a d=1/2 vertex has |b| = 2, every other solid
arrow has |b| = 1, and dashed (frozen-frozen) arrows carry half of that.
"""

from __future__ import annotations

from fractions import Fraction

from ..core.seed import Seed

HALF = Fraction(1, 2)


def xv(i, j) -> str:
    return f"x:{i}:{j}"


def yv(k) -> str:
    return f"y:{k}"


def _arrows_bc(n: int):
    """(src, dst, dashed) arrows of the common grid shape."""
    a = []
    for j in range(1, n + 1):
        for i in range(n - 1, -1, -1):
            a.append((xv(i + 1, j), xv(i, j), False))
    for j in range(n - 1, 0, -1):
        a.append((xv(0, j + 1), xv(0, j), True))
        a.append((xv(n, j + 1), xv(n, j), True))
    for k in range(1, n):
        a.append((yv(k), yv(k + 1), True))
    a.append((yv(n), xv(1, n), False))
    for i in range(1, n):
        for j in range(n - 1, 0, -1):
            a.append((xv(i, j + 1), xv(i, j), False))
        a.append((xv(i, 1), yv(n - i), False))
    for j in range(1, n):
        a.append((xv(0, j), xv(1, j + 1), False))
    a.append((xv(0, n), yv(n), False))
    for i in range(1, n):
        a.append((yv(n - i), xv(i + 1, 1), False))
        for j in range(1, n):
            a.append((xv(i, j), xv(i + 1, j + 1), False))
    return a


def _arrows_d(n: int):
    """The grid with the last column and y_n doubled by starred copies."""
    a = _arrows_bc(n)
    s = "n*"
    for i in range(n - 1, -1, -1):
        a.append((xv(i + 1, s), xv(i, s), False))
    a.append((xv(0, s), xv(0, n - 1), True))
    a.append((xv(n, s), xv(n, n - 1), True))
    a.append((yv(n - 1), yv(s), True))
    a.append((yv(s), xv(1, s), False))
    a.append((xv(1, s), xv(1, n - 1), False))
    for i in range(2, n):
        a.append((xv(i, s), xv(i, n - 1), False))
    a.append((xv(0, n - 1), xv(1, s), False))
    a.append((xv(0, s), yv(s), False))
    for i in range(1, n):
        a.append((xv(i, n - 1), xv(i + 1, s), False))
    return a


def grid_vertices(family: str, n: int):
    cols = list(range(1, n + 1)) + (["n*"] if family == "D" else [])
    verts = [xv(i, j) for i in range(n + 1) for j in cols]
    verts += [yv(k) for k in range(1, n + 1)]
    if family == "D":
        verts.append(yv("n*"))
    return tuple(verts)


def grid_frozen(family: str, n: int):
    cols = list(range(1, n + 1)) + (["n*"] if family == "D" else [])
    fr = {xv(0, j) for j in cols} | {xv(n, j) for j in cols}
    fr |= {yv(k) for k in range(1, n + 1)}
    if family == "D":
        fr.add(yv("n*"))
    return frozenset(fr)


def grid_multipliers(family: str, n: int):
    """d=1/2 on the short-root column for the folded families."""
    d = {}
    light = set()
    if family == "C":
        light = {xv(i, n) for i in range(n + 1)} | {yv(n)}
    elif family == "B":
        light = set(grid_vertices("B", n)) - (
            {xv(i, n) for i in range(n + 1)} | {yv(n)})
    for v in grid_vertices(family, n):
        d[v] = HALF if v in light else Fraction(1)
    return d


def conf3_quiver(family: str, n: int) -> Seed:
    if family not in ("B", "C", "D"):
        raise ValueError(f"no triangle grid for family {family!r}")
    verts = grid_vertices(family, n)
    frozen = grid_frozen(family, n)
    d = grid_multipliers(family, n)
    arrows = _arrows_d(n) if family == "D" else _arrows_bc(n)
    b: dict[tuple[str, str], Fraction] = {}
    for u, v, dashed in arrows:
        w = Fraction(2) if (d[u] == 1 and d[v] == HALF) else Fraction(1)
        if dashed:
            w = w * HALF
        b[(u, v)] = b.get((u, v), Fraction(0)) + w
        back = -w * d[v] / d[u]
        b[(v, u)] = b.get((v, u), Fraction(0)) + back
    return Seed(verts, frozen, b, d)
