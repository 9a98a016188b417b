"""Triangle-lattice seed for triples of full flags in the special linear
case.  Vertices sit at (i, j, k) with i + j + k = N and at most one zero
coordinate; the boundary (one zero) is frozen.  The label at (i, j, k) pairs
degree-i, -j, -k wedge prefixes of the three flags."""

from __future__ import annotations

from fractions import Fraction

from ..core.seed import Seed
from ..invariants.spec import FunctionSpec
from .conf3 import LabelledSeed

HALF = Fraction(1, 2)


def tv(i, j, k) -> str:
    return f"t:{i}:{j}:{k}"


def triangle_points(N: int):
    return [(i, j, k)
            for i in range(N + 1)
            for j in range(N + 1 - i)
            for k in (N - i - j,)
            if (i == 0) + (j == 0) + (k == 0) <= 1]


def sl_conf3_seed(N: int) -> LabelledSeed:
    """The full-flag triangle seed; n is recorded as the matrix size N."""
    if N < 3:
        raise ValueError("need N >= 3")
    pts = triangle_points(N)
    verts = tuple(tv(*p) for p in pts)
    frozen = frozenset(tv(*p) for p in pts if 0 in p)
    d = {v: Fraction(1) for v in verts}
    exists = set(pts)
    b: dict[tuple[str, str], Fraction] = {}
    # three arrow families cycling the coordinate shifts
    steps = ((1, -1, 0), (0, 1, -1), (-1, 0, 1))
    for (i, j, k) in pts:
        for di, dj, dk in steps:
            q = (i + di, j + dj, k + dk)
            if q not in exists:
                continue
            u, v = tv(i, j, k), tv(*q)
            w = HALF if (u in frozen and v in frozen) else Fraction(1)
            b[(u, v)] = b.get((u, v), Fraction(0)) + w
            b[(v, u)] = b.get((v, u), Fraction(0)) - w
    seed = Seed(verts, frozen, b, d)
    labels = {tv(i, j, k): FunctionSpec("Tri", ((i,), (j,), (k,)), (0, 1, 2))
              for (i, j, k) in pts}
    return LabelledSeed("A", N, 3, seed, labels)
