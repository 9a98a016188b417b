"""Mutation sequences realizing the two flag transpositions on the
triple-flag grid seeds.

First transposition (swaps the last two flags): mutate the x_ij with
max(i, j) = k for k = 1..n-1, 1..n-2, ..., 1; each L-shaped stage is
traversed in the printed snake order and x_ij is mutated n - max(i, j)
times.  Second transposition (swaps the outer flags): mutate the x_ij
with i < j by rows, row pattern n-1..1, n-1..2, ..., n-1; x_ij is
mutated i times.

Labels are count-indexed.  M denotes the middle degree of the family's
seed labels (n, n+1 or n+2), N the matrix size."""

from __future__ import annotations

from ..invariants.spec import FunctionSpec
from ..seeds.conf3 import _c_gauge
from ..seeds.quivers import xv
from .base import MutationSequence
from .labels import tri_pair

_M_OFF = {"C": 0, "B": 1, "D": 2}


def _tri(a: int) -> int:
    return a * (a + 1) // 2


def _dims(family: str, n: int):
    N = {"C": 2 * n, "B": 2 * n + 1, "D": 2 * n + 2}[family]
    return N, n + _M_OFF[family]


def _l_path(k: int):
    path = [(k, j) for j in range(1, k + 1)] + \
           [(i, k) for i in range(k - 1, 0, -1)]
    return path[::-1] if k % 2 else path


def s3_first(family: str, n: int) -> MutationSequence:
    if family not in _M_OFF:
        raise ValueError(f"no grid seed for family {family!r}")
    stages = []
    for block in range(n - 1, 0, -1):
        for k in range(1, block + 1):
            stages.append(tuple(xv(i, j) for (i, j) in _l_path(k)))
    return MutationSequence("s3-first", family, n, tuple(stages))


def s3_second(family: str, n: int) -> MutationSequence:
    if family not in _M_OFF:
        raise ValueError(f"no grid seed for family {family!r}")
    cols = list(range(2, n + 1)) + (["n*"] if family == "D" else [])
    stages = []
    for p in range(1, n):
        for i in range(n - 1, p - 1, -1):
            stages.append(tuple(xv(i, j) for j in cols
                                if j == "n*" or j > i))
    return MutationSequence("s3-second", family, n, tuple(stages))


def s3_first_label(family: str, n: int, i: int, j: int,
                   t: int) -> FunctionSpec:
    """Label of x_ij after its t-th mutation in the first transposition."""
    N, M = _dims(family, n)
    if not 0 <= t <= n - max(i, j):
        raise ValueError(f"x_{i}{j} is mutated {n - max(i, j)} times")
    if i >= j:
        spec = tri_pair(N, n - i - t, N - t, M + i - j + t, j + t)
    else:
        spec = tri_pair(N, n - i - t, N + i - j - t, M + t, j + t)
    if family == "C":
        # measured gauge (coherent with the seed-label gauge)
        e = (n - i) * (n - j) + _tri(n - i - t)
    elif family == "B":
        e = n * (i + t) + _tri(i + t)
    else:
        e = _tri(n - i - t) + (n // 2 if j + t == n else 0)
    if e % 2:
        spec = spec.with_sign(-1)
    return spec


def _d2_flip(n: int, i: int, j: int, t: int) -> int:
    # measured normalization for the even orthogonal grid; _tri of a
    # negative argument uses the floor-division continuation
    return (_tri(n - j - t) + _tri(i + t) + _tri(n - t)
            + (1 if t == i else 0) + (1 if t == n - j else 0))


def _d_mid_stars(n: int, i: int, t: int, starred_col: bool):
    """Star pattern on the two middle half-spin slots during the second
    transposition of the even orthogonal grid (four parity regimes)."""
    sx = (n + t) % 2 == 1
    sy = (i + t) % 2 == 0
    if starred_col:
        sx, sy = not sx, not sy
    return sx, sy


def s3_second_label(family: str, n: int, i: int, j, t: int) -> FunctionSpec:
    """Label of x_ij (i < j) after its t-th mutation in the second
    transposition."""
    N, M = _dims(family, n)
    if not 0 <= t <= i:
        raise ValueError(f"x_{i}{j} is mutated {i} times")
    if family == "D" and j in (n, "n*"):
        return _d_second_spin_label(n, i, t, j == "n*")
    sq = family == "B" and j == n
    if t == 0:
        gauge = _c_gauge(n, i, j) if family == "C" else 1
        return FunctionSpec("TriPair", ((n - i, N + i - j), (M,), (j,)),
                            (0, 1, 2), sign=gauge, sqrt=sq)
    if t < i:
        # measured normalization, coherent with the seed gauge (for the
        # square-root column the sign is the radicand sign)
        if family == "C":
            e = (_tri(t) + (n - i) * (n - j) + _tri(n - i - t)
                 + n * t + n * j + (j - i) * (n + i))
        elif sq:
            e = _tri(t) + _tri(n - i - t) + n * t + (j - i) * (n + i)
        elif family == "B":
            e = (n - i) * (n - j)
        else:
            e = _d2_flip(n, i, j, t)
        return FunctionSpec(
            "TriDouble",
            ((n - i + t, N + i - j - t), (n, M), (j - t, M + t)),
            (0, 1, 2), sign=-1 if e % 2 else 1, sqrt=sq,
            post=-1 if sq and (n * t + _tri(n)) % 2 else 1)
    # first pair degenerates; the reduced form pairs the third flag
    if sq:
        e = (j - i) * (n + i) + _tri(j - i)
    elif family == "D":
        e = _d2_flip(n, i, j, t)
    else:
        e = (j + i * j + _tri(t) + (n - i) * (n - j) + _tri(n - i + t))
    return FunctionSpec("TriPair", ((j - i, N - n + i), (n,), (N - j,)),
                        (2, 1, 0), sign=-1 if e % 2 else 1, sqrt=sq,
                        post=-1 if sq and (n * t + _tri(n)) % 2 else 1)


def _d_second_spin_label(n: int, i: int, t: int, starred_col: bool):
    """Half-spin column of the even orthogonal grid under the second
    transposition: every label is the square root of a pairing whose two
    middle slots carry a parity-dependent star pattern."""
    N, h = 2 * n + 2, n + 1
    if t == 0:
        mid = (i % 2 == 0) != starred_col
        stars = (((1, 0),) if mid else ()) + (((2, 0),) if starred_col else ())
        return FunctionSpec("TriPair", ((n - i, n + 2 + i), (h,), (h,)),
                            (0, 1, 2), stars=stars, sqrt=True)
    # measured radicand/outer signs, coherent with the seed gauge
    d = 1 if n % 2 else (1 if t < i else 0)
    r = (n // 2 + (1 if 2 * i >= n else 0) + (t - 1) * i
         + (d if starred_col else 0))
    sign = -1 if r % 2 else 1
    post = -1 if (_tri(n - t) + n) % 2 else 1
    if t < i:
        sx, sy = _d_mid_stars(n, i, t, starred_col)
        stars = (((1, 0),) if sx else ()) + (((1, 1),) if sy else ())
        return FunctionSpec(
            "TriDouble", ((n - i + t, n + 2 + i - t), (h, h), (n - t, n + 2 + t)),
            (0, 1, 2), stars=stars, sign=sign, sqrt=True, post=post)
    # endpoint: pair moves to the last flag, middles by parity regime
    g1 = (n + i) % 2 == 1
    g2 = False
    if starred_col:
        g1, g2 = not g1, not g2
    stars = (((1, 0),) if g1 else ()) + (((2, 0),) if g2 else ())
    return FunctionSpec("TriPair", ((n - i, n + 2 + i), (h,), (h,)),
                        (2, 1, 0), stars=stars, sign=sign, sqrt=True,
                        post=post)


def endpoint_correspondence(family: str, n: int, kind: str):
    """Vertex map under which the final seed is the opposite (arrows
    reversed) of the initial one.

    First transposition: the frozen top row and the y column trade places.
    On the doubled last column the two half-spin families swap in every
    second row.  Second transposition: the mutated strictly-upper region
    stays put while the never-mutated lower region reflects across the
    anti-diagonal; the y column trades places with the bottom row."""
    spin_cols = (n, "n*")
    swap = {n: "n*", "n*": n}
    corr = {}
    if kind == "s3-first":
        for i in range(1, n + 1):
            for j in list(range(1, n)) + list(spin_cols if family == "D"
                                              else [n]):
                jj = swap[j] if (family == "D" and j in spin_cols
                                 and i % 2 == 0) else j
                corr[xv(i, j)] = xv(i, jj)
        for k in list(range(1, n)) + list(spin_cols if family == "D"
                                          else [n]):
            corr[xv(0, k)] = yv(k)
            corr[yv(k)] = xv(0, k)
        return corr
    if kind != "s3-second":
        raise ValueError(f"unknown transposition kind {kind!r}")
    for i in range(1, n):
        for j in list(range(1, n)) + list(spin_cols if family == "D"
                                          else [n]):
            if j in spin_cols and family == "D":
                corr[xv(i, j)] = xv(i, j)
            elif i < j:
                corr[xv(i, j)] = xv(i, j)
            else:
                corr[xv(i, j)] = xv(n - j, n - i)
    for k in list(range(1, n)) + list(spin_cols if family == "D" else [n]):
        corr[yv(k)] = xv(n, k)
        corr[xv(n, k)] = yv(k)
        corr[xv(0, k)] = xv(0, k)
    return corr


def steps_with_labels(family: str, n: int, seq: MutationSequence):
    label = {"s3-first": s3_first_label, "s3-second": s3_second_label}[seq.kind]
    count: dict[str, int] = {}
    out = []
    for v in seq.steps:
        count[v] = count.get(v, 0) + 1
        parts = v.split(":")[1:]
        i = int(parts[0])
        j = parts[1] if parts[1] == "n*" else int(parts[1])
        out.append((v, label(family, n, i, j, count[v])))
    return out
