"""Initial seeds (quiver + function labels) for triples of principal flags.

Slots are flag indices (0, 1, 2).  Labels follow the grid layout: the top
row pairs flags 0 and 2, the bottom row flags 1 and 2, and the y-column
flags 0 and 1.  The even orthogonal family doubles the last column; its
starred middle slots pick the opposite-family middle wedge, with star
placement chosen so every label is generically nonzero (the two half-spin
pairings are mutually exclusive)."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core.seed import Seed
from ..invariants.spec import FunctionSpec
from .quivers import conf3_quiver, xv, yv


@dataclass(frozen=True)
class LabelledSeed:
    family: str
    n: int
    m: int
    seed: Seed
    labels: dict[str, FunctionSpec] = field(compare=False)

    def to_json(self):
        return {
            "family": self.family, "n": self.n, "m": self.m,
            "vertices": list(self.seed.vertices),
            "frozen": sorted(self.seed.frozen),
            "b": [[i, j, str(v)] for (i, j), v in sorted(self.seed.b.items())],
            "d": {v: str(self.seed.d[v]) for v in self.seed.vertices},
            "labels": {v: s.to_json() for v, s in self.labels.items()},
        }


def _c_gauge(n: int, i: int, j: int) -> int:
    """Sign aligning the grid labels with the exchange relations (measured;
    the relations only close coherently in this gauge)."""
    return -1 if ((n - i) * (n - j) + (n - i) * (n - i + 1) // 2) % 2 else 1


def _labels_c(n: int):
    N = 2 * n
    lab = {}
    for k in range(1, n + 1):
        lab[yv(k)] = FunctionSpec(
            "Edge", ((k,), (N - k,)), (0, 1),
            sign=-1 if (k + (n - k) * (n - k + 1) // 2) % 2 else 1)
    for j in range(1, n + 1):
        lab[xv(0, j)] = FunctionSpec("Tri", ((N - j,), (0,), (j,)), (0, 1, 2),
                                     sign=_c_gauge(n, 0, j))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sg = _c_gauge(n, i, j)
            if i >= j:
                lab[xv(i, j)] = FunctionSpec(
                    "Tri", ((n - i,), (n + i - j,), (j,)), (0, 1, 2), sign=sg)
            else:
                lab[xv(i, j)] = FunctionSpec(
                    "TriPair", ((n - i, N + i - j), (n,), (j,)), (0, 1, 2),
                    sign=sg)
    return lab


def _b_gauge(n: int, i: int, j: int) -> int:
    """Exchange-coherence gauge for the odd orthogonal grid (measured);
    spinor-column (square-root) labels are exempt -- they only enter the
    relations squared and their radicand sign is forced by positivity."""
    e = i + (n - i) * (n - j) + (n - i) * (n - i + 1) // 2
    return -1 if e % 2 else 1


def _labels_b(n: int):
    N = 2 * n + 1
    lab = {}
    for k in range(1, n + 1):
        lab[yv(k)] = FunctionSpec(
            "Edge", ((k,), (N - k,)), (0, 1), sqrt=(k == n),
            sign=-1 if k < n and ((n - k) * (n - k + 1) // 2) % 2 else 1)
    for j in range(1, n + 1):
        lab[xv(0, j)] = FunctionSpec("Tri", ((N - j,), (0,), (j,)), (0, 1, 2),
                                     sqrt=(j == n),
                                     sign=1 if j == n else _b_gauge(n, 0, j))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sq = j == n
            # radicand sign on the spinor column (measured: positive on
            # totally positive configurations)
            if sq:
                sg = -1 if (i * (i + 1) // 2 + n * i) % 2 else 1
            else:
                sg = _b_gauge(n, i, j)
            if i >= j:
                lab[xv(i, j)] = FunctionSpec(
                    "Tri", ((n - i,), (n + 1 + i - j,), (j,)), (0, 1, 2),
                    sqrt=sq, sign=sg)
            else:
                lab[xv(i, j)] = FunctionSpec(
                    "TriPair", ((n - i, N + i - j), (n + 1,), (j,)), (0, 1, 2),
                    sqrt=sq, sign=sg)
    return lab


def _d_spin_sign(n: int, i: int, star_col: bool) -> int:
    """Radicand sign of the half-spin column labels (measured: positive on
    totally positive configurations; validated through n = 7).  For each
    row exactly one of the two columns needs a flip, except the frozen top
    row of the even-rank grids where neither does."""
    if i == 0:
        return -1 if (n % 2 and star_col) else 1
    t = lambda a: a * (a + 1) // 2
    g = ((n - 2) // 2 + (i - 1) * t(n) + t(i - 1)) % 2
    return -1 if g == (1 if star_col else 0) else 1


def _d_gauge(n: int, i: int) -> int:
    """Exchange-coherence gauge for the even orthogonal grid (measured;
    row-dependent only, and the half-spin columns need none)."""
    return -1 if ((n - i) * (n - i + 1) // 2) % 2 else 1


def _labels_d(n: int):
    N = 2 * n + 2
    h = n + 1
    lab = {}
    for k in range(1, n):
        ey = (1 + (n - k) * (n - k + 1) // 2 + n * k
              + n * (n + 1) // 2 + n // 2)
        lab[yv(k)] = FunctionSpec("Edge", ((N - k,), (k,)), (0, 1),
                                  sign=-1 if ey % 2 else 1)
    for j in range(1, n):
        lab[xv(0, j)] = FunctionSpec("Tri", ((N - j,), (0,), (j,)), (0, 1, 2),
                                     sign=_d_gauge(n, 0))
    for i in range(1, n + 1):
        for j in range(1, n):
            if i >= j:
                lab[xv(i, j)] = FunctionSpec(
                    "Tri", ((n - i,), (n + 2 + i - j,), (j,)), (0, 1, 2),
                    sign=_d_gauge(n, i))
            else:
                lab[xv(i, j)] = FunctionSpec(
                    "TriPair", ((n - i, N + i - j), (n + 2,), (j,)), (0, 1, 2),
                    sign=_d_gauge(n, i))
    # half-spin column: the star pattern keeps every pairing in the
    # nonvanishing family (fitted against the Borel minors)
    for star_col in (False, True):
        j = "n*" if star_col else n
        dstar = ((2, 0),) if star_col else ()
        lab[xv(0, j)] = FunctionSpec(
            "Tri", ((h,), (0,), (h,)), (0, 1, 2),
            stars=(((0, 0),) if star_col else ()) + dstar, sqrt=True,
            sign=_d_spin_sign(n, 0, star_col))
        lab[xv(n, j)] = FunctionSpec(
            "Tri", ((0,), (h,), (h,)), (0, 1, 2),
            stars=(((1, 0),) if (n % 2 == 0) != star_col else ()) + dstar,
            sqrt=True, sign=_d_spin_sign(n, n, star_col))
        for i in range(1, n):
            cstar = (i % 2 == 0) != star_col
            lab[xv(i, j)] = FunctionSpec(
                "TriPair", ((n - i, n + 2 + i), (h,), (h,)), (0, 1, 2),
                stars=(((1, 0),) if cstar else ()) + dstar, sqrt=True,
                sign=_d_spin_sign(n, i, star_col))
        # only the same-family spinor pairings survive between these flags
        ystars = ((0, 0), (1, 0)) if star_col else ()
        lab[yv(j)] = FunctionSpec("Edge", ((h,), (h,)), (0, 1),
                                  stars=ystars, sqrt=True,
                                  sign=-1 if (n % 2 == 0 or star_col) else 1,
                                  post=-1 if (n // 2) % 2 else 1)
    return lab


_LABELS = {"B": _labels_b, "C": _labels_c, "D": _labels_d}


def conf3_seed(family: str, n: int) -> LabelledSeed:
    if family not in _LABELS:
        raise ValueError(f"no triangle seed for family {family!r}")
    return LabelledSeed(family, n, 3, conf3_quiver(family, n),
                        _LABELS[family](n))
