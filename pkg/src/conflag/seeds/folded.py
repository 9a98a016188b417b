"""The half-turn endpoint seed on the even triangle lattice and its fold
onto the symplectic grid.

After the half-turn prefix the lattice swap (i,j,k) -> (i,k,j) (with the
boundary identified pairwise along each side) is an automorphism of the
quiver away from frozen-frozen arrows; those carry gluing data only and
are dropped before quotienting.  The quotient reproduces the C-family
grid seed exactly, multipliers included."""

from __future__ import annotations

from ..core.seed import Seed, fold, mutate_seed_seq
from ..sequences.cactus import fold_subsequence, label_after
from .conf3 import LabelledSeed
from .quivers import xv, yv
from .sl import sl_conf3_seed, triangle_points, tv


def half_turn_counts(N: int) -> dict[str, int]:
    return fold_subsequence(N).counts()


def folded_sl_seed(n: int) -> LabelledSeed:
    """The endpoint of the half-turn prefix on the N = 2n lattice, with
    the pair-degree labels it carries there."""
    N = 2 * n
    base = sl_conf3_seed(N)
    seq = fold_subsequence(N)
    seed = mutate_seed_seq(base.seed, seq.steps)
    counts = seq.counts()
    labels = {tv(i, j, k): label_after(N, (i, j, k), counts.get(tv(i, j, k), 0))
              for (i, j, k) in triangle_points(N)}
    return LabelledSeed("A", N, 3, seed, labels)


def fold_involution(n: int) -> dict[str, str]:
    """(i,j,k) -> (i,k,j) inside; sides are identified end-to-end."""
    N = 2 * n
    inv = {}
    for (i, j, k) in triangle_points(N):
        if 0 not in (i, j, k):
            inv[tv(i, j, k)] = tv(i, k, j)
        elif k == 0:
            inv[tv(i, j, 0)] = tv(j, i, 0)
        elif j == 0:
            inv[tv(i, 0, k)] = tv(k, 0, i)
        else:
            inv[tv(0, j, k)] = tv(0, k, j)
    return inv


def _drop_frozen_pairs(seed: Seed) -> Seed:
    b = {k: v for k, v in seed.b.items()
         if not (k[0] in seed.frozen and k[1] in seed.frozen)}
    return Seed(seed.vertices, seed.frozen, b, seed.d)


def fold_to_c(n: int) -> Seed:
    """Quotient the half-turn endpoint by the lattice swap."""
    seed = _drop_frozen_pairs(folded_sl_seed(n).seed)
    return fold(seed, fold_involution(n))


def c_grid_correspondence(n: int, folded: Seed) -> dict[str, str]:
    """Orbit representative -> vertex of the C-family grid seed."""
    corr = {}
    for v in folded.vertices:
        i, j, k = (int(a) for a in v.split(":")[1:])
        if i == 0:
            corr[v] = xv(n, min(j, k))
        elif j == 0:
            corr[v] = xv(0, min(i, k))
        elif k == 0:
            corr[v] = yv(min(i, j))
        else:
            if k > j:
                j, k = k, j
            corr[v] = xv(n - i, k) if j >= n else xv(k, n + k - j)
    return corr
