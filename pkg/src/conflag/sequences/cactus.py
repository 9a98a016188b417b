"""The triangle-lattice rotation sequence and its labels.

Two printed orders are generated.  The full sequence runs in N-2 stages;
stage r sweeps rows i = N-2 down to r, each row left to right.  The
half-turn prefix (even N) instead sweeps by diagonals: stage s covers
j = s down to 1 with i running N-1-j down to s-j+1.  Both orders mutate
vertex (i, j, k) once per stage that reaches it, so the count-indexed
label formula is shared.  Vertex (i, j, k) is mutated i times over the
full run; the half-turn endpoint folds onto the symplectic grid."""

from __future__ import annotations

from ..invariants.spec import FunctionSpec
from ..seeds.sl import triangle_points, tv
from .base import MutationSequence
from .labels import tri_pair


def cactus_stage(N: int, r: int):
    """Stage r of the full sequence: rows N-2 down to r."""
    out = []
    for i in range(N - 2, r - 1, -1):
        for j in range(N - 1 - i, 0, -1):
            out.append((i, j, N - i - j))
    return out


def cactus_sequence(N: int) -> MutationSequence:
    stages = tuple(tuple(tv(*p) for p in cactus_stage(N, r))
                   for r in range(1, N - 1))
    return MutationSequence("cactus", "A", N, stages)


def fold_stage(N: int, s: int):
    """Stage s of the half-turn prefix: diagonals j = s down to 1."""
    out = []
    for j in range(s, 0, -1):
        for i in range(N - 1 - j, s - j, -1):
            out.append((i, j, N - i - j))
    return out


def fold_subsequence(N: int) -> MutationSequence:
    """The half-turn prefix whose endpoint folds to the C-family grid."""
    if N % 2:
        raise ValueError("half-turn prefix needs even N")
    stages = tuple(tuple(tv(*p) for p in fold_stage(N, s))
                   for s in range(1, N // 2))
    return MutationSequence("fold-subseq", "A", N, stages)


def label_after(N: int, p, t: int) -> FunctionSpec:
    """Label of vertex p = (i, j, k) after its t-th mutation."""
    i, j, k = p
    if not 0 <= t <= i:
        raise ValueError(f"vertex {p} is only mutated {i} times")
    if t == 0:
        return FunctionSpec("Tri", ((i,), (j,), (k,)), (0, 1, 2))
    spec = tri_pair(N, i - t, N - t, j + t, k + t)
    if N % 2:
        # measured normalization for odd N (uniform over the vertex's steps)
        h = (N - 1) // 2
        if (i * (j * k + h)) % 2:
            spec = spec.with_sign(-1)
    return spec


def steps_with_labels(N: int, seq: MutationSequence):
    """[(vertex id, expected label after the mutation)] for a sequence."""
    count: dict[str, int] = {}
    out = []
    for v in seq.steps:
        count[v] = count.get(v, 0) + 1
        i, j, k = (int(a) for a in v.split(":")[1:])
        out.append((v, label_after(N, (i, j, k), count[v])))
    return out


def final_labels(N: int):
    """Endpoint of the full sequence: (i,j,k) -> (N-i; N-k; N-j)."""
    return {tv(i, j, k):
            label_after(N, (i, j, k), 0 if 0 in (i, j, k) else i)
            for (i, j, k) in triangle_points(N)}


def endpoint_correspondence(N: int):
    """Interior vertex map under which the endpoint quiver matches the
    start (frozen vertices move; their arrows are not compared)."""
    return {tv(i, j, k): tv(i, k, j) for (i, j, k) in triangle_points(N)
            if 0 not in (i, j, k)}
