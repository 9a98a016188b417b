"""Exterior algebra over an N-dimensional column space.

Basis k-vectors are indexed by bitmasks over {0..N-1}; coordinates are any
field scalars (Fraction for exact work, mpmath.mpf for float work). All signs
come from the shuffle sign of concatenating two increasing index sequences.
"""

from __future__ import annotations

from itertools import combinations


def popcount(m: int) -> int:
    return m.bit_count()


def bits(m: int):
    """Indices of set bits, ascending."""
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def shuffle_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation (ascending a, ascending b).

    a and b must be disjoint masks."""
    sign = 1
    m = b
    while m:
        low = m & -m
        # count elements of a above this element of b
        if popcount(a >> low.bit_length()) & 1:
            sign = -sign
        m ^= low
    return sign


def subsets_of(mask: int, k: int):
    """All k-element submasks of mask."""
    idx = bits(mask)
    for comb in combinations(idx, k):
        yield mask_of(comb)


class Wedge:
    """Homogeneous element of Lambda^k of an N-dimensional space."""

    __slots__ = ("n", "k", "c")

    def __init__(self, n: int, k: int, c: dict | None = None):
        self.n = n
        self.k = k
        self.c = {} if c is None else {m: v for m, v in c.items() if v != 0}

    @classmethod
    def basis(cls, n: int, mask: int, coeff=1) -> "Wedge":
        return cls(n, popcount(mask), {mask: coeff})

    @classmethod
    def from_rows(cls, rows, n: int) -> "Wedge":
        """u_1 ^ ... ^ u_k for explicit row vectors of length n."""
        k = len(rows)
        if k == 0:
            return cls(n, 0, {0: 1})
        c = {}
        for cols in combinations(range(n), k):
            v = _det([[rows[i][j] for j in cols] for i in range(k)])
            if v != 0:
                c[mask_of(cols)] = v
        return cls(n, k, c)

    def __eq__(self, other):
        return (isinstance(other, Wedge) and self.n == other.n
                and self.k == other.k and self.c == other.c)

    def __add__(self, other):
        assert self.n == other.n and self.k == other.k
        c = dict(self.c)
        for m, v in other.c.items():
            w = c.get(m, 0) + v
            if w == 0:
                c.pop(m, None)
            else:
                c[m] = w
        return Wedge(self.n, self.k, c)

    def scale(self, s) -> "Wedge":
        return Wedge(self.n, self.k, {m: v * s for m, v in self.c.items()})

    def wedge(self, other: "Wedge") -> "Wedge":
        assert self.n == other.n
        c: dict = {}
        for m1, v1 in self.c.items():
            for m2, v2 in other.c.items():
                if m1 & m2:
                    continue
                s = shuffle_sign(m1, m2)
                key = m1 | m2
                w = c.get(key, 0) + s * v1 * v2
                if w == 0:
                    c.pop(key, None)
                else:
                    c[key] = w
        return Wedge(self.n, self.k + other.k, c)

    def volume_coeff(self):
        """Coefficient of e_1^...^e_N (zero for wrong degree)."""
        full = (1 << self.n) - 1
        return self.c.get(full, 0)

    def __repr__(self):
        return f"Wedge(n={self.n}, k={self.k}, terms={len(self.c)})"


def _det(m):
    """Fraction-free-ish recursive determinant for small matrices."""
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    # expansion along the first column, skipping zeros
    total = 0
    rest = [row[1:] for row in m]
    sign = 1
    for i in range(k):
        a = m[i][0]
        if a != 0:
            total = total + sign * a * _det(rest[:i] + rest[i + 1:])
        sign = -sign
    return total


def det(m):
    return _det([list(r) for r in m])


def functional(front: Wedge | None, back: Wedge | None, n: int, p: int) -> dict:
    """The map e_P -> volume coefficient of front ^ e_P ^ back, as a dict.

    Only masks with nonzero value appear."""
    full = (1 << n) - 1
    if front is None and back is None:
        return {full: 1} if p == n else {}
    if front is None:
        z = back
    elif back is None:
        z = front
    else:
        z = front.wedge(back)
    back_deg = 0 if back is None else back.k
    # front ^ e_P ^ back = (-1)^{p*|back|} (front ^ back) ^ e_P
    flip = -1 if (p * back_deg) & 1 else 1
    out = {}
    for m, v in z.c.items():
        pm = full ^ m
        if popcount(pm) != p:
            continue
        s = shuffle_sign(m, pm)
        out[pm] = flip * s * v
    return out


def star_dual(omega: Wedge, form) -> Wedge:
    """Image of omega under Lambda^k -> Lambda^{N-k} induced by a bilinear
    form Q (given as an N x N matrix) and the volume pairing:

        e_S ^ star(omega) = <e_S, omega> vol,  <e_S, e_T> = det Q[S, T].
    """
    n = omega.n
    full = (1 << n) - 1
    k = omega.k
    out: dict = {}
    for scols in combinations(range(n), n - k):
        u = mask_of(scols)
        smask = full ^ u
        srows = bits(smask)
        total = 0
        for tmask, v in omega.c.items():
            tcols = bits(tmask)
            sub = [[form[s][t] for t in tcols] for s in srows]
            d = _det(sub)
            if d != 0:
                total = total + d * v
        if total != 0:
            out[u] = shuffle_sign(smask, u) * total
    return Wedge(n, n - k, out)
