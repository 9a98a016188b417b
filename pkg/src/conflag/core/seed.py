"""Seeds and exchange-matrix mutation.

A seed is an index set with a frozen subset, a skew-symmetrizable exchange
matrix over exact rationals, and a positive multiplier d_i per vertex.
Entries between two frozen vertices may be non-integral (they matter only
for gluing); every other entry must be an integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping


class SeedError(ValueError):
    pass


class NotMutableError(SeedError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Seed:
    vertices: tuple[str, ...]
    frozen: frozenset[str]
    b: Mapping[tuple[str, str], Fraction]  # sparse; absent key means 0
    d: Mapping[str, Fraction]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise SeedError("duplicate vertex ids")
        if not self.frozen <= vs:
            raise SeedError("frozen set contains unknown vertices")
        b = {k: _frac(v) for k, v in self.b.items() if v != 0}
        d = {v: _frac(self.d[v]) for v in self.vertices}
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        for v, dv in d.items():
            if dv <= 0:
                raise SeedError(f"d[{v}] must be positive")
        for (i, j), bij in b.items():
            if i not in vs or j not in vs:
                raise SeedError(f"b entry at unknown vertices ({i},{j})")
            if i == j:
                raise SeedError(f"nonzero diagonal b[{i},{i}]")
            if bij * d[j] != -b.get((j, i), Fraction(0)) * d[i]:
                raise SeedError(f"skew-symmetrizability fails at ({i},{j})")
            if bij.denominator != 1 and not (i in self.frozen and j in self.frozen):
                raise SeedError(f"non-integer b[{i},{j}] on non-frozen pair")

    def entry(self, i: str, j: str) -> Fraction:
        return self.b.get((i, j), Fraction(0))

    def is_frozen(self, v: str) -> bool:
        return v in self.frozen

    def mutable(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if v not in self.frozen)

    def neighbors(self, k: str) -> list[str]:
        return [j for j in self.vertices if self.entry(k, j) != 0 or self.entry(j, k) != 0]

    def epsilon_hat(self, i: str, j: str) -> Fraction:
        """Poisson coefficient in {X_i, X_j} = eps_ij X_i X_j."""
        return self.entry(i, j) * self.d[j]


def poisson_coeff(seed: Seed, i: str, j: str) -> Fraction:
    if i in seed.frozen or j in seed.frozen:
        raise SeedError("Poisson coefficients are defined on non-frozen vertices")
    return seed.epsilon_hat(i, j)


def mutate_seed(seed: Seed, k: str) -> Seed:
    if k not in seed.d:
        raise NotMutableError(f"unknown vertex {k!r}")
    if k in seed.frozen:
        raise NotMutableError(f"vertex {k!r} is frozen: not mutable")
    b = seed.b
    nb: dict[tuple[str, str], Fraction] = {}
    touched = set()
    for (i, j), bij in b.items():
        if i == k or j == k:
            nb[(i, j)] = -bij
        else:
            nb[(i, j)] = bij
    # correction terms b_ik * b_kj when both have the same sign through k
    ins = [(i, bik) for (i, kk), bik in b.items() if kk == k]
    outs = [(j, bkj) for (kk, j), bkj in b.items() if kk == k]
    for i, bik in ins:
        for j, bkj in outs:
            if i == j:
                continue
            if bik * bkj > 0:
                delta = (abs(bik) * bkj + bik * abs(bkj)) / 2
                nb[(i, j)] = nb.get((i, j), Fraction(0)) + delta
    return Seed(seed.vertices, seed.frozen, nb, seed.d)


def mutate_seed_seq(seed: Seed, ks: Iterable[str]) -> Seed:
    for k in ks:
        seed = mutate_seed(seed, k)
    return seed


def seeds_equal_under(s1: Seed, s2: Seed, corr: Mapping[str, str],
                      compare_frozen_pairs: bool = True):
    """Compare s1 and s2 through the vertex map corr (s1 vertex -> s2 vertex).

    Returns (ok, discrepancies). Only entries with both endpoints in corr are
    compared; corr must cover all non-frozen vertices of s1.
    """
    issues: list[str] = []
    dom = set(corr)
    for v in s1.mutable():
        if v not in dom:
            issues.append(f"correspondence missing non-frozen vertex {v}")
    img = set(corr.values())
    for v in s2.mutable():
        if v not in img:
            issues.append(f"correspondence misses target non-frozen vertex {v}")
    for v in dom:
        w = corr[v]
        if w not in s2.d:
            issues.append(f"target vertex {w} unknown")
            continue
        if (v in s1.frozen) != (w in s2.frozen):
            issues.append(f"frozen status differs at {v} -> {w}")
        elif s1.d[v] != s2.d[w]:
            issues.append(f"d differs at {v} -> {w}: {s1.d[v]} vs {s2.d[w]}")
    for i in dom:
        for j in dom:
            if i == j or corr[i] not in s2.d or corr[j] not in s2.d:
                continue
            if not compare_frozen_pairs and i in s1.frozen and j in s1.frozen:
                continue
            e1, e2 = s1.entry(i, j), s2.entry(corr[i], corr[j])
            if e1 != e2:
                issues.append(f"b[{i},{j}]={e1} but b[{corr[i]},{corr[j]}]={e2}")
    return (not issues, issues)


def amalgamate(s1: Seed, s2: Seed, pairs: list[tuple[str, str]],
               rename1=lambda v: v, rename2=lambda v: v) -> Seed:
    """Glue two seeds along frozen vertices, summing exchange entries.

    Each pair (v1, v2) is identified to a single vertex (named rename1(v1))
    which becomes non-frozen. rename1/rename2 disambiguate the remaining
    vertex ids of the two seeds.
    """
    glue1 = {a: rename1(a) for a, _ in pairs}
    glue2 = {b: rename1(a) for a, b in pairs}
    if len(glue1) != len(pairs) or len(set(glue2)) != len(pairs):
        raise SeedError("a vertex appears in more than one gluing pair")
    for a, b in pairs:
        if a not in s1.frozen or b not in s2.frozen:
            raise SeedError(f"gluing pair ({a},{b}) must be frozen in both seeds")
        if s1.d[a] != s2.d[b]:
            raise SeedError(f"d mismatch on gluing pair ({a},{b})")

    def name1(v):
        return glue1.get(v, rename1(v))

    def name2(v):
        return glue2.get(v, rename2(v))

    verts: list[str] = [name1(v) for v in s1.vertices]
    verts += [name2(v) for v in s2.vertices if v not in glue2]
    glued = set(glue1.values())
    frozen = {name1(v) for v in s1.frozen if name1(v) not in glued}
    frozen |= {name2(v) for v in s2.frozen if name2(v) not in glued}
    d = {name1(v): s1.d[v] for v in s1.vertices}
    d.update({name2(v): s2.d[v] for v in s2.vertices if v not in glue2})
    nb: dict[tuple[str, str], Fraction] = {}
    for (i, j), bij in s1.b.items():
        key = (name1(i), name1(j))
        nb[key] = nb.get(key, Fraction(0)) + bij
    for (i, j), bij in s2.b.items():
        key = (name2(i), name2(j))
        nb[key] = nb.get(key, Fraction(0)) + bij
    return Seed(tuple(verts), frozenset(frozen), nb, d)


def fold(seed: Seed, involution: Mapping[str, str]) -> Seed:
    """Quotient a seed by an automorphism with no arrows inside an orbit.

    The folded multiplier is proportional to orbit size, normalized so the
    maximum d equals 1. Orbit representatives keep their vertex id.
    """
    perm = dict(involution)
    for v in seed.vertices:
        perm.setdefault(v, v)
    if sorted(perm.values()) != sorted(seed.vertices):
        raise SeedError("involution is not a permutation of the vertices")
    for v, w in perm.items():
        if (v in seed.frozen) != (w in seed.frozen) or seed.d[v] != seed.d[w]:
            raise SeedError("involution does not preserve frozen set / d")
    for (i, j), bij in seed.b.items():
        if seed.entry(perm[i], perm[j]) != bij:
            raise SeedError("involution is not a seed automorphism")
    # orbits, represented by first occurrence in vertex order
    orbit_of: dict[str, str] = {}
    orbits: dict[str, list[str]] = {}
    for v in seed.vertices:
        if v in orbit_of:
            continue
        orb = [v]
        w = perm[v]
        while w != v:
            orb.append(w)
            w = perm[w]
        for u in orb:
            orbit_of[u] = v
        orbits[v] = orb
    for rep, orb in orbits.items():
        for a in orb:
            for bb in orb:
                if seed.entry(a, bb) != 0:
                    raise SeedError(f"arrow inside orbit of {rep}")
    nb: dict[tuple[str, str], Fraction] = {}
    for rep_i, orb_i in orbits.items():
        for rep_j in orbits:
            if rep_i == rep_j:
                continue
            j0 = orbits[rep_j][0]
            s = sum((seed.entry(a, j0) for a in orb_i), Fraction(0))
            if s:
                nb[(rep_i, rep_j)] = s
    scale = max(seed.d[rep] * len(orb) for rep, orb in orbits.items())
    d = {rep: seed.d[rep] * len(orb) / scale for rep, orb in orbits.items()}
    verts = tuple(orbits)
    frozen = frozenset(v for v in verts if v in seed.frozen)
    return Seed(verts, frozen, nb, d)
