"""Cluster states: A- and X-values attached to a seed, and their mutation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .seed import NotMutableError, Seed, SeedError, mutate_seed


class DegenerateStateError(ValueError):
    pass


class PoleError(DegenerateStateError):
    pass


@dataclass(frozen=True)
class ClusterState:
    seed: Seed
    a_values: Mapping[str, object] | None = None
    x_values: Mapping[str, object] | None = None

    def __post_init__(self):
        if self.a_values is not None:
            missing = set(self.seed.vertices) - set(self.a_values)
            if missing:
                raise SeedError(f"a_values missing vertices {sorted(missing)}")
            if any(v == 0 for v in self.a_values.values()):
                raise DegenerateStateError("zero A-value")
        if self.x_values is not None:
            missing = set(self.seed.mutable()) - set(self.x_values)
            if missing:
                raise SeedError(f"x_values missing vertices {sorted(missing)}")
            if any(v == 0 for v in self.x_values.values()):
                raise DegenerateStateError("zero X-value")


def _ipow(x, e: Fraction):
    if e.denominator != 1:
        raise SeedError(f"non-integer exponent {e}")
    return x ** int(e)


def exchange_monomials(seed: Seed, a_values: Mapping[str, object], k: str):
    """The two monomials whose sum is A_k * A'_k."""
    pos = 1
    neg = 1
    for j in seed.vertices:
        bkj = seed.entry(k, j)
        if bkj > 0:
            pos = pos * _ipow(a_values[j], bkj)
        elif bkj < 0:
            neg = neg * _ipow(a_values[j], -bkj)
    return pos, neg


def mutate_a(state: ClusterState, k: str) -> ClusterState:
    seed = state.seed
    if k in seed.frozen or k not in seed.d:
        raise NotMutableError(f"vertex {k!r} is not mutable")
    if state.a_values is None:
        raise SeedError("state carries no A-values")
    ak = state.a_values[k]
    if ak == 0:
        raise DegenerateStateError("A_k = 0")
    pos, neg = exchange_monomials(seed, state.a_values, k)
    new_a = dict(state.a_values)
    new_a[k] = (pos + neg) / ak
    new_x = None
    if state.x_values is not None:
        new_x = _mutate_x_values(seed, state.x_values, k)
    return ClusterState(mutate_seed(seed, k), new_a, new_x)


def _mutate_x_values(seed: Seed, x_values: Mapping[str, object], k: str):
    xk = x_values[k]
    if 1 + xk == 0:
        raise PoleError("X_k = -1")
    new_x = {}
    for i in seed.mutable():
        if i == k:
            new_x[i] = 1 / xk
            continue
        bik = seed.entry(i, k)
        if bik.denominator != 1:
            raise SeedError("non-integer exponent in X-mutation")
        e = int(bik)
        val = x_values[i]
        if e > 0:
            val = val * xk ** e / (1 + xk) ** e
        elif e < 0:
            val = val * (1 + xk) ** (-e)
        new_x[i] = val
    return new_x


def mutate_x(state: ClusterState, k: str) -> ClusterState:
    seed = state.seed
    if k in seed.frozen or k not in seed.d:
        raise NotMutableError(f"vertex {k!r} is not mutable")
    if state.x_values is None:
        raise SeedError("state carries no X-values")
    new_x = _mutate_x_values(seed, state.x_values, k)
    new_a = None
    if state.a_values is not None:
        ak = state.a_values[k]
        pos, neg = exchange_monomials(seed, state.a_values, k)
        new_a = dict(state.a_values)
        new_a[k] = (pos + neg) / ak
    return ClusterState(mutate_seed(seed, k), new_a, new_x)


def p_map(seed: Seed, a_values: Mapping[str, object]) -> dict[str, object]:
    """X_i = prod_j A_j^{b_ij} on non-frozen vertices."""
    out = {}
    for i in seed.mutable():
        x = 1
        for j in seed.vertices:
            bij = seed.entry(i, j)
            if bij > 0:
                x = x * _ipow(a_values[j], bij)
            elif bij < 0:
                x = x / _ipow(a_values[j], -bij)
        out[i] = x
    return out
