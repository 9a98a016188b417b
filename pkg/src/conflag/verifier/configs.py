"""Deterministic concrete flag configurations for the certification runs."""

from __future__ import annotations

from ..flags.config import random_generic_config, random_positive_config
from ..flags.groups import GroupModel
from ..invariants.evaluate import Config


def group_model(family: str, n: int) -> GroupModel:
    """family + rank, with family A taking the matrix size N directly."""
    return GroupModel(family, n - 1 if family == "A" else n)


def generic_configs(family: str, n: int, m: int, count: int,
                    rng_seed: int = 11) -> list[Config]:
    g = group_model(family, n)
    return [Config(random_generic_config(g, m, rng_seed + i), g.N, g.form)
            for i in range(count)]


def positive_configs(family: str, n: int, m: int, count: int,
                     rng_seed: int = 11, float_mode=None) -> list[Config]:
    g = group_model(family, n)
    return [Config(random_positive_config(g, m, rng_seed + i,
                                          float_mode=float_mode),
                   g.N, g.form)
            for i in range(count)]
