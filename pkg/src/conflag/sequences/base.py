"""Sequence container shared by all the mutation-sequence generators."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MutationSequence:
    kind: str      # cactus | fold-subseq | s3-first | s3-second | flip
    family: str
    n: int
    stages: tuple[tuple[str, ...], ...]

    @property
    def steps(self) -> tuple[str, ...]:
        return tuple(v for st in self.stages for v in st)

    @property
    def stage_bounds(self) -> tuple[int, ...]:
        out, acc = [], 0
        for st in self.stages:
            acc += len(st)
            out.append(acc)
        return tuple(out)

    def counts(self) -> dict[str, int]:
        c: dict[str, int] = {}
        for v in self.steps:
            c[v] = c.get(v, 0) + 1
        return c

    def to_json(self):
        return {"kind": self.kind, "family": self.family, "n": self.n,
                "stages": [list(st) for st in self.stages]}
