"""Symbolic descriptions of the invariant functions attached to quiver
vertices: a shape name, integer degree arguments grouped by slot, a flag
index per slot, optional star markers (middle-degree dual forms), a global
sign, and a square-root flag."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

SHAPES = ("Edge", "Tri", "TriPair", "TriDouble", "Quad", "QuadMid",
          "QuadDouble")

# number of argument groups per shape
_GROUPS = {"Edge": 2, "Tri": 3, "TriPair": 3, "TriDouble": 3, "Quad": 4,
           "QuadMid": 4, "QuadDouble": 4}
# expected group sizes (None = 1 or 2 allowed)
_SIZES = {
    "Edge": (1, 1),
    "Tri": (1, 1, 1),
    "TriPair": (2, 1, 1),
    "TriDouble": (2, 2, 2),
    "Quad": (1, 1, 1, 1),
    "QuadMid": (1, 1, 1, 2),
    "QuadDouble": (1, 2, 1, 2),
}


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class FunctionSpec:
    shape: str
    args: tuple[tuple[int, ...], ...]
    slots: tuple[int, ...]
    stars: tuple[tuple[int, int], ...] = ()  # (group, position) markers
    sign: int = 1
    sqrt: bool = False
    post: int = 1  # sign applied after the square root

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise SpecError(f"unknown shape {self.shape!r}")
        args = tuple(tuple(int(x) for x in g) for g in self.args)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "slots", tuple(int(s) for s in self.slots))
        object.__setattr__(self, "stars",
                           tuple(sorted((int(g), int(p)) for g, p in self.stars)))
        if len(args) != _GROUPS[self.shape]:
            raise SpecError(f"{self.shape} needs {_GROUPS[self.shape]} groups")
        for g, (got, want) in enumerate(zip(args, _SIZES[self.shape])):
            if len(got) != want:
                raise SpecError(f"{self.shape} group {g} needs {want} degrees")
        if len(self.slots) != len(args):
            raise SpecError("one flag slot per argument group")
        for (g, p) in self.stars:
            if not (0 <= g < len(args) and 0 <= p < len(args[g])):
                raise SpecError(f"star marker ({g},{p}) out of range")
        if self.sign not in (1, -1) or self.post not in (1, -1):
            raise SpecError("sign must be +-1")

    def degree_on_flag(self, flag_index: int) -> int:
        """Total wedge degree this function takes from one flag."""
        return sum(sum(g) for g, s in zip(self.args, self.slots)
                   if s == flag_index)

    def starred(self, group: int, pos: int) -> bool:
        return (group, pos) in self.stars

    def with_sign(self, sign: int) -> "FunctionSpec":
        return replace(self, sign=self.sign * sign)

    def to_json(self) -> dict:
        return {"shape": self.shape,
                "args": [list(g) for g in self.args],
                "slots": list(self.slots),
                "stars": [list(s) for s in self.stars],
                "sign": self.sign,
                "sqrt": self.sqrt,
                "post": self.post}

    @classmethod
    def from_json(cls, data) -> "FunctionSpec":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(shape=data["shape"],
                   args=tuple(tuple(g) for g in data["args"]),
                   slots=tuple(data["slots"]),
                   stars=tuple(tuple(s) for s in data.get("stars", [])),
                   sign=data.get("sign", 1),
                   sqrt=data.get("sqrt", False),
                   post=data.get("post", 1))

    def pretty(self) -> str:
        def grp(g, gi):
            parts = []
            for p, x in enumerate(g):
                parts.append(f"{x}*" if self.starred(gi, p) else str(x))
            return ",".join(parts)
        body = ";".join(grp(g, i) for i, g in enumerate(self.args))
        s = f"({body})@{''.join(map(str, self.slots))}"
        if self.sign < 0:
            s = "-" + s
        if self.sqrt:
            s = "sqrt" + s
        if self.post < 0:
            s = "-" + s
        return s
