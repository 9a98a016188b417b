"""Constructors for the pair-degree triangle functions used by the
mutation-sequence label formulas.

The evaluator's raw conventions differ from the web normalization by
measured signs; the constructors bake those in so that every exchange
relation along the sequences holds with plus signs.  Degenerate pair
entries (0 or N) reduce to the single-degree function, again with the
measured sign."""

from __future__ import annotations

from ..invariants.spec import FunctionSpec


def _degen_sign(N: int, a: int, b: int, c: int, d: int) -> int:
    """Sign of pair function (a,b;c;d) with b in {0, N} against (a;c;d)."""
    e = 0
    if N % 2 == 0:
        if b == 0:
            e = a * c + a * d + c * d
        else:
            e = N // 2
    else:
        h = (N - 1) // 2
        if b == 0:
            e = (a + 1) * h
        else:
            e = a * ((c + 1) * (d + 1) + h)
    return -1 if e % 2 else 1


def tri_pair(N: int, a: int, b: int, c: int, d: int,
             slots=(0, 1, 2), sqrt=False) -> FunctionSpec:
    """The function (a,b; c; d) with degrees a+b+c+d = 2N (pair on the
    first slot, symmetric in a and b)."""
    if a + b + c + d != 2 * N:
        raise ValueError("pair function degrees must sum to 2N")
    if a > b:
        a, b = b, a
    if a == 0 or a == N:
        s = _degen_sign(N, b, a, c, d)
        return FunctionSpec("Tri", ((b,), (c,), (d,)), slots, sign=s,
                            sqrt=sqrt)
    if b == 0 or b == N:
        s = _degen_sign(N, a, b, c, d)
        return FunctionSpec("Tri", ((a,), (c,), (d,)), slots, sign=s,
                            sqrt=sqrt)
    sign = -1 if (N % 2 and (a * b) % 2) else 1
    return FunctionSpec("TriPair", ((a, b), (c,), (d,)), slots, sign=sign,
                        sqrt=sqrt)
