"""Evaluation of invariant functions on configurations of principal flags.

Each shape reduces to: build wedge forms from flag prefixes, apply a
coproduct split (complementary-subset expansion with shuffle signs), pair
each factor into Lambda^N via fixed wedge maps, multiply.

Starred slots select the opposite-family middle wedge (swap the last
middle row for the next one), only meaningful at degree N/2, even N.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .spec import FunctionSpec, SpecError
from .wedge import Wedge, functional, shuffle_sign, star_dual, subsets_of


class EvalError(ValueError):
    pass


class BranchError(EvalError):
    pass


class FlagForms:
    """Caches wedge powers u_1^...^u_k of one flag, and star-duals."""

    def __init__(self, rows, n: int, form=None):
        self.rows = rows
        self.n = n
        self.form = form
        self._pow: dict[int, Wedge] = {}
        self._star: dict[int, Wedge] = {}

    def power(self, k: int) -> Wedge:
        if k not in self._pow:
            if not 0 <= k <= self.n:
                raise EvalError(f"wedge degree {k} out of range")
            self._pow[k] = Wedge.from_rows(self.rows[:k], self.n)
        return self._pow[k]

    def star(self, k: int) -> Wedge:
        # the opposite-family middle space v_1^...^v_{k-1}^v_{k+1}; the
        # form-dual of a maximal isotropic is proportional to itself, so
        # the two half-spin slots differ by swapping row k for row k+1
        if k not in self._star:
            if 2 * k != self.n:
                raise EvalError("starred slot only at middle degree")
            if len(self.rows) <= k:
                raise EvalError("starred slot needs a completed flag")
            self._star[k] = Wedge.from_rows(
                self.rows[:k - 1] + [self.rows[k]], self.n)
        return self._star[k]


class Config:
    """A configuration of flags ready for evaluation."""

    def __init__(self, flag_rows: list, n: int, form=None):
        self.n = n
        self.flags = [FlagForms(rows, n, form) for rows in flag_rows]

    def form(self, flag_idx: int, deg: int, starred: bool) -> Wedge:
        f = self.flags[flag_idx]
        if starred:
            if deg * 2 != self.n:
                raise SpecError("stars only at middle degree")
            return f.star(deg)
        return f.power(deg)


def _split2(elem: Wedge, p1: int, f1: dict, f2: dict):
    total = 0
    for m, v in elem.c.items():
        for pm in subsets_of(m, p1):
            a = f1.get(pm)
            if a is None:
                continue
            qm = m ^ pm
            b = f2.get(qm)
            if b is None:
                continue
            total = total + shuffle_sign(pm, qm) * v * a * b
    return total


def _split3(elem: Wedge, p1: int, p2: int, f1: dict, f2: dict, f3: dict):
    total = 0
    for m, v in elem.c.items():
        for pm in subsets_of(m, p1):
            a = f1.get(pm)
            if a is None:
                continue
            rest = m ^ pm
            s1 = shuffle_sign(pm, rest)
            for qm in subsets_of(rest, p2):
                b = f2.get(qm)
                if b is None:
                    continue
                rm = rest ^ qm
                c = f3.get(rm)
                if c is None:
                    continue
                total = total + s1 * shuffle_sign(qm, rm) * v * a * b * c
    return total


def _check(cond, msg):
    if not cond:
        raise SpecError(msg)


def evaluate_raw(spec: FunctionSpec, config: Config):
    """The shape value before sign and square root."""
    n = config.n
    sh = spec.shape
    args, slots = spec.args, spec.slots
    F = lambda g, p=0: config.form(slots[g], args[g][p], spec.starred(g, p))

    if sh == "Edge":
        (k,), (l,) = args
        _check(k + l == n, "Edge degrees must sum to N")
        return F(0).wedge(F(1)).volume_coeff()

    if sh == "Tri":
        (a,), (b,), (c,) = args
        s = a + b + c
        if s == n:
            sg = -1 if (b * c + (n // 2 if n % 2 == 0 else 0)) % 2 else 1
            return sg * F(0).wedge(F(1)).wedge(F(2)).volume_coeff()
        _check(s == 2 * n, "Tri degrees must sum to N or 2N")
        l1 = functional(F(1), None, n, n - b)
        l2 = functional(F(2), None, n, n - c)
        return _split2(F(0), n - b, l1, l2)

    if sh == "TriPair":
        (a, b), (c,), (d,) = args
        _check(a + b + c + d == 2 * n, "TriPair degrees must sum to 2N")
        sa, sb = spec.starred(0, 0), spec.starred(0, 1)
        if not (a + c >= n >= a):
            # (a,b;c;d) = (b,a;c;d); use whichever ordering splits
            a, b, sa, sb = b, a, sb, sa
        _check(a + c >= n >= a, "TriPair split degrees out of range")
        ub = config.form(slots[0], b, sb)
        ua = config.form(slots[0], a, sa)
        wd = F(2)
        l1 = functional(ub, wd, n, a + c - n)
        l2 = functional(ua, None, n, n - a)
        e = a * b + c * d
        if n % 2:
            h = (n - 1) // 2
            e += (h + c) * (h + d)
        sg = -1 if e % 2 else 1
        return sg * _split2(F(1), a + c - n, l1, l2)

    if sh == "TriDouble":
        (a, b), (x, y), (c, d) = args
        _check(a + b + c + d == 2 * n, "TriDouble outer degrees must sum to 2N")
        _check(x + y == n, "TriDouble middle degrees must sum to N")
        mid1 = config.form(slots[1], x, spec.starred(1, 0))
        mid2 = config.form(slots[1], y, spec.starred(1, 1))
        wc, wd = F(2, 0), F(2, 1)
        ua, ub = F(0, 0), F(0, 1)
        inp = mid1.wedge(wc)
        l1 = functional(None, wd, n, n - d)
        l2 = functional(ub, None, n, n - b)
        l3 = functional(ua.wedge(mid2), None, n, x - a)
        _check(x - a >= 0, "TriDouble third split degree negative")
        return _split3(inp, n - d, n - b, l1, l2, l3)

    if sh == "Quad":
        (a,), (b,), (c,), (d,) = args
        _check(a + b + c + d == 2 * n, "Quad degrees must sum to 2N")
        l1 = functional(None, F(1).wedge(F(2)), n, n - b - c)
        l2 = functional(None, F(3), n, n - d)
        return _split2(F(0), n - b - c, l1, l2)

    if sh == "QuadMid":
        (x,), (a,), (b,), (c, d) = args
        ux = F(0)
        xc, xd = F(3, 0), F(3, 1)
        s = a + b + c + d
        if s == 2 * n + (n - x):
            t = a + b + c - 2 * n
            _check(t >= 0, "QuadMid split degree negative")
            l1 = functional(None, xc, n, n - c)
            l2 = functional(ux, xd, n, t)
            l3 = functional(F(1), None, n, n - a)
            return _split3(F(2), n - c, t, l1, l2, l3)
        _check(s == n + (n - x), "QuadMid degree sum mismatch")
        t = a + b + c - n
        _check(t >= 0, "QuadMid split degree negative")
        inp = F(1).wedge(F(2))
        l1 = functional(None, xc, n, n - c)
        l2 = functional(ux, xd, n, t)
        return _split2(inp, n - c, l1, l2)

    if sh == "QuadDouble":
        (x,), (a, b), (y,), (c, d) = args
        ux = F(0)
        # the middle form of the third flag enters through its dual degree
        if spec.starred(2, 0):
            wform = config.form(slots[2], y, True)
        else:
            wform = config.flags[slots[2]].power(n - y)
        xc, xd = F(3, 0), F(3, 1)
        va = config.form(slots[1], a, spec.starred(1, 0))
        vb = config.form(slots[1], b, spec.starred(1, 1))
        inp = va.wedge(wform)
        t = inp.k - (n - c) - (n - b)
        _check(t >= 0, "QuadDouble split degree negative")
        _check(x + t + d == n, "QuadDouble degree sum mismatch")
        l1 = functional(None, xc, n, n - c)
        l2 = functional(ux, xd, n, t)
        l3 = functional(vb, None, n, n - b)
        return _split3(inp, n - c, t, l1, l2, l3)

    raise SpecError(f"unknown shape {sh!r}")


def _exact_sqrt(v: Fraction):
    v = Fraction(v)
    if v < 0:
        raise BranchError("square root of a negative exact value")
    np_, dp = isqrt(v.numerator), isqrt(v.denominator)
    if np_ * np_ != v.numerator or dp * dp != v.denominator:
        raise BranchError("exact value is not a perfect square")
    return Fraction(np_, dp)


def evaluate(spec: FunctionSpec, config: Config):
    v = evaluate_raw(spec, config)
    if spec.sign < 0:
        v = -v
    if spec.sqrt:
        if isinstance(v, (int, Fraction)):
            v = _exact_sqrt(v)
        elif v < 0:
            raise BranchError("square root of a negative value")
        else:
            import mpmath
            v = mpmath.sqrt(v)
    return v if spec.post > 0 else -v
