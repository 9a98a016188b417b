"""Principal-flag construction: duality completion, random configurations,
and the positive parameterization through the lower Borel."""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from ..invariants.wedge import Wedge, bits, mask_of, shuffle_sign, star_dual, subsets_of
from .groups import GroupModel, GroupError
from .linalg import det, identity, mat_mul, mat_vec, solve_linear


class DegenerateFlagError(ValueError):
    pass


def _form_value(q, u, v):
    return sum(ui * sum(qij * vj for qij, vj in zip(row, v))
               for ui, row in zip(u, q))


def complete_flag(group: GroupModel, rows):
    """Extend isotropic rows to a full flag whose wedge powers satisfy
    V_k = +/- star(V_{N-k}) under the form-induced duality (det-1 for SL),
    with sign exponent k(k+1)/2 for even N and (N-k)(N-k-1)/2 for odd N.
    The per-degree sign normalizes the high wedge powers so that the
    initial cluster labels match the Borel minors exactly."""
    N = group.N
    rows = [list(r) for r in rows]
    if group.family == "A":
        if len(rows) != N:
            raise DegenerateFlagError("SL flags need all rows")
        d = det(rows)
        if d == 0:
            raise DegenerateFlagError("dependent rows")
        rows[-1] = [x / d for x in rows[-1]]
        return rows
    h = group.iso_rank()
    if len(rows) != h:
        raise DegenerateFlagError(f"need {h} isotropic rows")
    q = group.form
    for a in range(h):
        for b in range(a, h):
            if _form_value(q, rows[a], rows[b]) != 0 and not (
                    group.family == "C" and a == b):
                raise DegenerateFlagError("rows are not pairwise isotropic")
    cur = Wedge.from_rows(rows, N)
    if not cur.c:
        raise DegenerateFlagError("dependent rows")
    powers = {h: cur}
    for k in range(h - 1, -1, -1):
        powers[k] = Wedge.from_rows(rows[:k], N)
    for k in range(h + 1, N + 1):
        target = star_dual(powers[N - k], q)
        s = (k * (k + 1) // 2) if N % 2 == 0 else ((N - k) * (N - k - 1) // 2)
        if s % 2:
            target = target.scale(-1)
        prev = powers[k - 1]
        # solve prev ^ v = target for the next row v
        masks = list(subsets_of((1 << N) - 1, k))
        amat = []
        bvec = []
        for m in masks:
            row = [0] * N
            for i in bits(m):
                pm = m ^ (1 << i)
                c = prev.c.get(pm)
                if c is not None:
                    row[i] = shuffle_sign(pm, 1 << i) * c
            amat.append(row)
            bvec.append(target.c.get(m, 0))
        v = solve_linear(amat, bvec)
        if v is None:
            raise DegenerateFlagError("duality completion is inconsistent")
        rows.append(v)
        powers[k] = prev.wedge(Wedge.from_rows([v], N))
        if powers[k].c != target.c:
            raise DegenerateFlagError("duality completion failed")
    return rows


def apply_group(g, flag_rows):
    return [mat_vec(g, v) for v in flag_rows]


def _rand_nonzero(rng: random.Random, lo=-3, hi=3):
    while True:
        v = rng.randint(lo, hi)
        if v:
            return Fraction(v)


def random_group_element(group: GroupModel, rng: random.Random):
    """A reasonably generic exact-rational group element."""
    g = identity(group.N)
    # enough rounds to reach a generic double-coset position (word length n^2)
    for _ in range(max(2, group.n)):
        for lab in group.simple:
            g = mat_mul(g, group.unip_lower(lab, _rand_nonzero(rng)))
        for lab in group.simple:
            g = mat_mul(g, group.unip_upper(lab, _rand_nonzero(rng)))
    # exact torus twist: use squared parameters so half-exponents stay rational
    for lab in group.simple:
        t = Fraction(rng.randint(1, 3))
        g = mat_mul(g, group.cochar(lab, t * t, sqrt_t=t))
    return g


def random_generic_config(group: GroupModel, m: int, rng_seed: int):
    """m exact-rational flags in general position (deterministic)."""
    rng = random.Random(rng_seed)
    if group.family == "A":
        N = group.N
        flags = []
        for _ in range(m):
            while True:
                rows = [[Fraction(rng.randint(-9, 9)) for _ in range(N)]
                        for _ in range(N)]
                if det(rows) != 0:
                    break
            flags.append(complete_flag(group, rows))
        return flags
    base = complete_flag(group, group.w0_u_minus_rows())
    return [apply_group(random_group_element(group, rng), base)
            for _ in range(m)]


def _exact_sqrt_or_none(v: Fraction):
    v = Fraction(v)
    if v < 0:
        return None
    a, b = isqrt(v.numerator), isqrt(v.denominator)
    if a * a == v.numerator and b * b == v.denominator:
        return Fraction(a, b)
    return None


def _exp_gen(group: GroupModel, base: str, label: str, sqrt2):
    """exp of a true pinned generator (needs sqrt2 for B's short root)."""
    from .linalg import mat_add, mat_scale
    x = (group._F if base == "F" else group._E)[label]
    if label in group._sqrt2_scaled:
        # exp(sqrt2 x) = I + sqrt2 x + x^2   (since (sqrt2 x)^2 = 2 x^2)
        x2 = mat_mul(x, x)
        return mat_add(mat_add(identity(group.N), mat_scale(x, sqrt2)), x2)
    return group.unip_lower(label, 1) if base == "F" else group.unip_upper(label, 1)


def _order_for_borel(group: GroupModel):
    """Inner factor order n, (n*,) n-1, ..., 1."""
    labels = [str(j) for j in range(group.n, 0, -1)]
    if group.family == "D":
        labels.insert(1, "n*")
    return labels


def borel_from_x(group: GroupModel, x_values, sqrt2=None, sqrts=None):
    """The lower-Borel element encoding positive X-coordinates at the inner
    face vertices, as a product of exp(F_j) and torus cocharacters.

    x_values: map vertex id 'x:i:j' (0<i<n, j in 1..n or n*) -> positive
    scalar. sqrts optionally maps vertex id -> exact square root of the
    value (required for exact half-exponent cocharacters); otherwise float
    square roots are taken. sqrt2 is needed for family B.
    """
    import mpmath
    n = group.n
    b = identity(group.N)
    if group.family == "B" and sqrt2 is None:
        sqrt2 = mpmath.sqrt(2)
    for i in range(n - 1, 0, -1):
        for lab in _order_for_borel(group):
            j = lab if lab == "n*" else int(lab)
            vid = f"x:{i}:{j}"
            if vid not in x_values:
                raise GroupError(f"missing X value for {vid}")
            x = x_values[vid]
            t = 1 / x
            if sqrts and vid in sqrts:
                st = 1 / sqrts[vid]
            else:
                st = _exact_sqrt_or_none(t) if isinstance(t, Fraction) else None
                if st is None:
                    st = mpmath.sqrt(float(t)) if not isinstance(t, Fraction) \
                        else mpmath.sqrt(mpmath.mpf(t.numerator) / t.denominator)
            b = mat_mul(b, _exp_gen(group, "F", lab, sqrt2))
            b = mat_mul(b, group.cochar(lab, t, sqrt_t=st))
    for lab in _order_for_borel(group):
        b = mat_mul(b, _exp_gen(group, "F", lab, sqrt2))
    return b


def unipotent_part(b):
    """rho(b) = diag(b)^{-1} b for lower-triangular b."""
    n = len(b)
    return [[b[i][j] / b[i][i] for j in range(n)] for i in range(n)]


def random_positive_config(group: GroupModel, m: int, rng_seed: int,
                           float_mode: bool | None = None):
    """(U^-, h w0U^-, b_1 w0U^-, ...) with totally positive parameters."""
    import mpmath
    rng = random.Random(rng_seed)
    if float_mode is None:
        float_mode = group.family == "B"
    sqrt2 = mpmath.sqrt(2) if group.family == "B" else None

    def pos(scale=1):
        v = Fraction(rng.randint(1, 4), rng.randint(1, 3)) * scale
        return mpmath.mpf(v.numerator) / v.denominator if float_mode else v

    n = group.n
    base = complete_flag(group, group.w0_u_minus_rows())
    if float_mode:
        base = [[mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction)
                 else x for x in row] for row in base]
    uminus = complete_flag(group, group.u_minus_rows())
    flags = [uminus]
    # torus factor: use squared parameters so half-exponents stay exact
    h = identity(group.N)
    for lab in group.simple:
        t = pos()
        h = mat_mul(h, group.cochar(lab, t * t, sqrt_t=t))
    flags.append(apply_group(h, base))
    cum = h
    for _ in range(m - 2):
        b = identity(group.N)
        for _rep in range(n):
            for lab in _order_for_borel(group):
                b = mat_mul(b, _exp_gen(group, "F", lab, sqrt2))
                t = pos()
                b = mat_mul(b, group.cochar(lab, t * t, sqrt_t=t))
        cum = mat_mul(cum, b)
        flags.append(apply_group(cum, base))
    return flags
