"""Quantum torus attached to a seed, and quantum X-mutation.

Elements are integer combinations of Weyl-ordered monomials W(alpha) times
powers of q; the generators X_i = W(e_i) satisfy

    q^{-eps_ij} X_i X_j = q^{-eps_ji} X_j X_i,   eps_ij = b_ij d_j.

Multiplication uses W(alpha) W(beta) = q^{Lambda(alpha,beta)} W(alpha+beta)
with Lambda(alpha, beta) = sum_ij eps_ij alpha_i beta_j, which reproduces the
generator relations. q-powers are exact rationals (integer multiples of 1/D
for D = lcm of the d-denominators).

Mutation images are kept in factored form: a monomial times linear factors
(1 + q^a X_k^{\pm 1})^{\pm 1} along the mutation axis k; factors on one axis
commute, so cancellation is multiset cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .seed import Seed, NotMutableError


class QuantumTorus:
    """Context: fixes the vertex order and the Poisson form of a seed."""

    def __init__(self, seed: Seed):
        self.seed = seed
        self.order = tuple(seed.vertices)
        self.index = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        self.eps = [[seed.epsilon_hat(a, b) for b in self.order] for a in self.order]

    def lam(self, alpha, beta) -> Fraction:
        s = Fraction(0)
        for i, ai in enumerate(alpha):
            if not ai:
                continue
            row = self.eps[i]
            for j, bj in enumerate(beta):
                if bj:
                    s += row[j] * ai * bj
        return s

    def zero(self) -> "QElement":
        return QElement(self, {})

    def one(self) -> "QElement":
        return self.monomial((0,) * len(self.order))

    def monomial(self, alpha, qpow=Fraction(0), coeff=1) -> "QElement":
        if coeff == 0:
            return self.zero()
        return QElement(self, {(tuple(alpha), Fraction(qpow)): coeff})

    def generator(self, v: str) -> "QElement":
        alpha = [0] * len(self.order)
        alpha[self.index[v]] = 1
        return self.monomial(alpha)

    def axis(self, v: str):
        alpha = [0] * len(self.order)
        alpha[self.index[v]] = 1
        return tuple(alpha)


class QElement:
    """Integer combination of q^s W(alpha)."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: QuantumTorus, terms: Mapping):
        self.torus = torus
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.torus.one() * other
        return isinstance(other, QElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.torus.one() * other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return QElement(self.torus, out)

    def __neg__(self):
        return QElement(self.torus, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QElement(self.torus, {k: v * other for k, v in self.terms.items()})
        t = self.torus
        out: dict = {}
        for (a1, s1), c1 in self.terms.items():
            for (a2, s2), c2 in other.terms.items():
                alpha = tuple(x + y for x, y in zip(a1, a2))
                s = s1 + s2 + t.lam(a1, a2)
                key = (alpha, s)
                out[key] = out.get(key, 0) + c1 * c2
        return QElement(self.torus, out)

    __rmul__ = __mul__

    def specialize_q1(self) -> dict:
        """Collapse q -> 1; returns {alpha: int coefficient}."""
        out: dict = {}
        for (alpha, _s), c in self.terms.items():
            out[alpha] = out.get(alpha, 0) + c
        return {k: v for k, v in out.items() if v != 0}

    def eval_numeric(self, x_by_vertex: Mapping[str, object], q=1):
        t = self.torus
        total = 0
        for (alpha, s), c in self.terms.items():
            val = c * q ** s if s else c
            for i, e in enumerate(alpha):
                if e:
                    val = val * x_by_vertex[t.order[i]] ** e
            total = total + val
        return total

    def __repr__(self):
        return f"QElement({self.terms!r})"


@dataclass(frozen=True)
class QFactored:
    """q^s W(alpha) * prod_t (1 + q^{a_t} W(gamma_t))^{e_t}.

    All gamma_t must lie on one commuting axis (multiples of a single e_k),
    so the factor list is an unordered multiset.
    """

    torus: QuantumTorus
    qpow: Fraction
    alpha: tuple
    factors: tuple  # of (gamma: tuple, a: Fraction, e: +1|-1)

    def times_monomial_left(self, beta, qpow=Fraction(0)) -> "QFactored":
        """Multiply on the left by q^qpow W(beta)."""
        t = self.torus
        return QFactored(t, self.qpow + qpow + t.lam(beta, self.alpha),
                         tuple(x + y for x, y in zip(beta, self.alpha)), self.factors)

    def times_factored_right(self, other: "QFactored") -> "QFactored":
        """self * other, moving other's monomial left through self's factors."""
        t = self.torus
        beta = other.alpha
        moved = []
        for (gamma, a, e) in self.factors:
            moved.append((gamma, a + 2 * t.lam(gamma, beta), e))
        qpow = self.qpow + other.qpow + t.lam(self.alpha, beta)
        alpha = tuple(x + y for x, y in zip(self.alpha, beta))
        return QFactored(t, qpow, alpha, tuple(moved) + other.factors).cancel()

    def cancel(self) -> "QFactored":
        pos: dict = {}
        for (gamma, a, e) in self.factors:
            key = (gamma, a)
            pos[key] = pos.get(key, 0) + e
        out = []
        for (gamma, a), e in sorted(pos.items()):
            out.extend([(gamma, a, 1 if e > 0 else -1)] * abs(e))
        return QFactored(self.torus, self.qpow, self.alpha, tuple(out))

    def is_monomial(self):
        return not self.cancel().factors

    def expand_numerator(self):
        """Expand into (numerator QElement, denominator QElement).

        Valid because all factors commute pairwise (single axis)."""
        t = self.torus
        num = t.monomial(self.alpha, self.qpow)
        den = t.one()
        for (gamma, a, e) in self.factors:
            f = t.one() + t.monomial(gamma, a)
            if e > 0:
                num = num * f
            else:
                den = den * f
        return num, den

    def specialize_q1_numeric(self, x_by_vertex, q=1):
        num, den = self.expand_numerator()
        return num.eval_numeric(x_by_vertex, q) / den.eval_numeric(x_by_vertex, q)


def qfactored_equal(a: QFactored, b: QFactored) -> bool:
    """Exact equality of two factored elements (denominators on the right)."""
    na, da = a.expand_numerator()
    nb, db = b.expand_numerator()
    return na * db == nb * da


def mutate_x_quantum(q_state: Mapping[str, QFactored] | None, seed: Seed, k: str
                     ) -> dict[str, QFactored]:
    """Images of the X-generators under quantum mutation at k.

    If q_state is None, generators of `seed`'s torus are used as the input
    state. Otherwise each current image (a QFactored on the axis of k, or a
    plain monomial) is composed with the mutation formulas; this supports
    immediately-repeated mutation at the same k (the involution check).
    """
    if k in seed.frozen or k not in seed.d:
        raise NotMutableError(f"vertex {k!r} is not mutable")
    torus = QuantumTorus(seed)
    if q_state is None:
        q_state = {v: QFactored(torus, Fraction(0), torus.axis(v), ())
                   for v in seed.mutable()}
        # reuse torus of the provided state when present
    else:
        torus = next(iter(q_state.values())).torus
    dk = seed.d[k]
    qk = Fraction(1, 1) / dk  # q_k = q^{1/d_k}: exponent unit
    ek = torus.axis(k)
    mek = tuple(-x for x in ek)
    images: dict[str, QFactored] = {}
    for i in seed.mutable():
        cur = q_state[i]
        if i == k:
            # X_k -> X_k^{-1}: substitute by inverting the monomial part
            if cur.cancel().factors:
                raise ValueError("cannot invert a non-monomial image")
            images[i] = QFactored(torus, -cur.qpow,
                                  tuple(-x for x in cur.alpha), ())
            continue
        bik = seed.entry(i, k)
        m = abs(int(bik))
        if m == 0:
            images[i] = cur
            continue
        # substitute X_k -> current image of X_k (monomial) in the factors
        xk_img = q_state[k]
        if xk_img.cancel().factors:
            raise ValueError("X_k image must be a monomial")
        gpos = xk_img.alpha
        gneg = tuple(-x for x in gpos)
        gq = xk_img.qpow
        factors = []
        for s in range(1, m + 1):
            a = Fraction(2 * s - 1) * qk
            if bik > 0:
                factors.append((gneg, a - gq, -1))
            else:
                factors.append((gpos, a + gq, +1))
        tail = QFactored(torus, Fraction(0), (0,) * len(torus.order),
                         tuple(factors))
        images[i] = cur.times_factored_right(tail)
    return images
