"""Matrix models of the classical groups used here, with pinned generators.

Families (rank n):
  A: SL_{n+1}, no bilinear form.
  B: SO_{2n+1} with <e_i, e_{2n+2-i}> = (-1)^{i-1}.
  C: Sp_{2n}  with <e_i, e_{n+i}>    = (-1)^i.
  D: SO_{2n+2} with <e_i, e_{2n+3-i}> = (-1)^{i-1}.

The B-family short-root generators carry a factor sqrt(2); exact work uses
the rescaled one-parameter subgroups (unip_lower/unip_upper), which are
rational for rational parameters in every family.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import elementary, identity, mat_add, mat_mul, mat_scale, zeros


class GroupError(ValueError):
    pass


_SQRT2_SQ = 2  # (sqrt 2)^2, used to keep rescaled B-generators rational


class GroupModel:
    def __init__(self, family: str, n: int):
        if family not in "ABCD":
            raise GroupError(f"unknown family {family!r}")
        if n < 2:
            raise GroupError("rank must be >= 2")
        self.family = family
        self.n = n
        self.N = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n + 2}[family]
        self.form = self._build_form()
        self.simple = self._simple_labels()
        self._E, self._F, self._sqrt2_scaled = self._build_generators()

    # -- structure ---------------------------------------------------------

    def _simple_labels(self):
        if self.family == "A":
            return tuple(str(i) for i in range(1, self.N))
        labels = [str(i) for i in range(1, self.n + 1)]
        if self.family == "D":
            labels.append("n*")
        return tuple(labels)

    def _build_form(self):
        N, n = self.N, self.n
        if self.family == "A":
            return None
        q = zeros(N, N)
        if self.family == "C":
            for i in range(1, n + 1):
                s = (-1) ** i
                q[i - 1][n + i - 1] = s
                q[n + i - 1][i - 1] = -s
        elif self.family == "B":
            for i in range(1, N + 1):
                q[i - 1][N - i] = (-1) ** (i - 1)
        else:  # D: the stated signs are consistent only on the first half;
               # extend symmetrically
            for i in range(1, n + 2):
                s = (-1) ** (i - 1)
                q[i - 1][N - i] = s
                q[N - i][i - 1] = s
        return q

    def _build_generators(self):
        N, n = self.N, self.n
        E: dict = {}
        F: dict = {}
        scaled: set = set()
        el = lambda i, j: elementary(N, i, j)
        if self.family == "A":
            for i in range(1, N):
                E[str(i)] = el(i, i + 1)
                F[str(i)] = el(i + 1, i)
        elif self.family == "C":
            for i in range(1, n):
                E[str(i)] = mat_add(el(i, i + 1), el(n + i + 1, n + i))
                F[str(i)] = mat_add(el(i + 1, i), el(n + i, n + i + 1))
            E[str(n)] = el(n, 2 * n)
            F[str(n)] = el(2 * n, n)
        elif self.family == "B":
            for i in range(1, n):
                E[str(i)] = mat_add(el(i, i + 1), el(2 * n + 1 - i, 2 * n + 2 - i))
                F[str(i)] = mat_add(el(i + 1, i), el(2 * n + 2 - i, 2 * n + 1 - i))
            # true generators are sqrt(2) times these; tracked separately
            E[str(n)] = mat_add(el(n, n + 1), el(n + 1, n + 2))
            F[str(n)] = mat_add(el(n + 1, n), el(n + 2, n + 1))
            scaled = {str(n)}
        else:  # D
            for i in range(1, n):
                E[str(i)] = mat_add(el(i, i + 1), el(2 * n + 2 - i, 2 * n + 3 - i))
                F[str(i)] = mat_add(el(i + 1, i), el(2 * n + 3 - i, 2 * n + 2 - i))
            E[str(n)] = mat_add(el(n, n + 2), el(n + 1, n + 3))
            F[str(n)] = mat_add(el(n + 2, n), el(n + 3, n + 1))
            E["n*"] = mat_add(el(n, n + 1), el(n + 2, n + 3))
            F["n*"] = mat_add(el(n + 1, n), el(n + 3, n + 2))
        return E, F, scaled

    def gen_E(self, label: str, scalar_sqrt2=None):
        """The raising generator; B's short root needs sqrt2 (pass a scalar)."""
        m = self._E[label]
        if label in self._sqrt2_scaled:
            if scalar_sqrt2 is None:
                raise GroupError("short-root generator needs a sqrt(2) scalar")
            return mat_scale(m, scalar_sqrt2)
        return m

    def gen_F(self, label: str, scalar_sqrt2=None):
        m = self._F[label]
        if label in self._sqrt2_scaled:
            if scalar_sqrt2 is None:
                raise GroupError("short-root generator needs a sqrt(2) scalar")
            return mat_scale(m, scalar_sqrt2)
        return m

    # -- rational one-parameter subgroups ---------------------------------

    def _unip(self, base, label: str, t):
        """exp(t' * X) where t' = t for long roots and t/sqrt2 for the B
        short root, so the result is rational for rational t."""
        x = base[label]
        N = self.N
        out = identity(N)
        if label in self._sqrt2_scaled:
            # (sqrt2 x)^2 = 2 x^2; exp((t/sqrt2) sqrt2 x) = I + t x + t^2 x^2
            x2 = mat_mul(x, x)
            out = mat_add(out, mat_scale(x, t))
            out = mat_add(out, mat_scale(x2, t * t * Fraction(1, 2)))
            return out
        # all other generators square to zero in these embeddings... except
        # they may not; exponentiate exactly (nilpotent)
        term = identity(N)
        k = 1
        fact = 1
        power = identity(N)
        while True:
            power = mat_mul(power, x)
            if all(all(v == 0 for v in row) for row in power):
                break
            fact *= k
            out = mat_add(out, mat_scale(power, t ** k * Fraction(1, fact)))
            k += 1
        return out

    def unip_lower(self, label: str, t):
        return self._unip(self._F, label, t)

    def unip_upper(self, label: str, t):
        return self._unip(self._E, label, t)

    # -- torus -------------------------------------------------------------

    def basis_weights(self):
        """epsilon-coordinates of the vector-representation weight of each
        basis vector, as tuples."""
        N, n = self.N, self.n
        rank_eps = {"A": N, "B": n, "C": n, "D": n + 1}[self.family]
        out = []
        for k in range(1, N + 1):
            w = [0] * rank_eps
            if self.family == "A":
                w[k - 1] = 1
            elif self.family == "C":
                if k <= n:
                    w[k - 1] = 1
                else:
                    w[k - n - 1] = -1
            elif self.family == "B":
                if k <= n:
                    w[k - 1] = 1
                elif k >= n + 2:
                    w[2 * n + 1 - k] = -1
            else:
                if k <= n + 1:
                    w[k - 1] = 1
                else:
                    w[2 * n + 2 - k] = -1
            out.append(tuple(w))
        return out

    def coweight(self, label: str):
        """Fundamental coweight of the adjoint group (epsilon-coordinates)."""
        n = self.n
        if self.family == "A":
            j = int(label)
            N = self.N
            # omega_j in epsilon coords: (1 - j/N) on first j, -j/N on rest
            return tuple(Fraction(N - j, N) if k < j else Fraction(-j, N)
                         for k in range(N))
        half = Fraction(1, 2)
        if self.family == "C":
            j = int(label)
            if j < n:
                return tuple(1 if k < j else 0 for k in range(n))
            return tuple(half for _ in range(n))
        if self.family == "B":
            j = int(label)
            return tuple(1 if k < j else 0 for k in range(n))
        # D
        if label == "n*":
            return tuple([half] * n + [-half])
        j = int(label)
        if j < n:
            return tuple([1 if k < j else 0 for k in range(n)] + [0])
        return tuple([half] * n + [half])

    def cochar_exponents(self, label: str):
        """t-exponent of each basis vector under H_{omega-vee_label}(t)."""
        cw = self.coweight(label)
        return [sum(Fraction(a) * b for a, b in zip(w, cw))
                for w in self.basis_weights()]

    def cochar(self, label: str, t, sqrt_t=None):
        """Diagonal matrix H_{omega-vee_label}(t). Half-integer exponents
        need sqrt_t (exact square root of t, or a float)."""
        exps = self.cochar_exponents(label)
        N = self.N
        m = zeros(N, N)
        for i, e in enumerate(exps):
            if e.denominator == 1:
                m[i][i] = t ** int(e) if e >= 0 else 1 / (t ** int(-e))
            else:
                if sqrt_t is None:
                    raise GroupError("half-integer cocharacter needs sqrt_t")
                k = int(2 * e)
                m[i][i] = sqrt_t ** k if k >= 0 else 1 / (sqrt_t ** (-k))
        return m

    # -- distinguished flags ----------------------------------------------

    def iso_rank(self) -> int:
        """Rows needed to determine a principal flag."""
        return {"A": self.N, "B": self.n, "C": self.n, "D": self.n + 1}[self.family]

    def u_minus_rows(self):
        N, n = self.N, self.n
        e = lambda i: [1 if k == i - 1 else 0 for k in range(N)]
        neg = lambda v: [-x for x in v]
        if self.family == "A":
            rows = []
            for k in range(1, N + 1):
                v = e(N + 1 - k)
                rows.append(neg(v) if k % 2 == 0 else v)
            return rows
        if self.family == "C":
            # unsigned rows: the signed variants fail the minor normalization
            return [e(n + k) for k in range(1, n + 1)]
        if self.family == "B":
            # unsigned, as for C
            return [e(2 * n + 2 - k) for k in range(1, n + 1)]
        return [mat_scale([e(2 * n + 3 - k)], (-1) ** (k - 1))[0]
                for k in range(1, n + 2)]

    def w0_u_minus_rows(self):
        N = self.N
        e = lambda i: [1 if k == i - 1 else 0 for k in range(N)]
        return [e(k) for k in range(1, self.iso_rank() + 1)]


def build_group(family: str, n: int) -> GroupModel:
    return GroupModel(family, n)
