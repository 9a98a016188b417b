"""Certify a mutation sequence against predicted function labels.

The check is dual-route: cluster values are seeded by evaluating the
initial labels on a concrete flag configuration, then propagated purely
algebraically through the exchange relations; after every mutation the new
value must agree with a direct evaluation of the predicted label on the
same configuration.  Agreement is up to a per-step sign that must be
reproduced identically on every configuration tried."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..core.seed import Seed, mutate_seed
from ..invariants.evaluate import Config, EvalError, evaluate
from ..invariants.spec import FunctionSpec


@dataclass
class SequenceReport:
    ok: bool
    steps: int
    configs: int
    signs: dict = field(default_factory=dict)  # (vertex, count) -> +-1
    issues: list = field(default_factory=list)

    def summary(self) -> str:
        flips = sum(1 for s in self.signs.values() if s < 0)
        return (f"{'ok' if self.ok else 'FAIL'}: {self.steps} mutations x "
                f"{self.configs} configs, {flips} sign-normalized steps"
                + (f"; first issue: {self.issues[0]}" if self.issues else ""))


def _monomials(seed: Seed, values, k: str):
    m_in = m_out = 1
    for j in seed.vertices:
        e = seed.entry(j, k)
        if e > 0:
            m_in = m_in * values[j] ** int(e)
        elif e < 0:
            m_out = m_out * values[j] ** int(-e)
    return m_in, m_out


def _ratio_sign(got, want, tol):
    """+-1 if got == +-want (within tol when given), else None."""
    if tol is None:
        if got == want:
            return 1
        if got == -want:
            return -1
        return None
    if want == 0:
        return None
    r = got / want
    for s in (1, -1):
        if abs(r - s) < tol:
            return s
    return None


def replay_once(seed: Seed, labels: dict[str, FunctionSpec],
                steps, config: Config, tol=None):
    """One configuration: returns (values, final_seed, signs, issues)."""
    values = {}
    issues = []
    for v, spec in labels.items():
        try:
            values[v] = evaluate(spec, config)
        except EvalError as e:
            issues.append(f"initial label at {v}: {e}")
            return values, seed, {}, issues
    count = {v: 0 for v in labels}
    signs = {}
    cur = seed
    for v, expected in steps:
        m_in, m_out = _monomials(cur, values, v)
        old = values[v]
        if old == 0:
            issues.append(f"pole: zero cluster value at {v}")
            break
        new = (m_in + m_out) / old
        count[v] += 1
        try:
            want = evaluate(expected, config)
        except EvalError as e:
            issues.append(f"label {expected.pretty()} at {v} "
                          f"(mutation {count[v]}): {e}")
            break
        s = _ratio_sign(new, want, tol)
        if s is None:
            issues.append(
                f"mutation {count[v]} at {v}: exchange value does not match "
                f"{expected.pretty()} (got {new!r}, want {want!r})")
            break
        signs[(v, count[v])] = s
        values[v] = new
        cur = mutate_seed(cur, v)
    return values, cur, signs, issues


def verify_labelled_sequence(seed: Seed, labels: dict[str, FunctionSpec],
                             steps, configs, tol=None,
                             endpoint=None) -> SequenceReport:
    """steps: iterable of (vertex, expected FunctionSpec after mutation).

    endpoint: optional callable (values, final_seed, config, tol) -> list of
    issue strings, run per configuration after the replay.
    """
    steps = list(steps)
    report = SequenceReport(True, len(steps), len(configs))
    ref_signs = None
    for ci, config in enumerate(configs):
        values, final, signs, issues = replay_once(
            seed, labels, steps, config, tol)
        if issues:
            report.issues.extend(f"config {ci}: {m}" for m in issues)
            report.ok = False
            continue
        if ref_signs is None:
            ref_signs = signs
            report.signs = signs
        elif signs != ref_signs:
            diff = [k for k in signs if signs[k] != ref_signs.get(k)]
            report.issues.append(
                f"config {ci}: sign pattern differs at {diff[:4]}")
            report.ok = False
        if endpoint is not None:
            extra = endpoint(values, final, config, tol)
            if extra:
                report.issues.extend(f"config {ci}: {m}" for m in extra)
                report.ok = False
    return report
