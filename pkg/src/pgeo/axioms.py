"""Randomized verification of the incidence and apartness axioms.

Every check is written once against a small vocabulary (elements ``x``,
carriers ``c``, ``join``/``meet`` between them) and run twice: on points and
lines, then on the dualized inputs with the roles of points and lines swapped.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from types import SimpleNamespace

from . import plane as pl
from .errors import InternalInconsistency
from .sampling import Sampler

PRIMAL = SimpleNamespace(
    name="primal",
    join=pl.join,
    meet=pl.meet,
    on=lambda x, c: pl.incident(x, c),
    off=lambda x, c: pl.outside(x, c),
    x_on=lambda c, n: pl.points_on(c, n),
    through=lambda x, n: pl.lines_through(x, n),
    witness=pl.c7_witness,
    witness_left=pl.C7.OUTSIDE_L,
)

DUAL = SimpleNamespace(
    name="dual",
    join=pl.meet,
    meet=pl.join,
    on=lambda x, c: pl.incident(c, x),
    off=lambda x, c: pl.outside(c, x),
    x_on=lambda c, n: pl.lines_through(c, n),
    through=lambda x, n: pl.points_on(x, n),
    witness=lambda l, m, P: pl.c7_dual_witness(l, m, P),
    witness_left=pl.Side.LEFT,
)


def _apartness(ops, x, y, z):
    ok = not pl.apart(x, x)
    ok &= pl.apart(x, y) == pl.apart(y, x)
    if pl.apart(x, y):
        w = pl.cotransitive_witness(x, y, z)
        ok &= pl.apart(z, x) if w is pl.Side.LEFT else pl.apart(z, y)
    else:
        ok &= x.coords == y.coords
    return ok


def _c1(ops, x, y, c):
    if not pl.apart(x, y):
        return True
    j = ops.join(x, y)
    return ops.on(x, j) and ops.on(y, j)


def _c2(ops, c, d):
    if not pl.apart(c, d):
        return True
    m = ops.meet(c, d)
    return ops.on(m, c) and ops.on(m, d)


def _c3(ops, x, y):
    """Two distinct elements lie on exactly one carrier."""
    if not pl.apart(x, y):
        return True
    j = ops.join(x, y)
    third = next(t for t in ops.x_on(j, 3) if t not in (x, y))
    return ops.join(x, third) == j and ops.join(y, third) == j


def _c4(ops, c):
    xs = ops.x_on(c, 3)
    return len(set(xs)) == 3 and all(ops.on(x, c) for x in xs)


def _c5(ops, x, c, d):
    if ops.on(x, c) and ops.off(x, d):
        return pl.apart(c, d)
    return True


def _c6(ops, x, c):
    return (not ops.off(x, c)) == ops.on(x, c)


def _c7(ops, c, d, x):
    if not pl.apart(c, d) or not pl.apart(x, ops.meet(c, d)):
        return True
    w = ops.witness(c, d, x)
    if ops is PRIMAL:
        return ops.off(x, c) if w is ops.witness_left else ops.off(x, d)
    # dual: c, d are points, x a line apart from their join
    return pl.outside(c, x) if w is ops.witness_left else pl.outside(d, x)


def _outside_via_carriers(ops, x, c, extra):
    """x off c iff every sampled carrier through x is apart from c."""
    carriers = ops.through(x, 3) + [ops.join(x, e) for e in extra if pl.apart(x, e)]
    return ops.off(x, c) == all(pl.apart(c, d) for d in carriers)


def _adjunction(ops, x, y, c):
    if not pl.apart(x, y):
        return True
    j = ops.join(x, y)
    ok = True
    if pl.apart(j, c):
        m = ops.meet(j, c)
        ok &= ops.on(m, c) and ops.on(m, j)
        if pl.apart(m, x):
            ok &= ops.join(ops.meet(j, c), x) == j
    return ok


@dataclass
class AxiomReport:
    trials: int
    seed: int
    bound: int
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def record(self, name, result):
        (self.passed if result else self.failed)[name] += 1

    def to_dict(self) -> dict:
        names = sorted(set(self.passed) | set(self.failed))
        return {
            "trials": self.trials,
            "seed": self.seed,
            "bound": self.bound,
            "checks": {n: {"pass": self.passed[n], "fail": self.failed[n]} for n in names},
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = [f"axiom suite: trials={self.trials} seed={self.seed} bound={self.bound}"]
        for n, v in self.to_dict()["checks"].items():
            status = "PASS" if v["fail"] == 0 else "FAIL"
            lines.append(f"  {status} {n}: {v['pass']} passed, {v['fail']} failed")
        lines.append(f"  {'OK' if self.ok else 'FAILED'} in {self.seconds:.2f}s")
        return "\n".join(lines)


def _trial(s: Sampler, report: AxiomReport):
    P, Q, R = s.point(), s.point(), s.point()
    if s.rng.random() < 0.2:
        Q = pl.HomPoint(tuple(2 * c for c in P.coords))  # same point, different representative
    l, m = s.line(), s.line()
    if s.rng.random() < 0.2:
        m = l
    if s.rng.random() < 0.3:
        R = pl.meet(l, m) if l != m else R
    on_l = s.point_on(l)
    for ops, dual in ((PRIMAL, False), (DUAL, True)):
        d = pl.dualize if dual else (lambda v: v)
        x, y, z, c, e, xl = d(P), d(Q), d(R), d(l), d(m), d(on_l)
        tag = "" if not dual else " (dual)"
        report.record("apartness: elements" + tag, _apartness(ops, x, y, z))
        report.record("apartness: carriers" + tag, _apartness(ops, c, e, d(s.line())))
        report.record("C1 join incident" + tag, _c1(ops, x, y, c))
        report.record("C2 meet incident" + tag, _c2(ops, c, e))
        report.record("C3 unique join" + tag, _c3(ops, x, y))
        report.record("C4 three elements per carrier" + tag, _c4(ops, c))
        report.record("C5" + tag, _c5(ops, xl, c, e))
        report.record("C5 random" + tag, _c5(ops, x, c, e))
        report.record("C6 tightness" + tag, _c6(ops, x, c) and _c6(ops, xl, c))
        report.record("C7 witness" + tag, _c7(ops, c, e, z) and _c7(ops, c, e, x))
        report.record("outside via carriers" + tag, _outside_via_carriers(ops, x, c, [xl]))
        report.record("join/meet adjunction" + tag, _adjunction(ops, x, y, c))


def run_axiom_suite(trials: int = 1000, seed: int = 0, bound: int = 10) -> AxiomReport:
    t0 = time.perf_counter()
    s = Sampler(seed, bound)
    report = AxiomReport(trials, seed, bound)
    for _ in range(trials):
        try:
            _trial(s, report)
        except InternalInconsistency:
            report.record("internal consistency", False)
    report.seconds = time.perf_counter() - t0
    return report
