"""Property suites run over a corpus of diagrams.

Each suite counts its checks and collects violations; a violation carries
enough data (diagram PD, move, values) to reproduce it.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .bounds import H as h_functional
from .conway import arnold_A, c2
from .diagram import (Diagram, DiagramError, canonical_code, connected_sum,
                      crossing_switch, mirror, parse_pd, reverse_orientation, serialize_pd)
from .group import GroupElement
from .invariants import (cowrithe, cowrithe_direct, invariant_Ilk, linking_numbers,
                         mirror_image_element)
from .moves import (ClassificationError, InapplicableMove, MoveSite, apply_move,
                    check_delta, disjoint, disjoint_commute_check, enumerate_moves)

MAX_SWITCH_SUBSETS = 256


@dataclass
class CorpusEntry:
    name: str
    diagram: Diagram
    # recorded (site, delta) pairs to check against recomputation
    recorded: list = field(default_factory=list)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, cond: bool, **detail) -> None:
        self.checks += 1
        if not cond:
            self.violations.append(detail)


@dataclass
class Report:
    suites: list

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    @property
    def total_checks(self) -> int:
        return sum(s.checks for s in self.suites)

    def first_violation(self):
        for s in self.suites:
            if s.violations:
                return {"property": s.name, **s.violations[0]}
        return None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "total_checks": self.total_checks,
            "properties": {s.name: {"checks": s.checks, "violations": len(s.violations)}
                           for s in self.suites},
            "counterexample": self.first_violation(),
        }


def load_corpus(text: str) -> list[CorpusEntry]:
    """Parse a corpus file: one PD string or JSON object per line.

    JSON lines look like ``{"name": ..., "pd": "PD[...]", "moves": [site, ...]}``
    where each site may carry a recorded ``"delta"``.
    """
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("{"):
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DiagramError(f"line {lineno}: bad JSON: {exc}") from exc
            d = parse_pd(obj["pd"])
            recorded = []
            for mv in obj.get("moves", []):
                delta = GroupElement.from_json(mv["delta"]) if "delta" in mv else None
                recorded.append((MoveSite.from_dict(mv), delta))
            entries.append(CorpusEntry(obj.get("name", f"line{lineno}"), d, recorded))
        else:
            entries.append(CorpusEntry(f"line{lineno}", parse_pd(line)))
    return entries


class _Context:
    """Per-diagram caches shared by the suites."""

    def __init__(self, entry: CorpusEntry):
        self.entry = entry
        self.d = entry.diagram
        self.pd = serialize_pd(self.d)
        self.ilk = invariant_Ilk(self.d)
        self.sites = enumerate_moves(self.d)
        self.after = [apply_move(self.d, m) for m in self.sites]


def _suite_classification(ctxs) -> SuiteResult:
    res = SuiteResult("move-delta classification")
    for cx in ctxs:
        for m, a in zip(cx.sites, cx.after):
            change = invariant_Ilk(a) - cx.ilk
            try:
                check_delta(cx.d, m, change)
                ok = True
            except ClassificationError:
                ok = False
            res.check(ok, diagram=cx.entry.name, pd=cx.pd, move=m.to_dict(),
                      delta=str(change))
    return res


def _suite_recorded(ctxs) -> SuiteResult:
    res = SuiteResult("recorded deltas")
    for cx in ctxs:
        for m, delta in cx.entry.recorded:
            try:
                change = invariant_Ilk(apply_move(cx.d, m)) - cx.ilk
            except InapplicableMove as exc:
                res.check(False, diagram=cx.entry.name, pd=cx.pd, move=m.to_dict(),
                          error=str(exc))
                continue
            ok = delta is None or change == delta
            res.check(ok, diagram=cx.entry.name, pd=cx.pd, move=m.to_dict(),
                      recorded=str(delta), computed=str(change))
    return res


def _suite_order_one(ctxs, rng: random.Random, pairs: int) -> SuiteResult:
    res = SuiteResult("order one (disjoint moves commute)")
    pool = [cx for cx in ctxs if len(cx.sites) >= 2]
    if not pool:
        return res
    attempts = 0
    while res.checks < pairs and attempts < 50 * pairs:
        attempts += 1
        cx = pool[attempts % len(pool)]
        m1, m2 = rng.sample(cx.sites, 2)
        if not disjoint(cx.d, m1, m2):
            continue
        res.check(disjoint_commute_check(cx.d, m1, m2), diagram=cx.entry.name,
                  pd=cx.pd, first=m1.to_dict(), second=m2.to_dict())
    return res


def _suite_cowrithe(ctxs) -> SuiteResult:
    res = SuiteResult("cowrithe direct = h(I_lk)")
    for cx in ctxs:
        a, b = cowrithe_direct(cx.d), h_functional(cx.ilk)
        res.check(a == b, diagram=cx.entry.name, pd=cx.pd, direct=a, via_ilk=b)
    return res


def _suite_skein(ctxs) -> SuiteResult:
    res = SuiteResult("skein H(D+) - H(D-) = -4 lk")
    for cx in ctxs:
        lks = linking_numbers(cx.d)
        for a in range(cx.d.n):
            sw = crossing_switch(cx.d, a)
            plus, minus = (cx.d, sw) if cx.d.signs[a] > 0 else (sw, cx.d)
            diff = cowrithe(plus) - cowrithe(minus)
            res.check(diff == -4 * lks[a], diagram=cx.entry.name, pd=cx.pd,
                      crossing=a, difference=diff, lk=lks[a])
    return res


def _suite_switch_twice(ctxs) -> SuiteResult:
    res = SuiteResult("switch twice is identity")
    for cx in ctxs:
        for a in range(cx.d.n):
            back = crossing_switch(crossing_switch(cx.d, a), a)
            res.check(back == cx.d, diagram=cx.entry.name, pd=cx.pd, crossing=a)
    return res


def _switch_subsets(n: int, rng: random.Random):
    if 2 ** n <= MAX_SWITCH_SUBSETS:
        for k in range(n + 1):
            yield from itertools.combinations(range(n), k)
        return
    for _ in range(MAX_SWITCH_SUBSETS):
        yield tuple(i for i in range(n) if rng.random() < 0.5)


def _suite_curve(ctxs, rng: random.Random) -> SuiteResult:
    res = SuiteResult("A depends only on the curve")
    for cx in ctxs:
        base = arnold_A(cx.d)
        for sub in _switch_subsets(cx.d.n, rng):
            x = cx.d
            for a in sub:
                x = crossing_switch(x, a)
            val = arnold_A(x)
            res.check(val == base, diagram=cx.entry.name, pd=cx.pd,
                      switched=list(sub), A=val, expected=base)
    return res


def _suite_c2_moves(ctxs) -> SuiteResult:
    res = SuiteResult("c2 invariant under moves, dA = dH")
    for cx in ctxs:
        c_before = c2(cx.d)
        h_before = cowrithe(cx.d)
        a_before = h_before + 4 * c_before
        for m, a in zip(cx.sites, cx.after):
            c_after = c2(a)
            dh = cowrithe(a) - h_before
            da = arnold_A(a) - a_before
            res.check(c_after == c_before and da == dh, diagram=cx.entry.name,
                      pd=cx.pd, move=m.to_dict(), c2_before=c_before,
                      c2_after=c_after, dA=da, dH=dh)
    return res


def _suite_basepoint(ctxs) -> SuiteResult:
    res = SuiteResult("c2 basepoint independence")
    for cx in ctxs:
        base = c2(cx.d)
        for e in cx.d.edges:
            val = c2(cx.d, e)
            res.check(val == base, diagram=cx.entry.name, pd=cx.pd, basepoint=e,
                      c2=val, expected=base)
    return res


def _suite_structural(ctxs, rng: random.Random) -> SuiteResult:
    res = SuiteResult("mirror, orientation, connected sum")
    for cx in ctxs:
        m = invariant_Ilk(mirror(cx.d))
        res.check(m == mirror_image_element(cx.ilk), diagram=cx.entry.name,
                  pd=cx.pd, check="mirror", got=str(m))
        r = invariant_Ilk(reverse_orientation(cx.d))
        res.check(r == cx.ilk, diagram=cx.entry.name, pd=cx.pd,
                  check="orientation", got=str(r))
        again = parse_pd(serialize_pd(cx.d))
        res.check(canonical_code(again) == canonical_code(cx.d), diagram=cx.entry.name,
                  pd=cx.pd, check="serialization round trip")
    for cx in ctxs:
        other = rng.choice(ctxs)
        e1 = rng.choice(cx.d.edges)
        e2 = rng.choice(other.d.edges)
        s = connected_sum(cx.d, e1, other.d, e2)
        got = invariant_Ilk(s)
        res.check(got == cx.ilk + other.ilk, diagram=cx.entry.name, pd=cx.pd,
                  check="connected sum", other=other.pd, got=str(got))
    return res


def run_suites(entries, seed: int = 0, pairs: int = 240) -> Report:
    """Run every property suite; deterministic for a fixed ``seed``."""
    ctxs = [_Context(e) for e in entries]
    if not ctxs:
        return Report([])
    rng = random.Random(seed)
    suites = [
        _suite_classification(ctxs),
        _suite_recorded(ctxs),
        _suite_order_one(ctxs, rng, pairs),
        _suite_cowrithe(ctxs),
        _suite_skein(ctxs),
        _suite_switch_twice(ctxs),
        _suite_curve(ctxs, rng),
        _suite_c2_moves(ctxs),
        _suite_basepoint(ctxs),
        _suite_structural(ctxs, rng),
    ]
    return Report(suites)


def builtin_entries(seed: int = 0) -> list[CorpusEntry]:
    from .corpus import builtin_corpus
    return [CorpusEntry(name, d) for name, d in builtin_corpus(seed)]


__all__ = ["CorpusEntry", "SuiteResult", "Report", "load_corpus", "run_suites",
           "builtin_entries"]
