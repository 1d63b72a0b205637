"""Built-in test corpus: named small diagrams plus seeded random ones.

Random diagrams are grown from the circle by random Reidemeister moves, so
every one of them is an unknot diagram.
"""

from __future__ import annotations

import random

from .diagram import UNKNOT, Diagram, braid_closure, build_Dn, build_En, kink, mirror
from .moves import apply_move, enumerate_moves

MAX_CROSSINGS = 8


def trefoil() -> Diagram:
    """Right-handed trefoil, all crossings positive."""
    return braid_closure([1, 1, 1], 2)


def figure_eight() -> Diagram:
    return braid_closure([1, -2, 1, -2], 3)


def named_diagrams(max_n: int = 5) -> list[tuple[str, Diagram]]:
    out = [
        ("unknot", UNKNOT),
        ("kink+", kink(1)),
        ("kink-", kink(-1)),
        ("trefoil-right", trefoil()),
        ("trefoil-left", mirror(trefoil())),
        ("figure-eight", figure_eight()),
    ]
    out += [(f"D{n}", build_Dn(n)) for n in range(max_n + 1)]
    out += [(f"E{n}", build_En(n)) for n in range(max_n + 1)]
    return out


def random_diagram(rng: random.Random, steps: int = 10,
                   max_crossings: int = MAX_CROSSINGS) -> Diagram:
    """Random walk in move space, kept below ``max_crossings``.

    R3 moves are taken whenever available, so the walk drifts towards
    diagrams with trigons.
    """
    d = UNKNOT
    for _ in range(steps):
        sites = [m for m in enumerate_moves(d)
                 if d.n + _growth(m.kind) <= max_crossings]
        if not sites:
            break
        r3 = [m for m in sites if m.kind == "R3"]
        m = rng.choice(r3) if r3 and rng.random() < 0.5 else rng.choice(sites)
        d = apply_move(d, m)
    return d


def _growth(kind: str) -> int:
    return {"R1-insert": 1, "R2-insert": 2, "R1-remove": -1, "R2-remove": -2}.get(kind, 0)


def random_diagrams(count: int, seed: int = 0) -> list[tuple[str, Diagram]]:
    rng = random.Random(seed)
    return [(f"random-{seed}-{i}", random_diagram(rng)) for i in range(count)]


def builtin_corpus(seed: int = 0, random_count: int = 12) -> list[tuple[str, Diagram]]:
    return named_diagrams() + random_diagrams(random_count, seed)
