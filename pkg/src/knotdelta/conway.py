"""Conway coefficient c_2 by skein recursion, and Arnold's curve invariant A.

``c_2`` comes from switching crossings until the diagram is descending,
using ``c2(D+) - c2(D-) = lk(D^a)``.  ``A`` is then ``H + 4 c_2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, crossing_switch
from .invariants import cowrithe, linking_number

__all__ = ["BasedDiagram", "crossing_switch", "is_descending", "c2", "arnold_A"]


@dataclass(frozen=True)
class BasedDiagram:
    """A diagram with a basepoint at the start of edge ``edge``."""

    diagram: Diagram
    edge: int | None = None

    def __post_init__(self):
        if self.edge is not None and self.edge not in self.diagram.edges:
            raise KeyError(f"basepoint edge {self.edge!r} not in diagram")


def _first_undercrossing(d: Diagram, edge: int | None) -> int | None:
    seen = set()
    for c, s in d.walk(edge):
        if c in seen:
            continue
        seen.add(c)
        if s % 2 == 0:
            return c
    return None


def is_descending(bd: BasedDiagram) -> bool:
    """Every crossing is first reached on its over-strand."""
    return _first_undercrossing(bd.diagram, bd.edge) is None


def c2(d: Diagram, basepoint: int | None = None) -> int:
    """Coefficient of z^2 in the Conway polynomial.

    Walks from ``basepoint`` (default: lowest edge label) and switches the
    first crossing met from below, until the diagram is descending.
    """
    total = 0
    cur = d
    while True:
        a = _first_undercrossing(cur, basepoint)
        if a is None:
            return total
        lk = linking_number(cur, a)
        total += lk if cur.signs[a] > 0 else -lk
        cur = crossing_switch(cur, a)


def arnold_A(d: Diagram) -> int:
    """Arnold's St + J+/2 of the underlying curve, zero on the circle and figure eight."""
    return cowrithe(d) + 4 * c2(d)
