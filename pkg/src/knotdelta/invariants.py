"""Smoothings, linking numbers and the order-one invariant ``I_lk``.

All linking numbers are read off the Gauss chord diagram: crossing ``b`` is
a crossing between the two components of the smoothing at ``a`` exactly
when the chords of ``a`` and ``b`` interleave.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import F, H, K
from .diagram import Diagram
from .group import GroupElement


def _positions(d: Diagram) -> dict[int, tuple[int, int]]:
    pos: dict[int, list[int]] = {}
    for i, (c, _) in enumerate(d.walk()):
        pos.setdefault(c, []).append(i)
    return {c: (p[0], p[1]) for c, p in pos.items()}


def _interleave_matrix(d: Diagram) -> list[list[bool]]:
    pos = _positions(d)
    n = d.n
    mat = [[False] * n for _ in range(n)]
    for a in range(n):
        i, j = pos[a]
        for b in range(a + 1, n):
            k, l = pos[b]
            x = (i < k < j) != (i < l < j)
            mat[a][b] = mat[b][a] = x
    return mat


def interleaved(d: Diagram, a: int, b: int) -> bool:
    """True when the walk meets the two crossings in the pattern a..b..a..b."""
    d._check_crossing(a)
    d._check_crossing(b)
    if a == b:
        raise ValueError("interleaving needs two distinct crossings")
    pos = _positions(d)
    i, j = pos[a]
    k, l = pos[b]
    return (i < k < j) != (i < l < j)


@dataclass(frozen=True)
class SmoothedLink:
    """Two-component link from smoothing one crossing.

    ``components[0]`` is the component that enters the smoothed crossing
    along the over-strand and leaves along the under-strand.  Each component
    is a tuple of ``(crossing, over)`` visits.  ``residual`` maps every other
    crossing to ``(sign, inter_component)``.
    """

    crossing: int
    components: tuple[tuple[tuple[int, bool], ...], tuple[tuple[int, bool], ...]]
    residual: dict

    def linking_number(self) -> int:
        total = sum(sign for sign, inter in self.residual.values() if inter)
        return total // 2


def smooth(d: Diagram, a: int) -> SmoothedLink:
    d._check_crossing(a)
    visits = d.walk()
    i, j = [k for k, (c, _) in enumerate(visits) if c == a]
    inner = tuple((c, s % 2 == 1) for c, s in visits[i + 1:j])
    outer = tuple((c, s % 2 == 1) for c, s in visits[j + 1:] + visits[:i])
    # inner arc departs through the outgoing strand of visit i
    if visits[i][1] % 2 == 0:
        comps = (inner, outer)
    else:
        comps = (outer, inner)
    in_first = {c for c, _ in comps[0]}
    in_second = {c for c, _ in comps[1]}
    residual = {
        b: (d.signs[b], b in in_first and b in in_second)
        for b in range(d.n) if b != a
    }
    return SmoothedLink(a, comps, residual)


def linking_number(d: Diagram, a: int) -> int:
    """lk of the smoothing at ``a``: half the signed count of chords crossing a's chord."""
    d._check_crossing(a)
    pos = _positions(d)
    i, j = pos[a]
    total = 0
    for b, (k, l) in pos.items():
        if b != a and (i < k < j) != (i < l < j):
            total += d.signs[b]
    if total % 2:
        raise AssertionError("signed interleaving count is odd")
    return total // 2


def linking_numbers(d: Diagram) -> list[int]:
    mat = _interleave_matrix(d)
    out = []
    for a in range(d.n):
        total = sum(d.signs[b] for b in range(d.n) if mat[a][b])
        if total % 2:
            raise AssertionError("signed interleaving count is odd")
        out.append(total // 2)
    return out


def invariant_Ilk(d: Diagram) -> GroupElement:
    terms = []
    for a, lk in enumerate(linking_numbers(d)):
        terms.append((("X" if d.signs[a] > 0 else "Y", lk), 1))
    return GroupElement(terms)


def writhe(d: Diagram) -> int:
    return F(invariant_Ilk(d))


def writhe_direct(d: Diagram) -> int:
    return sum(d.signs)


def crossing_number(d: Diagram) -> int:
    return K(invariant_Ilk(d))


def cowrithe(d: Diagram) -> int:
    """``H = h(I_lk)``; note this is minus the cowrithe in the other common convention."""
    return H(invariant_Ilk(d))


def cowrithe_direct(d: Diagram) -> int:
    """Sum of ``-sgn(a) sgn(b)`` over unordered interleaved pairs."""
    mat = _interleave_matrix(d)
    total = 0
    for a in range(d.n):
        for b in range(a + 1, d.n):
            if mat[a][b]:
                total -= d.signs[a] * d.signs[b]
    return total


def mirror_image_element(v: GroupElement) -> GroupElement:
    """``X_n -> Y_-n``, ``Y_n -> X_-n``: the effect of mirroring on I_lk."""
    return v.map_symbols(lambda letter, n: ("Y" if letter == "X" else "X", -n))
