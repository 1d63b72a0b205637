"""Oriented knot diagrams on the sphere, stored as combinatorial maps.

Each crossing is a PD tuple of four edge labels listed counterclockwise,
starting from the incoming under-edge.  The under strand therefore runs
from slot 0 to slot 2; the over strand runs between slots 1 and 3 and its
direction is what the crossing sign records (over strand entering at slot 3
means a positive crossing).

A half-edge is a pair ``(crossing, slot)``.  A dart is ``(edge label,
forward)`` and denotes one side of an edge: traversing the edge with the
knot orientation (``forward=True``) or against it, with the face on the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

HalfEdge = tuple[int, int]
Dart = tuple[int, bool]


class DiagramError(ValueError):
    """Raised for malformed or non-realizable diagram input."""


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]
    sign: int

    @property
    def over_in_slot(self) -> int:
        return 3 if self.sign > 0 else 1

    @property
    def over_edges(self) -> tuple[int, int]:
        """(incoming, outgoing) labels of the over strand."""
        o = self.over_in_slot
        return self.slots[o], self.slots[(o + 2) % 4]

    @property
    def under_edges(self) -> tuple[int, int]:
        return self.slots[0], self.slots[2]


def _over_in(sign: int) -> int:
    return 3 if sign > 0 else 1


@dataclass(frozen=True)
class Diagram:
    pd: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.pd) != len(self.signs):
            raise DiagramError("one sign per crossing required")
        if any(s not in (1, -1) for s in self.signs):
            raise DiagramError("crossing signs must be +1 or -1")
        self._validate()

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.pd)

    @property
    def is_trivial(self) -> bool:
        return not self.pd

    def crossing(self, a: int) -> Crossing:
        self._check_crossing(a)
        return Crossing(a, self.pd[a], self.signs[a])

    def _check_crossing(self, a):
        if not isinstance(a, int) or not 0 <= a < self.n:
            raise KeyError(f"unknown crossing {a!r}")

    def is_in(self, h: HalfEdge) -> bool:
        c, s = h
        return s == 0 or s == _over_in(self.signs[c])

    def is_over(self, h: HalfEdge) -> bool:
        return h[1] % 2 == 1

    @cached_property
    def ends(self) -> dict[int, tuple[HalfEdge, HalfEdge]]:
        """label -> (tail half-edge, head half-edge)."""
        tails: dict[int, HalfEdge] = {}
        heads: dict[int, HalfEdge] = {}
        for c, tup in enumerate(self.pd):
            for s, lab in enumerate(tup):
                target = heads if self.is_in((c, s)) else tails
                if lab in target:
                    raise DiagramError(f"orientation inconsistency at edge {lab}")
                target[lab] = (c, s)
        if set(tails) != set(heads):
            raise DiagramError("orientation inconsistency: edge without head or tail")
        return {lab: (tails[lab], heads[lab]) for lab in sorted(tails)}

    @cached_property
    def link(self) -> dict[HalfEdge, HalfEdge]:
        out = {}
        for t, h in self.ends.values():
            out[t] = h
            out[h] = t
        return out

    def label_at(self, h: HalfEdge) -> int:
        return self.pd[h[0]][h[1]]

    @property
    def edges(self) -> list[int]:
        return list(self.ends) if self.pd else [1]

    def walk(self, start: int | None = None) -> list[tuple[int, int]]:
        """Crossing visits ``(crossing, incoming slot)`` along the knot.

        The walk begins by traversing edge ``start`` (default: lowest label)
        so the first visit is at that edge's head.
        """
        if not self.pd:
            return []
        ends = self.ends
        lab = min(ends) if start is None else start
        if lab not in ends:
            raise KeyError(f"unknown edge {lab!r}")
        visits = []
        h = ends[lab][1]
        for _ in range(2 * self.n):
            visits.append(h)
            c, s = h
            h = self.link[(c, (s + 2) % 4)]
        return visits

    def _validate(self):
        if not self.pd:
            return
        seen: dict[int, int] = {}
        for tup in self.pd:
            if len(tup) != 4:
                raise DiagramError("each crossing needs four edge labels")
            for lab in tup:
                if not isinstance(lab, int) or lab <= 0:
                    raise DiagramError(f"edge labels must be positive integers, got {lab!r}")
                seen[lab] = seen.get(lab, 0) + 1
        bad = sorted(l for l, k in seen.items() if k != 2)
        if bad:
            raise DiagramError(f"edge label(s) {bad} not used exactly twice")
        self.ends  # orientation check
        visits = self.walk()
        if len(set(visits)) != 2 * self.n:
            raise DiagramError("diagram is not a single closed component")
        v, e, f = self.n, 2 * self.n, len(self.faces())
        if v - e + f != 2:
            raise DiagramError(f"not a spherical diagram (V-E+F = {v - e + f})")

    # -- faces -------------------------------------------------------------

    def dart_start(self, dart: Dart) -> HalfEdge:
        tail, head = self.ends[dart[0]]
        return tail if dart[1] else head

    def dart_at(self, h: HalfEdge) -> Dart:
        """The dart leaving the crossing through half-edge ``h``."""
        return (self.label_at(h), not self.is_in(h))

    def next_dart_halfedge(self, h: HalfEdge) -> HalfEdge:
        c, s = self.link[h]
        return (c, (s - 1) % 4)

    def faces(self) -> list[tuple[Dart, ...]]:
        """Face boundary walks as dart cycles, each rotated to start at its
        smallest dart; the list is sorted."""
        return list(self._faces)

    @cached_property
    def _face_index(self) -> dict[Dart, int]:
        return {dart: i for i, f in enumerate(self._faces) for dart in f}

    @cached_property
    def _faces(self) -> tuple[tuple[Dart, ...], ...]:
        if not self.pd:
            return (((1, False),), ((1, True),))
        seen = set()
        out = []
        for c in range(self.n):
            for s in range(4):
                if (c, s) in seen:
                    continue
                cyc = []
                h = (c, s)
                while h not in seen:
                    seen.add(h)
                    cyc.append(self.dart_at(h))
                    h = self.next_dart_halfedge(h)
                k = cyc.index(min(cyc))
                out.append(tuple(cyc[k:] + cyc[:k]))
        out.sort()
        return tuple(out)

    def face_of(self, dart: Dart) -> int:
        try:
            return self._face_index[dart]
        except KeyError:
            raise KeyError(f"unknown dart {dart!r}") from None

    def __str__(self):
        return serialize_pd(self)


UNKNOT = Diagram((), ())


def unknot() -> Diagram:
    return UNKNOT


# -- PD text ---------------------------------------------------------------

_PD_RE = re.compile(r"^PD\[(.*)\]$", re.S)
_X_RE = re.compile(r"X\(([^()]*)\)")


def parse_pd(text: str) -> Diagram:
    """Parse ``PD[X(a,b,c,d),...]``; ``PD[]`` is the zero-crossing unknot."""
    s = re.sub(r"\s+", "", text)
    m = _PD_RE.match(s)
    if not m:
        raise DiagramError("expected PD[...]")
    body = m.group(1)
    if not body:
        return UNKNOT
    tuples = []
    pos = 0
    while True:
        xm = _X_RE.match(body, pos)
        if not xm:
            raise DiagramError(f"malformed crossing tuple at {body[pos:pos + 20]!r}")
        parts = xm.group(1).split(",")
        if len(parts) != 4 or not all(p.isdigit() for p in parts):
            raise DiagramError(f"crossing tuple needs four positive integers: X({xm.group(1)})")
        tuples.append(tuple(int(p) for p in parts))
        pos = xm.end()
        if pos == len(body):
            break
        if body[pos] != ",":
            raise DiagramError(f"expected ',' at {body[pos:pos + 20]!r}")
        pos += 1
    return from_pd_tuples(tuples)


def from_pd_tuples(tuples) -> Diagram:
    """Build a diagram from PD tuples, recovering the over-strand directions.

    Slot 0 is the incoming under-edge and slot 2 the outgoing one; the
    direction of each over strand follows by propagating head/tail roles
    along edges.
    """
    tuples = [tuple(t) for t in tuples]
    if not tuples:
        return UNKNOT
    occ: dict[int, list[HalfEdge]] = {}
    for c, t in enumerate(tuples):
        if len(t) != 4:
            raise DiagramError("each crossing needs four edge labels")
        for s, lab in enumerate(t):
            if not isinstance(lab, int) or lab <= 0:
                raise DiagramError(f"edge labels must be positive integers, got {lab!r}")
            occ.setdefault(lab, []).append((c, s))
    bad = sorted(l for l, hs in occ.items() if len(hs) != 2)
    if bad:
        raise DiagramError(f"edge label(s) {bad} not used exactly twice")

    role: dict[HalfEdge, bool] = {}  # True = incoming
    stack = []

    def assign(h, val):
        if h in role:
            if role[h] != val:
                raise DiagramError(f"orientation inconsistency at edge {tuples[h[0]][h[1]]}")
            return
        role[h] = val
        stack.append(h)

    for c in range(len(tuples)):
        assign((c, 0), True)
        assign((c, 2), False)
    while stack:
        h = stack.pop()
        a, b = occ[tuples[h[0]][h[1]]]
        other = b if a == h else a
        assign(other, not role[h])
        c, s = h
        if s % 2 == 1:
            assign((c, (s + 2) % 4), not role[h])
    if len(role) != 4 * len(tuples):
        raise DiagramError("orientation undetermined: input is not a single knot")
    signs = tuple(1 if role[(c, 3)] else -1 for c in range(len(tuples)))
    return Diagram(tuple(tuples), signs)


def serialize_pd(d: Diagram) -> str:
    """PD text with edges renumbered 1..2n along the walk from the lowest label."""
    if d.is_trivial:
        return "PD[]"
    relabel = {}
    for i, (c, s) in enumerate(d.walk()):
        # the edge entering this visit gets the next number
        relabel[d.label_at((c, s))] = i + 1
    body = ",".join(
        "X(" + ",".join(str(relabel[l]) for l in tup) + ")" for tup in d.pd
    )
    return f"PD[{body}]"


# -- queries -----------------------------------------------------------------


def crossing_sign(d: Diagram, a: int) -> int:
    d._check_crossing(a)
    return d.signs[a]


def faces(d: Diagram) -> list[tuple[Dart, ...]]:
    return d.faces()


def to_gauss_code(d: Diagram, start: int | None = None) -> list[tuple[int, str, int]]:
    """(crossing, 'O'/'U', sign) triples in walk order."""
    return [
        (c, "O" if s % 2 else "U", d.signs[c]) for c, s in d.walk(start)
    ]


def format_gauss(code) -> str:
    return " ".join(f"{ou}{c + 1}{'+' if sg > 0 else '-'}" for c, ou, sg in code)


# -- structural operations ---------------------------------------------------


def _rotate(tup, k):
    return tuple(tup[(k + i) % 4] for i in range(4))


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing."""
    return Diagram(
        tuple(_rotate(t, _over_in(s)) for t, s in zip(d.pd, d.signs)),
        tuple(-s for s in d.signs),
    )


def crossing_switch(d: Diagram, a: int) -> Diagram:
    """Swap over and under at crossing ``a`` only."""
    d._check_crossing(a)
    pd = list(d.pd)
    signs = list(d.signs)
    pd[a] = _rotate(pd[a], _over_in(signs[a]))
    signs[a] = -signs[a]
    return Diagram(tuple(pd), tuple(signs))


def reverse_orientation(d: Diagram) -> Diagram:
    # the new incoming under-edge sits in old slot 2; signs are unchanged
    return Diagram(tuple(_rotate(t, 2) for t in d.pd), d.signs)


def canonical_code(d: Diagram) -> tuple:
    """Smallest signed Gauss code over all starting edges.

    The signed Gauss code determines the rotation system, so two diagrams
    have equal codes exactly when they are isomorphic as oriented maps with
    over/under data.
    """
    if d.is_trivial:
        return ()
    best = None
    for lab in d.ends:
        first: dict[int, int] = {}
        code = []
        for c, s in d.walk(lab):
            k = first.setdefault(c, len(first))
            code.append((k, s % 2, d.signs[c]))
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best


def is_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    if d1.n != d2.n or sorted(d1.signs) != sorted(d2.signs):
        return False
    return canonical_code(d1) == canonical_code(d2)


# -- construction via half-edges -------------------------------------------


class Raw:
    """Mutable half-edge structure used while performing surgery.

    Crossing ids are arbitrary integers; each crossing stores the slot of its
    incoming under and incoming over half-edges.  Outgoing slots are the
    opposite ones.
    """

    def __init__(self):
        self.link: dict[HalfEdge, HalfEdge] = {}
        self.uin: dict[int, int] = {}
        self.oin: dict[int, int] = {}
        self.order: list[int] = []

    @classmethod
    def from_diagram(cls, d: Diagram, offset: int = 0) -> Raw:
        r = cls()
        r.absorb(d, offset)
        return r

    def absorb(self, d: Diagram, offset: int = 0):
        for c, s in enumerate(d.signs):
            self.add_crossing(c + offset, 0, _over_in(s))
        for (tc, ts), (hc, hs) in d.ends.values():
            self.connect((tc + offset, ts), (hc + offset, hs))

    def add_crossing(self, cid: int, uin: int, oin: int):
        if (oin - uin) % 2 == 0:
            raise ValueError("under and over strands must alternate around a crossing")
        self.uin[cid] = uin
        self.oin[cid] = oin
        self.order.append(cid)

    def remove_crossing(self, cid: int):
        del self.uin[cid]
        del self.oin[cid]
        self.order.remove(cid)
        for s in range(4):
            self.link.pop((cid, s), None)

    def connect(self, a: HalfEdge, b: HalfEdge):
        self.link[a] = b
        self.link[b] = a

    def is_in(self, h: HalfEdge) -> bool:
        c, s = h
        return s == self.uin[c] or s == self.oin[c]

    def splice_out(self, removed: set[int]):
        """Delete crossings, joining each strand straight through them."""
        new_links = {}
        for h, p in self.link.items():
            if h[0] in removed:
                continue
            q = p
            steps = 0
            while q[0] in removed:
                q = self.link[(q[0], (q[1] + 2) % 4)]
                steps += 1
                if steps > 4 * len(self.order) + 4:
                    raise ValueError("splice loops without reaching a crossing")
            new_links[h] = q
        for c in removed:
            del self.uin[c]
            del self.oin[c]
            self.order.remove(c)
        self.link = new_links

    def to_diagram(self, start: HalfEdge | None = None):
        """Return ``(diagram, head_labels, index)``.

        ``head_labels`` maps each incoming half-edge (in raw ids) to the new
        edge label; ``index`` maps raw crossing ids to new crossing indices.
        """
        if not self.order:
            return UNKNOT, {}, {}
        index = {cid: i for i, cid in enumerate(self.order)}
        if start is None:
            c0 = self.order[0]
            start = (c0, (self.uin[c0] + 2) % 4)
        labels: dict[HalfEdge, int] = {}
        h = start
        lab = 0
        while True:
            if self.is_in(h):
                raise DiagramError("walk started on an incoming half-edge")
            p = self.link[h]
            if not self.is_in(p):
                raise DiagramError("orientation mismatch along an edge")
            lab += 1
            labels[h] = lab
            labels[p] = lab
            h = (p[0], (p[1] + 2) % 4)
            if h == start:
                break
            if lab > 2 * len(self.order):
                raise DiagramError("walk does not close up")
        if lab != 2 * len(self.order):
            raise DiagramError("result is not a single closed component")
        pd = []
        signs = []
        for cid in self.order:
            u, o = self.uin[cid], self.oin[cid]
            pd.append(tuple(labels[(cid, (u + k) % 4)] for k in range(4)))
            signs.append(1 if (o - u) % 4 == 3 else -1)
        d = Diagram(tuple(pd), tuple(signs))
        heads = {h: l for h, l in labels.items() if self.is_in(h)}
        return d, heads, index


# -- families ------------------------------------------------------------------


def braid_closure(word, strands: int | None = None) -> Diagram:
    """Closure of a braid word; letter ``±i`` is the generator sigma_i^±1.

    Strands run upward; a positive generator has the strand from bottom
    left passing over to top right.
    """
    if not word:
        raise DiagramError("empty braid word closes to an unlink")
    strands = strands or max(abs(w) for w in word) + 1
    r = Raw()
    first: dict[int, HalfEdge] = {}
    last: dict[int, HalfEdge] = {}
    # slots counterclockwise: 0 NE, 1 NW, 2 SW, 3 SE
    for cid, w in enumerate(word):
        i = abs(w)
        if not 1 <= i < strands:
            raise DiagramError(f"generator {w} out of range")
        if w > 0:
            r.add_crossing(cid, 3, 2)
        else:
            r.add_crossing(cid, 2, 3)
        for pos, slot in ((i, 2), (i + 1, 3)):
            if pos in last:
                r.connect(last[pos], (cid, slot))
            else:
                first[pos] = (cid, slot)
        last[i] = (cid, 1)
        last[i + 1] = (cid, 0)
    for pos in range(1, strands + 1):
        if pos not in last:
            raise DiagramError("braid closure has an unknotted split component")
        r.connect(last[pos], first[pos])
    return r.to_diagram()[0]


def kink(sign: int = 1) -> Diagram:
    """One-crossing unknot diagram with a crossing of the given sign."""
    return braid_closure([1 if sign > 0 else -1])


def build_Dn(n: int) -> Diagram:
    """2n+1 crossings: n+1 negative followed by n positive in a twist row."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return braid_closure([-1] * (n + 1) + [1] * n)


def build_En(n: int) -> Diagram:
    return mirror(build_Dn(n))


def connected_sum(d1: Diagram, e1: int, d2: Diagram, e2: int) -> Diagram:
    """Join two diagrams by cutting edge ``e1`` of ``d1`` and ``e2`` of ``d2``."""
    if d1.is_trivial:
        return d2
    if d2.is_trivial:
        return d1
    if e1 not in d1.ends or e2 not in d2.ends:
        raise KeyError("unknown edge for connected sum")
    r = Raw.from_diagram(d1)
    r.absorb(d2, offset=d1.n)
    t1, h1 = d1.ends[e1]
    t2, h2 = d2.ends[e2]
    t2 = (t2[0] + d1.n, t2[1])
    h2 = (h2[0] + d1.n, h2[1])
    r.connect(t1, h2)
    r.connect(t2, h1)
    return r.to_diagram()[0]
