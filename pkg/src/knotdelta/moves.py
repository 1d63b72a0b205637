"""Reidemeister move sites: enumeration, application and delta classification.

Sites are anchored positionally on edge labels, darts and face indices of
one particular diagram, so they go stale as soon as that diagram changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bounds import Generator, classify_generator
from .diagram import Dart, Diagram, HalfEdge, Raw, UNKNOT, is_isomorphic, kink, build_Dn, build_En
from .group import GroupElement, X, Y
from .invariants import invariant_Ilk

KINDS = ("R1-insert", "R1-remove", "R2-insert", "R2-remove", "R3")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


class InapplicableMove(ValueError):
    """The site does not describe a move available on this diagram."""


class ClassificationError(AssertionError):
    """A computed change of I_lk falls outside the shape its move allows."""


@dataclass(frozen=True)
class MoveSite:
    kind: str
    face: int
    edges: tuple[int, ...]
    darts: tuple[Dart, ...]
    crossings: tuple[int, ...] = ()
    over: int | None = None
    sign: int | None = None
    side: str | None = None
    matched: bool | None = None
    tag: int | None = None

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind], self.face, self.edges, self.darts, self.crossings,
            self.over or 0, self.sign or 0, self.side or "",
        )

    def to_dict(self, delta: GroupElement | None = None) -> dict:
        out = {"kind": self.kind, "face": self.face, "edges": list(self.edges),
               "darts": [[e, f] for e, f in self.darts]}
        if self.crossings:
            out["crossings"] = list(self.crossings)
        for key in ("over", "sign", "side", "matched", "tag"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if delta is not None:
            out["delta"] = delta.to_json()
        return out

    def to_json(self, delta: GroupElement | None = None) -> str:
        return json.dumps(self.to_dict(delta))

    @classmethod
    def from_dict(cls, data: dict) -> MoveSite:
        try:
            kind = data["kind"]
            if kind not in KINDS:
                raise InapplicableMove(f"unknown move kind {kind!r}")
            return cls(
                kind=kind,
                face=int(data["face"]),
                edges=tuple(int(e) for e in data["edges"]),
                darts=tuple((int(e), bool(f)) for e, f in data["darts"]),
                crossings=tuple(int(c) for c in data.get("crossings", ())),
                over=data.get("over"),
                sign=data.get("sign"),
                side=data.get("side"),
                matched=data.get("matched"),
                tag=data.get("tag"),
            )
        except (KeyError, TypeError) as exc:
            raise InapplicableMove(f"malformed move description: {exc}") from exc


@dataclass(frozen=True)
class MoveDelta:
    change: GroupElement
    generator: Generator

    @property
    def label(self) -> str:
        return self.generator.label

    @property
    def n(self) -> int:
        return self.generator.n


# -- site construction -------------------------------------------------------


def _r1_insert(d: Diagram, e: int, side: str, sign: int) -> MoveSite | None:
    if e not in d.edges or side not in ("L", "R") or sign not in (1, -1):
        return None
    dart = (e, side == "L")
    return MoveSite("R1-insert", d.face_of(dart), (e,), (dart,), side=side, sign=sign)


def _r1_remove(d: Diagram, dart: Dart) -> MoveSite | None:
    if d.is_trivial or dart[0] not in d.ends:
        return None
    f = d.face_of(dart)
    face = d.faces()[f]
    if len(face) != 1:
        return None
    c = d.dart_start(dart)[0]
    # a one-crossing diagram has two monogons at the same crossing; keep one
    for g, other in enumerate(d.faces()):
        if g < f and len(other) == 1 and d.dart_start(other[0])[0] == c:
            return None
    return MoveSite("R1-remove", f, (dart[0],), (dart,), crossings=(c,))


def _strand_over(d: Diagram, h: HalfEdge) -> bool:
    return h[1] % 2 == 1


def _r2_insert(d: Diagram, d1: Dart, d2: Dart, over: int) -> MoveSite | None:
    if d.is_trivial or d1[0] not in d.ends or d2[0] not in d.ends:
        return None
    if d1 >= d2 or d1[0] == d2[0] or over not in (d1[0], d2[0]):
        return None
    f = d.face_of(d1)
    if d2 not in d.faces()[f]:
        return None
    return MoveSite("R2-insert", f, (d1[0], d2[0]), (d1, d2), over=over,
                    matched=d1[1] != d2[1])


def _polygon(d: Diagram, f: int):
    face = d.faces()[f]
    starts = [d.dart_start(x) for x in face]
    cs = tuple(h[0] for h in starts)
    return face, starts, cs


def _r2_remove(d: Diagram, f: int) -> MoveSite | None:
    if d.is_trivial or not 0 <= f < len(d.faces()):
        return None
    face, starts, cs = _polygon(d, f)
    if len(face) != 2 or cs[0] == cs[1]:
        return None
    # the strand along the first dart is over (or under) at both ends
    h0 = starts[0]
    h1 = d.link[h0]
    if _strand_over(d, h0) != _strand_over(d, h1):
        return None
    return MoveSite("R2-remove", f, tuple(x[0] for x in face), face,
                    crossings=tuple(sorted(cs)), matched=face[0][1] != face[1][1])


def _trigon_order(d: Diagram, face, starts):
    """Per trigon edge, how many of its two corners it passes over."""
    wins = []
    for h in starts:
        wins.append(int(_strand_over(d, h)) + int(_strand_over(d, d.link[h])))
    return wins


def _r3(d: Diagram, f: int) -> MoveSite | None:
    if d.is_trivial or not 0 <= f < len(d.faces()):
        return None
    face, starts, cs = _polygon(d, f)
    if len(face) != 3 or len(set(cs)) != 3:
        return None
    wins = _trigon_order(d, face, starts)
    if sorted(wins) != [0, 1, 2]:
        return None  # cyclic: every strand is over exactly once
    top = wins.index(2)
    bottom = wins.index(0)
    # the corner shared by the top and bottom edges
    ends_top = {starts[top][0], d.link[starts[top]][0]}
    ends_bottom = {starts[bottom][0], d.link[starts[bottom]][0]}
    (corner,) = ends_top & ends_bottom
    return MoveSite("R3", f, tuple(x[0] for x in face), face,
                    crossings=tuple(sorted(cs)), tag=d.signs[corner])


def enumerate_moves(d: Diagram) -> list[MoveSite]:
    sites: list[MoveSite] = []
    for e in d.edges:
        for side in ("L", "R"):
            for sign in (1, -1):
                sites.append(_r1_insert(d, e, side, sign))
    if not d.is_trivial:
        faces = d.faces()
        for f, face in enumerate(faces):
            if len(face) == 1:
                sites.append(_r1_remove(d, face[0]))
            for i, d1 in enumerate(face):
                for d2 in face[i + 1:]:
                    a, b = sorted((d1, d2))
                    for over in (a[0], b[0]):
                        sites.append(_r2_insert(d, a, b, over))
            if len(face) == 2:
                sites.append(_r2_remove(d, f))
            if len(face) == 3:
                sites.append(_r3(d, f))
    return sorted((s for s in sites if s is not None), key=MoveSite.sort_key)


def _rebuild(d: Diagram, m: MoveSite) -> MoveSite | None:
    """Reconstruct a site from its anchors on ``d``."""
    if m.kind == "R1-insert":
        if len(m.edges) != 1:
            return None
        return _r1_insert(d, m.edges[0], m.side, m.sign)
    if not m.darts:
        return None
    if m.kind == "R1-remove":
        return _r1_remove(d, m.darts[0])
    if m.kind == "R2-insert":
        if len(m.darts) != 2:
            return None
        return _r2_insert(d, m.darts[0], m.darts[1], m.over)
    f = d.face_of(m.darts[0]) if m.darts[0][0] in d.edges else -1
    if m.kind == "R2-remove":
        return _r2_remove(d, f)
    return _r3(d, f)


def _resolve(d: Diagram, m: MoveSite) -> MoveSite:
    try:
        site = _rebuild(d, m)
    except KeyError:
        site = None
    if site is None or site != m:
        raise InapplicableMove(f"{m.kind} site is not applicable to this diagram")
    return site


# -- surgery -----------------------------------------------------------------


def _surgery(d: Diagram, m: MoveSite) -> Raw:
    n = d.n
    if m.kind == "R1-insert":
        e = m.edges[0]
        r = Raw.from_diagram(d)
        t, h = d.ends[e]
        c = n
        if m.side == "L":
            r.add_crossing(c, *((0, 3) if m.sign > 0 else (3, 0)))
            r.connect(t, (c, 0))
            r.connect((c, 2), (c, 3))
            r.connect((c, 1), h)
        else:
            r.add_crossing(c, *((1, 0) if m.sign > 0 else (0, 1)))
            r.connect(t, (c, 0))
            r.connect((c, 2), (c, 1))
            r.connect((c, 3), h)
        return r
    if m.kind in ("R1-remove", "R2-remove"):
        r = Raw.from_diagram(d)
        r.splice_out(set(m.crossings))
        return r
    if m.kind == "R2-insert":
        return _r2_insert_surgery(d, m)
    return _r3_surgery(d, m)


def _r2_insert_surgery(d: Diagram, m: MoveSite) -> Raw:
    (e1, f1), (e2, f2) = m.darts
    v1 = d.dart_start(m.darts[0])
    w1 = d.link[v1]
    v2 = d.dart_start(m.darts[1])
    w2 = d.link[v2]
    r = Raw.from_diagram(d)
    P, Q = d.n, d.n + 1
    # strand 1 pokes a finger across strand 2: it meets P then Q, strand 2
    # meets Q then P.  Slots: 0 E, 1 N, 2 W, 3 S with strand 1 vertical.
    s1_in = (3, 1) if f1 else (1, 3)
    s2_in = (0, 0) if f2 else (2, 2)
    for cid, a, b in ((P, s1_in[0], s2_in[0]), (Q, s1_in[1], s2_in[1])):
        if m.over == e1:
            r.add_crossing(cid, uin=b, oin=a)
        else:
            r.add_crossing(cid, uin=a, oin=b)
    r.connect((P, 3), v1)
    r.connect((P, 1), (Q, 1))
    r.connect((Q, 3), w1)
    r.connect((Q, 0), v2)
    r.connect((Q, 2), (P, 0))
    r.connect((P, 2), w2)
    return r


def _r3_surgery(d: Diagram, m: MoveSite) -> Raw:
    r = Raw.from_diagram(d)
    phi: dict[HalfEdge, HalfEdge] = {}
    inner_pairs = []
    for dart in m.darts:
        xn = d.dart_start(dart)
        yn = d.link[xn]
        xo = (xn[0], (xn[1] + 2) % 4)
        yo = (yn[0], (yn[1] + 2) % 4)
        # each strand now meets its two crossings in the opposite order
        phi[xo] = yn
        phi[yo] = xn
        inner_pairs.append((yo, xo))
    new_links = []
    for u in phi:
        p = d.link[u]
        new_links.append((phi[u], phi.get(p, p)))
    new_links.extend(inner_pairs)
    for a, b in new_links:
        r.connect(a, b)
    return r


def _apply(d: Diagram, m: MoveSite):
    site = _resolve(d, m)
    if d.is_trivial:
        # only kink insertion is available on the crossingless circle
        return kink(site.sign), {}, {}
    r = _surgery(d, site)
    new, heads, index = r.to_diagram()
    edge_map = {}
    for lab, (t, h) in d.ends.items():
        if t[0] in r.uin and h[0] in r.uin and r.link.get(h) == t:
            edge_map[lab] = heads[h]
    cross_map = {c: index[c] for c in range(d.n) if c in index}
    return new, edge_map, cross_map


def apply_move(d: Diagram, m: MoveSite) -> Diagram:
    return _apply(d, m)[0]


def apply_move_tracked(d: Diagram, m: MoveSite):
    """Like :func:`apply_move`, also returning maps for untouched edges and crossings."""
    return _apply(d, m)


# -- classification ----------------------------------------------------------


def _expected(m: MoveSite, d: Diagram, gen: Generator) -> bool:
    if m.kind == "R1-insert":
        return gen.template == ("X_0" if m.sign > 0 else "Y_0") and gen.sign == 1
    if m.kind == "R1-remove":
        c = m.crossings[0]
        return gen.template == ("X_0" if d.signs[c] > 0 else "Y_0") and gen.sign == -1
    if m.kind in ("R2-insert", "R2-remove"):
        tmpl = "X_n+Y_{n+1}" if m.matched else "X_n+Y_n"
        return gen.template == tmpl and gen.sign == (1 if m.kind == "R2-insert" else -1)
    return gen.template == ("X_n-X_{n+1}" if m.tag > 0 else "Y_n-Y_{n+1}")


def delta_of(before: Diagram, after: Diagram) -> GroupElement:
    return invariant_Ilk(after) - invariant_Ilk(before)


def check_delta(d: Diagram, m: MoveSite, change: GroupElement) -> MoveDelta:
    gen = classify_generator(change)
    if gen is None or not _expected(m, d, gen):
        raise ClassificationError(f"{m.kind} produced change {change}, outside its case")
    return MoveDelta(change, gen)


def classify_delta(d: Diagram, m: MoveSite) -> MoveDelta:
    after = apply_move(d, m)
    return check_delta(d, m, delta_of(d, after))


# -- order one ---------------------------------------------------------------


def support(d: Diagram, m: MoveSite) -> tuple[set, set, set]:
    """(crossings, edges, faces) a move touches."""
    crossings = set(m.crossings)
    edges = set(m.edges)
    for c in m.crossings:
        edges.update(d.pd[c])
    return crossings, edges, {m.face}


def disjoint(d: Diagram, m1: MoveSite, m2: MoveSite) -> bool:
    a, b = support(d, m1), support(d, m2)
    return not any(x & y for x, y in zip(a, b))


def reanchor(d2: Diagram, m: MoveSite, edge_map, cross_map) -> MoveSite:
    try:
        darts = tuple((edge_map[e], f) for e, f in m.darts)
        edges = tuple(edge_map[e] for e in m.edges)
        crossings = tuple(sorted(cross_map[c] for c in m.crossings))
    except KeyError as exc:
        raise InapplicableMove("site was touched by the other move") from exc
    over = edge_map[m.over] if m.over is not None else None
    if m.kind == "R2-insert" and darts[0] > darts[1]:
        darts = darts[::-1]
        edges = edges[::-1]
    probe = MoveSite(m.kind, 0, edges, darts, crossings, over, m.sign, m.side, m.matched, m.tag)
    site = _rebuild(d2, probe)
    if site is None:
        raise InapplicableMove("site did not survive the other move")
    return site


def disjoint_commute_check(d: Diagram, m1: MoveSite, m2: MoveSite) -> bool:
    """Whether the change due to ``m1`` is the same before and after doing ``m2``."""
    _resolve(d, m1)
    _resolve(d, m2)
    if not disjoint(d, m1, m2):
        raise ValueError("move supports overlap")
    first = classify_delta(d, m1).change
    d2, edge_map, cross_map = _apply(d, m2)
    m1b = reanchor(d2, m1, edge_map, cross_map)
    return classify_delta(d2, m1b).change == first


# -- the D_n to E_n sequence -------------------------------------------------


@dataclass(frozen=True)
class SequenceStep:
    before: Diagram
    site: MoveSite
    delta: MoveDelta


def _step_to(cur: Diagram, kind: str, change: GroupElement, target: Diagram) -> SequenceStep:
    for m in enumerate_moves(cur):
        if m.kind != kind:
            continue
        after = apply_move(cur, m)
        if after.n != target.n:
            continue
        d = delta_of(cur, after)
        if d == change and is_isomorphic(after, target):
            return SequenceStep(cur, m, check_delta(cur, m, d))
    raise AssertionError(f"no {kind} move with change {change} reaches the target")


def dn_to_en_sequence(n: int) -> list[SequenceStep]:
    """2n+2 moves from D_n down to the crossingless circle and up to E_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    steps = []
    cur = build_Dn(n)
    down = -(X(-1) + Y(0))
    for k in range(n, 0, -1):
        st = _step_to(cur, "R2-remove", down, build_Dn(k - 1))
        steps.append(st)
        cur = apply_move(cur, st.site)
    st = _step_to(cur, "R1-remove", -Y(0), UNKNOT)
    steps.append(st)
    cur = apply_move(cur, st.site)
    st = _step_to(cur, "R1-insert", X(0), build_En(0))
    steps.append(st)
    cur = apply_move(cur, st.site)
    up = X(0) + Y(1)
    for k in range(1, n + 1):
        st = _step_to(cur, "R2-insert", up, build_En(k))
        steps.append(st)
        cur = apply_move(cur, st.site)
    return steps


def replay(d: Diagram, sites) -> list[Diagram]:
    """Apply a sequence of sites in turn; returns every intermediate diagram."""
    out = [d]
    for m in sites:
        out.append(apply_move(out[-1], m))
    return out
