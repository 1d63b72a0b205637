"""Independent reference computations used to check the package.

Nothing here calls the package's own algorithms beyond reading a diagram's
PD tuples and signs.
"""

from __future__ import annotations

import numpy as np

# -- linking numbers by explicit smoothing -------------------------------------


def _strand_ends(pd, signs):
    """For each crossing: (under_in, under_out, over_in, over_out) edge labels."""
    out = []
    for (i, j, k, l), s in zip(pd, signs):
        # over strand runs l -> j for a positive crossing, j -> l for a negative one
        oin, oout = (l, j) if s > 0 else (j, l)
        out.append((i, k, oin, oout))
    return out


def lk_by_smoothing(pd, signs, a: int) -> int:
    """Smooth crossing ``a`` on the PD data, trace both components, count mixed crossings."""
    ends = _strand_ends(pd, signs)
    succ = {}
    for c, (ui, uo, oi, oo) in enumerate(ends):
        if c == a:
            succ[ui], succ[oi] = oo, uo
        else:
            succ[ui], succ[oi] = uo, oo
    comp = {}
    label = 0
    for e in succ:
        if e in comp:
            continue
        x = e
        while x not in comp:
            comp[x] = label
            x = succ[x]
        label += 1
    assert label == 2, "smoothing a knot must give two components"
    total = 0
    for c, (ui, _, oi, _) in enumerate(ends):
        if c != a and comp[ui] != comp[oi]:
            total += signs[c]
    assert total % 2 == 0
    return total // 2


def ilk_by_smoothing(pd, signs) -> dict:
    """I_lk as a plain dict {(letter, n): coeff}."""
    out: dict = {}
    for a, s in enumerate(signs):
        key = ("X" if s > 0 else "Y", lk_by_smoothing(pd, signs, a))
        out[key] = out.get(key, 0) + 1
    return out


# -- c_2 via the Gauss diagram formula --------------------------------------------


def gauss_sequence(pd, signs):
    """Visits (crossing, is_over) walking from the head of the lowest label."""
    ends = _strand_ends(pd, signs)
    arrive = {}
    for c, (ui, uo, oi, oo) in enumerate(ends):
        arrive[ui] = (c, False, uo)
        arrive[oi] = (c, True, oo)
    if not arrive:
        return []
    start = min(arrive)
    seq = []
    e = start
    while True:
        c, over, nxt = arrive[e]
        seq.append((c, over))
        e = nxt
        if e == start:
            return seq


def c2_gauss_formula(pd, signs) -> int:
    """Sum of sgn(a) sgn(b) over chord pairs met in the order U_a O_b O_a U_b."""
    seq = gauss_sequence(pd, signs)
    pos: dict = {}
    for i, (c, over) in enumerate(seq):
        pos.setdefault(c, {})[over] = i
    total = 0
    for a in pos:
        for b in pos:
            if a == b:
                continue
            ua, oa, ub, ob = pos[a][False], pos[a][True], pos[b][False], pos[b][True]
            if ua < ob < oa < ub:
                total += signs[a] * signs[b]
    return total


# -- naive R-length by meet in the middle ------------------------------------------

BOX = 2  # support [-BOX, BOX], entries [-BOX, BOX]
WINDOW = 6  # generator indices considered by the oracle


def _generators(window: int) -> np.ndarray:
    width = 2 * window + 2  # indices -window .. window+1
    off = window

    def vec(terms):
        v = np.zeros(2 * width, dtype=np.int8)
        for letter, idx, c in terms:
            v[(idx + off) + (width if letter == "Y" else 0)] += c
        return v

    gens = [vec([("X", 0, 1)]), vec([("Y", 0, 1)])]
    for n in range(-window, window + 1):
        gens.append(vec([("X", n, 1), ("Y", n, 1)]))
        gens.append(vec([("X", n, 1), ("Y", n + 1, 1)]))
        gens.append(vec([("X", n, 1), ("X", n + 1, -1)]))
        gens.append(vec([("Y", n, 1), ("Y", n + 1, -1)]))
    g = np.array(gens)
    return np.concatenate([g, -g]), width, off


def _ball(gens: np.ndarray, radius: int):
    """Distinct vectors of length <= radius, with their exact lengths."""
    seen = {bytes(np.zeros(gens.shape[1], np.int8)): 0}
    frontier = [np.zeros(gens.shape[1], np.int8)]
    for r in range(1, radius + 1):
        nxt = []
        for v in frontier:
            for w in v + gens:
                key = bytes(w)
                if key not in seen:
                    seen[key] = r
                    nxt.append(w)
        frontier = nxt
    keys = list(seen)
    vecs = np.array([np.frombuffer(k, dtype=np.int8) for k in keys])
    lens = np.array([seen[k] for k in keys], dtype=np.int8)
    return vecs, lens


def naive_lengths(max_len: int = 4, box: int = BOX, window: int = WINDOW):
    """Exact R-length of every box element of length <= max_len.

    Returns a dict ``{((letter, n), coeff) tuples: length}``; elements are
    sums of two half-balls, so this enumerates every word of length
    <= max_len over generators with indices inside the window.
    """
    gens, width, off = _generators(window)
    half = (max_len + 1) // 2
    vecs, lens = _ball(gens, half)
    inside = np.zeros(2 * width, dtype=bool)
    for idx in range(-box, box + 1):
        inside[idx + off] = inside[idx + off + width] = True
    coords = np.flatnonzero(inside)
    best: dict = {}
    chunk = 256
    for s in range(0, len(vecs), chunk):
        a = vecs[s:s + chunk].astype(np.int16)
        la = lens[s:s + chunk]
        sums = a[:, None, :] + vecs[None, :, :].astype(np.int16)
        total = la[:, None].astype(np.int16) + lens[None, :]
        ok = (total <= max_len)
        ok &= np.all(sums[:, :, ~inside] == 0, axis=2)
        ok &= np.all(np.abs(sums[:, :, inside]) <= box, axis=2)
        sel = sums[ok][:, coords]
        tl = total[ok]
        for row, t in zip(map(bytes, sel.astype(np.int8)), tl):
            if best.get(row, 99) > t:
                best[row] = int(t)
    out = {}
    for row, t in best.items():
        arr = np.frombuffer(row, dtype=np.int8)
        terms = []
        for j, c in enumerate(coords):
            if arr[j]:
                letter = "Y" if c >= width else "X"
                terms.append(((letter, int(c % width) - off), int(arr[j])))
        out[tuple(sorted(terms))] = t
    return out


# -- c_2 by skein recursion on a bare signed Gauss word ---------------------------


def c2_skein_word(word) -> int:
    """``word``: list of (crossing, is_over, sign). Switch the first under-pass until descending."""
    word = list(word)
    total = 0
    while True:
        seen = set()
        first = None
        for c, over, _ in word:
            if c not in seen:
                seen.add(c)
                if not over:
                    first = c
                    break
        if first is None:
            return total
        i, j = [k for k, (c, _, _) in enumerate(word) if c == first]
        inside = {c for c, _, _ in word[i + 1:j]}
        outside = {c for c, _, _ in word[:i] + word[j + 1:]}
        signs = {c: s for c, _, s in word}
        lk2 = sum(signs[b] for b in inside & outside)
        assert lk2 % 2 == 0
        sgn = signs[first]
        total += sgn * (lk2 // 2)
        word = [(c, (not o) if c == first else o, -s if c == first else s) for c, o, s in word]
