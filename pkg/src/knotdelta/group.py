"""Elements of the free abelian group on symbols ``X_n``, ``Y_n`` (n an integer).

A :class:`GroupElement` is an immutable finite-support mapping from a basis
symbol ``(letter, index)`` to a nonzero integer coefficient.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

LETTERS = ("X", "Y")

Symbol = tuple[str, int]


class GroupElement:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Symbol, int] | Iterable[tuple[Symbol, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Symbol, int] = {}
        for (letter, index), coeff in items:
            if letter not in LETTERS:
                raise ValueError(f"unknown basis letter {letter!r}")
            key = (letter, int(index))
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {k: v for k, v in sorted(acc.items()) if v != 0}
        self._hash = None

    @classmethod
    def basis(cls, letter: str, index: int, coeff: int = 1) -> GroupElement:
        return cls({(letter, index): coeff})

    @classmethod
    def zero(cls) -> GroupElement:
        return cls()

    def items(self):
        return self._terms.items()

    def support(self) -> list[int]:
        return sorted({i for _, i in self._terms})

    def coeff(self, letter: str, index: int) -> int:
        return self._terms.get((letter, index), 0)

    def __getitem__(self, key: Symbol) -> int:
        return self._terms.get(key, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __add__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, 0) + v
        return GroupElement(merged)

    def __radd__(self, other):
        # lets sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return GroupElement({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return GroupElement({k: n * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GroupElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def map_symbols(self, fn) -> GroupElement:
        """Apply ``fn(letter, index) -> (letter, index)`` to every basis symbol."""
        return GroupElement((fn(*k), v) for k, v in self._terms.items())

    def to_json(self) -> list[list]:
        return [[letter, index, coeff] for (letter, index), coeff in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> GroupElement:
        return cls(((str(l), int(i)), int(c)) for l, i, c in data)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"GroupElement({format_element(self)!r})"


def _term_order(item):
    (letter, index), coeff = item
    return (coeff < 0, -abs(coeff), letter, index)


def format_element(v: GroupElement) -> str:
    """Render as e.g. ``"4Y_0 + 3X_-1"``: positive terms first, larger magnitudes first."""
    if not v:
        return "0"
    parts = []
    for i, ((letter, index), coeff) in enumerate(sorted(v.items(), key=_term_order)):
        mag = abs(coeff)
        body = f"{'' if mag == 1 else mag}{letter}_{index}"
        if i == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+)?\s*\*?\s*([XY])_\{?\s*([+-]?\d+)\s*\}?\s*"
)


def parse_element(text: str) -> GroupElement:
    """Parse the text form, e.g. ``"2X_0 + Y_1 - 2Y_0 - X_-1"`` or ``"0"``."""
    s = text.strip()
    if s == "0":
        return GroupElement()
    if not s:
        raise ValueError("empty group element")
    pos = 0
    terms = []
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse group element at {s[pos:]!r}")
        sign, coeff, letter, index = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before {m.group(0).strip()!r}")
        c = int(coeff) if coeff else 1
        terms.append(((letter, int(index)), -c if sign == "-" else c))
        pos = m.end()
        first = False
    return GroupElement(terms)


def X(n: int) -> GroupElement:
    return GroupElement.basis("X", n)


def Y(n: int) -> GroupElement:
    return GroupElement.basis("Y", n)
