"""The generating set R, R-length, and certificate lower bounds.

R consists of ``X_0``, ``Y_0``, ``X_n+Y_n``, ``X_n+Y_{n+1}``, ``X_n-X_{n+1}``,
``Y_n-Y_{n+1}`` (n any integer) and their negatives.  A *certificate* is a
homomorphism to the integers bounded by 1 in absolute value on R; its value
on ``v`` bounds the R-length of ``v`` from below.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from . import _kernel
from .group import GroupElement, Symbol

# generator templates: name -> terms as (letter, index offset, coefficient)
TEMPLATES: dict[str, tuple[tuple[str, int, int], ...]] = {
    "X_0": (("X", 0, 1),),
    "Y_0": (("Y", 0, 1),),
    "X_n+Y_n": (("X", 0, 1), ("Y", 0, 1)),
    "X_n+Y_{n+1}": (("X", 0, 1), ("Y", 1, 1)),
    "X_n-X_{n+1}": (("X", 0, 1), ("X", 1, -1)),
    "Y_n-Y_{n+1}": (("Y", 0, 1), ("Y", 1, -1)),
}
FIXED = ("X_0", "Y_0")


@dataclass(frozen=True, order=True)
class Generator:
    """One element of R: ``sign * template(n)``."""

    template: str
    n: int
    sign: int

    @property
    def element(self) -> GroupElement:
        base = 0 if self.template in FIXED else self.n
        return GroupElement(
            ((letter, base + off), self.sign * c) for letter, off, c in TEMPLATES[self.template]
        )

    @property
    def label(self) -> str:
        return self.template if self.sign > 0 else f"-({self.template})"

    def __str__(self):
        return str(self.element)


class GeneratorSet:
    """R materialized over template indices ``n`` in ``[lo, hi]``."""

    def __init__(self, lo: int, hi: int):
        if lo > hi:
            raise ValueError("empty index window")
        self.lo, self.hi = lo, hi

    def __iter__(self):
        for name in TEMPLATES:
            if name in FIXED:
                if self.lo <= 0 <= self.hi:
                    yield Generator(name, 0, 1)
                    yield Generator(name, 0, -1)
                continue
            for n in range(self.lo, self.hi + 1):
                yield Generator(name, n, 1)
                yield Generator(name, n, -1)

    def elements(self) -> list[GroupElement]:
        return [g.element for g in self]


def classify_generator(v: GroupElement) -> Generator | None:
    """The generator equal to ``v``, or None when ``v`` is not in R."""
    terms = sorted(v.items())
    if len(terms) == 1:
        (letter, idx), c = terms[0]
        if idx == 0 and abs(c) == 1:
            return Generator(f"{letter}_0", 0, c)
        return None
    if len(terms) != 2:
        return None
    ((l1, i1), c1), ((l2, i2), c2) = terms
    if abs(c1) != 1 or abs(c2) != 1:
        return None
    if l1 == "X" and l2 == "Y" and c1 == c2:
        if i1 == i2:
            return Generator("X_n+Y_n", i1, c1)
        if i2 == i1 + 1:
            return Generator("X_n+Y_{n+1}", i1, c1)
        return None
    if l1 == l2 and c1 == -c2 and i2 == i1 + 1:
        # terms sorted by index: c1*(l_i1 - l_i1+1)
        return Generator(f"{l1}_n-{l1}_{{n+1}}", i1, c1)
    return None


def in_R(v: GroupElement) -> bool:
    return classify_generator(v) is not None


# -- functionals -------------------------------------------------------------


@dataclass(frozen=True)
class Functional:
    """Integer homomorphism on the group.

    ``values`` gives explicit values on basis symbols; symbols outside it
    take the closed-form ``tail`` rule ``letter -> (slope, intercept)``,
    i.e. ``slope * n + intercept``, or 0 when the letter has no rule.
    ``norm`` is the claimed bound of |phi| on R; a functional of norm ``c``
    certifies the bound ``ceil(|phi(v)| / c)``.
    """

    name: str
    values: dict = field(default_factory=dict, compare=False, hash=False)
    tail: dict = field(default_factory=dict, compare=False, hash=False)
    norm: int = 1

    def bound(self, v: GroupElement) -> int:
        return -(-abs(self(v)) // self.norm)

    def value(self, letter: str, n: int) -> int:
        if (letter, n) in self.values:
            return self.values[(letter, n)]
        slope, intercept = self.tail.get(letter, (0, 0))
        return slope * n + intercept

    def __call__(self, v: GroupElement) -> int:
        return sum(c * self.value(l, i) for (l, i), c in v.items())

    def support(self) -> list[int]:
        return sorted({i for (_, i), x in self.values.items()})


def evaluate(phi: Functional, v: GroupElement) -> int:
    return phi(v)


F = Functional("f", tail={"X": (0, 1), "Y": (0, -1)})
G = Functional("g", values={("X", 0): 1, ("Y", 0): -1})
E = Functional("e", values={("X", 0): 1, ("Y", 1): 1, ("X", -1): -1, ("Y", 0): -1}, norm=2)
H = Functional("h", tail={"X": (-1, 0), "Y": (1, 0)})
K = Functional("k", tail={"X": (0, 1), "Y": (0, 1)})


def builtin_functionals() -> dict[str, Functional]:
    return {"f": F, "g": G, "e": E, "h": H, "k": K}


def default_window(phi: Functional) -> tuple[int, int]:
    sup = phi.support()
    if not sup:
        return (-1, 1)
    return (min(sup[0], 0) - 1, max(sup[-1], 0) + 1)


def _tail_generator_value(phi: Functional, name: str) -> tuple[int, int]:
    """(slope, intercept) in n of phi on template ``name`` far from the support."""
    slope = intercept = 0
    for letter, off, c in TEMPLATES[name]:
        a, b = phi.tail.get(letter, (0, 0))
        slope += c * a
        intercept += c * (a * off + b)
    return slope, intercept


def is_certificate(phi: Functional, window: tuple[int, int] | None = None) -> bool:
    """|phi(r)| <= phi.norm for every r in R.

    Generators meeting ``window`` are checked explicitly; beyond it phi
    follows its affine tail, which is checked symbolically.
    """
    lo, hi = window if window is not None else default_window(phi)
    sup = phi.support()
    if sup and (sup[0] - 1 < lo or sup[-1] + 1 > hi):
        raise ValueError("window too small to be conclusive for this functional")
    fixed = [Generator(name, 0, 1) for name in FIXED]
    for gen in [*fixed, *GeneratorSet(lo - 1, hi)]:
        if abs(phi(gen.element)) > phi.norm:
            return False
    for name in TEMPLATES:
        if name in FIXED:
            continue
        slope, intercept = _tail_generator_value(phi, name)
        if slope != 0 or abs(intercept) > phi.norm:
            return False
    return True


def best_certificate(v: GroupElement, certs) -> tuple[int, str | None]:
    best, name = 0, None
    for phi in certs:
        if not is_certificate(phi):
            raise ValueError(f"functional {phi.name!r} is not a certificate")
        val = phi.bound(v)
        if val > best:
            best, name = val, phi.name
    return best, name


def lower_bound(v: GroupElement, certs=None) -> int:
    """Largest certified bound over ``certs``; a lower bound on the R-length of v."""
    if certs is None:
        certs = (F, G, E, H)
    return best_certificate(v, certs)[0]


# -- exact search ------------------------------------------------------------


def _dense(v: GroupElement, pad: int):
    sup = v.support()
    smin, smax = sup[0], sup[-1]
    lo = smin - pad - 1
    width = smax - smin + 2 * pad + 3
    coeffs = [0] * (2 * width)
    for (letter, i), c in v.items():
        coeffs[(i - lo) + (width if letter == "Y" else 0)] = c
    return coeffs, width, -lo, smin - lo, smax - lo, lo


MAX_LIMIT = 30


def rlength_exact(v: GroupElement, limit: int = 12) -> int | None:
    """Minimum number of R elements summing to ``v``; None past ``limit``.

    Iterative deepening over generator applications, always branching on
    the lowest-index nonzero coefficient and pruning with certificate
    bounds on the residual.
    """
    if not 0 < limit <= MAX_LIMIT:
        raise ValueError(f"limit must be in 1..{MAX_LIMIT}")
    if not v:
        return 0
    coeffs, width, zero, vlo, vhi, _ = _dense(v, limit)
    res = _kernel.rlength(coeffs, width, zero, vlo, vhi, limit)
    return None if res < 0 else res


def _decode(gen, width, lo) -> GroupElement:
    terms = []
    for coord, c in gen:
        letter = "Y" if coord >= width else "X"
        terms.append(((letter, coord % width + lo), c))
    return GroupElement(terms)


@dataclass
class Profile:
    length: int
    decompositions: list[tuple[Generator, ...]]

    def type_multisets(self) -> set[tuple[str, ...]]:
        return {tuple(sorted(g.label for g in dec)) for dec in self.decompositions}

    def term_counts(self) -> Counter:
        """How often each generator element occurs across all decompositions."""
        return Counter(g.element for dec in self.decompositions for g in dec)


MAX_PROFILE = 8


def decomposition_profile(v: GroupElement, k: int) -> Profile:
    """Every multiset of ``k`` generators summing to ``v`` (small ``k`` only)."""
    if k < 0 or k > MAX_PROFILE:
        raise ValueError(f"decomposition profile is limited to k <= {MAX_PROFILE}")
    if not v:
        return Profile(k, [()] if k == 0 else [])
    coeffs, width, zero, vlo, vhi, lo = _dense(v, k)
    found = _kernel.enumerate_decompositions(coeffs, width, zero, vlo, vhi, k)
    decs = []
    for multiset in found:
        gens = []
        for gen in multiset:
            g = classify_generator(_decode(gen, width, lo))
            if g is None:
                raise AssertionError("search produced a non-generator")
            gens.append(g)
        decs.append(tuple(sorted(gens)))
    decs.sort()
    return Profile(k, decs)


# -- certificate search ------------------------------------------------------


def search_certificate(v: GroupElement, window: tuple[int, int] | None = None,
                       max_value: int = 3, steps: int = 2000, seed: int = 0) -> Functional:
    """Best-effort local search for a finite-support certificate with large |phi(v)|.

    Not exhaustive: a returned bound is valid, a weak one proves nothing.
    """
    if window is None:
        sup = v.support() or [0]
        window = (sup[0], sup[-1])
    lo, hi = window
    rng = random.Random(seed)
    symbols: list[Symbol] = [(l, i) for i in range(lo, hi + 1) for l in ("X", "Y")]
    check_window = (min(lo, 0) - 1, max(hi, 0) + 1)
    best_vals: dict = {}
    best_score = 0
    vals: dict = {}
    for _ in range(steps):
        sym = rng.choice(symbols)
        old = vals.get(sym, 0)
        new = max(-max_value, min(max_value, old + rng.choice((-1, 1))))
        trial = dict(vals)
        if new:
            trial[sym] = new
        else:
            trial.pop(sym, None)
        phi = Functional("search", trial)
        if not is_certificate(phi, check_window):
            continue
        score = abs(phi(v))
        if score >= abs(Functional("search", vals)(v)):
            vals = trial
            if score > best_score:
                best_score, best_vals = score, dict(trial)
    return Functional("search", best_vals)
