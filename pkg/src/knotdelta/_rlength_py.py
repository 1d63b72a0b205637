"""Pure-Python R-length search kernel (fallback for the compiled ``_rlength``).

The element lives in a dense buffer: positions ``0..width-1`` hold the X
coefficients, ``width..2*width-1`` the Y coefficients, position ``zero``
holds index 0.  ``vlo``/``vhi`` are the positions of the element's support.
"""


def _candidates(v, W, zero, p, letter, wlo, whi):
    """Generators whose coefficient at the focus matches its sign, as
    ``[(coord, delta), ...]`` lists (delta is the generator coefficient)."""
    sigma = 1 if v[p + letter * W] > 0 else -1
    out = []
    if letter == 0:
        if p == zero:
            out.append(((p, sigma),))
        out.append(((p, sigma), (W + p, sigma)))
        if p + 1 <= whi:
            out.append(((p, sigma), (W + p + 1, sigma)))
            out.append(((p, sigma), (p + 1, -sigma)))
        if p - 1 >= wlo:
            out.append(((p - 1, -sigma), (p, sigma)))
    else:
        if p == zero:
            out.append(((W + p, sigma),))
        out.append(((p, sigma), (W + p, sigma)))
        if p - 1 >= wlo:
            out.append(((p - 1, sigma), (W + p, sigma)))
            out.append(((W + p - 1, -sigma), (W + p, sigma)))
        if p + 1 <= whi:
            out.append(((W + p, sigma), (W + p + 1, -sigma)))
    return out


class _State:
    __slots__ = ("v", "W", "zero", "f", "g", "h", "e", "l1")

    def __init__(self, coeffs, W, zero):
        self.v = list(coeffs)
        self.W = W
        self.zero = zero
        self.f = self.g = self.h = self.e = self.l1 = 0
        for c, x in enumerate(self.v):
            if x:
                self._account(c, x)
                self.l1 += abs(x)

    def _account(self, c, x):
        W, zero = self.W, self.zero
        if c < W:
            idx = c - zero
            self.f += x
            self.h -= idx * x
            if idx == 0:
                self.g += x
                self.e += x
            elif idx == -1:
                self.e -= x
        else:
            idx = c - W - zero
            self.f -= x
            self.h += idx * x
            if idx == 0:
                self.g -= x
                self.e -= x
            elif idx == 1:
                self.e += x

    def sub(self, c, d):
        old = self.v[c]
        new = old - d
        self.v[c] = new
        self.l1 += abs(new) - abs(old)
        self._account(c, -d)

    def heuristic(self):
        return max(abs(self.f), abs(self.g), abs(self.h),
                   (abs(self.e) + 1) // 2, (self.l1 + 1) // 2)


def _focus(v, W, wlo, whi):
    for p in range(wlo, whi + 1):
        if v[p]:
            return p, 0
        if v[W + p]:
            return p, 1
    raise AssertionError("focus requested for the zero element")


def _dfs(st, remaining, wlo, whi):
    if st.l1 == 0:
        return True
    if st.heuristic() > remaining:
        return False
    p, letter = _focus(st.v, st.W, wlo, whi)
    for gen in _candidates(st.v, st.W, st.zero, p, letter, wlo, whi):
        for c, d in gen:
            st.sub(c, d)
        if _dfs(st, remaining - 1, wlo, whi):
            return True
        for c, d in gen:
            st.sub(c, -d)
    return False


def rlength(coeffs, width, zero, vlo, vhi, limit):
    """Iterative-deepening search; returns the R-length or -1 past ``limit``."""
    st = _State(coeffs, width, zero)
    if st.l1 == 0:
        return 0
    for bound in range(st.heuristic(), limit + 1):
        wlo = max(0, vlo - bound)
        whi = min(width - 1, vhi + bound)
        if _dfs(st, bound, wlo, whi):
            return bound
    return -1


def enumerate_decompositions(coeffs, width, zero, vlo, vhi, k):
    """All generator multisets of size exactly ``k`` summing to the element.

    Each multiset is a sorted tuple of generators, a generator being a sorted
    tuple of ``(coord, coefficient)`` pairs.
    """
    st = _State(coeffs, width, zero)
    wlo = max(0, vlo - k)
    whi = min(width - 1, vhi + k)
    found = set()
    path = []

    def rec(remaining):
        if st.l1 == 0:
            if remaining == 0:
                found.add(tuple(sorted(path)))
            return
        if remaining == 0 or st.heuristic() > remaining:
            return
        p, letter = _focus(st.v, st.W, wlo, whi)
        for gen in _candidates(st.v, st.W, st.zero, p, letter, wlo, whi):
            for c, d in gen:
                st.sub(c, d)
            path.append(tuple(sorted(gen)))
            rec(remaining - 1)
            path.pop()
            for c, d in gen:
                st.sub(c, -d)

    rec(k)
    return found
