"""Slopes on a torus, theta-graphs as Farey triangles, flips, and lens spaces.

A slope is a coprime pair (p, q) up to sign, read as the fraction p/q.  We
normalize to q > 0, with infinity stored as (1, 0).  A theta-graph is a
triple of pairwise unimodular slopes, which is the same thing as a triangle
of the Farey tessellation.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ValueError("slope (0, 0) is not allowed")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not primitive")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f"slope {self.p}/{self.q} is not normalized")

    @classmethod
    def of(cls, p, q=1):
        """Normalized slope through the vector (p, q); accepts any sign."""
        g = gcd(p, q)
        if g == 0:
            raise ValueError("slope (0, 0) is not allowed")
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("inf", "oo", "∞", "1/0"):
            return INF
        if "/" in text:
            a, b = text.split("/")
            return cls.of(int(a), int(b))
        return cls.of(int(text), 1)

    @property
    def weight(self):
        return abs(self.p) + self.q

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


INF = Slope(1, 0)


def intersection(a: Slope, b: Slope):
    return abs(a.p * b.q - a.q * b.p)


def is_theta(slopes) -> bool:
    """True iff three distinct slopes have pairwise intersection one."""
    s = list(slopes)
    if len(s) != 3 or len(set(s)) != 3:
        return False
    return all(intersection(s[i], s[j]) == 1 for i in range(3) for j in range(i + 1, 3))


@dataclass(frozen=True)
class ThetaGraph:
    slopes: frozenset

    def __post_init__(self):
        if not is_theta(self.slopes):
            raise ValueError("slopes do not form a theta-graph: "
                             + ", ".join(str(s) for s in self.slopes))

    @classmethod
    def of(cls, *slopes):
        return cls(frozenset(s if isinstance(s, Slope) else Slope.parse(str(s)) for s in slopes))

    def __contains__(self, s):
        return s in self.slopes

    def __iter__(self):
        return iter(sorted(self.slopes))

    def __str__(self):
        return "{" + ",".join(str(s) for s in sorted(self.slopes, key=_display_key)) + "}"


def _display_key(s):
    return (s.q == 0, s.p / s.q if s.q else 0)


BASE = ThetaGraph.of(Slope(0, 1), Slope(1, 1), INF)


def theta(i):
    """The triangle {i, i+1, inf}."""
    return ThetaGraph.of(Slope(i, 1), Slope(i + 1, 1), INF)


def flip(th: ThetaGraph, removed: Slope) -> ThetaGraph:
    """The other Farey triangle on the edge ``th`` minus ``removed``."""
    if removed not in th.slopes:
        raise ValueError(f"{removed} is not a slope of {th}")
    a, b = sorted(th.slopes - {removed})
    for sgn in (1, -1):
        new = Slope.of(a.p + sgn * b.p, a.q + sgn * b.q)
        if new != removed:
            return ThetaGraph(frozenset((a, b, new)))
    raise AssertionError("both candidate slopes equal the removed one")


def parent(th: ThetaGraph):
    """Neighbour one step closer to BASE in the dual tree (None at BASE)."""
    if th == BASE:
        return None
    top = max(th.slopes, key=lambda s: s.weight)
    if sum(1 for s in th.slopes if s.weight == top.weight) != 1:
        raise AssertionError(f"no unique youngest slope in {th}")
    return flip(th, top)


def ancestry(th: ThetaGraph):
    chain = [th]
    while chain[-1] != BASE:
        chain.append(parent(chain[-1]))
    return chain


def flip_distance(a: ThetaGraph, b: ThetaGraph) -> int:
    """Distance between two triangles in the dual tree of the tessellation."""
    if a == b:
        return 0
    up_a = ancestry(a)
    depth = {t: i for i, t in enumerate(up_a)}
    for j, t in enumerate(ancestry(b)):
        if t in depth:
            return depth[t] + j
    raise AssertionError("ancestries do not meet at the base triangle")


def flip_distance_bfs(a: ThetaGraph, b: ThetaGraph, limit=64) -> int:
    """Plain breadth-first search by flips; an oracle for :func:`flip_distance`."""
    seen = {a: 0}
    queue = deque([a])
    while queue:
        t = queue.popleft()
        if t == b:
            return seen[t]
        if seen[t] >= limit:
            continue
        for s in t.slopes:
            u = flip(t, s)
            if u not in seen:
                seen[u] = seen[t] + 1
                queue.append(u)
    raise ValueError("distance exceeds search limit")


def _det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def apply_gl2(m, x):
    """Act by an integer matrix with determinant +-1 on a slope or theta-graph."""
    if abs(_det(m)) != 1:
        raise ValueError("matrix is not in GL(2, Z)")
    if isinstance(x, ThetaGraph):
        return ThetaGraph(frozenset(apply_gl2(m, s) for s in x.slopes))
    return Slope.of(m[0][0] * x.p + m[0][1] * x.q, m[1][0] * x.p + m[1][1] * x.q)


# ---------------------------------------------------------------- lens spaces

def _canonical_q(p, q):
    if p == 1:
        return 0
    q %= p
    if gcd(p, q) != 1:
        raise ValueError(f"L({p},{q}): q must be coprime to p")
    qi = pow(q, -1, p)
    return min(q, qi, p - q, p - qi)


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if self.q != _canonical_q(self.p, self.q):
            raise ValueError(f"L({self.p},{self.q}) is not in canonical form")

    @classmethod
    def of(cls, p, q):
        return cls(p, _canonical_q(p, q))

    def __str__(self):
        return f"L({self.p},{self.q})"


def continued_fraction(p, q):
    """Digits of the ordinary continued fraction of p/q (p, q > 0)."""
    digits = []
    while q:
        a, r = divmod(p, q)
        digits.append(a)
        p, q = q, r
    return digits


def digit_sum(p, q):
    return sum(continued_fraction(p, q))


def _class_reps(p, q):
    if p <= 2:
        return {p - 1 if p == 2 else 0}
    qi = pow(q, -1, p)
    return {q % p, qi, p - q % p, p - qi}


def lens_complexity(lens: LensSpace) -> int:
    """Complexity via the minimal continued-fraction digit sum minus three."""
    if lens.p <= 3:
        return 0
    s = min(digit_sum(lens.p, r) for r in _class_reps(lens.p, lens.q))
    return max(s - 3, 0)


@lru_cache(maxsize=8)
def slope_depths(pmax):
    """Least flip distance from a triangle with vertex inf to a triangle
    containing each slope in [0, 1] of denominator at most ``pmax``."""
    best = {}
    start = theta(0)
    seen = {start: 0}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        d = seen[t]
        for s in t.slopes:
            if s.q <= pmax and s not in best:
                best[s] = d
        for s in t.slopes:
            u = flip(t, s)
            if u in seen:
                continue
            if any(x.q > pmax or (x.q and not 0 <= x.p <= x.q) for x in u.slopes):
                continue
            seen[u] = d + 1
            queue.append(u)
    return best


def lens_complexity_oracle(lens: LensSpace, depths=None) -> int:
    """Flip-path count between the two meridians, minus two.

    The lens space is two solid tori glued so that the meridian inf of one
    meets the other's meridian as q/p.  Every triangle {i, i+1, inf} is a
    free choice of marking (twisting moves q/p by integers), so the path
    starts at any triangle through inf and may end at any triangle through
    q/p.  Only the unit interval needs to be searched.  ``depths`` may be a
    shared table from :func:`slope_depths` with any bound of at least p.
    """
    if lens.p <= 3:
        return 0
    table = slope_depths(lens.p) if depths is None else depths
    d = table[Slope(lens.q, lens.p)]
    return max(d - 2, 0)


def fibonacci(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def scan_bound(c_max):
    """Largest p possible for a lens space of complexity at most ``c_max``.

    With digit sum S = c + 3 the largest numerator is reached by the
    expansion [1, 1, ..., 1, 2], whose value has numerator Fib(S + 1).
    """
    return fibonacci(c_max + 4)


def lens_census(c_max: int):
    """Canonical lens classes grouped by complexity ``0..c_max``."""
    if not 0 <= c_max <= 12:
        raise ValueError("c_max must lie in 0..12")
    out = {c: [] for c in range(c_max + 1)}
    out[0].append(LensSpace(1, 0))
    for p in range(2, scan_bound(c_max) + 1):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) != 1 or _canonical_q(p, q) != q:
                continue
            c = lens_complexity(LensSpace(p, q))
            if c <= c_max:
                out[c].append(LensSpace(p, q))
    # every class at the top complexity must lie strictly inside the bound
    for c, items in out.items():
        assert all(L.p <= scan_bound(c) for L in items), "scan bound violated"
    return out


def format_census_tsv(census):
    lines = ["#complexity\tcount\trepresentatives"]
    for c in sorted(census):
        reps = ",".join(str(L) for L in sorted(census[c]))
        lines.append(f"{c}\t{len(census[c])}\t{reps}")
    return "\n".join(lines) + "\n"
