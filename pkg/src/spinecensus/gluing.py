"""Gluing tables: ``n`` tetrahedra with face pairings.

Face ``f`` of a tetrahedron is the face opposite vertex ``f``.  A pairing of
face ``(t, f)`` is ``(u, g, p)`` where ``p`` is a permutation of ``{0,1,2,3}``
with ``p[f] == g``; it sends vertex ``v`` of ``t`` to vertex ``p[v]`` of ``u``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from scipy.cluster.hierarchy import DisjointSet
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .perm import compose, face_vertices, inverse


class GluingError(ValueError):
    """Raised for malformed or inconsistent gluing tables."""


_LINE = re.compile(r"^\s*(\d+)\s+([0-3])\s*:\s*(\d+)\s+([0-3])\s*:\s*([0-3]{3})\s*$")

# the six edges of a tetrahedron, as sorted vertex pairs
TET_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {e: i for i, e in enumerate(TET_EDGES)}


@dataclass(frozen=True)
class EdgeClass:
    """One edge of the realized triangulation.

    ``steps`` lists the walk around the edge as tuples ``(tet, x, y, z, w)``:
    the tetrahedron edge ``x -> y`` is a representative (oriented consistently
    along the walk), the walk leaves ``tet`` through face ``z`` and entered it
    through face ``w``.
    """
    steps: tuple

    @property
    def degree(self):
        return len(self.steps)

    @property
    def tets(self):
        return tuple(s[0] for s in self.steps)


@dataclass(frozen=True)
class GluingTable:
    n: int
    pairings: tuple  # pairings[t][f] is None or (u, g, perm)

    def __post_init__(self):
        if self.n < 1:
            raise GluingError("empty triangulation")
        if len(self.pairings) != self.n:
            raise GluingError("pairing rows do not match tetrahedron count")
        for t, row in enumerate(self.pairings):
            if len(row) != 4:
                raise GluingError(f"tetrahedron {t} must have four faces")
            for f, entry in enumerate(row):
                if entry is None:
                    continue
                u, g, p = entry
                if not 0 <= u < self.n:
                    raise GluingError(f"index out of range: tetrahedron {u}")
                if sorted(p) != [0, 1, 2, 3] or p[f] != g:
                    raise GluingError(f"bad vertex bijection at face ({t},{f})")
                if (u, g) == (t, f):
                    raise GluingError(f"self-glued face ({t},{f})")
                back = self.pairings[u][g]
                if back is None or back[0] != t or back[1] != f or tuple(back[2]) != inverse(p):
                    raise GluingError(f"pairing not an involution at face ({t},{f})")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_gluings(cls, n, gluings):
        """Build from an iterable of ``(t, f, u, g, perm)``; reverse pairings are added."""
        rows = [[None] * 4 for _ in range(n)]
        for t, f, u, g, p in gluings:
            p = tuple(p)
            for (a, b, c, d, q) in ((t, f, u, g, p), (u, g, t, f, inverse(p))):
                if not (0 <= a < n and 0 <= c < n):
                    raise GluingError(f"index out of range: {a} or {c} with n={n}")
                if (a, b) == (c, d):
                    raise GluingError(f"self-glued face ({a},{b})")
                old = rows[a][b]
                if old is not None and old != (c, d, q):
                    raise GluingError(f"pairing not an involution at face ({a},{b})")
                rows[a][b] = (c, d, q)
        return cls(n, tuple(tuple(r) for r in rows))

    # -- basic queries ------------------------------------------------------

    @property
    def is_closed(self):
        return all(e is not None for row in self.pairings for e in row)

    def gluings(self):
        """Each glued face pair once, as ``(t, f, u, g, perm)`` with ``(t, f) < (u, g)``."""
        for t, row in enumerate(self.pairings):
            for f, entry in enumerate(row):
                if entry is not None and (t, f) < entry[:2]:
                    yield (t, f) + entry

    def require_closed(self):
        if self.n == 0:
            raise GluingError("empty triangulation")
        if not self.is_closed:
            raise GluingError("triangulation has unglued faces")

    def relabel(self, tet_perm, vertex_perms):
        """Image under tetrahedron relabeling ``t -> tet_perm[t]`` and
        per-tetrahedron vertex relabelings ``v -> vertex_perms[t][v]``."""
        rows = [[None] * 4 for _ in range(self.n)]
        for t, row in enumerate(self.pairings):
            rt = vertex_perms[t]
            for f, entry in enumerate(row):
                if entry is None:
                    continue
                u, g, p = entry
                ru = vertex_perms[u]
                q = compose(ru, compose(p, inverse(rt)))
                rows[tet_perm[t]][rt[f]] = (tet_perm[u], ru[g], q)
        return GluingTable(self.n, tuple(tuple(r) for r in rows))

    # -- derived cell structure -------------------------------------------

    @cached_property
    def edge_classes(self):
        """Edge classes of the realized complex, found by walking around each edge.

        Raises :class:`GluingError` for an edge identified with itself in reverse.
        """
        self.require_closed()
        seen = {}
        classes = []
        for t in range(self.n):
            for (i, j) in TET_EDGES:
                if (t, i, j) in seen:
                    continue
                k, l = (v for v in range(4) if v not in (i, j))
                start = (t, i, j, k, l)
                steps = []
                state = start
                while True:
                    tet, x, y, z, w = state
                    key = (tet, min(x, y), max(x, y))
                    if key in seen:
                        raise GluingError("invalid edge: identified with itself in reverse")
                    seen[key] = len(classes)
                    steps.append(state)
                    u, _, p = self.pairings[tet][z]
                    state = (u, p[x], p[y], p[w], p[z])
                    if state == start:
                        break
                classes.append(EdgeClass(tuple(steps)))
        return tuple(classes)

    @cached_property
    def edge_of(self):
        """Map ``(tet, i, j)`` with ``i < j`` to ``(edge class index, orientation sign)``."""
        out = {}
        for e, cls in enumerate(self.edge_classes):
            for tet, x, y, _, _ in cls.steps:
                out[(tet, min(x, y), max(x, y))] = (e, 1 if x < y else -1)
        return out

    def vertex_classes(self):
        self.require_closed()
        ds = DisjointSet((t, v) for t in range(self.n) for v in range(4))
        for t, f, u, g, p in self.gluings():
            for v in face_vertices(f):
                ds.merge((t, v), (u, p[v]))
        return ds.subsets()

    def triangle_edges(self, t, f):
        """The three tetrahedron edges of face ``(t, f)`` with boundary signs."""
        a, b, c = face_vertices(f)
        return ((a, b, 1), (b, c, 1), (a, c, -1))

    def h1_invariants(self):
        """Integral first homology as ``(free rank, torsion coefficients)``.

        Valid for one-vertex triangulations: every edge is a loop, and each
        triangle gives one relation.
        """
        rows = []
        ne = len(self.edge_classes)
        for t, f, _, _, _ in self.gluings():
            row = [0] * ne
            for a, b, s in self.triangle_edges(t, f):
                e, o = self.edge_of[(t, a, b)]
                row[e] += s * o
            rows.append(row)
        return abelian_invariants(rows, ne)

    def h1_z2_rank(self):
        free, torsion = self.h1_invariants()
        return free + sum(1 for d in torsion if d % 2 == 0)


def abelian_invariants(relations, ngens):
    """Invariants of the abelian group ``Z^ngens / <relations>``."""
    if ngens == 0:
        return 0, ()
    rows = [r for r in relations if any(r)]
    if not rows:
        return ngens, ()
    factors = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [d for d in factors if d != 0]
    return ngens - len(nonzero), tuple(d for d in nonzero if d != 1)


def vertex_count(table: GluingTable) -> int:
    """Number of vertices of the realized triangulation."""
    return len(table.vertex_classes())


def parse_gluing_table(text: str) -> GluingTable:
    """Parse lines ``T f : T' f' : abc`` (``#`` starts a comment line)."""
    gluings = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if m is None:
            raise GluingError(f"malformed line {lineno}: {raw!r}")
        t, f, u, g = (int(m.group(i)) for i in range(1, 5))
        images = tuple(int(c) for c in m.group(5))
        if g in images or len(set(images)) != 3:
            raise GluingError(f"malformed line {lineno}: images must be the vertices of face {g}")
        p = [0] * 4
        p[f] = g
        for v, img in zip(face_vertices(f), images):
            p[v] = img
        gluings.append((t, f, u, g, tuple(p)))
        n = max(n, t + 1, u + 1)
    return GluingTable.from_gluings(n, gluings)


def format_gluing_table(table: GluingTable) -> str:
    lines = []
    for t, f, u, g, p in table.gluings():
        images = "".join(str(p[v]) for v in face_vertices(f))
        lines.append(f"{t} {f} : {u} {g} : {images}")
    return "\n".join(lines) + "\n"
