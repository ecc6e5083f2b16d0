"""Enumeration of closed one-vertex gluing tables up to isomorphism.

The search glues the lowest free face first.  A face glued to a tetrahedron
not yet in use always goes to face 0 of the next unused tetrahedron with a
fixed vertex bijection, which loses nothing because relabeling a fresh
tetrahedron acts transitively on (face, bijection) pairs.  Edge
identifications are tracked in a union-find with orientation parity and
rollback, so invalid edges and too few edge classes (a one-vertex closed
triangulation has exactly ``n + 1`` edges) are cut early.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .gluing import EDGE_INDEX, GluingTable, vertex_count
from .isosig import canonical_signature, from_signature
from .perm import face_vertices, inverse, perms_between_faces
from .spine import Verdict, dual_spine, prune_nonminimal


@dataclass(frozen=True)
class PruneFlags:
    criterion1: bool = False   # reject on completion by the embedded-face criterion
    low_degree: bool = False   # reject edges of degree <= 2 (only applied for n >= 3)


class _EdgeUnion:
    """Union-find over tetrahedron edges with orientation parity and undo."""

    def __init__(self, n):
        self.parent = list(range(6 * n))
        self.par = [0] * (6 * n)  # parity to parent
        self.rank = [0] * (6 * n)
        self.count = 6 * n
        self.history = []

    def find(self, x):
        p = 0
        while self.parent[x] != x:
            p ^= self.par[x]
            x = self.parent[x]
        return x, p

    def union(self, x, y, flip):
        """Identify ``x`` with ``y``; ``flip`` says orientations disagree.
        Returns False on an orientation conflict (nothing recorded then)."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if (px ^ py) != flip:
                return False
            self.history.append(None)
            return True
        if self.rank[rx] > self.rank[ry]:
            rx, ry = ry, rx
        bumped = self.rank[rx] == self.rank[ry]
        self.parent[rx] = ry
        self.par[rx] = px ^ py ^ flip
        if bumped:
            self.rank[ry] += 1
        self.count -= 1
        self.history.append((rx, ry, bumped))
        return True

    def undo(self):
        entry = self.history.pop()
        if entry is None:
            return
        rx, ry, bumped = entry
        self.parent[rx] = rx
        self.par[rx] = 0
        if bumped:
            self.rank[ry] -= 1
        self.count += 1


_FACE_EDGES = {f: [(a, b) for a in face_vertices(f) for b in face_vertices(f) if a < b]
               for f in range(4)}


class _Search:
    def __init__(self, n, flags):
        self.n = n
        self.flags = flags
        self.rows = [[None] * 4 for _ in range(n)]
        self.edges = _EdgeUnion(n)
        self.used = 1
        self.found = set()

    def _glue(self, t, f, u, g, p):
        self.rows[t][f] = (u, g, p)
        self.rows[u][g] = (t, f, inverse(p))
        done = 0
        ok = True
        for a, b in _FACE_EDGES[f]:
            pa, pb = p[a], p[b]
            x = 6 * t + EDGE_INDEX[(a, b)]
            y = 6 * u + EDGE_INDEX[(min(pa, pb), max(pa, pb))]
            if not self.edges.union(x, y, pa > pb):
                ok = False
                break
            done += 1
        if ok and self.edges.count < self.n + 1:
            ok = False
        if not ok:
            for _ in range(done):
                self.edges.undo()
            self.rows[t][f] = self.rows[u][g] = None
        return ok, done

    def _unglue(self, t, f, u, g, done):
        for _ in range(done):
            self.edges.undo()
        self.rows[t][f] = self.rows[u][g] = None

    def _free_face(self):
        for t in range(self.used):
            for f in range(4):
                if self.rows[t][f] is None:
                    return t, f
        return None

    def choices(self, t, f):
        out = []
        for u in range(t, self.used):
            for g in range(4):
                if (u, g) <= (t, f) or self.rows[u][g] is not None:
                    continue
                for p in perms_between_faces(f, g):
                    out.append((u, g, p, False))
        if self.used < self.n:
            p = [0] * 4
            p[f] = 0
            for v, img in zip(face_vertices(f), (1, 2, 3)):
                p[v] = img
            out.append((self.used, 0, tuple(p), True))
        return out

    def run(self, prefix=()):
        """Search below a prefix of choice indices."""
        free = self._free_face()
        if free is None:
            if self.used == self.n:
                self._leaf()
            return
        t, f = free
        options = self.choices(t, f)
        if prefix:
            options = [options[prefix[0]]] if prefix[0] < len(options) else []
        for u, g, p, new in options:
            ok, done = self._glue(t, f, u, g, p)
            if not ok:
                continue
            if new:
                self.used += 1
            self.run(prefix[1:])
            if new:
                self.used -= 1
            self._unglue(t, f, u, g, done)

    def _leaf(self):
        if self.edges.count != self.n + 1:
            return
        table = GluingTable(self.n, tuple(tuple(r) for r in self.rows))
        if vertex_count(table) != 1:
            return
        if not accept(table, self.flags):
            return
        self.found.add(canonical_signature(table))


def accept(table, flags):
    if flags.low_degree and table.n >= 3:
        if any(c.degree <= 2 for c in table.edge_classes):
            return False
    if flags.criterion1:
        verdict, _ = prune_nonminimal(dual_spine(table))
        if verdict is Verdict.CRITERION_1:
            return False
        if flags.low_degree and verdict is Verdict.CRITERION_2:
            return False
    return True


def _top_level_count(n):
    return len(_Search(n, PruneFlags()).choices(0, 0))


def _run_branch(args):
    n, flags, branch = args
    search = _Search(n, flags)
    search.run((branch,))
    return search.found


def iter_branches(n: int, pruning: PruneFlags = PruneFlags(), workers: int = 1):
    """Yield the signature set of each top-level branch, in branch order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    tasks = [(n, pruning, b) for b in range(_top_level_count(n))]
    if workers <= 1:
        yield from map(_run_branch, tasks)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run_branch, tasks)


def enumerate_signatures(n: int, pruning: PruneFlags = PruneFlags(), workers: int = 1):
    """Sorted canonical signatures of all closed one-vertex n-tetrahedron tables."""
    found = set()
    for part in iter_branches(n, pruning, workers):
        found |= part
    return sorted(found)


def enumerate_one_vertex(n: int, pruning: PruneFlags = PruneFlags(), workers: int = 1):
    """Yield canonical representatives in sorted signature order."""
    for sig in enumerate_signatures(n, pruning, workers):
        yield from_signature(sig)
