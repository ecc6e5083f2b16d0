"""First Stiefel-Whitney class, the Stiefel-Whitney surface inside a dual
spine, and the counting statistics of that surface.

Orientation convention: each tetrahedron carries the orientation of its
vertex labels 0123.  A face pairing preserves these label orientations iff
its vertex bijection is odd, so an even bijection has parity 1.  With this
convention the doubled tetrahedron (identity gluings) is orientable.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from . import gf2
from .gluing import GluingTable
from .perm import sign
from .spine import StandardSpine


class SurfaceError(RuntimeError):
    """Signals an invalid surface or a counting bug."""


def gluing_parity(p):
    return 1 if sign(p) == 1 else 0


@dataclass(frozen=True)
class W1Cocycle:
    orientation: tuple  # re-orientation bit per tetrahedron (spanning tree)
    parity: dict        # (t, f) -> parity after re-orientation
    orientable: bool


def w1_cocycle(table: GluingTable) -> W1Cocycle:
    """Orientation character on the dual graph."""
    table.require_closed()
    orient = [None] * table.n
    orient[0] = 0
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for f in range(4):
            u, _, p = table.pairings[t][f]
            if orient[u] is None:
                orient[u] = orient[t] ^ gluing_parity(p)
                queue.append(u)
    if None in orient:
        raise SurfaceError("triangulation is disconnected")
    parity = {}
    for t in range(table.n):
        for f in range(4):
            u, _, p = table.pairings[t][f]
            parity[(t, f)] = gluing_parity(p) ^ orient[t] ^ orient[u]
    return W1Cocycle(tuple(orient), parity, not any(parity.values()))


def edge_w1(table: GluingTable):
    """Value of w1 on each triangulation edge, seen as a loop at the vertex.

    Orientation is transported across the vertex link (a sphere in a
    one-vertex closed triangulation) from one end of the edge to the other.
    """
    table.require_closed()
    corner_parity = {}
    for root in ((t, v) for t in range(table.n) for v in range(4)):
        if root in corner_parity:
            continue
        corner_parity[root] = 0
        queue = deque([root])
        while queue:
            t, v = queue.popleft()
            for f in range(4):
                if f == v:
                    continue
                u, _, p = table.pairings[t][f]
                nxt = (u, p[v])
                val = corner_parity[(t, v)] ^ gluing_parity(p)
                if nxt not in corner_parity:
                    corner_parity[nxt] = val
                    queue.append(nxt)
                elif corner_parity[nxt] != val:
                    raise SurfaceError("vertex link is non-orientable")
    values = []
    for cls in table.edge_classes:
        tet, x, y, _, _ = cls.steps[0]
        w = corner_parity[(tet, x)] ^ corner_parity[(tet, y)]
        for tet2, x2, y2, _, _ in cls.steps[1:]:
            if corner_parity[(tet2, x2)] ^ corner_parity[(tet2, y2)] != w:
                raise SurfaceError("w1 is not well defined on an edge")
        values.append(w)
    return tuple(values)


@dataclass(frozen=True)
class SurfaceInSpine:
    face_set: frozenset
    incidence: tuple  # per spine edge, number of germs in face_set

    @classmethod
    def from_faces(cls, spine: StandardSpine, faces):
        faces = frozenset(faces)
        inc = [0] * len(spine.edges)
        for fi in faces:
            for e, _ in spine.faces[fi].boundary:
                inc[e] += 1
        return cls(faces, tuple(inc))

    @property
    def is_cycle(self):
        return all(k % 2 == 0 for k in self.incidence)


def stiefel_whitney_surface(s: StandardSpine, face_order=None) -> SurfaceInSpine:
    """The unique Z2 2-cycle of the spine dual to w1.

    Unknowns are spine faces; equations are the cycle condition at each spine
    edge plus, for each triangulation edge loop ``e``, membership of its dual
    face equal to ``w1(e)`` (``e`` meets the spine once, in its dual face).
    ``face_order`` permutes the unknowns (the result must not depend on it).
    """
    if s.table is None:
        raise SurfaceError("spine has no triangulation attached")
    nf = len(s.faces)
    order = list(range(nf)) if face_order is None else list(face_order)
    var = {f: i for i, f in enumerate(order)}
    rows, rhs = [], []
    for e, germs in enumerate(s.germs()):
        mask = 0
        for fi, _ in germs:
            mask ^= 1 << var[fi]
        rows.append(mask)
        rhs.append(0)
    w1 = edge_w1(s.table)
    for fi, face in enumerate(s.faces):
        rows.append(1 << var[fi])
        rhs.append(w1[face.source])
    try:
        x, nullity = gf2.solve(rows, rhs, nf)
    except gf2.InconsistentSystem as exc:
        raise SurfaceError("Stiefel-Whitney system is inconsistent") from exc
    if nullity:
        raise SurfaceError("Stiefel-Whitney surface is not unique")
    faces = {order[i] for i in range(nf) if x >> i & 1}
    return SurfaceInSpine.from_faces(s, faces)


@dataclass(frozen=True)
class Component:
    faces: tuple
    euler_characteristic: int
    orientable: bool

    @property
    def genus(self):
        """Orientable genus, or the number of cross-caps if non-orientable."""
        if self.orientable:
            return (2 - self.euler_characteristic) // 2
        return 2 - self.euler_characteristic

    @property
    def is_sphere(self):
        return self.orientable and self.euler_characteristic == 2


@dataclass(frozen=True)
class SurfaceTopology:
    components: tuple
    corners_at: dict  # spine vertex -> number of surface corners there
    circles_at: dict  # spine vertex -> number of link circles there

    def __len__(self):
        return len(self.components)


def surface_topology(s: StandardSpine, sigma: SurfaceInSpine) -> SurfaceTopology:
    """Trace the abstract closed surface carried by ``sigma``.

    Faces are polygons glued along spine edges carrying two germs; corner
    classes give the surface vertices.
    """
    if not sigma.is_cycle:
        raise SurfaceError("face set does not have even incidence")
    faces = sorted(sigma.face_set)
    if not faces:
        return SurfaceTopology((), {}, {})
    corners = DisjointSet((fi, k) for fi in faces for k in range(len(s.faces[fi].boundary)))
    face_ds = DisjointSet(faces)
    glued = []  # ((face, side, direction), (face, side, direction))
    for e, germs in enumerate(s.germs()):
        ours = [(fi, pos) for fi, pos in germs if fi in sigma.face_set]
        if not ours:
            continue
        if len(ours) != 2:
            raise SurfaceError(f"germ tracing fails at spine edge {e}")
        sides = []
        for fi, pos in ours:
            length = len(s.faces[fi].boundary)
            d = s.faces[fi].boundary[pos][1]
            start, end = (fi, pos), (fi, (pos + 1) % length)
            tail_end, head_end = (start, end) if d > 0 else (end, start)
            sides.append((fi, d, tail_end, head_end))
        (f1, d1, t1, h1), (f2, d2, t2, h2) = sides
        corners.merge(t1, t2)
        corners.merge(h1, h2)
        face_ds.merge(f1, f2)
        glued.append((f1, d1, f2, d2))

    # orientation: epsilon_F1 * d1 == -epsilon_F2 * d2 on every glued pair
    adj = {fi: [] for fi in faces}
    for f1, d1, f2, d2 in glued:
        rel = 0 if d1 != d2 else 1  # 1: the two faces need opposite epsilons
        adj[f1].append((f2, rel))
        adj[f2].append((f1, rel))
    eps = {}
    bad = set()
    for root in faces:
        if root in eps:
            continue
        eps[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, rel in adj[a]:
                want = eps[a] ^ rel
                if b not in eps:
                    eps[b] = want
                    queue.append(b)
                elif eps[b] != want:
                    bad.add(face_ds[root])

    components = []
    for group in sorted(face_ds.subsets(), key=min):
        group = sorted(group)
        nv = len({corners[(fi, k)] for fi in group for k in range(len(s.faces[fi].boundary))})
        ne = sum(1 for f1, _, _, _ in glued if f1 in group)
        chi = nv - ne + len(group)
        components.append(Component(tuple(group), chi, face_ds[group[0]] not in bad))

    corners_at, circles = {}, {}
    for fi in faces:
        for k, v in enumerate(s.face_corners(fi)):
            corners_at[v] = corners_at.get(v, 0) + 1
            circles.setdefault(v, set()).add(corners[(fi, k)])
    return SurfaceTopology(tuple(components), corners_at,
                           {v: len(c) for v, c in circles.items()})


@dataclass(frozen=True)
class SigmaStats:
    v3: int  # pairs of 3-valent vertices of p(G)
    v4: int  # 4-valent vertices of p(G)
    f: int   # discs of the surface minus p(G)
    g: tuple  # genus per component

    @property
    def euler_characteristic(self):
        return self.f - self.v3 - self.v4


def sigma_stats(s: StandardSpine, sigma: SurfaceInSpine, topology=None) -> SigmaStats:
    """Vertex/disc counts of ``sigma``; checks them against the traced surface."""
    if not sigma.face_set:
        raise SurfaceError("empty surface")
    topo = surface_topology(s, sigma) if topology is None else topology
    if any(k != 1 for k in topo.circles_at.values()):
        raise SurfaceError("vertex link of the surface is not a single circle")
    valence = topo.corners_at
    if any(k not in (3, 4) for k in valence.values()):
        raise SurfaceError("surface link at a vertex has impossible length")
    three = sum(1 for k in valence.values() if k == 3)
    if three % 2:
        raise SurfaceError("odd number of 3-valent vertices")
    v3, v4 = three // 2, sum(1 for k in valence.values() if k == 4)
    f = len(sigma.face_set)
    chi = sum(c.euler_characteristic for c in topo.components)
    # chi from the induced cell structure: (2v3+v4) - (3v3+2v4) + f
    if f - v3 - v4 != chi:
        raise SurfaceError("Euler characteristic identity violated")
    if all(c.orientable for c in topo.components):
        if v3 + v4 != sum(2 * (c.genus - 1) for c in topo.components) + f:
            raise SurfaceError("v3 + v4 = 2(g - 1) + f violated")
    if 2 * v3 + v4 > s.num_vertices:
        raise SurfaceError("more surface vertices than spine vertices")
    return SigmaStats(v3, v4, f, tuple(c.genus for c in topo.components))
