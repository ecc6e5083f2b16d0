"""Local moves on gluing tables: 2-3 and 3-2 Pachner moves, and a small
breadth-first search that uses them to shrink a triangulation.

Both moves replace a ball made of distinct tetrahedra by another
triangulation of the same ball.  Region vertices carry labels; a face of a
tetrahedron is identified by the set of labels on its three corners.
"""
from __future__ import annotations

from collections import deque

from .gluing import GluingError, GluingTable
from .isosig import canonical_signature, from_signature
from .perm import inverse


def retriangulate(table: GluingTable, old, labels, new):
    """Replace the tetrahedra ``old`` by tetrahedra spanned by label tuples.

    ``labels[k][v]`` is the label of vertex ``v`` of ``old[k]``.  Faces
    glued inside the region must respect the labels; they disappear, and
    the new tetrahedra are glued to each other along shared label triples
    and to the outside along the boundary triples of the old region.
    Raises GluingError when the region is not of the expected shape.
    """
    if len(set(old)) != len(old):
        raise GluingError("region tetrahedra must be distinct")
    pos = {t: k for k, t in enumerate(old)}
    boundary = {}  # label triple -> (old tet, face)
    for k, t in enumerate(old):
        lab = labels[k]
        for f in range(4):
            u, g, p = table.pairings[t][f]
            triple = frozenset(lab[v] for v in range(4) if v != f)
            if u in pos and all(labels[pos[u]][p[v]] == lab[v] for v in range(4) if v != f):
                continue
            if triple in boundary:
                raise GluingError("region boundary repeats a face")
            boundary[triple] = (t, f)
    keep = [t for t in range(table.n) if t not in pos]
    index = {t: i for i, t in enumerate(keep)}
    base = len(keep)
    new_faces = {}
    for j, tet in enumerate(new):
        for f in range(4):
            triple = frozenset(tet[v] for v in range(4) if v != f)
            new_faces.setdefault(triple, []).append((base + j, f))
    if set(t for t, fs in new_faces.items() if len(fs) == 1) != set(boundary):
        raise GluingError("new region has a different boundary")
    if any(len(fs) > 2 for fs in new_faces.values()):
        raise GluingError("new region is not a pseudo-manifold")

    # where each old boundary face goes, with a label-preserving vertex map
    moved = {}
    for triple, (t, f) in boundary.items():
        (T, F), = new_faces[triple]
        lab_old = labels[pos[t]]
        lab_new = new[T - base]
        old_of_label = {lab_old[v]: v for v in range(4)}
        # vertex of the new tet -> vertex of the old tet
        moved[(t, f)] = (T, F, {i: old_of_label[lab_new[i]] for i in range(4) if i != F})

    rows = [[None] * 4 for _ in range(base + len(new))]
    for t in keep:
        for f in range(4):
            u, g, p = table.pairings[t][f]
            if u in pos:
                T, F, to_old = moved[(u, g)]
                back = {old_v: i for i, old_v in to_old.items()}
                q = [None] * 4
                q[f] = F
                for v in range(4):
                    if v != f:
                        q[v] = back[p[v]]
                rows[index[t]][f] = (T, F, tuple(q))
            else:
                rows[index[t]][f] = (index[u], g, p)
    for triple, faces in new_faces.items():
        if len(faces) == 2:
            (T1, F1), (T2, F2) = faces
            lab1, lab2 = new[T1 - base], new[T2 - base]
            where = {lab2[v]: v for v in range(4)}
            q = tuple(F2 if v == F1 else where[lab1[v]] for v in range(4))
            rows[T1][F1] = (T2, F2, q)
            rows[T2][F2] = (T1, F1, inverse(q))
            continue
        t, f = boundary[triple]
        T, F, to_old = moved[(t, f)]
        u, g, p = table.pairings[t][f]
        if u in pos:
            U, G, to_old_u = moved[(u, g)]
            back = {old_v: i for i, old_v in to_old_u.items()}
            q = tuple(G if i == F else back[p[to_old[i]]] for i in range(4))
        else:
            q = tuple(g if i == F else p[to_old[i]] for i in range(4))
            U = index[u]
            G = g
        rows[T][F] = (U, G, q)
    return GluingTable(len(rows), tuple(tuple(r) for r in rows))


def two_three(table: GluingTable, t: int, f: int) -> GluingTable:
    """Replace the two tetrahedra on face (t, f) by three around a new edge."""
    u, g, p = table.pairings[t][f]
    if u == t:
        raise GluingError("2-3 move needs two distinct tetrahedra")
    # labels: shared face vertices keep t's names, apexes are 'd' and 'e'
    lab_t = {v: v for v in range(4)}
    lab_t[f] = "d"
    lab_u = {p[v]: v for v in range(4) if v != f}
    lab_u[g] = "e"
    a, b, c = (v for v in range(4) if v != f)
    new = [(a, b, "d", "e"), (b, c, "d", "e"), (a, c, "d", "e")]
    return retriangulate(table, [t, u], [lab_t, lab_u], new)


def three_two(table: GluingTable, edge: int) -> GluingTable:
    """Replace the three tetrahedra around a degree-3 edge by two."""
    cls = table.edge_classes[edge]
    if cls.degree != 3:
        raise GluingError("3-2 move needs an edge of degree 3")
    tets = [s[0] for s in cls.steps]
    labels = []
    for k, (tet, x, y, z, w) in enumerate(cls.steps):
        labels.append({x: "x", y: "y", z: k, w: (k + 1) % 3})
    new = [(0, 1, 2, "x"), (0, 1, 2, "y")]
    return retriangulate(table, tets, labels, new)


def neighbours(table: GluingTable, max_n: int):
    """Tables one move away (2-3 only while below ``max_n`` tetrahedra)."""
    out = []
    for e, cls in enumerate(table.edge_classes):
        if cls.degree == 3:
            try:
                out.append(three_two(table, e))
            except GluingError:
                pass
    if table.n < max_n:
        for t, f, _, _, _ in table.gluings():
            try:
                out.append(two_three(table, t, f))
            except GluingError:
                pass
    return out


def shrink(table: GluingTable, target: int, slack: int = 2, limit: int = 200000):
    """Breadth-first search through 2-3/3-2 moves for a table with
    ``target`` tetrahedra, never exceeding ``table.n + slack``."""
    max_n = table.n + slack
    start = canonical_signature(table)
    seen = {start}
    queue = deque([start])
    while queue and len(seen) < limit:
        sig = queue.popleft()
        cur = from_signature(sig)
        if cur.n == target:
            return cur
        for nxt in neighbours(cur, max_n):
            try:
                s = canonical_signature(nxt)
            except GluingError:
                continue
            if s not in seen:
                seen.add(s)
                queue.append(s)
    raise RuntimeError(f"no {target}-tetrahedron table found")
