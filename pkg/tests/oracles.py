"""Independent brute-force oracles, deliberately sharing no code with the
library beyond the GluingTable container."""
from __future__ import annotations

from itertools import permutations, product

PERMS = list(permutations(range(4)))


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent, x, y):
    rx, ry = _find(parent, x), _find(parent, y)
    if rx != ry:
        parent[rx] = ry


def corner_classes(n, rows):
    """Vertex classes by union-find on (tet, vertex) corners."""
    parent = {(t, v): (t, v) for t in range(n) for v in range(4)}
    for t in range(n):
        for f in range(4):
            u, g, p = rows[t][f]
            for v in range(4):
                if v != f:
                    _union(parent, (t, v), (u, p[v]))
    return {_find(parent, x) for x in parent}


def edge_data(n, rows):
    """(number of edge classes, valid) via union-find on oriented edges."""
    keys = [(t, a, b) for t in range(n) for a in range(4) for b in range(4) if a != b]
    parent = {k: k for k in keys}
    for t in range(n):
        for f in range(4):
            u, g, p = rows[t][f]
            for a in range(4):
                for b in range(4):
                    if a != b and f not in (a, b):
                        _union(parent, (t, a, b), (u, p[a], p[b]))
    valid = all(_find(parent, (t, a, b)) != _find(parent, (t, b, a)) for t, a, b in keys)
    return len({_find(parent, k) for k in keys}) // 2, valid


def all_closed_tables(n):
    """Every complete face pairing of n tetrahedra (labeled)."""
    faces = [(t, f) for t in range(n) for f in range(4)]

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for m in matchings(rest[1:i] + rest[i + 1:]):
                yield [(a, b)] + m

    for m in matchings(faces):
        choices = [[p for p in PERMS if p[a[1]] == b[1]] for a, b in m]
        for ps in product(*choices):
            rows = [[None] * 4 for _ in range(n)]
            for ((t, f), (u, g)), p in zip(m, ps):
                inv = [0] * 4
                for i, x in enumerate(p):
                    inv[x] = i
                rows[t][f] = (u, g, p)
                rows[u][g] = (t, f, tuple(inv))
            yield rows


def is_one_vertex_manifold(n, rows):
    if len(corner_classes(n, rows)) != 1:
        return False
    ne, valid = edge_data(n, rows)
    return valid and ne == n + 1


def relabelings(n, rows):
    """Encodings of the table under every tetrahedron order and vertex relabeling."""
    for sigma in permutations(range(n)):
        for rhos in product(PERMS, repeat=n):
            new = [[None] * 4 for _ in range(n)]
            for t in range(n):
                for f in range(4):
                    u, g, p = rows[t][f]
                    rt, ru = rhos[t], rhos[u]
                    q = [None] * 4
                    for v in range(4):
                        q[rt[v]] = ru[p[v]]
                    new[sigma[t]][rt[f]] = (sigma[u], ru[g], tuple(q))
            yield tuple(x for row in new for x in row)


def encode(rows):
    return tuple(x for row in rows for x in row)


def orientable_bruteforce(n, rows):
    """Try all 2^n orientation choices; a gluing preserves the chosen
    orientations iff its bijection is odd relative to them."""
    def sign(p):
        s = 1
        for i in range(4):
            for j in range(i + 1, 4):
                if p[i] > p[j]:
                    s = -s
        return s

    for eps in product((1, -1), repeat=n):
        if all(eps[t] * eps[u] * sign(p) == -1
               for t in range(n) for f, (u, g, p) in enumerate(rows[t])):
            return True
    return False


def one_vertex_classes(n):
    """Brute-force isomorphism classes: a list of (orbit, example rows)."""
    seen = set()
    classes = []
    for rows in all_closed_tables(n):
        if encode(rows) in seen or not is_one_vertex_manifold(n, rows):
            continue
        orbit = set(relabelings(n, rows))
        seen |= orbit
        classes.append((orbit, rows))
    return classes
