"""One-vertex triangulations of torus bundles built from coordinates.

The bundle with monodromy A is the quotient of R^2 x R by the integer
translations of the plane and phi(v, t) = (A v, t + 1).  Over the standard
triangulation of the torus (edges (1,0), (0,1), (1,1)) the slab 0 <= t <= 1
is cut into two prisms, each split into three tetrahedra compatibly along
shared vertical squares.  When A maps the standard triangulation to one
that differs by a single flip, one more tetrahedron layered on the top
performs that flip, and the new top is glued to the bottom by phi.
"""
from __future__ import annotations

from itertools import product

from . import gl2
from .gluing import GluingTable

_DIRS = ((1, 0), (0, 1), (1, 1))
_TRIANGLES = (((0, 0), (1, 0), (1, 1)), ((0, 0), (0, 1), (1, 1)))  # vertices in edge order


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _key(points):
    """Face points up to integer translation in the plane."""
    lo = min(points)
    return tuple(sorted((x - lo[0], y - lo[1], t) for x, y, t in points)), lo


def _direction(a, b):
    d = (b[0] - a[0], b[1] - a[1])
    return d if d > (0, 0) else (-d[0], -d[1])


def torus_bundle_table(a) -> GluingTable:
    """Seven-tetrahedron table of the bundle, for monodromy one flip away
    from preserving the standard triangulation."""
    a = gl2.as_matrix(a)
    gl2.require_unimodular(a)
    image = {_direction((0, 0), _apply(a, d)) for d in _DIRS}
    gone = [d for d in _DIRS if d not in image]
    fresh = [d for d in image if d not in _DIRS]
    if len(gone) != 1 or len(fresh) != 1:
        raise ValueError("monodromy must move the standard triangulation by one flip")
    old, new = gone[0], fresh[0]

    tets = []  # (points, role of each face: 'side', 'top', 'bottom', 'layer-low', 'layer-high')
    for tri in _TRIANGLES:
        p, q, r = tri
        lo = [(x, y, 0) for x, y in tri]
        hi = [(x, y, 1) for x, y in tri]
        for pts in ((lo[0], lo[1], lo[2], hi[2]), (lo[0], lo[1], hi[1], hi[2]),
                    (lo[0], hi[0], hi[1], hi[2])):
            tets.append(pts)
    # the two triangles on the edge from 0 to `old` span the layered tetrahedron
    apexes = []
    for tri, shift in product(_TRIANGLES, product(range(-2, 3), repeat=2)):
        pts = [_add(v, shift) for v in tri]
        if (0, 0) in pts and old in pts:
            apexes.append(next(v for v in pts if v not in ((0, 0), old)))
    if len(apexes) != 2 or _direction(*apexes) != new:
        raise ValueError("flip quadrilateral not found")
    layer = tuple((x, y, 1) for x, y in ((0, 0), old, apexes[0], apexes[1]))
    tets.append(layer)
    high_pair = {layer[2], layer[3]}

    classes = {}
    for t, pts in enumerate(tets):
        for f in range(4):
            face = [pts[v] for v in range(4) if v != f]
            levels = {pt[2] for pt in face}
            if t == len(tets) - 1:
                group = "high" if high_pair <= set(face) else "low"
                mapped = face
            elif levels == {0}:
                group = "high"
                mapped = [_apply(a, pt[:2]) + (1,) for pt in face]
            elif levels == {1}:
                group, mapped = "low", face
            else:
                group, mapped = "side", face
            key, lo = _key(mapped)
            local = {(x - lo[0], y - lo[1], z): v
                     for v, (x, y, z) in zip((v for v in range(4) if v != f), mapped)}
            classes.setdefault((group, key), []).append((t, f, local))
    gluings = []
    for members in classes.values():
        if len(members) != 2:
            raise AssertionError("face classes must pair up")
        (t, f, m1), (u, g, m2) = members
        perm = [None] * 4
        perm[f] = g
        for pt, v in m1.items():
            perm[v] = m2[pt]
        gluings.append((t, f, u, g, tuple(perm)))
    return GluingTable.from_gluings(len(tets), gluings)
