"""Standard spines dual to one-vertex triangulations.

Spine vertices are tetrahedra, spine edges are glued face pairs (triangles)
and spine faces are triangulation edges.  A face's boundary word lists the
spine edges met while walking around the dual triangulation edge, each with
the direction (+1 or -1) in which it is traversed.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .gluing import GluingError, GluingTable, vertex_count


@dataclass(frozen=True)
class SpineEdge:
    tail: int  # spine vertex at the start of the edge
    head: int
    triangle: tuple = None  # ((t, f), (u, g)) in the triangulation, if known


@dataclass(frozen=True)
class SpineFace:
    boundary: tuple  # ((edge index, +1 | -1), ...)
    source: int = None  # index of the dual triangulation edge, if known


@dataclass(frozen=True)
class StandardSpine:
    num_vertices: int
    edges: tuple
    faces: tuple
    table: GluingTable = None

    @property
    def euler_characteristic(self):
        return self.num_vertices - len(self.edges) + len(self.faces)

    def side_endpoints(self, edge, direction):
        e = self.edges[edge]
        return (e.tail, e.head) if direction > 0 else (e.head, e.tail)

    def face_corners(self, face):
        """Spine vertex at the start of each side of ``face``."""
        return tuple(self.side_endpoints(e, d)[0] for e, d in self.faces[face].boundary)

    def germs(self):
        """For each edge, the list of ``(face, position)`` germs along it."""
        out = [[] for _ in self.edges]
        for fi, face in enumerate(self.faces):
            for pos, (e, _) in enumerate(face.boundary):
                out[e].append((fi, pos))
        return out


def dual_spine(table: GluingTable) -> StandardSpine:
    table.require_closed()
    if vertex_count(table) != 1:
        raise GluingError("not one-vertex")
    edge_index = {}
    edges = []
    for t, f, u, g, _ in table.gluings():
        edge_index[(t, f)] = len(edges)
        edges.append(SpineEdge(t, u, ((t, f), (u, g))))
    faces = []
    for k, cls in enumerate(table.edge_classes):
        word = []
        for tet, _, _, z, _ in cls.steps:
            if (tet, z) in edge_index:
                word.append((edge_index[(tet, z)], 1))
            else:
                u, g, _ = table.pairings[tet][z]
                word.append((edge_index[(u, g)], -1))
        faces.append(SpineFace(tuple(word), k))
    return StandardSpine(table.n, tuple(edges), tuple(faces), table)


def is_standard(s: StandardSpine) -> bool:
    """Check the local models and that every face closes up as a disc."""
    if s.num_vertices == 0 or not s.edges or not s.faces:
        return False
    germ_count = [0] * len(s.edges)
    corner_count = [0] * s.num_vertices
    for face in s.faces:
        if not face.boundary:
            return False
        ends = [s.side_endpoints(e, d) for e, d in face.boundary]
        for (_, end), (start, _) in zip(ends, ends[1:] + ends[:1]):
            if end != start:
                return False
        for e, _ in face.boundary:
            germ_count[e] += 1
        for start, _ in ends:
            corner_count[start] += 1
    if any(c != 3 for c in germ_count):
        return False
    edge_ends = [0] * s.num_vertices
    for e in s.edges:
        edge_ends[e.tail] += 1
        edge_ends[e.head] += 1
    return all(k == 4 for k in edge_ends) and all(k == 6 for k in corner_count)


class Verdict(Enum):
    MINIMAL_CANDIDATE = "minimal-candidate"
    CRITERION_1 = "criterion-1"
    CRITERION_2 = "criterion-2"


def face_is_embedded(s: StandardSpine, face: int) -> bool:
    boundary = s.faces[face].boundary
    corners = s.face_corners(face)
    return (len(set(corners)) == len(corners)
            and len({e for e, _ in boundary}) == len(boundary))


def prune_nonminimal(s: StandardSpine):
    """Return ``(verdict, face index or None)``.

    Criterion 1: an embedded face with at most three vertices.  Criterion 2 is
    only applied in its detectable form, a face with at most two sides on a
    spine with at least three vertices; survivors are candidates, not
    certified minimal spines.
    """
    for fi in range(len(s.faces)):
        if len(s.faces[fi].boundary) <= 3 and face_is_embedded(s, fi):
            return Verdict.CRITERION_1, fi
    if s.num_vertices >= 3:
        for fi, face in enumerate(s.faces):
            if len(face.boundary) <= 2:
                return Verdict.CRITERION_2, fi
    return Verdict.MINIMAL_CANDIDATE, None
