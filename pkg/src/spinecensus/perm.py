"""Permutations of the four vertices of a tetrahedron.

A permutation is a tuple ``p`` with ``p[i]`` the image of vertex ``i``.
"""
from itertools import permutations

PERMS = tuple(permutations(range(4)))
PERM_INDEX = {p: i for i, p in enumerate(PERMS)}
IDENTITY = (0, 1, 2, 3)


def sign(p):
    """Return +1 for even permutations and -1 for odd ones."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


SIGNS = tuple(sign(p) for p in PERMS)


def inverse(p):
    inv = [0] * 4
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def compose(p, q):
    """Return ``p o q`` (apply ``q`` first)."""
    return tuple(p[q[i]] for i in range(4))


def face_vertices(f):
    return tuple(v for v in range(4) if v != f)


def perms_between_faces(f, g):
    """All vertex bijections sending face ``f`` onto face ``g`` (so ``p[f] == g``)."""
    return [p for p in PERMS if p[f] == g]


# index-level tables for hot loops
COMPOSE = tuple(tuple(PERM_INDEX[compose(p, q)] for q in PERMS) for p in PERMS)
INVERSE = tuple(PERM_INDEX[inverse(p)] for p in PERMS)
