"""Integer 2x2 matrices with determinant +-1: arithmetic, periodicity,
conjugacy normal forms and an independent conjugacy test.

Matrices are tuples of rows, ``((a, b), (c, d))``.
"""
from __future__ import annotations

from collections import deque
from itertools import product

I2 = ((1, 0), (0, 1))
SOL_PLUS = ((1, 1), (1, 0))
SOL_MINUS = ((0, 1), (1, -1))  # inverse of SOL_PLUS

_GENERATORS = (((0, -1), (1, 0)), ((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 0), (0, -1)))


def as_matrix(m):
    return ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))


def det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def trace(m):
    return m[0][0] + m[1][1]


def mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def inv(m):
    d = det(m)
    if abs(d) != 1:
        raise ValueError("matrix is not in GL(2, Z)")
    (a, b), (c, e) = m
    return ((e * d, -b * d), (-c * d, a * d))


def neg(m):
    return tuple(tuple(-x for x in row) for row in m)


def conjugate(p, a):
    """Return ``p a p^-1``."""
    return mul(mul(p, a), inv(p))


def require_unimodular(m):
    if abs(det(m)) != 1:
        raise ValueError(f"|det| of {m} is not 1")


def order(m, kmax=12):
    """Least k <= kmax with m^k = I, or None."""
    require_unimodular(m)
    power = m
    for k in range(1, kmax + 1):
        if power == I2:
            return k
        power = mul(power, m)
    return None


def is_periodic(m):
    # finite order elements of GL(2, Z) have order 1, 2, 3, 4 or 6
    return order(m) is not None


def _key(m):
    flat = (m[0][0], m[0][1], m[1][0], m[1][1])
    return (sum(abs(x) for x in flat), tuple(-x for x in flat))


def _box_minimum(a, bound):
    """Best conjugate reachable from ``a`` by generator steps inside the box."""
    seen = {a}
    queue = deque([a])
    best = a
    while queue:
        m = queue.popleft()
        if _key(m) < _key(best):
            best = m
        for g in _GENERATORS:
            c = conjugate(g, m)
            if c not in seen and max(abs(x) for row in c for x in row) <= bound:
                seen.add(c)
                queue.append(c)
    return best


def normal_form(a, start=10, max_bound=1 << 12):
    """Conjugacy representative of least norm, ties broken towards larger
    entries read row by row.

    The search explores conjugates by generator steps inside a box whose
    size doubles until the answer is the same for two consecutive sizes.
    """
    a = as_matrix(a)
    require_unimodular(a)
    bound = max(start, max(abs(x) for row in a for x in row))
    prev, stable = None, 0
    while bound <= max_bound:
        cur = _box_minimum(a, bound)
        stable = stable + 1 if cur == prev else 0
        if stable >= 1:
            return cur
        prev = cur
        bound *= 2
    raise RuntimeError("normal form search did not stabilize")


# ---------------------------------------------------------- conjugacy oracle

def integer_kernel(rows, ncols):
    """Basis of the integer solutions of ``rows . x = 0`` (column reduction)."""
    cols = [[r[j] for r in rows] for j in range(ncols)]
    basis = [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    active = list(range(ncols))
    for i in range(len(rows)):
        while True:
            nz = [j for j in active if cols[j][i] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][i]))
            for j in nz:
                if j == j0:
                    continue
                f = cols[j][i] // cols[j0][i]
                cols[j] = [x - f * y for x, y in zip(cols[j], cols[j0])]
                basis[j] = [x - f * y for x, y in zip(basis[j], basis[j0])]
        nz = [j for j in active if cols[j][i] != 0]
        if nz:
            active.remove(nz[0])
    return [basis[j] for j in active]


def _commutation_rows(a, b):
    """Linear equations in the entries of P expressing ``P a = b P``."""
    rows = []
    for i, j in product(range(2), repeat=2):
        row = [0] * 4
        for k in range(2):
            row[2 * i + k] += a[k][j]   # (P a)_ij
            row[2 * k + j] -= b[i][k]   # (b P)_ij
        rows.append(row)
    return rows


def find_conjugator(a, b, radius=64):
    """Some P in GL(2, Z) with ``P a P^-1 = b``, or None.

    P ranges over small integer combinations of a basis of the lattice of
    all integer P with ``P a = b P``.
    """
    a, b = as_matrix(a), as_matrix(b)
    if det(a) != det(b) or trace(a) != trace(b):
        return None
    kernel = integer_kernel(_commutation_rows(a, b), 4)
    if not kernel:
        return None
    r = 1
    while r <= radius:
        for coeffs in product(range(-r, r + 1), repeat=len(kernel)):
            if max(abs(c) for c in coeffs) != r and r > 1:
                continue
            v = [sum(c * k[t] for c, k in zip(coeffs, kernel)) for t in range(4)]
            p = ((v[0], v[1]), (v[2], v[3]))
            if abs(det(p)) == 1:
                assert conjugate(p, a) == b
                return p
        r += 1
    return None
