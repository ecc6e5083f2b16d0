"""Gaussian elimination over GF(2) with rows stored as Python ints."""


class InconsistentSystem(ArithmeticError):
    pass


def solve(rows, rhs, nvars):
    """Solve ``A x = b`` over GF(2).

    ``rows[i]`` is a bitmask of the variables in equation ``i``.  Returns
    ``(solution bitmask, nullity)``; raises :class:`InconsistentSystem`.
    """
    pivots = {}  # pivot bit -> (row, rhs)
    for r, b in zip(rows, rhs):
        for bit, (pr, pb) in pivots.items():
            if r >> bit & 1:
                r ^= pr
                b ^= pb
        if r == 0:
            if b:
                raise InconsistentSystem("no solution")
            continue
        bit = r.bit_length() - 1
        for key, (pr, pb) in list(pivots.items()):
            if pr >> bit & 1:
                pivots[key] = (pr ^ r, pb ^ b)
        pivots[bit] = (r, b)
    x = 0
    for bit, (_, b) in pivots.items():
        if b:
            x |= 1 << bit
    return x, nvars - len(pivots)


def rank(rows):
    basis = {}
    for r in rows:
        while r:
            bit = r.bit_length() - 1
            if bit not in basis:
                basis[bit] = r
                break
            r ^= basis[bit]
    return len(basis)
