"""Canonical signatures of gluing tables.

The signature is the lexicographically smallest serialization over all
breadth-first relabelings, one for each starting tetrahedron and starting
vertex labeling.  Two tables have equal signatures iff they are isomorphic.
"""
from __future__ import annotations

import string

from .gluing import GluingError, GluingTable
from .perm import COMPOSE, INVERSE, PERM_INDEX, PERMS

_DIGITS = string.digits + string.ascii_lowercase


def _b36(x, width=1):
    out = ""
    while True:
        x, r = divmod(x, 36)
        out = _DIGITS[r] + out
        if x == 0:
            break
    return out.rjust(width, "0")


def _relabeled_code(rows, n, start, rho0, best):
    """Serialization from one start; returns None once it exceeds ``best``."""
    index = {start: 0}
    labels = {start: rho0}
    order = [start]
    code = []
    pos = 0
    tight = best is not None
    while pos < len(order):
        t = order[pos]
        rt = labels[t]
        inv = INVERSE[rt]
        inv_perm = PERMS[inv]
        for newf in range(4):
            entry = rows[t][inv_perm[newf]]
            if entry is None:
                pair = (n, 0)
            else:
                u, pi = entry
                if u not in index:
                    index[u] = len(order)
                    order.append(u)
                    labels[u] = COMPOSE[rt][INVERSE[pi]]
                pair = (index[u], COMPOSE[labels[u]][COMPOSE[pi][inv]])
            for x in pair:
                if tight:
                    b = best[len(code)]
                    if x > b:
                        return None
                    if x < b:
                        tight = False
                code.append(x)
        pos += 1
    if len(order) != n:
        raise GluingError("triangulation is disconnected")
    return code


def canonical_code(table: GluingTable):
    if table.n == 0:
        raise GluingError("empty triangulation")
    rows = [[None if e is None else (e[0], PERM_INDEX[e[2]]) for e in row]
            for row in table.pairings]
    best = None
    for start in range(table.n):
        for rho in range(24):
            code = _relabeled_code(rows, table.n, start, rho, best)
            if code is not None:
                best = code
    return best


def canonical_signature(table: GluingTable) -> str:
    code = canonical_code(table)
    width = len(_b36(max(table.n, 23)))
    return "sig:" + _b36(width) + _b36(table.n, width) + "".join(_b36(x, width) for x in code)


def from_signature(sig: str) -> GluingTable:
    """Rebuild the canonically labeled table encoded by ``sig``."""
    if not sig.startswith("sig:") or len(sig) < 6:
        raise GluingError(f"not a signature: {sig!r}")
    body = sig[4:]
    width = int(body[0], 36)
    nums = [int(body[i:i + width], 36) for i in range(1, len(body), width)]
    n, code = nums[0], nums[1:]
    if len(code) != 8 * n:
        raise GluingError("signature length mismatch")
    gluings = []
    for t in range(n):
        for f in range(4):
            u, pi = code[8 * t + 2 * f: 8 * t + 2 * f + 2]
            if u == n:
                continue
            p = PERMS[pi]
            gluings.append((t, f, u, p[f], p))
    return GluingTable.from_gluings(n, gluings)
