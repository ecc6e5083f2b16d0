"""Manifolds with marked boundary, the small bricks, and the assembling
calculus with complexity ledgers.

Every boundary torus has slope coordinates: the slope p/q is the curve
p*a + q*b, so a is the slope inf and b the slope 0.  A gluing matrix M sends
the coordinates of the first torus to those of the second, and identifies
the curve x with M x.

Each marked manifold carries a small homology model (an abelian group
presentation plus the image of a and b for every boundary torus) and the
Seifert fibrations that are known for it, each recorded as a base orbifold
and the fiber slope on every boundary torus.  Gluing two fibrations whose
fibers are matched by M glues their bases; this is how the case analyses
below are cross-checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction

from . import gl2
from .gluing import abelian_invariants
from .seifert import (ANNULUS_ONE_MIRROR, MOBIUS, PANTS, Geometry, SeifertData,
                      chi_orb, classify_geometry, glue_bases)
from .theta_farey import BASE, INF, Slope, ThetaGraph, apply_gl2, flip, flip_distance, theta


class AssemblyError(ValueError):
    pass


# ------------------------------------------------------------------ homology

@dataclass(frozen=True)
class H1Model:
    ngens: int
    relations: tuple
    tori: tuple  # per boundary torus: (image of a, image of b)

    def _vec(self, torus, slope_vec):
        a, b = self.tori[torus]
        p, q = slope_vec
        return tuple(p * x + q * y for x, y in zip(a, b))

    def fill(self, torus, slope: Slope):
        rel = self._vec(torus, (slope.p, slope.q))
        tori = self.tori[:torus] + self.tori[torus + 1:]
        return H1Model(self.ngens, self.relations + (rel,), tori)

    def glue(self, t1, other: "H1Model", t2, m):
        shift = self.ngens
        n = self.ngens + other.ngens

        def lift(v, off):
            out = [0] * n
            out[off:off + len(v)] = v
            return tuple(out)

        rels = [lift(r, 0) for r in self.relations] + [lift(r, shift) for r in other.relations]
        for k, x in enumerate(((1, 0), (0, 1))):
            image = (m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1])
            left = lift(self._vec(t1, x), 0)
            right = lift(other._vec(t2, image), shift)
            rels.append(tuple(u - v for u, v in zip(left, right)))
        tori = ([tuple(lift(v, 0) for v in t) for i, t in enumerate(self.tori) if i != t1]
                + [tuple(lift(v, shift) for v in t) for i, t in enumerate(other.tori) if i != t2])
        return H1Model(n, tuple(rels), tuple(tori))

    def self_glue(self, t1, t2, m):
        n = self.ngens + 1  # the new loop crossing the glued torus
        pad = lambda v: tuple(v) + (0,)  # noqa: E731
        rels = [pad(r) for r in self.relations]
        for x in ((1, 0), (0, 1)):
            image = (m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1])
            rels.append(pad(u - v for u, v in zip(self._vec(t1, x), self._vec(t2, image))))
        tori = tuple(tuple(pad(v) for v in t) for i, t in enumerate(self.tori) if i not in (t1, t2))
        return H1Model(n, tuple(rels), tori)

    def invariants(self):
        return abelian_invariants([list(r) for r in self.relations], self.ngens)

    def element_order(self, torus, slope: Slope):
        """Order of the class of a boundary slope (0 for infinite order)."""
        v = self._vec(torus, (slope.p, slope.q))
        free, tors = self.invariants()
        for k in range(1, 2 * max(tors + (1,)) + 1):
            rank = abelian_invariants([list(r) for r in self.relations]
                                      + [[k * x for x in v]], self.ngens)
            if rank == (free, tors):
                return k
        return 0


def format_h1(inv):
    free, tors = inv
    parts = []
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    parts += [f"Z{d}" for d in tors]
    return "+".join(parts) if parts else "0"


# ---------------------------------------------------------- marked manifolds

class Kind(Enum):
    BLOCK = "block"
    SOLID_TORUS = "solid torus"
    TWISTED_I_BUNDLE = "twisted I-bundle"
    SEIFERT = "Seifert piece"
    TORUS_BUNDLE = "torus bundle"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class Fibration:
    base: SeifertData
    fibers: tuple  # fiber slope on each boundary torus


@dataclass(frozen=True)
class MarkedManifold:
    kind: Kind
    name: str
    markings: tuple          # ThetaGraph per boundary torus
    ledger: int
    h1: H1Model
    fibrations: tuple = ()
    orientable: bool | None = True
    product: bool = False    # T x I: both tori share coordinates
    meridian: Slope | None = None
    monodromy: tuple | None = None
    sharp: bool = False      # set only by callers that know the bound is attained
    trace: str = ""

    def __post_init__(self):
        if self.ledger < 0:
            raise AssemblyError("negative ledger")
        if len(self.markings) != len(self.h1.tori):
            raise AssemblyError("one marking per boundary torus is required")
        for fib in self.fibrations:
            if len(fib.fibers) != len(self.markings) or fib.base.boundary != len(self.markings):
                raise AssemblyError("fibration does not match the boundary")

    @property
    def closed(self):
        return not self.markings


def _torus_h1(count):
    return H1Model(2, (), tuple(((1, 0), (0, 1)) for _ in range(count)))


def block_b0():
    """T x I with both ends marked {0,1,inf}."""
    return MarkedManifold(Kind.BLOCK, "B0", (BASE, BASE), 0, _torus_h1(2), product=True,
                          trace="B0")


def block_b3(th: ThetaGraph = BASE, removed: Slope = Slope(0, 1)):
    """T x I marked by a theta-graph and one of its flips."""
    return MarkedManifold(Kind.BLOCK, "B3", (th, flip(th, removed)), 1, _torus_h1(2),
                          product=True, trace="B3")


def solid_torus(th: ThetaGraph, meridian: Slope, name, ledger=0):
    # H1 = Z, the torus curve x maps to its intersection number with the meridian
    a = (-meridian.q,)
    b = (meridian.p,)
    return MarkedManifold(Kind.SOLID_TORUS, name, (th,), ledger, H1Model(1, (), ((a, b),)),
                          meridian=meridian, trace=f"{name}@{meridian}")


def flip_slopes(th: ThetaGraph):
    """New vertices of the three triangles adjacent to ``th``."""
    return frozenset(next(iter(flip(th, s).slopes - th.slopes)) for s in th.slopes)


def block_b1(th: ThetaGraph, meridian: Slope):
    if meridian not in th.slopes:
        raise AssemblyError(f"B1 kills a slope of the marking, not {meridian}")
    return solid_torus(th, meridian, "B1")


def block_b2(th: ThetaGraph, meridian: Slope):
    if meridian not in flip_slopes(th):
        raise AssemblyError(f"B2 kills a slope adjacent to the marking, not {meridian}")
    return solid_torus(th, meridian, "B2")


def block_b4():
    """Pair of pants times a circle, markings theta_0, theta_0, theta_-1."""
    h1 = H1Model(4, ((1, 1, 1, 0),),
                 tuple(((int(i == 0), int(i == 1), int(i == 2), 0), (0, 0, 0, 1)) for i in range(3)))
    fib = Fibration(PANTS, (Slope(0, 1),) * 3)
    return MarkedManifold(Kind.BLOCK, "B4", (theta(0), theta(0), theta(-1)), 3, h1,
                          fibrations=(fib,), trace="B4")


def twisted_i_bundle():
    """Mobius band times a circle, i.e. the non-orientable I-bundle over the
    Klein bottle.  Marked {inf,0,1}; the slope 0 is the fiber over the Mobius
    band and inf the fiber over the annulus with one mirror circle."""
    h1 = H1Model(2, (), (((2, 0), (0, 1)),))  # a = 2c (boundary of the band), b = f
    fibs = (Fibration(MOBIUS, (Slope(0, 1),)), Fibration(ANNULUS_ONE_MIRROR, (INF,)))
    return MarkedManifold(Kind.TWISTED_I_BUNDLE, "TxI~", (BASE,), 3, h1, fibrations=fibs,
                          orientable=False, trace="TxI~")


@dataclass(frozen=True)
class FillEffect:
    brick: str
    action: str             # "fill" or "flip"
    slope: Slope            # killed slope, or the slope removed by the flip
    marking: ThetaGraph | None
    ledger: int


def brick_fill_effect(brick: str, th: ThetaGraph, choice: Slope) -> FillEffect:
    """What attaching B1, B2 or B3 does to a torus marked ``th``."""
    if brick == "B1":
        if choice not in th.slopes:
            raise AssemblyError("B1 must kill a slope of the marking")
        return FillEffect("B1", "fill", choice, None, 0)
    if brick == "B2":
        if choice not in flip_slopes(th):
            raise AssemblyError("B2 must kill a slope adjacent to the marking")
        return FillEffect("B2", "fill", choice, None, 0)
    if brick == "B3":
        if choice not in th.slopes:
            raise AssemblyError("B3 flips away a slope of the marking")
        return FillEffect("B3", "flip", choice, flip(th, choice), 1)
    raise AssemblyError(f"unknown brick {brick}")


def attach(m: MarkedManifold, torus: int, brick: str, choice: Slope) -> MarkedManifold:
    """Assemble a B1, B2 or B3 onto one torus by the identity on markings."""
    th = m.markings[torus]
    effect = brick_fill_effect(brick, th, choice)
    if effect.action == "flip":
        block = block_b3(th, choice)
    elif brick == "B1":
        block = block_b1(th, choice)
    else:
        block = block_b2(th, choice)
    return assemble(m, torus, block, 0, gl2.I2)


# --------------------------------------------------------------- assembling

def _fill_fibration(fib: Fibration, torus, meridian: Slope):
    """Effect of a Dehn filling on a fibration, or None if it does not extend."""
    h = fib.fibers[torus]
    delta = abs(meridian.p * h.q - meridian.q * h.p)
    if delta == 0:
        return None
    cone = None
    if delta >= 2:
        # position of the meridian along the fiber, read in a basis (x, h)
        x = _complement(h)
        coef_h = meridian.p * x.q - meridian.q * x.p
        coef_x = meridian.p * h.q - meridian.q * h.p
        sign = 1 if coef_x > 0 else -1
        cone = (abs(coef_x), (sign * coef_h) % abs(coef_x))
    base = fib.base.cap(cone)
    return Fibration(base, fib.fibers[:torus] + fib.fibers[torus + 1:])


def _complement(h: Slope):
    """Some slope meeting ``h`` exactly once."""
    if h.q == 0:
        return Slope(0, 1)
    if h.q == 1:
        return INF
    s = pow(h.p, -1, h.q)
    return Slope.of((h.p * s - 1) // h.q, s)


def _drop(seq, i):
    return tuple(seq[:i]) + tuple(seq[i + 1:])


def assemble(m1: MarkedManifold, t1: int, m2: MarkedManifold, t2: int, psi,
             sharp: bool = False) -> MarkedManifold:
    """Glue torus ``t1`` of ``m1`` to torus ``t2`` of ``m2`` by the matrix ``psi``.

    ``psi`` must carry the marking of ``t1`` onto the marking of ``t2``.
    The ledger is the sum of the two ledgers.
    """
    psi = gl2.as_matrix(psi)
    gl2.require_unimodular(psi)
    if apply_gl2(psi, m1.markings[t1]) != m2.markings[t2]:
        raise AssemblyError(f"psi sends {m1.markings[t1]} to "
                            f"{apply_gl2(psi, m1.markings[t1])}, not {m2.markings[t2]}")
    if m2.product and not m1.product:
        # transport across T x I: only the marking of t1 changes
        other = 1 - t2
        markings = list(m1.markings)
        back = gl2.inv(psi)
        markings[t1] = apply_gl2(back, m2.markings[other])
        return replace(m1, markings=tuple(markings), ledger=m1.ledger + m2.ledger,
                       sharp=sharp,
                       trace=f"{m1.trace} + {m2.trace}", kind=_composite_kind(m1))
    if m1.product and not m2.product:
        return assemble(m2, t2, m1, t1, gl2.inv(psi), sharp)
    h1 = m1.h1.glue(t1, m2.h1, t2, psi)
    markings = _drop(m1.markings, t1) + _drop(m2.markings, t2)
    fibrations = []
    if m2.meridian is not None or m1.meridian is not None:
        piece, t, solid, inv = (m1, t1, m2, gl2.inv(psi)) if m2.meridian is not None \
            else (m2, t2, m1, psi)
        meridian = apply_gl2(inv, solid.meridian)
        for fib in piece.fibrations:
            new = _fill_fibration(fib, t, meridian)
            if new is not None:
                fibrations.append(new)
    else:
        for f1 in m1.fibrations:
            for f2 in m2.fibrations:
                if apply_gl2(psi, f1.fibers[t1]) == f2.fibers[t2]:
                    fibrations.append(Fibration(glue_bases(f1.base, f2.base),
                                                _drop(f1.fibers, t1) + _drop(f2.fibers, t2)))
    orientable = None if None in (m1.orientable, m2.orientable) else m1.orientable and m2.orientable
    kind = Kind.SEIFERT if fibrations else Kind.COMPOSITE
    return MarkedManifold(kind, f"({m1.name} + {m2.name})", markings, m1.ledger + m2.ledger,
                          h1, tuple(_dedup(fibrations)), orientable, sharp=sharp,
                          trace=f"{m1.trace} + {m2.trace}")


def _composite_kind(m):
    return m.kind if m.kind in (Kind.SEIFERT, Kind.TWISTED_I_BUNDLE) else Kind.COMPOSITE


def _dedup(items):
    out = []
    for x in items:
        if x not in out:
            out.append(x)
    return out


def self_assemble(m: MarkedManifold, t1: int, t2: int, psi, sharp: bool = False) -> MarkedManifold:
    """Glue two tori of ``m`` to each other; the ledger grows by 6.

    ``psi`` must send the marking of ``t1`` to the marking of ``t2`` or to
    a theta-graph one flip away from it.
    """
    psi = gl2.as_matrix(psi)
    gl2.require_unimodular(psi)
    if t1 == t2:
        raise AssemblyError("self-assembling needs two distinct tori")
    image = apply_gl2(psi, m.markings[t1])
    if flip_distance(image, m.markings[t2]) > 1:
        raise AssemblyError(f"psi sends {m.markings[t1]} to {image}, "
                            f"more than one flip from {m.markings[t2]}")
    h1 = m.h1.self_glue(t1, t2, psi)
    markings = tuple(th for i, th in enumerate(m.markings) if i not in (t1, t2))
    if m.product:
        return MarkedManifold(Kind.TORUS_BUNDLE, f"T-bundle{_mat_text(psi)}", markings,
                              m.ledger + 6, h1, orientable=gl2.det(psi) == 1,
                              monodromy=psi, sharp=sharp,
                              trace=f"self({m.trace}, {_mat_text(psi)})")
    return MarkedManifold(Kind.COMPOSITE, f"self({m.name})", markings, m.ledger + 6, h1,
                          orientable=None, sharp=sharp, trace=f"self({m.trace}, {_mat_text(psi)})")


def _mat_text(m):
    return "[[{},{}],[{},{}]]".format(m[0][0], m[0][1], m[1][0], m[1][1])


def marking_maps(src: ThetaGraph, dst: ThetaGraph, both_signs=False):
    """All matrices sending the triple ``src`` onto ``dst`` (one per sign
    class unless ``both_signs``), in a deterministic order."""
    from itertools import permutations
    u, v, w = sorted(src.slopes)
    out = []
    for a, b, c in permutations(sorted(dst.slopes)):
        for e1 in (1, -1):
            for e2 in (1, -1):
                src_m = ((u.p, v.p), (u.q, v.q))
                dst_m = ((e1 * a.p, e2 * b.p), (e1 * a.q, e2 * b.q))
                m = gl2.mul(dst_m, gl2.inv(src_m))
                if abs(gl2.det(m)) == 1 and apply_gl2(m, w) == c:
                    if both_signs or gl2.neg(m) not in out:
                        out.append(m)
    return out


# ------------------------------------------------------------ torus bundles

@dataclass(frozen=True)
class TorusBundleClass:
    geometry: Geometry
    normal_form: tuple
    periodic: bool


def classify_torus_bundle(a) -> TorusBundleClass:
    """Periodic monodromy gives a flat bundle, Anosov monodromy a Sol bundle."""
    a = gl2.as_matrix(a)
    gl2.require_unimodular(a)
    nf = gl2.normal_form(a)
    if gl2.is_periodic(a):
        return TorusBundleClass(Geometry.E3, nf, True)
    tr = abs(gl2.trace(a))
    if gl2.det(a) == 1 and tr == 2:
        return TorusBundleClass(Geometry.NIL, nf, False)
    return TorusBundleClass(Geometry.SOL, nf, False)


# ------------------------------------------------------------ case analyses

_ZERO, _ONE, _MINUS_ONE = Slope(0, 1), Slope(1, 1), Slope(-1, 1)


def _slope_map(psi, src):
    psi = gl2.as_matrix(psi)
    if apply_gl2(psi, src) != BASE:
        raise AssemblyError(f"psi does not send {src} to {BASE}")
    return {s: apply_gl2(psi, s) for s in src.slopes}


def classify_two_twisted(psi) -> SeifertData:
    """Base of a fibration of two twisted I-bundles glued by ``psi``."""
    f = _slope_map(psi, BASE)
    inv = {v: k for k, v in f.items()}
    if f[_ZERO] == _ZERO:
        d = SeifertData(False, 2)
    elif f[_ZERO] == INF or inv[_ZERO] == INF:
        d = SeifertData(False, 1, mirrors=1)
    elif f[INF] == INF:
        d = SeifertData(True, 0, mirrors=2)
    else:
        raise AssemblyError("psi is not realizable")
    return replace(d, total_orientable=False)


def classify_seifert_twisted(piece: SeifertData, psi) -> SeifertData:
    """Base of a fibration of a disc piece with cones (a,1), (2,1) glued to
    the twisted I-bundle; ``psi`` sends {inf,-1,0} to {inf,0,1}.

    The cone fibration has fiber 0 on the piece.  When a = 2 the piece is
    also fibered over the Mobius band with fiber -1.
    """
    if not (piece.orientable_base and piece.genus == 0 and piece.boundary == 1
            and piece.mirrors == 0 and len(piece.cones) == 2 and (2, 1) in piece.cones):
        raise AssemblyError("piece must be a disc with cones (a,1), (2,1)")
    a = max(p for p, _ in piece.cones)
    f = _slope_map(psi, theta(-1))
    if f[_ZERO] == _ZERO:
        d = glue_bases(piece, MOBIUS)
    elif f[_ZERO] == INF:
        d = glue_bases(piece, ANNULUS_ONE_MIRROR)
    elif a != 2:
        raise AssemblyError("the Mobius fibration exists only when a = 2")
    elif f[_MINUS_ONE] == _ZERO:
        d = glue_bases(MOBIUS, MOBIUS)
    elif f[_MINUS_ONE] == INF:
        d = glue_bases(MOBIUS, ANNULUS_ONE_MIRROR)
    else:
        raise AssemblyError("psi is not a marking match")
    return replace(d, total_orientable=False)


def d2_piece(a: int) -> MarkedManifold:
    """(D2 x S1) with cones (a,1), (2,1) and marking theta_-1, built from
    B4 and fillings; a = 2 uses B2 twice, a = 3 inserts one B3."""
    if a not in (2, 3):
        raise ValueError("only a = 2 or a = 3 is built here")
    m = attach(block_b4(), 1, "B2", Slope(2, 1))        # tori now: 0 (theta_0), 1 (theta_-1)
    if a == 3:
        m = attach(m, 0, "B3", _ZERO)                   # theta_0 -> {1, 2, inf}
        m = attach(m, 0, "B2", Slope(3, 1))
    else:
        m = attach(m, 0, "B2", Slope(2, 1))
    fibs = list(m.fibrations)
    if a == 2:
        # the orientable I-bundle over the Klein bottle; -1 is its Mobius fiber
        fibs.append(Fibration(MOBIUS, (_MINUS_ONE,)))
    return replace(m, kind=Kind.SEIFERT, name=f"(D2xS1)_{{{a},2,theta_-1}}",
                   fibrations=tuple(fibs))


# ----------------------------------------------------------------- censuses

@dataclass(frozen=True)
class CensusRow:
    complexity: int
    description: str
    geometry: Geometry
    chi_orb: Fraction | None
    monodromy: tuple | None
    ledger: int
    trace: str
    h1: str
    fibrations: tuple = field(default=())

    def as_dict(self):
        return {
            "complexity": self.complexity,
            "description": self.description,
            "geometry": self.geometry.value,
            "chi_orb": None if self.chi_orb is None else
            f"{self.chi_orb.numerator}/{self.chi_orb.denominator}",
            "monodromy": None if self.monodromy is None else [list(r) for r in self.monodromy],
            "ledger": self.ledger,
            "trace": self.trace,
            "h1": self.h1,
            "fibrations": list(self.fibrations),
        }


def _closed_geometry(m: MarkedManifold):
    """Geometry plus chi_orb from every fibration; all must agree."""
    geoms = {classify_geometry(f.base) for f in m.fibrations}
    if len(geoms) != 1:
        raise AssemblyError(f"fibrations of {m.name} disagree on the geometry")
    chis = {chi_orb(f.base) for f in m.fibrations}
    return geoms.pop(), chis


def c6_candidates():
    """Every configuration of the three shapes, unclassified."""
    tib = twisted_i_bundle()
    out = []
    for psi in marking_maps(BASE, BASE):
        out.append(assemble(tib, 0, tib, 0, psi, sharp=True))
    piece = d2_piece(2)
    for psi in marking_maps(theta(-1), BASE):
        out.append(assemble(piece, 0, tib, 0, psi, sharp=True))
    b0 = block_b0()
    targets = {BASE} | {flip(BASE, s) for s in BASE.slopes}
    for th in sorted(targets, key=str):
        for psi in marking_maps(BASE, th, both_signs=True):
            if gl2.det(psi) == -1:
                out.append(self_assemble(b0, 0, 1, psi, sharp=True))
    return out


def _row_for(m: MarkedManifold, complexity, geometry=None, chis=None, monodromy=None):
    h1 = format_h1(m.h1.invariants())
    return CensusRow(complexity, m.name, geometry, chis, monodromy, m.ledger, m.trace, h1,
                     tuple(sorted({f.base.name() for f in m.fibrations})))


def nonorientable_c6_census():
    """The non-orientable classes reached at complexity 6, deduplicated.

    Flat manifolds are identified by first homology, which separates the
    four non-orientable flat manifolds; Sol bundles by the conjugacy class
    of the monodromy up to inversion.
    """
    flat = {}
    sol = {}
    for m in c6_candidates():
        if m.orientable:
            raise AssemblyError(f"{m.trace} is orientable")
        if m.kind is Kind.TORUS_BUNDLE:
            cls = classify_torus_bundle(m.monodromy)
            if cls.geometry is Geometry.E3:
                key = m.h1.invariants()
                entry = flat.setdefault(key, {"members": [], "fibs": set(), "chis": set()})
                entry["members"].append(m)
                continue
            nf_inv = gl2.normal_form(gl2.inv(m.monodromy))
            key = min(cls.normal_form, nf_inv)
            sol.setdefault(key, []).append((m, cls))
            continue
        geometry, chis = _closed_geometry(m)
        if geometry is not Geometry.E3:
            raise AssemblyError(f"unexpected geometry {geometry} for {m.trace}")
        entry = flat.setdefault(m.h1.invariants(), {"members": [], "fibs": set(), "chis": set()})
        entry["members"].append(m)
        entry["fibs"] |= {f.base.name() for f in m.fibrations}
        entry["chis"] |= chis
    rows = []
    for key in sorted(flat):
        entry = flat[key]
        first = entry["members"][0]
        fibs = tuple(sorted(entry["fibs"]))
        chis = entry["chis"]
        if chis and chis != {Fraction(0)}:
            raise AssemblyError("a flat class has a fibration with chi_orb != 0")
        desc = "flat, H1 = " + format_h1(key)
        desc += "; fibers over " + ", ".join(fibs) if fibs else "; periodic torus bundle"
        rows.append(CensusRow(6, desc, Geometry.E3, Fraction(0) if chis else None, None,
                              first.ledger, first.trace, format_h1(key), fibs))
    for key in sorted(sol):
        m, cls = sol[key][0]
        nf = gl2.SOL_PLUS if key in (gl2.SOL_PLUS, gl2.SOL_MINUS) else key
        rows.append(CensusRow(6, f"torus bundle, monodromy {_mat_text(nf)}", Geometry.SOL,
                              None, nf, m.ledger, m.trace, format_h1(m.h1.invariants())))
    return rows


def c7_examples():
    """Two H2xR Seifert manifolds and one Sol bundle at complexity 7."""
    piece = d2_piece(3)
    tib = twisted_i_bundle()
    rows = []
    for want in (_ZERO, INF):
        psi = next(p for p in marking_maps(theta(-1), BASE) if apply_gl2(p, _ZERO) == want)
        m = assemble(piece, 0, tib, 0, psi)
        cone_fib = [f for f in m.fibrations if f.base.cones]
        base = classify_seifert_twisted(piece.fibrations[0].base, psi)
        if [f.base for f in cone_fib] != [replace(base, total_orientable=None)]:
            raise AssemblyError("generic fiber matching disagrees with the case analysis")
        geometry = classify_geometry(base)
        rows.append(CensusRow(7, "Seifert over " + base.name(), geometry, chi_orb(base), None,
                              m.ledger, m.trace, format_h1(m.h1.invariants()),
                              (base.name(),)))
    b3 = block_b3(BASE, _ZERO)
    a = ((2, 1), (1, 0))
    m = self_assemble(b3, 0, 1, a)
    cls = classify_torus_bundle(a)
    rows.append(CensusRow(7, f"torus bundle, monodromy {_mat_text(a)}", cls.geometry, None, a,
                          m.ledger, m.trace, format_h1(m.h1.invariants())))
    return rows
