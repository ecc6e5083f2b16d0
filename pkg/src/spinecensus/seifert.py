"""Seifert base orbifolds, their orbifold Euler characteristic, and the
geometry of closed Seifert manifolds.

The underlying surface of a base orbifold is stored as a compact surface
whose boundary circles are split into true boundary (tori of the
3-manifold) and mirror circles.  Cone points are pairs (p, q) with p >= 2,
stored with q reduced to min(q, p - q) since non-orientable gluings do not
see the sign of q.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import gcd


class Geometry(Enum):
    S3 = "S3"
    S2xR = "S2xR"
    E3 = "E3"
    NIL = "Nil"
    H2xR = "H2xR"
    SL2 = "SL2~"
    SOL = "Sol"
    OTHER = "NotClassifiedHere"


def normalize_cone(p, q):
    if p < 2 or gcd(p, q) != 1:
        raise ValueError(f"invalid cone point ({p},{q})")
    q %= p
    return (p, min(q, p - q))


@dataclass(frozen=True)
class SeifertData:
    orientable_base: bool
    genus: int            # handles if orientable, cross-caps otherwise
    boundary: int = 0     # true boundary circles
    mirrors: int = 0      # mirror (reflector) circles
    cones: tuple = ()
    total_orientable: bool | None = None  # None when not tracked
    euler: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        if min(self.genus, self.boundary, self.mirrors) < 0:
            raise ValueError("negative surface data")
        if not self.orientable_base and self.genus < 1:
            raise ValueError("non-orientable surface needs a cross-cap")
        object.__setattr__(self, "cones",
                           tuple(sorted((normalize_cone(p, q) for p, q in self.cones), reverse=True)))
        if self.total_orientable is False and self.euler != 0:
            raise ValueError("a non-orientable Seifert manifold has Euler number zero")

    @classmethod
    def from_euler_characteristic(cls, chi, orientable, boundary=0, mirrors=0, cones=(), **kw):
        holes = boundary + mirrors
        if orientable:
            g2 = 2 - chi - holes
            if g2 < 0 or g2 % 2:
                raise ValueError("no orientable surface with these invariants")
            return cls(True, g2 // 2, boundary, mirrors, cones, **kw)
        return cls(False, 2 - chi - holes, boundary, mirrors, cones, **kw)

    @property
    def closed(self):
        return self.boundary == 0

    @property
    def underlying_euler_characteristic(self):
        holes = self.boundary + self.mirrors
        if self.orientable_base:
            return 2 - 2 * self.genus - holes
        return 2 - self.genus - holes

    def add_cone(self, p, q):
        return replace(self, cones=self.cones + ((p, q),))

    def cap(self, cone=None):
        """Fill one true boundary circle by a disc, optionally with a cone point."""
        if self.boundary == 0:
            raise ValueError("no boundary circle to cap")
        cones = self.cones + ((cone,) if cone else ())
        return replace(self, boundary=self.boundary - 1, cones=cones)

    def name(self):
        return base_name(self)


def _surface_name(orientable, genus, holes):
    if orientable:
        names = {(0, 0): "sphere", (0, 1): "disc", (0, 2): "annulus", (0, 3): "pair of pants",
                 (1, 0): "torus"}
        return names.get((genus, holes), f"orientable genus {genus} with {holes} holes")
    names = {(1, 0): "RP2", (1, 1): "Mobius band", (2, 0): "Klein bottle"}
    return names.get((genus, holes), f"{genus} cross-caps with {holes} holes")


def base_name(d: SeifertData):
    parts = [_surface_name(d.orientable_base, d.genus, d.boundary + d.mirrors)]
    if d.mirrors:
        parts.append(f"{d.mirrors} mirror" + ("s" if d.mirrors > 1 else ""))
    text = " + ".join(parts)
    return text + "".join(f"({p},{q})" for p, q in d.cones)


def glue_bases(d1: SeifertData, d2: SeifertData) -> SeifertData:
    """Glue two bases along one true boundary circle each."""
    if d1.boundary < 1 or d2.boundary < 1:
        raise ValueError("both bases need a boundary circle")
    chi = d1.underlying_euler_characteristic + d2.underlying_euler_characteristic
    return SeifertData.from_euler_characteristic(
        chi, d1.orientable_base and d2.orientable_base,
        boundary=d1.boundary + d2.boundary - 2, mirrors=d1.mirrors + d2.mirrors,
        cones=d1.cones + d2.cones)


def self_glue_base(d: SeifertData, orientable_result: bool) -> SeifertData:
    """Glue two boundary circles of one base to each other."""
    if d.boundary < 2:
        raise ValueError("need two boundary circles")
    return SeifertData.from_euler_characteristic(
        d.underlying_euler_characteristic, d.orientable_base and orientable_result,
        boundary=d.boundary - 2, mirrors=d.mirrors, cones=d.cones)


def chi_orb(d: SeifertData) -> Fraction:
    """chi(underlying surface, mirrors and boundary as boundary) - sum(1 - 1/p)."""
    return Fraction(d.underlying_euler_characteristic) - sum(
        (1 - Fraction(1, p) for p, _ in d.cones), Fraction(0))


def classify_geometry(d: SeifertData, euler=0) -> Geometry:
    """Geometry of a closed Seifert manifold from the sign of chi_orb and
    whether the Euler number vanishes."""
    if not d.closed:
        raise ValueError("geometry is only defined here for closed bases")
    if d.total_orientable is False and euler != 0:
        raise ValueError("a non-orientable Seifert manifold has Euler number zero")
    chi = chi_orb(d)
    zero = euler == 0
    if chi > 0:
        return Geometry.S2xR if zero else Geometry.S3
    if chi == 0:
        return Geometry.E3 if zero else Geometry.NIL
    return Geometry.H2xR if zero else Geometry.SL2


# named bases used repeatedly
DISC = SeifertData(True, 0, boundary=1)
MOBIUS = SeifertData(False, 1, boundary=1)
ANNULUS_ONE_MIRROR = SeifertData(True, 0, boundary=1, mirrors=1)
PANTS = SeifertData(True, 0, boundary=3)
