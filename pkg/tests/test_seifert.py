from fractions import Fraction

import pytest

from spinecensus.seifert import (ANNULUS_ONE_MIRROR, DISC, MOBIUS, Geometry, SeifertData,
                                 chi_orb, classify_geometry, glue_bases, normalize_cone)


def test_cone_normalization():
    assert normalize_cone(5, 4) == (5, 1)
    assert normalize_cone(3, 2) == (3, 1)
    with pytest.raises(ValueError):
        normalize_cone(4, 2)
    with pytest.raises(ValueError):
        normalize_cone(1, 0)


def test_chi_orb_examples():
    rp2 = SeifertData(False, 1, cones=((2, 1), (2, 1)))
    assert chi_orb(rp2) == 0
    disc_mirror = SeifertData(True, 0, mirrors=1, cones=((3, 1), (2, 1)))
    assert chi_orb(disc_mirror) == Fraction(-1, 6)
    assert chi_orb(SeifertData(False, 2)) == 0


def test_geometry_table():
    flat = SeifertData(False, 2)
    assert classify_geometry(flat) is Geometry.E3
    assert classify_geometry(SeifertData(True, 0, mirrors=1, cones=((3, 1), (2, 1)))) is Geometry.H2xR
    sphere3 = SeifertData(True, 0, cones=((2, 1), (3, 1)))
    assert classify_geometry(sphere3, euler=1) is Geometry.S3
    assert classify_geometry(sphere3) is Geometry.S2xR
    torus = SeifertData(True, 1)
    assert classify_geometry(torus, euler=1) is Geometry.NIL
    assert classify_geometry(SeifertData(True, 2), euler=1) is Geometry.SL2


def test_geometry_needs_closed_base():
    with pytest.raises(ValueError):
        classify_geometry(DISC)


def test_nonorientable_euler_number_is_zero():
    with pytest.raises(ValueError):
        SeifertData(False, 1, total_orientable=False, euler=Fraction(1))


def test_glue_bases():
    assert glue_bases(MOBIUS, MOBIUS) == SeifertData(False, 2)
    assert chi_orb(glue_bases(MOBIUS, ANNULUS_ONE_MIRROR)) == 0
    assert glue_bases(DISC, DISC).closed


@pytest.mark.parametrize("base", [SeifertData(False, 1), SeifertData(True, 0, mirrors=1),
                                  SeifertData(True, 1), SeifertData(False, 2, cones=((3, 1),))])
@pytest.mark.parametrize("cone", [(2, 1), (3, 1), (5, 2)])
def test_chi_orb_drops_by_cone_defect(base, cone):
    bigger = SeifertData(base.orientable_base, base.genus, base.boundary, base.mirrors,
                         base.cones + (cone,))
    assert chi_orb(bigger) == chi_orb(base) - (1 - Fraction(1, cone[0]))


def test_geometry_table_is_exhaustive():
    for d in (SeifertData(True, 0, cones=((2, 1),)), SeifertData(True, 1),
              SeifertData(True, 2)):
        sign = (chi_orb(d) > 0) - (chi_orb(d) < 0)
        for euler in (0, 1):
            want = {(1, 0): Geometry.S2xR, (1, 1): Geometry.S3, (0, 0): Geometry.E3,
                    (0, 1): Geometry.NIL, (-1, 0): Geometry.H2xR, (-1, 1): Geometry.SL2}
            assert classify_geometry(d, euler) is want[(sign, euler)]
