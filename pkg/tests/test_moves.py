import pytest

from spinecensus.bundles import torus_bundle_table
from spinecensus.gluing import GluingError, vertex_count
from spinecensus.isosig import canonical_signature
from spinecensus.moves import neighbours, shrink, three_two, two_three
from spinecensus.spine import dual_spine, is_standard
from spinecensus.stiefel import w1_cocycle

SOL_SIG = "sig:1610203040002g4b503i005l1g544i0029395e1j00334e2l10"


@pytest.fixture(scope="module")
def seven():
    return torus_bundle_table(((1, 1), (1, 0)))


def test_seven_tetrahedron_bundle(seven):
    assert seven.n == 7 and seven.is_closed and vertex_count(seven) == 1
    assert seven.h1_invariants() == (1, ())
    assert not w1_cocycle(seven).orientable
    assert is_standard(dual_spine(seven))


def test_orientable_bundle():
    t = torus_bundle_table(((1, 1), (0, 1)))
    assert w1_cocycle(t).orientable
    assert t.h1_invariants() == (2, ())


def test_bundle_needs_single_flip():
    with pytest.raises(ValueError):
        torus_bundle_table(((2, 1), (1, 0)))


def test_two_three_then_three_two_round_trip(seven):
    base = canonical_signature(seven)
    for t, f, u, _, _ in seven.gluings():
        if t == u:
            continue
        bigger = two_three(seven, t, f)
        assert bigger.n == 8
        new_edge = [e for e, c in enumerate(bigger.edge_classes)
                    if c.degree == 3 and {s[0] for s in c.steps} >= {6, 7}]
        back = {canonical_signature(three_two(bigger, e)) for e in new_edge}
        assert base in back
        break


def test_moves_preserve_homology(seven):
    for nxt in neighbours(seven, 8):
        assert nxt.is_closed
        assert nxt.h1_invariants() == (1, ())


def test_three_two_needs_degree_three(seven):
    e = next(i for i, c in enumerate(seven.edge_classes) if c.degree != 3)
    with pytest.raises(GluingError):
        three_two(seven, e)


def test_shrink_reaches_fixture(seven, sol_table):
    six = shrink(seven, 6)
    assert canonical_signature(six) == SOL_SIG == canonical_signature(sol_table)
