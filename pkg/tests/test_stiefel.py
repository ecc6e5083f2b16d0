import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import doubled_tetrahedron, load_signatures
from oracles import orientable_bruteforce
from spinecensus import gf2
from spinecensus.isosig import from_signature
from spinecensus.spine import dual_spine
from spinecensus.stiefel import (SigmaStats, SurfaceError, SurfaceInSpine, edge_w1, sigma_stats,
                                 stiefel_whitney_surface, surface_topology, w1_cocycle)


def small_tables():
    for n in (1, 2, 3):
        for sig in load_signatures(n):
            yield from_signature(sig)


def test_doubled_tetrahedron_orientable():
    t = doubled_tetrahedron()
    assert w1_cocycle(t).orientable
    assert orientable_bruteforce(t.n, t.pairings)


def test_orientability_matches_bruteforce(sol_table):
    for t in list(small_tables()) + [sol_table]:
        assert w1_cocycle(t).orientable == orientable_bruteforce(t.n, t.pairings)


def test_orientability_matches_z2_homology():
    # w1 vanishes on every edge loop iff orientable, for one-vertex tables
    for t in small_tables():
        assert w1_cocycle(t).orientable == (not any(edge_w1(t)))


def test_sigma_empty_iff_orientable(sol_table):
    for t in list(small_tables()) + [sol_table]:
        sigma = stiefel_whitney_surface(dual_spine(t))
        assert sigma.is_cycle
        assert (not sigma.face_set) == w1_cocycle(t).orientable


def test_sigma_unique_under_face_order(sol_table):
    s = dual_spine(sol_table)
    base = stiefel_whitney_surface(s).face_set
    rng = random.Random(7)
    for _ in range(10):
        order = list(range(len(s.faces)))
        rng.shuffle(order)
        assert stiefel_whitney_surface(s, order).face_set == base


def test_sol_sigma_is_one_torus(sol_table):
    s = dual_spine(sol_table)
    sigma = stiefel_whitney_surface(s)
    topo = surface_topology(s, sigma)
    assert len(topo) == 1
    comp = topo.components[0]
    assert (comp.euler_characteristic, comp.orientable, comp.genus) == (0, True, 1)
    stats = sigma_stats(s, sigma, topo)
    assert 2 * stats.v3 + stats.v4 <= 6
    assert stats.v3 + stats.v4 == 2 * (1 - 1) + stats.f


def test_empty_surface_topology(sol_table):
    s = dual_spine(sol_table)
    assert len(surface_topology(s, SurfaceInSpine.from_faces(s, []))) == 0
    with pytest.raises(SurfaceError):
        sigma_stats(s, SurfaceInSpine.from_faces(s, []))


def test_odd_incidence_rejected(sol_table):
    s = dual_spine(sol_table)
    with pytest.raises(SurfaceError):
        surface_topology(s, SurfaceInSpine.from_faces(s, [0]))


def test_sigma_stats_identity_examples():
    torus = SigmaStats(v3=0, v4=4, f=4, g=(1,))
    assert torus.v3 + torus.v4 == 2 * (1 - 1) + torus.f
    genus3 = SigmaStats(v3=0, v4=9, f=5, g=(3,))
    assert genus3.v4 == genus3.f + 4
    assert genus3.euler_characteristic == 2 - 2 * 3


def test_nonorientable_small_sigma_identities():
    for t in small_tables():
        if w1_cocycle(t).orientable:
            continue
        s = dual_spine(t)
        sigma = stiefel_whitney_surface(s)
        topo = surface_topology(s, sigma)
        assert sum(c.euler_characteristic for c in topo.components) == \
            sigma_stats(s, sigma, topo).euler_characteristic


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=10),
    st.integers(0, (1 << n) - 1))))
def test_gf2_solution_satisfies_system(data):
    n, rows, x_true = data
    rhs = [bin(r & x_true).count("1") % 2 for r in rows]
    x, nullity = gf2.solve(rows, rhs, n)
    assert all(bin(r & x).count("1") % 2 == b for r, b in zip(rows, rhs))
    assert nullity == n - gf2.rank(rows)


def test_gf2_inconsistent():
    with pytest.raises(gf2.InconsistentSystem):
        gf2.solve([1, 1], [0, 1], 1)
