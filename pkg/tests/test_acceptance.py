"""Acceptance criteria, one test each.  Every test prints a single
PASS/FAIL line (shown even under output capture) and then asserts."""
import time
from fractions import Fraction
from math import gcd

import pytest

from conftest import load_signatures
from oracles import orientable_bruteforce
from spinecensus import gl2
from spinecensus.assembling import (attach, block_b4, c7_examples, classify_torus_bundle,
                                    d2_piece, nonorientable_c6_census)
from spinecensus.census import count_spines
from spinecensus.cli import main
from spinecensus.enumerate import PruneFlags, accept, enumerate_signatures
from spinecensus.isosig import from_signature
from spinecensus.seifert import Geometry
from spinecensus.spine import dual_spine
from spinecensus.stiefel import (sigma_stats, stiefel_whitney_surface, surface_topology,
                                 w1_cocycle)
from spinecensus.theta_farey import (BASE, INF, LensSpace, Slope, ThetaGraph, apply_gl2, flip,
                                     flip_distance, flip_distance_bfs, lens_complexity,
                                     lens_complexity_oracle, slope_depths, theta)

LENS_ROW = [3, 2, 3, 6, 10, 20, 36, 72, 136, 272]


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else ""))
        assert ok, detail
    return emit


def test_criterion_1_lens_census(report, capsys):
    start = time.perf_counter()
    code = main(["lens-census", "--cmax", "9", "--check"])
    elapsed = time.perf_counter() - start
    lines = capsys.readouterr().out.splitlines()[1:]
    counts = [int(line.split("\t")[1]) for line in lines]
    depths = slope_depths(200)
    disagree = []
    seen = set()
    for p in range(1, 201):
        for q in range(p):
            if gcd(p, q) != 1:
                continue
            L = LensSpace.of(p, q)
            if L in seen:
                continue
            seen.add(L)
            if lens_complexity(L) != lens_complexity_oracle(L, depths):
                disagree.append(str(L))
    ok = code == 0 and counts == LENS_ROW and elapsed < 5 and not disagree
    report("1 lens census", ok,
           f"counts={counts} time={elapsed:.2f}s oracle checked {len(seen)} lens spaces, "
           f"{len(disagree)} disagreements")


def test_criterion_2_nonorientable_c6(report, capsys):
    start = time.perf_counter()
    code = main(["nonorientable-census"])
    rows = [r for r in nonorientable_c6_census() if r.complexity == 6]
    elapsed = time.perf_counter() - start
    capsys.readouterr()
    flat = [r for r in rows if r.geometry is Geometry.E3]
    sol = [r for r in rows if r.geometry is Geometry.SOL]
    ok = (code == 0 and len(rows) == 5 and len(flat) == 4 and len(sol) == 1
          and sol[0].monodromy == ((1, 1), (1, 0)) and elapsed < 5)
    report("2 non-orientable c=6 census", ok,
           f"{len(flat)} flat ({', '.join(r.h1 for r in flat)}), {len(sol)} Sol "
           f"{sol[0].monodromy if sol else None}, time={elapsed:.2f}s")


def test_criterion_3_c7_examples(report):
    rows = c7_examples()
    h2 = [r for r in rows if r.geometry is Geometry.H2xR]
    sol = [r for r in rows if r.geometry is Geometry.SOL]
    names = sorted(r.description for r in h2)
    ok = (len(h2) == 2 and all(r.chi_orb == Fraction(-1, 6) and r.ledger == 7 for r in h2)
          and any("RP2(3,1)(2,1)" in n for n in names)
          and any("disc + 1 mirror(3,1)(2,1)" in n for n in names)
          and len(sol) == 1 and sol[0].monodromy == ((2, 1), (1, 0)) and sol[0].ledger == 7)
    report("3 c=7 constructions", ok,
           f"{names}, chi_orb={[str(r.chi_orb) for r in h2]}, ledgers="
           f"{[r.ledger for r in rows]}, Sol monodromy={[r.monodromy for r in sol]}")


def test_criterion_4_gl2_normal_form(report):
    start = time.perf_counter()
    targets = {1: gl2.SOL_PLUS, -1: gl2.SOL_MINUS}
    nf = {t: gl2.normal_form(m) for t, m in targets.items()}
    checked, bad = 0, []
    rng = range(-20, 21)
    for a in rng:
        for tr in (-1, 0, 1):
            d = tr - a
            if abs(d) > 20:
                continue
            for b in rng:
                if b == 0:
                    continue
                bc = a * d + 1  # det = ad - bc = -1
                if bc % b:
                    continue
                c = bc // b
                if abs(c) > 20:
                    continue
                m = ((a, b), (c, d))
                if gl2.is_periodic(m):
                    continue
                checked += 1
                p = gl2.find_conjugator(m, targets[tr])
                cls = classify_torus_bundle(m)
                if p is None or gl2.conjugate(p, m) != targets[tr] \
                        or cls.normal_form != nf[tr] or cls.geometry is not Geometry.SOL:
                    bad.append(m)
    elapsed = time.perf_counter() - start
    ok = checked > 0 and not bad and elapsed < 60
    report("4 GL2 normal form", ok,
           f"{checked} matrices, {len(bad)} failures, time={elapsed:.1f}s")


@pytest.mark.slow
def test_criterion_5_spine_duality(report, manifest):
    start = time.perf_counter()
    problems = []
    totals = {}
    for n in range(1, 5):
        sigs = enumerate_signatures(n)
        if sigs != load_signatures(n):
            problems.append(f"n={n}: enumeration differs from frozen fixture")
        totals[n] = len(sigs)
        if count_spines(n, signatures=sigs).as_dict() != manifest["one_vertex"][str(n)]:
            problems.append(f"n={n}: counts differ from manifest")
        for sig in sigs:
            table = from_signature(sig)
            spine = dual_spine(table)
            cells = (spine.num_vertices, len(spine.edges), len(spine.faces))
            if cells != (n, 2 * n, n + 1) or spine.euler_characteristic != 1:
                problems.append(f"{sig}: cells {cells}")
            orientable = w1_cocycle(table).orientable
            if orientable != orientable_bruteforce(table.n, table.pairings):
                problems.append(f"{sig}: orientation disagrees with brute force")
            sigma = stiefel_whitney_surface(spine)
            if bool(sigma.face_set) == orientable:
                problems.append(f"{sig}: sigma emptiness vs orientability")
            if not sigma.face_set:
                continue
            topo = surface_topology(spine, sigma)
            stats = sigma_stats(spine, sigma, topo)
            comps = topo.components
            if stats.f - stats.v3 - stats.v4 != sum(c.euler_characteristic for c in comps):
                problems.append(f"{sig}: Euler identity")
            if all(c.orientable for c in comps) and \
                    stats.v3 + stats.v4 != sum(2 * (c.genus - 1) for c in comps) + stats.f:
                problems.append(f"{sig}: v3+v4 = 2(g-1)+f fails")
            if accept(table, PruneFlags(criterion1=True)) and \
                    any(not c.orientable or c.is_sphere for c in comps):
                problems.append(f"{sig}: sigma component non-orientable or a sphere")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 600
    report("5 spine duality suite", ok,
           f"tables per n={totals}, {len(problems)} problems {problems[:3]}, time={elapsed:.0f}s")


def test_criterion_6_theta_calculus(report):
    import random
    start = time.perf_counter()
    rnd = random.Random(20261018)
    gens = (((0, -1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1)))

    def random_theta(steps):
        th = BASE
        for _ in range(rnd.randrange(steps + 1)):
            th = flip(th, rnd.choice(sorted(th.slopes)))
        return th

    def random_matrix():
        m = gl2.I2
        for _ in range(rnd.randrange(9)):
            m = gl2.mul(m, rnd.choice(gens))
        return m

    failures = 0
    for _ in range(1000):
        th = random_theta(10)
        s = rnd.choice(sorted(th.slopes))
        other = flip(th, s)
        (new,) = other.slopes - th.slopes
        failures += flip(other, new) != th
        m = random_matrix()
        failures += apply_gl2(m, other) != flip(apply_gl2(m, th), apply_gl2(m, s))
        a, b, c = random_theta(5), random_theta(5), random_theta(5)
        d = flip_distance
        failures += not (d(a, b) == d(b, a) == flip_distance_bfs(a, b)
                         and d(a, c) <= d(a, b) + d(b, c) and (d(a, b) == 0) == (a == b))
    fixed = (flip(BASE, Slope(1, 1)) == ThetaGraph.of(Slope(0, 1), Slope(-1, 1), INF)
             and apply_gl2(((2, 1), (1, 0)), BASE) == ThetaGraph.of(Slope(2, 1), INF, Slope(3, 1)))
    elapsed = time.perf_counter() - start
    ok = failures == 0 and fixed and elapsed < 5
    report("6 theta calculus", ok,
           f"1000 rounds, {failures} failures, fixed cases {'ok' if fixed else 'wrong'}, "
           f"time={elapsed:.2f}s")


def test_criterion_7_ledgers(report):
    two = d2_piece(2)
    three = d2_piece(3)
    by_hand_two = attach(attach(block_b4(), 1, "B2", Slope(2, 1)), 0, "B2", Slope(2, 1))
    cones2 = {f.base.cones for f in two.fibrations}
    cones3 = {f.base.cones for f in three.fibrations}
    ok = (two.ledger == 3 == 3 + 0 + 0 and by_hand_two.ledger == 3
          and three.ledger == 4 == 3 + 1 + 0 + 0
          and two.markings == three.markings == (theta(-1),)
          and ((2, 1), (2, 1)) in cones2 and ((3, 1), (2, 1)) in cones3)
    report("7 ledger reproduction", ok,
           f"(D2xS1)_(2,2) ledger {two.ledger} via {two.trace}; "
           f"(D2xS1)_(3,2) ledger {three.ledger} via {three.trace}")
