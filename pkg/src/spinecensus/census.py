"""Spine censuses and the property report run on enumerated tables."""
from __future__ import annotations

from dataclasses import dataclass, field

from .enumerate import PruneFlags, accept, enumerate_signatures
from .isosig import from_signature
from .spine import dual_spine, is_standard
from .stiefel import (SurfaceError, sigma_stats, stiefel_whitney_surface, surface_topology,
                      w1_cocycle)


@dataclass
class SpineCount:
    n: int
    total: int = 0
    criterion1: int = 0      # survivors of the embedded-face criterion
    candidates: int = 0      # survivors of both pruning rules
    orientable: int = 0
    nonorientable: int = 0
    nonempty_sigma: int = 0
    signatures: list = field(default_factory=list)
    candidate_signatures: list = field(default_factory=list)

    def as_dict(self, with_signatures=False):
        d = {k: getattr(self, k) for k in ("n", "total", "criterion1", "candidates",
                                          "orientable", "nonorientable", "nonempty_sigma")}
        if with_signatures:
            d["signatures"] = list(self.signatures)
            d["candidate_signatures"] = list(self.candidate_signatures)
        return d


def count_spines(n: int, workers: int = 1, signatures=None) -> SpineCount:
    """Counts over all one-vertex n-tetrahedron tables (enumerated unless
    ``signatures`` is supplied)."""
    sigs = enumerate_signatures(n, workers=workers) if signatures is None else list(signatures)
    out = SpineCount(n, total=len(sigs), signatures=sigs)
    for sig in sigs:
        table = from_signature(sig)
        if accept(table, PruneFlags(criterion1=True)):
            out.criterion1 += 1
        if accept(table, PruneFlags(criterion1=True, low_degree=True)):
            out.candidates += 1
            out.candidate_signatures.append(sig)
        if w1_cocycle(table).orientable:
            out.orientable += 1
        else:
            out.nonorientable += 1
            if stiefel_whitney_surface(dual_spine(table)).face_set:
                out.nonempty_sigma += 1
    return out


@dataclass
class LemmaRecord:
    signature: str
    v3: int | None
    v4: int | None
    f: int | None
    components: int | None
    genera: tuple
    problems: tuple

    def line(self):
        status = "ok" if not self.problems else "; ".join(self.problems)
        return (f"{self.signature}\tv3={self.v3}\tv4={self.v4}\tf={self.f}\t"
                f"components={self.components}\tgenus={','.join(map(str, self.genera))}\t{status}")


def check_spine(sig: str) -> LemmaRecord:
    """Run the surface identities on one table; problems are reported, not raised."""
    table = from_signature(sig)
    spine = dual_spine(table)
    problems = []
    if not is_standard(spine):
        problems.append("not standard")
    if (spine.num_vertices, len(spine.edges), len(spine.faces)) != (table.n, 2 * table.n, table.n + 1):
        problems.append("cell counts")
    sigma = stiefel_whitney_surface(spine)
    if not sigma.face_set:
        return LemmaRecord(sig, None, None, None, 0, (), tuple(problems))
    topo = surface_topology(spine, sigma)
    try:
        stats = sigma_stats(spine, sigma, topo)
    except SurfaceError as exc:
        problems.append(str(exc))
        return LemmaRecord(sig, None, None, None, len(topo), (), tuple(problems))
    for comp in topo.components:
        if not comp.orientable:
            problems.append("non-orientable component")
        if comp.is_sphere:
            problems.append("sphere component")
    if 2 * stats.v3 + stats.v4 > table.n:
        problems.append("2v3+v4 > n")
    if len(topo) > 2:
        problems.append("more than two components")
    return LemmaRecord(sig, stats.v3, stats.v4, stats.f, len(topo), stats.g, tuple(problems))


def verify_lemmas(n: int, workers: int = 1, signatures=None):
    """Records for every non-orientable minimal candidate with n tetrahedra."""
    sigs = enumerate_signatures(n, PruneFlags(True, True), workers) if signatures is None \
        else [s for s in signatures if accept(from_signature(s), PruneFlags(True, True))]
    records = []
    for sig in sigs:
        if w1_cocycle(from_signature(sig)).orientable:
            continue
        records.append(check_spine(sig))
    return records
