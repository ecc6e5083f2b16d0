"""Command line front end.

Exit codes: 0 when everything matches, 2 when a --check comparison fails,
1 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .assembling import c7_examples, nonorientable_c6_census
from .census import count_spines, verify_lemmas
from .enumerate import PruneFlags, iter_branches
from .isosig import from_signature
from .theta_farey import format_census_tsv, lens_census

LENS_ROW = (3, 2, 3, 6, 10, 20, 36, 72, 136, 272)  # lens spaces of complexity 0..9
C6_NONORIENTABLE = {"E3": 4, "Sol": 1}
MAX_N = 6
MAX_CMAX = 12
DEFAULT_FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    cmax: int | None = None
    pruning: PruneFlags = PruneFlags()
    workers: int = 1
    fmt: str = "tsv"
    out: Path | None = None
    check: bool = False
    max_seconds: float | None = None
    signatures: Path | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.n is not None and not 1 <= self.n <= MAX_N:
            raise UsageError(f"--n must lie in 1..{MAX_N}")
        if self.cmax is not None and not 0 <= self.cmax <= MAX_CMAX:
            raise UsageError(f"--cmax must lie in 0..{MAX_CMAX}")
        if self.fmt not in ("tsv", "json"):
            raise UsageError("--format is tsv or json")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    ap = _Parser(prog="spinecensus", description="Spine, Farey and assembling censuses.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, out_help="write the table here instead of stdout"):
        p.add_argument("--format", dest="fmt", default="tsv", choices=("tsv", "json"))
        p.add_argument("--out", type=Path, help=out_help)
        p.add_argument("--check", action="store_true", help="compare with the embedded expectations")

    p = sub.add_parser("lens-census", help="lens spaces by complexity")
    p.add_argument("--cmax", type=int, required=True)
    common(p)

    p = sub.add_parser("enumerate-spines", help="one-vertex triangulations and their spines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-seconds", type=float, default=None,
                   help="stop after the branch running when time is up")
    common(p, out_help="fixture root; writes n{K}/sig.txt below it")

    p = sub.add_parser("nonorientable-census", help="non-orientable manifolds at complexity 6 and 7")
    common(p)

    p = sub.add_parser("verify-lemmas", help="surface identities on minimal candidates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--signatures", type=Path,
                   help="read the n-tetrahedron tables from this file instead of enumerating")
    common(p)
    return ap


def _emit(text, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


# ------------------------------------------------------------------ commands

def cmd_lens_census(cfg: RunConfig):
    census = lens_census(cfg.cmax)
    counts = [len(census[c]) for c in range(cfg.cmax + 1)]
    if cfg.fmt == "json":
        text = json.dumps({str(c): [str(L) for L in sorted(census[c])] for c in census}, indent=2) + "\n"
    else:
        text = format_census_tsv(census)
    _emit(text, cfg.out)
    if cfg.check:
        upto = min(cfg.cmax, len(LENS_ROW) - 1)
        want = list(LENS_ROW[:upto + 1])
        got = counts[:upto + 1]
        if got != want:
            sys.stderr.write(f"lens census mismatch: expected {want}, got {got}\n")
            return EXIT_MISMATCH
        sys.stderr.write(f"lens census matches for c <= {upto}\n")
    return EXIT_OK


def _frozen_counts(root: Path, n: int):
    path = root / "manifest.json"
    if not path.exists():
        return None
    return json.loads(path.read_text()).get("one_vertex", {}).get(str(n))


def cmd_enumerate_spines(cfg: RunConfig):
    start = time.time()
    found, partial = set(), False
    for part in iter_branches(cfg.n, PruneFlags(), cfg.workers):
        found |= part
        if cfg.max_seconds is not None and time.time() - start > cfg.max_seconds:
            partial = True
            break
    res = count_spines(cfg.n, signatures=sorted(found))
    row = res.as_dict()
    row["partial"] = partial
    if cfg.fmt == "json":
        text = json.dumps(row, indent=2) + "\n"
    else:
        keys = list(row)
        text = "#" + "\t".join(keys) + "\n" + "\t".join(str(row[k]) for k in keys) + "\n"
        if partial:
            text += "# PARTIAL: time limit reached, counts are lower bounds\n"
    sys.stdout.write(text)
    if cfg.out is not None:
        folder = cfg.out / f"n{cfg.n}"
        folder.mkdir(parents=True, exist_ok=True)
        (folder / "sig.txt").write_text("".join(s + "\n" for s in res.signatures))
        (folder / "candidates.txt").write_text("".join(s + "\n" for s in res.candidate_signatures))
    if cfg.check:
        frozen = _frozen_counts(DEFAULT_FIXTURES, cfg.n)
        if frozen is None:
            sys.stderr.write(f"no frozen counts for n={cfg.n}\n")
            return EXIT_MISMATCH
        diff = {k: (frozen[k], row[k]) for k in frozen if row.get(k) != frozen[k]}
        if diff or partial:
            sys.stderr.write(f"enumeration mismatch (frozen, got): {diff}\n")
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_nonorientable_census(cfg: RunConfig):
    rows = nonorientable_c6_census() + c7_examples()
    if cfg.fmt == "json":
        text = json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
    else:
        lines = ["#complexity\tdescription\tgeometry\tchi_orb\tmonodromy\tledger\th1\ttrace"]
        for r in rows:
            d = r.as_dict()
            lines.append("\t".join(str(x) for x in (
                d["complexity"], d["description"], d["geometry"], d["chi_orb"] or "-",
                d["monodromy"] or "-", d["ledger"], d["h1"], d["trace"])))
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    problems = _check_nonorientable(rows)
    if problems:
        for p in problems:
            sys.stderr.write(p + "\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _check_nonorientable(rows):
    problems = []
    c6 = [r for r in rows if r.complexity == 6]
    by_geom = {}
    for r in c6:
        by_geom[r.geometry.value] = by_geom.get(r.geometry.value, 0) + 1
    if by_geom != C6_NONORIENTABLE:
        problems.append(f"c=6 classes {by_geom}, expected {C6_NONORIENTABLE}")
    if any(r.ledger != 6 for r in c6):
        problems.append("c=6 ledger is not 6")
    sol6 = [r.monodromy for r in c6 if r.geometry.value == "Sol"]
    if sol6 != [((1, 1), (1, 0))]:
        problems.append(f"c=6 Sol monodromy {sol6}")
    c7 = [r for r in rows if r.complexity == 7]
    h2 = [r for r in c7 if r.geometry.value == "H2xR"]
    if len(h2) != 2 or any(str(r.chi_orb) != "-1/6" or r.ledger != 7 for r in h2):
        problems.append("c=7 Seifert rows are not two H2xR rows with chi_orb -1/6 and ledger 7")
    sol7 = [r for r in c7 if r.geometry.value == "Sol"]
    if len(sol7) != 1 or sol7[0].monodromy != ((2, 1), (1, 0)) or sol7[0].ledger != 7:
        problems.append("c=7 Sol row is not [[2,1],[1,0]] with ledger 7")
    return problems


def cmd_verify_lemmas(cfg: RunConfig):
    sigs = None
    if cfg.signatures is not None:
        try:
            sigs = cfg.signatures.read_text().split()
        except OSError as exc:
            sys.stderr.write(f"spinecensus: error: {exc}\n")
            return EXIT_USAGE
        if any(from_signature(s).n != cfg.n for s in sigs):
            sys.stderr.write(f"spinecensus: error: {cfg.signatures} has tables with n != {cfg.n}\n")
            return EXIT_USAGE
    records = verify_lemmas(cfg.n, cfg.workers, signatures=sigs)
    bad = [r for r in records if r.problems]
    if cfg.fmt == "json":
        text = json.dumps({"n": cfg.n, "checked": len(records), "counterexamples": len(bad),
                           "records": [r.__dict__ for r in records]}, indent=2, default=list) + "\n"
    else:
        text = f"#n={cfg.n}\tchecked={len(records)}\tcounterexamples={len(bad)}\n"
        text += "".join(r.line() + "\n" for r in records)
    _emit(text, cfg.out)
    return EXIT_OK


COMMANDS = {
    "lens-census": cmd_lens_census,
    "enumerate-spines": cmd_enumerate_spines,
    "nonorientable-census": cmd_nonorientable_census,
    "verify-lemmas": cmd_verify_lemmas,
}


def config_from_args(args) -> RunConfig:
    return RunConfig(command=args.command, n=getattr(args, "n", None),
                     cmax=getattr(args, "cmax", None), workers=getattr(args, "workers", 1),
                     fmt=args.fmt, out=args.out, check=args.check,
                     max_seconds=getattr(args, "max_seconds", None),
                     signatures=getattr(args, "signatures", None))


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if cfg.command == "verify-lemmas" and cfg.n > 5:
            raise UsageError("verify-lemmas supports n <= 5")
    except UsageError as exc:
        sys.stderr.write(f"spinecensus: error: {exc}\n")
        return EXIT_USAGE
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
