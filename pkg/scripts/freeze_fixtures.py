"""Enumerate one-vertex tables for n = 1..N and write the fixture files.

Writes fixtures/n{K}/sig.txt (all classes), fixtures/n{K}/candidates.txt
(survivors of both pruning rules) and fixtures/manifest.json with counts.
"""
import argparse
import json
import time
from pathlib import Path

from spinecensus.census import count_spines


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--root", type=Path, default=Path(__file__).resolve().parents[1] / "fixtures")
    args = ap.parse_args()
    manifest_path = args.root / "manifest.json"
    manifest = json.loads(manifest_path.read_text()) if manifest_path.exists() else {}
    counts = manifest.setdefault("one_vertex", {})
    for n in range(1, args.nmax + 1):
        start = time.time()
        res = count_spines(n, workers=args.workers)
        folder = args.root / f"n{n}"
        folder.mkdir(parents=True, exist_ok=True)
        (folder / "sig.txt").write_text("".join(s + "\n" for s in res.signatures))
        (folder / "candidates.txt").write_text("".join(s + "\n" for s in res.candidate_signatures))
        counts[str(n)] = res.as_dict()
        print(f"n={n}: {res.as_dict()} ({time.time() - start:.1f}s)", flush=True)
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
