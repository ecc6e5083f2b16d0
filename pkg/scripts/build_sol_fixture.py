"""Build the 6-tetrahedron one-vertex triangulation of the Sol torus bundle
with monodromy [[1,1],[1,0]] and store it in fixtures/.

The bundle is first triangulated with 7 tetrahedra from coordinates, then
2-3 and 3-2 moves are searched breadth-first for a 6-tetrahedron table.
"""
import argparse
from pathlib import Path

from spinecensus.bundles import torus_bundle_table
from spinecensus.gluing import format_gluing_table, vertex_count
from spinecensus.isosig import canonical_signature, from_signature
from spinecensus.moves import shrink
from spinecensus.stiefel import w1_cocycle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "fixtures" / "sol_6tet.txt")
    args = ap.parse_args()
    seven = torus_bundle_table(((1, 1), (1, 0)))
    six = from_signature(canonical_signature(shrink(seven, 6)))
    assert vertex_count(six) == 1
    assert six.h1_invariants() == seven.h1_invariants() == (1, ())
    assert not w1_cocycle(six).orientable
    header = ("# torus bundle with monodromy [[1,1],[1,0]]\n"
              f"# {canonical_signature(six)}\n"
              "# one vertex, non-orientable, H1 = Z\n")
    args.out.write_text(header + format_gluing_table(six))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
