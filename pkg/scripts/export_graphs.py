#!/usr/bin/env python3
"""Write the two demonstration coefficient digraphs as DOT files.

One: the 4-element graph restricted to the alternating vertices together
with the top ascending permutation.  Two: the 6-element subgraph of
ascending vertices reachable from a chosen source, loops dropped.
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from altperm.blockperm import alt_basis, parse_perm
from altperm.coeffgraph import build_graph, emit_dot, reachable_ascending


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=".", help="where to write the .dot files")
    args = parser.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    g4 = build_graph((1, 2, 3, 4))
    restrict = list(alt_basis((1, 2, 3, 4))) + [parse_perm("1,2/3,4")]
    (out / "coeff_graph_4.dot").write_text(emit_dot(g4, restrict_to=restrict))

    I = (2, 3, 5, 6, 7, 9)
    g6 = build_graph(I)
    source = parse_perm("7,9/5,6/2,3")
    reach = reachable_ascending(g6, source)
    (out / "coeff_graph_6_reachable.dot").write_text(
        emit_dot(g6, restrict_to=reach, include_loops=False)
    )
    print(f"wrote {out / 'coeff_graph_4.dot'} and {out / 'coeff_graph_6_reachable.dot'}")


if __name__ == "__main__":
    main()
