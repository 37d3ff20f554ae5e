#!/usr/bin/env python3
"""Write graph6 corpora of all connected graphs on n <= 7 vertices.

Uses the networkx graph atlas (every graph up to 7 vertices, one per
isomorphism class). Output: data/connected_n{N}.g6, one record per line.
"""
import pathlib
import sys

import networkx as nx

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def main(out_dir: pathlib.Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    by_order = {n: [] for n in EXPECTED}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n in by_order and nx.is_connected(g):
            by_order[n].append(g)
    for n, graphs in by_order.items():
        if len(graphs) != EXPECTED[n]:
            sys.exit(f"order {n}: expected {EXPECTED[n]} graphs, got {len(graphs)}")
        lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
        (out_dir / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data"))
