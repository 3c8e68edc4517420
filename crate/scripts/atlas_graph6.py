"""Write every non-isomorphic graph on 1..7 vertices as graph6, one per line.

Uses the networkx graph atlas (Read & Wilson, "An Atlas of Graphs").
Usage: python3 scripts/atlas_graph6.py > crates/core/tests/data/graphs_order_le7.g6
"""
import sys

import networkx as nx

for g in nx.graph_atlas_g():
    if g.number_of_nodes() == 0:
        continue
    sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode("ascii"))
