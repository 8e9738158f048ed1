"""Regenerate the graph6 fixture catalogs under crates/core/tests/data.

Samples random cubic graphs from the pairing model and keeps one
representative per isomorphism class (nauty certificates via pynauty),
stopping once the known class counts are reached.

    pip install pynauty networkx
    python3 tools/gen_catalogs.py
"""

import pathlib
import random

import networkx as nx
import pynauty

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/tests/data"

# Connected cubic graphs (OEIS A002851) and connected cubic bipartite
# graphs (OEIS A006823) by order.
CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
CONNECTED_BIPARTITE_CUBIC = {8: 1, 16: 38}
# Disconnected bipartite cubic graphs of order 16: Q3+Q3 and K33 plus
# each of the two bipartite cubic graphs of order 10.
DISCONNECTED_BIPARTITE_CUBIC = {8: 0, 16: 3}


def canon(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in g.nodes}
    pg = pynauty.Graph(n, adjacency_dict=adj)
    lab = pynauty.canon_label(pg)
    relabel = {old: new for new, old in enumerate(lab)}
    h = nx.relabel_nodes(g, relabel)
    h = nx.Graph(sorted(tuple(sorted(e)) for e in h.edges))
    h.add_nodes_from(range(n))
    return pynauty.certificate(pg), h


def pairing(points, rng):
    rng.shuffle(points)
    return [(points[i], points[i + 1]) for i in range(0, len(points), 2)]


def random_cubic(n, rng):
    while True:
        pts = [v for v in range(n) for _ in range(3)]
        pairs = pairing(pts, rng)
        edges = {tuple(sorted(p)) for p in pairs}
        if len(edges) == len(pairs) and all(a != b for a, b in edges):
            g = nx.Graph(list(edges))
            g.add_nodes_from(range(n))
            return g


def random_bipartite_cubic(n, rng):
    half = n // 2
    while True:
        right = [half + v for v in range(half) for _ in range(3)]
        rng.shuffle(right)
        left = [v for v in range(half) for _ in range(3)]
        edges = set(zip(left, right))
        if len(edges) == len(left):
            g = nx.Graph(list(edges))
            g.add_nodes_from(range(n))
            return g


def collect(sample, want_connected, want_disconnected, rng):
    seen = {}
    conn = disc = 0
    while conn < want_connected or disc < want_disconnected:
        g = sample(rng)
        cert, h = canon(g)
        if cert in seen:
            continue
        if nx.is_connected(g):
            if conn >= want_connected:
                continue
            conn += 1
        else:
            if disc >= want_disconnected:
                continue
            disc += 1
        seen[cert] = h
    return sorted(nx.to_graph6_bytes(h, header=False).decode().strip() for h in seen.values())


def write(name, lines):
    (OUT / name).write_text("".join(line + "\n" for line in lines))
    print(name, len(lines))


def main():
    rng = random.Random(20240601)
    OUT.mkdir(parents=True, exist_ok=True)
    for n, count in CONNECTED_CUBIC.items():
        lines = collect(lambda r: random_cubic(n, r), count, 0, rng)
        # the pairing model also yields disconnected graphs; only keep connected ones
        write(f"cubic_connected_{n}.g6", lines)
    for n, count in CONNECTED_BIPARTITE_CUBIC.items():
        lines = collect(lambda r: random_bipartite_cubic(n, r), count, DISCONNECTED_BIPARTITE_CUBIC[n], rng)
        write(f"bipartite_cubic_{n}.g6", lines)


if __name__ == "__main__":
    main()
