#!/usr/bin/env python3
"""Regenerates fixtures/graphs/*.g6 and fixtures/spectra/*.json.

Named graphs without a built-in generator are built with networkx and
checked against basic invariants (order, degrees, girth, diameter) before
they are written.
"""

import argparse
import itertools
import json
from pathlib import Path

import networkx as nx
import numpy as np


def generalized_petersen(n, k):
    g = nx.Graph()
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
        g.add_edge(i, n + i)
        g.add_edge(n + i, n + (i + k) % n)
    return g


def shrikhande():
    g = nx.Graph()
    for a, b in itertools.product(range(4), repeat=2):
        for x, y in [(1, 0), (0, 1), (1, 1)]:
            g.add_edge((a, b), ((a + x) % 4, (b + y) % 4))
    return g


def clebsch():
    # Folded 5-cube.
    g = nx.Graph()
    for v in range(16):
        for i in range(4):
            g.add_edge(v, v ^ (1 << i))
        g.add_edge(v, v ^ 15)
    return g


def hoffman():
    # Switch Q4 with respect to a regular 4-set; the first switch that gives a
    # connected graph not isomorphic to Q4 is the Hoffman graph.
    q = nx.convert_node_labels_to_integers(nx.hypercube_graph(4))
    nodes = list(q.nodes())
    for c in itertools.combinations(nodes, 4):
        cs = set(c)
        if len({d for _, d in q.subgraph(c).degree()}) != 1:
            continue
        flips = []
        ok = True
        for v in nodes:
            if v in cs:
                continue
            hits = sum(1 for u in c if q.has_edge(u, v))
            if hits not in (0, 2, 4):
                ok = False
                break
            if hits == 2:
                flips.append(v)
        if not ok or not flips:
            continue
        h = q.copy()
        for v in flips:
            for u in c:
                if h.has_edge(u, v):
                    h.remove_edge(u, v)
                else:
                    h.add_edge(u, v)
        if nx.is_connected(h) and not nx.is_isomorphic(h, q):
            return h
    raise RuntimeError("no switching found")


def tietze():
    g = nx.petersen_graph()
    nb = list(g.neighbors(0))
    g.remove_node(0)
    tri = [100, 101, 102]
    g.add_edges_from(itertools.combinations(tri, 2))
    for a, b in zip(tri, nb):
        g.add_edge(a, b)
    return g


def middle_cube(k):
    # (k-1)- and k-subsets of a (2k-1)-set, adjacent by inclusion.
    ground = range(2 * k - 1)
    low = [frozenset(c) for c in itertools.combinations(ground, k - 1)]
    high = [frozenset(c) for c in itertools.combinations(ground, k)]
    g = nx.Graph()
    for a in low:
        for b in high:
            if a < b:
                g.add_edge(a, b)
    return g


def coxeter():
    # 3-subsets of a 7-set that are not Fano lines, adjacent when disjoint.
    fano = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]
    verts = [frozenset(c) for c in itertools.combinations(range(7), 3) if set(c) not in fano]
    g = nx.Graph()
    g.add_nodes_from(verts)
    for a, b in itertools.combinations(verts, 2):
        if not a & b:
            g.add_edge(a, b)
    return g


def flower_snark(n):
    g = nx.Graph()
    for i in range(n):
        g.add_edges_from([(("a", i), ("b", i)), (("a", i), ("c", i)), (("a", i), ("d", i))])
        g.add_edge(("b", i), ("b", (i + 1) % n))
    cyc = [("c", i) for i in range(n)] + [("d", i) for i in range(n)]
    for i in range(2 * n):
        g.add_edge(cyc[i], cyc[(i + 1) % (2 * n)])
    return g


def truncation(planar):
    # Replace each vertex by a cycle through its incident edges in rotation order.
    ok, emb = nx.check_planarity(planar)
    assert ok
    g = nx.Graph()
    for v in planar:
        nb = list(emb.neighbors_cw_order(v))
        for i, u in enumerate(nb):
            g.add_edge((v, u), (u, v))
            g.add_edge((v, u), (v, nb[(i + 1) % len(nb)]))
    return g


def holt():
    g = nx.Graph()
    for x, y in itertools.product(range(9), range(3)):
        for s in (1, -1):
            g.add_edge((x, y), ((4 * x + s) % 9, (y + 1) % 3))
    return g


def meredith():
    # Petersen with its spoke matching doubled; each vertex becomes K_{4,3} and
    # the four edges at a vertex attach to the 4-side.
    p = nx.petersen_graph()
    edges = list(p.edges()) + [(i, i + 5) for i in range(5)]
    g = nx.Graph()
    for v in p:
        for a, b in itertools.product(range(4), range(3)):
            g.add_edge((v, "a", a), (v, "b", b))
    slot = dict.fromkeys(p, 0)
    for u, v in edges:
        g.add_edge((u, "a", slot[u]), (v, "a", slot[v]))
        slot[u] += 1
        slot[v] += 1
    return g


def robertson():
    g = nx.cycle_graph(19)
    for i, j in enumerate([8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4]):
        g.add_edge(i, (i + j) % 19)
    return g


BALABAN_10_LCF = [
    -9, -25, -19, 29, 13, 35, -13, -29, 19, 25, 9, -29, 29, 17, 33, 21, 9, -13, -31, -9, 25, 17, 9, -31,
    27, -9, 17, -19, -29, 27, -17, -9, -29, 33, -25, 25, -21, 17, -17, 29, 35, -29, 17, -17, 21, -25, 25,
    -33, 29, 9, 17, -27, 29, 19, -17, 9, -27, 31, -9, -17, -25, 9, 31, 13, -9, -21, -33, -17, -29, 29,
]
HARRIES_WONG_LCF = [
    9, 25, 31, -17, 17, 33, 9, -29, -15, -9, 9, 25, -25, 29, 17, -9, 9, -27, 35, -9, 9, -17, 21, 27, -29,
    -9, -25, 13, 19, -9, -33, -17, 19, -31, 27, 11, -25, 29, -33, 13, -13, 21, -29, -21, 25, 9, -11, -19,
    29, 9, -27, -19, -13, -35, -9, 9, 17, 25, -9, 9, 27, -27, -21, 15, -9, 29, -29, 33, -9, -25,
]


# name -> (builder, order, degree, girth, diameter); None skips a check.
GRAPHS = {
    "petersen": (nx.petersen_graph, 10, 3, 5, 2),
    "sixteen_cell": (lambda: nx.complete_multipartite_graph(2, 2, 2, 2), 8, 6, 3, 2),
    "shrikhande": (shrikhande, 16, 6, 3, 2),
    "clebsch": (clebsch, 16, 5, 4, 2),
    "hoffman": (hoffman, 16, None, 4, 4),
    "dodecahedron": (nx.dodecahedral_graph, 20, 3, 5, 5),
    "desargues": (nx.desargues_graph, 20, 3, 6, 5),
    "middle_cube_3": (lambda: middle_cube(3), 20, 3, 6, 5),
    "coxeter": (coxeter, 28, 3, 7, 4),
    "hoffman_singleton": (nx.hoffman_singleton_graph, 50, 7, 5, 2),
    "heawood": (nx.heawood_graph, 14, 3, 6, 3),
    "pappus": (nx.pappus_graph, 18, 3, 6, 4),
    "frucht": (nx.frucht_graph, 12, 3, 3, 4),
    "nauru": (lambda: nx.LCF_graph(24, [5, -9, 7, -7, 9, -5], 4), 24, 3, 6, 4),
    "dyck": (lambda: nx.LCF_graph(32, [5, -5, 13, -13], 8), 32, 3, 6, 5),
    "f26a": (lambda: nx.LCF_graph(26, [-7, 7], 13), 26, 3, 6, 5),
    "franklin": (lambda: nx.LCF_graph(12, [5, -5], 6), 12, 3, 4, 3),
    "durer": (lambda: generalized_petersen(6, 2), 12, 3, 3, 4),
    "tietze": (tietze, 12, 3, 3, 3),
    "moebius_kantor": (lambda: generalized_petersen(8, 3), 16, 3, 6, 4),
    "truncated_tetrahedron": (nx.truncated_tetrahedron_graph, 12, 3, 3, 3),
    "mcgee": (lambda: nx.LCF_graph(24, [12, 7, -7], 8), 24, 3, 7, 4),
    "folkman": (lambda: nx.LCF_graph(20, [5, -7, -7, 5], 5), 20, 4, 4, 4),
    "bidiakis": (lambda: nx.LCF_graph(12, [6, 4, -4], 4), 12, 3, 4, 3),
    "gray": (lambda: nx.LCF_graph(54, [-25, 7, -7, 13, -13, 25], 9), 54, 3, 8, 6),
    "tutte": (nx.tutte_graph, 46, 3, 4, 8),
    "flower_snark": (lambda: flower_snark(5), 20, 3, 5, 4),
    "bucky_ball": (lambda: truncation(nx.icosahedral_graph()), 60, 3, 5, 9),
    "holt": (holt, 27, 4, 5, 3),
    "robertson": (robertson, 19, 4, 5, 3),
    "meredith": (meredith, 70, 4, 4, 8),
    "balaban_10_cage": (lambda: nx.LCF_graph(70, BALABAN_10_LCF, 1), 70, 3, 10, 6),
    "harries_wong": (lambda: nx.LCF_graph(70, HARRIES_WONG_LCF, 1), 70, 3, 10, 6),
    "harries": (lambda: nx.LCF_graph(70, [-29, -19, -13, 13, 21, -27, 27, 33, -13, 13, 19, -21, -33, 29], 5), 70, 3, 10, 6),
}


def girth(g):
    best = None
    for v in g:
        dist = {v: 0}
        parent = {v: None}
        queue = [v]
        for u in queue:
            for w in g[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    c = dist[u] + dist[w] + 1
                    best = c if best is None else min(best, c)
    return best


def grouped_spectrum(g, tol=1e-6):
    ev = np.sort(np.linalg.eigvalsh(nx.to_numpy_array(g)))[::-1]
    theta, mult = [], []
    for x in ev:
        if theta and abs(theta[-1] - x) < tol:
            mult[-1] += 1
        else:
            theta.append(float(x))
            mult.append(1)
    return theta, mult


# Strongly regular graphs given by parameters (n, k, r, s, f, g) with
# eigenvalues k, r^f, s^g.
SRG_SPECTRA = {
    "petersen": (10, 3, 1, -2, 5, 4),
    "clebsch": (16, 5, 1, -3, 10, 5),
    "hoffman_singleton": (50, 7, 2, -3, 28, 21),
    "gewirtz": (56, 10, 2, -4, 35, 20),
    "mesner": (77, 16, 2, -6, 55, 21),
    "higman_sims": (100, 22, 2, -8, 77, 22),
}


def check_cages(root):
    # The three (3,10)-cages differ in automorphism group order. VF2 takes
    # several minutes here, hence opt-in.
    for name, order in [("balaban_10_cage", 80), ("harries", 120), ("harries_wong", 24)]:
        g = nx.read_graph6(str(root / "graphs" / f"{name}.g6"))
        auts = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter())
        assert auts == order, (name, auts)


def write_graphs(root):
    out = root / "graphs"
    out.mkdir(parents=True, exist_ok=True)
    for name, (build, order, degree, gi, diam) in GRAPHS.items():
        g = nx.convert_node_labels_to_integers(build())
        assert g.number_of_nodes() == order, name
        assert nx.is_connected(g), name
        degrees = {d for _, d in g.degree()}
        if degree is not None:
            assert degrees == {degree}, (name, degrees)
        assert girth(g) == gi, (name, girth(g))
        assert nx.diameter(g) == diam, (name, nx.diameter(g))
        data = nx.to_graph6_bytes(g, header=False).decode().strip()
        (out / f"{name}.g6").write_text(data + "\n")
    bad = root / "invalid"
    bad.mkdir(exist_ok=True)
    two = nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(3))
    (bad / "disconnected.g6").write_text(nx.to_graph6_bytes(two, header=False).decode())
    h = nx.read_graph6(str(out / "hoffman.g6"))
    q4 = nx.hypercube_graph(4)
    assert np.allclose(grouped_spectrum(h)[0], grouped_spectrum(q4)[0])


def write_spectra(root):
    out = root / "spectra"
    out.mkdir(parents=True, exist_ok=True)
    for name, params in SRG_SPECTRA.items():
        if params is None:
            continue
        n, k, r, s, f, g = params
        assert 1 + f + g == n and k + f * r + g * s == 0
        doc = {"name": name, "theta": [k, r, s], "mult": [1, f, g], "n": n}
        (out / f"{name}.json").write_text(json.dumps(doc) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "fixtures")
    parser.add_argument("--slow-checks", action="store_true", help="also verify the 10-cages by automorphism count")
    args = parser.parse_args()
    write_graphs(args.out)
    write_spectra(args.out)
    if args.slow_checks:
        check_cages(args.out)


if __name__ == "__main__":
    main()
