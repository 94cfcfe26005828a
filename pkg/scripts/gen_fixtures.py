"""Regenerate the literal fixture edge lists under src/treecount/data/.

Petersen and Heawood come from networkx; the two girth-8 cages are the
point/line incidence graphs of the symplectic generalized quadrangle W(q)
(q=2: Tutte-Coxeter graph, 3-regular on 30 vertices; q=3: the (4,8)-cage on
80 vertices).
"""

import itertools
from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parents[1] / "src" / "treecount" / "data"


def _normalize(vec, q):
    for x in vec:
        if x:
            inv = pow(x, q - 2, q)
            return tuple((y * inv) % q for y in vec)
    return None


def symplectic_quadrangle(q):
    points = sorted({_normalize(v, q) for v in itertools.product(range(q), repeat=4)} - {None})
    index = {p: i for i, p in enumerate(points)}

    def form(x, y):
        return (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % q

    lines = set()
    for x, y in itertools.combinations(points, 2):
        if form(x, y) == 0:
            span = {
                _normalize(tuple((a * xi + b * yi) % q for xi, yi in zip(x, y)), q)
                for a in range(q)
                for b in range(q)
            } - {None}
            lines.add(frozenset(index[p] for p in span))
    lines = sorted(sorted(line) for line in lines)
    g = nx.Graph()
    n_points = len(points)
    g.add_nodes_from(range(n_points + len(lines)))
    for j, line in enumerate(lines):
        for i in line:
            g.add_edge(i, n_points + j)
    return g


def write(name, g, degree, girth):
    assert all(d == degree for _, d in g.degree()), name
    assert nx.girth(g) == girth, name
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    lines = [f"# {name}: {degree}-regular, girth {girth}", f"{g.number_of_nodes()} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    (DATA / f"{name}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    write("petersen", nx.petersen_graph(), 3, 5)
    write("heawood", nx.heawood_graph(), 3, 6)
    write("tutte_coxeter", symplectic_quadrangle(2), 3, 8)
    write("cage_4_8", symplectic_quadrangle(3), 4, 8)
