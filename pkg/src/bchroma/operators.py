"""The four operators: Cartesian product, line graph, total graph, power."""

from dataclasses import dataclass

from bchroma.graph import Graph, Pair, edge_origin, bfs_distances


@dataclass(frozen=True)
class ProductDecomposition:
    """How a product graph splits into inner copies indexed by the skeleton.

    inner_copies[j] lists the product-vertex indices of the inner copy
    sitting over skeleton vertex j, in inner-vertex order.
    """

    inner: Graph
    skeleton: Graph
    inner_copies: tuple

    def vertex(self, i, j):
        """Index of inner vertex i inside the copy over skeleton vertex j."""
        return self.inner_copies[j][i]


def cartesian_product(g, h):
    """G box H: one copy of g per vertex of h, plus skeleton edges.

    Vertex order is skeleton-major: the copy over skeleton vertex j
    occupies a contiguous block, inner vertices in their own order.
    """
    if g.n == 0 or h.n == 0:
        raise ValueError("cartesian product of an empty graph")
    labels = []
    for j in range(h.n):
        for i in range(g.n):
            labels.append(Pair(g.labels[i], h.labels[j]))
    idx = lambda i, j: j * g.n + i
    edges = []
    for j in range(h.n):
        for u, v in g.edges:
            edges.append((idx(u, j), idx(v, j)))
    for a, b in h.edges:
        for i in range(g.n):
            edges.append(tuple(sorted((idx(i, a), idx(i, b)))))
    copies = tuple(tuple(idx(i, j) for i in range(g.n)) for j in range(h.n))
    decomp = ProductDecomposition(g, h, copies)
    return Graph(tuple(labels), tuple(sorted(edges)), decomp)


def line_graph(g):
    """One vertex per edge of g; adjacency is sharing an endpoint."""
    if not g.edges:
        raise ValueError("line graph of an edgeless graph")
    labels = tuple(edge_origin(g.labels[u], g.labels[v]) for u, v in g.edges)
    edges = []
    for a in range(len(g.edges)):
        ua, va = g.edges[a]
        for b in range(a + 1, len(g.edges)):
            ub, vb = g.edges[b]
            if ua in (ub, vb) or va in (ub, vb):
                edges.append((a, b))
    return Graph(labels, tuple(sorted(edges)))


def total_graph(g):
    """Vertices are V(g) plus E(g); original vertices first, then the
    edge-vertices in sorted edge order."""
    n = g.n
    labels = list(g.labels)
    for u, v in g.edges:
        labels.append(edge_origin(g.labels[u], g.labels[v]))
    edges = list(g.edges)
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, n + e))
        edges.append((v, n + e))
    for a in range(len(g.edges)):
        ua, va = g.edges[a]
        for b in range(a + 1, len(g.edges)):
            ub, vb = g.edges[b]
            if ua in (ub, vb) or va in (ub, vb):
                edges.append((n + a, n + b))
    return Graph(tuple(labels), tuple(sorted(edges)))


def graph_power(g, p):
    """Same vertices; u ~ v iff their distance in g is between 1 and p."""
    if p < 1:
        raise ValueError("graph power needs p >= 1")
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] is not None and 1 <= dist[v] <= p:
                edges.append((u, v))
    return Graph(g.labels, tuple(sorted(edges)))
