"""Immutable simple graphs, base families, and basic metrics."""

import json
from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True, order=True)
class Plain:
    """A bare vertex index, the label of generator vertices."""

    index: int

    def __str__(self):
        return str(self.index)


@dataclass(frozen=True, order=True)
class Pair:
    """Label of a Cartesian-product vertex (inner, skeleton)."""

    left: object
    right: object

    def __str__(self):
        return "(%s,%s)" % (self.left, self.right)


@dataclass(frozen=True, order=True)
class EdgeOrigin:
    """Label of a vertex that stands for an edge {u, v} of the source graph.

    Endpoints are kept in canonical (sorted) order.
    """

    u: object
    v: object

    def __str__(self):
        return "{%s,%s}" % (self.u, self.v)


def edge_origin(a, b):
    """Build an EdgeOrigin with endpoints in canonical order."""
    a, b = sorted((a, b), key=_label_key)
    return EdgeOrigin(a, b)


def _label_key(label):
    if isinstance(label, Plain):
        return (0, label.index)
    if isinstance(label, Pair):
        return (1, _label_key(label.left), _label_key(label.right))
    if isinstance(label, EdgeOrigin):
        return (2, _label_key(label.u), _label_key(label.v))
    raise TypeError("not a vertex label: %r" % (label,))


def parse_label(text):
    """Inverse of str() on labels; used by the JSON graph format."""
    label, rest = _parse_label(text)
    if rest:
        raise ValueError("trailing text %r in label %r" % (rest, text))
    return label


def _parse_label(text):
    text = text.strip()
    if not text:
        raise ValueError("empty vertex label")
    if text[0] == "(":
        left, rest = _parse_label(text[1:])
        if not rest.startswith(","):
            raise ValueError("expected ',' in pair label")
        right, rest = _parse_label(rest[1:])
        if not rest.startswith(")"):
            raise ValueError("expected ')' in pair label")
        return Pair(left, right), rest[1:]
    if text[0] == "{":
        u, rest = _parse_label(text[1:])
        if not rest.startswith(","):
            raise ValueError("expected ',' in edge label")
        v, rest = _parse_label(rest[1:])
        if not rest.startswith("}"):
            raise ValueError("expected '}' in edge label")
        return edge_origin(u, v), rest[1:]
    i = 0
    while i < len(text) and (text[i].isdigit() or (i == 0 and text[i] == "-")):
        i += 1
    if i == 0:
        raise ValueError("bad vertex label at %r" % text)
    return Plain(int(text[:i])), text[i:]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over labelled vertices.

    ``edges`` holds index pairs (u, v) with u < v, no duplicates, no loops.
    ``product`` carries the decomposition recorded by cartesian_product and
    never takes part in equality.
    """

    labels: tuple
    edges: tuple
    product: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate vertex labels")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ValueError("bad edge (%d,%d)" % (u, v))
            if (u, v) in seen:
                raise ValueError("parallel edge (%d,%d)" % (u, v))
            seen.add((u, v))

    @property
    def n(self):
        return len(self.labels)

    @cached_property
    def neighbors(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def bits(self):
        """Adjacency rows as integers, for fast set intersection."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def degrees(self):
        return tuple(len(a) for a in self.neighbors)

    def degree(self, v):
        return self.degrees[v]

    def adjacent(self, u, v):
        return (self.bits[u] >> v) & 1 == 1

    def index_of(self, label):
        return self._label_index[label]

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}


def _graph(labels, edge_pairs, product=None):
    edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in set(
        (min(a, b), max(a, b)) for a, b in edge_pairs)))
    return Graph(tuple(labels), edges, product)


def star(n):
    """K_{1,n}: vertex 0 is the center, 1..n the leaves. star(0) is K_1."""
    if n < 0:
        raise ValueError("star(n) needs n >= 0")
    return _graph([Plain(i) for i in range(n + 1)], [(0, i) for i in range(1, n + 1)])


def complete(n):
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return _graph([Plain(i) for i in range(n)],
                  [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n):
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return _graph([Plain(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return _graph([Plain(i) for i in range(n)],
                  [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees sorted descending plus the vertex order realizing the sort."""

    degrees: tuple
    vertex_order: tuple


def degree_profile(g):
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    return DegreeProfile(tuple(g.degrees[v] for v in order), tuple(order))


UNREACHABLE = None


def bfs_distances(g, source):
    """Distance from source to every vertex; UNREACHABLE where disconnected."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.neighbors[u]:
                if dist[w] is UNREACHABLE:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def distance(g, u, v):
    return bfs_distances(g, u)[v]


def is_connected(g):
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def diameter(g):
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        for d in dist:
            if d is UNREACHABLE:
                raise ValueError("diameter of a disconnected graph")
            best = max(best, d)
    return best


# --- serialization ---------------------------------------------------------

def to_edge_list_text(g):
    lines = ["%d %d" % (g.n, len(g.edges))]
    lines.extend("%d %d" % (u, v) for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text):
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty edge-list input")
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise ValueError("edge-list header says %d edges, found %d" % (m, len(edges)))
    return _graph([Plain(i) for i in range(n)], edges)


def to_json_obj(g):
    return {"vertices": [str(lab) for lab in g.labels],
            "edges": [[u, v] for u, v in g.edges]}


def from_json_obj(obj):
    labels = [parse_label(s) for s in obj["vertices"]]
    return _graph(labels, [(u, v) for u, v in obj["edges"]])


def to_json_text(g):
    return json.dumps(to_json_obj(g))


def from_json_text(text):
    return from_json_obj(json.loads(text))
