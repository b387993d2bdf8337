"""Colorings, properness, b-vertices, and self-validating certificates."""

import json
from dataclasses import dataclass

from bchroma.graph import parse_label


@dataclass(frozen=True)
class Coloring:
    """Total assignment vertex -> color over the palette [1..k].

    The palette may be larger than the set of colors actually used.
    """

    colors: tuple
    k: int

    def __post_init__(self):
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise ValueError("color %d outside palette [1..%d]" % (c, self.k))

    def color(self, v):
        return self.colors[v]


@dataclass(frozen=True)
class BColoringCertificate:
    """A coloring plus one designated b-vertex per palette color."""

    coloring: Coloring
    b_vertices: dict  # color -> vertex index


def is_proper(g, c):
    if len(c.colors) != g.n:
        raise ValueError("coloring covers %d vertices, graph has %d"
                         % (len(c.colors), g.n))
    return all(c.colors[u] != c.colors[v] for u, v in g.edges)


def is_b_vertex(g, c, v):
    """Does N(v) realize every palette color except v's own?"""
    seen = {c.colors[u] for u in g.neighbors[v]}
    own = c.colors[v]
    return all(col in seen for col in range(1, c.k + 1) if col != own)


def used_colors(c):
    return set(c.colors)


def certificate_error(g, cert):
    """None if the certificate is valid, else a diagnostic naming the first
    failing color."""
    c = cert.coloring
    if len(c.colors) != g.n:
        return "coloring covers %d vertices, graph has %d" % (len(c.colors), g.n)
    for u, v in g.edges:
        if c.colors[u] == c.colors[v]:
            return ("edge (%d,%d) is monochromatic in color %d"
                    % (u, v, c.colors[u]))
    for col in range(1, c.k + 1):
        if col not in cert.b_vertices:
            return "color %d has no designated b-vertex" % col
        v = cert.b_vertices[col]
        if not 0 <= v < g.n:
            return "color %d designates a vertex %r outside the graph" % (col, v)
        if c.colors[v] != col:
            return ("color %d designates vertex %d, which has color %d"
                    % (col, v, c.colors[v]))
        if not is_b_vertex(g, c, v):
            seen = {c.colors[u] for u in g.neighbors[v]}
            missing = [x for x in range(1, c.k + 1) if x != col and x not in seen]
            return ("color %d: vertex %d misses colors %s in its neighborhood"
                    % (col, v, missing))
    return None


def validate_certificate(g, cert):
    return certificate_error(g, cert) is None


# --- serialization ---------------------------------------------------------

def coloring_to_json_obj(g, cert_or_coloring):
    if isinstance(cert_or_coloring, BColoringCertificate):
        c = cert_or_coloring.coloring
        b = {str(col): str(g.labels[v])
             for col, v in sorted(cert_or_coloring.b_vertices.items())}
    else:
        c = cert_or_coloring
        b = {}
    return {"k": c.k,
            "colors": {str(g.labels[v]): c.colors[v] for v in range(g.n)},
            "b_vertices": b}


def coloring_from_json_obj(g, obj):
    colors = [0] * g.n
    for lab_text, col in obj["colors"].items():
        colors[g.index_of(parse_label(lab_text))] = col
    c = Coloring(tuple(colors), obj["k"])
    b = obj.get("b_vertices") or {}
    if b:
        bv = {int(col): g.index_of(parse_label(lab)) for col, lab in b.items()}
        return BColoringCertificate(c, bv)
    return c


def coloring_to_json_text(g, x):
    return json.dumps(coloring_to_json_obj(g, x))


_DOT_FILLS = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1",
    "#000075", "#808080", "#ffffff", "#000000",
]


def to_dot(g, coloring=None, name="G"):
    """Graphviz source; vertices are filled by color when a coloring is given."""
    lines = ["graph %s {" % name, "  node [style=filled];"]
    for v in range(g.n):
        attrs = ['label="%s"' % g.labels[v]]
        if coloring is not None:
            fill = _DOT_FILLS[(coloring.colors[v] - 1) % len(_DOT_FILLS)]
            attrs.append('fillcolor="%s"' % fill)
            attrs.append('xlabel="%d"' % coloring.colors[v])
        else:
            attrs.append('fillcolor="white"')
        lines.append("  v%d [%s];" % (v, ", ".join(attrs)))
    for u, v in g.edges:
        lines.append("  v%d -- v%d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"
