"""Exact solver: m-degree, clique number, chromatic number, b-chromatic
number, and the labeled b-coloring counter.

The b-coloring search follows the shape of the hand proofs: pick the k
designated b-vertices among the only legal candidates (degree >= k-1),
normalize their colors to 1..k (any b-coloring can be renamed so that its
sorted b-vertex set carries 1..k, since color permutations preserve
b-colorings), then branch on how each designated vertex acquires its
missing neighborhood colors, and finally extend to a full proper coloring.
"""

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from bchroma.coloring import BColoringCertificate, Coloring
from bchroma.graph import degree_profile

DEFAULT_MAX_NODES = 100_000_000
DEFAULT_MAX_SECONDS = 300.0
COUNT_LEAF_BOUND = 10 ** 12


@dataclass(frozen=True)
class SolverBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS


class BudgetExceeded(Exception):
    """Search ran out of nodes or wall clock; carries partial progress."""

    def __init__(self, message, nodes=0, partial=None):
        super().__init__(message)
        self.nodes = nodes
        self.partial = partial


class GraphTooLarge(Exception):
    pass


class _Ticker:
    """Node counter with budget enforcement."""

    def __init__(self, budget):
        budget = budget or SolverBudget()
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget exceeded", nodes=self.nodes)
        if self.nodes % 8192 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exceeded", nodes=self.nodes)


def m_degree(g):
    """Largest i with the i-th largest degree >= i-1."""
    if g.n < 1:
        raise ValueError("m-degree of the empty graph")
    degs = degree_profile(g).degrees
    best = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            best = i
    return best


# --- maximum clique --------------------------------------------------------

def _max_clique(g):
    n = g.n
    if n == 0:
        return 0, ()
    bits = g.bits
    order = sorted(range(n), key=lambda v: (-g.degrees[v], v))
    best = [1, (order[0],)]

    def expand(r, p):
        while p:
            # greedy coloring of p gives an upper bound per candidate
            classes = []
            masks = []
            for v in p:
                for i, mask in enumerate(masks):
                    if not (bits[v] & mask):
                        classes[i].append(v)
                        masks[i] |= 1 << v
                        break
                else:
                    classes.append([v])
                    masks.append(1 << v)
            ordered = [(v, ci + 1) for ci, cls in enumerate(classes) for v in cls]
            v, bound = ordered[-1]
            if len(r) + bound <= best[0]:
                return
            r.append(v)
            p2 = [u for u in p if u != v and (bits[v] >> u) & 1]
            if p2:
                expand(r, p2)
            elif len(r) > best[0]:
                best[0] = len(r)
                best[1] = tuple(sorted(r))
            r.pop()
            p.remove(v)

    expand([], list(order))
    return best[0], best[1]


def clique_number(g, max_vertices=64):
    if g.n > max_vertices:
        raise GraphTooLarge("exact clique search capped at %d vertices" % max_vertices)
    return _max_clique(g)[0]


# --- chromatic number ------------------------------------------------------

def chromatic_number(g, budget=None):
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph")
    if not g.edges:
        return 1
    omega, clique = _max_clique(g)
    ticker = _Ticker(budget)
    k = omega
    while True:
        if _k_colorable(g, k, clique, ticker):
            return k
        k += 1


def _k_colorable(g, k, clique, ticker):
    if len(clique) > k:
        return False
    colors = [0] * g.n
    for i, v in enumerate(clique):
        colors[v] = i + 1
    return _extend(g, k, colors, ticker) is not None


# --- proper-coloring extension (shared backtracking core) ------------------

def _extend(g, k, colors, ticker):
    """Complete a partial proper coloring to a full one, or None.

    Deterministic: most-constrained vertex first (ties by index), colors
    ascending. Mutates and restores `colors`; returns a tuple on success.
    """
    n = g.n
    nbr = g.neighbors
    uncolored = [v for v in range(n) if colors[v] == 0]
    if not uncolored:
        return tuple(colors)

    def allowed(v):
        forb = set()
        for u in nbr[v]:
            if colors[u]:
                forb.add(colors[u])
        return [c for c in range(1, k + 1) if c not in forb]

    def rec(remaining):
        if not remaining:
            return tuple(colors)
        best_v, best_opts = None, None
        for v in remaining:
            opts = allowed(v)
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    return None
                if len(opts) == 1:
                    break
        rest = [v for v in remaining if v != best_v]
        for c in best_opts:
            ticker.tick()
            colors[best_v] = c
            res = rec(rest)
            if res is not None:
                return res
            colors[best_v] = 0
        return None

    res = rec(uncolored)
    if res is None:
        for v in uncolored:
            colors[v] = 0
    return res


def complete_coloring(g, partial, k, budget=None):
    """Public wrapper: extend `partial` (0 = uncolored) properly with k
    colors, or return None."""
    colors = list(partial)
    for u, v in g.edges:
        if colors[u] and colors[u] == colors[v]:
            return None
    return _extend(g, k, colors, _Ticker(budget))


# --- b-coloring existence --------------------------------------------------

def _conflicts(g, colors, u, c):
    for w in g.neighbors[u]:
        if colors[w] == c:
            return True
    return False


def _branch(g, k, S, colors, ticker):
    """Satisfy every designated vertex's missing-color requirements."""
    nbr = g.neighbors
    best = None
    for pos, s in enumerate(S):
        own = pos + 1
        seen = set()
        unc = []
        for u in nbr[s]:
            if colors[u]:
                seen.add(colors[u])
            else:
                unc.append(u)
        for c in range(1, k + 1):
            if c == own or c in seen:
                continue
            cands = [u for u in unc if not _conflicts(g, colors, u, c)]
            if not cands:
                return None
            if best is None or len(cands) < len(best[2]):
                best = (s, c, cands)
        if best is not None and len(best[2]) == 1:
            break
    if best is None:
        full = _extend(g, k, colors, ticker)
        if full is None:
            return None
        return full
    _, c, cands = best
    for u in cands:
        ticker.tick()
        colors[u] = c
        res = _branch(g, k, S, colors, ticker)
        if res is not None:
            return res
        colors[u] = 0
    return None


def _try_subset(g, k, S, ticker):
    colors = [0] * g.n
    for pos, v in enumerate(S):
        colors[v] = pos + 1
    full = _branch(g, k, S, colors, ticker)
    if full is None:
        return None
    cert = BColoringCertificate(Coloring(full, k),
                                {pos + 1: v for pos, v in enumerate(S)})
    return cert


def _eligible(g, k):
    return [v for v in range(g.n) if g.degrees[v] >= k - 1]


def _subset_chunk(args):
    g, k, chunk, budget = args
    ticker = _Ticker(budget)
    for S in chunk:
        cert = _try_subset(g, k, S, ticker)
        if cert is not None:
            return ("found", cert, ticker.nodes)
    return ("exhausted", None, ticker.nodes)


def has_b_coloring(g, k, budget=None, workers=1, _nodes_out=None):
    """A validating certificate with exactly k colors, or None (complete
    search). Values of k above the m-degree are trivially infeasible and
    answered None without search."""
    if g.n == 0:
        raise ValueError("b-coloring of the empty graph")
    if k < 1:
        raise ValueError("palette size must be >= 1")
    nodes_used = 0
    try:
        if k > m_degree(g):
            return None
        elig = _eligible(g, k)
        if len(elig) < k:
            return None
        subsets = combinations(elig, k)
        if workers <= 1:
            ticker = _Ticker(budget)
            try:
                for S in subsets:
                    cert = _try_subset(g, k, S, ticker)
                    if cert is not None:
                        return cert
                return None
            finally:
                nodes_used = ticker.nodes
        return _has_b_coloring_parallel(g, k, list(subsets), budget, workers,
                                        _nodes_out)
    finally:
        if _nodes_out is not None and workers <= 1:
            _nodes_out.append(nodes_used)


def _has_b_coloring_parallel(g, k, subsets, budget, workers, nodes_out):
    from concurrent.futures import ProcessPoolExecutor

    chunk_size = max(1, math.ceil(len(subsets) / (workers * 8)))
    chunks = [subsets[i:i + chunk_size] for i in range(0, len(subsets), chunk_size)]
    total_nodes = 0
    result = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_subset_chunk, (g, k, ch, budget)) for ch in chunks]
        try:
            # consume strictly in submission order so the answer (the first
            # succeeding subset in lexicographic order) matches workers=1
            for fut in futures:
                status, cert, nodes = fut.result()
                total_nodes += nodes
                if status == "found":
                    result = cert
                    break
        finally:
            for fut in futures:
                fut.cancel()
    if nodes_out is not None:
        nodes_out.append(total_nodes)
    return result


@dataclass
class SearchReport:
    phi: int
    witness: BColoringCertificate
    nodes_explored: int
    elapsed: float
    per_k_outcomes: dict
    budget: SolverBudget = field(default_factory=SolverBudget)

    def to_json_obj(self, g):
        from bchroma.coloring import coloring_to_json_obj

        return {
            "phi": self.phi,
            "nodes_explored": self.nodes_explored,
            "elapsed_seconds": round(self.elapsed, 6),
            "per_k_outcomes": {str(k): v for k, v in sorted(self.per_k_outcomes.items())},
            "budget": {"max_nodes": self.budget.max_nodes,
                       "max_seconds": self.budget.max_seconds},
            "witness": coloring_to_json_obj(g, self.witness),
        }


def b_chromatic_number(g, budget=None, workers=1):
    """Largest k admitting a b-coloring, testing every k from the m-degree
    down (the feasible set may have gaps, so no binary search)."""
    start = time.monotonic()
    outcomes = {}
    total_nodes = 0
    budget = budget or SolverBudget()
    for k in range(m_degree(g), 0, -1):
        sink = []
        try:
            cert = has_b_coloring(g, k, budget=budget, workers=workers,
                                  _nodes_out=sink)
        except BudgetExceeded as exc:
            exc.partial = {"per_k_outcomes": outcomes}
            exc.nodes += total_nodes
            raise
        total_nodes += sink[0] if sink else 0
        if cert is not None:
            outcomes[k] = "found"
            return SearchReport(k, cert, total_nodes,
                                time.monotonic() - start, outcomes, budget)
        outcomes[k] = "exhausted"
    raise RuntimeError("no b-coloring at any k >= 1; unreachable for n >= 1")


# --- counting --------------------------------------------------------------

@dataclass
class CountReport:
    k: int
    count: int
    total_assignments: int
    probability: Fraction
    nodes: int
    elapsed: float
    method: str
    budget: SolverBudget = field(default_factory=SolverBudget)

    def probability_percent(self):
        return "%.4g%%" % (float(self.probability) * 100.0)

    def to_json_obj(self):
        return {
            "k": self.k,
            "count": self.count,
            "total_assignments": self.total_assignments,
            "probability": "%d/%d" % (self.probability.numerator,
                                      self.probability.denominator),
            "probability_percent": self.probability_percent(),
            "nodes": self.nodes,
            "elapsed_seconds": round(self.elapsed, 6),
            "method": self.method,
            "budget": {"max_nodes": self.budget.max_nodes,
                       "max_seconds": self.budget.max_seconds},
        }


def _is_b_leaf(g, colors, k):
    covered = set()
    for v in range(g.n):
        c = colors[v]
        if c in covered:
            continue
        seen = {colors[u] for u in g.neighbors[v]}
        ok = True
        for other in range(1, k + 1):
            if other != c and other not in seen:
                ok = False
                break
        if ok:
            covered.add(c)
    return len(covered) == k


def _count_from_prefix(g, k, prefix, factor, ticker):
    """Count completions of a partial assignment over the first len(prefix)
    vertices. In factored mode the prefix and the completions follow the
    first-use canonical order (vertex v may open color maxc+1 only)."""
    n = g.n
    nbr = g.neighbors
    colors = [0] * n
    maxc = 0
    for v, c in enumerate(prefix):
        colors[v] = c
        maxc = max(maxc, c)
    start = len(prefix)
    count = 0

    def rec(v, maxc):
        nonlocal count
        if v == n:
            if maxc == k and _is_b_leaf(g, colors, k):
                count += 1
            return
        if maxc + (n - v) < k:
            return
        forb = set()
        for u in nbr[v]:
            if u < v:
                forb.add(colors[u])
        top = min(k, maxc + 1) if factor else k
        for c in range(1, top + 1):
            if c in forb:
                continue
            ticker.tick()
            colors[v] = c
            rec(v + 1, max(maxc, c))
        colors[v] = 0

    rec(start, maxc)
    return count


def _count_prefixes(g, k, depth, factor):
    """All proper partial assignments over vertices 0..depth-1, in
    deterministic order (canonical in factored mode)."""
    prefixes = [[]]
    for v in range(depth):
        nxt = []
        for pre in prefixes:
            maxc = max(pre, default=0)
            forb = {pre[u] for u in g.neighbors[v] if u < v}
            top = min(k, maxc + 1) if factor else k
            for c in range(1, top + 1):
                if c not in forb:
                    nxt.append(pre + [c])
        prefixes = nxt
    return prefixes


def _count_task(args):
    g, k, prefix, factor, budget = args
    ticker = _Ticker(budget)
    return _count_from_prefix(g, k, prefix, factor, ticker), ticker.nodes


def count_b_colorings(g, k, budget=None, workers=1, factor_colors=True):
    """Exact number of labeled assignments V -> [1..k] that are proper and
    have a b-vertex for every color in [1..k].

    factor_colors=True enumerates one representative per color permutation
    (first-use canonical order) and multiplies by k!; the group of color
    permutations acts freely on b-colorings that use all k colors, so the
    result is the same labeled count. factor_colors=False enumerates every
    labeled assignment directly (no symmetry reduction).
    """
    if g.n == 0:
        raise ValueError("counting on the empty graph")
    if k < 1:
        raise ValueError("palette size must be >= 1")
    total = k ** g.n
    if total > COUNT_LEAF_BOUND:
        raise ValueError("k^|V| = %d exceeds the enumeration bound %d"
                         % (total, COUNT_LEAF_BOUND))
    start = time.monotonic()
    budget = budget or SolverBudget()
    method = "factored" if factor_colors else "direct"
    if workers <= 1:
        ticker = _Ticker(budget)
        try:
            raw = _count_from_prefix(g, k, [], factor_colors, ticker)
        except BudgetExceeded as exc:
            exc.partial = {"lower_bound": 0}
            raise
        nodes = ticker.nodes
    else:
        from concurrent.futures import ProcessPoolExecutor

        depth = min(3, g.n)
        prefixes = _count_prefixes(g, k, depth, factor_colors)
        raw = 0
        nodes = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for sub, sub_nodes in pool.map(
                    _count_task,
                    [(g, k, pre, factor_colors, budget) for pre in prefixes]):
                raw += sub
                nodes += sub_nodes
    count = raw * math.factorial(k) if factor_colors else raw
    return CountReport(k, count, total, Fraction(count, total), nodes,
                       time.monotonic() - start, method, budget)
