"""Simple graphs on vertices 1..n with bitset adjacency, and their invariants."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import BadParams, Disconnected, OutOfRange, TooLarge
from .exactfield import DEFAULT_PRIME
from .quadspace import QuadIdeal, monomial_ideal

ALPHA_MAX_N = 50
MCN_MAX_N = 20
THETA_MAX_N = 20
COVER_MAX_N = 16


@dataclass(frozen=True)
class Graph:
    """Adjacency row v-1 holds a bitmask whose bit u-1 marks the edge {u, v}."""

    n: int
    adj: tuple
    name: str = ""

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise BadParams("adjacency length differs from n")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise BadParams(f"loop at vertex {v + 1}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise BadParams("adjacency is not symmetric")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def neighbors(self, v: int) -> list:
        return [u + 1 for u in _bits(self.adj[v - 1])]

    def degree(self, v: int) -> int:
        return bin(self.adj[v - 1]).count("1")

    def edges(self) -> list:
        return [(i + 1, j + 1) for i in range(self.n) for j in _bits(self.adj[i]) if j > i]

    @property
    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def key(self) -> tuple:
        return (self.n, self.adj)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"Graph(n={self.n}, m={self.num_edges}{tag})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edges(n: int, edges, name: str = "") -> Graph:
    adj = [0] * n
    for i, j in edges:
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise OutOfRange(f"bad edge {(i, j)} for n = {n}")
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return Graph(n, tuple(adj), name)


def graph_from_json(data) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    return from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


# -- families ----------------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n, f"empty{n}")


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), f"K{n}")


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(1, n)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs n >= 3")
    return from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)], f"C{n}")


def star(n: int) -> Graph:
    if n < 2:
        raise BadParams("a star needs n >= 2")
    return from_edges(n, [(1, i) for i in range(2, n + 1)], f"S{n}")


def wheel(n: int) -> Graph:
    if n < 4:
        raise BadParams("a wheel needs n >= 4")
    return rename(join(complete(1), cycle(n - 1)), f"W{n}")


def complete_multipartite(parts) -> Graph:
    parts = list(parts)
    if not parts or any(k < 1 for k in parts):
        raise BadParams("parts must be positive")
    g = empty(parts[0])
    for k in parts[1:]:
        g = join(g, empty(k))
    return rename(g, "K" + ",".join(map(str, parts)))


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 6, (i + 2) % 5 + 6) for i in range(5)]
    return from_edges(10, outer + spokes + inner, "Petersen")


def petersen_spokes() -> list:
    return [(i, i + 5) for i in range(1, 6)]


def wagner() -> Graph:
    rim = [(i, i % 8 + 1) for i in range(1, 9)]
    diag = [(i, i + 4) for i in range(1, 5)]
    return from_edges(8, rim + diag, "M8")


def kite(n: int) -> Graph:
    """Complete graphs K_{n-2} and K_2 glued at one vertex (n-1 vertices)."""
    if n < 4:
        raise BadParams("kite needs n >= 4")
    return rename(wedge(complete(n - 2), n - 2, complete(2), 1), f"T{n}")


def jellyfish(m: int, k: int) -> Graph:
    """K_m on 1..m with k pendant edges {1, m+j}."""
    if m < 1 or k < 0:
        raise BadParams("need m >= 1, k >= 0")
    edges = [(i, j) for i, j in combinations(range(1, m + 1), 2)]
    edges += [(1, m + j) for j in range(1, k + 1)]
    return from_edges(m + k, edges, f"J{m},{k}")


def rename(g: Graph, name: str) -> Graph:
    return Graph(g.n, g.adj, name)


# -- operations ----------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = tuple(row | hmask for row in g.adj) + tuple((row << g.n) | gmask for row in h.adj)
    return Graph(g.n + h.n, adj)


def wedge(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Glue vertex v of h onto vertex u of g; h's other vertices follow g's in order."""
    if not (1 <= u <= g.n and 1 <= v <= h.n):
        raise OutOfRange("wedge vertex out of range")
    label = {}
    nxt = g.n + 1
    for w in range(1, h.n + 1):
        if w == v:
            label[w] = u
        else:
            label[w] = nxt
            nxt += 1
    edges = g.edges() + [(label[a], label[b]) for a, b in h.edges()]
    return from_edges(g.n + h.n - 1, edges)


def induced_subgraph(g: Graph, verts) -> Graph:
    verts = sorted(set(verts))
    if any(not 1 <= v <= g.n for v in verts):
        raise OutOfRange("vertex out of range")
    pos = {v: k + 1 for k, v in enumerate(verts)}
    edges = [(pos[a], pos[b]) for a, b in g.edges() if a in pos and b in pos]
    return from_edges(len(verts), edges)


def add_isolated(g: Graph, d: int) -> Graph:
    return Graph(g.n + d, g.adj + (0,) * d)


def add_edge(g: Graph, i: int, j: int) -> Graph:
    if i == j or not (1 <= i <= g.n and 1 <= j <= g.n):
        raise OutOfRange("bad edge")
    return from_edges(g.n, set(g.edges()) | {(min(i, j), max(i, j))})


def remove_edge(g: Graph, i: int, j: int) -> Graph:
    if i == j or not (1 <= i <= g.n and 1 <= j <= g.n):
        raise OutOfRange("bad edge")
    return from_edges(g.n, set(g.edges()) - {(min(i, j), max(i, j))})


def relabel(g: Graph, perm) -> Graph:
    """perm[v-1] is the new label of vertex v."""
    perm = [int(x) for x in perm]
    if sorted(perm) != list(range(1, g.n + 1)):
        raise BadParams("not a permutation of 1..n")
    return from_edges(g.n, [(perm[a - 1], perm[b - 1]) for a, b in g.edges()])


def edge_ideal(g: Graph, p: int = DEFAULT_PRIME) -> QuadIdeal:
    return monomial_ideal(g.n, g.edges(), p)


# -- invariants ------------------------------------------------------------------


def _max_independent(adj, cand: int) -> int:
    """Size of a maximum independent set inside the vertex mask cand."""
    best = 0

    def grow(size, cand):
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        # branch on a max-degree vertex: take it, or drop it
        v = max(_bits(cand), key=lambda x: bin(adj[x] & cand).count("1"))
        if adj[v] & cand == 0:
            grow(size + 1, cand & ~(1 << v))
            return
        grow(size + 1, cand & ~adj[v] & ~(1 << v))
        grow(size, cand & ~(1 << v))

    grow(0, cand)
    return best


def independence_number(g: Graph) -> int:
    if g.n > ALPHA_MAX_N:
        raise TooLarge(f"independence number guard is n <= {ALPHA_MAX_N}")
    return _max_independent(g.adj, (1 << g.n) - 1)


def vertex_cover_number(g: Graph) -> int:
    return g.n - independence_number(g)


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


def lex_bfs(g: Graph) -> list:
    """Lexicographic BFS order (1-based vertices), by partition refinement."""
    parts = [list(range(1, g.n + 1))] if g.n else []
    order = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        row = g.adj[v - 1]
        new = []
        for part in parts:
            inside = [u for u in part if row >> (u - 1) & 1]
            outside = [u for u in part if not row >> (u - 1) & 1]
            if inside:
                new.append(inside)
            if outside:
                new.append(outside)
        parts = new
    return order


def is_chordal(g: Graph) -> bool:
    order = lex_bfs(g)
    # the reverse of a LexBFS order is a perfect elimination ordering iff g is chordal
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        rest = 0
        for u in earlier:
            if u != parent:
                rest |= 1 << (u - 1)
        if rest & ~g.adj[parent - 1]:
            return False
    return True


def shortest_hole(g: Graph, best: int | None = None) -> int | None:
    """Length of a shortest induced cycle of length >= 4, by induced-path DFS."""
    adj = g.adj
    found = best

    def extend(first, last, inner, length):
        # induced path first .. last on ``length`` vertices; inner excludes both ends
        nonlocal found
        if found is not None and length + 1 >= found:
            return
        above = adj[last] & ~((2 << first) - 1)  # the start is the smallest vertex
        for w in _bits(above):
            if adj[w] & inner or (inner >> w) & 1:
                continue
            if adj[w] >> first & 1:
                if length >= 3:
                    found = length + 1
                    return
                continue
            extend(first, w, inner | (1 << last), length + 1)

    for s in range(g.n):
        for v in _bits(adj[s] & ~((2 << s) - 1)):
            extend(s, v, 0, 2)
    return found


def mcn(g: Graph) -> int | None:
    if g.n > MCN_MAX_N:
        raise TooLarge(f"mcn guard is n <= {MCN_MAX_N}")
    comp = complement(g)
    if is_chordal(comp):
        return None
    return shortest_hole(comp)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR-style branch and bound."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    greedy = _greedy_colors(g)
    best = max(greedy) + 1
    lower = clique_number(g)
    if lower == best:
        return best
    colors = [-1] * n

    def pick():
        v_best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = {colors[u] for u in _bits(adj[v]) if colors[u] >= 0}
            k = (len(sat), bin(adj[v]).count("1"))
            if key is None or k > key:
                v_best, key = v, k
        return v_best

    def solve(used, done):
        nonlocal best
        if done == n:
            best = min(best, used)
            return
        if used >= best or best == lower:
            return
        v = pick()
        forbidden = {colors[u] for u in _bits(adj[v]) if colors[u] >= 0}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colors[v] = c
            solve(max(used, c + 1), done + 1)
            colors[v] = -1
            if best == lower:
                return

    solve(0, 0)
    return best


def _greedy_colors(g):
    order = sorted(range(g.n), key=lambda v: -bin(g.adj[v]).count("1"))
    col = [-1] * g.n
    for v in order:
        taken = {col[u] for u in _bits(g.adj[v])}
        c = 0
        while c in taken:
            c += 1
        col[v] = c
    return col


def clique_cover_number(g: Graph) -> int:
    if g.n > THETA_MAX_N:
        raise TooLarge(f"clique cover guard is n <= {THETA_MAX_N}")
    return chromatic_number(complement(g))


def bfs_distances(g: Graph, s: int) -> list:
    dist = [-1] * g.n
    dist[s - 1] = 0
    frontier = 1 << (s - 1)
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise Disconnected("empty vertex set")
    best = 0
    for s in range(1, g.n + 1):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            raise Disconnected("graph is not connected")
        best = max(best, max(dist))
    return best


# -- clique-adjacent edge covers ---------------------------------------------------


def clique_adjacent(g: Graph, e, f) -> bool:
    a, b = e
    c, d = f
    if {a, b} & {c, d}:
        return True
    return any(g.has_edge(x, y) for x in (a, b) for y in (c, d))


def is_edge_cover(g: Graph, edges) -> bool:
    covered = set()
    for a, b in edges:
        if not g.has_edge(a, b):
            return False
        covered |= {a, b}
    return covered == set(range(1, g.n + 1))


def is_k_connected_cover(g: Graph, edges) -> bool:
    edges = list(edges)
    return is_edge_cover(g, edges) and all(
        clique_adjacent(g, e, f) for e, f in combinations(edges, 2))


def iter_k_connected_edge_covers(g: Graph, size: int):
    """Yield edge covers of exactly ``size`` pairwise clique-adjacent edges.

    Search: branch on the lowest uncovered vertex over edges compatible with
    everything chosen so far, then pad with further compatible edges.  A cover
    may be produced more than once.
    """
    if g.n > COVER_MAX_N:
        raise TooLarge(f"edge cover guard is n <= {COVER_MAX_N}")
    edges = g.edges()
    m = len(edges)
    if g.n == 0 or m == 0 or size < 1 or size > m:
        return
    ok = [0] * m
    for x in range(m):
        for y in range(m):
            if x != y and clique_adjacent(g, edges[x], edges[y]):
                ok[x] |= 1 << y
    masks = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in edges]
    at_vertex = [[k for k, (a, b) in enumerate(edges) if v in (a, b)] for v in range(1, g.n + 1)]
    full = (1 << g.n) - 1

    def pad(chosen, compat, need, start):
        if need == 0:
            yield chosen
            return
        for k in range(start, m):
            if compat >> k & 1:
                yield from pad(chosen + [k], compat & ok[k], need - 1, k + 1)

    def cover(chosen, covered, compat):
        if covered == full:
            yield from pad(chosen, compat & ~_mask_of(chosen), size - len(chosen), 0)
            return
        # every further edge covers at most two new vertices
        left = bin(full & ~covered).count("1")
        if (left + 1) // 2 > size - len(chosen):
            return
        free = full & ~covered
        v = (free & -free).bit_length() - 1
        for k in at_vertex[v]:
            if compat >> k & 1:
                yield from cover(chosen + [k], covered | masks[k], compat & ok[k])

    for res in cover([], 0, (1 << m) - 1):
        yield sorted(edges[k] for k in res)


def k_connected_edge_cover(g: Graph, size: int) -> list | None:
    """An edge cover with exactly ``size`` pairwise clique-adjacent edges, or None."""
    return next(iter_k_connected_edge_covers(g, size), None)


def _mask_of(ks):
    out = 0
    for k in ks:
        out |= 1 << k
    return out


def min_k_connected_edge_cover(g: Graph) -> tuple | None:
    if g.n > COVER_MAX_N:
        raise TooLarge(f"edge cover guard is n <= {COVER_MAX_N}")
    for size in range((g.n + 1) // 2, max(g.n, 1)):
        res = k_connected_edge_cover(g, size)
        if res is not None:
            return size, res
    return None


# -- family specs --------------------------------------------------------------------

FAMILIES = {
    "empty": empty,
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "wheel": wheel,
    "petersen": petersen,
    "wagner": wagner,
    "kite": kite,
    "jellyfish": jellyfish,
    "multipartite": lambda *parts: complete_multipartite(parts),
}


def build_family(family: str, *params) -> Graph:
    f = FAMILIES.get(family)
    if f is None:
        raise BadParams(f"unknown family {family!r}")
    try:
        return f(*[int(x) for x in params])
    except TypeError as e:
        raise BadParams(f"bad parameters for {family}: {params}") from e
