"""Simple undirected graphs, graph6 I/O, named families and small-graph enumeration.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable; every
operation that changes structure returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_N = 64
CANONICAL_LIMIT = 10
ENUMERATION_LIMIT = 7

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for structurally invalid graphs or out-of-range parameters."""


class Graph6Error(ValueError):
    """Raised when a graph6 string cannot be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency list length does not match n")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise GraphError(f"loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list; loops and repeated edges are rejected."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"repeated edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, tuple(frozenset(v for v in range(n) if masks[u] >> v & 1) for u in range(n)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; bit ``v`` of ``masks[u]`` is set iff ``uv`` is an edge."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def has_isolated_vertex(self) -> bool:
        return any(d == 0 for d in self.degrees)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self._component_sets()[0]) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            tuple(frozenset(index[w] for w in self.adj[v] if w in index) for v in vertices),
        )

    def _component_sets(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# graph6 ---------------------------------------------------------------------

def _triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted)."""
    s = text.strip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} out of range [63,126]", base + i)

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("8-byte size encoding not supported", base + 1)
        if len(s) < 4:
            raise Graph6Error("truncated size field", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
        if n > MAX_N:
            raise Graph6Error(f"n={n} exceeds maximum {MAX_N}", base + 1)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, found {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after graph data", base + pos + nbytes)

    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    edges = [pair for pair, bit in zip(_triangle_pairs(n), bits) if bit]
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> str:
    """Encode ``G`` as a graph6 string (no header, no newline)."""
    n = G.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= MAX_N:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        raise GraphError(f"n={n} too large for graph6 encoding")
    bits = [1 if G.has_edge(i, j) else 0 for i, j in _triangle_pairs(n)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for non-blank lines, skipping bare headers."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        yield lineno, line


# families -------------------------------------------------------------------

def make_family(family: str, n: int, k: int | None = None) -> Graph:
    """Named graphs: ``complete``, ``star`` (K_{1,n-1}), ``path``, ``cycle`` and ``kite``.

    ``kite`` is the complete graph on ``k`` vertices with ``n - k`` pendant
    vertices attached to one clique vertex.  Vertex 0 is the shared center,
    ``1..k-1`` are the remaining clique vertices, ``k..n-1`` the pendants.
    """
    if n < 1:
        raise GraphError("family graphs need n >= 1")
    if family == "complete":
        return Graph.from_edges(n, combinations(range(n), 2))
    if family == "star":
        return Graph.from_edges(n, ((0, v) for v in range(1, n)))
    if family == "path":
        return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))
    if family == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))
    if family == "kite":
        if k is None or not 1 <= k <= n:
            raise GraphError(f"kite needs 1 <= k <= n, got k={k}, n={n}")
        edges = list(combinations(range(k), 2)) + [(0, v) for v in range(k, n)]
        return Graph.from_edges(n, edges)
    raise GraphError(f"unknown family {family!r}")


def delete_vertex(G: Graph, v: int) -> Graph:
    """``G - v``; vertices above ``v`` shift down by one."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for n={G.n}")
    return G.induced([u for u in range(G.n) if u != v])


def components(G: Graph) -> list[Graph]:
    """Connected components, ordered by smallest original vertex id."""
    return [G.induced(comp) for comp in G._component_sets()]


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges())
        offset += H.n
    return Graph.from_edges(offset, edges)


# canonical form -------------------------------------------------------------

def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Equitable refinement: split cells by neighbor counts into every cell until stable.
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(bin(masks[v] & cm).count("1") for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _labeling_key(masks: Sequence[int], order: Sequence[int]) -> int:
    # Bit string of the relabeled upper triangle, first pair most significant.
    key = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            key = (key << 1) | ((mj >> order[i]) & 1)
    return key


def _canonical_order(G: Graph) -> list[int]:
    masks = G.masks
    n = G.n
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(G.degree(v), []).append(v)
    root = _refine(masks, [by_degree[d] for d in sorted(by_degree)])

    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _labeling_key(masks, order)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # twins u, v are swapped by an automorphism fixing this node
            if any(masks[u] & ~(1 << v) == masks[v] & ~(1 << u) for u in tried):
                continue
            tried.append(v)
            split = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:]
            search(_refine(masks, split))

    search(root)
    return best[1]


def canonical_labeling(G: Graph, limit: int | None = CANONICAL_LIMIT) -> list[int]:
    """Permutation ``perm`` such that ``G.relabel(perm)`` is the canonical representative."""
    if limit is not None and G.n > limit:
        raise GraphError(f"canonical form limited to n <= {limit}, got n={G.n}")
    order = _canonical_order(G) if G.n else []
    perm = [0] * G.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return perm


def canonical_form(G: Graph, limit: int | None = CANONICAL_LIMIT) -> bytes:
    """Isomorphism-invariant key: the graph6 bytes of the canonical relabeling.

    The canonical relabeling minimizes the upper-triangle bit string over all
    labelings compatible with an equitable refinement of the degree partition,
    so two graphs share a key exactly when they are isomorphic.
    """
    return to_graph6(canonical_graph(G, limit)).encode("ascii")


def canonical_graph(G: Graph, limit: int | None = CANONICAL_LIMIT) -> Graph:
    return G.relabel(canonical_labeling(G, limit))


def is_isomorphic(G: Graph, H: Graph, limit: int | None = CANONICAL_LIMIT) -> bool:
    if G.n != H.n or G.m != H.m or sorted(G.degrees) != sorted(H.degrees):
        return False
    return canonical_form(G, limit) == canonical_form(H, limit)


# enumeration ----------------------------------------------------------------

FILTERS = ("all", "connected", "no_isolated")


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    # Every n-vertex graph is some (n-1)-vertex graph plus a vertex joined to a subset.
    if n == 1:
        return (Graph(1, (frozenset(),)),)
    seen: dict[bytes, Graph] = {}
    for H in _all_classes(n - 1):
        base = list(H.masks)
        for subset in range(1 << (n - 1)):
            masks = [mk | (((subset >> u) & 1) << (n - 1)) for u, mk in enumerate(base)]
            masks.append(subset)
            G = Graph.from_masks(masks)
            canon = canonical_graph(G, limit=None)
            seen.setdefault(to_graph6(canon).encode("ascii"), canon)
    ordered = sorted(seen.items(), key=lambda kv: (kv[1].m, kv[0]))
    return tuple(g for _, g in ordered)


def enumerate_graphs(n: int, filter: str = "all") -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class on ``n`` vertices.

    Order is by edge count, then canonical key.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise GraphError(f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_LIMIT}, got {n}")
    if filter not in FILTERS:
        raise GraphError(f"unknown filter {filter!r}")
    for G in _all_classes(n):
        if filter == "connected" and not G.is_connected():
            continue
        if filter == "no_isolated" and G.has_isolated_vertex():
            continue
        yield G
