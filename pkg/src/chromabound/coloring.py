"""Exact coloring invariants for small graphs.

Each search returns a witness :class:`Coloring` so the result can be checked
with :func:`validate` rather than trusted.  Colors are ``1..k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

CHROMATIC_LIMIT = 10
GRUNDY_LIMIT = 9
ACHROMATIC_LIMIT = 9

KINDS = ("proper", "complete", "grundy")


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    kind: str = "proper"

    @property
    def k(self) -> int:
        return max(self.colors, default=0)


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]
    degeneracy: int
    back_degrees: tuple[int, ...]


def _check_limit(G: Graph, limit: int | None, what: str) -> None:
    if limit is not None and G.n > limit:
        raise GraphError(f"{what} search limited to n <= {limit}, got n={G.n}")


def degeneracy_ordering(G: Graph) -> DegeneracyOrdering:
    """Smallest-last ordering.

    The last vertex has minimum degree in G, the one before it minimum degree
    in what remains, and so on; ties go to the smallest vertex id.
    ``back_degrees[i]`` counts neighbors of ``order[i]`` earlier in the order.
    """
    remaining = set(range(G.n))
    deg = list(G.degrees)
    peeled: list[int] = []
    back: list[int] = []
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        peeled.append(v)
        back.append(deg[v])
        remaining.remove(v)
        for w in G.adj[v]:
            if w in remaining:
                deg[w] -= 1
    peeled.reverse()
    back.reverse()
    return DegeneracyOrdering(tuple(peeled), max(back, default=0), tuple(back))


def degeneracy(G: Graph) -> int:
    return degeneracy_ordering(G).degeneracy


def coloring_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    return degeneracy(G) + 1


def greedy_clique(G: Graph) -> list[int]:
    """A maximal clique grown greedily from high-degree vertices."""
    clique: list[int] = []
    cand = set(range(G.n))
    while cand:
        v = max(cand, key=lambda u: (len(G.adj[u] & cand), -u))
        clique.append(v)
        cand &= G.adj[v]
    return clique


def _k_coloring(G: Graph, k: int) -> list[int] | None:
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    colors = [0] * G.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = {colors[w] for w in G.adj[v]}
        for c in range(1, min(used + 1, k) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if extend(i + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return colors if extend(0, 0) else None


def chromatic_coloring(G: Graph, limit: int | None = CHROMATIC_LIMIT) -> Coloring:
    """Minimum proper coloring by ascending-k backtracking from a clique bound."""
    _check_limit(G, limit, "chromatic")
    if G.n == 0:
        return Coloring((), "proper")
    for k in range(max(1, len(greedy_clique(G))), coloring_number(G) + 1):
        colors = _k_coloring(G, k)
        if colors is not None:
            return Coloring(tuple(colors), "proper")
    raise AssertionError("greedy on a degeneracy order always fits in col(G) colors")


def chromatic_number(G: Graph, limit: int | None = CHROMATIC_LIMIT) -> int:
    return chromatic_coloring(G, limit).k


def first_fit(G: Graph, order) -> tuple[int, ...]:
    colors = [0] * G.n
    for v in order:
        taken = {colors[w] for w in G.adj[v]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return tuple(colors)


def grundy_coloring(G: Graph, limit: int | None = GRUNDY_LIMIT) -> Coloring:
    """Maximum first-fit coloring over all vertex orderings.

    The first-fit outcome of a prefix depends only on which vertices are
    colored and with what, so the search memoizes on partial colorings.
    A branch stops once it reaches the largest color still attainable.
    """
    _check_limit(G, limit, "Grundy")
    if G.n == 0:
        return Coloring((), "grundy")
    adj = G.adj
    deg = G.degrees
    memo: dict[tuple[int, ...], tuple[int, ...]] = {}

    def best(state: tuple[int, ...]) -> tuple[int, ...]:
        if state in memo:
            return memo[state]
        result = None
        # a vertex's first-fit color never exceeds its degree + 1
        cap = max([max(state)] + [deg[v] + 1 for v in range(G.n) if not state[v]])
        for v in range(G.n):
            if state[v]:
                continue
            taken = {state[w] for w in adj[v]}
            c = 1
            while c in taken:
                c += 1
            final = best(state[:v] + (c,) + state[v + 1:])
            if result is None or max(final) > max(result):
                result = final
                if max(result) == cap:
                    break
        if result is None:
            result = state
        memo[state] = result
        return result

    return Coloring(best((0,) * G.n), "grundy")


def grundy_number(G: Graph, limit: int | None = GRUNDY_LIMIT) -> int:
    return grundy_coloring(G, limit).k


def _complete_coloring(G: Graph, k: int) -> list[int] | None:
    """A proper coloring with exactly ``k`` classes, every pair of classes joined by an edge."""
    n = G.n
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    masks = G.masks
    class_masks: list[int] = []
    colors = [0] * n

    def is_complete() -> bool:
        for i in range(k):
            touch = 0
            for v in range(n):
                if class_masks[i] >> v & 1:
                    touch |= masks[v]
            for j in range(i + 1, k):
                if not touch & class_masks[j]:
                    return False
        return True

    def extend(i: int) -> bool:
        if n - i < k - len(class_masks):
            return False
        if i == n:
            return is_complete()
        v = order[i]
        for c, cm in enumerate(class_masks):
            if not cm & masks[v]:
                class_masks[c] |= 1 << v
                colors[v] = c + 1
                if extend(i + 1):
                    return True
                class_masks[c] &= ~(1 << v)
        if len(class_masks) < k:
            class_masks.append(1 << v)
            colors[v] = len(class_masks)
            if extend(i + 1):
                return True
            class_masks.pop()
        colors[v] = 0
        return False

    return colors if extend(0) else None


def achromatic_coloring(G: Graph, limit: int | None = ACHROMATIC_LIMIT) -> Coloring:
    """Largest complete coloring, trying k downward from the k(k-1) <= 2m cap."""
    _check_limit(G, limit, "achromatic")
    if G.n == 0:
        return Coloring((), "complete")
    k = 1
    while (k + 1) * k <= 2 * G.m and k + 1 <= G.n:
        k += 1
    for kk in range(k, 0, -1):
        colors = _complete_coloring(G, kk)
        if colors is not None:
            return Coloring(tuple(colors), "complete")
    raise AssertionError("a single class is always a complete 1-coloring")


def achromatic_number(G: Graph, limit: int | None = ACHROMATIC_LIMIT) -> int:
    return achromatic_coloring(G, limit).k


def validate(G: Graph, c: Coloring | tuple[int, ...], kind: str = "proper") -> bool:
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != G.n or any(x < 1 for x in colors):
        raise ValueError("coloring must assign a color >= 1 to every vertex")
    if kind not in KINDS:
        raise ValueError(f"unknown coloring class {kind!r}")
    k = max(colors, default=0)
    if set(colors) != set(range(1, k + 1)):
        return False
    edges = G.edges()
    if any(colors[u] == colors[v] for u, v in edges):
        return False
    if kind == "complete":
        seen = {frozenset((colors[u], colors[v])) for u, v in edges}
        return len(seen) == k * (k - 1) // 2
    if kind == "grundy":
        for v in range(G.n):
            around = {colors[w] for w in G.adj[v]}
            if not set(range(1, colors[v])) <= around:
                return False
    return True
