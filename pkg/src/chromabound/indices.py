"""Randić-type degree indices.

``harmonic`` and ``r_prime`` are exact :class:`fractions.Fraction` values so
equality cases can be compared without tolerance.  ``randic`` is irrational in
general and is returned as a float accumulated with :func:`math.fsum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, delete_vertex

CHAIN_TOL = 1e-9


@dataclass(frozen=True)
class IndexBundle:
    r: float
    h: Fraction
    r_prime: Fraction

    def chain_holds(self, tol: float = CHAIN_TOL) -> bool:
        return self.r_prime <= self.h and float(self.h) <= self.r + tol


def randic(G: Graph) -> float:
    d = G.degrees
    return math.fsum(1.0 / math.sqrt(d[u] * d[v]) for u, v in G.edges())


def harmonic(G: Graph) -> Fraction:
    d = G.degrees
    return sum((Fraction(2, d[u] + d[v]) for u, v in G.edges()), Fraction(0))


def r_prime(G: Graph) -> Fraction:
    """Sum over edges of ``1 / max(d(u), d(v))``."""
    d = G.degrees
    return sum((Fraction(1, max(d[u], d[v])) for u, v in G.edges()), Fraction(0))


def index_bundle(G: Graph) -> IndexBundle:
    return IndexBundle(randic(G), harmonic(G), r_prime(G))


def deletion_delta(G: Graph, v: int) -> Fraction:
    """Exact ``R'(G) - R'(G - v)``."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for n={G.n}")
    return r_prime(G) - r_prime(delete_vertex(G, v))


def equality_condition(G: Graph, v: int) -> bool:
    """Structural test for ``R'(G) = R'(G - v)`` at a minimum-degree vertex ``v``.

    True iff the neighborhood of ``v`` is independent and every neighbor ``u``
    strictly out-degrees each of its other neighbors.  A neighbor of degree 1
    (``v`` sitting in a K2 component) loses a whole edge and is excluded.
    """
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for n={G.n}")
    if G.degree(v) != G.min_degree:
        raise ValueError(f"vertex {v} has degree {G.degree(v)}, not the minimum {G.min_degree}")
    nbrs = G.neighbors(v)
    if not G.is_independent(nbrs):
        return False
    for u in nbrs:
        du = G.degree(u)
        if du == 1:
            return False
        if any(G.degree(w) >= du for w in G.neighbors(u) if w != v):
            return False
    return True


def min_degree_vertices(G: Graph) -> list[int]:
    delta = G.min_degree
    return [v for v in range(G.n) if G.degree(v) == delta]
