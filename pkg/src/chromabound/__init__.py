"""Randić-type indices, coloring invariants and adjacency spectra of small graphs."""

from .graph import (
    Graph,
    canonical_form,
    components,
    delete_vertex,
    enumerate_graphs,
    make_family,
    parse_graph6,
    to_graph6,
)
from .indices import deletion_delta, equality_condition, harmonic, r_prime, randic

__version__ = "0.1.0"
