"""Per-graph analysis: every invariant, index, spectrum and bound for one graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .. import coloring, indices
from ..graph import Graph, canonical_form, make_family, to_graph6
from ..spectral import (
    BoundReport,
    SpectralInputs,
    SpectralSummary,
    eigenvalues,
    evaluate_spectral_bounds,
    make_report,
    skipped_report,
)

INDEX_TOL = 1e-9


@dataclass(frozen=True)
class DeletionCheck:
    vertex: int
    delta: Fraction
    condition: bool

    @property
    def ok(self) -> bool:
        return self.delta >= 0 and (self.delta == 0) == self.condition


@dataclass(frozen=True)
class GraphRecord:
    graph6: str
    n: int
    m: int
    min_degree: int
    max_degree: int
    connected: bool
    chi: int | None
    col: int
    grundy: int | None
    psi: int | None
    randic: float
    harmonic: Fraction
    r_prime: Fraction
    spectrum: SpectralSummary
    family_match: str
    complete_plus_isolated: bool
    bounds: tuple[BoundReport, ...]
    deletions: tuple[DeletionCheck, ...]

    @property
    def has_isolated(self) -> bool:
        return self.n > 0 and self.min_degree == 0

    @property
    def is_tree(self) -> bool:
        return self.connected and self.n >= 1 and self.m == self.n - 1

    @property
    def equality_flags(self) -> list[str]:
        return [b.bound for b in self.bounds if b.skipped is None and b.equality]

    def bound(self, name: str) -> BoundReport:
        for b in self.bounds:
            if b.bound == name:
                return b
        raise KeyError(name)

    def to_dict(self) -> dict:
        """JSON-ready dict with a fixed field order."""
        sp = self.spectrum
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "connected": self.connected,
            "chi": self.chi,
            "col": self.col,
            "grundy": self.grundy,
            "psi": self.psi,
            "randic": self.randic,
            "harmonic": fraction_str(self.harmonic),
            "harmonic_float": float(self.harmonic),
            "r_prime": fraction_str(self.r_prime),
            "r_prime_float": float(self.r_prime),
            "eigenvalues": list(sp.eigenvalues),
            "inertia": [sp.pi, sp.nu, sp.gamma],
            "s_plus": sp.s_plus,
            "s_minus": sp.s_minus,
            "zero_tol": sp.zero_tol,
            "near_zero_review": sp.near_zero,
            "family_match": self.family_match,
            "equality_flags": self.equality_flags,
        }


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def _kite_forms(n: int) -> tuple[tuple[int, tuple[int, ...], bytes], ...]:
    out = []
    for k in range(n, 1 if n > 1 else 0, -1):
        K = make_family("kite", n, k)
        out.append((k, tuple(sorted(K.degrees)), canonical_form(K, limit=None)))
    return tuple(out)


def family_match(G: Graph) -> str:
    """``K_n``, ``K_{1,n-1}``, ``kite(k=..)`` or ``none``, decided by canonical form.

    Degree sequences only preselect the candidate; the match itself is a
    canonical-form comparison.
    """
    if G.n == 0:
        return "none"
    degs = tuple(sorted(G.degrees))
    for k, kdegs, form in _kite_forms(G.n):
        if degs == kdegs and canonical_form(G, limit=None) == form:
            if k == G.n:
                return "K_n"
            if k <= 2:
                return "K_{1,n-1}"
            return f"kite(k={k})"
    return "none"


def is_complete_plus_isolated(G: Graph) -> bool:
    """A complete graph on at least two vertices plus any number of isolated vertices."""
    core = [v for v in range(G.n) if G.degree(v) > 0]
    return len(core) >= 2 and all(G.degree(v) == len(core) - 1 for v in core)


def combinatorial_bounds(G: Graph, gid: str, chi, col, grundy, psi, bundle: indices.IndexBundle):
    """Exact and index-based inequalities, each gated on its hypothesis."""
    out: list[BoundReport] = []
    r, h, rp = bundle.r, bundle.h, bundle.r_prime
    isolated = G.has_isolated_vertex()
    missing = "not computed (n above search limit)"

    def add(bound, lhs_name, rhs_name, lhs, rhs, *, skip=None, conjecture=False, tol=None):
        if skip is None and (lhs is None or rhs is None):
            skip = missing
        if skip:
            out.append(skipped_report(gid, bound, lhs_name, rhs_name, skip, conjecture))
        else:
            out.append(make_report(gid, bound, lhs_name, rhs_name, lhs, rhs, conjecture, tol))

    no_edges = "m = 0" if G.m == 0 else None
    has_iso = "isolated vertex" if isolated or G.n == 0 else None
    empty = "n = 0" if G.n == 0 else None

    add("chain1.R'<=H", "R'", "H", rp, h)
    add("chain1.H<=R", "H", "R", float(h), r, tol=INDEX_TOL)
    add("thm11.chi<=2R", "chi", "2R", chi, 2 * r, skip=no_edges, tol=INDEX_TOL)
    add("thm12.chi<=2H", "chi", "2H", chi, 2 * h, skip=no_edges)
    add("thm13.col<=2R", "col", "2R", col, 2 * r, skip=has_iso, tol=INDEX_TOL)
    add("thm14.col<=2R'", "col", "2R'", col, 2 * rp, skip=has_iso)
    add("cor15.chi<=2R'", "chi", "2R'", chi, 2 * rp, skip=has_iso)
    add("cor17.col<=2H", "col", "2H", col, 2 * h, skip=has_iso)
    add("tree.1<=R'", "1", "R'", 1, rp, skip=None if G.is_tree() and G.n >= 2 else "not a tree with n >= 2")
    dplus1 = G.max_degree + 1
    add("chain36.chi<=col", "chi", "col", chi, col, skip=empty)
    add("chain36.col<=Delta+1", "col", "Delta+1", col, dplus1, skip=empty)
    add("chain36.chi<=grundy", "chi", "grundy", chi, grundy, skip=empty)
    add("chain36.grundy<=Delta+1", "grundy", "Delta+1", grundy, dplus1, skip=empty)
    add("chain36.grundy<=psi", "grundy", "psi", grundy, psi, skip=empty)
    add("chain36.chi<=psi", "chi", "psi", chi, psi, skip=empty)
    add("c41.psi<=2R'", "psi", "2R'", psi, 2 * rp, skip=has_iso, conjecture=True)
    add("c42.grundy<=2R'", "grundy", "2R'", grundy, 2 * rp, skip=has_iso, conjecture=True)
    return out


def analyze(G: Graph) -> GraphRecord:
    """Compute the full record for ``G``; searches beyond their size limits yield ``None``."""
    gid = to_graph6(G)
    chi = coloring.chromatic_number(G) if G.n <= coloring.CHROMATIC_LIMIT else None
    grundy = coloring.grundy_number(G) if G.n <= coloring.GRUNDY_LIMIT else None
    psi = coloring.achromatic_number(G) if G.n <= coloring.ACHROMATIC_LIMIT else None
    col = coloring.coloring_number(G)
    bundle = indices.index_bundle(G)
    spectrum = eigenvalues(G)
    bounds = combinatorial_bounds(G, gid, chi, col, grundy, psi, bundle)
    bounds += evaluate_spectral_bounds(G, SpectralInputs(gid, spectrum, bundle.r, col, chi, psi))
    deletions = tuple(
        DeletionCheck(v, indices.deletion_delta(G, v), indices.equality_condition(G, v))
        for v in indices.min_degree_vertices(G)
    )
    return GraphRecord(
        graph6=gid,
        n=G.n,
        m=G.m,
        min_degree=G.min_degree,
        max_degree=G.max_degree,
        connected=G.is_connected(),
        chi=chi,
        col=col,
        grundy=grundy,
        psi=psi,
        randic=bundle.r,
        harmonic=bundle.h,
        r_prime=bundle.r_prime,
        spectrum=spectrum,
        family_match=family_match(G),
        complete_plus_isolated=is_complete_plus_isolated(G),
        bounds=tuple(bounds),
        deletions=deletions,
    )
