"""Adjacency spectrum, inertia, s+/s- and the spectral bounds built on them."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph

SPECTRAL_TOL = 1e-6
MAX_SWEEPS = 100


def spectral_tol() -> float:
    """Comparison slack for spectral bounds; ``CHROMABOUND_TOL`` overrides the default."""
    raw = os.environ.get("CHROMABOUND_TOL")
    return float(raw) if raw else SPECTRAL_TOL


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    pi: int
    nu: int
    gamma: int
    s_plus: float
    s_minus: float
    zero_tol: float
    near_zero: bool = False

    @property
    def mu(self) -> float:
        return self.eigenvalues[0] if self.eigenvalues else 0.0


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    bound: str
    lhs_name: str
    rhs_name: str
    lhs: float | Fraction | None
    rhs: float | Fraction | None
    slack: float | Fraction | None
    equality: bool
    skipped: str | None = None
    conjecture: bool = False
    tol: float = 0.0

    @property
    def exact(self) -> bool:
        return isinstance(self.slack, (int, Fraction))

    @property
    def violated(self) -> bool:
        return self.skipped is None and self.slack < -self.tol


def jacobi_eigenvalues(matrix: list[list[float]]) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted descending.

    Sweeps run in row-major pair order until the off-diagonal Frobenius norm
    drops below ``1e-12 * n``.
    """
    n = len(matrix)
    a = [list(map(float, row)) for row in matrix]
    eps = 1e-12 * max(n, 1)
    for _ in range(MAX_SWEEPS):
        off = math.sqrt(math.fsum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off < eps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                a[p][q] = a[q][p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return sorted((a[i][i] for i in range(n)), reverse=True)


def adjacency_matrix(G: Graph) -> list[list[float]]:
    return [[1.0 if G.has_edge(i, j) else 0.0 for j in range(G.n)] for i in range(G.n)]


def eigenvalues(G: Graph) -> SpectralSummary:
    """Spectrum and inertia; an eigenvalue with ``|mu| <= 1e-7 * n`` counts as zero."""
    mus = jacobi_eigenvalues(adjacency_matrix(G))
    zero_tol = 1e-7 * G.n
    pos = [x for x in mus if x > zero_tol]
    neg = [x for x in mus if x < -zero_tol]
    nonzero = [abs(x) for x in mus if abs(x) > zero_tol]
    near_zero = bool(nonzero) and min(nonzero) <= 10 * zero_tol
    return SpectralSummary(
        eigenvalues=tuple(mus),
        pi=len(pos),
        nu=len(neg),
        gamma=len(mus) - len(pos) - len(neg),
        s_plus=math.fsum(x * x for x in pos),
        s_minus=math.fsum(x * x for x in neg),
        zero_tol=zero_tol,
        near_zero=near_zero,
    )


def make_report(gid, bound, lhs_name, rhs_name, lhs, rhs, conjecture=False, tol=None) -> BoundReport:
    """Compare ``lhs <= rhs``; exact when both sides are rational, else within ``tol``."""
    slack = rhs - lhs
    if isinstance(slack, (int, Fraction)):
        tol = 0.0
        equality = slack == 0
    else:
        tol = spectral_tol() if tol is None else tol
        equality = abs(slack) <= tol
    return BoundReport(gid, bound, lhs_name, rhs_name, lhs, rhs, slack, equality, None, conjecture, tol)


def skipped_report(gid, bound, lhs_name, rhs_name, reason, conjecture=False) -> BoundReport:
    return BoundReport(gid, bound, lhs_name, rhs_name, None, None, None, False, reason, conjecture)


@dataclass(frozen=True)
class SpectralInputs:
    """Invariants the spectral bounds compare against; ``None`` marks "not computed"."""

    graph_id: str
    spectrum: SpectralSummary
    randic: float
    col: int
    chi: int | None = None
    psi: int | None = None


def evaluate_spectral_bounds(G: Graph, inv: SpectralInputs) -> list[BoundReport]:
    """Every spectral inequality as a :class:`BoundReport`, in a fixed order.

    Bound ids are prefixed by the group they belong to (``thm31``, ``thm33``,
    ``lem32``, ``sec33``, ``cross``) and ``splus`` for the conjectured
    ``s+ <= 2m - n + 1`` probe, which is flagged as a conjecture.
    """
    gid = inv.graph_id
    sp = inv.spectrum
    m, n = G.m, G.n
    two_m = 2 * m
    mu = sp.mu
    out: list[BoundReport] = []

    if m >= 1:
        root_s = math.sqrt(sp.s_plus)
        via_splus = two_m / root_s
        via_mu = two_m / mu
        if inv.psi is not None:
            out.append(make_report(gid, "thm31.psi<=2m/sqrt(s+)", "psi", "2m/sqrt(s+)", inv.psi, via_splus))
        else:
            out.append(skipped_report(gid, "thm31.psi<=2m/sqrt(s+)", "psi", "2m/sqrt(s+)", "psi not computed"))
        out.append(make_report(gid, "thm31.2m/sqrt(s+)<=2m/mu", "2m/sqrt(s+)", "2m/mu", via_splus, via_mu))
        out.append(make_report(gid, "thm31.2m/mu<=2R", "2m/mu", "2R", via_mu, 2 * inv.randic))
        out.append(make_report(gid, "thm33.col<=2m/sqrt(s+)", "col", "2m/sqrt(s+)", inv.col, via_splus))
        out.append(make_report(gid, "thm33.2m/sqrt(s+)<=2m/mu", "2m/sqrt(s+)", "2m/mu", via_splus, via_mu))
        out.append(make_report(gid, "thm33.2m/mu<=2R", "2m/mu", "2R", via_mu, 2 * inv.randic))
        out.append(make_report(gid, "lem32.col(col-1)<=2m", "col(col-1)", "2m", inv.col * (inv.col - 1), two_m))
        out.append(make_report(gid, "lem32.s++sqrt(s+)<=2m", "s+ + sqrt(s+)", "2m", sp.s_plus + root_s, two_m))
        out.append(make_report(gid, "lem32.col<=mu+1", "col", "mu+1", inv.col, mu + 1))
        out.append(make_report(gid, "lem32.mu(mu+1)<=s++sqrt(s+)", "mu(mu+1)", "s+ + sqrt(s+)",
                           mu * (mu + 1), sp.s_plus + root_s))
        if inv.chi is not None:
            out.append(make_report(gid, "cross.1+s+/s-<=chi", "1 + s+/s-", "chi", 1 + sp.s_plus / sp.s_minus, inv.chi))
        else:
            out.append(skipped_report(gid, "cross.1+s+/s-<=chi", "1 + s+/s-", "chi", "chi not computed"))
        out.append(make_report(gid, "cross.m/mu<=R", "m/mu", "R", m / mu, inv.randic))
        stanley = (math.sqrt(8 * m + 1) - 1) / 2
        out.append(make_report(gid, "sec33.sqrt(s+)<=stanley", "sqrt(s+)", "(sqrt(8m+1)-1)/2", root_s, stanley))
        out.append(make_report(gid, "sec33.mu<=stanley", "mu", "(sqrt(8m+1)-1)/2", mu, stanley))
        if G.has_isolated_vertex():
            for bound, lhs_name, rhs_name in (
                ("sec33.mu<=hong", "mu", "sqrt(2m-n+1)"),
                ("sec33.hong<=stanley", "sqrt(2m-n+1)", "(sqrt(8m+1)-1)/2"),
            ):
                out.append(skipped_report(gid, bound, lhs_name, rhs_name, "isolated vertex"))
        else:
            hong = math.sqrt(two_m - n + 1)
            out.append(make_report(gid, "sec33.mu<=hong", "mu", "sqrt(2m-n+1)", mu, hong))
            out.append(make_report(gid, "sec33.hong<=stanley", "sqrt(2m-n+1)", "(sqrt(8m+1)-1)/2", hong, stanley))
    else:
        out.extend(skipped_report(gid, b, lhs, rhs, "m = 0") for b, lhs, rhs in SPECTRAL_BOUNDS)

    if G.is_connected():
        out.append(make_report(gid, "splus.s+<=2m-n+1", "s+", "2m-n+1", sp.s_plus, two_m - n + 1, conjecture=True))
    else:
        out.append(skipped_report(gid, "splus.s+<=2m-n+1", "s+", "2m-n+1", "disconnected", conjecture=True))
    return out


SPECTRAL_BOUNDS = (
    ("thm31.psi<=2m/sqrt(s+)", "psi", "2m/sqrt(s+)"),
    ("thm31.2m/sqrt(s+)<=2m/mu", "2m/sqrt(s+)", "2m/mu"),
    ("thm31.2m/mu<=2R", "2m/mu", "2R"),
    ("thm33.col<=2m/sqrt(s+)", "col", "2m/sqrt(s+)"),
    ("thm33.2m/sqrt(s+)<=2m/mu", "2m/sqrt(s+)", "2m/mu"),
    ("thm33.2m/mu<=2R", "2m/mu", "2R"),
    ("lem32.col(col-1)<=2m", "col(col-1)", "2m"),
    ("lem32.s++sqrt(s+)<=2m", "s+ + sqrt(s+)", "2m"),
    ("lem32.col<=mu+1", "col", "mu+1"),
    ("lem32.mu(mu+1)<=s++sqrt(s+)", "mu(mu+1)", "s+ + sqrt(s+)"),
    ("cross.1+s+/s-<=chi", "1 + s+/s-", "chi"),
    ("cross.m/mu<=R", "m/mu", "R"),
    ("sec33.sqrt(s+)<=stanley", "sqrt(s+)", "(sqrt(8m+1)-1)/2"),
    ("sec33.mu<=stanley", "mu", "(sqrt(8m+1)-1)/2"),
    ("sec33.mu<=hong", "mu", "sqrt(2m-n+1)"),
    ("sec33.hong<=stanley", "sqrt(2m-n+1)", "(sqrt(8m+1)-1)/2"),
)
