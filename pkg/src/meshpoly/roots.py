"""Exact real-root analysis: counting, isolation, and the root mesh.

The mesh of a polynomial with only real roots is the smallest distance
between two of its roots, counted with multiplicity: a repeated root
forces mesh 0, and polynomials of degree <= 1 get mesh +infinity.  All
verdicts here are exact; interval refinement and the tolerance parameter
only affect displayed approximations, never a yes/no answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import intpoly
from .poly import Polynomial, as_fraction

INF = math.inf

DEFAULT_TOL = Fraction(1, 10**9)


class NonHyperbolicInput(ValueError):
    """Raised when an operation needs a polynomial with only real roots."""


class RootNode:
    """A real root: an isolating structure plus its multiplicity."""

    __slots__ = ("iso", "multiplicity")

    def __init__(self, iso: intpoly.IsolatedRoot, multiplicity: int):
        self.iso = iso
        self.multiplicity = multiplicity

    @property
    def lo(self) -> Fraction:
        return self.iso.lo

    @property
    def hi(self) -> Fraction:
        return self.iso.hi

    @property
    def exact(self) -> Optional[Fraction]:
        return self.iso.exact

    def refine_below(self, width: Fraction) -> None:
        self.iso.refine_below(width)

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self):
        if self.exact is not None:
            where = str(self.exact)
        else:
            where = f"({self.lo}, {self.hi})"
        return f"RootNode({where}, mult={self.multiplicity})"


def _separate(a: intpoly.IsolatedRoot, b: intpoly.IsolatedRoot) -> None:
    """Narrow two isolating structures with distinct roots until disjoint.

    Disjoint means the open intervals do not overlap and neither exact
    value lies inside the other's open interval, so the root order is
    decided by endpoint comparison.
    """
    while True:
        if a.exact is not None and b.exact is not None:
            if a.exact == b.exact:
                raise AssertionError("distinct roots expected")
            return
        if a.exact is not None:
            b.exclude(a.exact)
            if not (b.lo < a.exact < b.hi):
                return
            continue
        if b.exact is not None:
            a.exclude(b.exact)
            if not (a.lo < b.exact < a.hi):
                return
            continue
        if a.hi <= b.lo or b.hi <= a.lo:
            return
        # overlapping genuine intervals: shrink the wider
        if a.width >= b.width:
            a.refine()
        else:
            b.refine()


def _node_sort_key(n: RootNode):
    return (n.lo, n.hi)


def root_data(p: Polynomial) -> list[RootNode]:
    """Sorted pairwise-disjoint nodes for the distinct real roots of p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root data")
    f = intpoly.from_fractions(p.monomial_coeffs())
    nodes: list[RootNode] = []
    for factor, mult in intpoly.yun(f):
        for iso in intpoly.isolate(factor):
            nodes.append(RootNode(iso, mult))
    # roots of distinct Yun factors are distinct; make their intervals disjoint
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            _separate(nodes[i].iso, nodes[j].iso)
    nodes.sort(key=_node_sort_key)
    return nodes


@dataclass
class RootProfile:
    """Certified summary of the real-root structure of a polynomial."""

    is_hyperbolic: bool
    all_roots_nonnegative: bool
    distinct_real_roots: int
    has_multiple_root: bool
    multiplicities: tuple  # ((lo, hi), multiplicity) per distinct real root
    nodes: list = None  # live RootNode list, refinable

    def approximations(self, tol: Fraction = DEFAULT_TOL) -> list[float]:
        out = []
        for n in self.nodes:
            n.refine_below(tol)
            out.append(float(n.midpoint()))
        return out


@dataclass
class MeshReport:
    """Mesh enclosure; exact_value is set when the mesh is known exactly.

    mesh_lower <= mesh <= mesh_upper always holds; for degree <= 1 all
    three fields are +infinity (math.inf).
    """

    mesh_lower: object  # Fraction or math.inf
    mesh_upper: object
    exact_value: object = None  # Fraction, math.inf, or None when only enclosed

    @property
    def is_infinite(self) -> bool:
        return self.mesh_lower == INF


def _nonneg_from_nodes(nodes: Sequence[RootNode]) -> bool:
    for n in nodes:
        if n.exact is not None:
            if n.exact < 0:
                return False
            continue
        n.iso.exclude(Fraction(0))
        if n.exact is not None:
            if n.exact < 0:
                return False
        elif n.hi <= 0:
            return False
    return True


def root_profile(p: Polynomial) -> RootProfile:
    """Exact hyperbolicity / sign / multiplicity report for nonzero p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root profile")
    nodes = root_data(p) if p.degree >= 1 else []
    real_with_mult = sum(n.multiplicity for n in nodes)
    deg = int(p.degree) if not p.is_zero else 0
    is_hyp = real_with_mult == max(deg, 0)
    return RootProfile(
        is_hyperbolic=is_hyp,
        all_roots_nonnegative=is_hyp and _nonneg_from_nodes(nodes),
        distinct_real_roots=len(nodes),
        has_multiple_root=any(n.multiplicity > 1 for n in nodes),
        multiplicities=tuple(((n.lo, n.hi), n.multiplicity) for n in nodes),
        nodes=nodes,
    )


def isolate_and_refine(p: Polynomial, tol: Fraction = DEFAULT_TOL) -> RootProfile:
    """root_profile with every isolating interval narrowed below tol."""
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    prof = root_profile(p)
    for n in prof.nodes:
        n.refine_below(tol)
    prof.multiplicities = tuple(((n.lo, n.hi), n.multiplicity) for n in prof.nodes)
    return prof


def squarefree(p: Polynomial):
    """(squarefree part, ((factor, multiplicity), ...)) with primitive factors.

    Factors are normalized integer-primitive with positive leading
    coefficient, so the original leading coefficient is not recoverable
    from the output; root locations are what matters downstream.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    f = intpoly.from_fractions(p.monomial_coeffs())
    structure = intpoly.yun(f)
    part = Polynomial((1,))
    out = []
    for factor, mult in structure:
        q = Polynomial(factor)
        out.append((q, mult))
        part = part * q
    return part, tuple(out)


def count_real_roots(p: Polynomial, lo=None, hi=None) -> int:
    """Distinct real roots of p in the half-open interval (lo, hi].

    None endpoints mean -infinity / +infinity.  The intended contract is
    squarefree input; the count is of distinct roots regardless.
    """
    if p.is_zero:
        raise ValueError("zero polynomial root count is undefined")
    f = intpoly.from_fractions(p.monomial_coeffs())
    if len(f) <= 1:
        return 0
    chain = intpoly.sturm_chain(f)
    lo = as_fraction(lo) if lo is not None else None
    hi = as_fraction(hi) if hi is not None else None
    return intpoly.count_distinct_in(chain, lo, hi)


def is_hyperbolic(p: Polynomial) -> bool:
    """True when nonzero p has only real roots (constants count).

    A polynomial is real-rooted exactly when its squarefree part is, so
    one distinct-root count settles it without isolating anything.
    """
    if p.is_zero:
        raise ValueError("zero polynomial hyperbolicity is undefined")
    if p.degree <= 0:
        return True
    f = intpoly.from_fractions(p.monomial_coeffs())
    sq = intpoly.squarefree_part(f)
    chain = intpoly.sturm_chain(sq)
    return intpoly.count_distinct_in(chain, None, None) == len(sq) - 1


def mesh_numeric(p: Polynomial, tol: Fraction = DEFAULT_TOL) -> MeshReport:
    """Mesh enclosure of a hyperbolic polynomial, narrowed below tol.

    exact_value is a Fraction when every root was recognized as rational
    (the common case for constructed fixtures), math.inf for degree <= 1,
    and None when the mesh is only enclosed between the reported bounds.
    """
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.is_zero:
        raise ValueError("zero polynomial has no mesh")
    if p.degree <= 1:
        return MeshReport(INF, INF, INF)
    nodes = root_data(p)
    if sum(n.multiplicity for n in nodes) != int(p.degree):
        raise NonHyperbolicInput("mesh is defined for real-rooted polynomials only")
    if any(n.multiplicity > 1 for n in nodes):
        return MeshReport(Fraction(0), Fraction(0), Fraction(0))
    if len(nodes) == 1:
        return MeshReport(INF, INF, INF)
    if all(n.exact is not None for n in nodes):
        vals = sorted(n.exact for n in nodes)
        m = min(b - a for a, b in zip(vals, vals[1:]))
        return MeshReport(m, m, m)
    while True:
        lo_gap = None
        hi_gap = None
        for a, b in zip(nodes, nodes[1:]):
            g_lo = max(Fraction(0), b.lo - a.hi)
            g_hi = b.hi - a.lo
            if lo_gap is None or g_lo < lo_gap:
                lo_gap = g_lo
            if hi_gap is None or g_hi < hi_gap:
                hi_gap = g_hi
        if hi_gap - lo_gap <= tol:
            return MeshReport(lo_gap, hi_gap, None)
        for n in nodes:
            if n.exact is None:
                n.refine_below(max(tol / 4, (n.hi - n.lo) / 2))


def mesh_at_least(p: Polynomial, alpha) -> bool:
    """Exact decision of mesh(p) >= alpha for hyperbolic p (boundary included).

    Decided through the proper-position characterization: a hyperbolic p
    has mesh >= alpha exactly when p(x) and p(x - alpha) are in proper
    position.  Degree <= 1 passes every bound; a non-hyperbolic p raises.
    """
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise ValueError("mesh bound must be non-negative")
    if p.is_zero:
        raise ValueError("zero polynomial has no mesh")
    if p.degree <= 1:
        return True
    from . import interlace

    prof = root_profile(p)
    if not prof.is_hyperbolic:
        raise NonHyperbolicInput("mesh is defined for real-rooted polynomials only")
    prof_q = interlace._translate_profile(prof, alpha)
    return interlace.proper_position(p, p.shift(alpha), _profile_p=prof,
                                     _profile_q=prof_q).holds


def root_approximations(p: Polynomial, tol: Fraction = DEFAULT_TOL) -> list[float]:
    """Float approximations of the distinct real roots, for display only."""
    return isolate_and_refine(p, tol).approximations(tol)
