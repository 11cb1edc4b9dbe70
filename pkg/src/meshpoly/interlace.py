"""Proper position of real-rooted polynomials, and membership in mesh classes.

p is in proper position to q (written p << q) when their root multisets
interlace with p leading from the left and the Wronskian p q' - p' q is
non-negative on the whole real line.  The zero polynomial is in proper
position to every hyperbolic polynomial on both sides.  Interlacing is
decided exactly: roots are compared through isolating intervals, with
shared roots certified by gcd root counting, never by numeric closeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

from . import intpoly
from .poly import Polynomial, as_fraction
from .roots import RootNode, RootProfile, _separate, root_profile

__all__ = [
    "ProperPositionVerdict",
    "ClassSpec",
    "wronskian",
    "nonneg_on_reals",
    "negativity_point",
    "proper_position",
    "class_membership",
    "quadratic_hp1plus",
]


@dataclass
class ProperPositionVerdict:
    holds: bool
    interlaces: bool
    wronskian_nonneg: bool
    failure_witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ClassSpec:
    """A class of hyperbolic polynomials cut out by mesh and root-sign bounds."""

    mesh_bound: Optional[Fraction] = None
    require_nonneg_roots: bool = False

    @staticmethod
    def hyperbolic() -> "ClassSpec":
        return ClassSpec()

    @staticmethod
    def hp_ge(alpha) -> "ClassSpec":
        return ClassSpec(mesh_bound=as_fraction(alpha))

    @staticmethod
    def hp_plus_ge(alpha) -> "ClassSpec":
        return ClassSpec(mesh_bound=as_fraction(alpha), require_nonneg_roots=True)

    @property
    def label(self) -> str:
        if self.mesh_bound is None:
            return "HP+" if self.require_nonneg_roots else "HP"
        base = "HP+" if self.require_nonneg_roots else "HP"
        return f"{base}>={self.mesh_bound}"


def wronskian(p: Polynomial, q: Polynomial) -> Polynomial:
    """W(p, q) = p q' - p' q."""
    return p * q.derivative() - p.derivative() * q


def _odd_multiplicity_part(f: list) -> list:
    parts = [fac for fac, mult in intpoly.yun(f) if mult % 2 == 1]
    out = [1]
    for fac in parts:
        out = intpoly.mul(out, fac)
    return out


def nonneg_on_reals(w: Polynomial) -> bool:
    """Exact check that w(x) >= 0 for every real x.

    Holds exactly when w is identically zero, or has positive leading
    coefficient, even degree, and no real root of odd multiplicity.
    """
    if w.is_zero:
        return True
    if w.leading_coefficient < 0:
        return False
    if int(w.degree) % 2 == 1:
        return False
    if w.degree == 0:
        return True
    f = intpoly.from_fractions(w.monomial_coeffs())
    chain = intpoly.sturm_chain(f)
    distinct = intpoly.count_distinct_in(chain, None, None)
    if distinct == 0:
        return True
    if len(chain[-1]) == 1:
        # squarefree: every real root is simple, hence of odd multiplicity
        return False
    odd = _odd_multiplicity_part(f)
    if len(odd) <= 1:
        return True
    oc = intpoly.sturm_chain(odd)
    return intpoly.count_distinct_in(oc, None, None) == 0


def negativity_point(w: Polynomial) -> Optional[Fraction]:
    """A rational point where w is negative, or None when w >= 0 everywhere."""
    if nonneg_on_reals(w):
        return None
    f = intpoly.from_fractions(w.monomial_coeffs())
    bound = intpoly.cauchy_bound(f)
    # one probe inside every sign region: beyond the extreme roots, and
    # strictly between each pair of adjacent distinct roots
    isos = intpoly.isolate(intpoly.squarefree_part(f))
    probes = [-bound]
    for left, right in zip(isos, isos[1:]):
        probes.append((left.hi + right.lo) / 2)
    probes.append(bound)
    for x in probes:
        if intpoly.sign_at(f, x) < 0:
            return x
    raise AssertionError("negative value exists but was not located")


def _common_root(a: RootNode, b: RootNode, gcd_cache: dict) -> bool:
    """Certify whether two nodes hold the same real number.

    Afterwards, unequal nodes are fully separated so that endpoint
    comparison decides their order.
    """
    while True:
        ea, eb = a.exact, b.exact
        if ea is not None and eb is not None:
            return ea == eb
        if ea is not None:
            if not (b.lo < ea < b.hi):
                return False
            if intpoly.sign_at(b.iso.poly, ea) == 0:
                # ea is the unique root of b's factor inside b's interval
                b.iso.lo = b.iso.hi = ea
                b.iso.slo = 0
                return True
            b.iso.exclude(ea)
            return False
        if eb is not None:
            if not (a.lo < eb < a.hi):
                return False
            if intpoly.sign_at(a.iso.poly, eb) == 0:
                a.iso.lo = a.iso.hi = eb
                a.iso.slo = 0
                return True
            a.iso.exclude(eb)
            return False
        lo = max(a.lo, b.lo)
        hi = min(a.hi, b.hi)
        if lo >= hi:
            return False
        key = (id(a.iso.poly), id(b.iso.poly))
        if key not in gcd_cache:
            gcd_cache[key] = intpoly.gcd(a.iso.poly, b.iso.poly)
        g = gcd_cache[key]
        if len(g) <= 1:
            _separate(a.iso, b.iso)
            return False
        gchain_key = ("chain", key)
        if gchain_key not in gcd_cache:
            gcd_cache[gchain_key] = intpoly.sturm_chain(g)
        # interval endpoints are never roots of the factors, hence not of g
        if intpoly.count_distinct_in(gcd_cache[gchain_key], lo, hi) == 1:
            return True
        # no shared root inside the overlap: the roots differ
        _separate(a.iso, b.iso)
        return False


def _merge_order(nodes_p: list, nodes_q: list):
    """Global rank for every node; equal roots across the two lists share a rank."""
    gcd_cache: dict = {}
    partner: dict = {}
    for a in nodes_p:
        for b in nodes_q:
            if _common_root(a, b, gcd_cache):
                partner[id(a)] = b
                partner[id(b)] = a

    def cmp(x: RootNode, y: RootNode) -> int:
        if x is y or partner.get(id(x)) is y:
            return 0
        xe, ye = x.exact, y.exact
        if xe is not None and ye is not None:
            return -1 if xe < ye else (1 if xe > ye else 0)
        # distinct roots with disjoint structures: endpoints decide
        if x.hi <= y.lo:
            return -1
        if y.hi <= x.lo:
            return 1
        if xe is not None:
            return -1 if xe <= y.lo else 1
        if ye is not None:
            return 1 if ye <= x.lo else -1
        raise AssertionError("nodes not separated")

    merged = sorted(nodes_p + nodes_q, key=cmp_to_key(cmp))
    ranks: dict = {}
    rank = -1
    prev = None
    for n in merged:
        if prev is not None and cmp(prev, n) == 0:
            ranks[id(n)] = rank
        else:
            rank += 1
            ranks[id(n)] = rank
        prev = n
    gamma = [ranks[id(n)] for n in nodes_p for _ in range(n.multiplicity)]
    delta = [ranks[id(n)] for n in nodes_q for _ in range(n.multiplicity)]
    return gamma, delta


def _pattern(gamma: list, delta: list) -> bool:
    # gamma_1 <= delta_1 <= gamma_2 <= delta_2 <= ... covering all entries
    if len(delta) not in (len(gamma) - 1, len(gamma)):
        return False
    for i, d in enumerate(delta):
        if i < len(gamma) and gamma[i] > d:
            return False
        if i + 1 < len(gamma) and d > gamma[i + 1]:
            return False
    return True


def _interlaces(gamma: list, delta: list) -> bool:
    if not gamma or not delta:
        return abs(len(gamma) - len(delta)) <= 1
    return _pattern(gamma, delta) or _pattern(delta, gamma)


def _approx_roots(nodes: list) -> list:
    out = []
    for n in nodes:
        n.refine_below(Fraction(1, 10**6))
        out.append(float(n.midpoint()))
    return out


def proper_position(p: Polynomial, q: Polynomial,
                    _profile_p: Optional[RootProfile] = None,
                    _profile_q: Optional[RootProfile] = None) -> ProperPositionVerdict:
    """Exact verdict on p << q, with a witness describing any failure."""
    if p.is_zero and q.is_zero:
        return ProperPositionVerdict(True, True, True)
    if p.is_zero or q.is_zero:
        other = q if p.is_zero else p
        prof = root_profile(other)
        if prof.is_hyperbolic:
            return ProperPositionVerdict(True, True, True)
        return ProperPositionVerdict(
            False, True, True,
            {"condition": "non-hyperbolic-operand",
             "operand": "q" if p.is_zero else "p"})
    prof_p = _profile_p if _profile_p is not None else root_profile(p)
    if not prof_p.is_hyperbolic:
        return ProperPositionVerdict(
            False, False, False, {"condition": "non-hyperbolic-operand", "operand": "p"})
    prof_q = _profile_q if _profile_q is not None else root_profile(q)
    if not prof_q.is_hyperbolic:
        return ProperPositionVerdict(
            False, False, False, {"condition": "non-hyperbolic-operand", "operand": "q"})
    if abs(int(p.degree) - int(q.degree)) > 1:
        return ProperPositionVerdict(
            False, False, False,
            {"condition": "degree-gap", "degrees": [int(p.degree), int(q.degree)]})
    gamma, delta = _merge_order(prof_p.nodes, prof_q.nodes)
    interlaces = _interlaces(gamma, delta)
    w = wronskian(p, q)
    w_ok = nonneg_on_reals(w)
    witness = None
    if not interlaces:
        witness = {
            "condition": "interlacing-failed",
            "p_roots_approx": _approx_roots(prof_p.nodes),
            "q_roots_approx": _approx_roots(prof_q.nodes),
        }
    elif not w_ok:
        x0 = negativity_point(w)
        witness = {
            "condition": "wronskian-negative",
            "point": str(x0),
            "value": str(w.evaluate(x0)),
        }
    return ProperPositionVerdict(interlaces and w_ok, interlaces, w_ok, witness)


def class_membership(p: Polynomial, spec: ClassSpec) -> bool:
    """Exact membership of p in a hyperbolicity class with optional bounds.

    The zero polynomial is rejected outright (ValueError): it belongs to
    no class here, and callers that can produce it must handle it first.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no class membership")
    if p.degree <= 1:
        prof = root_profile(p)
        return prof.all_roots_nonnegative if spec.require_nonneg_roots else True
    prof = root_profile(p)
    if not prof.is_hyperbolic:
        return False
    if spec.require_nonneg_roots and not prof.all_roots_nonnegative:
        return False
    if spec.mesh_bound is not None and spec.mesh_bound > 0:
        shifted = p.shift(spec.mesh_bound)
        prof_q = _translate_profile(prof, spec.mesh_bound)
        if not proper_position(p, shifted, _profile_p=prof,
                               _profile_q=prof_q).holds:
            return False
    return True


def _translate_profile(prof: RootProfile, alpha: Fraction) -> RootProfile:
    """Root profile of p(x - alpha) derived from the profile of p."""
    nodes = []
    shifted_factors: dict = {}
    for n in prof.nodes:
        fid = id(n.iso.poly)
        if fid not in shifted_factors:
            fr = [Fraction(c) for c in n.iso.poly]
            shifted = Polynomial(fr).shift(alpha)
            shifted_factors[fid] = intpoly.from_fractions(shifted.coeffs)
        iso = intpoly.IsolatedRoot.__new__(intpoly.IsolatedRoot)
        iso.poly = shifted_factors[fid]
        iso.lo = n.lo + alpha
        iso.hi = n.hi + alpha
        iso.slo = n.iso.slo
        nodes.append(RootNode(iso, n.multiplicity))
    return RootProfile(
        is_hyperbolic=prof.is_hyperbolic,
        all_roots_nonnegative=False,  # not meaningful for the shifted copy
        distinct_real_roots=prof.distinct_real_roots,
        has_multiple_root=prof.has_multiple_root,
        multiplicities=tuple(((n.lo, n.hi), n.multiplicity) for n in nodes),
        nodes=nodes,
    )


def quadratic_hp1plus(A, B, C) -> bool:
    """Membership of A x(x-1) - 2Bx + C in the mesh-1 non-negative-root class.

    Closed-form criterion for A > 0 and B, C >= 0: the polynomial lies in
    the class exactly when AC <= B^2 + AB.  Serves as an independent
    oracle against class_membership on the same quadratic.
    """
    A = as_fraction(A)
    B = as_fraction(B)
    C = as_fraction(C)
    if A <= 0:
        raise ValueError("quadratic criterion needs A > 0")
    if B < 0 or C < 0:
        raise ValueError("quadratic criterion needs B, C >= 0")
    return A * C <= B * B + A * B
