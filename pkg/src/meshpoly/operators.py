"""Finite difference operators, diagonal sequences, and related constructions.

An operator is a finite sum T(p)(x) = sum_s q_s(x) * p(x - s).  Integer
shifts s >= 0 give the classical form q_0(x)p(x) + q_1(x)p(x-1) + ...;
rational shifts are allowed so that the two-term family p - lambda*p(x-alpha)
is expressible for non-integer alpha.  Constant-coefficient operators with
integer shifts carry a symbol polynomial Q(t) = a_0 + a_1 t + ... + a_k t^k,
and composition of such operators multiplies symbols.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .poly import Polynomial, as_fraction
from . import roots as _roots

__all__ = [
    "FiniteDifferenceOperator",
    "DiagonalSequence",
    "make_standard",
    "symbol",
    "from_symbol",
    "diagonal_apply",
    "brenti_map",
    "bullet_product",
    "sequence_from_poly",
    "pochhammer_cofactor",
]

Coeffish = Union[Polynomial, Fraction, int, str]


def _as_poly(c: Coeffish) -> Polynomial:
    if isinstance(c, Polynomial):
        return c
    return Polynomial.constant(as_fraction(c))


class FiniteDifferenceOperator:
    """T(p)(x) = sum over terms (shift, q) of q(x) * p(x - shift)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple]):
        merged: dict = {}
        for shift, coeff in terms:
            s = as_fraction(shift)
            q = _as_poly(coeff)
            merged[s] = merged.get(s, Polynomial.zero()) + q
        cleaned = sorted((s, q) for s, q in merged.items() if not q.is_zero)
        self.terms = tuple(cleaned)

    @staticmethod
    def from_coeffs(coeffs: Sequence[Coeffish]) -> "FiniteDifferenceOperator":
        """Build from (q_0, q_1, ..., q_k) at integer shifts 0..k."""
        return FiniteDifferenceOperator(
            (j, _as_poly(c)) for j, c in enumerate(coeffs))

    @staticmethod
    def identity() -> "FiniteDifferenceOperator":
        return FiniteDifferenceOperator([(0, Polynomial.constant(1))])

    @property
    def order(self):
        """Largest shift with nonzero coefficient (an int when integral)."""
        if not self.terms:
            return 0
        s = self.terms[-1][0]
        return int(s) if s.denominator == 1 else s

    @property
    def constant_coefficients(self) -> bool:
        return all(q.degree <= 0 for _, q in self.terms)

    @property
    def integer_shifts(self) -> bool:
        return all(s.denominator == 1 and s >= 0 for s, _ in self.terms)

    @property
    def coeffs(self) -> list:
        """(q_0, ..., q_k) for integer-shift operators; gaps filled with 0."""
        if not self.integer_shifts:
            raise ValueError("coefficient list needs integer shifts >= 0")
        if not self.terms:
            return [Polynomial.zero()]
        k = int(self.terms[-1][0])
        out = [Polynomial.zero()] * (k + 1)
        for s, q in self.terms:
            out[int(s)] = q
        return out

    @property
    def nonzero_coefficient_count(self) -> int:
        return len(self.terms)

    def apply(self, p: Polynomial) -> Polynomial:
        acc = Polynomial.zero()
        for s, q in self.terms:
            acc = acc + q * p.shift(s)
        return acc

    def compose(self, other: "FiniteDifferenceOperator") -> "FiniteDifferenceOperator":
        """Operator for p -> self(other(p))."""
        terms = []
        for s1, q1 in self.terms:
            for s2, q2 in other.terms:
                # (other p)(x - s1) picks up q2(x - s1) p(x - s1 - s2)
                terms.append((s1 + s2, q1 * q2.shift(s1)))
        return FiniteDifferenceOperator(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteDifferenceOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{q}@{s}" for s, q in self.terms)
        return f"FiniteDifferenceOperator({inner})"


def make_standard(kind: str, lam=None, alpha=None) -> FiniteDifferenceOperator:
    """Named operator families.

    delta            p(x) - p(x-1)
    nabla_conjugate  p(x+1) - p(x), the forward companion of delta
    riesz            p(x) - lam * p(x - alpha), alpha >= 0 rational
    w_lambda         p(x) + lam * x * (p(x) - p(x-1))
    euler_xdelta     x * (p(x) - p(x-1))
    """
    x = Polynomial.x()
    if kind == "delta":
        return FiniteDifferenceOperator([(0, 1), (1, -1)])
    if kind == "nabla_conjugate":
        return FiniteDifferenceOperator([(-1, 1), (0, -1)])
    if kind == "riesz":
        if lam is None or alpha is None:
            raise ValueError("riesz needs lam and alpha")
        a = as_fraction(alpha)
        if a < 0:
            raise ValueError("riesz needs alpha >= 0")
        return FiniteDifferenceOperator([(0, 1), (a, -as_fraction(lam))])
    if kind == "w_lambda":
        if lam is None:
            raise ValueError("w_lambda needs lam")
        l = as_fraction(lam)
        return FiniteDifferenceOperator([(0, Polynomial.constant(1) + x * l),
                                         (1, x * (-l))])
    if kind == "euler_xdelta":
        return FiniteDifferenceOperator([(0, x), (1, -x)])
    raise ValueError(f"unknown operator kind: {kind!r}")


def symbol(T: FiniteDifferenceOperator) -> Polynomial:
    """Q(t) = sum a_j t^j for a constant-coefficient integer-shift operator."""
    if not T.constant_coefficients:
        raise ValueError("symbol requires constant coefficients")
    if not T.integer_shifts:
        raise ValueError("symbol requires integer shifts >= 0")
    coeffs = [q.coefficient(0) for q in T.coeffs]
    return Polynomial(coeffs)


def from_symbol(Q: Polynomial) -> FiniteDifferenceOperator:
    """Constant-coefficient operator whose symbol is Q."""
    return FiniteDifferenceOperator.from_coeffs(list(Q.monomial_coeffs()))


class DiagonalSequence:
    """Multipliers alpha_i of the diagonal action (x)_i -> alpha_i (x)_i.

    Backed either by a finite table of values or by a polynomial rule
    alpha_i = phi(i); the rule form is defined at every index.
    """

    __slots__ = ("values", "phi")

    def __init__(self, values: Optional[tuple] = None,
                 phi: Optional[Polynomial] = None):
        if (values is None) == (phi is None):
            raise ValueError("give exactly one of values or phi")
        self.values = values
        self.phi = phi

    @staticmethod
    def from_values(values: Iterable) -> "DiagonalSequence":
        return DiagonalSequence(values=tuple(as_fraction(v) for v in values))

    @staticmethod
    def from_rule(phi: Polynomial) -> "DiagonalSequence":
        return DiagonalSequence(phi=phi)

    def defined_up_to(self, n: int) -> bool:
        return self.phi is not None or len(self.values) > n

    def alpha(self, i: int) -> Fraction:
        if self.phi is not None:
            return self.phi.evaluate(Fraction(i))
        if i >= len(self.values):
            raise IndexError(f"sequence defined only up to index {len(self.values) - 1}")
        return self.values[i]

    def prefix(self, n: int) -> list:
        return [self.alpha(i) for i in range(n)]

    def __repr__(self) -> str:
        if self.phi is not None:
            return f"DiagonalSequence(phi={self.phi})"
        return f"DiagonalSequence(values={[str(v) for v in self.values]})"


def diagonal_apply(A: DiagonalSequence, p: Polynomial) -> Polynomial:
    """Multiply the i-th Pochhammer coefficient of p by alpha_i."""
    if p.is_zero:
        return Polynomial.zero()
    n = int(p.degree)
    if not A.defined_up_to(n):
        raise IndexError(f"sequence too short for degree {n}")
    from .poly import POCHHAMMER
    ph = p.to_basis(POCHHAMMER)
    scaled = [A.alpha(i) * c for i, c in enumerate(ph.coeffs)]
    return Polynomial(scaled, basis=POCHHAMMER).to_basis("monomial")


def brenti_map(p: Polynomial) -> Polynomial:
    """The linear map x^i -> (x)_i applied coefficient-wise."""
    from .poly import POCHHAMMER
    coeffs = list(p.monomial_coeffs())
    return Polynomial(coeffs, basis=POCHHAMMER).to_basis("monomial")


def bullet_product(p: Polynomial, q: Polynomial, d: int) -> Polynomial:
    """(p . q)(x) = sum_{k=0}^{d} (forward^k p)(0) * (forward^{d-k} q)(x).

    Both inputs must have degree <= d; the product depends on d.
    """
    if p.degree > d or q.degree > d:
        raise ValueError(f"degree bound {d} violated")
    diffs_q = [q]
    for _ in range(d):
        diffs_q.append(diffs_q[-1].nabla())
    acc = Polynomial.zero()
    fp = p
    for k in range(d + 1):
        c = fp.evaluate(Fraction(0))
        if c != 0:
            acc = acc + diffs_q[d - k] * c
        fp = fp.nabla()
    return acc


def sequence_from_poly(phi: Polynomial, length: int) -> DiagonalSequence:
    """Table alpha_i = phi(i) for a hyperbolic phi with all roots <= 0.

    The root condition forces phi(i) >= 0 for every i >= 0 and is what
    makes the resulting sequence a preserver; a violating root is reported.
    """
    if phi.is_zero:
        raise ValueError("phi must be nonzero")
    if phi.degree >= 1:
        prof = _roots.root_profile(phi)
        if not prof.is_hyperbolic:
            raise ValueError("phi must be hyperbolic")
        bad = [n for n in prof.nodes if not _node_nonpositive(n)]
        if bad:
            bad[0].refine_below(Fraction(1, 10**6))
            raise ValueError(
                f"phi has a root near {float(bad[0].midpoint())} > 0; "
                "all roots must be <= 0")
    return DiagonalSequence.from_values(
        phi.evaluate(Fraction(i)) for i in range(length))


def _node_nonpositive(node) -> bool:
    if node.exact is not None:
        return node.exact <= 0
    if node.hi <= 0:
        return True
    if node.lo >= 0:
        return False
    node.iso.exclude(Fraction(0))
    e = node.exact
    return e <= 0 if e is not None else node.hi <= 0


def pochhammer_cofactor(T: FiniteDifferenceOperator, i: int) -> Polynomial:
    """R_i with T((x)_i) = (x-k)(x-k-1)...(x-i+1) * R_i, k = order of T.

    Exact synthetic division; a nonzero remainder would contradict the
    factorization that every constant-coefficient operator satisfies on
    the Pochhammer basis, so it raises.
    """
    if not (T.constant_coefficients and T.integer_shifts):
        raise ValueError("cofactor is defined for constant-coefficient operators")
    k = int(T.order)
    if i < k:
        raise ValueError(f"index {i} below operator order {k}")
    image = T.apply(Polynomial.falling_factorial(i)).to_basis("monomial")
    coeffs = list(image.monomial_coeffs())
    for j in range(k, i):
        coeffs, rem = _divide_linear(coeffs, Fraction(j))
        if rem != 0:
            raise AssertionError(f"nonzero remainder dividing by (x - {j})")
    return Polynomial(coeffs)


def _divide_linear(coeffs: list, r: Fraction):
    """Divide sum c_i x^i by (x - r): quotient coefficients and remainder."""
    if not coeffs:
        return [], Fraction(0)
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for t in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[t] + r * carry
        out[t - 1] = carry
    rem = coeffs[0] + r * carry
    return out, rem
