"""Exact univariate polynomial arithmetic over the rationals.

Polynomials carry their coefficient basis: either ordinary powers of x
(monomial) or the falling factorials (x)_i = x(x-1)...(x-i+1)
(pochhammer).  Coefficients are fractions.Fraction throughout; floating
point never enters any computation in this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

MONOMIAL = "monomial"
POCHHAMMER = "pochhammer"

#: degree assigned to the zero polynomial, so degree inequalities stay valid
NEG_INF = float("-inf")

RatLike = Union[Fraction, int, str]


def as_fraction(value: RatLike) -> Fraction:
    """Coerce ints, 'num/den' strings and Fractions to Fraction.

    Floats are rejected on purpose: the library is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    # row[k] is the signed Stirling number of the first kind s(n, k):
    # (x)_n = sum_k row[k] x^k, built from (x)_n = (x - (n-1)) (x)_{n-1}
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k, c in enumerate(prev):
        row[k + 1] += c
        row[k] -= (n - 1) * c
    return tuple(row)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    # row[k] is the Stirling number of the second kind S(n, k):
    # x^n = sum_k row[k] (x)_k, built from x (x)_k = (x)_{k+1} + k (x)_k
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k, c in enumerate(prev):
        row[k + 1] += c
        row[k] += k * c
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be non-negative")
    row = _stirling1_row(n)
    return row[k] if k < len(row) else 0


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be non-negative")
    row = _stirling2_row(n)
    return row[k] if k < len(row) else 0


class Polynomial:
    """Immutable exact polynomial tagged with its coefficient basis.

    coeffs are stored ascending by index with trailing zeros trimmed, so
    the zero polynomial has an empty coefficient tuple and degree NEG_INF
    in every basis.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, coeffs: Iterable[RatLike] = (), basis: str = MONOMIAL):
        if basis not in (MONOMIAL, POCHHAMMER):
            raise ValueError(f"unknown basis: {basis!r}")
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.basis = basis

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def constant(c: RatLike) -> "Polynomial":
        return Polynomial((c,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def from_roots(roots: Sequence[RatLike], lead: RatLike = 1) -> "Polynomial":
        """Monic-up-to-lead product lead * prod (x - r).

        An empty root list gives the constant lead.
        """
        lead = as_fraction(lead)
        if lead == 0:
            raise ValueError("leading coefficient must be non-zero")
        cs = [lead]
        for r in roots:
            r = as_fraction(r)
            cs.append(cs[-1])
            for j in range(len(cs) - 2, 0, -1):
                cs[j] = cs[j - 1] - r * cs[j]
            cs[0] = -r * cs[0]
        return Polynomial(cs)

    @staticmethod
    def falling_factorial(n: int) -> "Polynomial":
        """(x)_n = x(x-1)...(x-n+1), expressed in the pochhammer basis."""
        if n < 0:
            raise ValueError("falling factorial index must be non-negative")
        return Polynomial([0] * n + [1], POCHHAMMER)

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # -- basis handling ----------------------------------------------

    def to_basis(self, basis: str) -> "Polynomial":
        if basis not in (MONOMIAL, POCHHAMMER):
            raise ValueError(f"unknown basis: {basis!r}")
        if basis == self.basis:
            return self
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        rows = _stirling1_row if basis == MONOMIAL else _stirling2_row
        for i, c in enumerate(self.coeffs):
            if c:
                for k, s in enumerate(rows(i)):
                    if s:
                        out[k] += c * s
        return Polynomial(out, basis)

    def _mono(self) -> "Polynomial":
        return self if self.basis == MONOMIAL else self.to_basis(MONOMIAL)

    def monomial_coeffs(self) -> tuple[Fraction, ...]:
        return self._mono().coeffs

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.basis == other.basis:
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            cs = list(a)
            for i, c in enumerate(b):
                cs[i] += c
            return Polynomial(cs, self.basis)
        return self._mono() + other._mono()

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.basis)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a = self._mono().coeffs
            b = other._mono().coeffs
            if not a or not b:
                return Polynomial.zero()
            cs = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            cs[i + j] += ca * cb
            return Polynomial(cs)
        return Polynomial([as_fraction(other) * c for c in self.coeffs], self.basis)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return self._mono().coeffs == other._mono().coeffs

    def __hash__(self):
        return hash(self.monomial_coeffs())

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- calculus and shifts ------------------------------------------

    def evaluate(self, x0: RatLike) -> Fraction:
        x0 = as_fraction(x0)
        if self.basis == MONOMIAL:
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x0 + c
            return acc
        acc = Fraction(0)
        fact = Fraction(1)  # (x0)_i, updated incrementally
        for i, c in enumerate(self.coeffs):
            if i > 0:
                fact *= x0 - (i - 1)
            acc += c * fact
        return acc

    __call__ = evaluate

    def derivative(self) -> "Polynomial":
        cs = self._mono().coeffs
        return Polynomial([i * cs[i] for i in range(1, len(cs))])

    def shift(self, a: RatLike) -> "Polynomial":
        """Return p(x - a): the graph slides right by a for a > 0."""
        a = as_fraction(a)
        cs = list(self._mono().coeffs)
        n = len(cs)
        if a == 0 or n == 0:
            return Polynomial(cs)
        c = -a
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] += c * cs[j + 1]
        return Polynomial(cs)

    def delta(self) -> "Polynomial":
        """Backward difference p(x) - p(x-1)."""
        return self - self.shift(1)

    def nabla(self) -> "Polynomial":
        """Forward difference p(x+1) - p(x)."""
        return self.shift(-1) - self

    # -- display -------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]}, basis={self.basis!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        var = "x" if self.basis == MONOMIAL else "(x)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                coef = "" if mag == 1 else f"{mag}*"
                if self.basis == MONOMIAL:
                    term = f"{coef}x" if i == 1 else f"{coef}x^{i}"
                else:
                    term = f"{coef}(x)_{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


# -- functional facade over the class methods ------------------------


def combine(p: Polynomial, q: Polynomial | None, kind: str,
            scalar: RatLike | None = None) -> Polynomial:
    """add, subtract, multiply two polynomials, or scale one by a rational."""
    if kind == "add":
        return p + q
    if kind == "subtract":
        return p - q
    if kind == "multiply":
        return p * q
    if kind == "scale":
        if scalar is None:
            raise ValueError("scale needs a scalar")
        return p * as_fraction(scalar)
    raise ValueError(f"unknown combine kind: {kind!r}")


def evaluate(p: Polynomial, x0: RatLike) -> Fraction:
    return p.evaluate(x0)


def differentiate(p: Polynomial) -> Polynomial:
    return p.derivative()


def shift(p: Polynomial, a: RatLike) -> Polynomial:
    return p.shift(a)


def difference(p: Polynomial, direction: str = "backward") -> Polynomial:
    """Finite difference of p: 'backward' is p(x)-p(x-1), 'forward' is p(x+1)-p(x)."""
    if direction == "backward":
        return p.delta()
    if direction == "forward":
        return p.nabla()
    raise ValueError(f"unknown difference direction: {direction!r}")


def from_roots(roots: Sequence[RatLike], lead: RatLike = 1) -> Polynomial:
    return Polynomial.from_roots(roots, lead)


def convert_basis(p: Polynomial, target: str) -> Polynomial:
    return p.to_basis(target)


def falling_factorial_eval(x0: RatLike, i: int) -> Fraction:
    """(x0)_i as an exact rational."""
    x0 = as_fraction(x0)
    acc = Fraction(1)
    for j in range(i):
        acc *= x0 - j
    return acc


def sequence_convert(values: Sequence[RatLike], direction: str) -> tuple[Fraction, ...]:
    """Convert between the two codings of a diagonal operator.

    A diagonal operator is determined either by its eigenvalue table
    alpha_j on (x)_j or by the coefficients a_i of its expansion in
    (x)_i Delta^i.  The two are linked by the unitriangular system

        alpha_j = sum_i a_i * (j)_i

    so finite prefixes convert exactly in both directions.
    direction is 'a_to_alpha' or 'alpha_to_a'; the output has the same
    length as the input.
    """
    vals = [as_fraction(v) for v in values]
    n = len(vals)
    if direction == "a_to_alpha":
        return tuple(
            sum((vals[i] * falling_factorial_eval(j, i) for i in range(min(j, n - 1) + 1)),
                Fraction(0))
            for j in range(n)
        )
    if direction == "alpha_to_a":
        out: list[Fraction] = []
        for j in range(n):
            acc = vals[j]
            for i in range(j):
                acc -= out[i] * falling_factorial_eval(j, i)
            fact = falling_factorial_eval(j, j)  # = j!
            out.append(acc / fact)
        return tuple(out)
    raise ValueError(f"unknown sequence_convert direction: {direction!r}")
