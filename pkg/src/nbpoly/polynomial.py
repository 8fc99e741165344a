"""Exact integer polynomials in one and two variables."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _normalize(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k: int) -> int:
        if k < 0:
            raise IndexError(f"negative degree {k}")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, t):
        """Exact Horner evaluation at an integer or rational ``t``."""
        if isinstance(t, float):
            t = Fraction(t)
        if not isinstance(t, Rational):
            raise TypeError(f"evaluate expects an integer or rational, got {t!r}")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    __call__ = evaluate

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {e!r}")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: Polynomial) -> Polynomial:
        """``self(inner(x))`` by Horner's scheme over polynomial arguments."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return to_text(self)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def subtract(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def compose(p: Polynomial, q: Polynomial) -> Polynomial:
    return p.compose(q)


def binomial_power(n: int) -> Polynomial:
    """``(1 + x)**n`` from exact binomial coefficients."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return Polynomial(comb(n, k) for k in range(n + 1))


def coefficient(p: Polynomial, k: int) -> int:
    return p.coefficient(k)


def evaluate(p: Polynomial, t):
    return p.evaluate(t)


def degree(p: Polynomial) -> int | None:
    return p.degree


def _term(c: int, k: int, var: str = "x", latex: bool = False) -> str:
    if k == 0:
        return str(c)
    power = var if k == 1 else (f"{var}^{{{k}}}" if latex else f"{var}^{k}")
    if c == 1:
        return power
    if c == -1:
        return f"-{power}"
    return f"{c}{power}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def to_text(p: Polynomial, var: str = "x") -> str:
    """Ascending-degree text form, e.g. ``1 + 3x + x^2``."""
    return _join_terms([_term(c, k, var) for k, c in enumerate(p.coeffs) if c])


def to_latex(p: Polynomial, var: str = "x") -> str:
    return _join_terms([_term(c, k, var, latex=True) for k, c in enumerate(p.coeffs) if c])


def to_json(p: Polynomial) -> list[str]:
    """Coefficients as decimal strings, ascending degree."""
    return [str(c) for c in p.coeffs]


def from_json(data: Iterable[str]) -> Polynomial:
    return Polynomial(int(c) for c in data)


class BivariatePolynomial:
    """Sparse polynomial in ``x`` and ``y``: ``{(i, j): q_ij}``, zeros never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            (i, j): c for (i, j), c in (terms or {}).items() if c != 0
        }

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def coefficient_of_y(self, k: int) -> Polynomial:
        """The univariate polynomial ``[y^k] Q`` in ``x``."""
        if k < 0:
            raise IndexError(f"negative y-degree {k}")
        width = 1 + max((i for (i, j) in self.terms if j == k), default=-1)
        coeffs = [0] * width
        for (i, j), c in self.terms.items():
            if j == k:
                coeffs[i] += c
        return Polynomial(coeffs)

    def evaluate(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BivariatePolynomial(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BivariatePolynomial({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        return bivariate_text(self)


def coefficient_of_y(Q: BivariatePolynomial, k: int) -> Polynomial:
    return Q.coefficient_of_y(k)


def _biv_term(c: int, i: int, j: int, latex: bool) -> str:
    def power(var: str, e: int) -> str:
        if e == 0:
            return ""
        if e == 1:
            return var
        return f"{var}^{{{e}}}" if latex else f"{var}^{e}"

    mono = power("x", i) + power("y", j)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}{mono}"


def bivariate_text(Q: BivariatePolynomial, latex: bool = False) -> str:
    """Terms sorted by x-degree, then y-degree, e.g. ``1 + 3xy + 2x^2y + x^2y^2``."""
    keys = sorted(Q.terms)
    return _join_terms([_biv_term(Q.terms[k], *k, latex) for k in keys])


def bivariate_to_json(Q: BivariatePolynomial) -> list[list]:
    """``[[i, j, "q_ij"], ...]`` sorted by ``(i, j)``."""
    return [[i, j, str(Q.terms[(i, j)])] for (i, j) in sorted(Q.terms)]
