"""Exact coefficient arithmetic for skew-symmetric forms.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), which
already satisfy the contracts needed here: exact field operations and a
``p/q`` (or bare ``p``) string form that round-trips.

Polynomial values live in the ring Z[g(i,j) : i < j] whose indeterminates
stand for the entries of a generic skew-symmetric form.  ``g(j,i)`` is not a
separate symbol but denotes ``-g(i,j)``, and ``g(i,i)`` is zero; the
constructors enforce this, so every stored variable is an index pair (i, j)
with i < j.

A polynomial is a mapping from monomials to nonzero integer coefficients.  A
monomial is a tuple of ((i, j), exponent) pairs sorted by index pair; the
empty tuple is the constant monomial.  Instances are immutable by convention:
no operation mutates its arguments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

Scalar = Fraction
Var = "tuple[int, int]"
Monomial = "tuple[tuple[tuple[int, int], int], ...]"

_FACTOR_RE = re.compile(r"g\((\d+),(\d+)\)(?:\^(\d+))?\Z")


def parse_scalar(text: str) -> Fraction:
    """Parse an exact rational from its ``p/q`` or ``p`` string form."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}: {exc}") from None


def format_scalar(value: Fraction) -> str:
    """Render a rational as ``p/q``, or ``p`` when the denominator is 1."""
    return str(value)


def scalar_div(a: Fraction, b: Fraction) -> Fraction:
    """Exact division; raises ZeroDivisionError on a zero divisor."""
    if b == 0:
        raise ZeroDivisionError("scalar division by zero")
    return Fraction(a) / Fraction(b)


def _mul_monomials(m1, m2):
    # merge two sorted ((var, exp), ...) tuples, adding exponents
    merged: dict = {}
    for var, exp in m1:
        merged[var] = merged.get(var, 0) + exp
    for var, exp in m2:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def _expand(monomial):
    # variable sequence with multiplicity, the lexicographic sort key
    out = []
    for var, exp in monomial:
        out.extend([var] * exp)
    return tuple(out)


class MultiPoly:
    """Multivariate polynomial over Z in generic skew entries g(i,j)."""

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for monomial, coeff in terms.items():
                if coeff:
                    clean[monomial] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(): 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): int(c)})

    @classmethod
    def gen(cls, i: int, j: int) -> "MultiPoly":
        """The generic entry g(i,j); g(i,i) is zero and g(j,i) = -g(i,j)."""
        if i < 0 or j < 0:
            raise ValueError(f"generic entry indices must be non-negative, got g({i},{j})")
        if i == j:
            return cls.zero()
        if i > j:
            return cls({(((j, i), 1),): -1})
        return cls({(((i, j), 1),): 1})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Monomial -> coefficient pairs in serialization order."""
        return sorted(self._terms.items(), key=lambda item: _expand(item[0]))

    def variables(self) -> set:
        return {var for monomial in self._terms for var, _ in monomial}

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(exp for _, exp in m) for m in self._terms)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            total = terms.get(monomial, 0) + coeff
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = _mul_monomials(m1, m2)
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a non-negative integer, got {exponent!r}")
        result = MultiPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, assignment: Mapping) -> Fraction:
        """Evaluate with g(i,j) := assignment[(i,j)]; keys use i < j."""
        total = Fraction(0)
        for monomial, coeff in self._terms.items():
            product = Fraction(coeff)
            for var, exp in monomial:
                if var not in assignment:
                    raise ValueError(f"no value assigned to g({var[0]},{var[1]})")
                product *= Fraction(assignment[var]) ** exp
            total += product
        return total

    def to_text(self) -> str:
        """Canonical text form, e.g. ``g(1,2)*g(3,4) - 2*g(1,3)^2``."""
        if not self._terms:
            return "0"
        pieces = []
        for monomial, coeff in self.terms():
            factors = []
            for (i, j), exp in monomial:
                base = f"g({i},{j})"
                factors.append(base if exp == 1 else f"{base}^{exp}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            pieces.append((coeff < 0, body))
        negative, body = pieces[0]
        out = ("-" if negative else "") + body
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    @classmethod
    def from_text(cls, text: str) -> "MultiPoly":
        """Parse the canonical text form produced by :meth:`to_text`."""
        source = text.strip()
        if not source:
            raise ValueError("cannot parse empty polynomial text")
        if source == "0":
            return cls.zero()
        chunks = re.split(r" ([+-]) ", source)
        result = cls.zero()
        sign = 1
        for index, chunk in enumerate(chunks):
            if index % 2 == 1:
                sign = 1 if chunk == "+" else -1
                continue
            result = result + cls._parse_term(chunk, sign)
        return result

    @classmethod
    def _parse_term(cls, chunk: str, sign: int) -> "MultiPoly":
        body = chunk.strip()
        if body.startswith("-"):
            sign = -sign
            body = body[1:].strip()
        if not body:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        coeff = sign
        factors = body.split("*")
        start = 0
        if factors[0] and not factors[0].startswith("g("):
            try:
                coeff *= int(factors[0])
            except ValueError:
                raise ValueError(f"cannot parse polynomial term {chunk!r}") from None
            start = 1
        term = cls.const(coeff)
        for factor in factors[start:]:
            match = _FACTOR_RE.match(factor.strip())
            if match is None:
                raise ValueError(f"cannot parse polynomial factor {factor!r}")
            i, j = int(match.group(1)), int(match.group(2))
            exp = int(match.group(3)) if match.group(3) else 1
            term = term * cls.gen(i, j) ** exp
        return term

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


def poly_normalize(raw_terms: Iterable) -> MultiPoly:
    """Build a polynomial from (factors, coefficient) pairs.

    Each ``factors`` entry is a sequence of (i, j) index pairs, repeats
    allowed for powers, in any orientation: (j, i) contributes a sign flip
    and (i, i) kills the term.  Like terms merge; zero coefficients vanish.
    """
    result = MultiPoly.zero()
    for factors, coeff in raw_terms:
        term = MultiPoly.const(coeff)
        for i, j in factors:
            term = term * MultiPoly.gen(i, j)
        result = result + term
    return result


def eval_poly(poly: MultiPoly, assignment: Mapping) -> Fraction:
    """Evaluate ``poly`` at an assignment mapping (i, j) pairs to scalars."""
    return poly.evaluate(assignment)


@dataclass(frozen=True)
class Ring:
    """Value ring of a skew form: its name and additive/multiplicative units."""

    name: str
    zero: Any
    one: Any


RATIONAL = Ring("rational", Fraction(0), Fraction(1))
SYMBOLIC = Ring("symbolic", MultiPoly.zero(), MultiPoly.one())
