"""Entry rules whose Pfaffians collapse to closed forms.

For entries of the shape (x - y) / (c + b(x + y) + a x y) with the side
condition b^2 = ac + 1 or b^2 = ac - 1 (the, a = -1, b = 0, c = 1 member is
the Blaschke quotient (x - y)/(1 - xy)), the Pfaffian of any even word is
simply the product of all its pair entries.  A four-letter criterion
characterizes exactly the forms with that product property.

Power-form entries (x - y)^k admit a Torelli-style evaluation: at k = n - 1
the Pfaffian of an n-letter word is an explicit multiple of the Vandermonde
product, and for odd k below n - 1 it vanishes outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .core import MatrixForm, SkewForm, pf_matchings
from .algebra import RATIONAL


@dataclass(frozen=True)
class PointConfig:
    """A tuple of distinct rational evaluation points."""

    points: Tuple[Fraction, ...]

    def __post_init__(self):
        pts = tuple(Fraction(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError(f"points must be distinct, got {pts}")


@dataclass(frozen=True)
class FamilyParams:
    """Denominator coefficients (a, b, c) with b^2 = ac + 1 or ac - 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        gap = self.b * self.b - self.a * self.c
        if gap != 1 and gap != -1:
            raise ValueError(
                f"side condition b^2 = ac +/- 1 violated: b^2 - ac = {gap}"
                f" for (a, b, c) = ({self.a}, {self.b}, {self.c})"
            )


def family_form(config: PointConfig, params: FamilyParams) -> MatrixForm:
    """The form with entries (x_i - x_j) / (c + b(x_i + x_j) + a x_i x_j)."""
    pts = config.points
    n = len(pts)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            denominator = params.c + params.b * (pts[i] + pts[j]) + params.a * pts[i] * pts[j]
            if denominator == 0:
                raise ValueError(
                    f"entry denominator vanishes for points {pts[i]} and {pts[j]}"
                )
            value = (pts[i] - pts[j]) / denominator
            matrix[i][j] = value
            matrix[j][i] = -value
    return MatrixForm(matrix)


def blaschke_form(config: PointConfig) -> MatrixForm:
    """The form with entries (x_i - x_j) / (1 - x_i x_j)."""
    return family_form(config, FamilyParams(-1, 0, 1))


def product_pf(form: SkewForm, alpha: Iterable[int]):
    """The product of all pair entries of an even word, in word order."""
    word = tuple(alpha)
    if len(word) % 2:
        raise ValueError(f"product form needs an even word, got length {len(word)}")
    total = form.ring.one
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            total = total * form.entry(word[i], word[j])
    return total


def n4_criterion_residual(form: SkewForm, w: int, x: int, y: int, z: int):
    """Four-letter product criterion: the Pfaffian of wxyz minus the product
    of its six pair entries.  Zero on all quadruples exactly when Pfaffians
    of this form multiply out for every even word."""
    if len({w, x, y, z}) != 4:
        raise ValueError(f"criterion needs four distinct letters, got {(w, x, y, z)}")
    e = form.entry
    pfaffian = e(w, x) * e(y, z) - e(w, y) * e(x, z) + e(w, z) * e(x, y)
    product = e(w, x) * e(w, y) * e(w, z) * e(x, y) * e(x, z) * e(y, z)
    return pfaffian - product


class _PowerForm(SkewForm):
    # (x_u - x_v)^k on point indices; genuinely skew only for odd k, but the
    # canonical matching sum reads each pair in one orientation only
    def __init__(self, points, k):
        self.points = points
        self.k = k
        self.ring = RATIONAL

    def entry(self, u: int, v: int):
        if not (0 <= u < len(self.points) and 0 <= v < len(self.points)):
            raise ValueError(f"letter pair ({u},{v}) outside {len(self.points)} points")
        return (self.points[u] - self.points[v]) ** self.k


def power_form(points: Sequence, k: int) -> SkewForm:
    """The form with entries (x_u - x_v)^k on indices into the point list."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    return _PowerForm(tuple(Fraction(p) for p in points), k)


def torelli_pf(points: Sequence, k: int, alpha: Iterable[int]) -> Fraction:
    """Pfaffian of the power form (x - y)^k on the word alpha.

    With n = |alpha|: at k = n - 1 it is the closed form
    (-1)^C(n/2, 2) * prod_j C(n-1, j) for j < n/2, times the Vandermonde
    product over alpha; for odd k < n - 1 it vanishes; any other k falls
    back to the canonical matching sum.
    """
    pts = tuple(Fraction(p) for p in points)
    word = tuple(alpha)
    if len(word) % 2:
        raise ValueError(f"pfaffian of odd-length word {word}")
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    for letter in word:
        if not 0 <= letter < len(pts):
            raise ValueError(f"letter {letter} outside {len(pts)} points")
    n = len(word)
    if n == 0:
        return Fraction(1)
    if k == n - 1:
        half = n // 2
        coefficient = 1
        for j in range(half):
            coefficient *= math.comb(n - 1, j)
        if (half * (half - 1) // 2) % 2:
            coefficient = -coefficient
        vandermonde = Fraction(1)
        for i in range(n):
            for j in range(i + 1, n):
                vandermonde *= pts[word[i]] - pts[word[j]]
        return coefficient * vandermonde
    if k % 2 == 1 and k < n - 1:
        return Fraction(0)
    return pf_matchings(power_form(pts, k), word)
