"""Skew-symmetric forms and exact Pfaffian engines.

A skew form assigns a value to every ordered pair of letters, with
``f(x, x) = 0`` and ``f(y, x) = -f(x, y)``, over either exact rationals or
the generic polynomial ring.  The Pfaffian of a word is the signed sum over
canonical perfect matchings of the products of pair entries; the empty word
has Pfaffian one, odd words are rejected, and a repeated letter forces zero.

Three engines compute it: the literal matching sum, a memoized cofactor-style
recursion on sorted subwords, and fraction-free congruence elimination on an
explicit matrix.  They agree everywhere, which the test suite leans on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import MultiPoly, RATIONAL, Ring, SYMBOLIC
from .words import Word, enumerate_matchings, sign


def check_skew(matrix: Sequence[Sequence]) -> int:
    """Validate a square skew-symmetric matrix and return its dimension."""
    n = len(matrix)
    for index, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError(f"row {index} has length {len(row)}, expected {n}")
    for i in range(n):
        if matrix[i][i] != 0:
            raise ValueError(f"matrix is not skew-symmetric: m[{i}][{i}] = {matrix[i][i]}")
        for j in range(i + 1, n):
            if matrix[i][j] != -matrix[j][i]:
                raise ValueError(
                    f"matrix is not skew-symmetric: m[{i}][{j}] = {matrix[i][j]}"
                    f" but m[{j}][{i}] = {matrix[j][i]}"
                )
    return n


class SkewForm:
    """Base interface: a ring and an entry function on letter pairs."""

    ring: Ring

    def entry(self, x: int, y: int):
        raise NotImplementedError


class MatrixForm(SkewForm):
    """Skew form backed by an explicit matrix; letters are row indices."""

    def __init__(self, matrix: Sequence[Sequence]):
        symbolic = any(isinstance(e, MultiPoly) for row in matrix for e in row)
        if symbolic:
            self.matrix = [list(row) for row in matrix]
        else:
            self.matrix = [[Fraction(e) for e in row] for row in matrix]
        self.n = check_skew(self.matrix)
        self.ring = SYMBOLIC if symbolic else RATIONAL

    def entry(self, x: int, y: int):
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"letter pair ({x},{y}) outside matrix of dimension {self.n}")
        return self.matrix[x][y]


class GenericForm(SkewForm):
    """The universal symbolic form: entry(x, y) is the indeterminate g(x,y)."""

    def __init__(self):
        self.ring = SYMBOLIC

    def entry(self, x: int, y: int):
        return MultiPoly.gen(x, y)


class ExtensionForm(SkewForm):
    """A base form extended by fresh letters with explicit pair entries.

    Pairs touching a fresh letter read from the override table (in either
    orientation, with the sign flip) and default to zero; pairs of old
    letters fall through to the base form.
    """

    def __init__(self, base: SkewForm, new_letters: Iterable[int], entries: Mapping):
        self.base = base
        self.new_letters = frozenset(new_letters)
        self.ring = base.ring
        self.entries = {}
        for (x, y), value in entries.items():
            if x == y:
                raise ValueError(f"override for equal letters ({x},{y})")
            if x not in self.new_letters and y not in self.new_letters:
                raise ValueError(f"override ({x},{y}) touches no fresh letter")
            self.entries[(x, y)] = value

    def entry(self, x: int, y: int):
        if x in self.new_letters or y in self.new_letters:
            if x == y:
                return self.ring.zero
            if (x, y) in self.entries:
                return self.entries[(x, y)]
            if (y, x) in self.entries:
                return -self.entries[(y, x)]
            return self.ring.zero
        return self.base.entry(x, y)


def form_matrix(form: SkewForm, alpha: Iterable[int]):
    """The matrix of pair entries of the form restricted to a word."""
    word = tuple(alpha)
    return [[form.entry(x, y) for y in word] for x in word]


def pf_matchings(form: SkewForm, alpha: Iterable[int]):
    """Pfaffian by the signed sum over canonical perfect matchings."""
    word = tuple(alpha)
    if len(word) % 2:
        raise ValueError(f"pfaffian of odd-length word {word}")
    if len(set(word)) != len(word):
        return form.ring.zero
    total = form.ring.zero
    for matching in enumerate_matchings(word):
        product = form.ring.one
        for x, y in matching.pairs:
            product = product * form.entry(x, y)
        total = total + product if matching.sign > 0 else total - product
    return total


class PfCache:
    """Memoized Pfaffian evaluation sharing overlapping subwords of one form.

    Words are canonicalized by sorting and the rearrangement sign; the memo
    is keyed on sorted subwords only, so the many words an identity touches
    reuse each other's work.
    """

    def __init__(self, form: SkewForm):
        self.form = form
        self._memo: dict = {}

    def pf(self, alpha: Iterable[int]):
        word = tuple(alpha)
        if len(word) % 2:
            raise ValueError(f"pfaffian of odd-length word {word}")
        ordered = tuple(sorted(word))
        s = sign(word, ordered)
        if s == 0:
            return self.form.ring.zero
        value = self._sorted_pf(ordered)
        return value if s > 0 else -value

    def _sorted_pf(self, word: Word):
        if not word:
            return self.form.ring.one
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        x = word[0]
        rest = word[1:]
        total = self.form.ring.zero
        for j, y in enumerate(rest):
            term = self.form.entry(x, y) * self._sorted_pf(rest[:j] + rest[j + 1:])
            total = total + term if j % 2 == 0 else total - term
        self._memo[word] = total
        return total


def pf_recursive(form: SkewForm, alpha: Iterable[int]):
    """Pfaffian by memoized expansion along the smallest letter."""
    return PfCache(form).pf(alpha)


def _swap_pair(a, u, v):
    a[u], a[v] = a[v], a[u]
    for row in a:
        row[u], row[v] = row[v], row[u]


def _add_pair(a, i, v, c):
    # the congruence op: column i += c * column v, then row i += c * row v
    for row in a:
        row[i] += c * row[v]
    source = a[v]
    target = a[i]
    for s in range(len(a)):
        target[s] += c * source[s]


def pf_elimination(matrix: Sequence[Sequence]) -> Fraction:
    """Pfaffian of an explicit rational matrix by congruence elimination.

    Repeatedly brings a nonzero pivot to position (k, k+1) with simultaneous
    row and column swaps (each flips the sign), accumulates the pivot, and
    zeroes the rest of rows k and k+1 with paired row/column updates that
    keep the matrix skew.  An all-zero pivot row means the Pfaffian is zero.
    """
    n = check_skew(matrix)
    if n % 2:
        raise ValueError(f"pfaffian of odd dimension {n}")
    a = [[Fraction(e) for e in row] for row in matrix]
    result = Fraction(1)
    for k in range(0, n, 2):
        if a[k][k + 1] == 0:
            pivot_col = next((j for j in range(k + 2, n) if a[k][j] != 0), None)
            if pivot_col is None:
                return Fraction(0)
            _swap_pair(a, k + 1, pivot_col)
            result = -result
        pivot = a[k][k + 1]
        result *= pivot
        for i in range(k + 2, n):
            if a[k][i]:
                _add_pair(a, i, k + 1, -a[k][i] / pivot)
        for i in range(k + 2, n):
            if a[k + 1][i]:
                _add_pair(a, i, k, a[k + 1][i] / pivot)
    return result


def _det_bareiss(matrix) -> Fraction:
    a = [[Fraction(e) for e in row] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    flip = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            flip = -flip
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return flip * a[n - 1][n - 1]


def _det_cofactor(matrix, zero, one):
    # first-row expansion memoized on the set of remaining columns
    n = len(matrix)
    memo: dict = {}

    def minor(cols):
        if not cols:
            return one
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        total = zero
        for idx, c in enumerate(cols):
            term = matrix[row][c] * minor(cols[:idx] + cols[idx + 1:])
            total = total + term if idx % 2 == 0 else total - term
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def det(matrix: Sequence[Sequence]):
    """Exact determinant: Bareiss over rationals, memoized cofactors otherwise."""
    n = len(matrix)
    for index, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError(f"row {index} has length {len(row)}, expected {n}")
    symbolic = any(isinstance(e, MultiPoly) for row in matrix for e in row)
    if symbolic:
        return _det_cofactor([list(row) for row in matrix], MultiPoly.zero(), MultiPoly.one())
    return _det_bareiss(matrix)
