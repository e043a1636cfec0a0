"""Determinants as Pfaffians through the bipartite encoding.

Rows and columns of a square matrix become disjoint letter alphabets: row x
maps to the even letter 2x, column y to the odd letter 2y + 1 (its "barred"
partner).  On these letters the matrix induces a skew form whose same-part
entries vanish, and the minor with row word alpha and column word beta is the
Pfaffian of the word alpha followed by the reversed barred beta.

The classical determinant identities (Desnanot, Dodgson condensation,
Jacobi's adjugate, Sylvester, Fontaine, Bezout, Brioschi) then become
consequences of the Pfaffian ones, and are exposed here as residuals or
dedicated algorithms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import MultiPoly, RATIONAL, SYMBOLIC
from .core import MatrixForm, PfCache, SkewForm, det, pf_elimination, pf_recursive
from .words import reverse_complement, sign, word_diff


def encode_row(index: int) -> int:
    """Row index to plain letter: x -> 2x."""
    if index < 0:
        raise ValueError(f"row index must be non-negative, got {index}")
    return 2 * index


def encode_col(index: int) -> int:
    """Column index to barred letter: y -> 2y + 1."""
    if index < 0:
        raise ValueError(f"column index must be non-negative, got {index}")
    return 2 * index + 1


def decode_letter(letter: int) -> tuple:
    """A letter back to (index, barred) form."""
    if letter < 0:
        raise ValueError(f"letter must be non-negative, got {letter}")
    return (letter // 2, bool(letter % 2))


class BipartiteForm(SkewForm):
    """The skew form a square matrix induces on its row and column letters."""

    def __init__(self, matrix: Sequence[Sequence]):
        n = len(matrix)
        for index, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError(f"row {index} has length {len(row)}, expected {n}")
        symbolic = any(isinstance(e, MultiPoly) for row in matrix for e in row)
        if symbolic:
            self.matrix = [list(row) for row in matrix]
        else:
            self.matrix = [[Fraction(e) for e in row] for row in matrix]
        self.n = n
        self.ring = SYMBOLIC if symbolic else RATIONAL

    @classmethod
    def generic(cls, n: int) -> "BipartiteForm":
        """A generic matrix: entry (i, j) is the indeterminate on the letter
        pair (2i, 2j+1), so all n*n entries are independent."""
        return cls([[MultiPoly.gen(2 * i, 2 * j + 1) for j in range(n)] for i in range(n)])

    def entry(self, x: int, y: int):
        if x % 2 == y % 2:
            return self.ring.zero
        if x % 2 == 0:
            i, j = x // 2, (y - 1) // 2
            flip = False
        else:
            i, j = y // 2, (x - 1) // 2
            flip = True
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"letter pair ({x},{y}) outside matrix of dimension {self.n}")
        value = self.matrix[i][j]
        return -value if flip else value


def minor_word(rows: Iterable[int], cols: Iterable[int]) -> tuple:
    """The Pfaffian word of a minor: encoded rows, then reversed barred columns."""
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError(f"minor needs as many rows as columns, got {len(rows)} and {len(cols)}")
    return tuple(encode_row(x) for x in rows) + reverse_complement(tuple(encode_row(y) for y in cols))


def det_via_pf(form: BipartiteForm, rows: Iterable[int], cols: Iterable[int]):
    """The minor on the given rows and columns, as a Pfaffian."""
    return pf_recursive(form, minor_word(rows, cols))


def _minor(ev: PfCache, rows: tuple, cols: tuple):
    return ev.pf(minor_word(rows, cols))


def desnanot_residual(form: BipartiteForm, alpha: Iterable[int], beta: Iterable[int],
                      gamma: Iterable[int], delta: Iterable[int], x: int):
    """f[a,b] f[ag,bd] = sum over y in d of s(g,x) s(d,y) f[ax,by] f[ag-x,bd-y],
    with row words a, g and column words b, d."""
    alpha, beta = tuple(alpha), tuple(beta)
    gamma, delta = tuple(gamma), tuple(delta)
    if len(alpha) != len(beta):
        raise ValueError(f"row word alpha and column word beta must match, got {len(alpha)} and {len(beta)}")
    if len(gamma) != len(delta):
        raise ValueError(f"row word gamma and column word delta must match, got {len(gamma)} and {len(delta)}")
    if x not in gamma:
        raise ValueError(f"expansion row {x} does not occur in gamma {gamma}")
    ev = PfCache(form)
    lhs = _minor(ev, alpha, beta) * _minor(ev, alpha + gamma, beta + delta)
    rhs = form.ring.zero
    s_x = sign(gamma, (x,))
    for y in delta:
        s = s_x * sign(delta, (y,))
        if s == 0:
            continue
        term = _minor(ev, alpha + (x,), beta + (y,)) * _minor(
            ev, word_diff(alpha + gamma, (x,)), word_diff(beta + delta, (y,)))
        rhs = rhs + term if s > 0 else rhs - term
    return lhs - rhs


def jacobi_adjugate_residual(form: BipartiteForm, alpha: Iterable[int], beta: Iterable[int],
                             xs: Iterable[int], ys: Iterable[int]):
    """f[a,b] f[a xs, b ys]^(n-1) equals the determinant of the n x n matrix
    of minors that each drop one of xs and one of ys."""
    alpha, beta = tuple(alpha), tuple(beta)
    xs, ys = tuple(xs), tuple(ys)
    n = len(xs)
    if n == 0 or len(ys) != n:
        raise ValueError(f"need matching nonempty row and column borders, got {len(xs)} and {len(ys)}")
    if len(alpha) != len(beta):
        raise ValueError(f"row word alpha and column word beta must match, got {len(alpha)} and {len(beta)}")
    ev = PfCache(form)
    lhs = _minor(ev, alpha, beta) * _minor(ev, alpha + xs, beta + ys) ** (n - 1)
    adjugate = [
        [_minor(ev, alpha + word_diff(xs, (xs[i],)), beta + word_diff(ys, (ys[j],)))
         for j in range(n)]
        for i in range(n)
    ]
    return lhs - det(adjugate)


def sylvester_residual(form: BipartiteForm, alpha: Iterable[int], beta: Iterable[int],
                       xs: Iterable[int], ys: Iterable[int]):
    """f[a,b]^(n-1) f[a xs, b ys] equals the determinant of the n x n matrix
    of minors that each adjoin one of xs and one of ys."""
    alpha, beta = tuple(alpha), tuple(beta)
    xs, ys = tuple(xs), tuple(ys)
    n = len(xs)
    if n == 0 or len(ys) != n:
        raise ValueError(f"need matching nonempty row and column borders, got {len(xs)} and {len(ys)}")
    if len(alpha) != len(beta):
        raise ValueError(f"row word alpha and column word beta must match, got {len(alpha)} and {len(beta)}")
    ev = PfCache(form)
    lhs = _minor(ev, alpha, beta) ** (n - 1) * _minor(ev, alpha + xs, beta + ys)
    bordered = [
        [_minor(ev, alpha + (xs[i],), beta + (ys[j],)) for j in range(n)]
        for i in range(n)
    ]
    return lhs - det(bordered)


class ZeroPivotError(ArithmeticError):
    """Dodgson condensation hit a zero interior pivot.

    ``layer`` is the 1-based index of the layer being formed; the pivot is
    the interior entry at 1-based position (row, col) of layer ``layer - 2``.
    """

    def __init__(self, layer: int, row: int, col: int):
        self.layer = layer
        self.row = row
        self.col = col
        super().__init__(
            f"zero pivot forming layer {layer}: interior entry ({row},{col})"
            f" of layer {layer - 2} is zero"
        )


def condensation_layers(matrix: Sequence[Sequence]):
    """Yield the successive Dodgson layers of a square rational matrix.

    Layer 1 is the matrix itself (not yielded); layer k+1 shrinks layer k by
    one, each entry a 2x2 connected minor of layer k divided by the interior
    entry of layer k-1.  Only two layers are alive at a time.
    """
    n = len(matrix)
    for index, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError(f"row {index} has length {len(row)}, expected {n}")
    previous = [[Fraction(1)] * (n + 1) for _ in range(n + 1)]
    current = [[Fraction(e) for e in row] for row in matrix]
    for step in range(1, n):
        size = n - step
        formed = [[Fraction(0)] * size for _ in range(size)]
        for x in range(size):
            for y in range(size):
                pivot = previous[x + 1][y + 1]
                if pivot == 0:
                    raise ZeroPivotError(step + 1, x + 1, y + 1)
                formed[x][y] = (
                    current[x][y] * current[x + 1][y + 1]
                    - current[x][y + 1] * current[x + 1][y]
                ) / pivot
        yield formed
        previous, current = current, formed


def dodgson_condense(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by Dodgson condensation; raises ZeroPivotError when a
    division pivot vanishes (use another determinant route then)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    last = None
    for layer in condensation_layers(matrix):
        last = layer
    if last is None:
        return Fraction(matrix[0][0])
    return last[0][0]


def fontaine_residual(form: BipartiteForm, rows: Iterable[int], cols: Iterable[int]):
    """The quadratic relation among the six 2x2 minors of two rows and four
    columns: f[ab,12]f[ab,34] - f[ab,13]f[ab,24] + f[ab,14]f[ab,23]."""
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != 2 or len(cols) != 4:
        raise ValueError(f"need 2 rows and 4 columns, got {len(rows)} and {len(cols)}")
    ev = PfCache(form)
    c1, c2, c3, c4 = cols

    def m2(u, v):
        return _minor(ev, rows, (u, v))

    return m2(c1, c2) * m2(c3, c4) - m2(c1, c3) * m2(c2, c4) + m2(c1, c4) * m2(c2, c3)


def bezout_residual(form: BipartiteForm, rows: Iterable[int], cols: Iterable[int]):
    """The quadratic relation among 3x3 minors of three rows and six columns,
    splitting the last four columns against the first two."""
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != 3 or len(cols) != 6:
        raise ValueError(f"need 3 rows and 6 columns, got {len(rows)} and {len(cols)}")
    ev = PfCache(form)
    c1, c2, c3, c4, c5, c6 = cols

    def m3(u, v, w):
        return _minor(ev, rows, (u, v, w))

    return (
        m3(c1, c2, c3) * m3(c4, c5, c6)
        - m3(c1, c2, c4) * m3(c3, c5, c6)
        + m3(c1, c2, c5) * m3(c3, c4, c6)
        - m3(c1, c2, c6) * m3(c3, c4, c5)
    )


def desnanot_five_residual(form: BipartiteForm, rows: Iterable[int], cols: Iterable[int]):
    """The five-column relation mixing 2x2 and 3x3 minors of three rows:
    sum of (-1)^k f[ab, c1 ck] f[abc, cols - c1 ck] over k = 2..5."""
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != 3 or len(cols) != 5:
        raise ValueError(f"need 3 rows and 5 columns, got {len(rows)} and {len(cols)}")
    ev = PfCache(form)
    a, b, c = rows
    total = form.ring.zero
    for k in range(1, 5):
        rest = tuple(cols[i] for i in range(1, 5) if i != k)
        term = _minor(ev, (a, b), (cols[0], cols[k])) * _minor(ev, (a, b, c), rest)
        total = total + term if k % 2 else total - term
    return total


def _transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def _mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = a[i][0] * b[0][j]
            for t in range(1, inner):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def brioschi_pf(matrix: Sequence[Sequence]) -> tuple:
    """(Pfaffian of A^T Q A, det A) for the block-diagonal symplectic Q.

    The two numbers agree for every square matrix of even dimension; the
    pair is returned so callers can display or compare both routes.
    """
    n = len(matrix)
    for index, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError(f"row {index} has length {len(row)}, expected {n}")
    if n % 2:
        raise ValueError(f"even dimension required, got {n}")
    symbolic = any(isinstance(e, MultiPoly) for row in matrix for e in row)
    if symbolic:
        a = [list(row) for row in matrix]
        q = [[MultiPoly.zero()] * n for _ in range(n)]
        for k in range(0, n, 2):
            q[k][k + 1] = MultiPoly.one()
            q[k + 1][k] = -MultiPoly.one()
    else:
        a = [[Fraction(e) for e in row] for row in matrix]
        q = [[Fraction(0)] * n for _ in range(n)]
        for k in range(0, n, 2):
            q[k][k + 1] = Fraction(1)
            q[k + 1][k] = Fraction(-1)
    skew = _mat_mul(_transpose(a), _mat_mul(q, a))
    if symbolic:
        pf_value = pf_recursive(MatrixForm(skew), range(n))
    else:
        pf_value = pf_elimination(skew)
    return pf_value, det(matrix)
