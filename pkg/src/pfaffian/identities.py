"""Classical Pfaffian identities, each packaged as a residual.

Every ``*_residual`` function evaluates left side minus right side of one
identity on a given skew form and word shapes.  For any genuinely
skew-symmetric form the residual is exactly zero, over the rationals and
over the generic polynomial ring alike, so a nonzero return is a
counterexample, not a rounding artifact.

Residuals share Pfaffian work through a per-call :class:`~pfaffian.core.PfCache`,
since one identity touches many overlapping subwords.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import SYMBOLIC
from .core import ExtensionForm, PfCache, SkewForm, check_skew, det, form_matrix, pf_elimination
from .words import enumerate_matchings, sign, word_diff


def _word(letters) -> tuple:
    return tuple(letters)


def _require_even(label: str, word: tuple):
    if len(word) % 2:
        raise ValueError(f"{label} must have even length, got {len(word)}")


def _require_distinct(label: str, word: tuple):
    if len(set(word)) != len(word):
        raise ValueError(f"{label} must have distinct letters, got {word}")


def tanner_residual(form: SkewForm, alpha: Iterable[int], beta: Iterable[int], x: int):
    """f[a] f[ab] = sum over y in b of s(b, xy) f[axy] f[ab - xy]."""
    alpha, beta = _word(alpha), _word(beta)
    _require_even("alpha", alpha)
    _require_even("beta", beta)
    _require_distinct("alpha beta", alpha + beta)
    if x not in beta:
        raise ValueError(f"expansion letter {x} does not occur in beta {beta}")
    ev = PfCache(form)
    combined = alpha + beta
    lhs = ev.pf(alpha) * ev.pf(combined)
    rhs = form.ring.zero
    for y in beta:
        s = sign(beta, (x, y))
        if s == 0:
            continue
        term = ev.pf(alpha + (x, y)) * ev.pf(word_diff(combined, (x, y)))
        rhs = rhs + term if s > 0 else rhs - term
    return lhs - rhs


def expansion_residual(form: SkewForm, beta: Iterable[int], x: int):
    """f[b] = sum over y in b of s(b, xy) f[xy] f[b - xy]."""
    beta = _word(beta)
    _require_even("beta", beta)
    if x not in beta:
        raise ValueError(f"expansion letter {x} does not occur in beta {beta}")
    ev = PfCache(form)
    rhs = form.ring.zero
    for y in beta:
        s = sign(beta, (x, y))
        if s == 0:
            continue
        term = ev.pf((x, y)) * ev.pf(word_diff(beta, (x, y)))
        rhs = rhs + term if s > 0 else rhs - term
    return ev.pf(beta) - rhs


def averaged_expansion_residual(form: SkewForm, beta: Iterable[int]):
    """f[b] = (1/|b|) sum over x, y in b of s(b, xy) f[xy] f[b - xy].

    Over the polynomial ring, where dividing by |b| is unavailable, the
    residual is returned cleared of the denominator: |b| f[b] minus the
    double sum.  Both forms vanish together.
    """
    beta = _word(beta)
    _require_even("beta", beta)
    if not beta:
        raise ValueError("beta must be nonempty")
    ev = PfCache(form)
    total = form.ring.zero
    for x in beta:
        for y in beta:
            s = sign(beta, (x, y))
            if s == 0:
                continue
            term = ev.pf((x, y)) * ev.pf(word_diff(beta, (x, y)))
            total = total + term if s > 0 else total - term
    if form.ring is SYMBOLIC:
        return len(beta) * ev.pf(beta) - total
    return ev.pf(beta) - total / len(beta)


def minor_product_residual(form: SkewForm, alpha: Iterable[int], beta: Iterable[int]):
    """f[a]^(n-1) f[ab] = sum over matchings of b of the signed products
    f[a x1 y1] ... f[a xn yn], where 2n = |b|."""
    alpha, beta = _word(alpha), _word(beta)
    _require_even("alpha", alpha)
    _require_even("beta", beta)
    _require_distinct("alpha beta", alpha + beta)
    if len(beta) < 2:
        raise ValueError("beta must have at least one pair of letters")
    n = len(beta) // 2
    ev = PfCache(form)
    lhs = ev.pf(alpha) ** (n - 1) * ev.pf(alpha + beta)
    rhs = form.ring.zero
    # matchings run over positions of beta, so each pair keeps word order;
    # the emitted sign is then s(beta, x1 y1 ... xn yn) for that layout
    for matching in enumerate_matchings(range(len(beta))):
        product = form.ring.one
        for i, j in matching.pairs:
            product = product * ev.pf(alpha + (beta[i], beta[j]))
        rhs = rhs + product if matching.sign > 0 else rhs - product
    return lhs - rhs


def complementary_residual(form: SkewForm, alpha: Iterable[int], beta: Iterable[int]):
    """f[a] f[ab]^(n-1) = sum over matchings of b of the signed products
    f[ab - x1 y1] ... f[ab - xn yn], where 2n = |b|."""
    alpha, beta = _word(alpha), _word(beta)
    _require_even("alpha", alpha)
    _require_even("beta", beta)
    _require_distinct("alpha beta", alpha + beta)
    if len(beta) < 2:
        raise ValueError("beta must have at least one pair of letters")
    n = len(beta) // 2
    ev = PfCache(form)
    combined = alpha + beta
    lhs = ev.pf(alpha) * ev.pf(combined) ** (n - 1)
    rhs = form.ring.zero
    # the deleted-pair factors are symmetric in x, y, so the matching word
    # must keep beta's own letter order for the sign to be the right one;
    # enumerating positions of beta does exactly that
    for matching in enumerate_matchings(range(len(beta))):
        product = form.ring.one
        for i, j in matching.pairs:
            product = product * ev.pf(word_diff(combined, (beta[i], beta[j])))
        rhs = rhs + product if matching.sign > 0 else rhs - product
    return lhs - rhs


def wenzel_residual(form: SkewForm, alpha: Iterable[int], beta: Iterable[int],
                    gamma: Iterable[int], x: int):
    """f[ab] f[ag] = sum over y in b of s(b, xy) f[ab - xy] f[ag xy]
    + sum over y in g of s(b, x) s(g, y) f[a y (b - x)] f[a x (g - y)]."""
    alpha, beta, gamma = _word(alpha), _word(beta), _word(gamma)
    _require_even("alpha beta", alpha + beta)
    _require_even("alpha gamma", alpha + gamma)
    _require_distinct("alpha beta gamma", alpha + beta + gamma)
    if x not in beta:
        raise ValueError(f"expansion letter {x} does not occur in beta {beta}")
    ev = PfCache(form)
    lhs = ev.pf(alpha + beta) * ev.pf(alpha + gamma)
    rhs = form.ring.zero
    for y in beta:
        s = sign(beta, (x, y))
        if s == 0:
            continue
        term = ev.pf(word_diff(alpha + beta, (x, y))) * ev.pf(alpha + gamma + (x, y))
        rhs = rhs + term if s > 0 else rhs - term
    beta_drop = word_diff(beta, (x,))
    s_x = sign(beta, (x,))
    for y in gamma:
        s = s_x * sign(gamma, (y,))
        term = ev.pf(alpha + (y,) + beta_drop) * ev.pf(alpha + (x,) + word_diff(gamma, (y,)))
        rhs = rhs + term if s > 0 else rhs - term
    return lhs - rhs


def build_cancelling_extension(form: SkewForm, gamma: Sequence[int], fresh_base: int):
    """Extend a form with primed partners for gamma: each new letter pairs
    with its gamma partner at value one and annihilates everything else.
    Returns the extended form and the reversed primed word."""
    gamma = _word(gamma)
    _require_distinct("gamma", gamma)
    if gamma and fresh_base <= max(gamma):
        raise ValueError(f"fresh letters must start above {max(gamma)}, got {fresh_base}")
    primes = tuple(fresh_base + index for index in range(len(gamma)))
    entries = {(gamma[index], primes[index]): form.ring.one for index in range(len(gamma))}
    extended = ExtensionForm(form, primes, entries)
    return extended, tuple(reversed(primes))


def cancelling_residual(form: SkewForm, alpha: Iterable[int], beta: Iterable[int],
                        gamma: Iterable[int]):
    """f[ab] is unchanged by splicing in gamma followed by its cancelling
    primed word: f[ab] = f[a g g' b] on the extended form."""
    alpha, beta, gamma = _word(alpha), _word(beta), _word(gamma)
    _require_even("alpha beta", alpha + beta)
    _require_distinct("alpha beta gamma", alpha + beta + gamma)
    fresh_base = max(alpha + beta + gamma, default=-1) + 1
    extended, gamma_prime = build_cancelling_extension(form, gamma, fresh_base)
    base_value = PfCache(form).pf(alpha + beta)
    spliced_value = PfCache(extended).pf(alpha + gamma + gamma_prime + beta)
    return base_value - spliced_value


def brill_residual(form: SkewForm, alpha: Iterable[int], k: int):
    """C(n-1, k) f[a] = sum of s(a, b) f[b] f[a - b] over the 2k-subwords b
    drawn from all but the last position of a, where 2n = |a|."""
    alpha = _word(alpha)
    _require_even("alpha", alpha)
    _require_distinct("alpha", alpha)
    n = len(alpha) // 2
    if not 0 <= k <= n:
        raise ValueError(f"subword half-length k must lie in 0..{n}, got {k}")
    ev = PfCache(form)
    total = form.ring.zero
    for subset in itertools.combinations(range(len(alpha) - 1), 2 * k):
        sub = tuple(alpha[p] for p in subset)
        s = sign(alpha, sub)
        term = ev.pf(sub) * ev.pf(word_diff(alpha, sub))
        total = total + term if s > 0 else total - term
    return math.comb(n - 1, k) * ev.pf(alpha) - total


def cayley_square_residual(form: SkewForm, alpha: Iterable[int]):
    """det of the restricted matrix equals the squared Pfaffian."""
    alpha = _word(alpha)
    _require_even("alpha", alpha)
    value = PfCache(form).pf(alpha)
    return det(form_matrix(form, alpha)) - value * value


def cayley_bordered_residual(form: SkewForm, x: int, y: int, rest: Iterable[int]):
    """Bordered determinant with row word x.rest and column word y.rest:
    it factors as f[x rest] f[y rest] for even n, f[xy rest] f[rest] for odd n,
    where n = |rest| + 1."""
    rest = _word(rest)
    _require_distinct("rest", rest)
    if x in rest or y in rest:
        raise ValueError(f"border letters {x},{y} must avoid rest {rest}")
    rows = (x,) + rest
    cols = (y,) + rest
    matrix = [[form.entry(r, c) for c in cols] for r in rows]
    ev = PfCache(form)
    n = len(rest) + 1
    if n % 2 == 0:
        expected = ev.pf((x,) + rest) * ev.pf((y,) + rest)
    else:
        expected = ev.pf((x, y) + rest) * ev.pf(rest)
    return det(matrix) - expected


def solve_skew_cramer(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve m z = rhs for skew-symmetric m by Pfaffian quotients.

    Each component is the Pfaffian of the matrix bordered with the right
    side, with one base row and column replaced by the border, divided by
    the Pfaffian of m.  Raises on a singular (zero-Pfaffian) matrix.
    """
    n = check_skew(matrix)
    if n % 2:
        raise ValueError(f"even dimension required, got {n}")
    if len(rhs) != n:
        raise ValueError(f"right side has length {len(rhs)}, expected {n}")
    m = [[Fraction(e) for e in row] for row in matrix]
    b = [Fraction(e) for e in rhs]
    denominator = pf_elimination(m)
    if denominator == 0:
        raise ValueError("singular system: the matrix has Pfaffian zero")
    bordered = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        bordered[i + 1][0] = b[i]
        bordered[0][i + 1] = -b[i]
        for j in range(n):
            bordered[i + 1][j + 1] = m[i][j]
    solution = []
    for j in range(n):
        indices = list(range(1, n + 1))
        indices[j] = 0
        sub = [[bordered[a][c] for c in indices] for a in indices]
        solution.append(pf_elimination(sub) / denominator)
    return solution
