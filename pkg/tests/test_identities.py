import random
from fractions import Fraction

import pytest

from pfaffian.core import GenericForm, MatrixForm, PfCache, form_matrix, pf_elimination
from pfaffian.identities import (
    averaged_expansion_residual,
    brill_residual,
    build_cancelling_extension,
    cancelling_residual,
    cayley_bordered_residual,
    cayley_square_residual,
    complementary_residual,
    expansion_residual,
    minor_product_residual,
    solve_skew_cramer,
    tanner_residual,
    wenzel_residual,
)

from oracles import solve_gaussian


def rand_skew(rng, n):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            m[j][i] = -m[i][j]
    return m


def shuffled(rng, *sizes):
    letters = list(range(sum(sizes)))
    rng.shuffle(letters)
    out, start = [], 0
    for size in sizes:
        out.append(tuple(letters[start:start + size]))
        start += size
    return out


GENERIC = GenericForm()


# --- tanner ----------------------------------------------------------------


def test_tanner_trivial_two_letter_beta():
    form = MatrixForm(rand_skew(random.Random(0), 4))
    assert tanner_residual(form, (0, 1), (2, 3), 2) == 0
    assert tanner_residual(form, (0, 1), (2, 3), 3) == 0


def test_tanner_symbolic_two_four():
    for x in range(2, 6):
        assert tanner_residual(GENERIC, (0, 1), (2, 3, 4, 5), x).is_zero


def test_tanner_numeric_shuffled():
    rng = random.Random(5)
    for _ in range(10):
        form = MatrixForm(rand_skew(rng, 8))
        alpha, beta = shuffled(rng, 2, 6)
        assert tanner_residual(form, alpha, beta, beta[3]) == 0


def test_tanner_rejects_bad_shapes():
    form = MatrixForm(rand_skew(random.Random(0), 6))
    with pytest.raises(ValueError):
        tanner_residual(form, (0, 1), (2, 3, 4, 5), 0)  # x not in beta
    with pytest.raises(ValueError):
        tanner_residual(form, (0,), (2, 3, 4, 5), 2)
    with pytest.raises(ValueError):
        tanner_residual(form, (0, 1), (1, 2, 3, 4), 2)  # overlap


# --- expansion and its average ---------------------------------------------


def test_expansion_trivial_pair():
    form = MatrixForm(rand_skew(random.Random(1), 2))
    assert expansion_residual(form, (0, 1), 0) == 0


def test_expansion_symbolic_reproduces_three_terms():
    for x in range(4):
        assert expansion_residual(GENERIC, (0, 1, 2, 3), x).is_zero


def test_expansion_numeric_six_letters():
    rng = random.Random(2)
    form = MatrixForm(rand_skew(rng, 6))
    (beta,) = shuffled(rng, 6)
    for x in beta:
        assert expansion_residual(form, beta, x) == 0


def test_averaged_expansion_trivial_pair():
    form = MatrixForm(rand_skew(random.Random(3), 2))
    assert averaged_expansion_residual(form, (0, 1)) == 0


def test_averaged_expansion_symbolic_cleared():
    assert averaged_expansion_residual(GENERIC, (0, 1, 2, 3)).is_zero


def test_averaged_expansion_numeric():
    rng = random.Random(4)
    form = MatrixForm(rand_skew(rng, 6))
    (beta,) = shuffled(rng, 6)
    assert averaged_expansion_residual(form, beta) == 0


# --- matching-sum identities ------------------------------------------------


def test_minor_product_single_pair_beta():
    form = MatrixForm(rand_skew(random.Random(6), 4))
    assert minor_product_residual(form, (0, 1), (2, 3)) == 0


def test_minor_product_symbolic_fixed_alpha():
    assert minor_product_residual(GENERIC, (0, 1), (2, 3, 4, 5)).is_zero


def test_minor_product_numeric_three_pairs():
    rng = random.Random(7)
    for _ in range(5):
        form = MatrixForm(rand_skew(rng, 8))
        alpha, beta = shuffled(rng, 2, 6)
        assert minor_product_residual(form, alpha, beta) == 0


def test_complementary_single_pair_beta():
    form = MatrixForm(rand_skew(random.Random(8), 4))
    assert complementary_residual(form, (0, 1), (2, 3)) == 0


def test_complementary_symbolic_empty_alpha():
    assert complementary_residual(GENERIC, (), (0, 1, 2, 3)).is_zero


def test_complementary_numeric_shuffled():
    rng = random.Random(9)
    for _ in range(10):
        form = MatrixForm(rand_skew(rng, 6))
        alpha, beta = shuffled(rng, 2, 4)
        assert complementary_residual(form, alpha, beta) == 0


# --- wenzel ----------------------------------------------------------------


def test_wenzel_symbolic_odd_alpha():
    assert wenzel_residual(GENERIC, (0,), (1, 2, 3), (4, 5, 6), 2).is_zero


def test_wenzel_numeric():
    rng = random.Random(10)
    for _ in range(5):
        form = MatrixForm(rand_skew(rng, 9))
        alpha, beta, gamma = shuffled(rng, 3, 3, 3)
        for x in beta:
            assert wenzel_residual(form, alpha, beta, gamma, x) == 0


def test_wenzel_requires_x_in_beta():
    form = MatrixForm(rand_skew(random.Random(0), 9))
    with pytest.raises(ValueError):
        wenzel_residual(form, (0,), (1, 2, 3), (4, 5, 6), 4)


# --- cancelling extensions --------------------------------------------------


def test_cancelling_empty_gamma():
    form = MatrixForm(rand_skew(random.Random(11), 4))
    assert cancelling_residual(form, (0, 1), (2, 3), ()) == 0


def test_cancelling_single_letter_numeric():
    rng = random.Random(12)
    form = MatrixForm(rand_skew(rng, 5))
    alpha, beta, gamma = shuffled(rng, 2, 2, 1)
    assert cancelling_residual(form, alpha, beta, gamma) == 0


def test_cancelling_three_letters_symbolic():
    assert cancelling_residual(GENERIC, (0, 1), (2, 3), (4, 5, 6)).is_zero


def test_cancelling_extension_entries():
    form = MatrixForm(rand_skew(random.Random(13), 3))
    extended, primes = build_cancelling_extension(form, (0, 2), 3)
    assert primes == (4, 3)
    assert extended.entry(0, 3) == 1
    assert extended.entry(3, 0) == -1
    assert extended.entry(2, 4) == 1
    assert extended.entry(1, 3) == 0
    assert extended.entry(3, 4) == 0
    # the spliced pair word has Pfaffian one
    assert PfCache(extended).pf((0, 2) + primes) == 1
    with pytest.raises(ValueError):
        build_cancelling_extension(form, (0, 2), 2)


# --- brill -----------------------------------------------------------------


def test_brill_k_zero_is_trivial():
    form = MatrixForm(rand_skew(random.Random(14), 6))
    assert brill_residual(form, (0, 1, 2, 3, 4, 5), 0) == 0


def test_brill_symbolic_n2_k1():
    assert brill_residual(GENERIC, (0, 1, 2, 3), 1).is_zero


def test_brill_numeric_n3_k2():
    rng = random.Random(15)
    for _ in range(5):
        form = MatrixForm(rand_skew(rng, 6))
        (alpha,) = shuffled(rng, 6)
        assert brill_residual(form, alpha, 2) == 0


def test_brill_k_out_of_range():
    form = MatrixForm(rand_skew(random.Random(0), 4))
    with pytest.raises(ValueError):
        brill_residual(form, (0, 1, 2, 3), 3)


# --- cayley ----------------------------------------------------------------


def test_cayley_square_two_letters():
    form = MatrixForm(rand_skew(random.Random(16), 2))
    assert cayley_square_residual(form, (0, 1)) == 0


def test_cayley_square_fixture_is_sixty_four():
    # Pf = 8 on this matrix, so the determinant must be 64
    fix = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    form = MatrixForm(fix)
    assert cayley_square_residual(form, (0, 1, 2, 3)) == 0
    assert PfCache(form).pf((0, 1, 2, 3)) == 8


def test_cayley_square_symbolic_six():
    assert cayley_square_residual(GENERIC, tuple(range(6))).is_zero


def test_cayley_bordered_smallest_even():
    form = MatrixForm(rand_skew(random.Random(17), 3))
    # n = 2: det [[f[xy], f[xz]], [f[zy], 0]] equals f[xz] f[yz]
    assert cayley_bordered_residual(form, 0, 1, (2,)) == 0


def test_cayley_bordered_symbolic_odd():
    assert cayley_bordered_residual(GENERIC, 0, 1, (2, 3)).is_zero


def test_cayley_bordered_equal_borders_allowed():
    form = MatrixForm(rand_skew(random.Random(18), 4))
    assert cayley_bordered_residual(form, 0, 0, (1, 2, 3)) == 0


def test_cayley_bordered_rejects_overlap():
    form = MatrixForm(rand_skew(random.Random(0), 4))
    with pytest.raises(ValueError):
        cayley_bordered_residual(form, 0, 1, (1, 2))


# --- cramer ----------------------------------------------------------------


def test_cramer_zero_rhs():
    m = [[0, 1], [-1, 0]]
    assert solve_skew_cramer(m, [0, 0]) == [0, 0]


def test_cramer_two_by_two_closed_form():
    m = [[0, 1], [-1, 0]]
    # z1 = -b2, z2 = b1 for this matrix
    assert solve_skew_cramer(m, [Fraction(3), Fraction(5, 2)]) == [
        Fraction(-5, 2),
        Fraction(3),
    ]


def test_cramer_matches_independent_solver():
    rng = random.Random(19)
    solved = 0
    while solved < 10:
        m = rand_skew(rng, 4)
        if pf_elimination(m) == 0:
            continue
        rhs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        z = solve_skew_cramer(m, rhs)
        assert z == solve_gaussian(m, rhs)
        for i in range(4):
            assert sum(m[i][j] * z[j] for j in range(4)) == rhs[i]
        solved += 1


def test_cramer_rejects_singular_and_bad_shapes():
    with pytest.raises(ValueError):
        solve_skew_cramer([[0, 0], [0, 0]], [1, 2])
    with pytest.raises(ValueError):
        solve_skew_cramer([[0]], [1])
    with pytest.raises(ValueError):
        solve_skew_cramer([[0, 1], [-1, 0]], [1])
    with pytest.raises(ValueError):
        solve_skew_cramer([[0, 1], [1, 0]], [1, 2])


# --- cross-checks between identities ---------------------------------------


def test_wenzel_collapses_to_tanner_when_gamma_empty():
    # with gamma empty the second sum has no terms and the identity is the
    # two-word overlap expansion with alpha absorbed
    rng = random.Random(20)
    form = MatrixForm(rand_skew(rng, 6))
    alpha, beta = shuffled(rng, 2, 4)
    for x in beta:
        assert wenzel_residual(form, alpha, beta, (), x) == 0
        assert tanner_residual(form, alpha, beta, x) == 0


def test_elimination_agrees_on_restricted_words():
    rng = random.Random(21)
    form = MatrixForm(rand_skew(rng, 6))
    cache = PfCache(form)
    for word in [(0, 2, 4, 5), (5, 1, 2, 0), (3, 2, 1, 0)]:
        assert cache.pf(word) == pf_elimination(form_matrix(form, word))
