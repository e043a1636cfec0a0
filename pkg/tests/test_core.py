from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pfaffian.algebra import MultiPoly, RATIONAL, SYMBOLIC
from pfaffian.core import (
    ExtensionForm,
    GenericForm,
    MatrixForm,
    PfCache,
    check_skew,
    det,
    form_matrix,
    pf_elimination,
    pf_matchings,
    pf_recursive,
)

from oracles import det_cofactor, pfaffian_perm_sum

# entries f12=1 f13=2 f14=3 f23=4 f24=5 f34=6; Pfaffian 1*6 - 2*5 + 3*4 = 8
FIX4 = [
    [0, 1, 2, 3],
    [-1, 0, 4, 5],
    [-2, -4, 0, 6],
    [-3, -5, -6, 0],
]

ENGINES = [
    pytest.param(lambda m, w: pf_matchings(MatrixForm(m), w), id="matchings"),
    pytest.param(lambda m, w: pf_recursive(MatrixForm(m), w), id="recursive"),
    pytest.param(
        lambda m, w: pf_elimination(form_matrix(MatrixForm(m), w)), id="elimination"
    ),
]


def rand_skew(rng, n):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            m[j][i] = -m[i][j]
    return m


# --- fixtures --------------------------------------------------------------


@pytest.mark.parametrize("engine", ENGINES)
def test_empty_word_is_one(engine):
    assert engine([], ()) == 1


@pytest.mark.parametrize("engine", ENGINES)
def test_single_pair_is_the_entry(engine):
    assert engine([[0, Fraction(5, 7)], [Fraction(-5, 7), 0]], (0, 1)) == Fraction(5, 7)


@pytest.mark.parametrize("engine", ENGINES)
def test_four_letter_fixture(engine):
    assert engine(FIX4, (0, 1, 2, 3)) == 8


def test_fixture_against_permutation_oracle():
    assert pfaffian_perm_sum(FIX4) == 8


def test_recursive_generic_four_letters_expands_to_three_terms():
    expected = (
        MultiPoly.gen(0, 1) * MultiPoly.gen(2, 3)
        - MultiPoly.gen(0, 2) * MultiPoly.gen(1, 3)
        + MultiPoly.gen(0, 3) * MultiPoly.gen(1, 2)
    )
    form = GenericForm()
    assert pf_recursive(form, (0, 1, 2, 3)) == expected
    assert pf_matchings(form, (0, 1, 2, 3)) == expected


def test_elimination_singular_matrix():
    assert pf_elimination([[0, 0], [0, 0]]) == 0
    # rank-2 skew 4x4: duplicate letter realized as equal rows/columns
    m = [
        [0, 1, 1, 2],
        [-1, 0, 0, 3],
        [-1, 0, 0, 3],
        [-2, -3, -3, 0],
    ]
    assert pf_elimination(m) == 0


def test_repeated_letter_gives_ring_zero():
    form = MatrixForm(FIX4)
    assert pf_matchings(form, (0, 1, 0, 2)) == 0
    assert pf_recursive(form, (1, 1)) == 0
    assert pf_matchings(GenericForm(), (4, 4)).is_zero


# --- errors ----------------------------------------------------------------


def test_odd_words_are_errors_not_zero():
    form = MatrixForm(FIX4)
    with pytest.raises(ValueError):
        pf_matchings(form, (0, 1, 2))
    with pytest.raises(ValueError):
        pf_recursive(form, (0,))
    with pytest.raises(ValueError):
        pf_elimination([[0]])


def test_non_skew_matrix_names_entries():
    with pytest.raises(ValueError, match=r"m\[0\]\[1\]"):
        MatrixForm([[0, 1], [1, 0]])
    with pytest.raises(ValueError, match=r"m\[1\]\[1\]"):
        check_skew([[0, 1], [-1, 2]])
    with pytest.raises(ValueError):
        check_skew([[0, 1], [-1]])


def test_matrix_form_bounds():
    form = MatrixForm(FIX4)
    with pytest.raises(ValueError):
        form.entry(0, 4)
    with pytest.raises(ValueError):
        pf_recursive(form, (0, 9))


def test_extension_form_overrides():
    base = MatrixForm(FIX4)
    ext = ExtensionForm(base, [4, 5], {(1, 4): Fraction(1), (5, 2): Fraction(2)})
    assert ext.entry(1, 4) == 1
    assert ext.entry(4, 1) == -1
    assert ext.entry(5, 2) == 2
    assert ext.entry(2, 5) == -2
    assert ext.entry(0, 4) == 0
    assert ext.entry(4, 5) == 0
    assert ext.entry(4, 4) == 0
    assert ext.entry(0, 1) == 1  # falls through to the base
    with pytest.raises(ValueError):
        ExtensionForm(base, [4], {(0, 1): Fraction(1)})
    with pytest.raises(ValueError):
        ExtensionForm(base, [4], {(4, 4): Fraction(1)})


# --- determinants ----------------------------------------------------------


def test_det_fixtures():
    assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det([[1, 2], [3, 4]]) == -2
    assert det([]) == 1
    assert det(FIX4) == 64


def test_det_matches_cofactor_oracle():
    import random

    rng = random.Random(7)
    for n in range(1, 6):
        for _ in range(10):
            m = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
            assert det(m) == det_cofactor(m)


def test_det_symbolic_agrees_after_evaluation():
    import random

    rng = random.Random(11)
    m = [[MultiPoly.gen(i, j + 3) for j in range(3)] for i in range(3)]
    symbolic = det(m)
    assignment = {
        (i, j): Fraction(rng.randint(-5, 5)) for i in range(3) for j in range(3, 6)
    }
    numeric = [[m[i][j].evaluate(assignment) for j in range(3)] for i in range(3)]
    assert symbolic.evaluate(assignment) == det(numeric)


def test_det_rejects_ragged_input():
    with pytest.raises(ValueError):
        det([[1, 2], [3]])


# --- oracle agreement and properties ---------------------------------------


def test_engines_match_permutation_oracle():
    import random

    rng = random.Random(3)
    for n in (0, 2, 4, 6):
        for _ in range(3):
            m = rand_skew(rng, n)
            expected = pfaffian_perm_sum(m)
            form = MatrixForm(m)
            word = tuple(range(n))
            assert pf_matchings(form, word) == expected
            assert pf_recursive(form, word) == expected
            assert pf_elimination(m) == expected


dims = st.sampled_from([2, 4, 6])


@settings(max_examples=40, deadline=None)
@given(dims, st.randoms(use_true_random=False))
def test_engine_agreement(n, rng):
    m = rand_skew(rng, n)
    form = MatrixForm(m)
    word = list(range(n))
    rng.shuffle(word)
    word = tuple(word)
    a = pf_matchings(form, word)
    b = pf_recursive(form, word)
    c = pf_elimination(form_matrix(form, word))
    assert a == b == c


@settings(max_examples=30, deadline=None)
@given(dims, st.randoms(use_true_random=False), st.data())
def test_transposition_flips_sign(n, rng, data):
    form = MatrixForm(rand_skew(rng, n))
    word = list(range(n))
    i = data.draw(st.integers(0, n - 2))
    j = data.draw(st.integers(i + 1, n - 1))
    swapped = list(word)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert pf_recursive(form, swapped) == -pf_recursive(form, word)


def test_cyclic_rotation_of_four_flips_sign():
    form = MatrixForm(FIX4)
    assert pf_recursive(form, (1, 2, 3, 0)) == -pf_recursive(form, (0, 1, 2, 3))
    generic = GenericForm()
    assert pf_matchings(generic, (1, 2, 3, 0)) == -pf_matchings(generic, (0, 1, 2, 3))


def test_scaling_one_letter_scales_the_pfaffian():
    c = Fraction(7, 3)
    scaled = [row[:] for row in FIX4]
    for j in range(4):
        scaled[2][j] *= c
        scaled[j][2] *= c
    scaled[2][2] = Fraction(0)
    assert pf_recursive(MatrixForm(scaled), (0, 1, 2, 3)) == c * 8


def test_pfcache_shares_subwords():
    cache = PfCache(MatrixForm(FIX4))
    assert cache.pf((0, 1, 2, 3)) == 8
    assert cache.pf((1, 0, 2, 3)) == -8
    assert cache.pf((2, 3)) == 6
    assert cache.pf(()) == 1
    assert cache.pf((3, 3)) == 0


def test_form_matrix_restriction():
    form = MatrixForm(FIX4)
    assert form_matrix(form, (1, 3)) == [[0, 5], [-5, 0]]


def test_rings_declared():
    assert MatrixForm(FIX4).ring is RATIONAL
    assert GenericForm().ring is SYMBOLIC
