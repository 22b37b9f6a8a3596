from fractions import Fraction
from itertools import combinations
from random import Random

import pytest

from g2kit.forms import (
    FORM,
    TENSOR,
    KForm,
    all_increasing_tuples,
    form_inner,
    form_norm_sq,
    hodge,
    interior,
    matrix_from_two_form,
    one_form,
    sort_with_sign,
    two_form_from_matrix,
    wedge,
)
from g2kit.linalg import DIM, Vec7
from g2kit.sampling import rand_fraction, rand_skew, rand_vec


def rand_form(rng: Random, degree: int) -> KForm:
    terms = {}
    for key in combinations(range(DIM), degree):
        if rng.random() < 0.5:
            terms[key] = rand_fraction(rng)
    return KForm(degree, terms)


def test_sort_with_sign():
    assert sort_with_sign((1, 2, 3)) == ((1, 2, 3), 1)
    assert sort_with_sign((2, 1, 3)) == ((1, 2, 3), -1)
    assert sort_with_sign((3, 1, 2)) == ((1, 2, 3), 1)
    assert sort_with_sign((1, 1, 2))[1] == 0


def test_only_increasing_keys_stored_and_signed_eval():
    a = KForm(2, {(3, 1): 5})
    assert a.terms() == (((1, 3), Fraction(-5)),)
    assert a.coeff((3, 1)) == 5
    assert a.coeff((1, 3)) == -5
    assert a.coeff((1, 1)) == 0


def test_degree_bounds():
    with pytest.raises(ValueError):
        KForm(8, {})
    with pytest.raises(ValueError):
        KForm(2, {(0, 9): 1})


def test_wedge_alternation_and_anticommutativity():
    e1 = KForm.monomial((1,))
    assert wedge(e1, e1).is_zero()
    rng = Random(0)
    for p, q in [(1, 1), (1, 2), (2, 3), (3, 3)]:
        a, b = rand_form(rng, p), rand_form(rng, q)
        sign = (-1) ** (p * q)
        assert wedge(a, b) == wedge(b, a).scale(sign)


def test_wedge_associative():
    rng = Random(1)
    a, b, c = rand_form(rng, 1), rand_form(rng, 2), rand_form(rng, 3)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_wedge_degree_overflow_rejected():
    a = KForm.monomial((0, 1, 2, 3))
    b = KForm.monomial((4, 5, 6))
    wedge(a, b)  # degree 7 is fine
    with pytest.raises(ValueError):
        wedge(a, KForm.monomial((3, 4, 5, 6)))


def test_hodge_unit_and_involution():
    one = KForm.constant(1)
    assert hodge(one) == KForm.volume()
    rng = Random(2)
    for k in range(DIM + 1):
        a = rand_form(rng, k)
        assert hodge(hodge(a)) == a
        assert hodge(hodge(a, -1), -1) == a
        assert hodge(a, -1) == -hodge(a)


def test_hodge_isometry_every_degree():
    rng = Random(3)
    for k in range(DIM + 1):
        a, b = rand_form(rng, k), rand_form(rng, k)
        assert form_inner(hodge(a), hodge(b)) == form_inner(a, b)


def test_hodge_defining_property():
    # a ^ hodge(b) = <a, b> vol for same-degree forms
    rng = Random(4)
    for k in range(DIM + 1):
        a, b = rand_form(rng, k), rand_form(rng, k)
        assert wedge(a, hodge(b)) == KForm.volume().scale(form_inner(a, b))


def test_interior_adjoint_to_wedge_with_one_form():
    # <x -| a, b> = <a, x-flat ^ b>
    rng = Random(5)
    for k in range(1, DIM + 1):
        x = rand_vec(rng)
        a = rand_form(rng, k)
        b = rand_form(rng, k - 1)
        assert form_inner(interior(x, a), b) == form_inner(a, wedge(one_form(x), b))


def test_interior_on_zero_form_rejected():
    with pytest.raises(ValueError):
        interior(Vec7.basis(0), KForm.constant(1))


def test_tensor_convention_is_factorial_multiple():
    rng = Random(6)
    for k in range(DIM + 1):
        a = rand_form(rng, k)
        fact = 1
        for i in range(1, k + 1):
            fact *= i
        assert form_norm_sq(a, TENSOR) == fact * form_norm_sq(a, FORM)


def test_two_form_matrix_bridge():
    rng = Random(7)
    s = rand_skew(rng)
    assert matrix_from_two_form(two_form_from_matrix(s)) == s
    a = two_form_from_matrix(s)
    for i in range(DIM):
        for j in range(DIM):
            assert a.coeff((i, j)) == s.entries[i][j]


def test_all_increasing_tuples_counts():
    assert len(all_increasing_tuples(3)) == 35
    assert len(all_increasing_tuples(4)) == 35
    assert len(all_increasing_tuples(7)) == 1
