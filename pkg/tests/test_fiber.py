"""Diagram evaluation against the entrywise pairing oracle, plus the
orbit action and its stabilizer test."""

import random
from fractions import Fraction

import pytest

import oracles
from tlfiber import (
    BilinearForm,
    Field,
    Matrix,
    ShapeMismatch,
    SingularMatrix,
    TensorMap,
    cap,
    compose,
    cup,
    diagram_to_word,
    dimension_of,
    enumerate_basis,
    evaluate,
    generator_h,
    identity,
    invert,
    stabilizes,
    transport,
)


rng = random.Random(271828)


def test_form_demands_square_invertible():
    with pytest.raises(ShapeMismatch):
        BilinearForm(Matrix.zeros(2, 3))
    with pytest.raises(SingularMatrix):
        BilinearForm(Matrix.from_rows([[1, 2], [2, 4]], Field.RATIONAL))


def test_copairing_inverts_the_form():
    b = oracles.random_form(rng, 3)
    assert b.copairing @ b.matrix == Matrix.identity(3)


def test_dimension_of_known_forms():
    # E_q has d = -q - 1/q
    for q in (Fraction(3), Fraction(1, 2), Fraction(-5)):
        b = BilinearForm(Matrix.from_rows([[0, 1], [-q, 0]], Field.RATIONAL))
        assert dimension_of(b) == -q - 1 / q
    eye = BilinearForm(Matrix.identity(3))
    assert dimension_of(eye) == 3


@pytest.mark.parametrize("n_dim", [2, 3])
def test_evaluate_matches_pairing_oracle(n_dim):
    b = oracles.random_form(rng, n_dim)
    shapes = [(1, 1), (2, 2), (0, 2), (2, 0), (1, 3), (3, 3)]
    for m, n in shapes:
        for d in enumerate_basis(m, n):
            t = evaluate(b, d)
            assert (t.in_legs, t.out_legs, t.n) == (m, n, n_dim)
            assert t.matrix == oracles.pairing_eval(b, d)


def test_evaluate_counts_loops_as_dimension_factors():
    b = oracles.random_form(rng, 2)
    d = dimension_of(b)
    loop = compose(cap(2, 1), cup(0, 1))  # empty diagram, one loop
    t = evaluate(b, loop)
    assert t.matrix == Matrix.from_rows([[d]], Field.RATIONAL)
    two = compose(loop, loop)
    assert evaluate(b, two).matrix == Matrix.from_rows([[d * d]], Field.RATIONAL)


def test_evaluate_words_agrees_with_diagrams():
    b = oracles.random_form(rng, 2)
    for m, n in ((2, 2), (3, 3), (1, 3)):
        for d in enumerate_basis(m, n):
            w = diagram_to_word(d)
            assert evaluate(b, w).matrix == evaluate(b, d).matrix


def test_evaluate_is_functorial_on_samples():
    b = oracles.random_form(rng, 2)
    f = generator_h(3, 1)
    g = compose(cap(3, 2), generator_h(3, 2))
    assert (evaluate(b, compose(g, f)).matrix
            == evaluate(b, g).matrix @ evaluate(b, f).matrix)


def test_tensor_map_shape_guard():
    with pytest.raises(ShapeMismatch):
        TensorMap(2, 2, 2, Matrix.zeros(4, 2))


def test_transport_is_congruence():
    b = oracles.random_form(rng, 3)
    t = oracles.random_invertible(rng, 3)
    moved = transport(b, t)
    assert moved.matrix == t.transpose() @ b.matrix @ t
    assert dimension_of(moved) == dimension_of(b)  # d is an orbit invariant


def test_transport_rejects_singular_movers():
    b = oracles.random_form(rng, 2)
    with pytest.raises(SingularMatrix):
        transport(b, Matrix.from_rows([[1, 1], [1, 1]], Field.RATIONAL))


def test_stabilizes_symplectic_case():
    # for 2 x 2, t^T J t = det(t) J, so the stabilizer of J is SL_2
    j = BilinearForm(Matrix.from_rows([[0, 1], [-1, 0]], Field.RATIONAL))
    t = Matrix.from_rows([[2, 3], [1, 2]], Field.RATIONAL)  # det 1
    s = Matrix.from_rows([[2, 3], [1, 1]], Field.RATIONAL)  # det -1
    assert stabilizes(j, t)
    assert not stabilizes(j, s)
