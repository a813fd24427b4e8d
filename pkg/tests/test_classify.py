"""Conjugation invariant, admissibility, canonical representatives,
class enumeration."""

import random
from fractions import Fraction

import pytest

import oracles
from tlfiber import (
    Field,
    InadmissibleMultiplicity,
    InvalidList,
    IrrationalSpectrum,
    Matrix,
    MultiplicityFunction,
    QQi,
    admissible,
    canonical_form,
    dimension_from_mu,
    dimension_of,
    enumerate_classes,
    equivalent_forms,
    invert,
    jordan_multiplicities,
    theta,
)
from tlfiber.fiber import BilinearForm


rng = random.Random(161803)


def form(rows):
    return Matrix.from_rows(rows, Field.RATIONAL)


def test_theta_diagonalizable_example():
    assert theta(form([[0, 1], [Fraction(-1, 3), 0]])) == Matrix.diagonal(
        [Fraction(-3), Fraction(-1, 3)]).embed(Field.RATIONAL)


def test_theta_defective_example():
    assert theta(form([[1, 1], [-1, 0]])) == form([[-1, 0], [2, -1]])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_theta_equivariance(n):
    e = oracles.random_invertible(rng, n)
    t = oracles.random_invertible(rng, n)
    moved = t.transpose() @ e @ t
    assert theta(moved) == invert(t) @ theta(e) @ t


def test_equivalent_forms_on_an_orbit():
    # random forms rarely keep a rational theta spectrum, so start from a
    # constructed representative and move it
    mu = MultiplicityFunction.of({Fraction(3): (1,), Fraction(1, 3): (1,),
                                  Fraction(1): (1,)})
    e = canonical_form(mu)
    t = oracles.random_invertible(rng, e.rows)
    assert equivalent_forms(e, t.transpose() @ e @ t)
    assert equivalent_forms(e.embed(Field.COMPLEX),
                            (t.transpose() @ e @ t).embed(Field.COMPLEX))


def test_equivalent_forms_separates_classes():
    # both have d = -2 and a single eigenvalue -1, but different block data
    e1 = form([[0, 1], [-1, 0]])
    e2 = form([[1, 1], [-1, 0]])
    assert not equivalent_forms(e1, e2)


def test_exact_irrational_spectrum_refuses():
    e = form([[1, 1], [-1, 1]])  # theta is a rotation, eigenvalues +-i
    with pytest.raises(IrrationalSpectrum):
        jordan_multiplicities(theta(e))
    # the same data embeds and clusters numerically
    assert equivalent_forms(e.embed(Field.COMPLEX), e.embed(Field.COMPLEX))


@pytest.mark.parametrize("items,ok", [
    ({Fraction(2): (1,), Fraction(1, 2): (1,)}, True),
    ({Fraction(2): (1,)}, False),                       # inverse missing
    ({Fraction(2): (1,), Fraction(1, 2): (2,)}, False),  # inverse mismatch
    ({Fraction(1): (1,)}, True),                        # odd size at +1 is free
    ({Fraction(1): (0, 1)}, False),                     # lone even block at +1
    ({Fraction(1): (0, 2)}, True),
    ({Fraction(1): (1, 1)}, False),
    ({Fraction(-1): (1,)}, False),                      # lone odd block at -1
    ({Fraction(-1): (2,)}, True),
    ({Fraction(-1): (0, 1)}, True),                     # even block at -1 is free
    ({QQi(0, 1): (1,), QQi(0, -1): (1,)}, True),        # i pairs with -i
])
def test_admissible_table(items, ok):
    assert admissible(MultiplicityFunction.of(items)) is ok


def test_admissible_near_unit_window():
    close = complex(1 + 5e-9)
    assert admissible(MultiplicityFunction.of({close: (1,)}))
    assert not admissible(MultiplicityFunction.of({complex(-1 - 5e-9): (1,)}))
    # far enough from 1 it needs its inverse again
    assert not admissible(MultiplicityFunction.of({complex(1 + 1e-3): (1,)}))


def test_dimension_from_mu():
    mu = MultiplicityFunction.of({Fraction(2): (1,), Fraction(1, 2): (1,)})
    assert dimension_from_mu(mu) == Fraction(5, 2)
    assert dimension_from_mu(MultiplicityFunction.of({Fraction(-1): (2,)})) == -2
    assert dimension_from_mu(
        MultiplicityFunction.of({QQi(0, 1): (1,), QQi(0, -1): (1,)})) == QQi(0)


def test_canonical_form_pair_gadget():
    mu = MultiplicityFunction.of({Fraction(2): (1,), Fraction(1, 2): (1,)})
    e = canonical_form(mu)
    assert e == form([[0, 1], [Fraction(1, 2), 0]])
    assert theta(e) == Matrix.diagonal([Fraction(2), Fraction(1, 2)]).embed(
        Field.RATIONAL)


def test_canonical_form_gamma_primitives():
    # lone odd-count blocks at +-1 fall to the alternating primitives
    assert canonical_form(MultiplicityFunction.of({Fraction(1): (1,)})) == form([[1]])
    e2 = canonical_form(MultiplicityFunction.of({Fraction(-1): (0, 1)}))
    assert e2 == form([[1, 1], [-1, 0]])
    e3 = canonical_form(MultiplicityFunction.of({Fraction(1): (0, 0, 1)}))
    assert jordan_multiplicities(theta(e3)) == MultiplicityFunction.of(
        {Fraction(1): (0, 0, 1)})


@pytest.mark.parametrize("items", [
    {Fraction(3): (1, 1), Fraction(1, 3): (1, 1)},
    {Fraction(-1): (2, 1, 2)},
    {Fraction(1): (1, 2)},
    {Fraction(2): (0, 1), Fraction(1, 2): (0, 1), Fraction(-1): (2,)},
    {QQi(0, 1): (2,), QQi(0, -1): (2,)},
])
def test_canonical_round_trip(items):
    mu = MultiplicityFunction.of(items)
    e = canonical_form(mu)
    assert jordan_multiplicities(theta(e)) == mu
    assert dimension_of(BilinearForm(e)) == dimension_from_mu(mu)


def test_canonical_form_rejects_inadmissible():
    with pytest.raises(InadmissibleMultiplicity):
        canonical_form(MultiplicityFunction.of({Fraction(2): (1,)}))


def test_canonical_form_empty():
    e = canonical_form(MultiplicityFunction.of({}))
    assert e.shape == (0, 0)


def test_enumerate_classes_dichotomy_at_minus_two():
    classes = enumerate_classes(Fraction(-2), 2, [Fraction(1), Fraction(-1)])
    assert classes == [
        MultiplicityFunction.of({Fraction(-1): (0, 1)}),
        MultiplicityFunction.of({Fraction(-1): (2,)}),
    ]


def test_enumerate_classes_with_a_pair_orbit():
    classes = enumerate_classes(Fraction(5, 2), 2,
                                [Fraction(2), Fraction(1, 2), Fraction(1)])
    assert classes == [
        MultiplicityFunction.of({Fraction(1, 2): (1,), Fraction(2): (1,)})]
    # every enumerated class is admissible and hits the loop value
    for mu in enumerate_classes(Fraction(2), 4, [Fraction(1), Fraction(-1),
                                                 Fraction(3), Fraction(1, 3)]):
        assert admissible(mu)
        assert dimension_from_mu(mu) == 2
        assert mu.total() == 4


def test_enumerate_classes_domain_guards():
    with pytest.raises(InvalidList):
        enumerate_classes(Fraction(0), 2, [Fraction(0)])
    with pytest.raises(InvalidList):
        enumerate_classes(Fraction(2), 2, [Fraction(2)])
