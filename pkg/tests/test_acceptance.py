"""Acceptance gate: twelve pinned criteria, one test per criterion.

Run with -v for one pass/fail line per criterion. Everything exact is
compared with zero tolerance; the unitary criteria use the stated
floating-point windows.
"""

import random
from fractions import Fraction

import pytest

import oracles
from tlfiber import (
    Field,
    Matrix,
    MultiplicityFunction,
    NCQuadratic,
    ParityObstruction,
    admissible,
    antipode_matrix,
    canonical_form,
    canonical_phi,
    cap,
    compose,
    conjugation_operator,
    cup,
    dimension_from_mu,
    dimension_of,
    enumerate_basis,
    enumerate_classes,
    equivalent_forms,
    evaluate,
    gamma_membership,
    generator_h,
    identity,
    invert,
    jordan_multiplicities,
    polar_decompose,
    present,
    relation_span,
    spectral_invariant,
    star_structure,
    theta,
    transport,
    unitarily_equivalent,
    verify_relations,
)
from tlfiber.diagrams import Letter, TLWord
from tlfiber.fiber import BilinearForm


def rows(entries):
    return Matrix.from_rows(entries, Field.RATIONAL)


def test_criterion_01_theta_exactness():
    assert theta(rows([[0, 1], [Fraction(-1, 3), 0]])) == Matrix.diagonal(
        [Fraction(-3), Fraction(-1, 3)]).embed(Field.RATIONAL)
    assert theta(rows([[1, 1], [-1, 0]])) == rows([[-1, 0], [2, -1]])


def test_criterion_02_loop_minus_two_dichotomy():
    generic = rows([[0, 1], [-1, 0]])
    singular = rows([[1, 1], [-1, 0]])
    assert dimension_of(BilinearForm(generic)) == -2
    assert dimension_of(BilinearForm(singular)) == -2
    assert not equivalent_forms(generic, singular)
    classes = enumerate_classes(Fraction(-2), 2, [Fraction(1), Fraction(-1)])
    assert sorted(c.entries for c in classes) == sorted([
        ((Fraction(-1), (2,)),),
        ((Fraction(-1), (0, 1)),),
    ])


def evaluated_relations_hold(b: BilinearForm) -> bool:
    d = dimension_of(b)
    t = lambda diag: evaluate(b, diag).matrix
    # snake identities on one and two strands
    for m in (1, 2):
        for j in range(1, m + 1):
            want = Matrix.identity(b.n ** m, b.field)
            if j >= 2:
                assert t(cap(m + 2, j - 1)) @ t(cup(m, j)) == want
            if j <= m:
                assert t(cap(m + 2, j + 1)) @ t(cup(m, j)) == want
            assert t(cap(m + 2, j)) @ t(cup(m, j)) == want.scale(d)
    # h_i^2 = d h_i and the braid absorption on three strands
    h1 = t(generator_h(2, 1))
    assert h1 @ h1 == h1.scale(d)
    g1, g2 = t(generator_h(3, 1)), t(generator_h(3, 2))
    assert g1 @ g1 == g1.scale(d)
    assert g1 @ g2 @ g1 == g1
    assert g2 @ g1 @ g2 == g2
    # far commutation on four strands, via sparse dict products
    f1, f3 = t(generator_h(4, 1)), t(generator_h(4, 3))
    assert oracles.sparse_mul(f1, f3) == oracles.sparse_mul(f3, f1)
    return True


def test_criterion_03_tl_relation_suite():
    assert [verify_relations(n) for n in range(2, 7)] == [2, 10, 26, 52, 90]
    rng = random.Random(20260814)
    for n in (2, 3):
        for _ in range(25):
            assert evaluated_relations_hold(oracles.random_form(rng, n))


def random_word(rng, source: int) -> TLWord:
    letters = []
    k = source
    for _ in range(rng.randrange(5)):
        if k >= 5 or (k >= 2 and rng.random() < 0.5):
            i = rng.randrange(1, k)
            letters.append(Letter("cap", i))
            k -= 2
        else:
            i = rng.randrange(1, k + 2)
            letters.append(Letter("cup", i))
            k += 2
    return TLWord(source, tuple(letters))


def test_criterion_04_functoriality():
    rng = random.Random(1123581321)
    from tlfiber import word_to_diagram
    for _ in range(100):
        b = oracles.random_form(rng, 2)
        f = random_word(rng, rng.randrange(1, 5))
        g = random_word(rng, f.target)
        whole = evaluate(b, compose(word_to_diagram(g), word_to_diagram(f)))
        parts = evaluate(b, g).matrix @ evaluate(b, f).matrix
        assert whole.matrix == parts


CANONICAL_MU_CASES = [
    # reciprocal pairs away from the fixed points
    {2: (1,), Fraction(1, 2): (1,)},
    {3: (1,), Fraction(1, 3): (1,)},
    {-2: (1,), Fraction(-1, 2): (1,)},
    {Fraction(5, 3): (1,), Fraction(3, 5): (1,)},
    {2: (0, 1), Fraction(1, 2): (0, 1)},
    {2: (2,), Fraction(1, 2): (2,)},
    {2: (1,), Fraction(1, 2): (1,), 3: (1,), Fraction(1, 3): (1,)},
    {3: (0, 1), Fraction(1, 3): (0, 1), 1: (1,)},
    # unpaired primitive blocks at the fixed points, size up to 4
    {1: (1,)},
    {1: (2,)},
    {1: (3,)},
    {1: (0, 0, 1)},
    {1: (1, 0, 1)},
    {1: (0, 0, 2)},
    {-1: (0, 1)},
    {-1: (0, 0, 0, 1)},
    {-1: (2,)},
    {-1: (2, 1)},
    {-1: (0, 2)},
    # mixed spectra
    {1: (1,), -1: (0, 1)},
    {2: (1,), Fraction(1, 2): (1,), 1: (1,)},
    {2: (1,), Fraction(1, 2): (1,), -1: (0, 1)},
    {1: (0, 0, 1), 2: (1,), Fraction(1, 2): (1,)},
    {-1: (0, 0, 0, 1), 1: (1,)},
    {2: (1,), Fraction(1, 2): (1,), 3: (1,), Fraction(1, 3): (1,), -1: (0, 1)},
]


def test_criterion_05_canonical_round_trip():
    assert len(CANONICAL_MU_CASES) >= 20
    for case in CANONICAL_MU_CASES:
        mu = MultiplicityFunction.of(
            {Fraction(z): sizes for z, sizes in case.items()})
        assert mu.total() <= 6
        assert admissible(mu)
        e = canonical_form(mu)
        assert jordan_multiplicities(theta(e)) == mu
        assert dimension_of(BilinearForm(e)) == dimension_from_mu(mu)


def test_criterion_06_theta_equivariance():
    rng = random.Random(6180339)
    for trial in range(50):
        n = rng.randrange(2, 5)
        e = oracles.random_invertible(rng, n)
        t = oracles.random_invertible(rng, n)
        lhs = theta(t.transpose() @ e @ t)
        assert lhs == invert(t) @ theta(e) @ t


UNITARY_LISTS = [
    (1.0, 1.0),
    (2.0, 0.5),
    (1.5, 2 / 3),
    (5.0, 0.2),
    (2.0, 0.5, 1.0, 1.0),
    (1.5, 2 / 3, 5.0, 0.2),
    (2.0, 0.5, 2.0, 0.5, 1.0, 1.0),
    (5.0, 0.2, 1.0, 1.0, 1.0, 1.0),
]


def test_criterion_07_unitary_invariants():
    for values in UNITARY_LISTS:
        for sign in (1, -1):
            d = sign * sum(h * h for h in values)
            phi = canonical_phi(values, sign)
            assert gamma_membership(phi, d, tol=1e-9)
            inv = spectral_invariant(phi, d)
            assert abs(sum(h * h for h in inv.values) - abs(d)) <= 1e-9
            u = conjugation_operator(phi, d)
            eye = Matrix.identity(phi.rows, u.field)
            assert (u @ u.conjugate() - eye.scale(d / abs(d))).max_abs() <= 1e-8
            p = polar_decompose(phi)[1]
            assert (p @ u - u @ invert(p.conjugate())).max_abs() <= 1e-8
    for sign_minus_odd in [(1.0, 1.0, 1.0), (2.0, 0.5, 1.0)]:
        with pytest.raises(ParityObstruction):
            canonical_phi(sign_minus_odd, -1)


def test_criterion_08_unitary_equivalence():
    a = rows([[0, Fraction(1, 2)], [2, 0]])
    b = rows([[0, 2], [Fraction(1, 2), 0]])
    d = Fraction(17, 4)
    assert unitarily_equivalent(a, b, d)
    one = canonical_phi((2.0, 0.5), 1)
    other = canonical_phi((3.0, 1 / 3), 1)
    assert not unitarily_equivalent(one, other, 4.25)
    assert not unitarily_equivalent(one, other, 3 * 3 + 1 / 9)
    assert spectral_invariant(one, 4.25) != spectral_invariant(
        other, 3 * 3 + 1 / 9)


A, B, C, D = (1, 1), (1, 2), (2, 1), (2, 2)


def generic_form(q) -> BilinearForm:
    return BilinearForm(rows([[0, 1], [Fraction(-1) / q, 0]]))


def quantum_sl2_relations(q) -> list:
    qi = Fraction(1) / Fraction(q)
    rels = [NCQuadratic.build(2, quadratic={pair: 1, (pair[1], pair[0]): -qi})
            for pair in [(A, B), (A, C), (B, D), (C, D)]]
    rels.append(NCQuadratic.build(2, quadratic={(B, C): 1, (C, B): -1}))
    rels.append(NCQuadratic.build(
        2, constant=-1, quadratic={(A, D): 1, (B, C): -qi}))
    rels.append(NCQuadratic.build(
        2, constant=-1, quadratic={(D, A): 1, (B, C): -Fraction(q)}))
    return rels


def test_criterion_09_quantum_sl2_span_and_antipode():
    for q in (2, 3, -5, Fraction(7, 2)):
        b = generic_form(q)
        assert present(b).span().equals(relation_span(quantum_sl2_relations(q)))
        s = antipode_matrix(b)
        want = Matrix.from_rows([
            [0, 0, 0, 1],
            [0, -Fraction(q), 0, 0],
            [0, 0, -Fraction(1) / q, 0],
            [1, 0, 0, 0],
        ], Field.RATIONAL)
        assert s == want  # S(a)=d, S(b)=-qb, S(c)=-c/q, S(d)=a


def singular_form(t) -> BilinearForm:
    return BilinearForm(rows([[Fraction(t), 1], [-1, 0]]))


def singular_orbit_relations(t) -> list:
    t = Fraction(t)
    return [
        NCQuadratic.build(2, constant=-t,
                          quadratic={(A, A): t, (B, A): -1, (A, B): 1}),
        NCQuadratic.build(2, constant=-t,
                          quadratic={(D, D): t, (B, D): -1, (D, B): 1}),
        NCQuadratic.build(2, constant=-1,
                          quadratic={(A, C): t, (B, C): -1, (A, D): 1}),
        NCQuadratic.build(2, constant=-1,
                          quadratic={(D, C): t, (B, C): -1, (D, A): 1}),
        NCQuadratic.build(2, constant=1,
                          quadratic={(C, A): t, (D, A): -1, (C, B): 1}),
        NCQuadratic.build(2, constant=1,
                          quadratic={(C, D): t, (A, D): -1, (C, B): 1}),
        NCQuadratic.build(2, quadratic={(C, C): t, (D, C): -1, (C, D): 1}),
        NCQuadratic.build(2, quadratic={(C, C): t, (A, C): -1, (C, A): 1}),
    ]


def test_criterion_10_singular_orbit_family():
    for t in (1, 2, Fraction(1, 3)):
        span = present(singular_form(t)).span()
        assert span.equals(relation_span(singular_orbit_relations(t)))
    assert equivalent_forms(singular_form(1).matrix, singular_form(2).matrix)


def test_criterion_11_star_structure():
    star = star_structure(2, -1)
    assert star.q == Fraction(1, 4)
    assert star.star_of(1, 1) == {(2, 2): Fraction(1)}
    assert star.star_of(1, 2) == {(2, 1): Fraction(-4)}
    w = star.coefficient_matrix()
    assert (w.conjugate() @ w) == Matrix.identity(4, w.field)


def test_criterion_12_catalan_counts():
    assert [len(enumerate_basis(n, n)) for n in range(1, 6)] == [
        1, 2, 5, 14, 42]
