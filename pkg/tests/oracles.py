"""Slow reference implementations the tests trust over the library.

Everything recomputes its quantity by the most literal method on offer:
permutation sums for determinants, recursive matching enumeration,
entrywise pairing products for diagram evaluation, Gram-Schmidt for
random unitaries. Nothing here calls the fast path it is used to check;
the Matrix container and BilinearForm wrapper are the only shared code.
"""

from fractions import Fraction
from itertools import permutations, product

from tlfiber import BilinearForm, Field, Matrix, MultiplicityFunction, block_diag
from tlfiber import scalars


def naive_matmul(a: Matrix, b: Matrix) -> Matrix:
    # plain triple loop, no zero skipping, no buffer tricks
    assert a.cols == b.rows and a.field is b.field
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = scalars.zero(a.field)
            for t in range(a.cols):
                acc = acc + a.at(i, t) * b.at(t, j)
            out.append(acc)
    return Matrix(a.rows, b.cols, tuple(out), a.field)


def sparse_mul(a: Matrix, b: Matrix) -> dict:
    """Exact product as a {(i, j): value} dict, zeros omitted."""
    assert a.cols == b.rows and a.field is b.field
    bc = {}
    for t in range(b.rows):
        for j in range(b.cols):
            y = b.at(t, j)
            if not scalars.is_zero(y):
                bc.setdefault(t, []).append((j, y))
    out = {}
    for i in range(a.rows):
        for t, row in bc.items():
            x = a.at(i, t)
            if scalars.is_zero(x):
                continue
            for j, y in row:
                out[i, j] = out.get((i, j), scalars.zero(a.field)) + x * y
    return {k: v for k, v in out.items() if not scalars.is_zero(v)}


def as_sparse(m: Matrix) -> dict:
    return {(i, j): m.at(i, j) for i in range(m.rows) for j in range(m.cols)
            if not scalars.is_zero(m.at(i, j))}


def perm_determinant(m: Matrix):
    # Leibniz sum; fine up to 5 x 5
    n = m.rows
    assert n == m.cols
    total = scalars.zero(m.field)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = scalars.one(m.field)
        for i in range(n):
            term = term * m.at(i, perm[i])
        total = total + (term if sign > 0 else -term)
    return total


def minor_rank(m: Matrix) -> int:
    """Largest k with a nonvanishing k x k minor; exact fields only."""
    from itertools import combinations

    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = Matrix(k, k, tuple(m.at(i, j) for i in rows for j in cols),
                             m.field)
                if not scalars.is_zero(perm_determinant(sub)):
                    best = k
                    break
            if best == k:
                break
        if best < k:
            return best
    return best


def brute_matchings(k: int) -> list:
    """All noncrossing perfect matchings of positions 0..k-1 on a line."""
    if k % 2:
        return []

    def rec(points):
        if not points:
            return [[]]
        first, rest = points[0], points[1:]
        out = []
        # the partner splits the rest into two even halves
        for idx in range(0, len(rest), 2):
            inner, outer = rest[:idx], rest[idx + 1:]
            for a in rec(inner):
                for c in rec(outer):
                    out.append([(first, rest[idx])] + a + c)
        return out

    return [frozenset(pairs) for pairs in rec(list(range(k)))]


def boundary_walk(source: int, target: int) -> list:
    """Boundary points in disk order: bottom left to right, top right to left."""
    return list(range(1, source + 1)) + list(
        range(source + target, source, -1))


def pairing_eval(b: BilinearForm, diag) -> Matrix:
    """Evaluate a diagram entry by entry as a product over its pairs.

    Entry ((j_1..j_t), (i_1..i_s)) is d^loops times the product over
    pairs: E[i_a, i_b] when both legs sit on the bottom, (E^-1)[j_a, j_b]
    when both sit on the top (left leg first in both), and a Kronecker
    delta across a through strand.
    """
    n = b.matrix.rows
    e, dinv = b.matrix, b.copairing
    from tlfiber import dimension_of

    d = dimension_of(b)
    s, t = diag.source, diag.target
    zero, one = scalars.zero(e.field), scalars.one(e.field)
    loop = one
    for _ in range(diag.loops):
        loop = loop * d
    out = []
    for jvec in product(range(n), repeat=t):
        for ivec in product(range(n), repeat=s):
            val = loop
            for a, c in diag.pairs:
                if c <= s:
                    val = val * e.at(ivec[a - 1], ivec[c - 1])
                elif a > s:
                    val = val * dinv.at(jvec[a - s - 1], jvec[c - s - 1])
                elif ivec[a - 1] != jvec[c - s - 1]:
                    val = zero
                if scalars.is_zero(val):
                    break
            out.append(val)
    return Matrix(n ** t, n ** s, tuple(out), e.field)


def random_exact(rng, rows: int, cols: int, span: int = 4, den: int = 3) -> Matrix:
    data = [Fraction(rng.randint(-span, span), rng.randint(1, den))
            for _ in range(rows * cols)]
    return Matrix(rows, cols, tuple(data), Field.RATIONAL)


def random_invertible(rng, n: int, span: int = 4, den: int = 3) -> Matrix:
    while True:
        m = random_exact(rng, n, n, span, den)
        if not scalars.is_zero(perm_determinant(m)):
            return m


def random_form(rng, n: int, span: int = 4, den: int = 3) -> BilinearForm:
    return BilinearForm(random_invertible(rng, n, span, den))


def random_complex(rng, rows: int, cols: int) -> Matrix:
    data = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            for _ in range(rows * cols)]
    return Matrix(rows, cols, tuple(data), Field.COMPLEX)


def random_unitary(rng, n: int) -> Matrix:
    """Gram-Schmidt on a random complex square matrix."""
    while True:
        cols = [[complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                 for _ in range(n)] for _ in range(n)]
        basis = []
        ok = True
        for v in cols:
            for u in basis:
                c = sum(x.conjugate() * y for x, y in zip(u, v))
                v = [y - c * x for x, y in zip(u, v)]
            norm = sum(abs(x) ** 2 for x in v) ** 0.5
            if norm < 1e-6:
                ok = False
                break
            basis.append([x / norm for x in v])
        if ok:
            return Matrix(n, n, tuple(basis[j][i] for i in range(n)
                                      for j in range(n)), Field.COMPLEX)


def jordan_sample(rng, mu: MultiplicityFunction, field: Field = Field.RATIONAL):
    """A matrix with the prescribed Jordan data, hidden by a similarity."""
    blocks = []
    for z, sizes in mu.entries:
        for k, count in enumerate(sizes, start=1):
            for _ in range(count):
                data = [scalars.zero(field)] * (k * k)
                for i in range(k):
                    data[i * k + i] = scalars.embed(z, field)
                    if i + 1 < k:
                        data[i * k + i + 1] = scalars.one(field)
                blocks.append(Matrix(k, k, tuple(data), field))
    j = block_diag(*blocks)
    from tlfiber import invert

    t = random_invertible(rng, j.rows).embed(field)
    return invert(t) @ j @ t
