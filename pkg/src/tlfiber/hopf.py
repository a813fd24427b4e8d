"""Quadratic Hopf presentations attached to a bilinear form.

An invertible N x N form E equips the free algebra on the N^2 generator
symbols a[i,j] with two families of quadratic relations saying that the
generator matrix preserves the pairing E and the copairing D = E^{-1}:

    sum_{k,l} E[k,l] a[i,k] a[j,l] = E[i,j] 1      one per (i,j)
    sum_{i,j} D[i,j] a[i,k] a[j,l] = D[k,l] 1      one per (k,l)

or in matrix shorthand a E ^t a = E and ^t a D a = D. The quotient is a
Hopf algebra: matrix coproduct Delta(a[i,j]) = sum_k a[i,k] (x) a[k,j],
counit eps(a[i,j]) = delta[i,j], and on generators the antipode

    S(a) = E ^t a E^{-1}.

The closed form is forced by the antipode axiom: S(a) a = E (^t a D a) =
E D = 1 spends exactly the copairing family and a S(a) = (a E ^t a) D =
E D = 1 exactly the pairing family, so S is a two-sided convolution
inverse of the identity map, and convolution inverses are unique.
Iterating it gives S^2 = Ad(E ^t E^{-1}), conjugation by the transpose of
the invariant theta(E) = E^{-1} ^t E; S^2 is the identity on generators
precisely when theta(E) is scalar.

Relations are compared through their linear span inside the degree <= 2
slice of the free algebra (dimension 1 + N^2 + N^4). Span equality
separates every presentation exhibited here and avoids noncommutative
normal forms, which degree-2 data cannot pin down anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .errors import (
    IndexOutOfRange,
    InvalidParameter,
    MathError,
    ShapeMismatch,
)
from .fiber import BilinearForm
from .matrices import DEFAULT_TOL, Matrix, Tolerance, _infer_field, invert
from .scalars import Field, QQi

_WIDENING = (Field.RATIONAL, Field.CRATIONAL, Field.COMPLEX)


def _join_fields(fields) -> Field:
    return _WIDENING[max(_WIDENING.index(f) for f in fields)]


def _check_pair(n: int, key):
    i, j = key
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange("generator a[%s,%s] outside 1..%d" % (i, j, n))
    return (int(i), int(j))


def _slot(n: int, i: int, j: int) -> int:
    # row-major position of generator a[i,j], 1-based indices
    return (i - 1) * n + (j - 1)


@dataclass(frozen=True)
class NCQuadratic:
    """A degree <= 2 element of the free algebra on the a[i,j].

    linear maps (i,j) to the coefficient of a[i,j]; quadratic maps the
    ordered pair ((i,j),(k,l)) to the coefficient of the word
    a[i,j] a[k,l]. Both are stored as sorted tuples with zero
    coefficients dropped, so equal elements compare and hash equal.
    """

    n: int
    constant: object
    linear: tuple
    quadratic: tuple
    field: Field

    @classmethod
    def build(cls, n: int, constant=0, linear=None, quadratic=None,
              field: Field | None = None) -> "NCQuadratic":
        lin_in = dict(linear or {})
        quad_in = dict(quadratic or {})
        coeffs = [constant, *lin_in.values(), *quad_in.values()]
        if field is None:
            field = _infer_field(coeffs)
            fix = lambda c: scalars.coerce(c, field)
        else:
            fix = lambda c: scalars.embed(c, field)
        lin = []
        for key, c in lin_in.items():
            key = _check_pair(n, key)
            c = fix(c)
            if not scalars.is_zero(c):
                lin.append((key, c))
        quad = []
        for (left, right), c in quad_in.items():
            key = (_check_pair(n, left), _check_pair(n, right))
            c = fix(c)
            if not scalars.is_zero(c):
                quad.append((key, c))
        return cls(n, fix(constant), tuple(sorted(lin)), tuple(sorted(quad)),
                   field)

    def embed(self, field: Field) -> "NCQuadratic":
        if field is self.field:
            return self
        return NCQuadratic(
            self.n, scalars.embed(self.constant, field),
            tuple((k, scalars.embed(c, field)) for k, c in self.linear),
            tuple((k, scalars.embed(c, field)) for k, c in self.quadratic),
            field)

    def vector(self, field: Field | None = None) -> tuple:
        """Coordinates in the degree <= 2 slice.

        Order: constant, then a[i,j] row-major, then words
        a[i,j] a[k,l] by row-major pair (left word index major).
        """
        field = field or self.field
        n = self.n
        out = [scalars.zero(field)] * (1 + n * n + n ** 4)
        out[0] = scalars.embed(self.constant, field)
        for (i, j), c in self.linear:
            out[1 + _slot(n, i, j)] = scalars.embed(c, field)
        base = 1 + n * n
        for ((i, j), (k, l)), c in self.quadratic:
            out[base + _slot(n, i, j) * n * n + _slot(n, k, l)] = (
                scalars.embed(c, field))
        return tuple(out)

    def __str__(self):
        parts = []
        if not scalars.is_zero(self.constant):
            parts.append(scalars.format_scalar(self.constant))
        for (i, j), c in self.linear:
            parts.append("%s*a[%d,%d]" % (scalars.format_scalar(c), i, j))
        for ((i, j), (k, l)), c in self.quadratic:
            parts.append("%s*a[%d,%d]a[%d,%d]"
                         % (scalars.format_scalar(c), i, j, k, l))
        return " + ".join(parts) if parts else "0"


def _negligible(x, threshold) -> bool:
    if threshold is None:
        return scalars.is_zero(x)
    return abs(scalars.to_complex(x)) <= threshold


def _pivot_of(v, threshold):
    if threshold is None:
        for p, x in enumerate(v):
            if not scalars.is_zero(x):
                return p
        return None
    best, best_mag = None, threshold
    for p, x in enumerate(v):
        mag = abs(scalars.to_complex(x))
        if mag > best_mag:
            best, best_mag = p, mag
    return best


def _eliminate(v, basis, pivots, threshold):
    v = list(v)
    for row, p in zip(basis, pivots):
        c = v[p]
        if not _negligible(c, threshold):
            v = [a - c * b for a, b in zip(v, row)]
            v[p] = v[p] * 0  # force the pivot slot to an exact zero
    return v


@dataclass(frozen=True)
class RelationSpan:
    """Echelon basis for the span of a set of degree <= 2 elements.

    Over the exact fields the reduction is exact Gauss-Jordan with
    leftmost pivots, so equal spans produce identical bases; over the
    approximate field pivots are chosen by magnitude against
    rank_threshold * scale and comparisons are tolerance-aware.
    """

    n: int
    field: Field
    basis: tuple
    pivots: tuple
    threshold: float | None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _residual(self, rel: "NCQuadratic"):
        if rel.n != self.n:
            raise ShapeMismatch("element on %d generators against a span on %d"
                                % (rel.n ** 2, self.n ** 2))
        field = _join_fields([self.field, rel.field])
        basis = self.basis
        threshold = self.threshold
        if field is not self.field:
            basis = tuple(tuple(scalars.embed(x, field) for x in row)
                          for row in basis)
            if threshold is None and field is Field.COMPLEX:
                threshold = DEFAULT_TOL.rank_threshold
        return _eliminate(rel.vector(field), basis, self.pivots, threshold)

    def contains(self, rel: "NCQuadratic") -> bool:
        v = self._residual(rel)
        if (self.threshold is None
                and _join_fields([self.field, rel.field]) is not Field.COMPLEX):
            return all(scalars.is_zero(x) for x in v)
        scale = max(1.0, max((abs(scalars.to_complex(x))
                              for x in rel.vector(Field.COMPLEX)), default=0.0))
        cut = (self.threshold or DEFAULT_TOL.rank_threshold) * scale
        return all(abs(scalars.to_complex(x)) <= cut for x in v)

    def equals(self, other: "RelationSpan") -> bool:
        if self.n != other.n or self.dimension != other.dimension:
            return False
        mine = [_as_element(self.n, row, self.field) for row in self.basis]
        theirs = [_as_element(other.n, row, other.field) for row in other.basis]
        return (all(self.contains(r) for r in theirs)
                and all(other.contains(r) for r in mine))


def _as_element(n: int, vec, field: Field) -> NCQuadratic:
    lin = {}
    quad = {}
    base = 1 + n * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lin[(i, j)] = vec[1 + _slot(n, i, j)]
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    quad[((i, j), (k, l))] = (
                        vec[base + _slot(n, i, j) * n * n + _slot(n, k, l)])
    return NCQuadratic.build(n, constant=vec[0], linear=lin, quadratic=quad,
                             field=field)


def relation_span(rels, tol: Tolerance = DEFAULT_TOL) -> RelationSpan:
    rels = list(rels)
    if not rels:
        raise ShapeMismatch("an empty relation list fixes no generator count")
    n = rels[0].n
    if any(r.n != n for r in rels):
        raise ShapeMismatch("relations on different generator counts")
    field = _join_fields([r.field for r in rels])
    vectors = [r.vector(field) for r in rels]
    threshold = None
    if field is Field.COMPLEX:
        scale = max(1.0, max((abs(x) for v in vectors for x in v), default=0.0))
        threshold = tol.rank_threshold * scale
    basis: list = []
    pivots: list = []
    for vec in vectors:
        v = _eliminate(vec, basis, pivots, threshold)
        p = _pivot_of(v, threshold)
        if p is None:
            continue
        inv = scalars.one(field) / v[p]
        v = [inv * x for x in v]
        for idx, row in enumerate(basis):
            c = row[p]
            if not _negligible(c, threshold):
                basis[idx] = [a - c * b for a, b in zip(row, v)]
        basis.append(v)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda t: pivots[t])
    return RelationSpan(n, field,
                        tuple(tuple(basis[t]) for t in order),
                        tuple(pivots[t] for t in order), threshold)


def antipode_matrix(b: BilinearForm) -> Matrix:
    """The antipode on the generator span, S(a) = E ^t a E^{-1} entrywise.

    Row (i,j) lists the coefficients of S(a[i,j]): the coefficient of
    a[u,v] is E[i,v] D[u,j], rows and columns in row-major generator
    order. Invertible whenever E is (it is a Kronecker shuffle of E with
    E^{-1}), which BilinearForm already guarantees.
    """
    e, d = b.matrix, b.copairing
    n = b.n
    data = []
    for i in range(n):
        for j in range(n):
            for u in range(n):
                for v in range(n):
                    data.append(e.at(i, v) * d.at(u, j))
    return Matrix(n * n, n * n, tuple(data), b.field)


def conjugation_matrix(m: Matrix) -> Matrix:
    """Coefficient matrix of the substitution a -> m a m^{-1}.

    Row (i,j) lists the image of a[i,j]; the coefficient of a[u,v] is
    m[i,u] (m^{-1})[v,j]. antipode_matrix(b) squared equals
    conjugation_matrix(^t theta(b.matrix)).
    """
    minv = invert(m)
    n = m.rows
    data = []
    for i in range(n):
        for j in range(n):
            for u in range(n):
                for v in range(n):
                    data.append(m.at(i, u) * minv.at(v, j))
    return Matrix(n * n, n * n, tuple(data), m.field)


@dataclass(frozen=True)
class StarStructure:
    """Conjugate-linear involution star(a) = T a T^{-1} on generators.

    Coefficients are conjugated along the way because star is
    antilinear; the coefficient of a[u,v] in star(a[i,j]) is
    conj(T[i,u] (T^{-1})[v,j]). T conj(T) = sign 1 makes the map an
    involution; q = -sign h^{-2} names the presentation it acts on.
    """

    t: Matrix
    q: object
    sign: int

    @property
    def n(self) -> int:
        return self.t.rows

    def coefficient_matrix(self) -> Matrix:
        return conjugation_matrix(self.t).conjugate()

    def star_of(self, i: int, j: int) -> dict:
        """star(a[i,j]) as a map (u,v) -> coefficient."""
        n = self.n
        _check_pair(n, (i, j))
        w = self.coefficient_matrix()
        row = _slot(n, i, j)
        out = {}
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                c = w.at(row, _slot(n, u, v))
                if not scalars.is_zero(c):
                    out[(u, v)] = c
        return out


def star_structure(h, sign: int) -> StarStructure:
    """The involution with frame change T = [[0, h], [sign/h, 0]].

    h >= 1 orders each eigenvalue pair {h, 1/h}; sign is the sign of the
    loop value d = sign (h^2 + h^{-2}). The star lives on the
    presentation of E_q with q = -sign h^{-2}.
    """
    if sign not in (1, -1):
        raise InvalidParameter("sign must be +1 or -1, got %r" % (sign,))
    if isinstance(h, QQi):
        if h.im != 0:
            raise InvalidParameter("h must be a positive real, got %s" % h)
        h = h.re
    if isinstance(h, complex):
        if h.imag != 0:
            raise InvalidParameter("h must be a positive real, got %r" % (h,))
        h = h.real
    if isinstance(h, bool) or not isinstance(h, (int, Fraction, float)):
        raise InvalidParameter("h must be a positive real, got %r" % (h,))
    if h < 1:
        raise InvalidParameter("h = %s is below 1; pass the larger member "
                               "of the pair {h, 1/h}" % h)
    if isinstance(h, float):
        field = Field.COMPLEX
        q = complex(-sign / (h * h))
    else:
        field = Field.RATIONAL
        h = Fraction(h)
        q = Fraction(-sign) / (h * h)
    z = scalars.zero(field)
    t = Matrix(2, 2, (z, scalars.embed(h, field),
                      scalars.embed(Fraction(sign) / Fraction(h) if field
                                    is Field.RATIONAL else sign / h, field), z),
               field)
    star = StarStructure(t, q, sign)
    w = star.coefficient_matrix()
    eye = Matrix.identity(2, field)
    square = t @ t.conjugate() - eye.scale(sign)
    twice = w.conjugate() @ w - Matrix.identity(4, field)
    if field is Field.RATIONAL:
        broken = any(x != 0 for x in square.data + twice.data)
    else:
        broken = max(square.max_abs(), twice.max_abs()) > 1e-12
    if broken:
        raise MathError("star frame failed the involution identities")
    return star


@dataclass(frozen=True)
class HopfPresentation:
    """Generators a[i,j] with the 2 n^2 defining relations of a form.

    relations lists the pairing family (row-major (i,j)) then the
    copairing family (row-major (k,l)); antipode is the matrix of S on
    the generator span; star, when present, is the compact real form's
    involution. The coproduct and counit are the same for every form and
    live in coproduct_terms / counit_value.
    """

    n: int
    relations: tuple
    antipode: Matrix
    star: StarStructure | None = None

    def span(self, tol: Tolerance = DEFAULT_TOL) -> RelationSpan:
        return relation_span(self.relations, tol)


def present(b: BilinearForm, star: StarStructure | None = None) -> HopfPresentation:
    """Emit the quadratic presentation attached to the form b.

    For every (i,j) the pairing relation
    sum_{k,l} E[k,l] a[i,k] a[j,l] - E[i,j] 1 and for every (k,l) the
    copairing relation sum_{i,j} D[i,j] a[i,k] a[j,l] - D[k,l] 1, with
    D = E^{-1}; then the antipode matrix. 2 n^2 relations in all.
    """
    e, d = b.matrix, b.copairing
    n = b.n
    rels = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            quad = {}
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    c = e.at(k - 1, l - 1)
                    if not scalars.is_zero(c):
                        quad[((i, k), (j, l))] = c
            rels.append(NCQuadratic.build(
                n, constant=-e.at(i - 1, j - 1), quadratic=quad, field=b.field))
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            quad = {}
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    c = d.at(i - 1, j - 1)
                    if not scalars.is_zero(c):
                        quad[((i, k), (j, l))] = c
            rels.append(NCQuadratic.build(
                n, constant=-d.at(k - 1, l - 1), quadratic=quad, field=b.field))
    if star is not None and star.n != n:
        raise ShapeMismatch("star frame is %d x %d but the form is %d x %d"
                            % (star.n, star.n, n, n))
    return HopfPresentation(n, tuple(rels), antipode_matrix(b), star)


def substitute(rel: NCQuadratic, s: Matrix) -> NCQuadratic:
    """The image of rel under the substitution a -> s^{-1} a s.

    Extended multiplicatively to words. Transporting a form E to
    ^t T E T carries each defining relation family into the family of
    the transported form under s = ^t T.
    """
    n = rel.n
    if s.rows != s.cols or s.rows != n:
        raise ShapeMismatch("substitution matrix %s on %d generators"
                            % (s.shape, n * n))
    field = _join_fields([rel.field, s.field])
    s = s.embed(field)
    sinv = invert(s)

    def image(i, j):
        out = {}
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                c = sinv.at(i - 1, u - 1) * s.at(v - 1, j - 1)
                if not scalars.is_zero(c):
                    out[(u, v)] = c
        return out

    lin: dict = {}
    for (i, j), c in rel.linear:
        for key, w in image(i, j).items():
            lin[key] = lin.get(key, scalars.zero(field)) + c * w
    quad: dict = {}
    for ((i, j), (k, l)), c in rel.quadratic:
        left = image(i, j)
        right = image(k, l)
        for kl, wl in left.items():
            for kr, wr in right.items():
                key = (kl, kr)
                quad[key] = quad.get(key, scalars.zero(field)) + c * wl * wr
    return NCQuadratic.build(n, constant=rel.constant, linear=lin,
                             quadratic=quad, field=field)


def coproduct_terms(i: int, j: int, n: int) -> tuple:
    """Delta(a[i,j]) = sum_k a[i,k] (x) a[k,j], as index pairs."""
    _check_pair(n, (i, j))
    return tuple(((i, k), (k, j)) for k in range(1, n + 1))


def counit_value(i: int, j: int) -> int:
    """eps(a[i,j]) = delta[i,j]."""
    return 1 if i == j else 0
