"""Classification of bilinear forms by the conjugation invariant.

Two invertible forms parametrize isomorphic fiber functors exactly when
Theta(E) = E^{-1} tE and Theta(E') are conjugate matrices, so the Jordan
data of Theta is a complete invariant. This module computes Theta, decides
equivalence, characterizes the realizable multiplicity data, builds one
canonical representative per class, and enumerates the classes compatible
with a given loop value d over a finite eigenvalue domain.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import scalars
from .errors import InadmissibleMultiplicity, InvalidList, MathError
from .matrices import (DEFAULT_TOL, Matrix, Tolerance, block_diag, invert,
                       jordan_multiplicities)
from .multiplicity import MultiplicityFunction
from .scalars import Field

__all__ = [
    "MultiplicityFunction", "theta", "equivalent_forms", "admissible",
    "dimension_from_mu", "canonical_form", "enumerate_classes",
]

# eigenvalues this close to +-1 count as +-1 when the data is approximate
UNIT_RADIUS = 1e-8


def theta(e: Matrix, tol: Tolerance = DEFAULT_TOL) -> Matrix:
    """E^{-1} tE, equivariant under E -> tT E T via conjugation by T."""
    return invert(e, tol) @ e.transpose()


def equivalent_forms(e1: Matrix, e2: Matrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Same orbit test: equal Jordan data of the two conjugation invariants."""
    mu1 = jordan_multiplicities(theta(e1, tol), tol)
    mu2 = jordan_multiplicities(theta(e2, tol), tol)
    if e1.field is Field.COMPLEX or e2.field is Field.COMPLEX:
        return mu1.near_equal(mu2, tol.cluster_radius)
    return mu1 == mu2


def _is_unit(z, sign: int, radius: float) -> bool:
    if isinstance(z, complex):
        return scalars.near(z, sign, radius)
    return z == sign


def _inverse_in(mu: MultiplicityFunction, z, radius: float):
    """The support element representing z^{-1}, or None."""
    if isinstance(z, complex):
        for w in mu.support:
            if scalars.near(w, 1 / z, radius):
                return w
        return None
    target = scalars.one(scalars.field_of(z)) / z
    for w in mu.support:
        if w == target:
            return w
    return None


def admissible(mu: MultiplicityFunction, radius: float = UNIT_RADIUS) -> bool:
    """Whether some invertible form realizes mu as its Jordan data.

    Requires mu(z) = mu(1/z) entrywise away from +-1, even counts of
    even-size blocks at 1, and even counts of odd-size blocks at -1.
    """
    for z, sizes in mu.entries:
        if _is_unit(z, 1, radius):
            if any(m % 2 for k, m in enumerate(sizes, 1) if k % 2 == 0):
                return False
        elif _is_unit(z, -1, radius):
            if any(m % 2 for k, m in enumerate(sizes, 1) if k % 2 == 1):
                return False
        else:
            w = _inverse_in(mu, z, radius)
            if w is None or mu.sizes(w) != sizes:
                return False
    return True


def dimension_from_mu(mu: MultiplicityFunction):
    """The loop value sum_z |mu(z)| z carried by any realizing form."""
    order = [Field.RATIONAL, Field.CRATIONAL, Field.COMPLEX]
    field = Field.RATIONAL
    for z in mu.support:
        got = scalars.field_of(z)
        if order.index(got) > order.index(field):
            field = got
    total = scalars.zero(field)
    for z in mu.support:
        total = total + scalars.embed(z, field) * mu.count(z)
    return total


def _jordan_block(z, k: int, field: Field) -> Matrix:
    z = scalars.embed(z, field)
    one = scalars.one(field)
    data = tuple(z if i == j else one if j == i + 1 else scalars.zero(field)
                 for i in range(k) for j in range(k))
    return Matrix(k, k, data, field)


@lru_cache(maxsize=None)
def _gamma(k: int) -> Matrix:
    """Primitive k x k form whose Theta is one Jordan block J_k((-1)^(k+1)).

    Alternating anti-triangular family: entry (i, j) is (-1)^i on the two
    antidiagonals i + j in {k-2, k-1}, zero elsewhere. Verified here by a
    Jordan round trip, so higher blocks never rest on the closed form alone.
    """
    data = tuple(
        Fraction((-1) ** i) if i + j in (k - 2, k - 1) else Fraction(0)
        for i in range(k) for j in range(k))
    g = Matrix(k, k, data, Field.RATIONAL)
    z = Fraction((-1) ** (k + 1))
    want = MultiplicityFunction.of([(z, (0,) * (k - 1) + (1,))])
    got = jordan_multiplicities(theta(g))
    if got != want:
        raise MathError("gamma primitive of size %d realizes %s, wanted %s"
                        % (k, got, want))
    return g


def _pair_key(z):
    re, im = scalars.re_im(z)
    return (scalars.abs2(z), re, im)


def canonical_form(mu: MultiplicityFunction) -> Matrix:
    """One representative form per class.

    Paired data goes into the two-block gadget [[0, I], [Q^-1, 0]] whose
    Theta is diag(Q, tQ^-1): one Jordan block J_k(z) per pair {z, 1/z} unit
    of mu (the member with larger (|z|^2, re, im) lands in Q), and one per
    floor(mu^(k)(+-1)/2). The leftover odd block at +-1 of each size is
    realized by the gamma primitive. Asserts the Jordan round trip.
    """
    if not admissible(mu):
        raise InadmissibleMultiplicity("no form realizes %s" % mu)
    if not mu.entries:
        return Matrix(0, 0, (), Field.RATIONAL)
    order = [Field.RATIONAL, Field.CRATIONAL, Field.COMPLEX]
    field = Field.RATIONAL
    for z in mu.support:
        got = scalars.field_of(z)
        if order.index(got) > order.index(field):
            field = got
    q_blocks = []
    gammas = []
    seen = []
    for z, sizes in mu.entries:
        if _is_unit(z, 1, UNIT_RADIUS) or _is_unit(z, -1, UNIT_RADIUS):
            for k, count in enumerate(sizes, 1):
                q_blocks.extend(_jordan_block(z, k, field) for _ in range(count // 2))
                if count % 2:
                    gammas.append(k)
        else:
            if any(z is w or z == w for w in seen):
                continue
            w = _inverse_in(mu, z, UNIT_RADIUS)
            seen.append(z)
            seen.append(w)
            rep = z if _pair_key(z) >= _pair_key(w) else w
            for k, count in enumerate(mu.sizes(rep), 1):
                q_blocks.extend(_jordan_block(rep, k, field) for _ in range(count))
    blocks = []
    if q_blocks:
        q = block_diag(*q_blocks)
        m = q.rows
        qinv = invert(q)
        zero_ = scalars.zero(field)
        one_ = scalars.one(field)
        data = []
        for i in range(m):
            data.extend(zero_ for _ in range(m))
            data.extend(one_ if j == i else zero_ for j in range(m))
        for i in range(m):
            data.extend(qinv.at(i, j) for j in range(m))
            data.extend(zero_ for _ in range(m))
        blocks.append(Matrix(2 * m, 2 * m, tuple(data), field))
    blocks.extend(_gamma(k).embed(field) for k in sorted(gammas))
    out = block_diag(*blocks)
    got = jordan_multiplicities(theta(out))
    exact = field is not Field.COMPLEX
    if (got != mu) if exact else (not got.near_equal(mu, 1e-6)):
        raise MathError("constructed form realizes %s, wanted %s" % (got, mu))
    return out


def _profiles(w: int, constrained_parity):
    """Size tuples with sum k mu^(k) = w; block sizes of the constrained
    parity come in even counts (None constrains nothing)."""
    out = []

    def rec(remaining, k, counts):
        if k == 0:
            if remaining == 0:
                sizes = list(reversed(counts))
                while sizes and sizes[-1] == 0:
                    sizes.pop()
                out.append(tuple(sizes))
            return
        step = 2 if k % 2 == constrained_parity else 1
        for m in range(0, remaining // k + 1, step):
            rec(remaining - m * k, k - 1, counts + [m])

    rec(w, w, [])
    return out


def enumerate_classes(d, n: int, domain) -> list:
    """All admissible mu supported in domain with total n and loop value d.

    The domain must omit 0 and be closed under inversion; without a finite
    domain the class list is infinite for most d.
    """
    dom = []
    for z in domain:
        if scalars.is_zero(z):
            raise InvalidList("0 cannot carry multiplicity data")
        if not any(z is w or z == w for w in dom):
            dom.append(z)
    orbits = []
    used = []
    for z in sorted(dom, key=scalars.sort_key):
        if any(z is w or z == w for w in used):
            continue
        if _is_unit(z, 1, UNIT_RADIUS):
            orbits.append(("one", z))
            used.append(z)
        elif _is_unit(z, -1, UNIT_RADIUS):
            orbits.append(("minus", z))
            used.append(z)
        else:
            if isinstance(z, complex):
                zinv = next((w for w in dom if scalars.near(w, 1 / z, 1e-12)), None)
            else:
                target = scalars.one(scalars.field_of(z)) / z
                zinv = next((w for w in dom if w == target), None)
            if zinv is None:
                raise InvalidList("domain lacks the inverse of %s"
                                  % scalars.format_scalar(z))
            orbits.append(("pair", z, zinv))
            used.append(z)
            used.append(zinv)

    results = []

    def assign(idx, left, entries):
        if idx == len(orbits):
            if left == 0:
                mu = MultiplicityFunction.of(list(entries))
                value = dimension_from_mu(mu)
                same = (scalars.near(value, d, 1e-9)
                        if isinstance(value, complex) or isinstance(d, (float, complex))
                        else value == d)
                if same:
                    results.append(mu)
            return
        orbit = orbits[idx]
        if orbit[0] == "pair":
            _, z, zinv = orbit
            for w in range(0, left // 2 + 1):
                for sizes in (_profiles(w, None) if w else [()]):
                    assign(idx + 1, left - 2 * w,
                           entries + [(z, sizes), (zinv, sizes)] if w else entries)
            return
        kind, z = orbit
        parity = 0 if kind == "one" else 1
        for w in range(0, left + 1):
            for sizes in (_profiles(w, parity) if w else [()]):
                assign(idx + 1, left - w, entries + [(z, sizes)] if w else entries)

    assign(0, n, [])
    results.sort(key=lambda m: tuple((scalars.sort_key(z), s) for z, s in m.entries))
    return results
