"""Evaluation of diagrams against a bilinear form.

An invertible N x N form E turns every planar diagram into a linear map on
tensor powers of an N-dimensional space: caps contract adjacent legs with
E, cups insert the copairing E^{-1}, and each closed loop contributes the
factor d = tr(E^{-1} ^T E). Leg indices are big-endian: leg 1 is the most
significant digit of a row index.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels as kernels
from . import scalars
from .diagrams import PlanarDiagram, TLWord, diagram_to_word
from .errors import ShapeMismatch
from .matrices import DEFAULT_TOL, Matrix, Tolerance, from_buffer, invert, to_buffer
from .scalars import Field


@dataclass(frozen=True)
class BilinearForm:
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.matrix.cols or self.matrix.rows < 1:
            raise ShapeMismatch("a bilinear form is square and at least 1 x 1")
        # fails with SingularMatrix right here when E is degenerate
        object.__setattr__(self, "_inverse", invert(self.matrix))

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def copairing(self) -> Matrix:
        return self._inverse


@dataclass(frozen=True)
class TensorMap:
    in_legs: int
    out_legs: int
    n: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.n ** self.out_legs, self.n ** self.in_legs):
            raise ShapeMismatch("matrix %s does not map %d^%d -> %d^%d"
                                % (self.matrix.shape, self.n, self.in_legs,
                                   self.n, self.out_legs))


def dimension_of(b: BilinearForm):
    """The loop value d = tr(E^{-1} ^T E)."""
    return (b.copairing @ b.matrix.transpose()).trace()


def _cap_rows(rows, cols, n, left, right, e):
    z = 0 * e[0][0]
    out = [[z] * cols for _ in range(left * right)]
    for a in range(n):
        for bb in range(n):
            c = e[a][bb]
            if scalars.is_zero(c):
                continue
            for l in range(left):
                sbase = ((l * n + a) * n + bb) * right
                obase = l * right
                for r in range(right):
                    srow = rows[sbase + r]
                    orow = out[obase + r]
                    for j in range(cols):
                        orow[j] = orow[j] + c * srow[j]
    return out


def _cup_rows(rows, cols, n, left, right, d):
    z = 0 * d[0][0]
    out = [[z] * cols for _ in range(left * n * n * right)]
    for a in range(n):
        for bb in range(n):
            c = d[a][bb]
            if scalars.is_zero(c):
                continue
            for l in range(left):
                obase = ((l * n + a) * n + bb) * right
                sbase = l * right
                for r in range(right):
                    srow = rows[sbase + r]
                    orow = out[obase + r]
                    for j in range(cols):
                        orow[j] = c * srow[j]
    return out


def evaluate(b: BilinearForm, f: PlanarDiagram | TLWord) -> TensorMap:
    """The tensor contraction of a diagram (or cap/cup word) against b.

    A diagram's loop count scales the result by d^loops; words carry no
    loops (a cup letter immediately capped contracts to the factor d on
    its own, no special casing).
    """
    loops = f.loops if isinstance(f, PlanarDiagram) else 0
    w = diagram_to_word(f) if isinstance(f, PlanarDiagram) else f
    n = b.n
    k = w.source
    cols = n ** k
    if b.field is Field.COMPLEX:
        cur = kernels.zeros(cols * cols)
        for i in range(cols):
            cur[2 * (i * cols + i)] = 1.0
        ebuf = to_buffer(b.matrix)
        dbuf = to_buffer(b.copairing)
        for let in w.letters:
            if let.op == "cap":
                left, right = n ** (let.i - 1), n ** (k - let.i - 1)
                cur = kernels.cap_apply(cur, cols, n, left, right, ebuf)
                k -= 2
            else:
                left, right = n ** (let.i - 1), n ** (k - let.i + 1)
                cur = kernels.cup_apply(cur, cols, n, left, right, dbuf)
                k += 2
        out = from_buffer(cur, n ** k, cols)
        if loops:
            out = out.scale(scalars.to_complex(dimension_of(b)) ** loops)
        return TensorMap(w.source, k, n, out)
    o, z = scalars.one(b.field), scalars.zero(b.field)
    cur = [[o if i == j else z for j in range(cols)] for i in range(cols)]
    erows = b.matrix.to_rows()
    drows = b.copairing.to_rows()
    for let in w.letters:
        if let.op == "cap":
            cur = _cap_rows(cur, cols, n, n ** (let.i - 1), n ** (k - let.i - 1),
                            erows)
            k -= 2
        else:
            cur = _cup_rows(cur, cols, n, n ** (let.i - 1), n ** (k - let.i + 1),
                            drows)
            k += 2
    data = tuple(x for row in cur for x in row)
    out = Matrix(n ** k, cols, data, b.field)
    if loops:
        out = out.scale(dimension_of(b) ** loops)
    return TensorMap(w.source, k, n, out)


def transport(b: BilinearForm, t: Matrix, tol: Tolerance = DEFAULT_TOL) -> BilinearForm:
    """The orbit action E -> ^T T E T for invertible T."""
    if t.shape != (b.n, b.n):
        raise ShapeMismatch("transport by a %s matrix on a %d-dim form"
                            % (t.shape, b.n))
    invert(t, tol)  # SingularMatrix when t degenerates; result unused
    return BilinearForm(t.transpose() @ b.matrix @ t)


def stabilizes(b: BilinearForm, t: Matrix, tol: float = 1e-9) -> bool:
    """Does T fix E, i.e. ^T T E T = E (within tol over the complex field)?"""
    if t.shape != (b.n, b.n):
        raise ShapeMismatch("stabilizer candidate has shape %s" % (t.shape,))
    moved = t.transpose() @ b.matrix @ t
    if b.field is Field.COMPLEX:
        return (moved - b.matrix).max_abs() <= tol
    return moved == b.matrix
