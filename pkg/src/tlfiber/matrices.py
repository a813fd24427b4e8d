"""Dense matrices over the three scalar fields, plus the kernel operations.

Exact fields run fraction-free or exact-division eliminations; the complex
field runs through the numeric kernel backend (Jacobi eigensolve,
simultaneous root iteration). Everything here is desk scale: the kernel
operations reject matrices beyond 64 x 64.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, sqrt

from . import _kernels as kernels
from . import scalars
from .errors import (
    FieldMismatch,
    IrrationalSpectrum,
    MatrixTooLarge,
    NoConvergence,
    NotInvertible,
    ShapeMismatch,
    SingularMatrix,
)
from .multiplicity import MultiplicityFunction
from .scalars import Field, QQi

DESK_LIMIT = 64
JACOBI_REL_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
ROOTS_REL_TOL = 1e-13
ROOTS_MAX_ITER = 500


@dataclass(frozen=True)
class Tolerance:
    """Thresholds for the approximate field.

    rank_threshold is relative to the largest singular value (or pivot
    scale); cluster_radius groups root iterates into eigenvalues. The
    default radius resolves simple and double eigenvalues; higher Jordan
    structure scatters roots like eps**(1/k) and wants a looser radius.
    """

    rank_threshold: float = 1e-10
    cluster_radius: float = 1e-8


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    data: tuple
    field: Field

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative dimensions")
        if len(self.data) != self.rows * self.cols:
            raise ShapeMismatch("data length %d does not fill %d x %d"
                                % (len(self.data), self.rows, self.cols))

    @classmethod
    def from_rows(cls, rows, field: Field | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        flat = [x for r in rows for x in r]
        if field is None:
            field = _infer_field(flat)
            flat = [scalars.coerce(x, field) for x in flat]
        else:
            flat = [scalars.embed(x, field) for x in flat]
        return cls(len(rows), ncols, tuple(flat), field)

    @classmethod
    def identity(cls, n: int, field: Field = Field.RATIONAL) -> "Matrix":
        o, z = scalars.one(field), scalars.zero(field)
        return cls(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)),
                   field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = Field.RATIONAL) -> "Matrix":
        return cls(rows, cols, (scalars.zero(field),) * (rows * cols), field)

    @classmethod
    def diagonal(cls, diag, field: Field | None = None) -> "Matrix":
        diag = list(diag)
        if field is None:
            field = _infer_field(diag) if diag else Field.RATIONAL
        n = len(diag)
        z = scalars.zero(field)
        data = [z] * (n * n)
        for i, x in enumerate(diag):
            data[i * n + i] = scalars.embed(x, field)
        return cls(n, n, tuple(data), field)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def at(self, i: int, j: int):
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.data[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        data = tuple(self.data[j * self.cols + i]
                     for i in range(self.cols) for j in range(self.rows))
        return Matrix(self.cols, self.rows, data, self.field)

    def conjugate(self) -> "Matrix":
        return Matrix(self.rows, self.cols,
                      tuple(scalars.conj(x) for x in self.data), self.field)

    def adjoint(self) -> "Matrix":
        return self.transpose().conjugate()

    def __add__(self, other: "Matrix") -> "Matrix":
        _compatible(self, other, same_shape=True)
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.data, other.data)), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        _compatible(self, other, same_shape=True)
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.data, other.data)), self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-x for x in self.data), self.field)

    def scale(self, c) -> "Matrix":
        c = scalars.embed(c, self.field)
        return Matrix(self.rows, self.cols, tuple(c * x for x in self.data), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _compatible(self, other)
        if self.cols != other.rows:
            raise ShapeMismatch("cannot multiply %s by %s" % (self.shape, other.shape))
        if self.field is Field.COMPLEX:
            buf = kernels.matmul(to_buffer(self), to_buffer(other),
                                 self.rows, self.cols, other.cols)
            return from_buffer(buf, self.rows, other.cols)
        z = scalars.zero(self.field)
        a, b, k, m = self.data, other.data, self.cols, other.cols
        out = []
        for i in range(self.rows):
            acc = [z] * m
            for t in range(k):
                x = a[i * k + t]
                if scalars.is_zero(x):
                    continue
                bt = t * m
                for j in range(m):
                    acc[j] = acc[j] + x * b[bt + j]
            out.extend(acc)
        return Matrix(self.rows, m, tuple(out), self.field)

    def trace(self):
        if self.rows != self.cols:
            raise ShapeMismatch("trace of a non-square matrix")
        s = scalars.zero(self.field)
        for i in range(self.rows):
            s = s + self.at(i, i)
        return s

    def max_abs(self) -> float:
        return max((abs(scalars.to_complex(x)) for x in self.data), default=0.0)

    def frobenius(self) -> float:
        return sqrt(sum(abs(scalars.to_complex(x)) ** 2 for x in self.data))

    def embed(self, field: Field) -> "Matrix":
        if field is self.field:
            return self
        return Matrix(self.rows, self.cols,
                      tuple(scalars.embed(x, field) for x in self.data), field)

    def __str__(self):
        rows = [[scalars.format_scalar(x) for x in self.row(i)]
                for i in range(self.rows)]
        width = max((len(s) for r in rows for s in r), default=1)
        return "\n".join("[%s]" % "  ".join(s.rjust(width) for s in r) for r in rows)


def _infer_field(entries) -> Field:
    seen = set()
    for x in entries:
        f = scalars.field_of(x)
        if not (f is Field.RATIONAL and isinstance(x, int)):
            seen.add(f)
    if Field.COMPLEX in seen:
        if seen - {Field.COMPLEX}:
            raise FieldMismatch("exact and approximate scalars mixed; embed first")
        return Field.COMPLEX
    if Field.CRATIONAL in seen:
        return Field.CRATIONAL
    return Field.RATIONAL


def _compatible(a: Matrix, b: Matrix, same_shape: bool = False):
    if a.field is not b.field:
        raise FieldMismatch("matrices over %s and %s" % (a.field.value, b.field.value))
    if same_shape and a.shape != b.shape:
        raise ShapeMismatch("shapes %s and %s differ" % (a.shape, b.shape))


def _desk(m: Matrix):
    if max(m.rows, m.cols) > DESK_LIMIT:
        raise MatrixTooLarge("kernel operations stop at %d, got %s"
                             % (DESK_LIMIT, (m.shape,)))


def _square(m: Matrix):
    if m.rows != m.cols:
        raise ShapeMismatch("expected a square matrix, got %s" % (m.shape,))


def to_buffer(m: Matrix) -> array:
    buf = array("d", bytes(16 * m.rows * m.cols))
    for i, x in enumerate(m.data):
        x = complex(x)
        buf[2 * i] = x.real
        buf[2 * i + 1] = x.imag
    return buf


def from_buffer(buf, rows: int, cols: int) -> Matrix:
    data = tuple(complex(buf[2 * i], buf[2 * i + 1]) for i in range(rows * cols))
    return Matrix(rows, cols, data, Field.COMPLEX)


def block_diag(*blocks: Matrix) -> Matrix:
    blocks = [b for b in blocks if b.rows or b.cols]
    if not blocks:
        return Matrix.zeros(0, 0)
    field = blocks[0].field
    for b in blocks[1:]:
        if b.field is not field:
            raise FieldMismatch("blocks over different fields")
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    z = scalars.zero(field)
    data = [z] * (rows * cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                data[(r0 + i) * cols + (c0 + j)] = b.at(i, j)
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, tuple(data), field)


def kron(a: Matrix, b: Matrix) -> Matrix:
    _compatible(a, b)
    rows, cols = a.rows * b.rows, a.cols * b.cols
    data = [scalars.zero(a.field)] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.at(i, j)
            if scalars.is_zero(x):
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    data[(i * b.rows + k) * cols + (j * b.cols + l)] = x * b.at(k, l)
    return Matrix(rows, cols, tuple(data), a.field)


# ---------------------------------------------------------------- inversion


def invert(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> Matrix:
    """Inverse by Gauss-Jordan; exact pivots or partial pivoting by modulus."""
    _square(m)
    _desk(m)
    n = m.rows
    exact = m.field is not Field.COMPLEX
    a = [list(m.row(i)) + Matrix.identity(n, m.field).row(i) for i in range(n)]
    scale = m.max_abs() or 1.0
    for c in range(n):
        if exact:
            p = next((i for i in range(c, n) if not scalars.is_zero(a[i][c])), None)
        else:
            p = max(range(c, n), key=lambda i: abs(a[i][c]))
            if abs(a[p][c]) <= tol.rank_threshold * scale:
                p = None
        if p is None:
            raise SingularMatrix("no usable pivot in column %d" % c)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i == c:
                continue
            f = a[i][c]
            if scalars.is_zero(f):
                continue
            arow, crow = a[i], a[c]
            a[i] = [x - f * y for x, y in zip(arow, crow)]
    data = tuple(a[i][n + j] for i in range(n) for j in range(n))
    return Matrix(n, n, data, m.field)


# ------------------------------------------------------- rank / determinant


def _integerize_rows(m: Matrix):
    """Scale each row into Z or Z[i]; returns (rows, row scales)."""
    out, used = [], []
    for i in range(m.rows):
        row = m.row(i)
        dens = []
        for x in row:
            re, im = scalars.re_im(x)
            dens.append(re.denominator)
            dens.append(im.denominator)
        s = lcm(*dens) if dens else 1
        used.append(Fraction(s))
        out.append([x * s for x in row])
    return out, used


def _bareiss(rows, nr: int, nc: int):
    """Fraction-free elimination; returns (rank, det_of_scaled_matrix).

    Entries must be integral (Fraction or QQi with denominator 1); every
    intermediate division is exact by the Sylvester minor identity.
    """
    a = [row[:] for row in rows]
    prev = Fraction(1)
    sign = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if not scalars.is_zero(a[i][c])), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, nr):
            fac = a[i][c]
            for j in range(c + 1, nc):
                a[i][j] = (a[i][j] * piv - fac * a[r][j]) / prev
            a[i][c] = 0 * a[i][c]
        prev = piv
        r += 1
    det = sign * prev if (nr == nc and r == nr) else None
    return r, det


def _singular_values(m: Matrix):
    vals, _ = hermitian_eigh(m.adjoint() @ m)
    return [sqrt(v) if v > 0 else 0.0 for v in vals]


def rank(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> int:
    _desk(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field is Field.COMPLEX:
        svs = _singular_values(m)
        top = max(svs)
        if top == 0.0:
            return 0
        return sum(1 for s in svs if s > tol.rank_threshold * top)
    rows, _ = _integerize_rows(m)
    r, _ = _bareiss(rows, m.rows, m.cols)
    return r


def determinant(m: Matrix, tol: Tolerance = DEFAULT_TOL):
    _square(m)
    _desk(m)
    if m.rows == 0:
        return scalars.one(m.field)
    if m.field is Field.COMPLEX:
        a = m.to_rows()
        n = m.rows
        det = complex(1)
        for c in range(n):
            p = max(range(c, n), key=lambda i: abs(a[i][c]))
            if a[p][c] == 0:
                return complex(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det *= a[c][c]
            inv = 1.0 / a[c][c]
            for i in range(c + 1, n):
                f = a[i][c] * inv
                if f == 0:
                    continue
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return det
    rows, used = _integerize_rows(m)
    r, det = _bareiss(rows, m.rows, m.cols)
    if det is None:
        return scalars.zero(m.field)
    for s in used:
        det = det / s
    return scalars.coerce(det, m.field) if not isinstance(det, QQi) else det


# ----------------------------------------------------- characteristic data


def char_poly(m: Matrix) -> list:
    """Coefficients of det(tI - m), highest degree first, division-free."""
    _square(m)
    _desk(m)
    n = m.rows
    o = scalars.one(m.field)
    if n == 0:
        return [o]
    a = m.to_rows()
    poly = [o, -a[n - 1][n - 1]]
    for i in range(n - 2, -1, -1):
        s = n - 1 - i
        rvec = a[i][i + 1:]
        cvec = [a[k][i] for k in range(i + 1, n)]
        sub = [row[i + 1:] for row in a[i + 1:]]
        toep = [o, -a[i][i]]
        v = cvec
        for _ in range(s):
            toep.append(-sum(x * y for x, y in zip(rvec, v)))
            v = [sum(row[j] * v[j] for j in range(s)) for row in sub]
        new = [scalars.zero(m.field)] * (s + 2)
        for r_ in range(s + 2):
            hi = min(r_, s)
            acc = new[r_]
            for j in range(max(0, r_ - s - 1), hi + 1):
                acc = acc + toep[r_ - j] * poly[j]
            new[r_] = acc
        poly = new
    return poly


def _poly_eval(coeffs, x):
    acc = coeffs[0] - coeffs[0]
    for c in coeffs:
        acc = acc * x + c
    return acc


def _synthetic_division(coeffs, r):
    """coeffs / (t - r); returns (quotient, remainder)."""
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + out[-1] * r)
    return out[:-1], out[-1]


def _divisors(n: int) -> list:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _denominators(coeffs):
    for c in coeffs:
        if isinstance(c, QQi):
            yield c.re.denominator
            yield c.im.denominator
        else:
            yield c.denominator


def _rational_candidates(coeffs, numeric_roots):
    """Likely exact roots of a monic polynomial over Fraction or QQi."""
    gaussian = any(isinstance(c, QQi) for c in coeffs)
    lead = lcm(*_denominators(coeffs), 1)  # integerized leading coefficient
    cands = []
    for z in numeric_roots:
        if gaussian:
            cands.append(QQi(Fraction(z.real).limit_denominator(10 ** 12),
                             Fraction(z.imag).limit_denominator(10 ** 12)))
            cands.append(QQi(Fraction(round(z.real * lead), lead),
                             Fraction(round(z.imag * lead), lead)))
        else:
            if abs(z.imag) < 1e-6:
                cands.append(Fraction(z.real).limit_denominator(10 ** 12))
                cands.append(Fraction(round(z.real * lead), lead))
    return cands, gaussian


def _exact_roots(coeffs):
    """All roots of a monic exact polynomial inside its field.

    Numeric root iterates suggest candidates, synthetic division verifies
    them exactly; a divisor-scan backstop guarantees completeness over the
    rationals while the integerized edge coefficients stay small. Returns
    (root -> multiplicity, residual coefficients).
    """
    mults = {}
    zero = scalars.zero(Field.RATIONAL) if not any(isinstance(c, QQi) for c in coeffs) \
        else scalars.zero(Field.CRATIONAL)
    while len(coeffs) > 1 and scalars.is_zero(coeffs[-1]):
        mults[zero] = mults.get(zero, 0) + 1
        coeffs = coeffs[:-1]
    fl = [scalars.to_complex(c) for c in coeffs]
    buf = array("d", (x for c in fl for x in (c.real, c.imag)))
    roots_buf, _ = kernels.roots_simultaneous(buf, ROOTS_MAX_ITER, ROOTS_REL_TOL)
    numeric = [complex(roots_buf[2 * i], roots_buf[2 * i + 1])
               for i in range(len(roots_buf) // 2)]
    cands, gaussian = _rational_candidates(coeffs, numeric)
    for r in cands:
        while len(coeffs) > 1:
            q, rem = _synthetic_division(coeffs, r)
            if not scalars.is_zero(rem):
                break
            mults[r] = mults.get(r, 0) + 1
            coeffs = q
    if len(coeffs) > 1 and not gaussian:
        # rational root theorem scan on the integerized residual
        den = lcm(*(c.denominator for c in coeffs), 1)
        ints = [c * den for c in coeffs]
        a0, an = int(ints[-1]), int(ints[0])
        if a0 != 0 and abs(a0) <= 10 ** 6 and abs(an) <= 10 ** 6:
            for p in _divisors(a0):
                for q_ in _divisors(an):
                    for r in (Fraction(p, q_), Fraction(-p, q_)):
                        while len(coeffs) > 1:
                            q2, rem = _synthetic_division(coeffs, r)
                            if not scalars.is_zero(rem):
                                break
                            mults[r] = mults.get(r, 0) + 1
                            coeffs = q2
    return mults, coeffs


def spectrum(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> list:
    """Eigenvalues with algebraic multiplicity, sorted by (re, im).

    Exact fields require every eigenvalue to live in the field, otherwise
    IrrationalSpectrum reports the residual degree. The complex field
    clusters root iterates within tol.cluster_radius.
    """
    _square(m)
    _desk(m)
    coeffs = char_poly(m)
    if m.field is not Field.COMPLEX:
        mults, residual = _exact_roots(coeffs)
        if len(residual) > 1:
            raise IrrationalSpectrum(
                "characteristic polynomial keeps an unfactored part of degree %d "
                "inside the %s field; use the complex field or pass eigenvalues="
                % (len(residual) - 1, m.field.value),
                residual_degree=len(residual) - 1)
        out = sorted(mults.items(), key=lambda zm: scalars.sort_key(zm[0]))
        return out
    buf = array("d", (x for c in coeffs for x in (complex(c).real, complex(c).imag)))
    roots_buf, ok = kernels.roots_simultaneous(buf, ROOTS_MAX_ITER, ROOTS_REL_TOL)
    if not ok:
        raise NoConvergence("root iteration missed %.0e after %d rounds"
                            % (ROOTS_REL_TOL, ROOTS_MAX_ITER))
    roots = sorted(
        (complex(roots_buf[2 * i], roots_buf[2 * i + 1])
         for i in range(len(roots_buf) // 2)),
        key=lambda z: (z.real, z.imag),
    )
    clusters = []
    for z in roots:
        for c in clusters:
            if abs(z - c[0] / c[1]) <= tol.cluster_radius:
                c[0] += z
                c[1] += 1
                break
        else:
            clusters.append([z, 1])
    out = [(c[0] / c[1], c[1]) for c in clusters]
    out.sort(key=lambda zm: scalars.sort_key(zm[0]))
    return out


# ------------------------------------------------------------- Jordan data


def jordan_multiplicities(m: Matrix, tol: Tolerance = DEFAULT_TOL,
                          eigenvalues=None) -> MultiplicityFunction:
    """Block-size counts per eigenvalue, from the rank sequence of powers.

    mu^(k)(z) = r_{k-1} - 2 r_k + r_{k+1} with r_k = rank((m - z)^k).
    Requires an invertible m (these arise as conjugation operators, which
    are invertible by construction). eigenvalues= skips the spectrum
    computation, the escape hatch when the exact spectrum leaves the field.
    """
    _square(m)
    _desk(m)
    n = m.rows
    if rank(m, tol) < n:
        raise NotInvertible("0 is an eigenvalue")
    supplied = eigenvalues is not None
    if not supplied:
        eigenvalues = [z for z, _ in spectrum(m, tol)]
    entries = []
    for z in eigenvalues:
        z = scalars.embed(z, m.field)
        if scalars.is_zero(z):
            raise NotInvertible("0 is an eigenvalue")
        p = m - Matrix.identity(n, m.field).scale(z)
        numeric = m.field is Field.COMPLEX
        if numeric:
            ref = max(_singular_values(p), default=0.0) or 1.0
        rs = [n]
        power = Matrix.identity(n, m.field)
        while len(rs) <= n + 1:
            power = power @ p
            if numeric:
                # noise in power k is eigenvalue-cluster error times ref^(k-1),
                # so the cutoff references ref^k, not the power's own scale
                k = len(rs)
                cut = max(tol.rank_threshold, 2 * k * tol.cluster_radius) * ref ** k
                rs.append(sum(1 for s in _singular_values(power) if s > cut))
            else:
                rs.append(rank(power, tol))
            if rs[-1] == rs[-2]:
                break
        sizes = [rs[k - 1] - 2 * rs[k] + rs[k + 1] for k in range(1, len(rs) - 1)]
        if any(s < 0 for s in sizes):
            raise NoConvergence("rank sequence of powers is not convex at %s; "
                                "loosen the tolerance" % (z,))
        if sizes:
            entries.append((z, tuple(sizes)))
    mu = MultiplicityFunction.of(entries)
    if mu.total() != n:
        if supplied:
            raise ValueError("eigenvalue list accounts for %d of %d dimensions"
                             % (mu.total(), n))
        raise NoConvergence("jordan data accounts for %d of %d dimensions; "
                            "loosen cluster_radius" % (mu.total(), n))
    return mu


# ---------------------------------------------------------------- hermitian


def hermitian_eigh(h: Matrix, rel_tol: float = JACOBI_REL_TOL):
    """Eigenvalues (ascending floats) and unitary eigenvector columns.

    Cyclic Jacobi with two-sided unitary rotations; converged when the
    off-diagonal Frobenius mass drops below rel_tol * ||h||_F.
    """
    _square(h)
    _desk(h)
    h = h.embed(Field.COMPLEX)
    if (h - h.adjoint()).max_abs() > 1e-10 * (h.max_abs() or 1.0):
        raise ShapeMismatch("matrix is not hermitian")
    h = (h + h.adjoint()).scale(0.5)
    n = h.rows
    evals, vecs, ok = kernels.jacobi_eigh(to_buffer(h), n, rel_tol,
                                          JACOBI_MAX_SWEEPS)
    if not ok:
        raise NoConvergence("jacobi sweeps exhausted before %.0e" % rel_tol)
    v = from_buffer(vecs, n, n)
    order = sorted(range(n), key=lambda i: evals[i])
    vals = [evals[i] for i in order]
    data = tuple(v.at(i, order[j]) for i in range(n) for j in range(n))
    return vals, Matrix(n, n, data, Field.COMPLEX)


def polar_decompose(m: Matrix, tol: Tolerance = DEFAULT_TOL):
    """m = u p with u unitary and p positive; exact input embeds first."""
    _square(m)
    _desk(m)
    m = m.embed(Field.COMPLEX)
    n = m.rows
    vals, v = hermitian_eigh(m.adjoint() @ m)
    sv = [sqrt(x) if x > 0 else 0.0 for x in vals]
    top = max(sv, default=0.0)
    if top == 0.0 or min(sv) <= tol.rank_threshold * top:
        raise NotInvertible("polar factor of a singular matrix")
    vh = v.adjoint()
    p = v @ Matrix.diagonal([complex(s) for s in sv], Field.COMPLEX) @ vh
    pinv = v @ Matrix.diagonal([complex(1 / s) for s in sv], Field.COMPLEX) @ vh
    return m @ pinv, p
