"""Classification of forms compatible with a compact (unitary) structure.

Membership in the set Gamma_d: an invertible complex Phi with
Phi^{-1} = s conj(Phi), s = d/|d|, and tr(Phi Phi*) = |d|. Polar-decomposing
Phi = U |Phi| gives a complete invariant up to unitary transport: the
eigenvalue list {h_j} of |Phi| together with s. The antiunitary v -> U conj(v)
squares to s and exchanges the h and 1/h eigenspaces, so the list is
inversion-closed and sum h_j^2 = |d|; for s = -1 the eigenvalue-1 space pairs
with itself, forcing even multiplicity there (the parity obstruction).

Everything here runs in the approximate complex field: polar decomposition
is not rational. Exact inputs are embedded first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .errors import (BadDimension, InvalidList, InvalidParameter, MathError,
                     ParityObstruction, SingularMatrix)
from .matrices import (DEFAULT_TOL, Matrix, Tolerance, block_diag,
                       hermitian_eigh, invert, polar_decompose)
from .scalars import Field, to_complex

__all__ = [
    "UNIT_WINDOW", "SpectralInvariant", "gamma_membership",
    "spectral_invariant", "unitarily_equivalent", "canonical_phi",
    "conjugation_operator",
]

# |h - 1| window that counts an eigenvalue of |Phi| as 1; the parity test
# needs a discrete multiplicity m from continuous data
UNIT_WINDOW = 1e-8


def _real_d(d) -> float:
    value = to_complex(d)
    if abs(value.imag) > 1e-12 * max(1.0, abs(value.real)):
        raise InvalidParameter("loop value must be real, got %r" % (d,))
    if abs(value.real) < 2:
        raise BadDimension("|d| = %r lies below 2, outside the compact range"
                           % abs(value.real))
    return value.real


@dataclass(frozen=True)
class SpectralInvariant:
    values: tuple
    sign: int
    m: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidParameter("sign must be +1 or -1")
        values = tuple(sorted(float(h) for h in self.values))
        if not values or values[0] <= 0:
            raise InvalidList("eigenvalues of a positive factor are positive")
        object.__setattr__(self, "values", values)
        inverted = sorted(1 / h for h in values)
        if any(abs(h - g) > UNIT_WINDOW for h, g in zip(values, inverted)):
            raise InvalidList("eigenvalue list is not closed under inversion")
        m = sum(1 for h in values if abs(h - 1) <= UNIT_WINDOW)
        if m != self.m:
            raise InvalidParameter("m = %d does not count the unit eigenvalues "
                                   "(%d within %g)" % (self.m, m, UNIT_WINDOW))
        if self.sign == -1 and self.m % 2:
            raise ParityObstruction("sign -1 pairs unit eigenvalues, m = %d "
                                    "is odd" % self.m)

    @property
    def dimension(self) -> float:
        """|d| recovered from the list."""
        return sum(h * h for h in self.values)

    def near_equal(self, other: "SpectralInvariant", radius: float) -> bool:
        return (self.sign == other.sign
                and len(self.values) == len(other.values)
                and all(abs(a - b) <= radius
                        for a, b in zip(self.values, other.values)))


def gamma_membership(phi: Matrix, d, tol: float = 1e-9) -> bool:
    """Whether phi lies in Gamma_d: phi^{-1} = (d/|d|) conj(phi) up to tol
    and tr(phi phi*) = |d| up to tol."""
    value = _real_d(d)
    if phi.rows != phi.cols:
        return False
    phi = phi.embed(Field.COMPLEX)
    sign = 1.0 if value > 0 else -1.0
    try:
        inv = invert(phi)
    except SingularMatrix:
        return False
    if (inv - phi.conjugate().scale(sign)).max_abs() > tol:
        return False
    trace = (phi @ phi.adjoint()).trace()
    return abs(trace - abs(value)) <= tol


def _eigenvalue_list(phi: Matrix) -> tuple:
    vals, _ = hermitian_eigh(phi.adjoint() @ phi)
    return tuple(sorted(sqrt(max(x, 0.0)) for x in vals))


def spectral_invariant(phi: Matrix, d) -> SpectralInvariant:
    """The complete unitary-transport invariant of a member of Gamma_d."""
    if not gamma_membership(phi, d):
        raise MathError("phi is not a member of the compact set for d = %r"
                        % (d,))
    values = _eigenvalue_list(phi.embed(Field.COMPLEX))
    sign = 1 if to_complex(d).real > 0 else -1
    m = sum(1 for h in values if abs(h - 1) <= UNIT_WINDOW)
    return SpectralInvariant(values, sign, m)


def unitarily_equivalent(phi1: Matrix, phi2: Matrix, d,
                         tol: Tolerance = DEFAULT_TOL) -> bool:
    """Invariant comparison; non-members of Gamma_d are never equivalent."""
    if not (gamma_membership(phi1, d) and gamma_membership(phi2, d)):
        return False
    inv1 = spectral_invariant(phi1, d)
    inv2 = spectral_invariant(phi2, d)
    return inv1.near_equal(inv2, tol.cluster_radius)


def canonical_phi(values, sign: int) -> Matrix:
    """One member of Gamma_d per invariant.

    Pairs {h, 1/h} with h > 1 become blocks [[0, sign/h], [h, 0]]; unit
    eigenvalues become [1] singletons for sign +1 and [[0, -1], [1, 0]]
    couples for sign -1 (whence the parity obstruction for odd counts).
    """
    if sign not in (1, -1):
        raise InvalidParameter("sign must be +1 or -1")
    hs = sorted((float(h) for h in values), reverse=True)
    if not hs:
        raise InvalidList("empty eigenvalue list")
    if hs[-1] <= 0:
        raise InvalidList("eigenvalues of a positive factor are positive")
    pairs = []
    ones = 0
    while hs:
        h = hs.pop(0)
        if abs(h - 1) <= UNIT_WINDOW:
            ones += 1
            continue
        want = 1 / h
        nearest = min(range(len(hs)), key=lambda i: abs(hs[i] - want), default=None)
        if nearest is None or abs(hs[nearest] - want) > UNIT_WINDOW:
            raise InvalidList("no partner for %g: list is not closed under "
                              "inversion" % h)
        hs.pop(nearest)
        pairs.append(h)
    if sign == -1 and ones % 2:
        raise ParityObstruction("sign -1 needs an even count of unit "
                                "eigenvalues, got %d" % ones)
    total = sum(h * h + 1 / (h * h) for h in pairs) + ones
    if total < 2 - 1e-12:
        raise BadDimension("sum of squares %g lies below 2" % total)
    blocks = [Matrix.from_rows([[0j, complex(sign / h)], [complex(h), 0j]])
              for h in pairs]
    if sign == 1:
        blocks.extend(Matrix.from_rows([[1 + 0j]]) for _ in range(ones))
    else:
        blocks.extend(Matrix.from_rows([[0j, -1 + 0j], [1 + 0j, 0j]])
                      for _ in range(ones // 2))
    phi = block_diag(*blocks)
    if not gamma_membership(phi, sign * total):
        raise MathError("constructed phi failed its own membership test")
    return phi


def conjugation_operator(phi: Matrix, d) -> Matrix:
    """The unitary polar factor U of phi; the antiunitary is v -> U conj(v).

    Checks the two identities membership forces on U and P = |phi|:
    U conj(U) = (d/|d|) I (the antiunitary squares to the sign) and
    conj(P) U = U P^{-1} (it exchanges the h and 1/h eigenspaces; for the
    real P of every canonical member this is P U = U conj(P)^{-1}).
    """
    if not gamma_membership(phi, d):
        raise MathError("phi is not a member of the compact set for d = %r"
                        % (d,))
    sign = 1.0 if to_complex(d).real > 0 else -1.0
    u, p = polar_decompose(phi.embed(Field.COMPLEX))
    eye = Matrix.identity(u.rows, Field.COMPLEX)
    if (u @ u.conjugate() - eye.scale(sign)).max_abs() > 1e-8:
        raise MathError("polar factor broke the conjugation square identity")
    if (p.conjugate() @ u - u @ invert(p)).max_abs() > 1e-8:
        raise MathError("polar factor broke the eigenspace exchange identity")
    return u
