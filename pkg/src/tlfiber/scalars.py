"""Scalar fields.

Three fields are supported: exact rationals (fractions.Fraction), exact
Gaussian rationals (QQi, two Fractions), and approximate complex (the
builtin complex). A scalar's field is determined by its type; matrices over
different fields never mix silently, the only promotions are the explicit
embed()/to_complex() maps.
"""

from __future__ import annotations

import cmath
from enum import Enum
from fractions import Fraction

from .errors import FieldMismatch


class Field(Enum):
    RATIONAL = "rational"
    CRATIONAL = "crational"
    COMPLEX = "complex"


class QQi:
    """Gaussian rational re + im*i.

    Arithmetic accepts int, Fraction and QQi operands; float or complex
    operands are rejected so exact computations cannot degrade by accident.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QQi is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, QQi):
            return x
        if isinstance(x, (int, Fraction)):
            return QQi(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QQi(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QQi(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * o.re + self.im * o.im) / n,
                   (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** (-k))
        out = QQi(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        # agree with Fraction's hash on the real axis
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return QQi(self.re, -self.im)

    def __repr__(self):
        return "QQi(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%s*i" % self.im
        sign = "+" if self.im > 0 else "-"
        return "%s%s%s*i" % (self.re, sign, abs(self.im))


def field_of(x) -> Field:
    if isinstance(x, bool):
        raise FieldMismatch("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return Field.RATIONAL
    if isinstance(x, QQi):
        return Field.CRATIONAL
    if isinstance(x, (float, complex)):
        return Field.COMPLEX
    raise FieldMismatch("unsupported scalar type %r" % type(x).__name__)


def coerce(x, field: Field):
    """Normalize x into field's canonical representation.

    Int literals are field-agnostic and land anywhere; other scalars must
    already belong to the field (rationals also pass as Gaussian rationals).
    """
    got = field_of(x)
    if field is Field.RATIONAL:
        if got is not Field.RATIONAL:
            raise FieldMismatch("expected rational scalar, got %s" % got.value)
        return Fraction(x)
    if field is Field.CRATIONAL:
        if got is Field.RATIONAL:
            return QQi(x)
        if got is not Field.CRATIONAL:
            raise FieldMismatch("expected crational scalar, got %s" % got.value)
        return x
    if isinstance(x, int):
        return complex(x)
    if got is not Field.COMPLEX:
        raise FieldMismatch("expected complex scalar, got %s (embed first)" % got.value)
    return complex(x)


def zero(field: Field):
    return {Field.RATIONAL: Fraction(0), Field.CRATIONAL: QQi(0),
            Field.COMPLEX: complex(0)}[field]


def one(field: Field):
    return {Field.RATIONAL: Fraction(1), Field.CRATIONAL: QQi(1),
            Field.COMPLEX: complex(1)}[field]


def conj(x):
    if isinstance(x, (int, Fraction)):
        return x
    return x.conjugate()


def abs2(x):
    """|x|^2, exact over the exact fields."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x) ** 2
    if isinstance(x, QQi):
        return x.re * x.re + x.im * x.im
    return (x.real * x.real + x.imag * x.imag) if isinstance(x, complex) else float(x) ** 2


def to_complex(x) -> complex:
    if isinstance(x, QQi):
        return complex(float(x.re), float(x.im))
    return complex(x)


def embed(x, field: Field):
    """Explicit widening promotion along rational -> crational -> complex."""
    got = field_of(x)
    order = [Field.RATIONAL, Field.CRATIONAL, Field.COMPLEX]
    if order.index(got) > order.index(field):
        raise FieldMismatch("cannot narrow %s to %s" % (got.value, field.value))
    if field is Field.RATIONAL:
        return Fraction(x)
    if field is Field.CRATIONAL:
        return QQi(x) if got is Field.RATIONAL else x
    return to_complex(x)


def re_im(x):
    """(real, imaginary) parts, exact for exact scalars."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0)
    if isinstance(x, QQi):
        return x.re, x.im
    x = complex(x)
    return x.real, x.imag


def sort_key(x):
    re, im = re_im(x)
    return (re, im)


def is_zero(x) -> bool:
    return not x


def format_scalar(x) -> str:
    if isinstance(x, complex):
        return repr(x)
    return str(x)


def scalar_to_json(x, field: Field):
    if field is Field.RATIONAL:
        return str(Fraction(x))
    if field is Field.CRATIONAL:
        x = QQi(x) if not isinstance(x, QQi) else x
        return {"re": str(x.re), "im": str(x.im)}
    x = to_complex(x)
    return [x.real, x.imag]


def scalar_from_json(obj, field: Field):
    try:
        if field is Field.RATIONAL:
            if isinstance(obj, (str, int)):
                return Fraction(obj)
        elif field is Field.CRATIONAL:
            if isinstance(obj, dict):
                return QQi(Fraction(obj.get("re", 0)), Fraction(obj.get("im", 0)))
            if isinstance(obj, (str, int)):
                return QQi(Fraction(obj))
        else:
            if isinstance(obj, list) and len(obj) == 2:
                return complex(float(obj[0]), float(obj[1]))
            if isinstance(obj, (int, float)):
                return complex(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise FieldMismatch("bad %s scalar %r" % (field.value, obj)) from exc
    raise FieldMismatch("bad %s scalar %r" % (field.value, obj))


def near(x, y, tol: float) -> bool:
    """|x - y| <= tol after embedding into complex floats."""
    return abs(to_complex(x) - to_complex(y)) <= tol


def phase_unit(x: complex) -> complex:
    """x/|x| (1 for x = 0)."""
    r = abs(x)
    return x / r if r else complex(1)


def root_of_unity(n: int, k: int, radius: float = 1.0, offset: float = 0.0) -> complex:
    return radius * cmath.exp(complex(0, (2 * cmath.pi * k + offset) / n))
