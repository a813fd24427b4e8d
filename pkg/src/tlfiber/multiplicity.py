"""Jordan multiplicity data.

A MultiplicityFunction records, per eigenvalue z, the tuple
(mu^(1)(z), mu^(2)(z), ...) counting Jordan blocks of each size. It is the
complete conjugation invariant this package classifies by.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import scalars
from .errors import MathError


@dataclass(frozen=True)
class MultiplicityFunction:
    entries: tuple = field(default=())

    def __post_init__(self):
        norm = []
        for z, sizes in self.entries:
            if scalars.is_zero(z):
                raise MathError("eigenvalue 0 admits no multiplicity data")
            sizes = list(sizes)
            if any((not isinstance(k, int)) or k < 0 for k in sizes):
                raise ValueError("block counts must be nonnegative integers")
            while sizes and sizes[-1] == 0:
                sizes.pop()
            if sizes:
                norm.append((z, tuple(sizes)))
        norm.sort(key=lambda zs: scalars.sort_key(zs[0]))
        for (z1, _), (z2, _) in zip(norm, norm[1:]):
            if z1 == z2:
                raise ValueError("duplicate eigenvalue %s" % (z1,))
        object.__setattr__(self, "entries", tuple(norm))

    @classmethod
    def of(cls, mapping) -> "MultiplicityFunction":
        items = mapping.items() if hasattr(mapping, "items") else mapping
        return cls(tuple((z, tuple(sizes)) for z, sizes in items))

    @property
    def support(self) -> tuple:
        return tuple(z for z, _ in self.entries)

    def sizes(self, z) -> tuple:
        for w, sizes in self.entries:
            if w == z:
                return sizes
        return ()

    def count(self, z) -> int:
        """|mu(z)|: algebraic multiplicity, sum of k * mu^(k)(z)."""
        return sum(k * m for k, m in enumerate(self.sizes(z), start=1))

    def total(self) -> int:
        """Dimension of any matrix realizing this data."""
        return sum(self.count(z) for z in self.support)

    def near_equal(self, other: "MultiplicityFunction", radius: float) -> bool:
        """Entrywise match with eigenvalues compared up to radius."""
        if len(self.entries) != len(other.entries):
            return False
        return all(
            s1 == s2 and scalars.near(z1, z2, radius)
            for (z1, s1), (z2, s2) in zip(self.entries, other.entries)
        )

    def __str__(self):
        if not self.entries:
            return "mu{}"
        parts = ("%s: %s" % (scalars.format_scalar(z), list(s)) for z, s in self.entries)
        return "mu{%s}" % ", ".join(parts)
