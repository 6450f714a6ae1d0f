"""Riemann-Roch numerology on a polarized abelian surface.

On an abelian surface chi(L) = L^2 / 2, and a curve C has arithmetic genus
C^2 / 2 + 1 by adjunction (the canonical class is trivial).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidLattice, OutOfRange, OutOfRegime
from .lattice import DivisorClass, GramMatrix, _check, inner_product, ordered_values, signature


def _require_int(name, value):
    if isinstance(value, bool) or int(value) != value:
        raise OutOfRange(f"{name} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class PolarizedSurface:
    """Neron-Severi lattice of an abelian surface with a polarization class ``h``.

    Ampleness of ``h`` is the caller's assertion; only h^2 > 0 and the
    Hodge index signature (1, rank - 1) are checked.
    """

    ns: GramMatrix
    h: DivisorClass

    def __post_init__(self):
        object.__setattr__(self, "h", _check(self.ns, self.h))
        if not self.ns.is_even:
            raise InvalidLattice("Neron-Severi lattice of an abelian surface must be even")
        pos, neg = signature(self.ns)
        if (pos, neg) != (1, self.ns.rank - 1):
            raise InvalidLattice(f"signature ({pos}, {neg}) violates the Hodge index theorem")
        if inner_product(self.ns, self.h, self.h) <= 0:
            raise InvalidLattice("polarization must have positive square")

    @classmethod
    def principal(cls) -> "PolarizedSurface":
        """Picard number one, principal polarization H with H^2 = 2."""
        return cls(GramMatrix(((2,),)), (1,))

    @classmethod
    def from_gram(cls, ns: GramMatrix) -> "PolarizedSurface":
        # The positive cone is open and nonempty under signature (1, r-1), so
        # growing boxes eventually contain a class of positive square.
        pos, neg = signature(ns)
        if (pos, neg) != (1, ns.rank - 1):
            raise InvalidLattice(f"signature ({pos}, {neg}) violates the Hodge index theorem")
        radius = 1
        while True:
            for v in _box(ns.rank, radius):
                if inner_product(ns, v, v) > 0:
                    return cls(ns, v)
            radius *= 2

    @property
    def rho(self) -> int:
        return self.ns.rank

    def square(self, v: Sequence[int]) -> int:
        return inner_product(self.ns, v, v)


def _box(rank, radius):
    return itertools.product(ordered_values(radius), repeat=rank)


@dataclass(frozen=True)
class CurveClass:
    """Class of a curve on ``surface``; effectiveness is assumed, not checked."""

    surface: PolarizedSurface
    c: DivisorClass

    def __post_init__(self):
        object.__setattr__(self, "c", _check(self.surface.ns, self.c))
        if self.square < 0:
            raise OutOfRange(f"curve class has negative self-intersection {self.square}")

    @property
    def square(self) -> int:
        return self.surface.square(self.c)


def euler_characteristic(surface: PolarizedSurface, L: Sequence[int]) -> int:
    return surface.square(L) // 2


def genus(curve: CurveClass) -> int:
    return curve.square // 2 + 1


def linear_system_dim(curve: CurveClass) -> int:
    """Dimension of |C|, i.e. chi(O_A(C)) - 1.

    Needs genus > 1 so that the higher cohomology of O_A(C) vanishes.
    """
    g = genus(curve)
    if g <= 1:
        raise OutOfRegime(f"genus {g} <= 1: higher cohomology need not vanish")
    return euler_characteristic(curve.surface, curve.c) - 1


def incidence_dimension_count(n: int) -> tuple[int, int, bool]:
    """(dim of length-n subschemes lying on a curve of |C|, dim A^[n], generic one is free).

    |C| has dimension n - 1 and each curve contributes an n-dimensional
    family of its own length-n subschemes.
    """
    n = _require_int("n", n)
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    family = (n - 1) + n
    hilbert = 2 * n
    return family, hilbert, family < hilbert


def curve_for_kummer_principal(n: int) -> Optional[int]:
    """m with m^2 = n, so that mH has genus n + 1, or None if n is not a square."""
    n = _require_int("n", n)
    if n <= 2:
        raise OutOfRange(f"the fibration theorem needs n > 2, got {n}")
    m = math.isqrt(n)
    return m if m * m == n else None
