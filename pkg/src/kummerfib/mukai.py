"""Mukai vectors on an abelian surface and their Fourier-Mukai transforms.

A Mukai vector is (r, c1, chi) = (ch^0, ch^1, ch^2). NS(A) and NS(A^) share
one coordinate basis, with a class [C] standing for its dual [C^] as well.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, GenusMismatch, InvalidDegree, OutOfRange, OutOfRegimeWarning
from .lattice import DivisorClass, GramMatrix, as_class, inner_product
from .surface import CurveClass, euler_characteristic, genus


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c1: DivisorClass
    chi: int

    def __post_init__(self):
        object.__setattr__(self, "c1", as_class(self.c1))
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "chi", int(self.chi))

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        if len(self.c1) != len(other.c1):
            raise DimensionMismatch("Mukai vectors over lattices of different rank")
        return MukaiVector(self.r + other.r, tuple(a + b for a, b in zip(self.c1, other.c1)), self.chi + other.chi)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, tuple(-a for a in self.c1), -self.chi)

    def to_json(self) -> dict:
        return {"r": self.r, "c1": list(self.c1), "chi": self.chi}

    @classmethod
    def from_json(cls, obj: dict) -> "MukaiVector":
        return cls(obj["r"], tuple(obj["c1"]), obj["chi"])


def _wit(i) -> int:
    if isinstance(i, bool) or i not in (0, 1, 2):
        raise OutOfRange(f"WIT index on a surface is 0, 1 or 2, got {i!r}")
    return int(i)


def fm_transform(v: MukaiVector, i: int) -> MukaiVector:
    """Chern character of the transform of a WIT sheaf of index ``i``.

    ch^p of the transform is (-1)^(i+p) ch^(2-p) of the sheaf.
    """
    sign = -1 if _wit(i) % 2 else 1
    return MukaiVector(sign * v.chi, tuple(-sign * a for a in v.c1), sign * v.r)


def fm_double_transform(v: MukaiVector, i: int) -> MukaiVector:
    # The transform of a WIT-i sheaf is WIT of index 2 - i; (-1)^* is trivial on even cohomology.
    return fm_transform(fm_transform(v, i), 2 - _wit(i))


def mukai_pairing(v: MukaiVector, w: MukaiVector, g: GramMatrix) -> int:
    return inner_product(g, v.c1, w.c1) - v.r * w.chi - w.r * v.chi


def kummer_fiber_dim(v: MukaiVector, g: GramMatrix) -> int:
    """Dimension <v, v> - 2 of a fibre of the Albanese map on M_A(v).

    Outside the regime <v, v> >= 6 an :class:`OutOfRegimeWarning` is issued
    and the formula value is still returned.
    """
    square = mukai_pairing(v, v, g)
    if square < 6:
        warnings.warn(
            f"<v,v> = {square} < 6: moduli space has dimension < 8, outside the known regime",
            OutOfRegimeWarning,
            stacklevel=2,
        )
    return square - 2


def slope_destabilizes(sub_deg: int, sub_chi: int, whole_deg: int, whole_chi: int) -> bool:
    """True iff chi/deg of the subsheaf is >= that of the whole sheaf.

    Equality counts as destabilizing, so only strict stability survives.
    """
    if sub_deg <= 0 or whole_deg <= 0:
        raise InvalidDegree(f"degrees must be positive, got {sub_deg} and {whole_deg}")
    return sub_chi * whole_deg >= whole_chi * sub_deg


def generic_ideal_twist_invariants(curve: CurveClass, n: int) -> tuple[MukaiVector, int]:
    """Mukai vector of I_xi(C) for generic xi of length n, and its generic WIT index 1."""
    if curve.square != 2 * n:
        raise GenusMismatch(f"need C^2 = 2n = {2 * n} (genus n + 1), got genus {genus(curve)}")
    chi = euler_characteristic(curve.surface, curve.c) - n
    return MukaiVector(1, curve.c, chi), 1
