"""Beauville-Bogomolov lattice NS(K^n A) = NS(A) + Z eps, with q(eps) = -2n.

The decomposition is orthogonal and q restricts to the intersection form on
NS(A). eps is always the last basis vector of the derived lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConsistencyFailure, DimensionMismatch, OutOfRange
from .lattice import DivisorClass, GramMatrix, OutcomeKind, SearchOutcome, as_class, inner_product, isotropic_search
from .surface import PolarizedSurface, _require_int


@dataclass(frozen=True)
class KummerLattice:
    surface: PolarizedSurface
    n: int

    def __post_init__(self):
        n = _require_int("n", self.n)
        if n < 2:
            raise OutOfRange(f"K^n A needs n >= 2, got {n}")
        object.__setattr__(self, "n", n)

    @classmethod
    def principal(cls, n: int) -> "KummerLattice":
        return cls(PolarizedSurface.principal(), n)

    @property
    def gram(self) -> GramMatrix:
        return self.surface.ns.direct_sum(GramMatrix(((-2 * self.n,),)))

    @property
    def rank(self) -> int:
        return self.surface.rho + 1

    @property
    def epsilon(self) -> "KummerClass":
        return KummerClass((0,) * self.surface.rho, 1)

    @property
    def polarization(self) -> "KummerClass":
        return KummerClass(self.surface.h, 0)


@dataclass(frozen=True)
class KummerClass:
    """d + s*eps with d in NS(A)."""

    d: DivisorClass
    s: int

    def __post_init__(self):
        object.__setattr__(self, "d", as_class(self.d))
        object.__setattr__(self, "s", int(self.s))

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "KummerClass":
        coords = as_class(coords)
        if not coords:
            raise DimensionMismatch("need at least the eps coefficient")
        return cls(coords[:-1], coords[-1])

    @property
    def coords(self) -> DivisorClass:
        return self.d + (self.s,)

    def __mul__(self, t: int) -> "KummerClass":
        return KummerClass(tuple(t * x for x in self.d), t * self.s)

    __rmul__ = __mul__


def _fits(k: KummerLattice, x: KummerClass):
    if len(x.d) != k.surface.rho:
        raise DimensionMismatch(f"divisor part of length {len(x.d)} on a surface of Picard number {k.surface.rho}")


def bb_pairing(k: KummerLattice, x: KummerClass, y: KummerClass) -> int:
    _fits(k, x)
    _fits(k, y)
    return inner_product(k.surface.ns, x.d, y.d) - 2 * k.n * x.s * y.s


def bb_square(k: KummerLattice, x: KummerClass) -> int:
    return bb_pairing(k, x, x)


def square_zero_class_exists(k: KummerLattice, bound: int) -> SearchOutcome:
    """Isotropic search on the derived lattice; a witness comes back as a :class:`KummerClass`."""
    out = isotropic_search(k.gram, bound)
    if out.witness is None:
        return out
    return SearchOutcome(out.kind, KummerClass.from_coords(out.witness), out.bound)


@dataclass(frozen=True)
class FibrationVerdict:
    n: int
    fibration_exists: bool
    m: Optional[int]
    base_dim: int

    def to_json(self) -> dict:
        return {"n": self.n, "fibration_exists": self.fibration_exists, "m": self.m, "base_dim": self.base_dim}


def fibration_check_principal(n: int) -> FibrationVerdict:
    """Verdict for Picard number one with a principal polarization.

    There K^n A carries a rational Lagrangian fibration over P^(n-1) iff n
    is a perfect square m^2; the curve mH then has genus n + 1.
    """
    n = _require_int("n", n)
    if n <= 2:
        raise OutOfRange(f"the equivalence is only established for n > 2, got {n}")
    m = math.isqrt(n)
    exists = m * m == n
    return FibrationVerdict(n, exists, m if exists else None, n - 1)


@dataclass(frozen=True)
class SurveyRow:
    n: int
    exists: bool
    m: Optional[int]
    witness: Optional[KummerClass]
    outcome_kind: Optional[OutcomeKind]

    COLUMNS = ("n", "exists", "m", "witness", "outcome_kind")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "exists": self.exists,
            "m": self.m,
            "witness": list(self.witness.coords) if self.witness is not None else None,
            "outcome_kind": self.outcome_kind.value if self.outcome_kind is not None else None,
        }


def survey_row(n: int, cross_check_bound: int, cross_check: bool) -> SurveyRow:
    verdict = fibration_check_principal(n)
    if not cross_check:
        witness = None
        if verdict.fibration_exists:
            k = KummerLattice.principal(n)
            witness = KummerClass((verdict.m,), 1)
            if bb_square(k, witness) != 0:
                raise ConsistencyFailure(f"n={n}: predicted class {witness.coords} is not isotropic")
        return SurveyRow(n, verdict.fibration_exists, verdict.m, witness, None)

    k = KummerLattice.principal(n)
    out = square_zero_class_exists(k, cross_check_bound)
    if out.exists is None or out.exists != verdict.fibration_exists:
        raise ConsistencyFailure(
            f"n={n}: perfect-square verdict {verdict.fibration_exists} but lattice search gave {out.kind.value}"
        )
    if out.witness is not None and bb_square(k, out.witness) != 0:
        raise ConsistencyFailure(f"n={n}: witness {out.witness.coords} is not isotropic")
    return SurveyRow(n, verdict.fibration_exists, verdict.m, out.witness, out.kind)


def survey_principal(n_max: int, cross_check_bound: int = 1000, cross_check_limit: int = 500) -> list[SurveyRow]:
    """One row per n in 3..n_max, ordered by n.

    Rows with n <= ``cross_check_limit`` also run the lattice search and
    raise :class:`ConsistencyFailure` if it contradicts the square test.
    """
    n_max = _require_int("n_max", n_max)
    if n_max < 3:
        raise OutOfRange(f"survey needs n_max >= 3, got {n_max}")
    if cross_check_bound < 1:
        raise OutOfRange("cross-check bound must be positive")
    return [survey_row(n, cross_check_bound, n <= cross_check_limit) for n in range(3, n_max + 1)]
