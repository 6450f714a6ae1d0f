"""Even integral lattices: Gram matrices, exact signature, isotropic search.

All arithmetic is done with Python ints (and :class:`fractions.Fraction`
during elimination), so there is no overflow anywhere.

A divisor class is an integer coordinate tuple in the basis of its lattice.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import DegenerateLattice, DimensionMismatch, InvalidLattice, OutOfRange, ZeroVector

DivisorClass = tuple[int, ...]


def as_class(v: Sequence[int]) -> DivisorClass:
    out = []
    for x in v:
        if isinstance(x, bool) or int(x) != x:
            raise DimensionMismatch(f"non-integer coordinate {x!r}")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class GramMatrix:
    """Square symmetric integer matrix.

    Evenness and nondegeneracy are not enforced at construction; operations
    that need them check and raise :class:`InvalidLattice`.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(as_class(row) for row in self.entries)
        r = len(rows)
        if r == 0:
            raise InvalidLattice("empty Gram matrix")
        for row in rows:
            if len(row) != r:
                raise InvalidLattice(f"Gram matrix is not square: row of length {len(row)} in rank {r}")
        for i in range(r):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidLattice(f"Gram matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def parse(cls, text: str) -> "GramMatrix":
        """Parse ``"2,1;1,-2"`` (rows split by ';', entries by ',')."""
        try:
            rows = [[int(x) for x in row.split(",")] for row in text.strip().split(";")]
        except ValueError as exc:
            raise InvalidLattice(f"cannot parse Gram matrix {text!r}") from exc
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def diagonal(cls, *diag: int) -> "GramMatrix":
        r = len(diag)
        return cls(tuple(tuple(diag[i] if i == j else 0 for j in range(r)) for i in range(r)))

    def direct_sum(self, other: "GramMatrix") -> "GramMatrix":
        a, b = self.rank, other.rank
        rows = [row + (0,) * b for row in self.entries]
        rows += [(0,) * a + row for row in other.entries]
        return GramMatrix(tuple(rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def is_even(self) -> bool:
        return all(self.entries[i][i] % 2 == 0 for i in range(self.rank))

    def determinant(self) -> int:
        # Bareiss fraction-free elimination; every division is exact.
        m = [list(row) for row in self.entries]
        n = self.rank
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.entries)


def _check(g: GramMatrix, v: Sequence[int]) -> DivisorClass:
    v = as_class(v)
    if len(v) != g.rank:
        raise DimensionMismatch(f"vector of length {len(v)} in a lattice of rank {g.rank}")
    return v


def inner_product(g: GramMatrix, u: Sequence[int], v: Sequence[int]) -> int:
    u, v = _check(g, u), _check(g, v)
    return sum(ui * gij * vj for ui, row in zip(u, g.entries) for gij, vj in zip(row, v))


def signature(g: GramMatrix) -> tuple[int, int]:
    """Return ``(positives, negatives)`` of a nondegenerate symmetric form.

    Symmetric Gaussian elimination over the rationals. When every remaining
    diagonal entry vanishes, the basis vector e_i is replaced by e_i + e_j
    for some nonzero off-diagonal entry, which makes the new pivot 2 g_ij.
    """
    m = [[Fraction(x) for x in row] for row in g.entries]
    pos = neg = 0
    while m:
        n = len(m)
        k = next((i for i in range(n) if m[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
            if pair is None:
                raise DegenerateLattice(f"form is degenerate (rank deficiency {n})")
            i, j = pair
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            k = i
        pivot = m[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        m = [[m[r][c] - m[r][k] * m[k][c] / pivot for c in rest] for r in rest]
    return pos, neg


def primitive_part(v: Sequence[int]) -> DivisorClass:
    v = as_class(v)
    d = math.gcd(*v)
    if d == 0:
        raise ZeroVector("the zero vector has no primitive part")
    return tuple(x // d for x in v)


class OutcomeKind(str, enum.Enum):
    FOUND_WITNESS = "FoundWitness"
    PROVABLY_NONE = "ProvablyNone"
    EXISTS_NO_WITNESS = "ExistsNoWitness"
    UNKNOWN_BELOW_BOUND = "UnknownBelowBound"


@dataclass(frozen=True)
class SearchOutcome:
    kind: OutcomeKind
    witness: Optional[object]
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "kind", OutcomeKind(self.kind))
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        if (self.kind is OutcomeKind.FOUND_WITNESS) != (self.witness is not None):
            raise ValueError(f"{self.kind.value} with witness={self.witness!r}")

    @property
    def exists(self) -> Optional[bool]:
        """Whether a nonzero isotropic vector exists, or ``None`` if undecided."""
        if self.kind in (OutcomeKind.FOUND_WITNESS, OutcomeKind.EXISTS_NO_WITNESS):
            return True
        if self.kind is OutcomeKind.PROVABLY_NONE:
            return False
        return None

    def to_json(self) -> dict:
        w = self.witness
        if w is not None and not isinstance(w, tuple):
            w = w.coords
        return {"kind": self.kind.value, "witness": list(w) if w is not None else None, "bound": self.bound}

    @classmethod
    def from_json(cls, obj: dict) -> "SearchOutcome":
        w = obj["witness"]
        return cls(OutcomeKind(obj["kind"]), tuple(w) if w is not None else None, obj["bound"])


def ordered_values(bound: int) -> list[int]:
    """0, 1, -1, 2, -2, ..., bound, -bound: the per-coordinate search order."""
    out = [0]
    for k in range(1, bound + 1):
        out += [k, -k]
    return out


def _order_key(x: int) -> tuple[int, bool]:
    return abs(x), x < 0


def _prefixes(length: int, bound: int, leading_free: bool) -> Iterator[tuple[int, ...]]:
    # Yields prefixes in search order. Unless leading_free, the first nonzero
    # entry must be positive; an all-zero prefix is allowed and comes first.
    if length == 0:
        yield ()
        return
    if leading_free:
        yield from itertools.product(ordered_values(bound), repeat=length)
        return
    for rest in _prefixes(length - 1, bound, False):
        yield (0,) + rest
    for x in range(1, bound + 1):
        for rest in itertools.product(ordered_values(bound), repeat=length - 1):
            yield (x,) + rest


def _last_coordinate_roots(a: int, b: int, c: int, bound: int) -> list[int]:
    """Integer t with |t| <= bound and a t^2 + 2 b t + c = 0, in search order."""
    if a != 0:
        disc = b * b - a * c
        if disc < 0:
            return []
        s = math.isqrt(disc)
        if s * s != disc:
            return []
        roots = {(-b + e) // a for e in (s, -s) if (-b + e) % a == 0}
    elif b != 0:
        roots = {-c // (2 * b)} if c % (2 * b) == 0 else set()
    else:
        return ordered_values(bound) if c == 0 else []
    return sorted((t for t in roots if abs(t) <= bound), key=_order_key)


def _first_witness(g: GramMatrix, bound: int) -> Optional[DivisorClass]:
    r = g.rank
    e = g.entries
    a = e[r - 1][r - 1]
    for p in _prefixes(r - 1, bound, False):
        b = sum(e[r - 1][j] * p[j] for j in range(r - 1))
        c = sum(p[i] * e[i][j] * p[j] for i in range(r - 1) for j in range(r - 1))
        prefix_zero = not any(p)
        for t in _last_coordinate_roots(a, b, c, bound):
            if prefix_zero and t <= 0:
                continue
            v = p + (t,)
            if math.gcd(*v) == 1:
                return v
    return None


def isotropic_search(g: GramMatrix, bound: int) -> SearchOutcome:
    """Look for a primitive nonzero v with v.g.v = 0 and sup-norm <= bound.

    Candidates are taken lexicographically, with each coordinate ordered
    0, 1, -1, 2, -2, ..., and the first nonzero coordinate positive. The
    first hit is returned as the witness. Without a hit the verdict comes
    from the decision tiers:

    * definite forms (every rank-1 form is one): ``ProvablyNone``
    * rank 2: isotropic iff -det is a perfect square; ``ProvablyNone`` or
      ``ExistsNoWitness``
    * indefinite rank >= 5 (Meyer): ``ExistsNoWitness``
    * indefinite ranks 3 and 4: ``UnknownBelowBound``
    """
    if isinstance(bound, bool) or int(bound) != bound or bound < 1:
        raise OutOfRange(f"bound must be a positive integer, got {bound!r}")
    bound = int(bound)
    if not g.is_even:
        raise InvalidLattice("isotropic search requires an even lattice")
    if g.determinant() == 0:
        raise InvalidLattice("isotropic search requires a nondegenerate lattice")
    pos, neg = signature(g)
    if pos == 0 or neg == 0:
        return SearchOutcome(OutcomeKind.PROVABLY_NONE, None, bound)
    if g.rank == 2:
        minus_det = -g.determinant()
        root = math.isqrt(minus_det)
        if root * root != minus_det:
            return SearchOutcome(OutcomeKind.PROVABLY_NONE, None, bound)
    w = _first_witness(g, bound)
    if w is not None:
        return SearchOutcome(OutcomeKind.FOUND_WITNESS, w, bound)
    if g.rank == 2 or g.rank >= 5:
        return SearchOutcome(OutcomeKind.EXISTS_NO_WITNESS, None, bound)
    return SearchOutcome(OutcomeKind.UNKNOWN_BELOW_BOUND, None, bound)
