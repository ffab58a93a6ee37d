"""Hodge diamonds, Hochschild numbers and the bookkeeping around them.

Convention: ``h(p, q) = dim H^q(X, Omega^p)``.  Under HKR,
``HH_k = sum over q - p = k of h(p, q)`` (the two index conventions agree on
symmetric diamonds, which is all this module accepts).

The blow-up correction handles only isolated C^4/{+-1} points on a fourfold,
each resolved by one exceptional P^3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidDiamond,
    NegativeDimension,
    NotPalindromic,
    OddDegreePresent,
    SupportOutOfRange,
    WrongDimension,
)


@dataclass(frozen=True)
class HodgeDiamond:
    d: int
    h: tuple  # h[p][q]

    def __post_init__(self):
        d = self.d
        rows = tuple(tuple(int(v) for v in row) for row in self.h)
        if d < 0 or len(rows) != d + 1 or any(len(r) != d + 1 for r in rows):
            raise InvalidDiamond(f"expected a {d + 1}x{d + 1} table of Hodge numbers")
        for p in range(d + 1):
            for q in range(d + 1):
                v = rows[p][q]
                if v < 0:
                    raise InvalidDiamond(f"h({p},{q}) = {v} is negative")
                if v != rows[q][p]:
                    raise InvalidDiamond(f"h({p},{q}) != h({q},{p})")
                if v != rows[d - p][d - q]:
                    raise InvalidDiamond(f"h({p},{q}) != h({d - p},{d - q})")
        object.__setattr__(self, "h", rows)

    def __call__(self, p, q):
        return self.h[p][q]

    @classmethod
    def from_upper_half(cls, rows):
        """Build from rows ``r = 0..d`` listing ``h(r, 0), h(r-1, 1), ..., h(0, r)``.

        The lower half follows from Serre symmetry.
        """
        rows = [list(r) for r in rows]
        d = len(rows) - 1
        if d < 0 or any(len(r) != i + 1 for i, r in enumerate(rows)):
            raise InvalidDiamond("upper half needs rows of lengths 1, 2, ..., d+1")
        table = [[0] * (d + 1) for _ in range(d + 1)]
        for r, row in enumerate(rows):
            for j, v in enumerate(row):
                p, q = r - j, j
                table[p][q] = v
                table[d - p][d - q] = v
        return cls(d, table)

    @classmethod
    def from_text(cls, text):
        """Parse the pyramid layout: the upper half (d+1 rows) or the full diamond (2d+1 rows)."""
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                rows.append([int(tok.rstrip(".")) for tok in line.split()])
            except ValueError as exc:
                raise InvalidDiamond(f"bad diamond row {line!r}") from exc
        lengths = [len(r) for r in rows]
        m = len(rows)
        if m % 2 == 1 and m > 1 and lengths == [min(i, m - 1 - i) + 1 for i in range(m)]:
            full = rows
            diamond = cls.from_upper_half(rows[: m // 2 + 1])
            if diamond.full_rows() != full:
                raise InvalidDiamond("lower half does not match Serre symmetry")
            return diamond
        return cls.from_upper_half(rows)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["d"]), obj["h"])

    def to_json(self):
        return {"d": self.d, "h": [list(r) for r in self.h]}

    def upper_half_rows(self):
        return [[self.h[r - j][j] for j in range(r + 1)] for r in range(self.d + 1)]

    def full_rows(self):
        d = self.d
        return [
            [self.h[s - j][j] for j in range(max(0, s - d), min(s, d) + 1)]
            for s in range(2 * d + 1)
        ]

    def to_text(self):
        return "\n".join(" ".join(map(str, r)) for r in self.upper_half_rows()) + "\n"

    def pretty(self):
        rows = self.full_rows()
        width = max(len(str(v)) for r in rows for v in r) + 2
        span = width * (self.d + 1)
        lines = []
        for r in rows:
            cells = "".join(str(v).center(width) for v in r)
            lines.append(cells.center(span).rstrip())
        return "\n".join(lines)

    def betti(self):
        d = self.d
        return [
            sum(self.h[p][k - p] for p in range(max(0, k - d), min(k, d) + 1))
            for k in range(2 * d + 1)
        ]

    def euler(self):
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))


BUILTIN_DIAMONDS = {
    "point": HodgeDiamond(0, [[1]]),
    "k3": HodgeDiamond.from_upper_half([[1], [0, 0], [1, 20, 1]]),
    "prymian_P0": HodgeDiamond.from_upper_half(
        [[1], [0, 0], [1, 14, 1], [0, 0, 0, 0], [1, 14, 148, 14, 1]]
    ),
    "prymian_P0_resolved": HodgeDiamond.from_upper_half(
        [[1], [0, 0], [1, 42, 1], [0, 0, 0, 0], [1, 14, 176, 14, 1]]
    ),
}


def builtin_diamond(name):
    try:
        return BUILTIN_DIAMONDS[name]
    except KeyError:
        raise KeyError(f"unknown built-in diamond {name!r}; have {sorted(BUILTIN_DIAMONDS)}") from None


def blow_up_opc4_points(diamond, count):
    """Blow up ``count`` isolated C^4/{+-1} points of a fourfold.

    Each exceptional P^3 adds one class in bidegrees (1,1), (2,2), (3,3).
    """
    if diamond.d != 4:
        raise WrongDimension(f"blow-up correction needs a fourfold, got dimension {diamond.d}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    table = [list(r) for r in diamond.h]
    for j in (1, 2, 3):
        table[j][j] += count
    return HodgeDiamond(4, table)


# -- Hochschild numbers -------------------------------------------------------

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"


@dataclass(frozen=True)
class HochschildNumbers:
    """Hochschild (co)homology dimensions.

    ``values[i]`` is the dimension in degree ``lo + i`` where ``lo = -d`` for
    homology and ``0`` for cohomology.
    """

    variant: str
    d: int
    values: tuple

    def __post_init__(self):
        if self.variant not in (HOMOLOGY, COHOMOLOGY):
            raise ValueError(f"variant must be {HOMOLOGY!r} or {COHOMOLOGY!r}")
        values = tuple(int(v) for v in self.values)
        if self.d < 0 or len(values) != 2 * self.d + 1:
            raise ValueError(f"expected {2 * self.d + 1} values for d = {self.d}")
        if any(v < 0 for v in values):
            raise NegativeDimension(f"negative Hochschild number in {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def homology(cls, dims, d=None):
        """From a mapping ``k -> dim`` with k in [-d, d]."""
        dims = dict(dims)
        if d is None:
            d = max((abs(k) for k, v in dims.items() if v), default=0)
        if any(v and abs(k) > d for k, v in dims.items()):
            raise SupportOutOfRange(f"homology support outside [-{d}, {d}]")
        return cls(HOMOLOGY, d, tuple(dims.get(k, 0) for k in range(-d, d + 1)))

    @classmethod
    def cohomology(cls, dims, d=None):
        """From a sequence (degree 0 first) or a mapping ``k -> dim`` with k in [0, 2d]."""
        if not isinstance(dims, dict):
            dims = dict(enumerate(dims))
        if d is None:
            top = max((k for k, v in dims.items() if v), default=0)
            d = (top + 1) // 2
        if any(v and not 0 <= k <= 2 * d for k, v in dims.items()):
            raise SupportOutOfRange(f"cohomology support outside [0, {2 * d}]")
        return cls(COHOMOLOGY, d, tuple(dims.get(k, 0) for k in range(2 * d + 1)))

    @property
    def lo(self):
        return -self.d if self.variant == HOMOLOGY else 0

    @property
    def degrees(self):
        return range(self.lo, self.lo + len(self.values))

    def __getitem__(self, k):
        i = k - self.lo
        return self.values[i] if 0 <= i < len(self.values) else 0

    def as_dict(self):
        return {k: v for k, v in zip(self.degrees, self.values)}

    def nonzero(self):
        return {k: v for k, v in self.as_dict().items() if v}

    def euler(self):
        return sum(-v if k % 2 else v for k, v in self.as_dict().items())

    def is_symmetric(self):
        if self.variant == HOMOLOGY:
            return all(self[k] == self[-k] for k in self.degrees)
        return self.values == self.values[::-1]

    def to_json(self):
        return {"variant": self.variant, "d": self.d, "dims": {str(k): v for k, v in self.as_dict().items()}}


def hkr_homology(diamond):
    """hh_k = sum of h(p, q) over q - p = k."""
    d = diamond.d
    vals = [0] * (2 * d + 1)
    for p in range(d + 1):
        for q in range(d + 1):
            vals[q - p + d] += diamond.h[p][q]
    return HochschildNumbers(HOMOLOGY, d, vals)


def sod_subtract_exceptional(hh, count):
    """Remove ``count`` exceptional objects; each carries one dimension in degree 0."""
    if hh.variant != HOMOLOGY:
        raise ValueError("expected Hochschild homology")
    if count < 0:
        raise ValueError("count must be nonnegative")
    if hh[0] < count:
        raise NegativeDimension(f"hh_0 = {hh[0]} is smaller than {count}")
    vals = list(hh.values)
    vals[hh.d] -= count
    return HochschildNumbers(HOMOLOGY, hh.d, vals)


def serre_shift_cohomology(hh, d):
    """For a Calabi-Yau category of dimension d: hh^k = hh_{k-d}, k in [0, 2d]."""
    if hh.variant != HOMOLOGY:
        raise ValueError("expected Hochschild homology")
    if any(v and abs(k) > d for k, v in hh.as_dict().items()):
        raise SupportOutOfRange(f"homology support {sorted(hh.nonzero())} not within [-{d}, {d}]")
    return HochschildNumbers(COHOMOLOGY, d, tuple(hh[k - d] for k in range(2 * d + 1)))


@dataclass(frozen=True)
class SalamonResult:
    holds: bool
    lhs: Fraction
    rhs: Fraction


def salamon_check(hh, r):
    """Compare sum_{j=1}^{2r} (-1)^j (3j^2 - r) hh^{2r-j} with (r/2) hh^{2r}, exactly.

    ``hh`` is cohomological, degree 0 first; degrees beyond 4r must vanish.
    """
    if r < 1:
        raise ValueError("r must be positive")
    vals = list(hh.values) if isinstance(hh, HochschildNumbers) else [int(v) for v in hh]
    if any(v for v in vals[4 * r + 1:]):
        raise SupportOutOfRange(f"Hochschild numbers beyond degree {4 * r}")
    vals += [0] * (4 * r + 1 - len(vals))
    lhs = Fraction(sum((-1) ** j * (3 * j * j - r) * vals[2 * r - j] for j in range(1, 2 * r + 1)))
    rhs = Fraction(r, 2) * vals[2 * r]
    return SalamonResult(lhs == rhs, lhs, rhs)


GUAN_MODES = ("paper_literal", "inclusive")


def guan_b2_admissible(b2, mode="paper_literal"):
    """Second Betti numbers allowed for a hyper-Kaehler fourfold.

    ``paper_literal``: b2 < 8 or b2 == 23.  ``inclusive``: b2 <= 8 or b2 == 23.
    """
    if b2 < 0:
        raise ValueError("b2 must be nonnegative")
    if mode == "paper_literal":
        return b2 < 8 or b2 == 23
    if mode == "inclusive":
        return b2 <= 8 or b2 == 23
    raise ValueError(f"mode must be one of {GUAN_MODES}")


def hk4_betti_from_hochschild(hh):
    """Betti numbers b_0..b_8 of a hyper-Kaehler fourfold with these Hochschild cohomology numbers.

    Accepts the full list hh^0..hh^8 (must be palindromic) or its lower half
    hh^0..hh^m with m <= 4, zero-padded to hh^4 and mirrored.
    """
    vals = list(hh.values) if isinstance(hh, HochschildNumbers) else [int(v) for v in hh]
    if len(vals) <= 5:
        vals += [0] * (5 - len(vals))
        vals = vals + vals[-2::-1]
    if len(vals) != 9 or vals != vals[::-1]:
        raise NotPalindromic(f"expected a palindromic list of 9 numbers, got {vals}")
    odd = [k for k in range(1, 9, 2) if vals[k]]
    if odd:
        raise OddDegreePresent(f"nonzero odd-degree entries at {odd}")
    b = [0] * 9
    b[0] = b[8] = vals[0]
    b[2] = b[6] = vals[2]
    b[4] = vals[4]
    return tuple(b)


@dataclass(frozen=True)
class PrymianPipeline:
    singular: HodgeDiamond
    resolved: HodgeDiamond
    hh_resolved: HochschildNumbers
    hh_category: HochschildNumbers
    hh_cohomology: HochschildNumbers
    salamon: SalamonResult
    betti: tuple


def prymian_pipeline(diamond=None, singular_points=28, exceptional_objects=56):
    """Blow up, apply HKR, split off the exceptional objects, shift by Serre.

    Defaults reproduce the resolved relative compactified Prymian: 28 points,
    two exceptional objects per exceptional divisor.
    """
    base = diamond if diamond is not None else BUILTIN_DIAMONDS["prymian_P0"]
    resolved = blow_up_opc4_points(base, singular_points)
    hh = hkr_homology(resolved)
    hh_a = sod_subtract_exceptional(hh, exceptional_objects)
    coh = serre_shift_cohomology(hh_a, 4)
    return PrymianPipeline(
        base, resolved, hh, hh_a, coh, salamon_check(coh, 2), hk4_betti_from_hochschild(coh)
    )
