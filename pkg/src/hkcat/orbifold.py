"""Orbifold Euler characteristics of (S^n, G) for permutation groups G.

    e(S^n, G) = (1/|G|) * sum over commuting pairs (g, h) of e_base ** #orbits<g, h>

since the common fixed locus of a commuting pair is a product of diagonals,
one copy of S per orbit.  Permutation actions on a product of holomorphic
symplectic surfaces have integral ages, so there are no sign corrections.

The value is the orbifold Euler characteristic.  Reading it as the Euler
number of the equivariant derived category relies on an orbifold HKR
isomorphism; reports say so instead of asserting it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HKError, NonIntegralResult, OrderExceedsCap
from .permgroup import (
    DEFAULT_ELEMENT_CAP,
    alternating_group,
    commuting_pair_orbit_histogram,
    symmetric_group,
)
from .projgroups import projective_group_generators

K3_EULER = 24
IDENTIFICATION_NOTE = (
    "values are orbifold Euler characteristics; identifying them with Euler numbers "
    "(alternating sums of Hochschild numbers) of the equivariant derived categories "
    "assumes a cup-product-compatible orbifold HKR isomorphism"
)


def orbifold_euler(g, e_base=K3_EULER, cap=DEFAULT_ELEMENT_CAP):
    return euler_from_histogram(commuting_pair_orbit_histogram(g, cap), g.order(cap), e_base)


def euler_from_histogram(hist, order, e_base=K3_EULER):
    """Divide sum of count * e_base**m by the group order; the division must be exact."""
    total = sum(count * e_base ** m for m, count in hist.items())
    q, r = divmod(total, order)
    if r:
        raise NonIntegralResult(f"commuting-pair sum {total} is not divisible by |G| = {order}")
    return q


def goettsche_coefficients(n_max, e_base=K3_EULER):
    """Coefficients of z^0 .. z^n_max in prod_{m >= 1} (1 - z^m)^(-e_base)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    series = [1] + [0] * n_max
    for m in range(1, n_max + 1):
        # (1 - y)^(-e) = sum_j c_j y^j with c_j = c_{j-1} (e + j - 1) / j, y = z^m
        factor = [1]
        for j in range(1, n_max // m + 1):
            factor.append(factor[-1] * (e_base + j - 1) // j)
        new = [0] * (n_max + 1)
        for i, a in enumerate(series):
            if a:
                for j, c in enumerate(factor):
                    if i + m * j > n_max:
                        break
                    new[i + m * j] += a * c
        series = new
    return series


SPORADIC = (
    (5, "AGL1", 5),
    (6, "PGL2", 5),
    (9, "PGL2", 8),
    (9, "PGammaL2", 8),
)


@dataclass(frozen=True)
class SeriesEntry:
    n: int
    label: str
    euler: int


@dataclass
class EulerSeries:
    family: str
    e_base: int
    entries: list = field(default_factory=list)

    @property
    def values(self):
        return [e.euler for e in self.entries]

    def to_json(self):
        return [{"n": e.n, "label": e.label, "euler": str(e.euler)} for e in self.entries]

    def to_csv(self):
        lines = ["n,label,euler"]
        lines += [f"{e.n},{e.label},{e.euler}" for e in self.entries]
        return "\n".join(lines) + "\n"


class SeriesIncomplete(OrderExceedsCap):
    """Raised with the entries completed before the cap was hit."""

    def __init__(self, cap, partial):
        self.partial = partial
        last = partial.entries[-1].n if partial.entries else None
        super().__init__(cap, f"group order exceeds element cap {cap}; largest completed n = {last}")


def _family_groups(family, n_max):
    if family in ("Sn", "An"):
        for n in range(n_max + 1):
            label = f"{family[0]}{n}"
            yield n, label, (None if n == 0 else (symmetric_group(n) if family == "Sn" else alternating_group(n)))
    elif family == "sporadic":
        for n, kind, q in SPORADIC:
            if n <= n_max:
                yield n, f"{kind}({q})", projective_group_generators(kind, q)
    else:
        raise HKError(f"unknown family {family!r}; expected Sn, An or sporadic")


def category_euler_series(family, n_max, e_base=K3_EULER, cap=DEFAULT_ELEMENT_CAP):
    series = EulerSeries(family, e_base)
    for n, label, group in _family_groups(family, n_max):
        try:
            value = 1 if group is None else orbifold_euler(group, e_base, cap)
        except OrderExceedsCap:
            raise SeriesIncomplete(cap, series) from None
        series.entries.append(SeriesEntry(n, label, value))
    return series

