"""Graded dimensions and invariant subalgebras of H^*(O_S)^{(x) n} under permutations.

For a K3 surface S, H^*(O_S) has dimension 1 in degrees 0 and 2.  In the
n-fold tensor power the degree-2k part has a basis of monomials indexed by
k-subsets of the factors (sigma in those slots, 1 elsewhere).  A permutation
group permutes these monomials, so the invariant dimension in degree 2k is
the number of orbits on k-subsets.  Nothing here builds actual vectors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .permgroup import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_SUBSET_BUDGET,
    orbits_on_k_subsets,
)


class GradedDims:
    """Finite-support map degree -> dimension.  Zero entries are dropped."""

    __slots__ = ("_dims",)

    def __init__(self, dims=None):
        items = dict(dims or {})
        for d, v in items.items():
            if int(d) != d or d < 0:
                raise ValueError(f"degrees must be nonnegative integers, got {d!r}")
            if int(v) != v or v < 0:
                raise ValueError(f"dimensions must be nonnegative integers, got {v!r} in degree {d}")
        self._dims = {int(d): int(v) for d, v in sorted(items.items()) if v}

    def __getitem__(self, degree):
        return self._dims.get(degree, 0)

    def __iter__(self):
        return iter(self._dims)

    def items(self):
        return self._dims.items()

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self._dims == other._dims
        if isinstance(other, dict):
            return self == GradedDims(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    def __repr__(self):
        return f"GradedDims({self._dims})"

    @property
    def support(self):
        return tuple(self._dims)

    def total(self):
        return sum(self._dims.values())

    def as_dict(self):
        return dict(self._dims)

    def to_json(self):
        return {str(d): v for d, v in self._dims.items()}

    @classmethod
    def from_json(cls, obj):
        return cls({int(k): v for k, v in obj.items()})

    def __matmul__(self, other):
        return kunneth_tensor(self, other)


K3_UNIT = GradedDims({0: 1, 2: 1})
POINT = GradedDims({0: 1})


def kunneth_tensor(a, b):
    """Graded tensor product: dimensions convolve."""
    out = Counter()
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] += x * y
    return GradedDims(out)


def tensor_power(a, n):
    result = POINT
    for _ in range(n):
        result = kunneth_tensor(result, a)
    return result


def invariant_dims_subset_model(g, subset_budget=DEFAULT_SUBSET_BUDGET):
    """Degree 2k -> number of g-orbits on k-subsets, for k = 0..n."""
    return GradedDims({
        2 * k: orbits_on_k_subsets(g, k, subset_budget).orbit_count for k in range(g.degree + 1)
    })


def fixed_subset_counts(cycle_type, n):
    """Number of k-subsets fixed setwise by an element of this cycle type, k = 0..n."""
    # fixed iff a union of cycles: coefficient of x^k in prod (1 + x^len)
    poly = [1] + [0] * n
    for length in cycle_type:
        for k in range(n, length - 1, -1):
            poly[k] += poly[k - length]
    return poly


def burnside_invariant_dims(g, cap=DEFAULT_ELEMENT_CAP):
    """Same numbers as ``invariant_dims_subset_model``, averaged over all elements."""
    n = g.degree
    by_type = Counter(p.cycle_type() for p in g.elements(cap))
    order = sum(by_type.values())
    totals = [0] * (n + 1)
    for ctype, mult in by_type.items():
        fixed = fixed_subset_counts(ctype, n)
        for k in range(n + 1):
            totals[k] += mult * fixed[k]
    dims = {}
    for k, t in enumerate(totals):
        q, r = divmod(t, order)
        if r:
            raise ArithmeticError(f"Burnside sum {t} not divisible by |G| = {order} at k = {k}")
        dims[2 * k] = q
    return GradedDims(dims)


@dataclass(frozen=True)
class UnitVerdict:
    is_hyper_kahler: bool
    invariant_dims: GradedDims
    offending_degrees: tuple  # ((degree, dim), ...) with dim != 1

    def to_json(self):
        return {
            "is_hyper_kahler": self.is_hyper_kahler,
            "invariant_dims": self.invariant_dims.to_json(),
            "offending_degrees": [[d, v] for d, v in self.offending_degrees],
        }


def hyperkahler_unit_verdict(g, subset_budget=DEFAULT_SUBSET_BUDGET):
    """The invariant algebra is C[t]/t^{n+1} exactly when every degree 2k has dimension 1."""
    dims = invariant_dims_subset_model(g, subset_budget)
    n = g.degree
    expected = tuple(range(0, 2 * n + 1, 2))
    offending = tuple((2 * k, dims[2 * k]) for k in range(n + 1) if dims[2 * k] != 1)
    ok = not offending and dims.support == expected
    return UnitVerdict(ok, dims, offending)


def k3_power_dims(n):
    """Closed form of the n-fold Kunneth power of the K3 unit: binomial(n, k) in degree 2k."""
    return GradedDims({2 * k: comb(n, k) for k in range(n + 1)})
