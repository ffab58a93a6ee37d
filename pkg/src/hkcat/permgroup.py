"""Finite permutation groups given by generators.

Permutations act on the left: ``(p * q)(i) == p(q(i))``.  Points are
``0 .. n-1``.  Nothing here uses a base and strong generating set; orbits on
k-subsets are found by breadth-first search under the generators alone, and
element-level data (conjugacy classes, centralizers, commuting pairs) needs a
full enumeration bounded by an element cap.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import (
    DegreeMismatch,
    DegreeTooLarge,
    EmptyGeneratorList,
    InvalidPermutation,
    OrderExceedsCap,
    ParseError,
    SubsetBudgetExceeded,
)

DEFAULT_ELEMENT_CAP = 2_000_000
DEFAULT_SUBSET_BUDGET = 1_000_000
MAX_SCAN_DEGREE = 5


def _compose(p, q):
    return tuple([p[j] for j in q])


def _inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _cycles(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def _byte_offset(text, pos):
    return len(text[:pos].encode("utf-8"))


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_cycles(text, pos=0):
    """Read a product of cycles such as ``(0 1)(2 3 4)`` starting at ``pos``.

    Returns ``(cycles, end)`` where ``end`` is the position just past the last
    closing parenthesis (trailing whitespace skipped).  ``()`` contributes an
    empty cycle.  Errors report byte offsets into ``text``.
    """
    cycles = []
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != "(":
        raise ParseError(_byte_offset(text, pos), {"'('"}, text)
    while pos < len(text) and text[pos] == "(":
        pos += 1
        cyc = []
        while True:
            pos = _skip_ws(text, pos)
            if pos < len(text) and text[pos] == ")":
                pos += 1
                break
            if cyc and pos < len(text) and text[pos] == ",":
                pos = _skip_ws(text, pos + 1)
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                expected = {"INT", "')'"} if not cyc else {"INT", "')'", "','"}
                raise ParseError(_byte_offset(text, start), expected, text)
            cyc.append(int(text[start:pos]))
        cycles.append(cyc)
        pos = _skip_ws(text, pos)
    return cycles, pos


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..n-1}``; ``images[i]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles, degree=None):
        """Product of cycles, rightmost applied first.

        ``degree`` defaults to one more than the largest point mentioned
        (fixed points written as 1-cycles count).
        """
        points = [i for c in cycles for i in c]
        if degree is None:
            degree = max(points, default=0) + 1
        if points and max(points) >= degree:
            raise DegreeMismatch(f"point {max(points)} outside degree {degree}")
        result = tuple(range(degree))
        for cyc in reversed(cycles):
            if len(set(cyc)) != len(cyc):
                raise InvalidPermutation(f"repeated point in cycle {cyc}")
            img = list(range(degree))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
            result = _compose(tuple(img), result)
        return cls(result)

    @classmethod
    def parse(cls, text, degree=None):
        """Parse cycle notation, e.g. ``"(0 1)(2 3 4)"`` or ``"()"``."""
        cycles, end = parse_cycles(text)
        if end != len(text):
            raise ParseError(_byte_offset(text, end), {"'('", "end of input"}, text)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot compose degrees {self.degree} and {other.degree}")
        return Permutation(_compose(self.images, other.images))

    def inverse(self):
        return Permutation(_inverse(self.images))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        return _cycles(self.images)

    def cycle_type(self):
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self):
        from math import lcm

        return lcm(*self.cycle_type()) if self.degree else 1

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={self.degree})"

    def __lt__(self, other):
        return self.images < other.images


class PermutationGroup:
    """Subgroup of S_n generated by a nonempty list of permutations.

    The element list and order are computed on demand and cached once.
    """

    def __init__(self, generators, name=None):
        gens = tuple(generators)
        if not gens:
            raise EmptyGeneratorList("a permutation group needs at least one generator")
        gens = tuple(g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in gens)
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise DegreeMismatch(f"generators disagree on degree: {sorted(degrees)}")
        (n,) = degrees
        if n < 1:
            raise DegreeMismatch("degree must be positive")
        self.degree = n
        self.generators = gens
        self.name = name
        self._elements = None

    def __repr__(self):
        label = self.name or ", ".join(map(str, self.generators))
        return f"PermutationGroup<{label}; degree {self.degree}>"

    @property
    def cached_order(self):
        return None if self._elements is None else len(self._elements)

    def _element_tuples(self, cap=DEFAULT_ELEMENT_CAP):
        if self._elements is None:
            self._elements = _closure([g.images for g in self.generators], self.degree, cap)
        if len(self._elements) > cap:
            raise OrderExceedsCap(cap)
        return self._elements

    def order(self, cap=DEFAULT_ELEMENT_CAP):
        return len(self._element_tuples(cap))

    def elements(self, cap=DEFAULT_ELEMENT_CAP):
        return [Permutation(e) for e in self._element_tuples(cap)]

    def contains(self, perm, cap=DEFAULT_ELEMENT_CAP):
        images = perm.images if isinstance(perm, Permutation) else tuple(perm)
        return images in set(self._element_tuples(cap))


def _closure(gens, n, cap):
    ident = tuple(range(n))
    gens = [g for g in gens if g != ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise OrderExceedsCap(cap)
        frontier = nxt
    return tuple(sorted(seen))


def group_from_generators(gens, name=None):
    return PermutationGroup(gens, name=name)


def enumerate_elements(g, cap=DEFAULT_ELEMENT_CAP):
    """All elements of ``g`` in lexicographic order of their image sequences."""
    if cap < 1:
        raise ValueError("cap must be positive")
    return g.elements(cap)


# -- orbits on k-subsets -----------------------------------------------------

@dataclass(frozen=True)
class KSubsetOrbitReport:
    k: int
    orbit_count: int
    representatives: tuple
    orbit_sizes: tuple

    @property
    def transitive(self):
        return self.orbit_count == 1


def orbits_on_k_subsets(g, k, subset_budget=DEFAULT_SUBSET_BUDGET):
    """Partition the k-subsets of the points into ``g``-orbits.

    Each orbit's representative is its lexicographically least member (as a
    sorted tuple).  Only the generators are used.
    """
    n = g.degree
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    total = comb(n, k)
    if total > subset_budget:
        raise SubsetBudgetExceeded(f"C({n},{k}) = {total} exceeds subset budget {subset_budget}")
    gens = [s.images for s in g.generators if not s.is_identity()]
    seen = set()
    reps, sizes = [], []
    # combinations() is lexicographic, so the first unseen subset is its orbit's least member
    for s in itertools.combinations(range(n), k):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        size = 1
        while stack:
            t = stack.pop()
            for p in gens:
                u = tuple(sorted([p[i] for i in t]))
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
                    size += 1
        reps.append(s)
        sizes.append(size)
    return KSubsetOrbitReport(k, len(reps), tuple(reps), tuple(sizes))


@dataclass(frozen=True)
class HomogeneityProfile:
    degree: int
    counts: tuple  # ((k, orbit_count), ...) for k = 0..n
    all_transitive: bool

    @property
    def failing_ks(self):
        return [k for k, c in self.counts if c != 1]


def homogeneity_profile(g, subset_budget=DEFAULT_SUBSET_BUDGET):
    """Orbit counts on k-subsets for every k, using count(k) == count(n - k)."""
    n = g.degree
    half = {k: orbits_on_k_subsets(g, k, subset_budget).orbit_count for k in range(n // 2 + 1)}
    counts = tuple((k, half[min(k, n - k)]) for k in range(n + 1))
    return HomogeneityProfile(n, counts, all(c == 1 for _, c in counts))


# -- element-level data ------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int


def conjugacy_classes(g, cap=DEFAULT_ELEMENT_CAP):
    """Classes ordered by their lexicographically least member (the representative)."""
    elements = g._element_tuples(cap)
    gens = [(s.images, _inverse(s.images)) for s in g.generators if not s.is_identity()]
    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        seen.add(x)
        stack = [x]
        size = 1
        while stack:
            y = stack.pop()
            for s, s_inv in gens:
                z = _compose(_compose(s, y), s_inv)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
                    size += 1
        classes.append(ConjugacyClass(Permutation(x), size))
    return classes


def _element_array(g, cap):
    return np.array(g._element_tuples(cap), dtype=np.int64).reshape(-1, g.degree)


def _centralizer_rows(elements, x):
    x = np.asarray(x)
    # x∘h == h∘x  <=>  x[h[i]] == h[x[i]]
    mask = np.all(x[elements] == elements[:, x], axis=1)
    return elements[mask]


def centralizer(g, x, cap=DEFAULT_ELEMENT_CAP):
    images = x.images if isinstance(x, Permutation) else tuple(x)
    rows = _centralizer_rows(_element_array(g, cap), images)
    return [Permutation(tuple(int(v) for v in r)) for r in rows]


def pair_orbit_counts(x, hs):
    """Number of orbits of <x, h> on points, for each row h of ``hs``."""
    hs = np.asarray(hs, dtype=np.int64)
    if hs.ndim == 1:
        hs = hs[None, :]
    b, n = hs.shape
    x = np.asarray(x, dtype=np.int64)
    x_inv = np.argsort(x)
    hs_inv = np.argsort(hs, axis=1)
    labels = np.broadcast_to(np.arange(n), (b, n)).copy()
    while True:
        new = np.minimum.reduce([
            labels,
            labels[:, x],
            labels[:, x_inv],
            np.take_along_axis(labels, hs, axis=1),
            np.take_along_axis(labels, hs_inv, axis=1),
        ])
        if np.array_equal(new, labels):
            break
        labels = new
    # each orbit keeps exactly one point labelled by itself: its minimum
    return (labels == np.arange(n)).sum(axis=1)


def commuting_pair_orbit_histogram(g, cap=DEFAULT_ELEMENT_CAP):
    """Map m -> number of commuting ordered pairs (a, b) with <a, b> having m orbits.

    Summed over conjugacy-class representatives a and their centralizers,
    each weighted by the class size; the orbit count is a conjugation
    invariant so this equals the full double loop.
    """
    elements = _element_array(g, cap)
    hist = Counter()
    for cls in conjugacy_classes(g, cap):
        rep = cls.representative.images
        cent = _centralizer_rows(elements, rep)
        counts = pair_orbit_counts(rep, cent)
        for m, c in zip(*np.unique(counts, return_counts=True)):
            hist[int(m)] += int(c) * cls.size
    return dict(sorted(hist.items()))


# -- exhaustive subgroup scan ------------------------------------------------

@dataclass(frozen=True)
class ScanEntry:
    order: int
    generators: tuple
    profile: HomogeneityProfile = field(repr=False)

    @property
    def all_transitive(self):
        return self.profile.all_transitive

    def group(self):
        return PermutationGroup(self.generators)


def _greedy_generators(elements, n):
    """Lexicographically greedy generating set of the group with these elements."""
    ident = tuple(range(n))
    gens = []
    span = {ident}
    for x in sorted(elements):
        if x in span:
            continue
        gens.append(x)
        span = set(_closure(gens, n, len(elements)))
        if len(span) == len(elements):
            break
    return gens


def subgroup_scan(n, subset_budget=DEFAULT_SUBSET_BUDGET):
    """Every subgroup of S_n up to conjugacy, with its homogeneity profile.

    Ordered by (order, generator images).  Limited to n <= 5; conjugacy is
    decided by conjugating with every element of S_n.
    """
    if n > MAX_SCAN_DEGREE:
        raise DegreeTooLarge(f"subgroup scan is limited to n <= {MAX_SCAN_DEGREE}, got {n}")
    if n < 1:
        raise DegreeTooLarge(f"subgroup scan needs n >= 1, got {n}")
    sym = list(itertools.permutations(range(n)))
    ident = tuple(range(n))
    trivial = frozenset([ident])
    known = {trivial: ()}
    queue = [trivial]
    while queue:
        h = queue.pop()
        gens = known[h]
        covered = set(h)
        for x in sym:
            if x in covered:
                continue
            # <H, x> == <H, hx> for every h in H
            covered.update(_compose(y, x) for y in h)
            k = frozenset(_closure(list(gens) + [x], n, len(sym)))
            if k not in known:
                known[k] = tuple(gens) + (x,)
                queue.append(k)

    sym_inv = [(s, _inverse(s)) for s in sym]
    classes = {}
    for k in known:
        key = min(
            tuple(sorted(_compose(_compose(s, y), s_inv) for y in k)) for s, s_inv in sym_inv
        )
        classes.setdefault(key, key)

    entries = []
    for elements in classes:
        gens = _greedy_generators(elements, n) or [ident]
        perms = tuple(Permutation(x) for x in gens)
        group = PermutationGroup(perms)
        entries.append(ScanEntry(len(elements), perms, homogeneity_profile(group, subset_budget)))
    entries.sort(key=lambda e: (e.order, [p.images for p in e.generators]))
    return entries


# -- named families ----------------------------------------------------------

def _cycle(points, n):
    return Permutation.from_cycles([list(points)], n)


def symmetric_group(n):
    if n < 2:
        return PermutationGroup([Permutation.identity(n)], name=f"S{n}")
    return PermutationGroup([_cycle((0, 1), n), _cycle(range(n), n)], name=f"S{n}")


def alternating_group(n):
    if n < 3:
        return PermutationGroup([Permutation.identity(n)], name=f"A{n}")
    long_cycle = range(n) if n % 2 else range(1, n)
    return PermutationGroup([_cycle((0, 1, 2), n), _cycle(long_cycle, n)], name=f"A{n}")


def cyclic_group(n):
    return PermutationGroup([_cycle(range(n), n)], name=f"C{n}")


def dihedral_group(n):
    """Symmetries of the n-gon on its vertices: rotation and i -> -i mod n."""
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return PermutationGroup([_cycle(range(n), n), reflection], name=f"D{n}")
