"""Small finite fields and the groups PGL_2(q), PGammaL_2(q), AGL(1, q) as permutation groups.

Field elements are integers ``0 .. q-1`` encoding coefficient vectors over
F_p in base p (``c0 + c1*p + ...``), reduced modulo a fixed monic modulus.
The moduli below are all primitive, so ``x`` (encoded as ``p``) generates
the multiplicative group when ``e > 1``; for prime fields the least
primitive root is used.

Points of the projective line are numbered ``[inf, 0, 1, g, g^2, ...]`` for
the primitive element ``g``, so scaling by ``g`` shows up as the single cycle
``(2 3 ... q)``.  AGL(1, q) acts on ``[0, 1, g, g^2, ...]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FieldTooLarge, NotPrime, UnsupportedKind
from .permgroup import Permutation, PermutationGroup

MAX_CHARACTERISTIC = 13
MAX_ORDER = 64

# monic moduli, low-degree coefficient first
MODULI = {
    (2, 2): (1, 1, 1),              # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),           # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),        # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),     # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 1, 1, 0, 1),  # x^6 + x^4 + x^3 + x + 1
    (3, 2): (2, 1, 1),              # x^2 + x + 2
    (3, 3): (1, 2, 0, 1),           # x^3 + 2x + 1
    (5, 2): (2, 4, 1),              # x^2 + 4x + 2
    (7, 2): (3, 6, 1),              # x^2 + 6x + 3
}

KINDS = ("PGL2", "PGammaL2", "AGL1")


def is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_power(q):
    """``(p, e)`` with ``q == p**e``, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            return (p, e) if r == 1 else None
    return None


@dataclass(frozen=True)
class FiniteField:
    p: int
    e: int
    modulus: tuple
    primitive: int
    _exp: tuple = field(repr=False, compare=False)
    _log: dict = field(repr=False, compare=False)

    @property
    def q(self):
        return self.p ** self.e

    @property
    def order(self):
        return self.q

    def elements(self):
        return range(self.q)

    def vector(self, a):
        out = []
        for _ in range(self.e):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_vector(self, v):
        return sum(c * self.p ** i for i, c in enumerate(v))

    def add(self, a, b):
        return self.from_vector([(x + y) % self.p for x, y in zip(self.vector(a), self.vector(b))])

    def neg(self, a):
        return self.from_vector([(-x) % self.p for x in self.vector(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return _poly_mulmod(self.vector(a), self.vector(b), self.modulus, self.p, self.from_vector)

    def pow(self, a, k):
        if a == 0:
            return 0 if k else 1
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def frobenius(self, a):
        return self.pow(a, self.p)

    def power_of_primitive(self, j):
        return self._exp[j % (self.q - 1)]

    def log(self, a):
        return self._log[a]


def _poly_mulmod(a, b, modulus, p, encode):
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1 if e else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic: x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(e):
                prod[d - e + i] = (prod[d - e + i] - c * modulus[i]) % p
    return encode(prod[:e])


def build_field(p, e=1):
    """F_{p^e} with the fixed modulus from ``MODULI`` (prime fields: x - 0 is implicit)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise FieldTooLarge(f"extension degree must be >= 1, got {e}")
    if p > MAX_CHARACTERISTIC or p ** e > MAX_ORDER:
        raise FieldTooLarge(f"F_{p}^{e} outside supported range (p <= {MAX_CHARACTERISTIC}, q <= {MAX_ORDER})")
    q = p ** e
    if e == 1:
        modulus = (0, 1)
        mul = lambda a, b: a * b % p  # noqa: E731
        primitive = next(g for g in range(1, p) if _mult_order(g, mul, p) == p - 1) if p > 2 else 1
    else:
        modulus = MODULI[(p, e)]
        primitive = p  # the class of x
        mul = lambda a, b: _poly_mulmod(  # noqa: E731
            _digits(a, p, e), _digits(b, p, e), modulus, p, lambda v: sum(c * p ** i for i, c in enumerate(v))
        )
    exp = [1]
    for _ in range(q - 2):
        exp.append(mul(exp[-1], primitive))
    log = {a: j for j, a in enumerate(exp)}
    if len(log) != q - 1:
        raise AssertionError(f"modulus for F_{q} is not primitive")
    return FiniteField(p, e, modulus, primitive, tuple(exp), log)


def _digits(a, p, e):
    out = []
    for _ in range(e):
        a, c = divmod(a, p)
        out.append(c)
    return out


def _mult_order(g, mul, p):
    x, k = g, 1
    while x != 1:
        x = mul(x, g)
        k += 1
    return k


def field_for_order(q):
    pe = prime_power(q)
    if pe is None:
        raise NotPrime(f"{q} is not a prime power")
    return build_field(*pe)


# -- projective line --------------------------------------------------------

INFINITY = None


def projective_line(F):
    """Points in canonical order: ``[None (infinity), 0, 1, g, g^2, ...]``."""
    return [INFINITY, 0] + [F.power_of_primitive(j) for j in range(F.q - 1)]


def affine_line(F):
    return [0] + [F.power_of_primitive(j) for j in range(F.q - 1)]


def _as_permutation(points, fn):
    index = {pt: i for i, pt in enumerate(points)}
    return Permutation(tuple(index[fn(pt)] for pt in points))


def _mobius(F, a, b, c, d):
    """x -> (a x + b) / (c x + d) on the projective line."""
    def act(x):
        if x is INFINITY:
            return INFINITY if c == 0 else F.mul(a, F.inv(c))
        den = F.add(F.mul(c, x), d)
        num = F.add(F.mul(a, x), b)
        return INFINITY if den == 0 else F.mul(num, F.inv(den))
    return act


def projective_group_generators(kind, q):
    """Permutation group PGL2 / PGammaL2 on P^1(F_q), or AGL1 on F_q."""
    if kind not in KINDS:
        raise UnsupportedKind(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    F = field_for_order(q)
    g = F.primitive
    if kind == "AGL1":
        pts = affine_line(F)
        gens = [
            _as_permutation(pts, lambda x: F.add(x, 1)),
            _as_permutation(pts, lambda x: F.mul(g, x)),
        ]
        return PermutationGroup(gens, name=f"AGL1({q})")
    pts = projective_line(F)
    gens = [
        _as_permutation(pts, _mobius(F, 1, 1, 0, 1)),  # x -> x + 1
        _as_permutation(pts, _mobius(F, g, 0, 0, 1)),  # x -> g x
        _as_permutation(pts, _mobius(F, 0, 1, 1, 0)),  # x -> 1 / x
    ]
    if kind == "PGammaL2":
        gens.append(frobenius_permutation(F))
    return PermutationGroup(gens, name=f"{kind}({q})")


def frobenius_permutation(F):
    return _as_permutation(projective_line(F), lambda x: x if x is INFINITY else F.frobenius(x))
