"""Exact coefficient rings.

Every computation in this package happens over one of a small family of
exact rings:

* ``ZZ`` -- arbitrary-precision integers,
* ``ZMod(p, k)`` -- integers modulo a prime power p**k,
* ``PrimeField(p)`` -- the field GF(p),
* ``QuadraticField(p)`` -- GF(p)[i] with i**2 = -1, a model of GF(p**2)
  when -1 is a non-square mod p (true for p = 7),
* ``DualNumbers(base)`` -- base[eps] with eps**2 = 0, for first-order
  deformation bookkeeping.

Elements are immutable values carrying a reference to their ring; mixing
elements of different rings raises ``RingMismatchError``.  Canonical form
is the least non-negative residue in each coordinate, so ``==`` and
``hash`` agree with mathematical equality.

The module also provides ``hensel_lift``, the p-power-at-a-time refinement
of a simple root of a univariate integer polynomial.
"""

from __future__ import annotations

import random
from typing import Sequence


class RingMismatchError(TypeError):
    """Two operands belong to different rings."""


class NonUnitError(ArithmeticError):
    """Inversion was requested for a non-invertible element."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"not a unit: {element!r}")


class NotSimpleRootError(ArithmeticError):
    """The residue is not a simple root, so the lift is not defined."""


class Ring:
    """Common interface of all coefficient rings."""

    def element(self, payload):
        raise NotImplementedError

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def from_int(self, n: int):
        """Image of the integer n under the canonical map into the ring."""
        return self.element(n)

    def characteristic(self) -> int:
        raise NotImplementedError

    def is_field(self) -> bool:
        return False

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    # payload-level arithmetic; Element dispatches here
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _invert(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _repr_payload(self, a) -> str:
        return repr(a)


class Element:
    """An immutable ring element: a ring reference plus canonical payload."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("ring elements are immutable")

    def _check(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            raise RingMismatchError(f"expected a ring element, got {other!r}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other):
        other = self._check(other)
        return Element(
            self.ring,
            self.ring._add(self.payload, self.ring._neg(other.payload)))

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.payload))

    def __mul__(self, other):
        other = self._check(other)
        return Element(self.ring, self.ring._mul(self.payload, other.payload))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Element":
        return Element(self.ring, self.ring._invert(self.payload))

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.payload)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((id(self.ring), self.payload))

    def __repr__(self):
        return self.ring._repr_payload(self.payload)


class IntegerRing(Ring):
    """Arbitrary-precision integers."""

    def element(self, payload: int) -> Element:
        return Element(self, int(payload))

    def characteristic(self) -> int:
        return 0

    def random_element(self, rng: random.Random) -> Element:
        return self.element(rng.randint(-10**6, 10**6))

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _invert(self, a):
        if a in (1, -1):
            return a
        raise NonUnitError(self.element(a))

    def _is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")


ZZ = IntegerRing()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class ZMod(Ring):
    """Integers modulo p**k for a prime p and k >= 1."""

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("exponent must be >= 1")
        self.p = p
        self.k = k
        self.modulus = p ** k

    def element(self, payload: int) -> Element:
        return Element(self, int(payload) % self.modulus)

    def characteristic(self) -> int:
        return self.modulus

    def is_field(self) -> bool:
        return self.k == 1

    def random_element(self, rng: random.Random) -> Element:
        return self.element(rng.randrange(self.modulus))

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _neg(self, a):
        return (-a) % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _invert(self, a):
        if a % self.p == 0:
            raise NonUnitError(self.element(a))
        return pow(a, -1, self.modulus)

    def _is_zero(self, a):
        return a == 0

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"Z/{self.p}^{self.k}"

    def __eq__(self, other):
        return isinstance(other, ZMod) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("ZMod", self.p, self.k))


def PrimeField(p: int) -> ZMod:
    """The field GF(p)."""
    return ZMod(p, 1)


class QuadraticField(Ring):
    """GF(p)[i] with i**2 = -1; a field iff -1 is a non-square mod p.

    Payloads are pairs (a, b) of least non-negative residues encoding
    a + b*i.  Inversion uses the norm a**2 + b**2.
    """

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p % 4 != 3:
            raise ValueError(f"-1 is a square mod {p}; GF({p})[i] is not a field")
        self.p = p

    def element(self, payload) -> Element:
        if isinstance(payload, int):
            payload = (payload, 0)
        a, b = payload
        return Element(self, (int(a) % self.p, int(b) % self.p))

    def i(self) -> Element:
        return self.element((0, 1))

    def characteristic(self) -> int:
        return self.p

    def is_field(self) -> bool:
        return True

    def order(self) -> int:
        return self.p * self.p

    def random_element(self, rng: random.Random) -> Element:
        return self.element((rng.randrange(self.p), rng.randrange(self.p)))

    def all_elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield self.element((a, b))

    def conjugate(self, x: Element) -> Element:
        a, b = x.payload
        return self.element((a, -b))

    def _add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def _neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def _mul(self, a, b):
        return ((a[0] * b[0] - a[1] * b[1]) % self.p,
                (a[0] * b[1] + a[1] * b[0]) % self.p)

    def _invert(self, a):
        norm = (a[0] * a[0] + a[1] * a[1]) % self.p
        if norm == 0:
            raise NonUnitError(self.element(a))
        ninv = pow(norm, -1, self.p)
        return ((a[0] * ninv) % self.p, (-a[1] * ninv) % self.p)

    def _is_zero(self, a):
        return a == (0, 0)

    def _repr_payload(self, a):
        re, im = a
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i" if im != 1 else "i"
        return f"{re}+{im}i" if im != 1 else f"{re}+i"

    def __repr__(self):
        return f"GF({self.p})[i]"

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and self.p == other.p

    def __hash__(self):
        return hash(("QuadraticField", self.p))


class DualNumbers(Ring):
    """base[eps] with eps**2 = 0.  Payloads are pairs of base elements."""

    def __init__(self, base: Ring):
        if isinstance(base, DualNumbers):
            raise ValueError("dual numbers do not nest")
        self.base = base

    def element(self, payload) -> Element:
        if isinstance(payload, int):
            payload = (self.base.from_int(payload), self.base.zero())
        u, v = payload
        if not isinstance(u, Element):
            u = self.base.element(u)
        if not isinstance(v, Element):
            v = self.base.element(v)
        return Element(self, (u, v))

    def eps(self) -> Element:
        return self.element((self.base.zero(), self.base.one()))

    def characteristic(self) -> int:
        return self.base.characteristic()

    def random_element(self, rng: random.Random) -> Element:
        return self.element((self.base.random_element(rng),
                             self.base.random_element(rng)))

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0])

    def _invert(self, a):
        # (u + v eps)^-1 = u^-1 - u^-2 v eps, defined iff u is a unit
        u, v = a
        if u.is_zero():
            raise NonUnitError(self.element(a))
        uinv = u.inverse()
        return (uinv, -(uinv * uinv * v))

    def _is_zero(self, a):
        return a[0].is_zero() and a[1].is_zero()

    def _repr_payload(self, a):
        u, v = a
        if v.is_zero():
            return repr(u)
        if u.is_zero():
            return f"({v!r})eps"
        return f"{u!r}+({v!r})eps"

    def __repr__(self):
        return f"{self.base!r}[eps]"

    def __eq__(self, other):
        return isinstance(other, DualNumbers) and self.base == other.base

    def __hash__(self):
        return hash(("DualNumbers", self.base))


def eval_int_poly(coeffs: Sequence[int], x: int) -> int:
    """Evaluate an integer polynomial given low-degree-first coefficients."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def derivative_int_poly(coeffs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def hensel_lift(coeffs: Sequence[int], p: int, r0: int, k: int) -> int:
    """Lift a simple root of f mod p to the unique root mod p**k above it.

    ``coeffs`` lists the coefficients of f low degree first.  Requires
    f(r0) = 0 mod p and f'(r0) a unit mod p; raises NotSimpleRootError
    otherwise.  The refinement is the linear Newton step
    r <- r - f(r) * f'(r0)^-1, one p-power at a time.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("target exponent must be >= 1")
    r0 = r0 % p
    if eval_int_poly(coeffs, r0) % p != 0:
        raise NotSimpleRootError(f"{r0} is not a root mod {p}")
    dcoeffs = derivative_int_poly(coeffs)
    slope = eval_int_poly(dcoeffs, r0) % p
    if slope == 0:
        raise NotSimpleRootError(f"{r0} is a multiple root mod {p}")
    slope_inv = pow(slope, -1, p ** k)
    r = r0
    for j in range(2, k + 1):
        mod = p ** j
        r = (r - eval_int_poly(coeffs, r) * slope_inv) % mod
    assert eval_int_poly(coeffs, r) % (p ** k) == 0
    return r
