"""Exact arithmetic over commutative rings.

Four ring families are provided: the integers, residue rings Z/m (composite
moduli allowed on purpose, zero divisors included), prime fields GF(p), and
univariate polynomial rings over any of these (nesting capped at depth 2).
Every operation is exact; there is no floating point anywhere.

Elements are immutable values in canonical form: residues reduced to [0, m),
polynomial coefficient tuples (lowest degree first) stripped of trailing
zeros, the zero polynomial being the empty tuple.
"""

from __future__ import annotations

import math
import operator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass


class RingError(Exception):
    """Base class for ring arithmetic errors."""


class RingMismatch(RingError):
    """Operands belong to different rings."""


class NotDivisible(RingError):
    """Exact division requested but the remainder is nonzero."""


class DivisionByZero(RingError):
    """Division by the ring's zero."""


class UnsupportedRing(RingError):
    """Operation not defined for this ring family."""


# ---------------------------------------------------------------------------
# Operation counting (test instrumentation; off unless count_ops is active)

@dataclass
class OpCounts:
    """Ring multiplications and additions performed inside a count_ops block."""

    mul: int = 0
    add: int = 0


_ACTIVE_COUNTS: ContextVar[OpCounts | None] = ContextVar("ring_op_counts", default=None)


@contextmanager
def count_ops():
    """Count ring operations in the enclosed block.

    Context-local, so concurrent counts in different threads do not mix.
    Fused inner loops report their counts in bulk; the totals always equal
    the number of ring operations logically performed.
    """
    counts = OpCounts()
    token = _ACTIVE_COUNTS.set(counts)
    try:
        yield counts
    finally:
        _ACTIVE_COUNTS.reset(token)


def _bump(mul: int, add: int) -> None:
    counts = _ACTIVE_COUNTS.get()
    if counts is not None:
        counts.mul += mul
        counts.add += add


# ---------------------------------------------------------------------------
# Primality (deterministic Miller-Rabin; exact for n < 3.3e24)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witness set)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Ring descriptors

class Ring:
    """A commutative ring; methods operate on raw canonical element values.

    Subclasses are immutable descriptors compared structurally, so two
    descriptors of the same family and parameters are the same ring.
    """

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def canon(self, value):
        """Coerce an arbitrary input into canonical raw form."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def dot(self, xs, ys):
        """Inner product of two equal-length raw-value sequences."""
        acc = self.zero
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def pow_scalar(self, a, k: int):
        """a**k by square-and-multiply; k must be >= 0."""
        if k < 0:
            raise ValueError("negative exponent")
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def elem(self, value) -> RingElem:
        return RingElem(self, self.canon(value))


@dataclass(frozen=True)
class IntegerRing(Ring):
    """The ring of integers (arbitrary precision)."""

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def canon(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"integer value expected, got {value!r}")
        return value

    def add(self, a, b):
        _bump(0, 1)
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        _bump(1, 0)
        return a * b

    def dot(self, xs, ys):
        n = len(xs)
        if n == 0:
            return 0
        _bump(n, n - 1)
        return sum(map(operator.mul, xs, ys))

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class ModularRing(Ring):
    """The residue ring Z/m; m >= 2, composite moduli welcome."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.modulus

    def canon(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"integer value expected, got {value!r}")
        return value % self.modulus

    def add(self, a, b):
        _bump(0, 1)
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        _bump(1, 0)
        return (a * b) % self.modulus

    def dot(self, xs, ys):
        # One deferred reduction per dot product; the products are exact
        # integers, so this equals the op-by-op modular result.
        n = len(xs)
        if n == 0:
            return 0
        _bump(n, n - 1)
        return sum(map(operator.mul, xs, ys)) % self.modulus

    def __str__(self):
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class PrimeFieldRing(Ring):
    """The prime field GF(p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"prime field order must be prime, got {self.p!r}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def canon(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"integer value expected, got {value!r}")
        return value % self.p

    def add(self, a, b):
        _bump(0, 1)
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        _bump(1, 0)
        return (a * b) % self.p

    def dot(self, xs, ys):
        n = len(xs)
        if n == 0:
            return 0
        _bump(n, n - 1)
        return sum(map(operator.mul, xs, ys)) % self.p

    def __str__(self):
        return f"GF({self.p})"


def _poly_depth(ring: Ring) -> int:
    depth = 0
    while isinstance(ring, PolynomialRing):
        depth += 1
        ring = ring.base
    return depth


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Univariate polynomials over a base ring, coefficients low degree first."""

    base: Ring
    var: str = "x"

    def __post_init__(self):
        if not isinstance(self.var, str) or not self.var.isidentifier():
            raise ValueError(f"variable must be an identifier, got {self.var!r}")
        if _poly_depth(self) > 2:
            raise ValueError("polynomial nesting is capped at depth 2")

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (self.base.one,)

    def _strip(self, coeffs: list) -> tuple:
        zero = self.base.zero
        n = len(coeffs)
        while n and coeffs[n - 1] == zero:
            n -= 1
        return tuple(coeffs[:n])

    def canon(self, value):
        if isinstance(value, (list, tuple)):
            return self._strip([self.base.canon(c) for c in value])
        # scalars lift to constant polynomials
        return self._strip([self.base.canon(value)])

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        base = self.base
        for i, c in enumerate(b):
            out[i] = base.add(out[i], c)
        return self._strip(out)

    def neg(self, a):
        return tuple(map(self.base.neg, a))

    def mul(self, a, b):
        if not a or not b:
            return ()
        base = self.base
        zero = base.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = base.add(out[i + j], base.mul(x, y))
        # leading coefficients can multiply to zero over rings with zero
        # divisors, so the product still needs a strip
        return self._strip(out)

    def __str__(self):
        return f"{self.base}[{self.var}]"


# ---------------------------------------------------------------------------
# Elements

class RingElem:
    """An immutable exact element of a described ring.

    The value is stored in canonical raw form; construct through
    ``ring.elem(...)`` unless the value is already canonical.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def is_zero(self) -> bool:
        return self.value == self.ring.zero

    def _coerce(self, other) -> "RingElem":
        if not isinstance(other, RingElem):
            raise TypeError(f"RingElem expected, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return RingElem(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        other = self._coerce(other)
        return RingElem(self.ring, self.ring.sub(self.value, other.value))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        return RingElem(self.ring, self.ring.mul(self.value, other.value))

    def __pow__(self, k: int):
        return RingElem(self.ring, self.ring.pow_scalar(self.value, k))

    def __eq__(self, other):
        return (
            isinstance(other, RingElem)
            and self.ring == other.ring
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"{self.value!r}:{self.ring}"


def divexact(a: RingElem, b: RingElem) -> RingElem:
    """Exact quotient a/b where division is known to be exact.

    Defined over the integers (remainder must vanish) and prime fields
    (any nonzero divisor).
    """
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    ring = a.ring
    if isinstance(ring, IntegerRing):
        if b.value == 0:
            raise DivisionByZero("division by zero")
        q, r = divmod(a.value, b.value)
        if r != 0:
            raise NotDivisible(f"{a.value} is not divisible by {b.value}")
        return RingElem(ring, q)
    if isinstance(ring, PrimeFieldRing):
        if b.value == 0:
            raise DivisionByZero("division by zero")
        return RingElem(ring, a.value * pow(b.value, -1, ring.p) % ring.p)
    raise UnsupportedRing(f"exact division not defined over {ring}")


def elem_gcd(a: RingElem, b: RingElem) -> RingElem:
    """Nonnegative gcd over the integers; gcd(0, 0) = 0."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if not isinstance(a.ring, IntegerRing):
        raise UnsupportedRing(f"gcd not defined over {a.ring}")
    return RingElem(a.ring, math.gcd(a.value, b.value))
