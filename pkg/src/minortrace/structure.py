"""Vanishing-minor structure: detection, outer products, rank-one factors.

A square matrix whose 2x2 minors all vanish is exactly the kind the trace
kernels accelerate.  This module decides membership (with a witness when the
answer is no), builds members as column-row outer products, recovers the
factors where the ring permits it, and generates random members for tests
and benchmarks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .matrices import Matrix, MinorIndex, NotSquare, ShapeMismatch
from .rings import (
    IntegerRing,
    ModularRing,
    PolynomialRing,
    PrimeFieldRing,
    Ring,
    RingElem,
    RingMismatch,
    UnsupportedRing,
    divexact,
    elem_gcd,
)


class PreconditionViolated(Exception):
    """An operation's stated input contract does not hold."""


class NoNilpotentScalar(Exception):
    """The ring has no nonzero scalar s with s*s = 0."""


@dataclass(frozen=True)
class MinorWitness:
    """A nonzero 2x2 minor: its index and its value."""

    index: MinorIndex
    value: RingElem


@dataclass(frozen=True)
class StructureVerdict:
    """Outcome of the vanishing-minor scan."""

    structured: bool
    witness: MinorWitness | None

    def __post_init__(self):
        if self.structured == (self.witness is not None):
            raise ValueError("structured verdicts carry no witness, and vice versa")


@dataclass(frozen=True)
class OuterFactors:
    """A column-row factorization col @ row of a rank-at-most-one matrix."""

    col: Matrix
    row: Matrix

    def __post_init__(self):
        if self.col.ring != self.row.ring:
            raise RingMismatch(f"{self.col.ring} vs {self.row.ring}")
        if self.col.cols != 1 or self.row.rows != 1:
            raise ShapeMismatch("factors must be a column and a row")

    def product(self) -> Matrix:
        return self.col @ self.row


def iter_minor_indices(rows: int, cols: int):
    """All 2x2 minor positions of a rows x cols matrix, lexicographically."""
    for i in range(rows - 1):
        for j in range(i + 1, rows):
            for k in range(cols - 1):
                for l in range(k + 1, cols):
                    yield MinorIndex(i, j, k, l)


def check_vanishing_minors(a: Matrix) -> StructureVerdict:
    """Scan all 2x2 minors; report the first nonzero one as a witness.

    Rectangular matrices are allowed, and a single row or column (or a 1x1
    matrix) is vacuously structured.
    """
    ring = a.ring
    zero = ring.zero
    mul, sub = ring.mul, ring.sub
    d = a.data
    for i in range(a.rows - 1):
        ri = d[i]
        for j in range(i + 1, a.rows):
            rj = d[j]
            for k in range(a.cols - 1):
                for l in range(k + 1, a.cols):
                    v = sub(mul(ri[k], rj[l]), mul(ri[l], rj[k]))
                    if v != zero:
                        witness = MinorWitness(MinorIndex(i, j, k, l), RingElem(ring, v))
                        return StructureVerdict(structured=False, witness=witness)
    return StructureVerdict(structured=True, witness=None)


def outer(col: Matrix, row: Matrix) -> Matrix:
    """The product col @ row; every 2x2 minor of the result vanishes."""
    if col.ring != row.ring:
        raise RingMismatch(f"{col.ring} vs {row.ring}")
    if col.cols != 1:
        raise ShapeMismatch(f"column expected, got {col.rows}x{col.cols}")
    if row.rows != 1:
        raise ShapeMismatch(f"row expected, got {row.rows}x{row.cols}")
    return col @ row


def decompose_rank1_field(a: Matrix) -> OuterFactors | None:
    """Column-row factors of a square matrix over a prime field.

    Returns zero factors for the zero matrix, factors built from the first
    nonzero column when all 2x2 minors vanish, and None when some minor is
    nonzero (rank >= 2, no such factorization exists).
    """
    ring = a.ring
    if not isinstance(ring, PrimeFieldRing):
        raise UnsupportedRing(f"prime field required, got {ring}")
    if not a.is_square:
        raise NotSquare(f"square matrix required, got {a.rows}x{a.cols}")
    if not check_vanishing_minors(a).structured:
        return None
    n = a.rows
    if a.is_zero():
        return OuterFactors(Matrix.zero(ring, n, 1), Matrix.zero(ring, 1, n))
    q = next(j for j in range(n) if any(a.data[i][j] != 0 for i in range(n)))
    p = next(i for i in range(n) if a.data[i][q] != 0)
    col = a.col(q)
    pivot = a.entry(p, q)
    row_vals = [divexact(a.entry(p, j), pivot) for j in range(n)]
    return OuterFactors(col, Matrix.from_rows(ring, [row_vals]))


def decompose_2x2_gcd(a: Matrix) -> OuterFactors:
    """Column-row factors of a singular 2x2 integer matrix.

    Picks the first nonzero row, divides out its gcd to get a primitive row,
    and recovers the column by exact division; the zero determinant makes
    the divisions exact over the integers.
    """
    ring = a.ring
    if not isinstance(ring, IntegerRing):
        raise UnsupportedRing(f"integer ring required, got {ring}")
    if a.rows != 2 or a.cols != 2:
        raise ShapeMismatch(f"2x2 matrix required, got {a.rows}x{a.cols}")
    d = a.data
    det = d[0][0] * d[1][1] - d[0][1] * d[1][0]
    if det != 0:
        raise PreconditionViolated(f"determinant must be zero, got {det}")
    if a.is_zero():
        return OuterFactors(Matrix.zero(ring, 2, 1), Matrix.zero(ring, 1, 2))
    p = 0 if any(x != 0 for x in d[0]) else 1
    other = 1 - p
    g = elem_gcd(a.entry(p, 0), a.entry(p, 1))
    prim = [divexact(a.entry(p, j), g) for j in range(2)]
    k = 0 if prim[0].value != 0 else 1
    t = divexact(a.entry(other, k), prim[k])
    if (t * prim[1 - k]).value != d[other][1 - k]:
        raise PreconditionViolated("row is not an exact multiple of the primitive row")
    col_vals = [None, None]
    col_vals[p] = g
    col_vals[other] = t
    return OuterFactors(
        Matrix.from_rows(ring, [[col_vals[0]], [col_vals[1]]]),
        Matrix.from_rows(ring, [prim]),
    )


# ---------------------------------------------------------------------------
# Random generation (seed-deterministic)

DEFAULT_ENTRY_BOUND = 9  # keeps integer test values hand-checkable


def random_elem(rng: random.Random, ring: Ring, bound: int = DEFAULT_ENTRY_BOUND):
    """A random canonical raw value; integers bounded, residues uniform."""
    if isinstance(ring, IntegerRing):
        return rng.randint(-bound, bound)
    if isinstance(ring, ModularRing):
        return rng.randrange(ring.modulus)
    if isinstance(ring, PrimeFieldRing):
        return rng.randrange(ring.p)
    if isinstance(ring, PolynomialRing):
        coeffs = [random_elem(rng, ring.base, bound) for _ in range(rng.randint(1, 3))]
        return ring.canon(coeffs)
    raise UnsupportedRing(f"no sampler for {ring}")


def random_matrix(
    rng: random.Random,
    ring: Ring,
    rows: int,
    cols: int,
    bound: int = DEFAULT_ENTRY_BOUND,
) -> Matrix:
    return Matrix(
        ring,
        tuple(
            tuple(random_elem(rng, ring, bound) for _ in range(cols))
            for _ in range(rows)
        ),
    )


def find_nilpotent_scalar(ring: Ring) -> int | None:
    """The smallest nonzero residue s with s*s = 0, or None."""
    if not isinstance(ring, ModularRing):
        return None
    m = ring.modulus
    for s in range(1, m):
        if s * s % m == 0:
            return s
    return None


def gen_structured(
    seed: int,
    ring: Ring,
    n: int,
    mode: str = "outer",
    bound: int = DEFAULT_ENTRY_BOUND,
) -> Matrix:
    """A random n x n matrix with all 2x2 minors zero; deterministic in seed.

    Mode "outer" multiplies a random column by a random row.  Mode
    "nilscalar" scales a random matrix by a residue s with s*s = 0, which
    kills every minor (they scale by s*s); it needs a modulus that is not
    squarefree, e.g. Z/4.
    """
    rng = random.Random(seed)
    if mode == "outer":
        col = random_matrix(rng, ring, n, 1, bound)
        row = random_matrix(rng, ring, 1, n, bound)
        return outer(col, row)
    if mode == "nilscalar":
        s = find_nilpotent_scalar(ring)
        if s is None:
            raise NoNilpotentScalar(f"{ring} has no nonzero s with s*s = 0")
        return random_matrix(rng, ring, n, n, bound).scale(s)
    raise ValueError(f"unknown mode {mode!r}")
