"""Shared rings, generators, strategies, and independent oracles for tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from minortrace import (
    IntegerRing,
    Matrix,
    ModularRing,
    PolynomialRing,
    PrimeFieldRing,
    find_nilpotent_scalar,
    gen_structured,
)

INT = IntegerRing()
MOD4 = ModularRing(4)
MOD97 = ModularRing(97)
GF5 = PrimeFieldRing(5)
POLY_INT = PolynomialRing(IntegerRing())

ALL_RINGS = [INT, MOD4, MOD97, GF5, POLY_INT]
RING_IDS = ["int", "mod4", "mod97", "gf5", "polyint"]

SCALAR_RINGS = [INT, MOD4, MOD97, GF5]


def raw_values(ring, bound=9):
    """Hypothesis strategy for canonical raw values of a ring."""
    if isinstance(ring, IntegerRing):
        return st.integers(-bound, bound)
    if isinstance(ring, ModularRing):
        return st.integers(0, ring.modulus - 1)
    if isinstance(ring, PrimeFieldRing):
        return st.integers(0, ring.p - 1)
    return st.lists(raw_values(ring.base, bound), max_size=3).map(ring.canon)


@st.composite
def matrices(draw, ring, min_n=1, max_n=4, square=True):
    rows = draw(st.integers(min_n, max_n))
    cols = rows if square else draw(st.integers(min_n, max_n))
    data = [[draw(raw_values(ring)) for _ in range(cols)] for _ in range(rows)]
    return Matrix.from_rows(ring, data)


def rand_structured(rng: random.Random, ring, n: int, allow_nilscalar=True) -> Matrix:
    """A random matrix with vanishing minors, mixing both generator modes."""
    if (
        allow_nilscalar
        and isinstance(ring, ModularRing)
        and find_nilpotent_scalar(ring) is not None
        and rng.random() < 0.5
    ):
        return gen_structured(rng.getrandbits(32), ring, n, "nilscalar")
    return gen_structured(rng.getrandbits(32), ring, n, "outer")


def all_minors_naive(a: Matrix):
    """Second, independently written minor enumerator (RingElem arithmetic)."""
    out = []
    for i in range(a.rows):
        for j in range(a.rows):
            if i >= j:
                continue
            for k in range(a.cols):
                for l in range(a.cols):
                    if k >= l:
                        continue
                    v = a.entry(i, k) * a.entry(j, l) - a.entry(i, l) * a.entry(j, k)
                    out.append(((i, j, k, l), v))
    return out
