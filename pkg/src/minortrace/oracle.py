"""Brute-force ground truth over small finite rings.

The decisive cross-check: enumerate every n x n matrix over Z/m, classify
each one by (a) whether A B A = Tr(AB) A holds for every B and (b) whether
all 2x2 minors vanish, and confirm the two classifications coincide.  The
for-every-B side is decided by probing the n^2 unit matrices, which is
provably equivalent to the full quantifier; periodic full-B spot checks
keep that shortcut honest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .kernels import naive_aba
from .matrices import Matrix, NotSquare, TooSmall
from .rings import ModularRing, PrimeFieldRing, Ring
from .structure import check_vanishing_minors


class TooLargeToEnumerate(Exception):
    """The ring/order combination exceeds the enumeration budget."""


ENUMERATION_BUDGET = 10**6  # max matrices per exhaustive sweep


def verify_identity(a: Matrix, b: Matrix) -> Matrix:
    """Residual A B A - Tr(A @ B) * A; zero iff the identity holds for (A, B)."""
    return naive_aba(a, b) - a.scale((a @ b).trace())


def universal_identity_via_probes(a: Matrix) -> bool:
    """Decide whether A B A = Tr(AB) A holds for EVERY B, via n^2 probes.

    Testing only the unit matrices suffices: the probe at (l, j) reduces to
    col_l(A) @ row_j(A) = a[j][l] * A, and if all of those hold, every minor
    vanishes and the identity follows for arbitrary B.
    """
    if not a.is_square:
        raise NotSquare(f"square matrix required, got {a.rows}x{a.cols}")
    ring = a.ring
    mul = ring.mul
    d = a.data
    n = a.rows
    for l in range(n):
        for j in range(n):
            s = d[j][l]
            for x in range(n):
                dxl = d[x][l]
                for y in range(n):
                    if mul(dxl, d[j][y]) != mul(s, d[x][y]):
                        return False
    return True


def _enumerable_values(ring: Ring, n: int) -> range:
    if isinstance(ring, ModularRing):
        m = ring.modulus
    elif isinstance(ring, PrimeFieldRing):
        m = ring.p
    else:
        raise TooLargeToEnumerate(f"{ring} is not a finite enumerable ring")
    if m ** (n * n) > ENUMERATION_BUDGET:
        raise TooLargeToEnumerate(
            f"{m}^{n * n} matrices exceed the {ENUMERATION_BUDGET} budget"
        )
    return range(m)


def iter_all_matrices(ring: Ring, n: int):
    """Every n x n matrix over a small finite ring, in lexicographic order."""
    values = _enumerable_values(ring, n)
    for entries in itertools.product(values, repeat=n * n):
        yield Matrix(ring, tuple(entries[r * n : (r + 1) * n] for r in range(n)))


def universal_identity_by_enumeration(a: Matrix) -> bool:
    """Decide the for-every-B question by trying literally every B."""
    if not a.is_square:
        raise NotSquare(f"square matrix required, got {a.rows}x{a.cols}")
    for b in iter_all_matrices(a.ring, a.rows):
        if not verify_identity(a, b).is_zero():
            return False
    return True


@dataclass(frozen=True)
class EquivalenceReport:
    """Cross-classification of all n x n matrices over a finite ring.

    set_identity counts matrices satisfying the identity for every B;
    set_minors counts matrices with all 2x2 minors zero.  agree means the
    two classifications coincide matrix-by-matrix (so as sets, not merely
    as counts); mismatches lists up to 10 offenders in enumeration order.
    """

    ring: Ring
    n: int
    total: int
    set_identity: int
    set_minors: int
    agree: bool
    mismatches: tuple[Matrix, ...]


MISMATCH_CAP = 10


def exhaustive_characterization(
    ring: Ring,
    n: int,
    *,
    use_probes: bool = True,
    spot_check_every: int = 100,
) -> EquivalenceReport:
    """Enumerate every A over a small finite ring and cross-classify it.

    With use_probes (the default) the for-every-B side runs on the n^2 unit
    probes, with a full-B enumeration spot check every spot_check_every
    matrices; with use_probes=False every A gets the full-B loop.
    """
    if n < 2:
        raise TooSmall("exhaustive characterization needs n >= 2")
    total = 0
    ident_count = 0
    minors_count = 0
    mismatches: list[Matrix] = []
    for index, a in enumerate(iter_all_matrices(ring, n)):
        structured = check_vanishing_minors(a).structured
        if use_probes:
            holds = universal_identity_via_probes(a)
            if spot_check_every and index % spot_check_every == 0:
                if holds != universal_identity_by_enumeration(a):
                    raise RuntimeError(
                        f"probe decision disagrees with full enumeration at {a!r}"
                    )
        else:
            holds = universal_identity_by_enumeration(a)
        total += 1
        ident_count += holds
        minors_count += structured
        if holds != structured and len(mismatches) < MISMATCH_CAP:
            mismatches.append(a)
    return EquivalenceReport(
        ring=ring,
        n=n,
        total=total,
        set_identity=ident_count,
        set_minors=minors_count,
        agree=not mismatches and ident_count == minors_count,
        mismatches=tuple(mismatches),
    )
