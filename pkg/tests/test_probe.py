import itertools
import random

import pytest
from hypothesis import given, settings

from minortrace import (
    Matrix,
    MinorIndex,
    ModularRing,
    NotSquare,
    RingMismatch,
    ShapeMismatch,
    TooSmall,
    aba_via_blocks,
    check_vanishing_minors,
    induction_equalities,
    matrix_unit,
    naive_aba,
    probe_converse,
    random_matrix,
)
from support import INT, MOD4, matrices, rand_structured


def mat(rows, ring=INT):
    return Matrix.from_rows(ring, rows)


def test_probe_identity_matrix():
    report = probe_converse(Matrix.identity(INT, 2))
    assert not report.structured
    w = report.witness
    assert w.minor == MinorIndex(0, 1, 0, 1)
    assert w.minor_value.value == 1
    # probe B has its 1 at (l, j) = (1, 1); sides differ at (0, 0)
    assert (w.unit_row, w.unit_col) == (1, 1)
    assert (w.entry_row, w.entry_col) == (0, 0)
    assert w.lhs.value == 0
    assert w.rhs.value == 1


def test_probe_structured_matrix():
    assert probe_converse(mat([[3, 4], [6, 8]])).structured


def test_probe_mod2_example():
    ring = ModularRing(2)
    report = probe_converse(Matrix.from_rows(ring, [[1, 1], [1, 0]]))
    assert not report.structured
    assert report.witness.minor_value.value == 1  # 1*0 - 1*1 = 1 mod 2


def test_probe_guards():
    with pytest.raises(TooSmall):
        probe_converse(mat([[5]]))
    with pytest.raises(NotSquare):
        probe_converse(mat([[1, 2]]))


def _recheck_witness(a, w):
    """Materialize the probe B and compare full matrices (independent path)."""
    e = matrix_unit(a.ring, a.rows, w.unit_row, w.unit_col)
    lhs_m = naive_aba(a, e)
    rhs_m = a.scale((a @ e).trace())
    assert lhs_m != rhs_m
    assert lhs_m.entry(w.entry_row, w.entry_col) == w.lhs
    assert rhs_m.entry(w.entry_row, w.entry_col) == w.rhs
    assert w.lhs != w.rhs
    # the sign pinned by the scan order: lhs - rhs = -(witnessed minor)
    assert w.lhs - w.rhs == -w.minor_value
    assert a.minor2(w.minor) == w.minor_value


def test_probe_soundness_random(ring):
    rng = random.Random(67)
    for _ in range(300):
        n = rng.randint(2, 5)
        a = random_matrix(rng, ring, n, n)
        report = probe_converse(a)
        assert report.structured == check_vanishing_minors(a).structured
        if not report.structured:
            _recheck_witness(a, report.witness)


def test_probe_completeness_mod2_n2_exhaustive():
    ring = ModularRing(2)
    for entries in itertools.product(range(2), repeat=4):
        a = Matrix.from_rows(ring, [entries[:2], entries[2:]])
        report = probe_converse(a)
        assert report.structured == check_vanishing_minors(a).structured
        if not report.structured:
            _recheck_witness(a, report.witness)


def test_induction_residuals_structured_example():
    a, b = mat([[3, 4], [6, 8]]), mat([[1, 2], [0, 1]])
    res = induction_equalities(a, b)
    assert res.all_zero()
    # the scalar equality by hand: a1 Bc a2 = 6*1*4 = 24 = (3*1)*8 = Tr(Ac Bc) ann
    assert res.r4.value == 0


def test_induction_residuals_identity_violation():
    res = induction_equalities(Matrix.identity(INT, 2), Matrix.identity(INT, 2))
    assert res.r4.value == -1
    assert not res.all_zero()


def test_induction_residuals_zero_matrix():
    z = Matrix.zero(INT, 3, 3)
    assert induction_equalities(z, Matrix.identity(INT, 3)).all_zero()


def test_induction_guards():
    with pytest.raises(TooSmall):
        induction_equalities(mat([[1]]), mat([[1]]))
    with pytest.raises(ShapeMismatch):
        induction_equalities(Matrix.identity(INT, 2), Matrix.identity(INT, 3))
    with pytest.raises(RingMismatch):
        induction_equalities(Matrix.identity(INT, 2), Matrix.identity(MOD4, 2))


def test_induction_residuals_vanish_on_structured(ring):
    rng = random.Random(71)
    for _ in range(1_000):
        n = rng.randint(2, 6)
        a = rand_structured(rng, ring, n)
        b = random_matrix(rng, ring, n, n)
        assert induction_equalities(a, b).all_zero()


def test_residual_shapes():
    rng = random.Random(73)
    a = random_matrix(rng, INT, 5, 5)
    b = random_matrix(rng, INT, 5, 5)
    res = induction_equalities(a, b)
    assert (res.r1.rows, res.r1.cols) == (4, 4)
    assert (res.r2.rows, res.r2.cols) == (4, 1)
    assert (res.r3.rows, res.r3.cols) == (1, 4)


@given(data=matrices(MOD4, min_n=2, max_n=5), data2=matrices(MOD4, min_n=2, max_n=5))
@settings(max_examples=150, deadline=None)
def test_block_product_is_unconditional(data, data2):
    a, b = data, data2
    if a.rows != b.rows:
        n = min(a.rows, b.rows)
        a = Matrix(a.ring, tuple(r[:n] for r in a.data[:n]))
        b = Matrix(b.ring, tuple(r[:n] for r in b.data[:n]))
    assert aba_via_blocks(a, b) == naive_aba(a, b)


def test_block_product_unrestricted_bulk(ring):
    rng = random.Random(79)
    for _ in range(500):
        n = rng.randint(2, 6)
        a = random_matrix(rng, ring, n, n)
        b = random_matrix(rng, ring, n, n)
        assert aba_via_blocks(a, b) == naive_aba(a, b)
