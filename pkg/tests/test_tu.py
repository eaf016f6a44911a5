import random
from fractions import Fraction

import pytest

from tumat import (
    GF2,
    RATIONAL,
    ExactMatrix,
    ShapeError,
    SizeGuardError,
    TuVerdict,
    find_tu_signing,
    find_tu_signing_bruteforce,
    is_signing_of,
    is_totally_unimodular,
    is_tu_signing_of,
    scale_rows_cols,
)
from tumat.fixtures import fano_b, incidence_matrix, network_example

from helpers import naive_tu_verdict, random_tu_matrix, support_gf2


def test_known_verdicts():
    assert is_totally_unimodular(ExactMatrix.identity(4, RATIONAL)).is_tu
    assert is_totally_unimodular(network_example().body).is_tu
    v = is_totally_unimodular(ExactMatrix(RATIONAL, [[1, 1], [-1, 1]]))
    assert not v.is_tu
    assert v.witness == ((0, 1), (0, 1), Fraction(2))


def test_entry_scan_short_circuits():
    v = is_totally_unimodular(ExactMatrix(RATIONAL, [[0, 2], [3, 0]]))
    assert v.witness == ((0,), (1,), Fraction(2))
    # a fractional entry is already a violation on its own
    v = is_totally_unimodular(ExactMatrix(RATIONAL, [["1/2"]]))
    assert v.witness == ((0,), (0,), Fraction(1, 2))
    # entry scan runs before the size guard
    big = ExactMatrix(RATIONAL, [[2 if i == j == 0 else 0 for j in range(9)] for i in range(9)])
    assert is_totally_unimodular(big).witness == ((0,), (0,), Fraction(2))


def test_size_guard():
    big = ExactMatrix.identity(9, RATIONAL)
    with pytest.raises(SizeGuardError):
        is_totally_unimodular(big)
    assert is_totally_unimodular(big, force=True).is_tu
    assert is_totally_unimodular(big, limit=9).is_tu
    with pytest.raises(SizeGuardError):
        is_totally_unimodular(network_example().body, limit=1)


def test_rejects_gf2_input():
    with pytest.raises(ShapeError):
        is_totally_unimodular(ExactMatrix(GF2, [[1]]))


def test_matches_naive_oracle_including_witness():
    rng = random.Random(31)
    pool = [-1, 0, 1]
    for _ in range(80):
        m = rng.randrange(1, 5)
        n = rng.randrange(1, 6)
        a = ExactMatrix(
            RATIONAL, [[rng.choice(pool) for _ in range(n)] for _ in range(m)]
        )
        expected = naive_tu_verdict(a)
        got = is_totally_unimodular(a)
        if expected is None:
            assert got.is_tu
        else:
            assert not got.is_tu and got.witness == expected


def test_verdict_validation():
    with pytest.raises(ShapeError):
        TuVerdict(True, ((0,), (0,), Fraction(2)))
    with pytest.raises(ShapeError):
        TuVerdict(False, None)
    with pytest.raises(ShapeError):
        TuVerdict(False, ((0, 1), (0,), Fraction(2)))
    with pytest.raises(ShapeError):
        TuVerdict(False, ((0,), (0,), Fraction(1)))
    TuVerdict(False, ((0,), (0,), Fraction(1, 2)))  # fractional witness is legal
    TuVerdict(True)


def test_is_signing_of():
    u = ExactMatrix(GF2, [[1, 0], [1, 1]])
    assert is_signing_of(ExactMatrix(RATIONAL, [[-1, 0], [1, 1]]), u)
    assert not is_signing_of(ExactMatrix(RATIONAL, [[1, 0], [0, 1]]), u)
    assert not is_signing_of(ExactMatrix(RATIONAL, [[2, 0], [1, 1]]), u)
    with pytest.raises(ShapeError):
        is_signing_of(ExactMatrix(RATIONAL, [[1]]), u)
    with pytest.raises(ShapeError):
        is_signing_of(u, u)


def test_is_tu_signing_of():
    u = ExactMatrix(GF2, [[1, 1], [1, 1]])
    assert is_tu_signing_of(ExactMatrix(RATIONAL, [[1, 1], [-1, 1]]) , u) is False
    assert is_tu_signing_of(ExactMatrix(RATIONAL, [[1, 1], [1, 1]]), u)


def test_scale_rows_cols():
    a = ExactMatrix(RATIONAL, [[1, -1], [0, 1]])
    scaled = scale_rows_cols(a, [1, -1], [-1, 1])
    assert scaled.to_lists() == [[-1, -1], [0, -1]]
    with pytest.raises(ShapeError):
        scale_rows_cols(a, [1], [1, 1])
    with pytest.raises(ShapeError):
        scale_rows_cols(a, [1, 2], [1, 1])
    with pytest.raises(ShapeError):
        scale_rows_cols(ExactMatrix(GF2, [[1]]), [1], [1])


def test_scaling_preserves_tu():
    rng = random.Random(37)
    for _ in range(30):
        a = random_tu_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5))
        assert is_totally_unimodular(a).is_tu
        signs_r = [rng.choice((1, -1)) for _ in range(a.n_rows)]
        signs_c = [rng.choice((1, -1)) for _ in range(a.n_cols)]
        assert is_totally_unimodular(scale_rows_cols(a, signs_r, signs_c)).is_tu


def test_find_tu_signing_identity_pattern():
    u = ExactMatrix(GF2, [[1, 0], [0, 1]])
    s = find_tu_signing(u)
    assert s == ExactMatrix.identity(2, RATIONAL)


def test_find_tu_signing_trivial_cases():
    z = ExactMatrix(GF2, [[0, 0], [0, 0]])
    assert find_tu_signing(z) == ExactMatrix.zeros(2, 2, RATIONAL)
    e = ExactMatrix(GF2, [], n_cols=2)
    assert find_tu_signing(e) == ExactMatrix(RATIONAL, [], n_cols=2)
    with pytest.raises(ShapeError):
        find_tu_signing(ExactMatrix(RATIONAL, [[1]]))


def test_fano_has_no_signing_both_searches():
    u = fano_b().body
    assert find_tu_signing(u) is None
    assert find_tu_signing_bruteforce(u) is None


def test_searches_agree_on_random_supports():
    rng = random.Random(41)
    for _ in range(25):
        m = rng.randrange(1, 4)
        n = rng.randrange(1, 5)
        rows = [[1 if rng.random() < 0.6 else 0 for _ in range(n)] for _ in range(m)]
        u = ExactMatrix(GF2, rows, n_cols=n)
        fast = find_tu_signing(u)
        slow = find_tu_signing_bruteforce(u)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert is_tu_signing_of(fast, u)
            assert is_tu_signing_of(slow, u)


def test_signing_of_tu_support_recovers_a_witness():
    rng = random.Random(43)
    for _ in range(15):
        a = random_tu_matrix(rng, rng.randrange(1, 4), rng.randrange(1, 4))
        u = support_gf2(a)
        s = find_tu_signing(u)
        assert s is not None and is_tu_signing_of(s, u)


def test_signing_guards():
    ones6 = ExactMatrix(GF2, [[1] * 6 for _ in range(6)])
    with pytest.raises(SizeGuardError):
        find_tu_signing(ones6)  # 25 free signs > 20
    with pytest.raises(SizeGuardError):
        find_tu_signing(ExactMatrix(GF2, [[1, 1], [1, 1]]), max_free_signs=0)
    with pytest.raises(SizeGuardError):
        find_tu_signing_bruteforce(ExactMatrix(GF2, [[1, 1], [1, 1]]), max_nonzeros=3)
    assert (
        find_tu_signing_bruteforce(ExactMatrix(GF2, [[1, 1], [1, 1]]), max_nonzeros=3, force=True)
        is not None
    )


def test_incidence_matrices_are_tu():
    rng = random.Random(47)
    for _ in range(10):
        n = rng.randrange(2, 6)
        arcs = []
        for _ in range(rng.randrange(1, 8)):
            t = rng.randrange(n)
            h = rng.randrange(n - 1)
            arcs.append((t, h + 1 if h >= t else h))
        a = incidence_matrix(n, arcs)
        assert is_totally_unimodular(a).is_tu
