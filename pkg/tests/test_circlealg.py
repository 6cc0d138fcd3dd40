"""The degenerate circular product: arc order, unit, associativity,
inverses, the semidirect splitting, the strip picture and the s-family."""

import random
from fractions import Fraction

import pytest

from brauerloop.circlealg import (
    ExactMatrix,
    StripWindow,
    cp_inv,
    cp_mul,
    cyc_ordered,
    cycle,
    from_semidirect,
    s_mul,
    s_scale,
    semidirect_mul,
    strip_embed,
    to_semidirect,
    upper_inverse,
)
from brauerloop.errors import NotInvertible, WindowTooSmall


def arc_points(i: int, k: int, n: int) -> list[int]:
    """Walk clockwise from i to k, endpoints included."""
    pts = [i]
    while pts[-1] != k:
        pts.append(pts[-1] % n + 1)
    return pts


def rand_matrix(n: int, rng: random.Random) -> ExactMatrix:
    return ExactMatrix.build(n, lambda i, j: rng.randint(-4, 4))


def rand_unit_upper(n: int, rng: random.Random) -> ExactMatrix:
    return ExactMatrix.build(
        n, lambda i, j: 1 if i == j else rng.randint(-3, 3) if i < j else 0)


def test_cyc_ordered_matches_arc_walk():
    for n in range(2, 7):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    assert cyc_ordered(i, j, k, n) == (j in arc_points(i, k, n))


def test_cyc_ordered_degenerate_arc():
    # for i == k the arc is the single point, not the full circle
    assert cyc_ordered(2, 2, 2, 5)
    assert not cyc_ordered(2, 3, 2, 5)


def test_product_two_by_two():
    p = ExactMatrix([[1, 2], [3, 4]])
    q = ExactMatrix([[5, 6], [7, 8]])
    got = cp_mul(p, q)
    # the (1,1) arc excludes j=2 and the (2,2) arc excludes j=1
    assert got == ExactMatrix([[5, 22], [43, 32]])


def test_identity_is_a_unit():
    rng = random.Random(3)
    for n in range(2, 7):
        m = rand_matrix(n, rng)
        eye = ExactMatrix.identity(n)
        assert cp_mul(eye, m) == m
        assert cp_mul(m, eye) == m


def test_upper_triangular_reduces_to_ordinary_product():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 6)
        p = rand_matrix(n, rng).upper_part()
        q = rand_matrix(n, rng).upper_part()
        assert cp_mul(p, q) == p @ q


def test_diagonal_is_multiplicative():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 6)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        got = cp_mul(p, q)
        for i in range(1, n + 1):
            assert got[i, i] == p[i, i] * q[i, i]


def test_associativity():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 6)
        p, q, r = (rand_matrix(n, rng) for _ in range(3))
        assert cp_mul(cp_mul(p, q), r) == cp_mul(p, cp_mul(q, r))


def test_upper_inverse():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(2, 5)
        r = rand_unit_upper(n, rng)
        rinv = upper_inverse(r)
        assert r @ rinv == ExactMatrix.identity(n)
        assert all(isinstance(v, int) for row in rinv.rows for v in row)
    half = upper_inverse(ExactMatrix([[2, 0], [0, 1]]))
    assert half[1, 1] == Fraction(1, 2)
    with pytest.raises(NotInvertible):
        upper_inverse(ExactMatrix([[0, 1], [0, 1]]))


def test_cp_inv_two_sided():
    rng = random.Random(17)
    eye_checked = 0
    for _ in range(80):
        n = rng.randint(2, 6)
        m = rand_matrix(n, rng)
        for i in range(1, n + 1):
            m.rows[i - 1][i - 1] = rng.choice([1, 1, 2, -1, 3])
        inv = cp_inv(m)
        eye = ExactMatrix.identity(n)
        assert cp_mul(m, inv) == eye
        assert cp_mul(inv, m) == eye
        eye_checked += 1
    assert eye_checked == 80
    with pytest.raises(NotInvertible):
        cp_inv(ExactMatrix([[0, 1], [2, 3]]))


def test_semidirect_splitting():
    rng = random.Random(19)
    for _ in range(100):
        n = rng.randint(2, 6)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        assert from_semidirect(*to_semidirect(p)) == p
        prod = semidirect_mul(to_semidirect(p), to_semidirect(q))
        assert from_semidirect(*prod) == cp_mul(p, q)


def test_semidirect_components():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 5)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        got = cp_mul(p, q)
        # the upper part multiplies on its own, ignoring the lower parts
        assert got.upper_part() == (p.upper_part() @ q.upper_part()).upper_part()


def test_strip_window_entries():
    m = ExactMatrix([[1, 2], [3, 4]])
    w = strip_embed(m)
    assert w.row_count == 6
    assert w.entry(1, 1) == 1 and w.entry(1, 2) == 2
    assert w.entry(3, 3) == 1 and w.entry(3, 4) == 2  # period two
    assert w.entry(4, 5) == 3
    with pytest.raises(WindowTooSmall):
        w.entry(7, 7)
    with pytest.raises(WindowTooSmall):
        w.entry(1, 3)  # outside the band
    with pytest.raises(WindowTooSmall):
        w.entry(2, 1)
    assert StripWindow(m, 2).row_count == 2


def test_strip_band_product_matches_circular_product():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(2, 6)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        wp, wq = strip_embed(p), strip_embed(q)
        prod = cp_mul(p, q)
        for i in range(1, 2 * n + 1):
            for d in range(n):
                want = prod[(i - 1) % n + 1, (i + d - 1) % n + 1]
                assert wp.band_product_entry(wq, i, i + d) == want


def test_s_family_limits():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(2, 6)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        assert s_mul(p, q, 0) == cp_mul(p, q)
        assert s_mul(p, q, 1) == p @ q


def test_s_family_conjugation():
    rng = random.Random(37)
    for _ in range(60):
        n = rng.randint(2, 5)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        s = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert s_scale(p, s) @ s_scale(q, s) == s_scale(s_mul(p, q, s), s)


def test_s_scale_literal():
    m = ExactMatrix([[1, 1], [1, 1]])
    got = s_scale(m, 3)
    # entry (i, j) picks up s^((j - i) mod n)
    assert got == ExactMatrix([[1, 3], [3, 1]])


def test_cycle():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert cycle(m) == ExactMatrix([[4, 3], [2, 1]])
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(2, 6)
        p, q = rand_matrix(n, rng), rand_matrix(n, rng)
        k = rng.randint(1, n)
        assert cycle(p, n) == p
        assert cycle(cycle(p, 1), k - 1) == cycle(p, k)
        # rotating labels is an automorphism of the circular product
        assert cycle(cp_mul(p, q), k) == cp_mul(cycle(p, k), cycle(q, k))
