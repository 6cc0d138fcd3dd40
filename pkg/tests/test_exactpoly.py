"""Exact polynomial ring: ring axioms against the evaluation homomorphism,
fixed identities for the symmetrizing operators, serialization."""

import random
from fractions import Fraction

import pytest

from brauerloop.errors import InexactDivision, NotHomogeneous
from brauerloop.exactpoly import MultiPoly


def rand_poly(nz: int, rng: random.Random) -> MultiPoly:
    """Small random polynomial: a sum of products of random linear forms."""
    out = MultiPoly.zero(nz)
    for _ in range(rng.randint(1, 3)):
        term = MultiPoly.const(rng.randint(-3, 3), nz)
        for _ in range(rng.randint(0, 2)):
            term = term * MultiPoly.linear(
                nz, rng.randint(-2, 2),
                {i: rng.randint(-2, 2) for i in range(1, nz + 1)},
                Fraction(rng.randint(-2, 2), rng.randint(1, 3)))
        out = out + term
    return out


def rand_point(nz: int, rng: random.Random):
    a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    z = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(nz)]
    return a, z


def test_generators():
    a = MultiPoly.gen_a(2)
    z1 = MultiPoly.gen_z(2, 1)
    z2 = MultiPoly.gen_z(2, 2)
    p = (a + z1) * (a - z2)
    assert p.evaluate(3, [1, 2]) == 4
    assert p == a * a + z1 * a - a * z2 - z1 * z2
    with pytest.raises(ValueError):
        MultiPoly.gen_z(2, 3)


def test_linear_combines_coefficients():
    p = MultiPoly.linear(3, 2, {1: 1, 3: -1}, 5)
    assert p.evaluate(1, [10, 0, 4]) == 2 + 10 - 4 + 5
    # z_coeffs may repeat an index through the dict, absent ones are zero
    assert MultiPoly.linear(3) == 0


def test_equality_against_scalars():
    assert MultiPoly.const(Fraction(4, 2), 3) == 2
    assert MultiPoly.zero(2) == 0
    assert not MultiPoly.gen_a(2) == 1
    assert MultiPoly.one(2) != 0


def test_str_output():
    a = MultiPoly.gen_a(2)
    z1 = MultiPoly.gen_z(2, 1)
    assert str(MultiPoly.zero(2)) == "0"
    assert str(a * a - z1 * 3) == "A^2 - 3*z1"
    assert str(MultiPoly.const(-1, 2)) == "-1"


def test_ring_ops_match_evaluation():
    rng = random.Random(11)
    for _ in range(200):
        nz = rng.randint(1, 4)
        p = rand_poly(nz, rng)
        q = rand_poly(nz, rng)
        a, z = rand_point(nz, rng)
        pv, qv = p.evaluate(a, z), q.evaluate(a, z)
        assert (p + q).evaluate(a, z) == pv + qv
        assert (p - q).evaluate(a, z) == pv - qv
        assert (p * q).evaluate(a, z) == pv * qv
        assert (-p).evaluate(a, z) == -pv
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert (c + p).evaluate(a, z) == c + pv
        assert (c - p).evaluate(a, z) == c - pv
        assert (p * c).evaluate(a, z) == pv * c
        assert (c * p).evaluate(a, z) == c * pv


def test_pow():
    rng = random.Random(5)
    p = rand_poly(3, rng)
    assert p ** 0 == 1
    assert p ** 1 == p
    assert p ** 3 == p * p * p
    with pytest.raises(ValueError):
        p ** -1


def test_degrees():
    a = MultiPoly.gen_a(2)
    z1 = MultiPoly.gen_z(2, 1)
    p = a * a * z1
    assert p.total_degree() == 3
    assert p.homogeneous_degree() == 3
    assert MultiPoly.zero(2).total_degree() == 0
    assert MultiPoly.zero(2).homogeneous_degree() == 0
    with pytest.raises(NotHomogeneous):
        (p + a).homogeneous_degree()


def test_tau_swaps_neighbours():
    z = [MultiPoly.gen_z(3, i) for i in range(1, 4)]
    assert z[0].tau(1) == z[1]
    assert z[1].tau(1) == z[0]
    assert z[2].tau(1) == z[2]
    # the last index wraps around to z_1
    assert z[2].tau(3) == z[0]
    assert z[0].tau(3) == z[2]
    rng = random.Random(7)
    for _ in range(50):
        p = rand_poly(3, rng)
        i = rng.randint(1, 3)
        assert p.tau(i).tau(i) == p


def test_ddiff_basics():
    z1 = MultiPoly.gen_z(3, 1)
    z2 = MultiPoly.gen_z(3, 2)
    assert MultiPoly.const(5, 3).ddiff(1) == 0
    assert z1.ddiff(1) == 1
    assert z2.ddiff(1) == -1
    # symmetric polynomials are killed
    assert (z1 * z2).ddiff(1) == 0
    assert (z1 + z2).ddiff(1) == 0


def test_ddiff_leibniz():
    # d_i(pq) = d_i(p) q + tau_i(p) d_i(q)
    rng = random.Random(23)
    for _ in range(50):
        p = rand_poly(3, rng)
        q = rand_poly(3, rng)
        i = rng.randint(1, 3)
        assert (p * q).ddiff(i) == p.ddiff(i) * q + p.tau(i) * q.ddiff(i)


def test_theta_hand_case():
    # theta_1 (A - z1)(A + z2) = 4A^2 - (A + z1)(A - z2)
    a = MultiPoly.gen_a(2)
    z1 = MultiPoly.gen_z(2, 1)
    z2 = MultiPoly.gen_z(2, 2)
    got = ((a - z1) * (a + z2)).theta(1)
    assert got == a * a * 4 - (a + z1) * (a - z2)


def test_theta_preserves_homogeneous_degree():
    rng = random.Random(31)
    a = MultiPoly.gen_a(3)
    for _ in range(20):
        p = MultiPoly.one(3)
        for _ in range(rng.randint(1, 3)):
            p = p * (a + MultiPoly.gen_z(3, rng.randint(1, 3)) * rng.randint(-2, 2))
        i = rng.randint(1, 3)
        assert p.theta(i).homogeneous_degree() == p.homogeneous_degree()


def test_exact_divide():
    rng = random.Random(43)
    for _ in range(50):
        p = rand_poly(2, rng)
        q = rand_poly(2, rng)
        if q.is_zero():
            continue
        assert (p * q).exact_divide(q) == p
    a = MultiPoly.gen_a(2)
    z1 = MultiPoly.gen_z(2, 1)
    with pytest.raises(InexactDivision):
        (a * a + z1).exact_divide(z1)


def test_map_z():
    z1 = MultiPoly.gen_z(2, 1)
    z2 = MultiPoly.gen_z(2, 2)
    p = z1 * z1 + z2 * MultiPoly.gen_a(2)
    lifted = p.map_z(4, [3, 1])
    assert lifted == (MultiPoly.gen_z(4, 3) ** 2
                      + MultiPoly.gen_z(4, 1) * MultiPoly.gen_a(4))
    with pytest.raises(ValueError):
        p.map_z(4, [1, 1])
    with pytest.raises(ValueError):
        p.map_z(4, [1])
    with pytest.raises(ValueError):
        p.map_z(2, [1, 3])


def test_subs_z():
    rng = random.Random(59)
    for _ in range(60):
        nz = rng.randint(2, 4)
        p = rand_poly(nz, rng)
        i = rng.randint(1, nz)
        a, z = rand_point(nz, rng)
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        point = list(z)
        point[i - 1] = c
        assert p.subs_z(i, c).evaluate(a, z) == p.evaluate(a, point)
        q = rand_poly(nz, rng)
        point[i - 1] = q.evaluate(a, z)
        assert p.subs_z(i, q).evaluate(a, z) == p.evaluate(a, point)


def test_specialize_a():
    a = MultiPoly.gen_a(2)
    z1 = MultiPoly.gen_z(2, 1)
    p = a * a * 3 + a * z1 + 7
    q = p.specialize_a(2)
    assert q == z1 * 2 + 19
    assert q.evaluate(100, [1, 0]) == 21


def test_serialization_roundtrip():
    rng = random.Random(61)
    for _ in range(40):
        nz = rng.randint(1, 4)
        p = rand_poly(nz, rng)
        assert MultiPoly.from_obj(nz, p.to_obj()) == p
