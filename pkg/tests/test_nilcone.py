"""Cone membership, classification, representatives, and dimensions."""

import random
from fractions import Fraction

import pytest

from exocone import (
    ExoticVector,
    Matrix,
    alt_coords,
    as_endomorphism,
    cone_dim,
    exotic_jordan,
    invariant_polys,
    is_in_nilcone,
    marked_partitions,
    marked_invariant,
    orbit_dim,
    pfaffian,
    representative,
    symplectic_form,
    to_bipartition,
    weight_matrix,
    weight_vector,
)


def alt_values(n, x2):
    return [x2.rows[i - 1][j - 1] for i, j in alt_coords(n)]


def random_transvection(n, rng):
    size = 2 * n
    J = symplectic_form(n)
    u = [Fraction(rng.randint(-2, 2)) for _ in range(size)]
    Ju = J.apply(u)
    c = Fraction(rng.randint(1, 3))
    rows = [
        [
            (Fraction(1) if i == j else Fraction(0)) + c * u[i] * Ju[j]
            for j in range(size)
        ]
        for i in range(size)
    ]
    return Matrix(rows)


def test_symplectic_form():
    for n in (1, 2, 3, 4):
        J = symplectic_form(n)
        assert J @ J == -1 * Matrix.identity(2 * n)
        assert J.transpose() == -1 * J
    # Pf(J) alternates in sign with period four
    assert [pfaffian(symplectic_form(n)) for n in (1, 2, 3, 4)] == [
        -1,
        -1,
        1,
        1,
    ]


def test_alt_coords():
    assert alt_coords(1) == ((1, 2),)
    assert alt_coords(2) == (
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
    )


def test_invariant_polys_frozen():
    p1 = invariant_polys(1)
    assert len(p1) == 1
    assert p1[0].text("x") == "x1"
    p2 = invariant_polys(2)
    assert [f.text("x") for f in p2] == [
        "x2 + x5",
        "-x1*x6 + x2*x5 - x3*x4",
    ]


def test_invariant_polys_grading():
    for n in (1, 2, 3):
        polys = invariant_polys(n)
        assert len(polys) == n
        for i, f in enumerate(polys, start=1):
            assert f.is_homogeneous()
            assert f.degree() == i


def test_invariant_polys_are_symplectic_invariants():
    rng = random.Random(3)
    for n in (1, 2):
        polys = invariant_polys(n)
        for _ in range(5):
            ent = {}
            for i, j in alt_coords(n):
                c = Fraction(rng.randint(-4, 4))
                ent[(i - 1, j - 1)] = c
                ent[(j - 1, i - 1)] = -c
            x2 = Matrix.from_entries(2 * n, 2 * n, ent)
            t = random_transvection(n, rng)
            moved = t @ x2 @ t.transpose()
            for f in polys:
                assert f.evaluate(alt_values(n, x2)) == f.evaluate(
                    alt_values(n, moved)
                )


def test_membership():
    assert is_in_nilcone(ExoticVector.zero(2))
    for n in range(4):
        for mp in marked_partitions(n):
            assert is_in_nilcone(representative(mp))
    # x2 = J has invertible endomorphism, so it cannot be in the cone
    not_nil = ExoticVector(2, (0,) * 4, symplectic_form(2))
    assert not is_in_nilcone(not_nil)


def test_representative_frozen():
    from exocone import MarkedPartition

    v = representative(MarkedPartition((2,), (1,)))
    assert v.x1 == (1, 0, 0, 0)
    assert v.x2 == Matrix.from_entries(4, 4, {(0, 3): 1, (3, 0): -1})
    w = representative(MarkedPartition((2,), (2,)))
    assert w.x1 == (0, 1, 0, 0)
    assert w.x2 == v.x2
    u = representative(MarkedPartition((1, 1), (0, 1)))
    assert u.x1 == (0, 1, 0, 0)
    assert u.x2 == Matrix.zeros(4, 4)


def test_exotic_jordan():
    for n in range(1, 5):
        for mp in marked_partitions(n):
            assert exotic_jordan(representative(mp)) == mp.lam
    with pytest.raises(ValueError):
        exotic_jordan(ExoticVector(1, (0, 0), symplectic_form(1)))


def test_marked_invariant_round_trip():
    for n in range(4):
        for mp in marked_partitions(n):
            assert marked_invariant(representative(mp)) == mp


def test_marked_invariant_rejects_non_members():
    with pytest.raises(ValueError):
        marked_invariant(ExoticVector(2, (0,) * 4, symplectic_form(2)))


def test_marked_invariant_constant_on_transvection_orbits():
    rng = random.Random(7)
    for n in (1, 2, 3):
        J = symplectic_form(n)
        for _ in range(3):
            t = random_transvection(n, rng)
            assert t.transpose() @ J @ t == J
            for mp in marked_partitions(n):
                v = representative(mp)
                moved = ExoticVector(
                    n, t.apply(v.x1), t @ v.x2 @ t.transpose()
                )
                assert marked_invariant(moved) == mp


def test_endomorphism_conjugation_covariance():
    # the group moves x2 by t x2 t^T, and x2 J transforms by conjugation:
    # (t x2 t^T) J t = t (x2 J) for symplectic t
    rng = random.Random(5)
    for n in (1, 2):
        J = symplectic_form(n)
        for _ in range(3):
            t = random_transvection(n, rng)
            for mp in marked_partitions(n):
                v = representative(mp)
                moved = t @ v.x2 @ t.transpose()
                assert moved @ J @ t == t @ (v.x2 @ J)


def test_orbit_dims_frozen_rank_two():
    dims = [orbit_dim(mp) for mp in marked_partitions(2)]
    assert dims == [8, 6, 4, 4, 0]
    assert cone_dim(2) == 8


def test_orbit_dim_closed_form():
    # independent route: 2(n^2 - sum of squared transpose parts) + 2|mu|
    for n in range(8):
        for mp in marked_partitions(n):
            tl = mp.lam.transpose()
            mu = to_bipartition(mp).mu
            expect = 2 * (n * n - sum(c * c for c in tl)) + 2 * mu.size
            assert orbit_dim(mp) == expect


def test_dense_orbit_has_cone_dimension():
    for n in range(1, 7):
        dims = [orbit_dim(mp) for mp in marked_partitions(n)]
        assert max(dims) == cone_dim(n) == 2 * n * n
        assert min(dims) == 0


def test_exotic_vector_json_round_trip():
    from exocone import MarkedPartition

    v = representative(MarkedPartition((2, 1), (1, 0)))
    data = v.to_json()
    w = ExoticVector.from_json(data)
    assert w == v
    assert data["n"] == 3
    assert all(isinstance(c, str) for c in data["x1"])


def test_exotic_vector_validation():
    with pytest.raises(ValueError):
        ExoticVector(1, (0,), Matrix.zeros(2, 2))  # x1 length
    with pytest.raises(ValueError):
        ExoticVector(1, (0, 0), Matrix([[1, 0], [0, 0]]))  # diagonal
    with pytest.raises(ValueError):
        ExoticVector(1, (0, 0), Matrix([[0, 1], [1, 0]]))  # not alternating


def test_weight_vector_and_matrix():
    assert weight_vector(2, (1, 0)) == (1, 0, 0, 0)
    assert weight_vector(2, (0, -1)) == (0, 0, 0, 1)
    with pytest.raises(ValueError):
        weight_vector(2, (1, 1))
    m = weight_matrix(2, (1, -1))
    assert m.transpose() == -1 * m
    with pytest.raises(ValueError):
        weight_matrix(2, (2, 0))
