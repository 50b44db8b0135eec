import random
from fractions import Fraction

from toricjac.linalg import Echelon, in_span, kernel, rank, reduce_vector, rref


def F(x):
    return Fraction(x)


def random_matrix(rng, nrows, ncols, den=3):
    return [[Fraction(rng.randint(-4, 4), rng.randint(1, den))
             for _ in range(ncols)] for _ in range(nrows)]


def test_rref_known_matrix():
    rows, pivots = rref([[F(2), F(4), F(-2)], [F(1), F(2), F(0)]], 3)
    assert pivots == (0, 2)
    assert rows == [(F(1), F(2), F(0)), (F(0), F(0), F(1))]


def test_rref_zero_and_identity():
    rows, pivots = rref([[F(0), F(0)], [F(0), F(0)]], 2)
    assert rows == [] and pivots == ()
    rows, pivots = rref([[F(0), F(3)], [F(5), F(0)]], 2)
    assert pivots == (0, 1)
    assert rows == [(F(1), F(0)), (F(0), F(1))]


def test_rank_simple():
    assert rank([[F(1), F(2)], [F(2), F(4)]], 2) == 1
    assert rank([], 4) == 0
    assert rank([[Fraction(1, 3), F(0)], [F(0), F(7)]], 2) == 2


def test_reduce_vector_membership():
    rows, pivots = rref([[F(1), F(1), F(0)], [F(0), F(1), F(1)]], 3)
    inside = [F(2), F(3), F(1)]          # 2*(r1) + 1*(r2) in the original span
    outside = [F(0), F(0), F(5)]
    assert not any(reduce_vector(rows, pivots, inside))
    assert any(reduce_vector(rows, pivots, outside))
    assert in_span(rows, pivots, inside)
    assert not in_span(rows, pivots, outside)


def test_kernel_annihilates_rows():
    rng = random.Random(7)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 6)
        mat = random_matrix(rng, nrows, ncols)
        ker, _ = kernel([row[:] for row in mat], ncols)
        assert len(ker) == ncols - rank([row[:] for row in mat], ncols)
        for v in ker:
            for row in mat:
                assert sum(a * b for a, b in zip(row, v)) == 0


def test_kernel_of_invertible_is_trivial():
    assert kernel([[F(2), F(1)], [F(1), F(1)]], 2) == ([], ())


def test_rref_idempotent_random():
    rng = random.Random(11)
    for _ in range(20):
        mat = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        rows, pivots = rref(mat, len(mat[0]))
        again, pivots2 = rref([row[:] for row in rows], len(mat[0]))
        assert again == rows and pivots2 == pivots


def test_echelon_insert_matches_batch_rank():
    rng = random.Random(3)
    for _ in range(20):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 6)
        mat = random_matrix(rng, nrows, ncols)
        ech = Echelon(ncols)
        inserted = 0
        for row in mat:
            before = ech.contains(row[:])
            grew = ech.insert(row[:])
            assert grew == (not before)
            inserted += grew
        assert inserted == rank([row[:] for row in mat], ncols)
        assert ech.rank == inserted
        # every original row now reduces to zero
        for row in mat:
            assert ech.contains(row[:])
