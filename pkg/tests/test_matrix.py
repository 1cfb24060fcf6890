from __future__ import annotations

import pytest

from immanantal import IntMatrix


def test_construction_and_validation():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.k == 2
    assert m[0, 1] == 2
    assert IntMatrix.from_rows([]).k == 0
    with pytest.raises(ValueError):
        IntMatrix(((1, 2),))  # ragged
    with pytest.raises(TypeError):
        IntMatrix(((1.5,),))


def test_identity_zero_diagonal_constructors():
    assert IntMatrix.identity(3).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert IntMatrix.zeros(2).rows == ((0, 0), (0, 0))
    assert IntMatrix.diagonal([4, 5]).rows == ((4, 0), (0, 5))
    assert IntMatrix.identity(0).k == 0


def test_minor_deletion():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.minor((0,), (0,)).rows == ((5, 6), (8, 9))
    assert m.minor((0,), (2,)).rows == ((4, 5), (7, 8))
    assert m.minor((0, 2), (0, 2)).rows == ((5,),)
    assert m.principal_minor(1).rows == ((1, 3), (7, 9))
    assert m.minor((0, 1, 2), (0, 1, 2)).k == 0
    with pytest.raises(IndexError):
        m.minor((3,), (3,))


def test_transpose_and_symmetry():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.transpose().rows == ((1, 3), (2, 4))
    assert not m.is_symmetric()
    assert IntMatrix.from_rows([[1, 7], [7, 2]]).is_symmetric()
    assert IntMatrix.from_rows([]).is_symmetric()


def test_with_entry_is_persistent():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    m2 = m.with_entry(0, 1, 0)
    assert m2.rows == ((1, 0), (3, 4))
    assert m.rows == ((1, 2), (3, 4))
    assert m.with_entry(0, 1, 2) is m  # no-op returns the same value


def test_arithmetic():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.identity(2)
    assert (a + b).rows == ((2, 2), (3, 5))
    assert (a - b).rows == ((0, 2), (3, 3))
    assert (2 * a).rows == ((2, 4), (6, 8))
    assert (-a).rows == ((-1, -2), (-3, -4))
    assert a.trace() == 5
    assert a.diagonal_entries() == (1, 4)
    assert a.max_abs_entry() == 4
    with pytest.raises(ValueError):
        a + IntMatrix.identity(3)
