import pytest
from gmpy2 import mpq

from skewverify.linalg import SingularMatrixError, solve


def test_solves_rational_system():
    m = [[mpq(2), mpq(1)], [mpq(1), mpq(3)]]
    x = solve(m, [mpq(3), mpq(5)])
    assert x == [mpq(4, 5), mpq(7, 5)]


def test_needs_row_swap():
    m = [[mpq(0), mpq(1)], [mpq(1), mpq(0)]]
    assert solve(m, [mpq(2), mpq(3)]) == [mpq(3), mpq(2)]


def test_singular_raises():
    with pytest.raises(SingularMatrixError):
        solve([[mpq(1), mpq(2)], [mpq(2), mpq(4)]], [mpq(1), mpq(1)])


def test_non_square_rejected():
    with pytest.raises(ValueError):
        solve([[mpq(1), mpq(2)]], [mpq(1)])
